"""
Test suite for the emovector toolkit.
"""
