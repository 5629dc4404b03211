"""Command-line front end: calibrate, extract, analyze, compare, render-midi."""

from src.cli.config import RunConfig
from src.cli.main import build_parser, main

__all__ = ['RunConfig', 'build_parser', 'main']
