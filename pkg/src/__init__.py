"""
Emovector toolkit

Batch audio analysis that measures emotion-related acoustic cues in music,
calibrates them against a benchmark corpus, scores five emotion dimensions per
track and compares two corpora emotion by emotion.
"""

__version__ = "0.1.0"
__author__ = "Emovector Toolkit Developers"

# Package-level imports for convenience
from src.data_models import (
    AudioBuffer,
    CueId,
    CueVector,
    Calibration,
    RankVector,
    Emotion,
    Emovector,
)

__all__ = [
    "AudioBuffer",
    "CueId",
    "CueVector",
    "Calibration",
    "RankVector",
    "Emotion",
    "Emovector",
]
