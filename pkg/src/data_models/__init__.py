"""
Data models: signal containers (dataclasses) and per-track records (Pydantic).
"""

from src.data_models.models import (
    AudioBuffer,
    FrameSeries,
    BeatTrack,
    PitchTrack,
    NoteEvent,
    Timeline,
    CueId,
    CUE_ORDER,
    CUE_UNITS,
    INVERTED_CUES,
    CueVector,
    CalibrationMetadata,
    CueGrid,
    Calibration,
    CALIBRATION_SCHEMA,
    GRID_POINTS,
    MIN_BENCHMARK_SAMPLES,
    RankVector,
    Emotion,
    EMOTION_ORDER,
    Emovector,
    EmovectorRecord,
    EmotionSummary,
    EmotionStats,
    EmotionComparison,
    CueProfileEntry,
    ComparisonReport,
    FileOutcome,
)

__all__ = [
    "AudioBuffer",
    "FrameSeries",
    "BeatTrack",
    "PitchTrack",
    "NoteEvent",
    "Timeline",
    "CueId",
    "CUE_ORDER",
    "CUE_UNITS",
    "INVERTED_CUES",
    "CueVector",
    "CalibrationMetadata",
    "CueGrid",
    "Calibration",
    "CALIBRATION_SCHEMA",
    "GRID_POINTS",
    "MIN_BENCHMARK_SAMPLES",
    "RankVector",
    "Emotion",
    "EMOTION_ORDER",
    "Emovector",
    "EmovectorRecord",
    "EmotionSummary",
    "EmotionStats",
    "EmotionComparison",
    "CueProfileEntry",
    "ComparisonReport",
    "FileOutcome",
]
