"""Emotion prototypes, scoring and the emovector CSV."""

from src.emovector.prototypes import PROTOTYPE_TABLE, applicable_cues
from src.emovector.scorer import EmotionScorer, check_band, score_emotions
from src.emovector.writer import (
    EMOVECTOR_COLUMNS,
    emovector_row,
    read_emovector_csv,
    render_emovector_csv,
    write_emovector_csv,
)

__all__ = [
    'PROTOTYPE_TABLE',
    'applicable_cues',
    'EmotionScorer',
    'check_band',
    'score_emotions',
    'EMOVECTOR_COLUMNS',
    'emovector_row',
    'read_emovector_csv',
    'render_emovector_csv',
    'write_emovector_csv',
]
