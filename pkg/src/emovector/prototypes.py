"""
Emotion prototypes: target percentile rank per cue for each emotion.

Values are in {0, 0.25, 0.5, 0.75, 1}; ``None`` marks a cue that does not
characterise the emotion.
"""

from types import MappingProxyType
from typing import Mapping, Optional

from src.data_models.models import CueId, Emotion

PrototypeRow = Mapping[CueId, Optional[float]]


def _row(
    tempo: Optional[float],
    sound_level: Optional[float],
    sound_level_variability: Optional[float],
    high_frequency_energy: Optional[float],
    pitch_level: Optional[float],
    pitch_variability: Optional[float],
    tone_attack_speed: Optional[float],
    microstructural_irregularity: Optional[float],
) -> PrototypeRow:
    return MappingProxyType({
        CueId.TEMPO: tempo,
        CueId.SOUND_LEVEL: sound_level,
        CueId.SOUND_LEVEL_VARIABILITY: sound_level_variability,
        CueId.HIGH_FREQUENCY_ENERGY: high_frequency_energy,
        CueId.PITCH_LEVEL: pitch_level,
        CueId.PITCH_VARIABILITY: pitch_variability,
        CueId.TONE_ATTACK_SPEED: tone_attack_speed,
        CueId.MICROSTRUCTURAL_IRREGULARITY: microstructural_irregularity,
    })


PROTOTYPE_TABLE: Mapping[Emotion, PrototypeRow] = MappingProxyType({
    Emotion.ANGER: _row(1, 1, 1, 1, 1, 1, 1, 0.5),
    Emotion.FEAR: _row(1, 0, 1, 0, 1, 0, None, 1),
    Emotion.HAPPINESS: _row(1, 0.75, None, 0.5, 1, 1, 1, 0.25),
    Emotion.SADNESS: _row(0, 0, 0, 0, 0, 0, 0, 0.5),
    Emotion.TENDERNESS: _row(0, 0, 0, 0, 0, 0, 0, 0),
})


def applicable_cues(emotion: Emotion, table: Mapping[Emotion, PrototypeRow] = PROTOTYPE_TABLE) -> int:
    """Number of cues with a prototype value for ``emotion``."""
    return sum(1 for value in table[emotion].values() if value is not None)
