"""
Emotion scoring: count the cues whose rank sits within a band of the prototype.
"""

from typing import Dict, Mapping

from src.data_models.models import CUE_ORDER, EMOTION_ORDER, Emotion, Emovector, RankVector
from src.emovector.prototypes import PROTOTYPE_TABLE, PrototypeRow
from src.utils.error_handler import InvalidBand
from src.utils.settings import DEFAULT_CONFIG

# Absorbs float error in |rank - prototype| at the band edge
BAND_EPSILON = 1e-9


def check_band(band: float) -> float:
    """Return ``band`` if it lies in (0, 0.5], else raise InvalidBand."""
    if not (0.0 < band <= 0.5):
        raise InvalidBand(f"band must be in (0, 0.5], got {band}")
    return band


class EmotionScorer:
    """
    Score rank vectors against the emotion prototypes.

    For each emotion, the score counts cues with a prototype value and a present
    rank where |rank - prototype| <= band; coverage counts the cues that were
    scorable at all.
    """

    def __init__(
        self,
        band: float = DEFAULT_CONFIG.band,
        table: Mapping[Emotion, PrototypeRow] = PROTOTYPE_TABLE,
    ):
        """
        Initialize scorer.

        Args:
            band: Match half-width in rank units, (0, 0.5]
            table: Prototype values per emotion and cue
        """
        self.band = check_band(band)
        self.table = table

    def score(self, ranks: RankVector) -> Emovector:
        scores: Dict[Emotion, int] = {}
        coverage: Dict[Emotion, int] = {}
        for emotion in EMOTION_ORDER:
            row = self.table[emotion]
            matched = covered = 0
            for cue in CUE_ORDER:
                prototype = row.get(cue)
                rank = ranks.get(cue)
                if prototype is None or rank is None:
                    continue
                covered += 1
                if abs(rank - prototype) <= self.band + BAND_EPSILON:
                    matched += 1
            scores[emotion] = matched
            coverage[emotion] = covered
        return Emovector(scores=scores, coverage=coverage)


def score_emotions(
    ranks: RankVector,
    table: Mapping[Emotion, PrototypeRow] = PROTOTYPE_TABLE,
    band: float = DEFAULT_CONFIG.band,
) -> Emovector:
    """
    Convenience function to score one rank vector.

    Args:
        ranks: Polarity-adjusted percentile ranks
        table: Prototype table
        band: Match half-width

    Returns:
        Emovector of match counts and coverages
    """
    return EmotionScorer(band, table).score(ranks)
