"""
Corpus statistics: per-emotion summaries and two-corpus comparison.

Scores are small bounded integers, so corpora are compared with a two-sided
Mann-Whitney U test (normal approximation, tie-corrected variance) rather than a
t-test. Comparisons where either corpus has fewer than 4 tracks are flagged as
underpowered.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import mannwhitneyu

from src.data_models.models import (
    CUE_ORDER,
    EMOTION_ORDER,
    ComparisonReport,
    CueId,
    CueProfileEntry,
    Emotion,
    EmotionComparison,
    EmotionStats,
    EmotionSummary,
    Emovector,
    EmovectorRecord,
)
from src.utils.error_handler import EmptyCorpus

MIN_POWERED_N = 4
TIE_TOLERANCE = 1e-12


def summarize(emovectors: Sequence[Emovector], label: str = "A") -> EmotionStats:
    """
    Per-emotion n, mean and sample standard deviation.

    Args:
        emovectors: One vector per track
        label: Corpus label carried into the report

    Returns:
        EmotionStats; sd is absent when the corpus has a single track

    Raises:
        EmptyCorpus: No vectors
    """
    if not emovectors:
        raise EmptyCorpus(f"corpus {label} has no emovectors")
    per_emotion: Dict[Emotion, EmotionSummary] = {}
    for emotion in EMOTION_ORDER:
        scores = np.array([v.score(emotion) for v in emovectors], dtype=np.float64)
        sd = float(np.std(scores, ddof=1)) if scores.size >= 2 else None
        per_emotion[emotion] = EmotionSummary(n=int(scores.size), mean=float(scores.mean()), sd=sd)
    return EmotionStats(label=label, per_emotion=per_emotion)


def mann_whitney(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float]:
    """
    Mann-Whitney U of ``x`` against ``y`` and its two-sided p-value.

    U counts pairs with x > y plus half the ties. The p-value comes from the normal
    approximation with tie-corrected variance and continuity correction; it is 1
    when every value is tied and never reported as exactly 0.

    Returns:
        (U, p)
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size == 0 or y.size == 0:
        raise EmptyCorpus("Mann-Whitney U needs two non-empty samples")
    pooled = np.concatenate([x, y])
    if np.all(pooled == pooled[0]):
        return x.size * y.size / 2.0, 1.0
    result = mannwhitneyu(x, y, alternative="two-sided", method="asymptotic")
    p = float(np.clip(result.pvalue, np.finfo(np.float64).tiny, 1.0))
    return float(result.statistic), p


def _direction(difference: float) -> str:
    if abs(difference) <= TIE_TOLERANCE:
        return "tie"
    return "A>B" if difference > 0 else "A<B"


def compare_scores(a: Sequence[float], b: Sequence[float]) -> EmotionComparison:
    """Mean difference, U, p and direction for two samples of scores."""
    u, p = mann_whitney(a, b)
    difference = float(np.mean(a) - np.mean(b))
    return EmotionComparison(
        mean_difference=0.0 if abs(difference) <= TIE_TOLERANCE else difference,
        u_statistic=u,
        p_value=p,
        direction=_direction(difference),
        underpowered=min(len(a), len(b)) < MIN_POWERED_N,
    )


def cue_profile(
    corpus_a: Sequence[EmovectorRecord], corpus_b: Sequence[EmovectorRecord]
) -> Dict[CueId, CueProfileEntry]:
    """Mean rank of each cue per corpus, over tracks where the cue is present."""

    def mean_rank(corpus: Sequence[EmovectorRecord], cue: CueId) -> Tuple[Optional[float], int]:
        values = [r.ranks.get(cue) for r in corpus if r.ranks.get(cue) is not None]
        return (float(np.mean(values)) if values else None), len(values)

    profile: Dict[CueId, CueProfileEntry] = {}
    for cue in CUE_ORDER:
        mean_a, present_a = mean_rank(corpus_a, cue)
        mean_b, present_b = mean_rank(corpus_b, cue)
        profile[cue] = CueProfileEntry(
            mean_rank_a=mean_a, mean_rank_b=mean_b, present_a=present_a, present_b=present_b
        )
    return profile


def compare(
    corpus_a: Sequence[EmovectorRecord],
    corpus_b: Sequence[EmovectorRecord],
    label_a: str = "A",
    label_b: str = "B",
) -> ComparisonReport:
    """
    Compare two corpora emotion by emotion.

    Args:
        corpus_a: Records of corpus A, any order
        corpus_b: Records of corpus B, any order
        label_a: Display label of A
        label_b: Display label of B

    Returns:
        ComparisonReport with per-emotion tests, the per-track total and the cue profile

    Raises:
        EmptyCorpus: Either corpus is empty
    """
    if not corpus_a or not corpus_b:
        empty = label_a if not corpus_a else label_b
        raise EmptyCorpus(f"corpus {empty} has no emovectors")

    # fixed reduction order for float sums
    corpus_a = sorted(corpus_a, key=lambda r: r.path)
    corpus_b = sorted(corpus_b, key=lambda r: r.path)

    vectors_a: List[Emovector] = [r.emovector for r in corpus_a]
    vectors_b: List[Emovector] = [r.emovector for r in corpus_b]

    per_emotion = {
        emotion: compare_scores(
            [v.score(emotion) for v in vectors_a], [v.score(emotion) for v in vectors_b]
        )
        for emotion in EMOTION_ORDER
    }
    totals_a = [v.total for v in vectors_a]
    totals_b = [v.total for v in vectors_b]

    return ComparisonReport(
        stats_a=summarize(vectors_a, label_a),
        stats_b=summarize(vectors_b, label_b),
        per_emotion=per_emotion,
        total=compare_scores(totals_a, totals_b),
        total_means=(float(np.mean(totals_a)), float(np.mean(totals_b))),
        cue_profile=cue_profile(corpus_a, corpus_b),
    )
