"""
Benchmark calibration: per-cue percentile grids and percentile ranks.

A calibration stores, for each cue, the 0th..100th percentiles of that cue over a
benchmark corpus. Ranking a raw value interpolates its position on the grid and
applies the cue's polarity, so 1.0 always means more of the cue's quality.
"""

import hashlib
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

import numpy as np

from src.cue_extract.extractor import describe_methods
from src.data_models.models import (
    CUE_ORDER,
    GRID_POINTS,
    INVERTED_CUES,
    MIN_BENCHMARK_SAMPLES,
    Calibration,
    CalibrationMetadata,
    CueGrid,
    CueId,
    CueVector,
    RankVector,
)
from src.utils.error_handler import InsufficientBenchmark, NotCalibrated, get_logger
from src.utils.settings import ARTIFACT_VERSION, DEFAULT_CONFIG, AnalysisConfig

logger = get_logger("calibration")

PERCENTILES = np.arange(GRID_POINTS, dtype=np.float64)


def make_metadata(
    benchmark_digest: str, config: AnalysisConfig = DEFAULT_CONFIG
) -> CalibrationMetadata:
    """Metadata recording the analysis settings a calibration was built with."""
    conventions = describe_methods(config)
    conventions["percentile_grid"] = "101 points, linear interpolation between order statistics"
    conventions["rank"] = "mid-rank on flat grid segments; tone_attack_speed inverted"
    return CalibrationMetadata(
        artifact_version=ARTIFACT_VERSION,
        benchmark_digest=benchmark_digest,
        config=config.fingerprint(),
        conventions=conventions,
    )


def digest_files(paths: Iterable[Union[str, Path]], root: Union[str, Path]) -> str:
    """SHA-256 over the sorted (relative path, content hash) pairs of a benchmark."""
    root = Path(root)
    entries = []
    for path in paths:
        path = Path(path)
        rel = path.relative_to(root).as_posix() if path.is_relative_to(root) else path.as_posix()
        entries.append((rel, hashlib.sha256(path.read_bytes()).hexdigest()))
    h = hashlib.sha256()
    for rel, content in sorted(entries):
        h.update(f"{rel}\t{content}\n".encode("utf-8"))
    return f"sha256:{h.hexdigest()}"


def digest_bytes(data: bytes) -> str:
    """SHA-256 of a raw-cue table used as the benchmark."""
    return f"sha256:{hashlib.sha256(data).hexdigest()}"


def percentile_grid(values: Sequence[float]) -> List[float]:
    """0..100 percentiles, linear interpolation between order statistics."""
    ordered = np.sort(np.asarray(values, dtype=np.float64))
    return [float(v) for v in np.percentile(ordered, PERCENTILES, method="linear")]


def build_calibration(
    cue_vectors: Sequence[CueVector], metadata: CalibrationMetadata
) -> Calibration:
    """
    Build per-cue percentile grids from benchmark cue vectors.

    Args:
        cue_vectors: One vector per benchmark track, any order
        metadata: Settings and provenance to record

    Returns:
        Immutable Calibration

    Raises:
        InsufficientBenchmark: Some cue is present in fewer than 10 vectors
    """
    present: Dict[CueId, List[float]] = {cue: [] for cue in CUE_ORDER}
    for vector in cue_vectors:
        for cue in CUE_ORDER:
            value = vector.get(cue)
            if value is not None:
                present[cue].append(value)

    short = {cue.value: len(vals) for cue, vals in present.items() if len(vals) < MIN_BENCHMARK_SAMPLES}
    if short:
        names = ", ".join(f"{name} ({count})" for name, count in short.items())
        raise InsufficientBenchmark(
            f"cues below {MIN_BENCHMARK_SAMPLES} samples: {names}",
            details={"sample_counts": short},
        )

    grids = {
        cue: CueGrid(quantile_grid=percentile_grid(vals), sample_count=len(vals))
        for cue, vals in present.items()
    }
    logger.info(
        "Built calibration from %d vectors (%s)",
        len(cue_vectors),
        ", ".join(f"{cue.value}={grid.sample_count}" for cue, grid in grids.items()),
    )
    return Calibration(metadata=metadata, cues=grids)


def percentile_rank(cal: Calibration, cue: CueId, value: float) -> float:
    """
    Position of ``value`` in the cue's benchmark distribution, in [0, 1].

    Between grid points the rank interpolates linearly; a value equal to one or
    more grid points gets the midpoint of the matching percentile span. Values
    below the minimum rank 0 and values above the maximum rank 1. The rank of
    tone_attack_speed is inverted (shorter attack, higher rank).

    Args:
        cal: Calibration
        cue: Cue to rank
        value: Finite raw cue value

    Returns:
        Polarity-adjusted rank

    Raises:
        NotCalibrated: Cue missing from the calibration
    """
    grid_model = cal.cues.get(cue)
    if grid_model is None:
        raise NotCalibrated(f"calibration has no grid for {cue.value}")
    grid = np.asarray(grid_model.quantile_grid, dtype=np.float64)
    last = grid.shape[0] - 1

    if value < grid[0]:
        rank = 0.0
    elif value > grid[last]:
        rank = 1.0
    else:
        lo = int(np.searchsorted(grid, value, side="left"))
        hi = int(np.searchsorted(grid, value, side="right"))
        if hi > lo:
            position = (lo + hi - 1) / 2.0
        else:
            below, above = grid[lo - 1], grid[lo]
            position = (lo - 1) + (value - below) / (above - below)
        rank = float(np.clip(position / last, 0.0, 1.0))

    return 1.0 - rank if cue in INVERTED_CUES else rank


def rank_cues(cal: Calibration, cues: CueVector) -> RankVector:
    """Percentile ranks for every present cue; missing cues stay missing."""
    ranks: Dict[CueId, Optional[float]] = {}
    for cue in CUE_ORDER:
        value = cues.get(cue)
        ranks[cue] = None if value is None else percentile_rank(cal, cue, value)
    return RankVector(ranks=ranks)


def self_consistency(
    cal: Calibration, cue_vectors: Sequence[CueVector]
) -> Dict[CueId, Optional[float]]:
    """
    Mean rank per cue when a corpus is ranked against a calibration.

    Ranking the benchmark against its own calibration gives means near 0.5.
    """
    means: Dict[CueId, Optional[float]] = {}
    ranked = [rank_cues(cal, v) for v in cue_vectors]
    for cue in CUE_ORDER:
        values = [r.get(cue) for r in ranked if r.get(cue) is not None]
        means[cue] = float(np.mean(values)) if values else None
    return means
