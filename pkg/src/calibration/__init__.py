"""Benchmark calibration: percentile grids, ranks and the calibration file."""

from src.calibration.builder import (
    build_calibration,
    digest_bytes,
    digest_files,
    make_metadata,
    percentile_grid,
    percentile_rank,
    rank_cues,
    self_consistency,
)
from src.calibration.store import (
    load_calibration,
    read_calibration,
    save_calibration,
    write_calibration,
)

__all__ = [
    'build_calibration',
    'digest_bytes',
    'digest_files',
    'make_metadata',
    'percentile_grid',
    'percentile_rank',
    'rank_cues',
    'self_consistency',
    'load_calibration',
    'read_calibration',
    'save_calibration',
    'write_calibration',
]
