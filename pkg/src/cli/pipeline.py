"""
Batch cue extraction over many files.

Inputs are expanded and sorted by path before any work starts; workers return
results through ``Executor.map`` so output order is the sorted input order no
matter how the pool schedules files. Per-file failures are recorded and logged,
never raised.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from src.cue_extract.extractor import AUDIO_SUFFIXES, MIDI_SUFFIXES, CueExtractor
from src.data_models.models import FileOutcome
from src.utils.error_handler import BatchQualityWarning, EmovecError, ErrorHandler, get_logger
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig

logger = get_logger("cli")

ANALYSIS_SUFFIXES: Tuple[str, ...] = AUDIO_SUFFIXES + MIDI_SUFFIXES


def collect_inputs(paths: Iterable[Path], suffixes: Sequence[str]) -> List[Path]:
    """
    Expand directories recursively and sort.

    Files named explicitly are kept whatever their suffix; directory contents are
    filtered by ``suffixes`` (case-insensitive).
    """
    found = set()
    for path in paths:
        path = Path(path)
        if path.is_dir():
            for child in path.rglob("*"):
                if child.is_file() and child.suffix.lower() in suffixes:
                    found.add(child)
        else:
            found.add(path)
    return sorted(found, key=lambda p: p.as_posix())


def analyze_file(path: Path, config: AnalysisConfig = DEFAULT_CONFIG) -> FileOutcome:
    """Extract cues from one file, capturing any failure in the outcome."""
    try:
        cues = CueExtractor(config).extract_file(path)
    except EmovecError as e:
        return FileOutcome(path=str(path), error={"reason": e.reason, "message": e.message})
    except Exception as e:  # noqa: BLE001
        return FileOutcome(path=str(path), error={"reason": type(e).__name__, "message": str(e)})
    return FileOutcome(path=str(path), cues=cues)


def extract_batch(
    paths: Sequence[Path], config: AnalysisConfig = DEFAULT_CONFIG, jobs: int = 1
) -> List[FileOutcome]:
    """
    Extract cues for every path, in the given order.

    Args:
        paths: Sorted input files
        config: Analysis configuration
        jobs: Worker processes; 1 runs in-process

    Returns:
        One FileOutcome per path, same order
    """
    worker = partial(analyze_file, config=config)
    if jobs <= 1 or len(paths) <= 1:
        outcomes = [worker(p) for p in paths]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(paths))) as executor:
            outcomes = list(executor.map(worker, paths))

    handler = ErrorHandler(logger.name)
    failed = 0
    for outcome in outcomes:
        if outcome.ok:
            continue
        failed += 1
        handler.log_warning(
            f"{outcome.path}: skipped ({outcome.error['reason']}: {outcome.error['message']})"
        )
    warning = BatchQualityWarning.failed_files(failed, len(outcomes))
    if warning:
        handler.log_warning(warning)
    logger.info("Extracted cues from %d of %d files", len(outcomes) - failed, len(outcomes))
    return outcomes
