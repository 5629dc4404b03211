"""
Calibration file format (``emovec-calibration/1``).

A calibration is stored as sorted-key, indented JSON so identical inputs give
byte-identical files. Loading checks the schema, grid monotonicity and that the
recorded analysis settings match the running configuration.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from src.data_models.models import CALIBRATION_SCHEMA, CUE_ORDER, Calibration
from src.utils.error_handler import (
    ConfigMismatch,
    CorruptGrid,
    InputNotFound,
    SchemaMismatch,
    get_logger,
)
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig

logger = get_logger("calibration")


def save_calibration(cal: Calibration) -> bytes:
    """Serialize a calibration to UTF-8 JSON bytes."""
    document = cal.model_dump(mode="json", by_alias=True)
    return (json.dumps(document, indent=2, sort_keys=True) + "\n").encode("utf-8")


def config_differences(recorded: Dict[str, float], current: Dict[str, Any]) -> List[str]:
    """Names of settings whose recorded value differs from the current one."""
    diffs = []
    for key in sorted(set(recorded) | set(current)):
        if key not in recorded or key not in current:
            diffs.append(key)
        elif not math.isclose(float(recorded[key]), float(current[key]), rel_tol=1e-9, abs_tol=1e-12):
            diffs.append(key)
    return diffs


def load_calibration(
    data: bytes, config: AnalysisConfig = DEFAULT_CONFIG, strict: bool = False
) -> Calibration:
    """
    Parse and verify a calibration document.

    Args:
        data: File contents
        config: Running analysis configuration
        strict: Raise on settings mismatch instead of logging a warning

    Returns:
        Calibration

    Raises:
        SchemaMismatch: Not a calibration document, or a cue grid is absent
        CorruptGrid: A quantile grid decreases somewhere
        ConfigMismatch: Settings differ and ``strict`` is set
    """
    try:
        document = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SchemaMismatch(f"calibration is not UTF-8 JSON: {e}") from e
    if not isinstance(document, dict) or document.get("schema") != CALIBRATION_SCHEMA:
        found = document.get("schema") if isinstance(document, dict) else type(document).__name__
        raise SchemaMismatch(f"expected schema {CALIBRATION_SCHEMA!r}, found {found!r}")

    try:
        cal = Calibration.model_validate(document)
    except ValidationError as e:
        raise SchemaMismatch(
            f"calibration document invalid: {e.error_count()} errors",
            details={"errors": e.errors()},
        ) from e

    absent = [cue.value for cue in CUE_ORDER if cue not in cal.cues]
    if absent:
        raise SchemaMismatch(f"calibration lacks grids for {', '.join(absent)}")
    corrupt = [cue.value for cue in CUE_ORDER if not cal.cues[cue].is_monotone()]
    if corrupt:
        raise CorruptGrid(f"non-monotone quantile grid for {', '.join(corrupt)}")

    diffs = config_differences(cal.metadata.config, config.fingerprint())
    if diffs:
        message = f"calibration built with different analysis settings: {', '.join(diffs)}"
        if strict:
            raise ConfigMismatch(message, details={"settings": diffs})
        logger.warning("%s; ranks may be biased", message)
    return cal


def write_calibration(cal: Calibration, path: Union[str, Path]) -> None:
    """Write a calibration file."""
    Path(path).write_bytes(save_calibration(cal))


def read_calibration(
    path: Union[str, Path], config: AnalysisConfig = DEFAULT_CONFIG, strict: bool = False
) -> Calibration:
    """Read and verify a calibration file."""
    path = Path(path)
    if not path.is_file():
        raise InputNotFound(f"{path} does not exist or is not a file")
    return load_calibration(path.read_bytes(), config, strict)
