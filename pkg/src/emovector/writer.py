"""
Emovector CSV.

Columns: ``path``, ``rank_<cue>`` for the eight cues (4 decimals, empty when
missing), the five integer scores, the five coverages and, optionally, the
score/coverage ratio per emotion as ``norm_<emotion>``.
"""

import io
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from src.data_models.models import (
    CUE_ORDER,
    EMOTION_ORDER,
    CueId,
    Emotion,
    Emovector,
    EmovectorRecord,
    RankVector,
)
from src.utils.error_handler import InputNotFound, SchemaMismatch

RANK_COLUMNS: Tuple[str, ...] = tuple(f"rank_{cue.value}" for cue in CUE_ORDER)
SCORE_COLUMNS: Tuple[str, ...] = tuple(e.value for e in EMOTION_ORDER)
COVERAGE_COLUMNS: Tuple[str, ...] = tuple(f"cov_{e.value}" for e in EMOTION_ORDER)
NORMALIZED_COLUMNS: Tuple[str, ...] = tuple(f"norm_{e.value}" for e in EMOTION_ORDER)
EMOVECTOR_COLUMNS: Tuple[str, ...] = ("path",) + RANK_COLUMNS + SCORE_COLUMNS + COVERAGE_COLUMNS


def columns(normalized: bool = False) -> Tuple[str, ...]:
    return EMOVECTOR_COLUMNS + (NORMALIZED_COLUMNS if normalized else ())


def emovector_row(
    path: str, ranks: RankVector, emovector: Emovector, normalized: bool = False
) -> Dict[str, str]:
    """
    One output record with every field already formatted as text.

    Args:
        path: Track identity as given on the command line
        ranks: Percentile ranks
        emovector: Emotion scores
        normalized: Append ``norm_<emotion>`` fields

    Returns:
        Mapping in column order
    """
    row: Dict[str, str] = {"path": path}
    for cue, column in zip(CUE_ORDER, RANK_COLUMNS):
        rank = ranks.get(cue)
        row[column] = "" if rank is None else f"{rank:.4f}"
    for emotion in EMOTION_ORDER:
        row[emotion.value] = str(emovector.score(emotion))
    for emotion, column in zip(EMOTION_ORDER, COVERAGE_COLUMNS):
        row[column] = str(emovector.coverage.get(emotion, 0))
    if normalized:
        for emotion, column in zip(EMOTION_ORDER, NORMALIZED_COLUMNS):
            ratio = emovector.normalized(emotion)
            row[column] = "" if ratio is None else f"{ratio:.4f}"
    return row


def render_emovector_csv(records: Sequence[EmovectorRecord], normalized: bool = False) -> str:
    """CSV text (comma, quote-doubling, LF line endings), rows in the given order."""
    rows = [emovector_row(r.path, r.ranks, r.emovector, normalized) for r in records]
    df = pd.DataFrame(rows, columns=list(columns(normalized)), dtype=str)
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_emovector_csv(
    records: Sequence[EmovectorRecord], path: Union[str, Path], normalized: bool = False
) -> None:
    Path(path).write_bytes(render_emovector_csv(records, normalized).encode("utf-8"))


def _parse_int(field: str, column: str) -> int:
    try:
        return int(field)
    except ValueError as e:
        raise ValueError(f"{column}: {field!r} is not an integer") from e


def read_emovector_csv(path: Union[str, Path]) -> List[EmovectorRecord]:
    """
    Read an emovector CSV, with or without the normalized columns.

    Raises:
        InputNotFound: File missing
        SchemaMismatch: Header or a field does not match the schema
    """
    path = Path(path)
    if not path.is_file():
        raise InputNotFound(f"{path} does not exist or is not a file")
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise SchemaMismatch(f"{path.name}: not an emovector CSV ({e})") from e
    header = tuple(df.columns)
    if header not in (columns(False), columns(True)):
        raise SchemaMismatch(f"{path.name}: header {list(header)} is not the emovector header")

    records: List[EmovectorRecord] = []
    for line, row in enumerate(df.to_dict(orient="records"), start=2):
        try:
            ranks: Dict[CueId, Optional[float]] = {}
            for cue, column in zip(CUE_ORDER, RANK_COLUMNS):
                field = row[column].strip()
                ranks[cue] = float(field) if field else None
            scores: Dict[Emotion, int] = {}
            coverage: Dict[Emotion, int] = {}
            for emotion, column in zip(EMOTION_ORDER, COVERAGE_COLUMNS):
                scores[emotion] = _parse_int(row[emotion.value], emotion.value)
                coverage[emotion] = _parse_int(row[column], column)
            records.append(
                EmovectorRecord(
                    path=row["path"],
                    ranks=RankVector(ranks=ranks),
                    emovector=Emovector(scores=scores, coverage=coverage),
                )
            )
        except ValueError as e:
            raise SchemaMismatch(f"{path.name} line {line}: {e}") from e
    return records
