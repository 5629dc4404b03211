"""
Raw-cue CSV export and import.

One row per track: ``path`` then the eight cues in their stable order. Missing
cues are empty fields. Values are written with ``repr`` so a calibration rebuilt
from the table sees exactly the extracted floats.
"""

import io
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import pandas as pd

from src.data_models.models import CUE_ORDER, CueVector
from src.utils.error_handler import InputNotFound, SchemaMismatch

CUE_CSV_COLUMNS: Tuple[str, ...] = ("path",) + tuple(cue.value for cue in CUE_ORDER)
MISSING_FROM_CSV = "MissingInCsv"


def cue_table(rows: Sequence[Tuple[str, CueVector]]) -> pd.DataFrame:
    """String-typed table in CSV column order."""
    records = []
    for path, cues in rows:
        record = {"path": path}
        for cue in CUE_ORDER:
            value = cues.get(cue)
            record[cue.value] = "" if value is None else repr(float(value))
        records.append(record)
    return pd.DataFrame(records, columns=list(CUE_CSV_COLUMNS), dtype=str)


def render_cue_csv(rows: Sequence[Tuple[str, CueVector]]) -> str:
    """CSV text (comma, quote-doubling, LF line endings)."""
    buffer = io.StringIO()
    cue_table(rows).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_cue_csv(rows: Sequence[Tuple[str, CueVector]], path: Union[str, Path]) -> None:
    """Write the raw-cue CSV as UTF-8."""
    Path(path).write_bytes(render_cue_csv(rows).encode("utf-8"))


def read_cue_csv(path: Union[str, Path]) -> List[Tuple[str, CueVector]]:
    """
    Read a raw-cue CSV back into (path, CueVector) pairs.

    Args:
        path: CSV written by ``write_cue_csv``

    Returns:
        Rows in file order

    Raises:
        InputNotFound: File missing
        SchemaMismatch: Header differs or a value is not a valid cue measurement
    """
    path = Path(path)
    if not path.is_file():
        raise InputNotFound(f"{path} does not exist or is not a file")
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise SchemaMismatch(f"{path.name}: not a raw-cue CSV ({e})") from e
    if tuple(df.columns) != CUE_CSV_COLUMNS:
        raise SchemaMismatch(f"{path.name}: header {list(df.columns)} is not the raw-cue header")

    rows: List[Tuple[str, CueVector]] = []
    for line, record in enumerate(df.to_dict(orient="records"), start=2):
        values = {}
        try:
            for cue in CUE_ORDER:
                field = record[cue.value].strip()
                values[cue] = float(field) if field else None
            cues = CueVector(
                values=values,
                reasons={cue: MISSING_FROM_CSV for cue, v in values.items() if v is None},
            )
        except ValueError as e:
            raise SchemaMismatch(f"{path.name} line {line}: {e}") from e
        rows.append((record["path"], cues))
    return rows
