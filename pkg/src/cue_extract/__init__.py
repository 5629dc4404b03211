"""Raw acoustic cue extraction and the raw-cue CSV."""

from src.cue_extract.extractor import (
    CueExtractor,
    attack_durations,
    beat_irregularity,
    describe_methods,
    extract_cues,
)
from src.cue_extract.cue_export import (
    CUE_CSV_COLUMNS,
    read_cue_csv,
    render_cue_csv,
    write_cue_csv,
)

__all__ = [
    'CueExtractor',
    'attack_durations',
    'beat_irregularity',
    'describe_methods',
    'extract_cues',
    'CUE_CSV_COLUMNS',
    'read_cue_csv',
    'render_cue_csv',
    'write_cue_csv',
]
