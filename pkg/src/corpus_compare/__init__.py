"""Per-corpus emotion summaries, Mann-Whitney comparison and report rendering."""

from src.corpus_compare.statistics import compare, compare_scores, cue_profile, mann_whitney, summarize
from src.corpus_compare.report import (
    REPORT_SCHEMA,
    render_json,
    render_markdown,
    render_report,
    render_table,
    write_report,
)

__all__ = [
    'compare',
    'compare_scores',
    'cue_profile',
    'mann_whitney',
    'summarize',
    'REPORT_SCHEMA',
    'render_json',
    'render_markdown',
    'render_report',
    'render_table',
    'write_report',
]
