"""
Comparison report rendering: a Markdown table for people and a JSON document
(``emovec-report/1``) for programs. Formatting is fixed so identical inputs give
identical bytes.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from src.data_models.models import (
    CUE_ORDER,
    EMOTION_ORDER,
    ComparisonReport,
    EmotionComparison,
    EmotionSummary,
)

REPORT_SCHEMA = "emovec-report/1"
ABSENT = "—"


def _fmt(value: Optional[float], places: int = 3) -> str:
    return ABSENT if value is None else f"{value:.{places}f}"


def _p_cell(comparison: EmotionComparison) -> str:
    p = f"{comparison.p_value:.4f}"
    return f"{p} (underpowered)" if comparison.underpowered else p


def _row(name: str, a: EmotionSummary, b: EmotionSummary, comparison: EmotionComparison) -> str:
    cells = [
        name,
        str(a.n), _fmt(a.mean), _fmt(a.sd),
        str(b.n), _fmt(b.mean), _fmt(b.sd),
        f"{comparison.mean_difference:+.3f}",
        f"{comparison.u_statistic:.1f}",
        _p_cell(comparison),
        comparison.direction,
    ]
    return "| " + " | ".join(cells) + " |"


TABLE_HEADER = (
    "| Emotion | A n | A mean | A sd | B n | B mean | B sd | Δmean | U | p | direction |\n"
    "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---|"
)


def render_table(report: ComparisonReport) -> str:
    """The five-row emotion table on its own (what ``compare`` prints)."""
    lines = [TABLE_HEADER]
    for emotion in EMOTION_ORDER:
        lines.append(
            _row(
                emotion.value,
                report.stats_a.per_emotion[emotion],
                report.stats_b.per_emotion[emotion],
                report.per_emotion[emotion],
            )
        )
    return "\n".join(lines) + "\n"


def render_markdown(report: ComparisonReport) -> str:
    """Full human-readable report: emotion table, per-track total, cue profile, notes."""
    a, b = report.stats_a, report.stats_b
    lines: List[str] = [
        "# Emotion comparison",
        "",
        f"- A: {a.label} (n={a.n})",
        f"- B: {b.label} (n={b.n})",
        "",
        render_table(report).rstrip("\n"),
    ]

    if report.total is not None:
        total = report.total
        lines += [
            "",
            "## Emotion total per track",
            "",
            "| A mean | B mean | Δmean | U | p | direction |",
            "|---:|---:|---:|---:|---:|---|",
            "| " + " | ".join([
                _fmt(report.total_means[0]),
                _fmt(report.total_means[1]),
                f"{total.mean_difference:+.3f}",
                f"{total.u_statistic:.1f}",
                _p_cell(total),
                total.direction,
            ]) + " |",
        ]

    if report.cue_profile:
        lines += [
            "",
            "## Cue profile (mean percentile rank)",
            "",
            "| Cue | A rank | A present | B rank | B present |",
            "|---|---:|---:|---:|---:|",
        ]
        for cue in CUE_ORDER:
            entry = report.cue_profile.get(cue)
            if entry is None:
                continue
            lines.append(
                f"| {cue.value} | {_fmt(entry.mean_rank_a)} | {entry.present_a} "
                f"| {_fmt(entry.mean_rank_b)} | {entry.present_b} |"
            )

    lines += [
        "",
        "Notes:",
        "- sd is the sample standard deviation (n − 1 denominator); "
        f"{ABSENT} when a corpus has one track.",
        "- U counts A > B pairs plus half the ties; p is two-sided from the normal "
        "approximation with tie-corrected variance.",
    ]
    underpowered = [e.value for e in EMOTION_ORDER if report.per_emotion[e].underpowered]
    if underpowered:
        lines.append(
            f"- Underpowered (fewer than 4 tracks in a corpus): {', '.join(underpowered)}."
        )
    return "\n".join(lines) + "\n"


def _comparison_doc(comparison: EmotionComparison) -> Dict[str, Any]:
    return comparison.model_dump(mode="json")


def report_document(report: ComparisonReport) -> Dict[str, Any]:
    """JSON-ready document with stable keys."""

    def corpus(stats) -> Dict[str, Any]:
        return {
            "label": stats.label,
            "n": stats.n,
            "emotions": {
                e.value: stats.per_emotion[e].model_dump(mode="json") for e in EMOTION_ORDER
            },
        }

    document: Dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "corpora": {"A": corpus(report.stats_a), "B": corpus(report.stats_b)},
        "comparison": {e.value: _comparison_doc(report.per_emotion[e]) for e in EMOTION_ORDER},
        "cue_profile": {
            cue.value: entry.model_dump(mode="json") for cue, entry in report.cue_profile.items()
        },
        "conventions": {
            "sd": "sample (n-1)",
            "test": "Mann-Whitney U, two-sided, normal approximation, tie-corrected variance",
            "underpowered": "min(n_a, n_b) < 4",
        },
    }
    if report.total is not None:
        document["emotion_total"] = {
            "mean_a": report.total_means[0],
            "mean_b": report.total_means[1],
            **_comparison_doc(report.total),
        }
    return document


def render_json(report: ComparisonReport) -> str:
    return json.dumps(report_document(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_report(report: ComparisonReport) -> Tuple[str, str]:
    """
    Render both report documents.

    Returns:
        (markdown, json) text
    """
    return render_markdown(report), render_json(report)


def write_report(report: ComparisonReport, out_prefix: Union[str, Path]) -> Tuple[Path, Path]:
    """Write ``<prefix>.md`` and ``<prefix>.json`` as UTF-8."""
    prefix = Path(out_prefix)
    markdown, document = render_report(report)
    md_path = prefix.with_name(prefix.name + ".md")
    json_path = prefix.with_name(prefix.name + ".json")
    md_path.write_bytes(markdown.encode("utf-8"))
    json_path.write_bytes(document.encode("utf-8"))
    return md_path, json_path
