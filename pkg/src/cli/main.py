"""
emovec command-line interface.

Usage:
    emovec calibrate --input BENCHMARK_DIR --out calibration.json
    emovec calibrate --from-cues benchmark_cues.csv --out calibration.json
    emovec extract --input tracks/ --out cues.csv
    emovec analyze --calibration calibration.json --input tracks/ --out emovectors.csv
    emovec compare --a famous.csv --b generated.csv --out-prefix report
    emovec render-midi --input solo.mid --out solo.wav

Exit codes: 0 success, 1 I/O, 2 validation or configuration, 3 empty result.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from src import __version__
from src.audio_io.wav_codec import write_wav_file
from src.calibration.builder import (
    build_calibration,
    digest_bytes,
    digest_files,
    make_metadata,
    rank_cues,
)
from src.calibration.store import read_calibration, write_calibration
from src.cli.config import RunConfig
from src.cli.pipeline import ANALYSIS_SUFFIXES, collect_inputs, extract_batch
from src.corpus_compare.report import render_table, write_report
from src.corpus_compare.statistics import compare
from src.cue_extract.cue_export import read_cue_csv, write_cue_csv
from src.cue_extract.extractor import AUDIO_SUFFIXES
from src.data_models.models import CUE_ORDER, MIN_BENCHMARK_SAMPLES, EmovectorRecord
from src.emovector.scorer import EmotionScorer
from src.emovector.writer import read_emovector_csv, write_emovector_csv
from src.midi_render.synthesizer import render_midi_file
from src.utils.error_handler import (
    BatchQualityWarning,
    EmovecError,
    EmptyCorpus,
    ErrorHandler,
    InsufficientBenchmark,
    get_logger,
    setup_logging,
)
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig, resolve_jobs

logger = get_logger("cli")

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2


def cmd_calibrate(run: RunConfig, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Build a calibration from a benchmark directory (or an exported raw-cue CSV)."""
    if run.from_cues is not None:
        rows = read_cue_csv(run.from_cues)
        vectors = [cues for _, cues in rows]
        digest = digest_bytes(run.from_cues.read_bytes())
        total = len(rows)
    else:
        root = run.inputs[0]
        files = collect_inputs([root], AUDIO_SUFFIXES)
        outcomes = extract_batch(files, config, run.jobs)
        survivors = [o for o in outcomes if o.ok]
        if len(survivors) < MIN_BENCHMARK_SAMPLES:
            raise InsufficientBenchmark(
                f"{len(survivors)} analysable .wav files under {root}, need {MIN_BENCHMARK_SAMPLES}"
            )
        vectors = [o.cues for o in survivors]
        digest = digest_files(files, root if root.is_dir() else root.parent)
        total = len(survivors)

    cal = build_calibration(vectors, make_metadata(digest, config))
    write_calibration(cal, run.out)

    for cue in CUE_ORDER:
        count = cal.cues[cue].sample_count
        print(f"{cue.value}\t{count}")
        warning = BatchQualityWarning.low_cue_coverage(cue.value, count, total)
        if warning:
            logger.warning(warning)
    logger.info("Calibration written to %s", run.out)
    return EXIT_OK


def cmd_extract(run: RunConfig, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Write the raw-cue CSV for a set of inputs, no calibration needed."""
    files = collect_inputs(run.inputs, ANALYSIS_SUFFIXES)
    outcomes = extract_batch(files, config, run.jobs)
    rows = [(o.path, o.cues) for o in outcomes if o.ok]
    if not rows:
        raise EmptyCorpus("no input produced a cue vector")
    write_cue_csv(rows, run.out)
    logger.info("Wrote %d rows to %s", len(rows), run.out)
    return EXIT_OK


def cmd_analyze(run: RunConfig, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Score every input against a calibration and write the emovector CSV."""
    cal = read_calibration(run.calibration, config, strict=run.strict)
    scorer = EmotionScorer(band=run.band)

    files = collect_inputs(run.inputs, ANALYSIS_SUFFIXES)
    outcomes = extract_batch(files, config, run.jobs)

    records: List[EmovectorRecord] = []
    for outcome in outcomes:
        if not outcome.ok:
            continue
        ranks = rank_cues(cal, outcome.cues)
        records.append(EmovectorRecord(path=outcome.path, ranks=ranks, emovector=scorer.score(ranks)))
    if not records:
        raise EmptyCorpus("no input could be analysed")

    write_emovector_csv(records, run.out, normalized=run.normalized)
    if run.cues_out is not None:
        write_cue_csv([(o.path, o.cues) for o in outcomes if o.ok], run.cues_out)
    logger.info("Wrote %d emovectors to %s", len(records), run.out)
    return EXIT_OK


def cmd_compare(run: RunConfig, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Compare two emovector CSVs and write the report documents."""
    corpus_a = read_emovector_csv(run.corpus_a)
    corpus_b = read_emovector_csv(run.corpus_b)
    report = compare(corpus_a, corpus_b, label_a=run.corpus_a.name, label_b=run.corpus_b.name)
    md_path, json_path = write_report(report, run.out_prefix)
    sys.stdout.write(render_table(report))
    logger.info("Report written to %s and %s", md_path, json_path)
    return EXIT_OK


def cmd_render_midi(run: RunConfig, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Render one Standard MIDI File to a 16-bit mono WAV at the analysis rate."""
    buf = render_midi_file(run.inputs[0], config.sample_rate)
    write_wav_file(run.out, buf)
    logger.info("Rendered %.2f s to %s", buf.duration_seconds, run.out)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig, AnalysisConfig], int]] = {
    "calibrate": cmd_calibrate,
    "extract": cmd_extract,
    "analyze": cmd_analyze,
    "compare": cmd_compare,
    "render-midi": cmd_render_midi,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emovec",
        description="Acoustic-cue emotion vectors for music corpora",
    )
    parser.add_argument("--version", action="version", version=f"emovec {__version__}")
    parser.add_argument(
        "--log-level", default=None,
        help="DEBUG, INFO, WARNING or ERROR (default: $EMOVEC_LOG_LEVEL or INFO)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_jobs(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "-j", "--jobs", type=int, default=None,
            help="Worker processes (default: $EMOVEC_JOBS or CPU count)",
        )

    p = sub.add_parser("calibrate", help="Build a calibration from a benchmark corpus")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path, help="Benchmark directory of .wav files")
    source.add_argument("--from-cues", type=Path, help="Raw-cue CSV written by 'extract'")
    p.add_argument("--out", type=Path, required=True, help="Calibration file to write")
    add_jobs(p)

    p = sub.add_parser("extract", help="Write raw cues without a calibration")
    p.add_argument("--input", type=Path, nargs="+", required=True, help=".wav/.mid files or directories")
    p.add_argument("--out", type=Path, required=True, help="Raw-cue CSV to write")
    add_jobs(p)

    p = sub.add_parser("analyze", help="Score tracks into emovectors")
    p.add_argument("--calibration", type=Path, required=True)
    p.add_argument("--input", type=Path, nargs="+", required=True, help=".wav/.mid files or directories")
    p.add_argument("--out", type=Path, required=True, help="Emovector CSV to write")
    p.add_argument("--cues-out", type=Path, default=None, help="Also write the raw-cue CSV")
    p.add_argument("--band", type=float, default=DEFAULT_CONFIG.band, help="Match band (default: 0.25)")
    p.add_argument("--strict", action="store_true", help="Fail if the calibration settings differ")
    p.add_argument("--normalized", action="store_true", help="Append norm_<emotion> columns")
    add_jobs(p)

    p = sub.add_parser("compare", help="Compare two emovector CSVs")
    p.add_argument("--a", type=Path, required=True, dest="corpus_a")
    p.add_argument("--b", type=Path, required=True, dest="corpus_b")
    p.add_argument("--out-prefix", type=Path, required=True, help="Writes <prefix>.md and <prefix>.json")

    p = sub.add_parser("render-midi", help="Render a .mid file to .wav")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)

    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    """Map parsed arguments onto a validated RunConfig."""
    skip = ("log_level", "input")
    values = {k: v for k, v in vars(args).items() if v is not None and k not in skip}
    source = getattr(args, "input", None)
    if source is not None:
        values["inputs"] = source if isinstance(source, list) else [source]
    values["jobs"] = resolve_jobs(getattr(args, "jobs", None))
    return RunConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    handler = ErrorHandler(logger.name)

    try:
        run = run_config_from_args(args)
        return COMMANDS[run.command](run, DEFAULT_CONFIG)
    except EmovecError as e:
        handler.handle_error(e, context=args.command, raise_error=False)
        print(e.user_message, file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        handler.handle_error(e, context=args.command, raise_error=False)
        return EXIT_VALIDATION
    except OSError as e:
        handler.handle_error(e, context=args.command, raise_error=False)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
