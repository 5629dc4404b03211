"""
Pytest configuration and shared fixtures.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pytest

from src.audio_io.wav_codec import write_wav_file
from src.calibration.builder import build_calibration, make_metadata
from src.data_models.models import (
    CUE_ORDER,
    EMOTION_ORDER,
    Calibration,
    CueId,
    CueVector,
    Emotion,
    Emovector,
    EmovectorRecord,
    RankVector,
)
from src.midi_render.smf_parser import parse_smf
from src.midi_render.synthesizer import synthesize
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig
from tests.signals import metronome_notes, smf_bytes

CUE_RANGES: Dict[CueId, tuple] = {
    CueId.TEMPO: (60.0, 180.0),
    CueId.SOUND_LEVEL: (0.01, 0.5),
    CueId.SOUND_LEVEL_VARIABILITY: (0.0, 0.2),
    CueId.HIGH_FREQUENCY_ENERGY: (200.0, 4000.0),
    CueId.PITCH_LEVEL: (100.0, 1000.0),
    CueId.PITCH_VARIABILITY: (0.0, 3.0),
    CueId.TONE_ATTACK_SPEED: (0.01, 0.3),
    CueId.MICROSTRUCTURAL_IRREGULARITY: (0.0, 0.2),
}


def random_cue_vectors(count: int, seed: int = 0) -> List[CueVector]:
    """Plausible cue vectors drawn uniformly from fixed per-cue ranges."""
    rng = np.random.default_rng(seed)
    vectors = []
    for _ in range(count):
        values = {cue: float(rng.uniform(*CUE_RANGES[cue])) for cue in CUE_ORDER}
        vectors.append(CueVector(values=values))
    return vectors


def make_emovector(scores: Sequence[int], coverage: Optional[Sequence[int]] = None) -> Emovector:
    coverage = coverage or (8, 7, 7, 8, 8)
    return Emovector(
        scores=dict(zip(EMOTION_ORDER, scores)),
        coverage=dict(zip(EMOTION_ORDER, coverage)),
    )


def make_record(path: str, scores: Sequence[int], rank: Optional[float] = 0.5) -> EmovectorRecord:
    return EmovectorRecord(path=path, ranks=RankVector.uniform(rank), emovector=make_emovector(scores))


def corpus_with(emotion: Emotion, values: Sequence[int], prefix: str = "t") -> List[EmovectorRecord]:
    """Records that score ``values`` on ``emotion`` and zero elsewhere."""
    records = []
    for i, value in enumerate(values):
        scores = [value if e == emotion else 0 for e in EMOTION_ORDER]
        records.append(make_record(f"{prefix}{i:03d}.wav", scores))
    return records


def write_metronome_wav(
    path: Path, bpm: float = 120.0, pitch: int = 69, velocity: int = 100, beats: int = 16,
    config: AnalysisConfig = DEFAULT_CONFIG,
) -> Path:
    """Render a one-note-per-beat MIDI line and write it as a .wav file."""
    tempo = int(round(60_000_000 / bpm))
    data = smf_bytes(metronome_notes(beats=beats, pitch=pitch, velocity=velocity), tempo=tempo)
    write_wav_file(path, synthesize(parse_smf(data), config.sample_rate))
    return path


@pytest.fixture
def analysis_config() -> AnalysisConfig:
    """Default analysis settings."""
    return DEFAULT_CONFIG


@pytest.fixture
def benchmark_vectors() -> List[CueVector]:
    """Forty synthetic benchmark cue vectors."""
    return random_cue_vectors(40, seed=1)


@pytest.fixture
def calibration(benchmark_vectors) -> Calibration:
    """Calibration built from the synthetic benchmark vectors."""
    return build_calibration(benchmark_vectors, make_metadata("sha256:test"))


@pytest.fixture
def record_factory() -> Callable[..., EmovectorRecord]:
    """Factory for EmovectorRecords with uniform ranks."""
    return make_record


@pytest.fixture
def benchmark_dir(tmp_path) -> Path:
    """
    Twelve rendered metronome tracks with varied tempo, pitch and loudness.

    Every cue is measurable on every track.
    """
    root = tmp_path / "benchmark"
    root.mkdir()
    settings = zip(
        [84, 96, 100, 108, 112, 120, 126, 132, 138, 144, 150, 160],
        [57, 60, 62, 64, 65, 67, 69, 71, 72, 74, 76, 77],
        [50, 60, 70, 80, 90, 100, 110, 120, 127, 64, 96, 112],
    )
    for i, (bpm, pitch, velocity) in enumerate(settings):
        write_metronome_wav(root / f"bench_{i:02d}.wav", bpm=bpm, pitch=pitch, velocity=velocity)
    return root
