"""
Data models for the emovector toolkit.

Signal containers (audio buffers, frame series, beat and pitch tracks) are frozen
dataclasses around numpy arrays. Per-track records (notes, cue vectors, ranks,
emovectors, calibrations, reports) are Pydantic models with validation.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ---------------------------------------------------------------------------
# Signal containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AudioBuffer:
    """Mono sample sequence in [-1, 1] at a known sample rate."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self) -> None:
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("AudioBuffer holds mono samples only")
        if samples.size and (np.max(np.abs(samples)) > 1.0 or not np.all(np.isfinite(samples))):
            raise ValueError("samples must be finite and lie in [-1, 1]")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration_seconds(self) -> float:
        return len(self) / self.sample_rate

    def scaled(self, gain: float) -> "AudioBuffer":
        """Copy with every sample multiplied by ``gain`` (|gain| <= 1)."""
        return AudioBuffer(self.samples * gain, self.sample_rate)


@dataclass(frozen=True)
class FrameSeries:
    """One value per analysis frame; frame i starts at i * hop_length."""

    values: np.ndarray
    frame_length: int
    hop_length: int
    sample_rate: int

    def __post_init__(self) -> None:
        if self.hop_length <= 0 or self.frame_length < self.hop_length:
            raise ValueError("need hop_length > 0 and frame_length >= hop_length")
        values = np.asarray(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def frame_times(self) -> np.ndarray:
        """Frame start times in seconds."""
        return np.arange(len(self)) * self.hop_length / self.sample_rate


@dataclass(frozen=True)
class BeatTrack:
    """Global tempo and ascending beat times."""

    tempo_bpm: float
    beat_times: np.ndarray

    def __post_init__(self) -> None:
        times = np.asarray(self.beat_times, dtype=np.float64)
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("beat_times must be strictly increasing")
        if not (30.0 <= self.tempo_bpm <= 300.0):
            raise ValueError(f"tempo {self.tempo_bpm} outside [30, 300] BPM")
        times.setflags(write=False)
        object.__setattr__(self, "beat_times", times)

    @property
    def period_seconds(self) -> float:
        return 60.0 / self.tempo_bpm


@dataclass(frozen=True)
class PitchTrack:
    """Per-frame f0 (NaN where unvoiced) with explicit voicing flags."""

    f0_hz: np.ndarray
    voiced_flags: np.ndarray
    fmin: float = 65.0
    fmax: float = 2093.0

    def __post_init__(self) -> None:
        f0 = np.asarray(self.f0_hz, dtype=np.float64)
        voiced = np.asarray(self.voiced_flags, dtype=bool)
        if f0.shape != voiced.shape:
            raise ValueError("f0_hz and voiced_flags must align")
        if np.any(np.isfinite(f0) != voiced):
            raise ValueError("f0 must be present exactly on voiced frames")
        present = f0[voiced]
        if present.size and (present.min() < self.fmin or present.max() > self.fmax):
            raise ValueError("voiced f0 outside configured bounds")
        f0.setflags(write=False)
        voiced.setflags(write=False)
        object.__setattr__(self, "f0_hz", f0)
        object.__setattr__(self, "voiced_flags", voiced)

    def voiced_f0(self) -> np.ndarray:
        return self.f0_hz[self.voiced_flags]


# ---------------------------------------------------------------------------
# MIDI
# ---------------------------------------------------------------------------

class NoteEvent(BaseModel):
    """A resolved note from a Standard MIDI File."""

    model_config = ConfigDict(frozen=True)

    onset_seconds: float = Field(..., ge=0)
    duration_seconds: float = Field(..., gt=0)
    pitch: int = Field(..., ge=0, le=127)
    velocity: int = Field(..., ge=1, le=127)
    channel: int = Field(..., ge=0, le=15)

    @property
    def end_seconds(self) -> float:
        return self.onset_seconds + self.duration_seconds

    def sort_key(self) -> Tuple[float, int, int]:
        return (self.onset_seconds, self.channel, self.pitch)


class Timeline(BaseModel):
    """Notes sorted by onset (ties by channel, pitch)."""

    notes: List[NoteEvent] = Field(default_factory=list)
    total_seconds: float = Field(0.0, ge=0)

    @model_validator(mode="after")
    def check_order_and_extent(self) -> "Timeline":
        keys = [n.sort_key() for n in self.notes]
        if keys != sorted(keys):
            raise ValueError("notes must be sorted by (onset, channel, pitch)")
        end = max((n.end_seconds for n in self.notes), default=0.0)
        if self.total_seconds < end - 1e-9:
            raise ValueError("total_seconds shorter than the last note")
        return self


# ---------------------------------------------------------------------------
# Cues
# ---------------------------------------------------------------------------

class CueId(str, Enum):
    """Acoustic cues in their stable ordinal order. Pitch contour is not implemented."""
    TEMPO = "tempo"
    SOUND_LEVEL = "sound_level"
    SOUND_LEVEL_VARIABILITY = "sound_level_variability"
    HIGH_FREQUENCY_ENERGY = "high_frequency_energy"
    PITCH_LEVEL = "pitch_level"
    PITCH_VARIABILITY = "pitch_variability"
    TONE_ATTACK_SPEED = "tone_attack_speed"
    MICROSTRUCTURAL_IRREGULARITY = "microstructural_irregularity"


CUE_ORDER: Tuple[CueId, ...] = tuple(CueId)

CUE_UNITS: Dict[CueId, str] = {
    CueId.TEMPO: "BPM",
    CueId.SOUND_LEVEL: "RMS amplitude",
    CueId.SOUND_LEVEL_VARIABILITY: "RMS amplitude",
    CueId.HIGH_FREQUENCY_ENERGY: "Hz",
    CueId.PITCH_LEVEL: "Hz",
    CueId.PITCH_VARIABILITY: "semitones",
    CueId.TONE_ATTACK_SPEED: "seconds",
    CueId.MICROSTRUCTURAL_IRREGULARITY: "fraction",
}

# Cues where a larger raw value means less of the quality named in the cue table.
INVERTED_CUES = frozenset({CueId.TONE_ATTACK_SPEED})

_CUE_BOUNDS: Dict[CueId, Tuple[float, float]] = {
    CueId.TEMPO: (30.0, 300.0),
    CueId.PITCH_LEVEL: (65.0, 2093.0),
}


class CueVector(BaseModel):
    """Eight raw cue measurements; ``None`` means missing and carries a reason."""

    values: Dict[CueId, Optional[float]] = Field(default_factory=dict)
    reasons: Dict[CueId, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_values(self) -> "CueVector":
        for cue in CUE_ORDER:
            value = self.values.get(cue)
            if value is None:
                self.values[cue] = None
                self.reasons.setdefault(cue, "NotMeasured")
                continue
            if not math.isfinite(value):
                raise ValueError(f"{cue.value} must be finite or missing")
            low, high = _CUE_BOUNDS.get(cue, (0.0, math.inf))
            if not (low <= value <= high):
                raise ValueError(f"{cue.value}={value} outside [{low}, {high}]")
            self.reasons.pop(cue, None)
        return self

    def get(self, cue: CueId) -> Optional[float]:
        return self.values.get(cue)

    def is_missing(self, cue: CueId) -> bool:
        return self.values.get(cue) is None

    def present_count(self) -> int:
        return sum(1 for cue in CUE_ORDER if not self.is_missing(cue))


# ---------------------------------------------------------------------------
# Calibration
# ---------------------------------------------------------------------------

CALIBRATION_SCHEMA = "emovec-calibration/1"
GRID_POINTS = 101
MIN_BENCHMARK_SAMPLES = 10


class CalibrationMetadata(BaseModel):
    """Analysis settings and provenance recorded with a calibration."""

    artifact_version: str
    benchmark_digest: str
    config: Dict[str, float] = Field(..., description="AnalysisConfig.fingerprint()")
    conventions: Dict[str, str] = Field(default_factory=dict)


class CueGrid(BaseModel):
    """Empirical 0..100 percentile grid for one cue."""

    quantile_grid: List[float] = Field(..., min_length=GRID_POINTS, max_length=GRID_POINTS)
    sample_count: int = Field(..., ge=MIN_BENCHMARK_SAMPLES)

    def is_monotone(self) -> bool:
        grid = self.quantile_grid
        return all(a <= b for a, b in zip(grid, grid[1:]))


class Calibration(BaseModel):
    """Per-cue percentile grids built from a benchmark corpus. Immutable after build."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_id: Literal["emovec-calibration/1"] = Field(CALIBRATION_SCHEMA, alias="schema")
    metadata: CalibrationMetadata
    cues: Dict[CueId, CueGrid]


class RankVector(BaseModel):
    """Polarity-adjusted percentile ranks; 1.0 means more of the cue's quality."""

    ranks: Dict[CueId, Optional[float]] = Field(default_factory=dict)

    @field_validator("ranks")
    @classmethod
    def validate_ranks(cls, v: Dict[CueId, Optional[float]]) -> Dict[CueId, Optional[float]]:
        for cue, rank in v.items():
            if rank is not None and not (0.0 <= rank <= 1.0):
                raise ValueError(f"rank for {cue.value} outside [0, 1]")
        return {cue: v.get(cue) for cue in CUE_ORDER}

    @property
    def coverage(self) -> int:
        return sum(1 for r in self.ranks.values() if r is not None)

    def get(self, cue: CueId) -> Optional[float]:
        return self.ranks.get(cue)

    @classmethod
    def uniform(cls, value: Optional[float]) -> "RankVector":
        return cls(ranks={cue: value for cue in CUE_ORDER})


# ---------------------------------------------------------------------------
# Emotions
# ---------------------------------------------------------------------------

class Emotion(str, Enum):
    """The five emotion dimensions of an emovector."""
    ANGER = "anger"
    FEAR = "fear"
    HAPPINESS = "happiness"
    SADNESS = "sadness"
    TENDERNESS = "tenderness"


EMOTION_ORDER: Tuple[Emotion, ...] = tuple(Emotion)


class Emovector(BaseModel):
    """Integer match counts per emotion plus the number of cues each was scored on."""

    scores: Dict[Emotion, int]
    coverage: Dict[Emotion, int]

    @model_validator(mode="after")
    def check_counts(self) -> "Emovector":
        # prototypes imports this module
        from src.emovector.prototypes import applicable_cues

        for emotion in EMOTION_ORDER:
            score = self.scores.get(emotion, 0)
            cov = self.coverage.get(emotion, 0)
            if score < 0 or score > cov:
                raise ValueError(f"{emotion.value}: score {score} not within coverage {cov}")
            limit = applicable_cues(emotion)
            if cov > limit:
                raise ValueError(
                    f"{emotion.value}: coverage {cov} exceeds its {limit} applicable cues"
                )
        return self

    def score(self, emotion: Emotion) -> int:
        return self.scores.get(emotion, 0)

    def normalized(self, emotion: Emotion) -> Optional[float]:
        """score / coverage, or None when nothing was scored."""
        cov = self.coverage.get(emotion, 0)
        return self.scores.get(emotion, 0) / cov if cov else None

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.score(e) for e in EMOTION_ORDER)

    @property
    def total(self) -> int:
        return sum(self.as_tuple())


class EmovectorRecord(BaseModel):
    """One analysed track: identity, ranks and emotion scores."""

    path: str
    ranks: RankVector
    emovector: Emovector


# ---------------------------------------------------------------------------
# Corpus comparison
# ---------------------------------------------------------------------------

class EmotionSummary(BaseModel):
    """n, mean and sample SD (n-1) of one emotion's scores over a corpus."""

    n: int = Field(..., ge=1)
    mean: float = Field(..., ge=0, le=8)
    sd: Optional[float] = Field(None, ge=0)

    @model_validator(mode="after")
    def sd_requires_two(self) -> "EmotionSummary":
        if self.n < 2 and self.sd is not None:
            raise ValueError("sd is defined only for n >= 2")
        return self


class EmotionStats(BaseModel):
    """Per-emotion summaries for one corpus."""

    label: str = "A"
    per_emotion: Dict[Emotion, EmotionSummary]

    @property
    def n(self) -> int:
        return next(iter(self.per_emotion.values())).n


class EmotionComparison(BaseModel):
    """Mean difference and Mann-Whitney test for one emotion (or the total)."""

    mean_difference: float
    u_statistic: float = Field(..., ge=0)
    p_value: float = Field(..., gt=0, le=1)
    direction: Literal["A>B", "A<B", "tie"]
    underpowered: bool = False


class CueProfileEntry(BaseModel):
    """Mean polarity-adjusted rank of one cue in each corpus."""

    mean_rank_a: Optional[float] = None
    mean_rank_b: Optional[float] = None
    present_a: int = 0
    present_b: int = 0


class ComparisonReport(BaseModel):
    """Table-3 style comparison of two corpora."""

    stats_a: EmotionStats
    stats_b: EmotionStats
    per_emotion: Dict[Emotion, EmotionComparison]
    total: Optional[EmotionComparison] = None
    total_means: Tuple[float, float] = (0.0, 0.0)
    cue_profile: Dict[CueId, CueProfileEntry] = Field(default_factory=dict)


# ---------------------------------------------------------------------------
# Cross-module dataclasses
# ---------------------------------------------------------------------------

@dataclass
class FileOutcome:
    """Result of analysing one input file in a batch."""

    path: str
    cues: Optional[CueVector] = None
    error: Optional[Dict[str, object]] = field(default=None)

    @property
    def ok(self) -> bool:
        return self.cues is not None
