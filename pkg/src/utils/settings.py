"""
Analysis configuration.

All numeric analysis choices live in one frozen model so the calibration file can
record them and the analyzer can refuse (or warn about) a calibration built with
different settings.
"""

import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src import __version__
from src.utils.error_handler import get_logger

load_dotenv()

logger = get_logger("settings")

ARTIFACT_VERSION = f"emovec {__version__}"


class AnalysisConfig(BaseModel):
    """Fixed DSP geometry, tempo prior and pitch bounds shared by every cue."""

    model_config = ConfigDict(frozen=True)

    sample_rate: int = Field(22050, gt=0, description="Analysis sample rate (Hz)")
    frame_length: int = Field(2048, gt=0, description="Frame length (samples)")
    hop_length: int = Field(512, gt=0, description="Hop length (samples)")
    n_mels: int = Field(40, gt=0, description="Mel bands in the onset envelope")
    tempo_prior_bpm: float = Field(120.0, gt=0, description="Centre of the log-normal tempo prior")
    tempo_prior_octaves: float = Field(1.0, gt=0, description="Std of the tempo prior in octaves")
    tightness: float = Field(100.0, gt=0, description="DP beat-tracker transition weight")
    bpm_min: float = 30.0
    bpm_max: float = 300.0
    onset_peak_ratio: float = Field(0.1, gt=0, lt=1, description="Peak height relative to envelope max")
    min_onset_peaks: int = 4
    yin_fmin: float = 65.0
    yin_fmax: float = 2093.0
    yin_threshold: float = Field(0.1, gt=0, lt=1)
    attack_threshold: float = Field(0.1, gt=0, lt=1, description="Fraction of max RMS")
    attack_peak_tolerance: float = Field(
        0.05, ge=0, lt=1, description="Distance below the event maximum still counted as the peak"
    )
    min_duration_seconds: float = 1.0
    band: float = Field(0.25, gt=0, le=0.5, description="Emotion match band")

    @model_validator(mode="after")
    def check_geometry(self) -> "AnalysisConfig":
        """Frame must cover at least one hop; pitch bounds must sit under Nyquist."""
        if self.frame_length < self.hop_length:
            raise ValueError("frame_length must be >= hop_length")
        if not (0 < self.yin_fmin < self.yin_fmax < self.sample_rate / 2):
            raise ValueError("YIN bounds must satisfy 0 < fmin < fmax < sample_rate/2")
        if not (0 < self.bpm_min < self.bpm_max):
            raise ValueError("BPM range must be positive and ordered")
        return self

    def fingerprint(self) -> Dict[str, Any]:
        """Settings a calibration must agree on to be usable for analysis."""
        return self.model_dump(exclude={"band", "min_duration_seconds"})


DEFAULT_CONFIG = AnalysisConfig()


def resolve_jobs(requested: Optional[int] = None) -> int:
    """
    Worker count for batch commands.

    Precedence: explicit ``-j`` value, then ``EMOVEC_JOBS``, then the processor count.
    """
    if requested is not None:
        return max(1, int(requested))
    env_jobs = os.getenv("EMOVEC_JOBS")
    if env_jobs:
        try:
            return max(1, int(env_jobs))
        except ValueError:
            logger.warning("EMOVEC_JOBS=%r is not an integer; using the processor count", env_jobs)
    return os.cpu_count() or 1
