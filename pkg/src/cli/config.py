"""
Validated command-line run configuration.
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.emovector.scorer import check_band
from src.utils.error_handler import InputNotFound
from src.utils.settings import DEFAULT_CONFIG

Command = Literal["calibrate", "analyze", "compare", "render-midi", "extract"]


class RunConfig(BaseModel):
    """One CLI invocation after argument parsing."""

    command: Command
    inputs: List[Path] = Field(default_factory=list, description="Input files or directories")
    calibration: Optional[Path] = Field(None, description="Calibration file (analyze)")
    from_cues: Optional[Path] = Field(None, description="Raw-cue CSV to calibrate from")
    out: Optional[Path] = Field(None, description="Primary output file")
    cues_out: Optional[Path] = Field(None, description="Optional raw-cue CSV (analyze)")
    out_prefix: Optional[Path] = Field(None, description="Report path prefix (compare)")
    corpus_a: Optional[Path] = None
    corpus_b: Optional[Path] = None
    band: float = Field(DEFAULT_CONFIG.band, description="Emotion match band, (0, 0.5]")
    strict: bool = Field(False, description="Fail on calibration settings mismatch")
    normalized: bool = Field(False, description="Append norm_<emotion> columns")
    jobs: int = Field(1, ge=1, description="Worker processes")

    @field_validator("band")
    @classmethod
    def validate_band(cls, v: float) -> float:
        return check_band(v)

    @model_validator(mode="after")
    def check_inputs_exist(self) -> "RunConfig":
        """Every path the command reads must exist now."""
        readable = list(self.inputs)
        readable += [p for p in (self.calibration, self.from_cues, self.corpus_a, self.corpus_b) if p]
        for path in readable:
            if not path.exists():
                raise InputNotFound(f"{path} does not exist")
        return self
