"""
Sample-rate conversion to the analysis rate.
"""

from math import gcd
from pathlib import Path
from typing import Union

import numpy as np
from scipy.signal import resample_poly

from src.audio_io.wav_codec import read_wav_file
from src.data_models.models import AudioBuffer
from src.utils.error_handler import EmptyAudio, InvalidRate
from src.utils.settings import DEFAULT_CONFIG


def resample(buf: AudioBuffer, target_rate: int) -> AudioBuffer:
    """
    Resample with a linear-phase polyphase FIR (scipy ``resample_poly``).

    Output length is ceil(len * target / source); the identity case returns the
    input buffer unchanged. Filter overshoot is clipped back into [-1, 1].

    Args:
        buf: Non-empty input buffer
        target_rate: Output rate in Hz

    Returns:
        AudioBuffer at ``target_rate``
    """
    if target_rate <= 0:
        raise InvalidRate(f"target rate must be positive, got {target_rate}")
    if len(buf) == 0:
        raise EmptyAudio("cannot resample an empty buffer")
    if target_rate == buf.sample_rate:
        return buf

    g = gcd(buf.sample_rate, target_rate)
    up, down = target_rate // g, buf.sample_rate // g
    out = resample_poly(buf.samples, up, down)
    return AudioBuffer(np.clip(out, -1.0, 1.0), target_rate)


def load_audio(path: Union[str, Path], target_rate: int = DEFAULT_CONFIG.sample_rate) -> AudioBuffer:
    """Read a .wav file and bring it to the analysis rate."""
    return resample(read_wav_file(path), target_rate)
