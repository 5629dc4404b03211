"""
Framewise spectral primitives: STFT magnitude, RMS envelope, spectral bandwidth.

All operations share the 2048/512 frame geometry of the analysis configuration so
frame indices are comparable across cues.
"""

import numpy as np
import librosa

from src.data_models.models import AudioBuffer, FrameSeries
from src.utils.error_handler import InvalidFraming
from src.utils.settings import DEFAULT_CONFIG


def check_framing(frame_length: int, hop_length: int) -> None:
    """Raise InvalidFraming unless hop > 0 and frame >= hop."""
    if hop_length <= 0 or frame_length < hop_length:
        raise InvalidFraming(
            f"need hop_length > 0 and frame_length >= hop_length "
            f"(got frame {frame_length}, hop {hop_length})"
        )


def stft_magnitude(
    buf: AudioBuffer,
    frame_length: int = DEFAULT_CONFIG.frame_length,
    hop_length: int = DEFAULT_CONFIG.hop_length,
) -> np.ndarray:
    """
    Magnitude spectrogram with a Hann window and centred, reflect-padded frames.

    Args:
        buf: Input buffer (at least one sample)
        frame_length: FFT/window length in samples
        hop_length: Frame advance in samples

    Returns:
        Array of shape (frames, frame_length // 2 + 1); bin b is b * rate / frame_length Hz
    """
    check_framing(frame_length, hop_length)
    spectrum = librosa.stft(
        buf.samples,
        n_fft=frame_length,
        hop_length=hop_length,
        win_length=frame_length,
        window="hann",
        center=True,
        pad_mode="reflect",
    )
    return np.abs(spectrum).T


def rms_envelope(
    buf: AudioBuffer,
    frame_length: int = DEFAULT_CONFIG.frame_length,
    hop_length: int = DEFAULT_CONFIG.hop_length,
) -> FrameSeries:
    """
    Root-mean-square level per frame, frame i covering samples [i*hop, i*hop + frame).

    Buffers shorter than one frame are zero-padded to a single frame.
    """
    check_framing(frame_length, hop_length)
    samples = buf.samples
    if samples.shape[0] < frame_length:
        samples = np.pad(samples, (0, frame_length - samples.shape[0]))
    values = librosa.feature.rms(
        y=samples, frame_length=frame_length, hop_length=hop_length, center=False,
        dtype=np.float64,
    )[0]
    return FrameSeries(values, frame_length, hop_length, buf.sample_rate)


def spectral_bandwidth(
    buf: AudioBuffer,
    frame_length: int = DEFAULT_CONFIG.frame_length,
    hop_length: int = DEFAULT_CONFIG.hop_length,
) -> FrameSeries:
    """
    Magnitude-weighted spread (Hz) of each frame's spectrum around its centroid.

    Frames with no energy get bandwidth 0.
    """
    magnitude = stft_magnitude(buf, frame_length, hop_length)
    values = librosa.feature.spectral_bandwidth(
        S=magnitude.T, sr=buf.sample_rate, n_fft=frame_length, hop_length=hop_length, p=2
    )[0]
    return FrameSeries(np.nan_to_num(values, nan=0.0), frame_length, hop_length, buf.sample_rate)
