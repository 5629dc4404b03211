"""
YIN fundamental-frequency tracking.

Classic YIN per frame: difference function, cumulative-mean-normalised difference,
first dip under an absolute threshold within the lag range given by the pitch
bounds, then parabolic interpolation. Frames with no such dip are unvoiced.
"""

import numpy as np
import librosa
from scipy import fft

from src.data_models.models import AudioBuffer, PitchTrack
from src.dsp_core.spectral import check_framing
from src.utils.error_handler import InvalidRange
from src.utils.settings import DEFAULT_CONFIG


def difference_function(frames: np.ndarray, win_length: int, max_lag: int) -> np.ndarray:
    """
    d(tau) = sum_{j < W} (x[j] - x[j + tau])^2 for tau = 0..max_lag, per frame.

    Args:
        frames: Array (frame_length, n_frames)
        win_length: Integration window W
        max_lag: Largest lag; frame_length must be >= W + max_lag

    Returns:
        Array (max_lag + 1, n_frames)
    """
    frame_length = frames.shape[0]
    n_fft = fft.next_fast_len(frame_length + win_length)
    spectrum = fft.rfft(frames, n=n_fft, axis=0)
    window_spectrum = fft.rfft(frames[:win_length], n=n_fft, axis=0)
    cross = fft.irfft(spectrum * np.conj(window_spectrum), n=n_fft, axis=0)[: max_lag + 1]

    energy = np.concatenate(
        [np.zeros((1, frames.shape[1])), np.cumsum(frames ** 2, axis=0)], axis=0
    )
    lags = np.arange(max_lag + 1)
    shifted_energy = energy[lags + win_length] - energy[lags]
    diff = energy[win_length] + shifted_energy - 2.0 * cross
    diff[0] = 0.0
    return np.maximum(diff, 0.0)


def cumulative_mean_normalized(diff: np.ndarray) -> np.ndarray:
    """d'(0) = 1, d'(tau) = d(tau) * tau / sum_{1..tau} d; undefined (silent) lags become 1."""
    running = np.cumsum(diff[1:], axis=0)
    lags = np.arange(1, diff.shape[0])[:, None]
    normalized = np.ones_like(diff)
    np.divide(diff[1:] * lags, running, out=normalized[1:], where=running > 0)
    return normalized


def _parabolic_offset(values: np.ndarray, i: int) -> float:
    if i <= 0 or i >= values.shape[0] - 1:
        return 0.0
    a, b, c = values[i - 1], values[i], values[i + 1]
    denom = a - 2.0 * b + c
    if denom <= 0:
        return 0.0
    return float(np.clip(0.5 * (a - c) / denom, -1.0, 1.0))


def yin_f0(
    buf: AudioBuffer,
    fmin: float = DEFAULT_CONFIG.yin_fmin,
    fmax: float = DEFAULT_CONFIG.yin_fmax,
    frame_length: int = DEFAULT_CONFIG.frame_length,
    hop_length: int = DEFAULT_CONFIG.hop_length,
    threshold: float = DEFAULT_CONFIG.yin_threshold,
) -> PitchTrack:
    """
    Track f0 with YIN on centred frames.

    Args:
        buf: Input buffer
        fmin: Lowest admissible f0 (Hz)
        fmax: Highest admissible f0 (Hz)
        frame_length: Frame length in samples
        hop_length: Hop length in samples
        threshold: Absolute threshold on the normalised difference

    Returns:
        PitchTrack with NaN f0 on unvoiced frames
    """
    rate = buf.sample_rate
    if not (0 < fmin < fmax < rate / 2):
        raise InvalidRange(f"need 0 < fmin < fmax < {rate / 2} Hz, got [{fmin}, {fmax}]")
    check_framing(frame_length, hop_length)

    win_length = frame_length // 2
    min_lag = max(1, int(np.floor(rate / fmax)))
    max_lag = min(frame_length - win_length, int(np.ceil(rate / fmin)))

    padded = np.pad(buf.samples, frame_length // 2, mode="reflect")
    if padded.shape[0] < frame_length:
        padded = np.pad(padded, (0, frame_length - padded.shape[0]))
    frames = librosa.util.frame(padded, frame_length=frame_length, hop_length=hop_length)

    normalized = cumulative_mean_normalized(difference_function(frames, win_length, max_lag))

    n_frames = frames.shape[1]
    f0 = np.full(n_frames, np.nan)
    for k in range(n_frames):
        curve = normalized[:, k]
        below = np.flatnonzero(curve[min_lag:] < threshold)
        if below.size == 0:
            continue
        lag = min_lag + int(below[0])
        while lag + 1 <= max_lag and curve[lag + 1] < curve[lag]:
            lag += 1
        period = lag + _parabolic_offset(curve, lag)
        if period <= 0:
            continue
        estimate = rate / period
        if fmin <= estimate <= fmax:
            f0[k] = estimate

    return PitchTrack(f0, np.isfinite(f0), fmin=fmin, fmax=fmax)
