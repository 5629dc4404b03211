"""
Onset strength, tempo estimation and dynamic-programming beat tracking.

Tempo is the autocorrelation peak of the onset envelope weighted by a log-normal
prior (120 BPM, 1 octave) that is zero outside the BPM range; beats come from
the dynamic-programming tracker with tightness 100. Both are librosa's
implementations, parameterised from the shared analysis configuration.
"""

import numpy as np
import librosa
from scipy.signal import find_peaks
from scipy.stats import rv_continuous

from src.data_models.models import AudioBuffer, BeatTrack, FrameSeries
from src.dsp_core.spectral import check_framing
from src.utils.error_handler import InsufficientOnsets
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig

# Below this envelope maximum (mean dB rise per frame) there is nothing to track;
# steady tones leave only numerical ripple.
MIN_ONSET_STRENGTH = 1e-2

# Fine grid used to place beats between analysis frames
FINE_FRAME = 256
FINE_HOP = 32
LOG_FLOOR_POWER = 1e-10


class TempoPrior(rv_continuous):
    """
    Log-normal tempo prior (std in octaves) with zero mass outside [bpm_min, bpm_max].

    Only ``logpdf`` is used; it is unnormalized, which the tempo argmax does not need.
    """

    def __init__(self, centre_bpm: float, octaves: float, bpm_min: float, bpm_max: float):
        super().__init__(a=bpm_min, b=bpm_max, name="tempo_prior")
        self.centre_bpm = centre_bpm
        self.octaves = octaves

    def _logpdf(self, x: np.ndarray) -> np.ndarray:
        return -0.5 * ((np.log2(x) - np.log2(self.centre_bpm)) / self.octaves) ** 2


def tempo_prior(config: AnalysisConfig = DEFAULT_CONFIG) -> TempoPrior:
    return TempoPrior(
        config.tempo_prior_bpm, config.tempo_prior_octaves, config.bpm_min, config.bpm_max
    )


def onset_strength(buf: AudioBuffer, config: AnalysisConfig = DEFAULT_CONFIG) -> FrameSeries:
    """
    Spectral-flux onset envelope.

    Log-power mel spectrogram (40 bands up to Nyquist), positive first-order
    difference per band, mean over bands; shifted so peaks line up with the
    centred analysis frames.
    """
    check_framing(config.frame_length, config.hop_length)
    envelope = librosa.onset.onset_strength(
        y=buf.samples,
        sr=buf.sample_rate,
        n_fft=config.frame_length,
        hop_length=config.hop_length,
        n_mels=config.n_mels,
        fmax=buf.sample_rate / 2.0,
        lag=1,
        center=True,
        aggregate=np.mean,
    )
    return FrameSeries(
        np.maximum(envelope, 0.0), config.frame_length, config.hop_length, buf.sample_rate
    )


def count_onset_peaks(env: FrameSeries, config: AnalysisConfig = DEFAULT_CONFIG) -> int:
    """Envelope peaks higher than ``onset_peak_ratio`` of the envelope maximum."""
    values = env.values
    if values.size == 0:
        return 0
    peak = float(values.max())
    if peak <= MIN_ONSET_STRENGTH:
        return 0
    peaks, _ = find_peaks(values, height=config.onset_peak_ratio * peak)
    return int(peaks.size)


def beat_track(env: FrameSeries, config: AnalysisConfig = DEFAULT_CONFIG) -> BeatTrack:
    """
    Estimate the global tempo and track beats on an onset envelope.

    Args:
        env: Non-negative onset envelope
        config: Analysis configuration (prior, tightness, BPM range)

    Returns:
        BeatTrack with tempo recomputed as 60 / median inter-beat interval

    Raises:
        InsufficientOnsets: Fewer than 4 strong envelope peaks or fewer than 2 beats
    """
    peaks = count_onset_peaks(env, config)
    if peaks < config.min_onset_peaks:
        raise InsufficientOnsets(
            f"only {peaks} onset peaks above {config.onset_peak_ratio:.0%} of the envelope maximum"
        )

    values = np.asarray(env.values, dtype=np.float64)
    tempo = librosa.feature.tempo(
        onset_envelope=values,
        sr=env.sample_rate,
        hop_length=env.hop_length,
        prior=tempo_prior(config),
        max_tempo=None,
    )
    tempo = float(np.atleast_1d(tempo)[0])

    _, frames = librosa.beat.beat_track(
        onset_envelope=values,
        sr=env.sample_rate,
        hop_length=env.hop_length,
        bpm=tempo,
        tightness=config.tightness,
        trim=True,
        units="frames",
    )
    frames = np.unique(np.asarray(frames, dtype=int))
    if frames.size < 2:
        raise InsufficientOnsets(f"beat tracker found {frames.size} beats")

    beat_times = frames * env.hop_length / env.sample_rate
    return BeatTrack(_tempo_from_beats(beat_times, config), beat_times)


def refine_beats(
    buf: AudioBuffer, track: BeatTrack, config: AnalysisConfig = DEFAULT_CONFIG
) -> BeatTrack:
    """
    Move each tracked beat onto the steepest short-time energy rise near it.

    The onset envelope only resolves beats to the 512-sample hop; inter-beat
    intervals then jitter by a frame even for a metronome. Each beat is re-placed
    on a 32-sample grid within [-2, +1] hops of its tracked frame, and the tempo is
    recomputed from the refined intervals.
    """
    if track.beat_times.size < 2 or len(buf) < FINE_FRAME + FINE_HOP:
        return track

    power = librosa.feature.rms(
        y=buf.samples, frame_length=FINE_FRAME, hop_length=FINE_HOP, center=False,
        dtype=np.float64,
    )[0] ** 2
    level = 10.0 * np.log10(np.maximum(power, LOG_FLOOR_POWER))
    rise = np.diff(level)  # rise[j - 1]: level gained when frame j starts
    # newest samples of fine frame j sit around j * FINE_HOP + FINE_FRAME - FINE_HOP / 2
    onset_samples = np.arange(1, level.shape[0]) * FINE_HOP + FINE_FRAME - FINE_HOP // 2

    refined = []
    for t in track.beat_times:
        centre = t * buf.sample_rate
        lo = np.searchsorted(onset_samples, centre - 2 * config.hop_length, side="left")
        hi = np.searchsorted(onset_samples, centre + config.hop_length, side="right")
        if hi <= lo:
            refined.append(t)
            continue
        j = lo + int(np.argmax(rise[lo:hi]))
        refined.append(onset_samples[j] / buf.sample_rate if rise[j] > 0 else t)

    times = np.asarray(refined)
    keep = np.concatenate(([True], np.diff(times) > 0))
    times = times[keep]
    if times.size < 2:
        return track
    return BeatTrack(_tempo_from_beats(times, config), times)


def _tempo_from_beats(beat_times: np.ndarray, config: AnalysisConfig) -> float:
    intervals = np.diff(beat_times)
    return float(np.clip(60.0 / np.median(intervals), config.bpm_min, config.bpm_max))
