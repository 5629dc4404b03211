"""
Acoustic cue extraction.

Computes the eight raw cues for one track. A cue that cannot be measured (no
onsets, no voiced frames, no note events) is recorded as missing with the reason
instead of failing the whole vector.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

import numpy as np

from src.audio_io.resampler import load_audio
from src.data_models.models import AudioBuffer, BeatTrack, CueId, CueVector
from src.dsp_core.pitch import yin_f0
from src.dsp_core.rhythm import beat_track, onset_strength, refine_beats
from src.dsp_core.spectral import rms_envelope, spectral_bandwidth
from src.midi_render.synthesizer import render_midi_as_wav
from src.utils.error_handler import (
    AnalysisError,
    InsufficientBeats,
    NoEvents,
    TooShort,
    UnsupportedEncoding,
    get_logger,
)
from src.utils.settings import DEFAULT_CONFIG, AnalysisConfig

logger = get_logger("cue_extract")

AUDIO_SUFFIXES = (".wav",)
MIDI_SUFFIXES = (".mid", ".midi")
MIN_IRREGULARITY_BEATS = 4

# Reason recorded when YIN finds no voiced frame
NO_VOICED_FRAMES = "NoVoicedFrames"


def describe_methods(config: AnalysisConfig = DEFAULT_CONFIG) -> Dict[str, str]:
    """Statistic conventions behind each cue, recorded as output metadata."""
    return {
        "tempo": "60 / median inter-beat interval of the refined beat track (BPM)",
        "sound_level": "mean of frame RMS (non-centred frames)",
        "sound_level_variability": "population standard deviation of frame RMS",
        "high_frequency_energy": "mean spectral bandwidth (Hz, centred frames)",
        "pitch_level": "median YIN f0 over voiced frames (Hz)",
        "pitch_variability": "population standard deviation of semitone deviation from the median f0",
        "tone_attack_speed": (
            f"mean attack duration over events above {config.attack_threshold:.0%} of max "
            "hop-frame RMS (seconds; rank is inverted)"
        ),
        "microstructural_irregularity": "mean |IBI - T| / T with T = 60 / tempo",
    }


def attack_durations(buf: AudioBuffer, config: AnalysisConfig = DEFAULT_CONFIG) -> List[float]:
    """
    Attack duration of every energy event, in time order.

    Uses the RMS of consecutive hop-length frames so a step onset shows up within
    one hop. An event is a maximal run of frames whose RMS is at least
    ``attack_threshold`` times the maximum RMS. Its attack lasts from the run
    start up to and including the first frame within ``attack_peak_tolerance``
    of the event maximum, i.e. the first local maximum once ripple is ignored.

    Args:
        buf: Input buffer
        config: Analysis configuration

    Returns:
        Durations in seconds, one per event

    Raises:
        NoEvents: The buffer is silent
    """
    rms = rms_envelope(buf, config.hop_length, config.hop_length).values
    peak = float(rms.max()) if rms.size else 0.0
    if peak <= 0.0:
        raise NoEvents("RMS envelope is zero everywhere")

    above = (rms >= config.attack_threshold * peak).astype(np.int8)
    edges = np.diff(np.concatenate(([0], above, [0])))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1)  # exclusive
    if starts.size == 0:
        raise NoEvents("no frame reaches the attack threshold")

    frame_seconds = config.hop_length / buf.sample_rate
    durations = []
    for start, stop in zip(starts, stops):
        event = rms[start:stop]
        # framewise RMS of a steady tone ripples by a percent or two
        reached = event >= (1.0 - config.attack_peak_tolerance) * event.max()
        top = int(np.argmax(reached))
        durations.append((top + 1) * frame_seconds)
    return durations


def irregularity_from_beats(track: BeatTrack) -> float:
    """Mean relative deviation of inter-beat intervals from the tempo period."""
    if track.beat_times.size < MIN_IRREGULARITY_BEATS:
        raise InsufficientBeats(
            f"{track.beat_times.size} beats tracked, need {MIN_IRREGULARITY_BEATS}"
        )
    period = track.period_seconds
    intervals = np.diff(track.beat_times)
    return float(np.mean(np.abs(intervals - period) / period))


class CueExtractor:
    """
    Extract the eight raw acoustic cues from audio or MIDI tracks.

    The beat track is computed once per buffer and shared by the tempo and
    irregularity cues.
    """

    def __init__(self, config: AnalysisConfig = DEFAULT_CONFIG):
        """
        Initialize cue extractor.

        Args:
            config: Analysis configuration (frame geometry, priors, thresholds)
        """
        self.config = config

    def track_beats(self, buf: AudioBuffer) -> BeatTrack:
        """Tracked and sub-frame refined beats."""
        track = beat_track(onset_strength(buf, self.config), self.config)
        return refine_beats(buf, track, self.config)

    def beat_irregularity(self, buf: AudioBuffer) -> float:
        """
        Mean |(t[i+1] - t[i]) - T| / T over tracked beats, T = 60 / tempo.

        Raises:
            InsufficientOnsets: No trackable pulse
            InsufficientBeats: Fewer than 4 beats
        """
        return irregularity_from_beats(self.track_beats(buf))

    def extract(self, buf: AudioBuffer) -> CueVector:
        """
        Compute every cue for one buffer.

        Args:
            buf: Buffer at the analysis rate

        Returns:
            CueVector; cues that could not be measured are missing with a reason

        Raises:
            TooShort: Buffer shorter than ``min_duration_seconds``
        """
        if buf.duration_seconds < self.config.min_duration_seconds:
            raise TooShort(
                f"{buf.duration_seconds:.3f} s is shorter than "
                f"{self.config.min_duration_seconds:.1f} s"
            )
        cfg = self.config
        values: Dict[CueId, Optional[float]] = {}
        reasons: Dict[CueId, str] = {}

        def measure(cues: List[CueId], compute: Callable[[], List[Optional[float]]]) -> None:
            try:
                results = compute()
            except AnalysisError as e:
                for cue in cues:
                    values[cue] = None
                    reasons[cue] = e.reason
                logger.debug("%s missing: %s", ", ".join(c.value for c in cues), e.message)
                return
            for cue, value in zip(cues, results):
                values[cue] = value
                if value is None:
                    reasons[cue] = NO_VOICED_FRAMES

        rms = rms_envelope(buf, cfg.frame_length, cfg.hop_length).values
        values[CueId.SOUND_LEVEL] = float(np.mean(rms))
        values[CueId.SOUND_LEVEL_VARIABILITY] = float(np.std(rms))
        values[CueId.HIGH_FREQUENCY_ENERGY] = float(
            np.mean(spectral_bandwidth(buf, cfg.frame_length, cfg.hop_length).values)
        )

        measure([CueId.PITCH_LEVEL, CueId.PITCH_VARIABILITY], lambda: self._pitch_cues(buf))
        measure(
            [CueId.TONE_ATTACK_SPEED],
            lambda: [float(np.mean(attack_durations(buf, cfg)))],
        )

        try:
            track: Optional[BeatTrack] = self.track_beats(buf)
        except AnalysisError as e:
            track = None
            for cue in (CueId.TEMPO, CueId.MICROSTRUCTURAL_IRREGULARITY):
                values[cue] = None
                reasons[cue] = e.reason
        if track is not None:
            values[CueId.TEMPO] = track.tempo_bpm
            measure([CueId.MICROSTRUCTURAL_IRREGULARITY], lambda: [irregularity_from_beats(track)])

        return CueVector(values=values, reasons=reasons)

    def _pitch_cues(self, buf: AudioBuffer) -> List[Optional[float]]:
        cfg = self.config
        track = yin_f0(
            buf, cfg.yin_fmin, cfg.yin_fmax, cfg.frame_length, cfg.hop_length, cfg.yin_threshold
        )
        f0 = track.voiced_f0()
        if f0.size == 0:
            return [None, None]
        median = float(np.median(f0))
        semitones = 12.0 * np.log2(f0 / median)
        return [median, float(np.std(semitones))]

    def extract_file(self, path: Union[str, Path]) -> CueVector:
        """
        Load a .wav (resampled) or .mid (rendered through the WAV codec) and extract cues.
        """
        path = Path(path)
        suffix = path.suffix.lower()
        if suffix in MIDI_SUFFIXES:
            buf = render_midi_as_wav(path, self.config.sample_rate)
        elif suffix in AUDIO_SUFFIXES:
            buf = load_audio(path, self.config.sample_rate)
        else:
            raise UnsupportedEncoding(f"{path.name}: expected .wav, .mid or .midi")
        return self.extract(buf)


def extract_cues(buf: AudioBuffer, config: AnalysisConfig = DEFAULT_CONFIG) -> CueVector:
    """
    Convenience function to extract the cue vector of one buffer.

    Args:
        buf: Buffer at the analysis rate
        config: Analysis configuration

    Returns:
        CueVector
    """
    return CueExtractor(config).extract(buf)


def beat_irregularity(buf: AudioBuffer, config: AnalysisConfig = DEFAULT_CONFIG) -> float:
    """Convenience function for the microstructural irregularity of one buffer."""
    return CueExtractor(config).beat_irregularity(buf)
