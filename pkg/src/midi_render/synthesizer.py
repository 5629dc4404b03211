"""
Expression-free additive synthesizer for rendered MIDI timelines.

Every note gets the same timbre and envelope so only the composed notes (pitch,
timing, velocity-as-amplitude) reach the cue extractors.
"""

from pathlib import Path
from typing import Union

import numpy as np

from src.audio_io.wav_codec import decode_wav, encode_wav
from src.data_models.models import AudioBuffer, NoteEvent, Timeline
from src.midi_render.smf_parser import read_smf_file
from src.utils.error_handler import get_logger
from src.utils.settings import DEFAULT_CONFIG

logger = get_logger("midi_render")

HARMONIC_AMPLITUDES = (1.0, 1 / 2, 1 / 3, 1 / 4)
ATTACK_SECONDS = 0.010
DECAY_SECONDS = 0.050
SUSTAIN_LEVEL = 0.7
RELEASE_SECONDS = 0.050
PEAK_LEVEL = 10 ** (-1 / 20)  # -1 dBFS
SILENCE_SECONDS = 0.1


def midi_to_hz(pitch: int) -> float:
    """Equal-tempered fundamental, A4 (69) = 440 Hz."""
    return 440.0 * 2.0 ** ((pitch - 69) / 12.0)


def adsr_envelope(duration: float, sample_rate: int) -> np.ndarray:
    """
    Fixed ADSR for a note held ``duration`` seconds, release tail included.

    Attack and decay are linear; a note released before the decay ends releases
    from whatever level it had reached.
    """
    n = int(np.ceil((duration + RELEASE_SECONDS) * sample_rate))
    t = np.arange(n) / sample_rate
    breakpoints = [0.0, ATTACK_SECONDS, ATTACK_SECONDS + DECAY_SECONDS]
    levels = [0.0, 1.0, SUSTAIN_LEVEL]
    held = np.interp(t, breakpoints, levels)
    release_from = float(np.interp(duration, breakpoints, levels))
    released = release_from * np.clip(1.0 - (t - duration) / RELEASE_SECONDS, 0.0, 1.0)
    return np.where(t < duration, held, released)


def render_note(note: NoteEvent, sample_rate: int) -> np.ndarray:
    """Four-harmonic tone for one note, scaled by velocity/127."""
    envelope = adsr_envelope(note.duration_seconds, sample_rate)
    t = np.arange(envelope.shape[0]) / sample_rate
    f0 = midi_to_hz(note.pitch)
    tone = np.zeros_like(t)
    for k, amplitude in enumerate(HARMONIC_AMPLITUDES, start=1):
        if k * f0 >= sample_rate / 2:
            break
        tone += amplitude * np.sin(2.0 * np.pi * k * f0 * t)
    return (note.velocity / 127.0) * envelope * tone


def synthesize(timeline: Timeline, sample_rate: int = DEFAULT_CONFIG.sample_rate) -> AudioBuffer:
    """
    Render a timeline to a mono buffer peak-normalized to -1 dBFS.

    Notes are summed in timeline order so the mix is bit-reproducible. An empty
    timeline renders as 0.1 s of silence.

    Args:
        timeline: Parsed notes
        sample_rate: Output rate in Hz

    Returns:
        AudioBuffer of length ceil((last note end + release) * rate)
    """
    if not timeline.notes:
        logger.warning("timeline has no pitched notes; rendering %.1f s of silence", SILENCE_SECONDS)
        return AudioBuffer(np.zeros(int(round(SILENCE_SECONDS * sample_rate))), sample_rate)

    end = max(n.end_seconds for n in timeline.notes) + RELEASE_SECONDS
    mix = np.zeros(int(np.ceil(end * sample_rate)) + 1)
    for note in timeline.notes:
        rendered = render_note(note, sample_rate)
        start = int(round(note.onset_seconds * sample_rate))
        stop = min(start + rendered.shape[0], mix.shape[0])
        mix[start:stop] += rendered[: stop - start]

    peak = float(np.max(np.abs(mix)))
    if peak > 0:
        mix *= PEAK_LEVEL / peak
    return AudioBuffer(mix, sample_rate)


def render_midi_file(
    path: Union[str, Path], sample_rate: int = DEFAULT_CONFIG.sample_rate
) -> AudioBuffer:
    """Parse and synthesize a .mid file in memory."""
    return synthesize(read_smf_file(path), sample_rate)


def render_midi_as_wav(
    path: Union[str, Path], sample_rate: int = DEFAULT_CONFIG.sample_rate
) -> AudioBuffer:
    """
    Render a .mid file through the 16-bit WAV codec.

    Analysing this buffer gives the same cues as analysing the .wav the
    ``render-midi`` command writes for the same file.
    """
    return decode_wav(encode_wav(render_midi_file(path, sample_rate)))
