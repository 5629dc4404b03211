"""
Deterministic test signal and MIDI generators.

Every generator is its own oracle: the click times, amplitudes and note lists it
builds are returned or known exactly.
"""

import io
from typing import Iterable, List, Optional, Sequence, Tuple

import mido
import numpy as np

from src.data_models.models import AudioBuffer

SR = 22050
HOP = 512
CLICK_SECONDS = 0.02


def sine(freq: float = 440.0, seconds: float = 30.0, amplitude: float = 0.5, sr: int = SR) -> AudioBuffer:
    t = np.arange(int(round(seconds * sr))) / sr
    return AudioBuffer(amplitude * np.sin(2 * np.pi * freq * t), sr)


def square(freq: float = 220.0, seconds: float = 5.0, amplitude: float = 1.0, sr: int = SR) -> AudioBuffer:
    t = np.arange(int(round(seconds * sr))) / sr
    wave = np.where(np.sin(2 * np.pi * freq * t) >= 0, 1.0, -1.0)
    return AudioBuffer(amplitude * wave, sr)


def silence(seconds: float = 30.0, sr: int = SR) -> AudioBuffer:
    return AudioBuffer(np.zeros(int(round(seconds * sr))), sr)


def white_noise(seconds: float = 5.0, amplitude: float = 0.3, seed: int = 0, sr: int = SR) -> AudioBuffer:
    rng = np.random.default_rng(seed)
    return AudioBuffer(np.clip(rng.normal(0, amplitude, int(round(seconds * sr))), -1, 1), sr)


def _click(sr: int, amplitude: float, freq: float = 1000.0) -> np.ndarray:
    t = np.arange(int(round(CLICK_SECONDS * sr))) / sr
    return amplitude * np.cos(2 * np.pi * freq * t) * np.exp(-t / 0.004)


def clicks_at(
    times: Sequence[float], seconds: float, amplitude: float = 0.9, sr: int = SR,
    freq: float = 1000.0,
) -> AudioBuffer:
    """Decaying cosine bursts starting exactly at ``times`` (seconds)."""
    out = np.zeros(int(round(seconds * sr)))
    burst = _click(sr, amplitude, freq)
    for t in times:
        start = int(round(t * sr))
        stop = min(start + burst.shape[0], out.shape[0])
        out[start:stop] += burst[: stop - start]
    return AudioBuffer(np.clip(out, -1, 1), sr)


def click_times(bpm: float = 120.0, seconds: float = 30.0, start: float = 0.5) -> np.ndarray:
    period = 60.0 / bpm
    return np.arange(start, seconds - 0.1, period)


def click_track(
    bpm: float = 120.0, seconds: float = 30.0, amplitude: float = 0.9, sr: int = SR,
    freq: float = 1000.0,
) -> Tuple[AudioBuffer, np.ndarray]:
    times = click_times(bpm, seconds)
    return clicks_at(times, seconds, amplitude, sr, freq), times


def jittered_click_track(
    bpm: float = 120.0, seconds: float = 30.0, jitter: float = 0.1, seed: int = 7, sr: int = SR,
) -> Tuple[AudioBuffer, np.ndarray]:
    """Clicks displaced by uniform offsets within +-``jitter`` of the period."""
    period = 60.0 / bpm
    nominal = click_times(bpm, seconds, start=1.0)
    rng = np.random.default_rng(seed)
    times = nominal + rng.uniform(-jitter, jitter, nominal.shape[0]) * period
    return clicks_at(times, seconds, sr=sr), times


def expected_irregularity(times: np.ndarray) -> float:
    """Irregularity of a known beat sequence with T taken from its median interval."""
    intervals = np.diff(times)
    period = np.median(intervals)
    return float(np.mean(np.abs(intervals - period) / period))


def gated_tone(
    freq: float = 440.0, on_frames: int = 20, off_frames: int = 20, count: int = 10,
    amplitude: float = 0.5, sr: int = SR,
) -> AudioBuffer:
    """Tone bursts with instant onsets on hop boundaries."""
    period = (on_frames + off_frames) * HOP
    n = period * count + off_frames * HOP
    t = np.arange(n) / sr
    gate = np.zeros(n)
    for k in range(count):
        start = off_frames * HOP + k * period
        gate[start:start + on_frames * HOP] = 1.0
    return AudioBuffer(amplitude * gate * np.sin(2 * np.pi * freq * t), sr)


def faded_tone(
    fade_seconds: float = 0.2, seconds: float = 3.0, lead_frames: int = 20,
    freq: float = 440.0, amplitude: float = 0.5, sr: int = SR,
) -> AudioBuffer:
    """Silence, then a tone whose amplitude rises linearly over ``fade_seconds``."""
    n = int(round(seconds * sr))
    start = lead_frames * HOP
    t = (np.arange(n) - start) / sr
    envelope = np.clip(t / fade_seconds, 0.0, 1.0)
    return AudioBuffer(amplitude * envelope * np.sin(2 * np.pi * freq * np.maximum(t, 0)), sr)


# ---------------------------------------------------------------------------
# Standard MIDI Files
# ---------------------------------------------------------------------------

Note = Tuple[int, int, int, int, int]  # (start tick, duration ticks, pitch, velocity, channel)


def smf_bytes(
    notes: Iterable[Note],
    ticks_per_beat: int = 480,
    tempo: int = 500000,
    midi_type: int = 1,
    tempo_changes: Optional[List[Tuple[int, int]]] = None,
    dangling: Optional[List[Tuple[int, int, int]]] = None,
) -> bytes:
    """
    Build an SMF with a conductor track (tempo) and one note track.

    Args:
        notes: Notes to write
        ticks_per_beat: Division
        tempo: Initial microseconds per quarter
        midi_type: SMF format (0 puts everything in one track)
        tempo_changes: Extra (tick, tempo) changes
        dangling: (tick, pitch, channel) note-ons never released
    """
    events: List[Tuple[int, int, mido.Message]] = []
    for start, duration, pitch, velocity, channel in notes:
        events.append((start, 1, mido.Message("note_on", note=pitch, velocity=velocity, channel=channel)))
        events.append((start + duration, 0, mido.Message("note_off", note=pitch, velocity=0, channel=channel)))
    for tick, pitch, channel in dangling or []:
        events.append((tick, 1, mido.Message("note_on", note=pitch, velocity=100, channel=channel)))
    events.sort(key=lambda e: (e[0], e[1]))

    tempos = [(0, tempo)] + sorted(tempo_changes or [])
    conductor = mido.MidiTrack()
    last = 0
    for tick, value in tempos:
        conductor.append(mido.MetaMessage("set_tempo", tempo=value, time=tick - last))
        last = tick

    track = mido.MidiTrack()
    last = 0
    for tick, _, msg in events:
        track.append(msg.copy(time=tick - last))
        last = tick
    if dangling:
        # keep the track running past the dangling note so it closes at a known tick
        track.append(mido.MetaMessage("end_of_track", time=ticks_per_beat))

    midi = mido.MidiFile(type=midi_type, ticks_per_beat=ticks_per_beat)
    if midi_type == 0:
        merged = mido.merge_tracks([conductor, track])
        midi.tracks.append(merged)
    else:
        midi.tracks.append(conductor)
        midi.tracks.append(track)
    buffer = io.BytesIO()
    midi.save(file=buffer)
    return buffer.getvalue()


def metronome_notes(
    beats: int = 60, ticks_per_beat: int = 480, pitch: int = 69, velocity: int = 100,
    duration_beats: float = 0.5,
) -> List[Note]:
    """One note per quarter note."""
    length = int(ticks_per_beat * duration_beats)
    return [(k * ticks_per_beat, length, pitch, velocity, 0) for k in range(beats)]
