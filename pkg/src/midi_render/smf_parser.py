"""
Standard MIDI File parsing into a tempo-mapped note timeline.

mido decodes the chunk and event structure (running status included); this module
pairs note-on/note-off events per track and converts ticks to seconds through the
file-wide tempo map.
"""

import io
import warnings
from bisect import bisect_right
from collections import defaultdict, deque
from pathlib import Path
from typing import Deque, Dict, List, Tuple, Union

import mido

from src.data_models.models import NoteEvent, Timeline
from src.utils.error_handler import (
    DanglingNoteWarning,
    InputNotFound,
    MalformedSMF,
    UnsupportedFormat,
    get_logger,
)

logger = get_logger("midi_render")

DEFAULT_TEMPO = 500000  # microseconds per quarter note (120 BPM)
PERCUSSION_CHANNEL = 9


class TempoMap:
    """
    Piecewise-constant tempo map converting absolute ticks to seconds.

    Tempo changes from every track apply file-wide, as in format 1 conductor tracks.
    """

    def __init__(self, ticks_per_beat: int, changes: List[Tuple[int, int]]):
        """
        Args:
            ticks_per_beat: SMF division (ticks per quarter note)
            changes: (absolute tick, microseconds per quarter) pairs in any order
        """
        self.ticks_per_beat = ticks_per_beat
        points: Dict[int, int] = {0: DEFAULT_TEMPO}
        for tick, tempo in sorted(changes, key=lambda c: c[0]):
            points[tick] = tempo  # later change at the same tick wins
        self._ticks = sorted(points)
        self._tempos = [points[t] for t in self._ticks]

        # seconds elapsed at the start of each segment
        self._seconds = [0.0]
        for i in range(1, len(self._ticks)):
            span = self._ticks[i] - self._ticks[i - 1]
            self._seconds.append(
                self._seconds[-1] + mido.tick2second(span, ticks_per_beat, self._tempos[i - 1])
            )

    def to_seconds(self, tick: int) -> float:
        """Absolute tick to seconds from the start of the file."""
        i = bisect_right(self._ticks, tick) - 1
        return self._seconds[i] + mido.tick2second(
            tick - self._ticks[i], self.ticks_per_beat, self._tempos[i]
        )


def _load_midifile(data: bytes) -> mido.MidiFile:
    try:
        midi = mido.MidiFile(file=io.BytesIO(data))
    except (OSError, EOFError, ValueError, KeyError, IndexError) as e:
        raise MalformedSMF(f"cannot parse SMF: {e}") from e
    if midi.type == 2:
        raise UnsupportedFormat("SMF format 2 (independent sequences) is not supported")
    if midi.ticks_per_beat <= 0 or midi.ticks_per_beat > 0x7FFF:
        raise MalformedSMF("SMPTE or zero time division is not supported")
    return midi


def parse_smf(data: bytes) -> Timeline:
    """
    Parse SMF format 0/1 bytes into a Timeline.

    Note-on with velocity 0 counts as note-off. Percussion (channel index 9) is
    dropped. A note still sounding at the end of its track is closed there and a
    DanglingNoteWarning is issued.

    Args:
        data: SMF file contents

    Returns:
        Timeline with notes sorted by (onset, channel, pitch)
    """
    midi = _load_midifile(data)

    tempo_changes: List[Tuple[int, int]] = []
    for track in midi.tracks:
        tick = 0
        for msg in track:
            tick += msg.time
            if msg.type == "set_tempo":
                tempo_changes.append((tick, msg.tempo))
    tempo_map = TempoMap(midi.ticks_per_beat, tempo_changes)

    notes: List[NoteEvent] = []
    dangling = 0
    for track_index, track in enumerate(midi.tracks):
        open_notes: Dict[Tuple[int, int], Deque[Tuple[int, int]]] = defaultdict(deque)
        tick = 0
        for msg in track:
            tick += msg.time
            if msg.type not in ("note_on", "note_off") or msg.channel == PERCUSSION_CHANNEL:
                continue
            key = (msg.channel, msg.note)
            if msg.type == "note_on" and msg.velocity > 0:
                open_notes[key].append((tick, msg.velocity))
            elif open_notes[key]:
                start_tick, velocity = open_notes[key].popleft()
                _append_note(notes, tempo_map, key, start_tick, tick, velocity)

        for key, pending in open_notes.items():
            for start_tick, velocity in pending:
                dangling += 1
                _append_note(notes, tempo_map, key, start_tick, tick, velocity)
                logger.warning(
                    "track %d: note %d on channel %d never released; closed at end of track",
                    track_index, key[1], key[0],
                )

    if dangling:
        warnings.warn(f"{dangling} dangling note-on events closed at end of track", DanglingNoteWarning)

    notes.sort(key=NoteEvent.sort_key)
    total = max((n.end_seconds for n in notes), default=0.0)
    return Timeline(notes=notes, total_seconds=total)


def _append_note(
    notes: List[NoteEvent],
    tempo_map: TempoMap,
    key: Tuple[int, int],
    start_tick: int,
    end_tick: int,
    velocity: int,
) -> None:
    onset = tempo_map.to_seconds(start_tick)
    duration = tempo_map.to_seconds(end_tick) - onset
    if duration <= 0:
        logger.debug("dropping zero-length note %d on channel %d", key[1], key[0])
        return
    notes.append(
        NoteEvent(
            onset_seconds=onset,
            duration_seconds=duration,
            pitch=key[1],
            velocity=velocity,
            channel=key[0],
        )
    )


def read_smf_file(path: Union[str, Path]) -> Timeline:
    """Parse a .mid/.midi file from disk."""
    path = Path(path)
    if not path.is_file():
        raise InputNotFound(f"{path} does not exist or is not a file")
    return parse_smf(path.read_bytes())
