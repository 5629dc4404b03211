"""
Standard MIDI File parsing and fixed-timbre synthesis.
"""

from src.midi_render.smf_parser import TempoMap, parse_smf, read_smf_file
from src.midi_render.synthesizer import (
    adsr_envelope,
    midi_to_hz,
    render_midi_as_wav,
    render_midi_file,
    synthesize,
)

__all__ = [
    "TempoMap",
    "parse_smf",
    "read_smf_file",
    "adsr_envelope",
    "midi_to_hz",
    "render_midi_as_wav",
    "render_midi_file",
    "synthesize",
]
