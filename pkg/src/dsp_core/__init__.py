"""Framewise DSP: spectra, RMS, onset strength, beat tracking and YIN pitch."""

from src.dsp_core.spectral import rms_envelope, spectral_bandwidth, stft_magnitude
from src.dsp_core.rhythm import beat_track, onset_strength, refine_beats
from src.dsp_core.pitch import yin_f0

__all__ = [
    'stft_magnitude',
    'rms_envelope',
    'spectral_bandwidth',
    'onset_strength',
    'beat_track',
    'refine_beats',
    'yin_f0',
]
