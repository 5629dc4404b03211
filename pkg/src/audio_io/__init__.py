"""
WAV decoding, encoding and resampling to the analysis rate.
"""

from src.audio_io.wav_codec import (
    decode_wav,
    encode_wav,
    inspect_riff,
    read_wav_file,
    write_wav_file,
)
from src.audio_io.resampler import load_audio, resample

__all__ = [
    "decode_wav",
    "encode_wav",
    "inspect_riff",
    "read_wav_file",
    "write_wav_file",
    "load_audio",
    "resample",
]
