"""
RIFF/WAVE decoding to normalized mono buffers, and 16-bit PCM encoding.

The RIFF chunk table is inspected first so container damage and unsupported
encodings can be reported distinctly; sample decoding is done by scipy.io.wavfile.
"""

import io
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np
from scipy.io import wavfile

from src.data_models.models import AudioBuffer
from src.utils.error_handler import (
    EmptyAudio,
    InputNotFound,
    MalformedContainer,
    UnsupportedEncoding,
)

WAVE_FORMAT_PCM = 0x0001
WAVE_FORMAT_IEEE_FLOAT = 0x0003
WAVE_FORMAT_EXTENSIBLE = 0xFFFE

# (format tag, bits per sample) pairs the decoder accepts
SUPPORTED_ENCODINGS = {
    (WAVE_FORMAT_PCM, 16),
    (WAVE_FORMAT_PCM, 24),
    (WAVE_FORMAT_IEEE_FLOAT, 32),
}


@dataclass(frozen=True)
class WaveFormat:
    """Fields of the 'fmt ' chunk the decoder cares about."""
    format_tag: int
    channels: int
    sample_rate: int
    bits_per_sample: int
    data_bytes: int


def inspect_riff(data: bytes) -> WaveFormat:
    """
    Walk the RIFF chunk table and validate the format chunk.

    Args:
        data: Complete file contents

    Returns:
        WaveFormat describing the sample encoding

    Raises:
        MalformedContainer: Bad magic, truncated chunk or missing fmt/data chunk
        UnsupportedEncoding: Compressed format, unsupported bit depth or > 2 channels
    """
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise MalformedContainer("missing RIFF/WAVE header")

    fmt_chunk = None
    data_bytes = None
    offset = 12
    while offset + 8 <= len(data):
        chunk_id = data[offset:offset + 4]
        (chunk_size,) = struct.unpack("<I", data[offset + 4:offset + 8])
        body_start = offset + 8
        body_end = body_start + chunk_size
        if body_end > len(data):
            raise MalformedContainer(
                f"chunk {chunk_id!r} claims {chunk_size} bytes but only "
                f"{len(data) - body_start} remain"
            )
        if chunk_id == b"fmt ":
            fmt_chunk = data[body_start:body_end]
        elif chunk_id == b"data":
            data_bytes = chunk_size
        # chunks are word aligned
        offset = body_end + (chunk_size & 1)

    if fmt_chunk is None or len(fmt_chunk) < 16:
        raise MalformedContainer("missing or short 'fmt ' chunk")
    if data_bytes is None:
        raise MalformedContainer("missing 'data' chunk")

    format_tag, channels, sample_rate, _, _, bits = struct.unpack("<HHIIHH", fmt_chunk[:16])
    if format_tag == WAVE_FORMAT_EXTENSIBLE:
        if len(fmt_chunk) < 26:
            raise MalformedContainer("short WAVE_FORMAT_EXTENSIBLE chunk")
        # first two bytes of the sub-format GUID carry the actual format tag
        (format_tag,) = struct.unpack("<H", fmt_chunk[24:26])

    if (format_tag, bits) not in SUPPORTED_ENCODINGS:
        raise UnsupportedEncoding(
            f"format tag 0x{format_tag:04x} with {bits} bits per sample",
            details={"format_tag": format_tag, "bits_per_sample": bits},
        )
    if channels not in (1, 2):
        raise UnsupportedEncoding(f"{channels} channels (only mono or stereo)")
    if sample_rate <= 0:
        raise MalformedContainer("sample rate of zero")

    return WaveFormat(format_tag, channels, sample_rate, bits, data_bytes)


def decode_wav(data: bytes) -> AudioBuffer:
    """
    Decode WAV bytes into a mono buffer in [-1, 1] at the file's own rate.

    Integer PCM is scaled by 2^(bits-1); stereo is mixed down by the per-sample mean.

    Args:
        data: RIFF/WAVE file contents

    Returns:
        AudioBuffer at the original sample rate
    """
    wave_format = inspect_riff(data)

    try:
        rate, samples = wavfile.read(io.BytesIO(data))
    except ValueError as e:
        raise MalformedContainer(f"unreadable sample data: {e}") from e

    if samples.size == 0:
        raise EmptyAudio("container holds zero samples")

    if np.issubdtype(samples.dtype, np.integer):
        # scipy returns 24-bit PCM left-justified in int32, so the dtype width is the scale
        scale = float(2 ** (np.iinfo(samples.dtype).bits - 1))
        audio = samples.astype(np.float64) / scale
    else:
        audio = samples.astype(np.float64)

    if audio.ndim == 2:
        audio = audio.mean(axis=1) if wave_format.channels == 2 else audio[:, 0]

    return AudioBuffer(np.clip(audio, -1.0, 1.0), int(rate))


def encode_wav(buf: AudioBuffer) -> bytes:
    """
    Encode a buffer as 16-bit PCM mono WAV bytes.

    Args:
        buf: Buffer to encode

    Returns:
        RIFF/WAVE file contents
    """
    pcm = np.round(np.clip(buf.samples, -1.0, 1.0) * 32767.0).astype("<i2")
    out = io.BytesIO()
    wavfile.write(out, buf.sample_rate, pcm)
    return out.getvalue()


def read_wav_file(path: Union[str, Path]) -> AudioBuffer:
    """Read and decode a .wav file from disk."""
    path = Path(path)
    if not path.is_file():
        raise InputNotFound(f"{path} does not exist or is not a file")
    return decode_wav(path.read_bytes())


def write_wav_file(path: Union[str, Path], buf: AudioBuffer) -> None:
    """Write a buffer to disk as 16-bit PCM mono WAV."""
    Path(path).write_bytes(encode_wav(buf))
