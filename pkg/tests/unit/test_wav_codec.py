"""
Unit tests for the WAV codec and resampler.
"""

import io
import struct

import numpy as np
import pytest
from scipy.io import wavfile

from src.audio_io.resampler import load_audio, resample
from src.audio_io.wav_codec import decode_wav, encode_wav, read_wav_file, write_wav_file
from src.data_models.models import AudioBuffer
from src.utils.error_handler import (
    EmptyAudio,
    InputNotFound,
    InvalidRate,
    MalformedContainer,
    UnsupportedEncoding,
)
from tests.signals import sine


def wav_bytes(rate: int, samples: np.ndarray) -> bytes:
    out = io.BytesIO()
    wavfile.write(out, rate, samples)
    return out.getvalue()


def riff(chunks: bytes) -> bytes:
    return b"RIFF" + struct.pack("<I", 4 + len(chunks)) + b"WAVE" + chunks


def fmt_chunk(format_tag: int, channels: int, rate: int, bits: int) -> bytes:
    block = channels * bits // 8
    body = struct.pack("<HHIIHH", format_tag, channels, rate, rate * block, block, bits)
    return b"fmt " + struct.pack("<I", len(body)) + body


class TestDecodeWav:
    """Tests for decode_wav."""

    def test_int16_scaling(self):
        """Integer PCM divides by 2^(bits-1)."""
        buf = decode_wav(wav_bytes(8000, np.array([0, 16384, -32768], dtype=np.int16)))
        np.testing.assert_allclose(buf.samples, [0.0, 0.5, -1.0])
        assert buf.sample_rate == 8000

    def test_float32(self):
        buf = decode_wav(wav_bytes(44100, np.array([0.25, -0.75], dtype=np.float32)))
        np.testing.assert_allclose(buf.samples, [0.25, -0.75])

    def test_stereo_mixdown(self):
        """Stereo is mixed to mono by the per-sample mean."""
        stereo = np.array([[16384, 0], [-16384, -16384]], dtype=np.int16)
        buf = decode_wav(wav_bytes(8000, stereo))
        np.testing.assert_allclose(buf.samples, [0.25, -0.5])

    def test_24_bit(self):
        """24-bit PCM written by hand decodes to the same scale."""
        values = [0, 2 ** 22, -(2 ** 23)]
        payload = b"".join(v.to_bytes(3, "little", signed=True) for v in values)
        data = riff(fmt_chunk(1, 1, 8000, 24) + b"data" + struct.pack("<I", len(payload)) + payload)
        buf = decode_wav(data)
        np.testing.assert_allclose(buf.samples, [0.0, 0.5, -1.0])

    def test_bad_magic(self):
        with pytest.raises(MalformedContainer):
            decode_wav(b"RIFX" + b"\x00" * 40)

    def test_chunk_overruns_file(self):
        """A chunk claiming more bytes than remain is malformed."""
        data = riff(fmt_chunk(1, 1, 8000, 16) + b"data" + struct.pack("<I", 1000) + b"\x00\x00")
        with pytest.raises(MalformedContainer):
            decode_wav(data)

    def test_missing_data_chunk(self):
        with pytest.raises(MalformedContainer):
            decode_wav(riff(fmt_chunk(1, 1, 8000, 16)))

    def test_unsupported_bit_depth(self):
        data = riff(fmt_chunk(1, 1, 8000, 8) + b"data" + struct.pack("<I", 2) + b"\x80\x80")
        with pytest.raises(UnsupportedEncoding):
            decode_wav(data)

    def test_compressed_format(self):
        """mu-law (tag 7) is not decoded."""
        data = riff(fmt_chunk(7, 1, 8000, 16) + b"data" + struct.pack("<I", 2) + b"\x00\x00")
        with pytest.raises(UnsupportedEncoding):
            decode_wav(data)

    def test_too_many_channels(self):
        data = riff(fmt_chunk(1, 3, 8000, 16) + b"data" + struct.pack("<I", 6) + b"\x00" * 6)
        with pytest.raises(UnsupportedEncoding):
            decode_wav(data)

    def test_empty_audio(self):
        with pytest.raises(EmptyAudio):
            decode_wav(wav_bytes(8000, np.zeros(0, dtype=np.int16)))


class TestEncodeWav:
    """Tests for encode_wav and the file helpers."""

    def test_encode_decode_within_quantization(self):
        buf = sine(440.0, seconds=0.5)
        decoded = decode_wav(encode_wav(buf))
        assert decoded.sample_rate == buf.sample_rate
        assert np.max(np.abs(decoded.samples - buf.samples)) <= 2.0 / 32768

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "tone.wav"
        write_wav_file(path, sine(seconds=0.25))
        assert read_wav_file(path).sample_rate == 22050

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputNotFound):
            read_wav_file(tmp_path / "absent.wav")


class TestResample:
    """Tests for resample."""

    def test_identity(self):
        buf = sine(seconds=0.1)
        assert resample(buf, buf.sample_rate) is buf

    def test_length(self):
        """Output length is ceil(len * target / source)."""
        buf = AudioBuffer(np.zeros(44101), 44100)
        assert len(resample(buf, 22050)) == 22051

    def test_preserves_tone(self):
        """A 1 kHz tone keeps its frequency through 44.1 kHz -> 22.05 kHz."""
        src = sine(1000.0, seconds=1.0, sr=44100)
        out = resample(src, 22050)
        spectrum = np.abs(np.fft.rfft(out.samples))
        peak_hz = np.argmax(spectrum) * 22050 / len(out)
        assert peak_hz == pytest.approx(1000.0, abs=2.0)

    def test_invalid_rate(self):
        with pytest.raises(InvalidRate):
            resample(sine(seconds=0.1), 0)

    def test_empty_buffer(self):
        with pytest.raises(EmptyAudio):
            resample(AudioBuffer(np.zeros(0), 8000), 22050)

    def test_load_audio(self, tmp_path):
        path = tmp_path / "hi.wav"
        write_wav_file(path, sine(seconds=0.5, sr=44100))
        assert load_audio(path).sample_rate == 22050
