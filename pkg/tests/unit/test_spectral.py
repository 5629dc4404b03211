"""
Unit tests for framewise spectra, RMS and bandwidth.
"""

import numpy as np
import pytest
from scipy.signal import get_window

from src.data_models.models import AudioBuffer
from src.dsp_core.spectral import check_framing, rms_envelope, spectral_bandwidth, stft_magnitude
from src.utils.error_handler import InvalidFraming
from tests.signals import silence, sine, white_noise


class TestStftMagnitude:
    """Tests for stft_magnitude."""

    def test_shape(self):
        buf = sine(seconds=1.0)
        mag = stft_magnitude(buf, 2048, 512)
        assert mag.shape == (1 + len(buf) // 512, 1025)

    def test_peak_bin(self):
        """A 440 Hz tone peaks in bin round(440 * 2048 / 22050) = 41."""
        mag = stft_magnitude(sine(440.0, seconds=2.0))
        assert int(np.argmax(mag[20])) == 41

    def test_matches_windowed_fft(self):
        """An interior frame is the rFFT of the Hann-windowed centred segment."""
        buf = white_noise(seconds=1.0, seed=3)
        k = 10
        segment = buf.samples[k * 512 - 1024:k * 512 + 1024] * get_window("hann", 2048, fftbins=True)
        expected = np.abs(np.fft.rfft(segment))
        np.testing.assert_allclose(stft_magnitude(buf)[k], expected, rtol=1e-6, atol=1e-8)

    def test_parseval(self):
        """Energy of an interior frame's full spectrum is N times its windowed energy."""
        buf = white_noise(seconds=1.0, seed=5)
        k = 12
        segment = buf.samples[k * 512 - 1024:k * 512 + 1024] * get_window("hann", 2048, fftbins=True)
        mag = stft_magnitude(buf)[k]
        spectral_energy = mag[0] ** 2 + mag[-1] ** 2 + 2.0 * np.sum(mag[1:-1] ** 2)
        assert spectral_energy == pytest.approx(2048 * np.sum(segment ** 2), rel=1e-6)

    def test_invalid_framing(self):
        with pytest.raises(InvalidFraming):
            stft_magnitude(sine(seconds=0.1), 256, 512)
        with pytest.raises(InvalidFraming):
            check_framing(2048, 0)


class TestRmsEnvelope:
    """Tests for rms_envelope."""

    def test_sine_level(self):
        """RMS of a steady sine is A / sqrt(2)."""
        env = rms_envelope(sine(440.0, seconds=2.0, amplitude=0.5))
        np.testing.assert_allclose(env.values, 0.5 / np.sqrt(2), rtol=0.01)

    def test_frame_count(self):
        """Non-centred frames: 1 + (N - frame) // hop."""
        buf = sine(seconds=1.0)
        assert len(rms_envelope(buf, 2048, 512)) == 1 + (len(buf) - 2048) // 512

    def test_silence(self):
        assert not np.any(rms_envelope(silence(seconds=1.0)).values)

    @pytest.mark.parametrize("k", [0.5, 0.1, 0.01])
    def test_scales_with_amplitude(self, k):
        buf = white_noise(seconds=2.0, seed=4)
        np.testing.assert_allclose(
            rms_envelope(buf.scaled(k)).values, k * rms_envelope(buf).values, rtol=1e-12
        )

    def test_double_precision(self):
        assert rms_envelope(sine(seconds=1.0)).values.dtype == np.float64

    def test_short_buffer_single_frame(self):
        env = rms_envelope(AudioBuffer(np.full(100, 0.5), 22050), 2048, 512)
        assert len(env) == 1
        assert env.values[0] == pytest.approx(np.sqrt(100 * 0.25 / 2048))


class TestSpectralBandwidth:
    """Tests for spectral_bandwidth."""

    def test_pure_tone_is_narrow(self):
        values = spectral_bandwidth(sine(1000.0, seconds=2.0)).values
        assert np.median(values) < 150.0

    def test_noise_is_wide(self):
        """White noise spreads over the whole band (uniform std is 11025 / sqrt(12))."""
        values = spectral_bandwidth(white_noise(seconds=2.0)).values
        assert np.median(values) > 2500.0

    def test_silence_is_zero(self):
        values = spectral_bandwidth(silence(seconds=1.0)).values
        assert np.all(np.isfinite(values))
        assert not np.any(values)
