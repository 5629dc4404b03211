"""
Unit tests for YIN pitch tracking.
"""

import numpy as np
import pytest

from src.dsp_core.pitch import cumulative_mean_normalized, difference_function, yin_f0
from src.utils.error_handler import InvalidRange
from tests.signals import silence, sine, square


class TestDifferenceFunction:
    """Tests for the YIN difference function."""

    def test_matches_direct_sum(self):
        rng = np.random.default_rng(5)
        frames = rng.normal(size=(64, 3))
        win, max_lag = 32, 20
        diff = difference_function(frames, win, max_lag)
        for tau in range(max_lag + 1):
            direct = np.sum((frames[:win] - frames[tau:tau + win]) ** 2, axis=0)
            np.testing.assert_allclose(diff[tau], direct, rtol=1e-9, atol=1e-9)

    def test_normalized_starts_at_one(self):
        diff = np.array([[0.0], [2.0], [1.0], [0.5]])
        normalized = cumulative_mean_normalized(diff)
        assert normalized[0, 0] == 1.0
        assert normalized[1, 0] == pytest.approx(1.0)
        assert normalized[2, 0] == pytest.approx(2 * 1.0 / 3.0)

    def test_silent_lags_are_one(self):
        assert np.all(cumulative_mean_normalized(np.zeros((10, 2))) == 1.0)


class TestYin:
    """Tests for yin_f0."""

    def test_a4_sine(self):
        f0 = yin_f0(sine(440.0, seconds=2.0)).voiced_f0()
        assert f0.size > 0
        assert np.median(f0) == pytest.approx(440.0, rel=0.01)

    def test_square_wave(self):
        """The fundamental of a harmonic-rich square wave is found, not a harmonic."""
        f0 = yin_f0(square(220.0, seconds=2.0, amplitude=0.8)).voiced_f0()
        assert np.median(f0) == pytest.approx(220.0, rel=0.01)

    def test_low_bound(self):
        f0 = yin_f0(sine(70.0, seconds=2.0)).voiced_f0()
        assert np.median(f0) == pytest.approx(70.0, rel=0.02)

    def test_silence_unvoiced(self):
        track = yin_f0(silence(seconds=1.0))
        assert not np.any(track.voiced_flags)
        assert np.all(np.isnan(track.f0_hz))

    def test_frame_count(self):
        buf = sine(seconds=1.0)
        assert len(yin_f0(buf).f0_hz) == 1 + len(buf) // 512

    def test_invalid_range(self):
        with pytest.raises(InvalidRange):
            yin_f0(sine(seconds=0.5), fmin=100.0, fmax=12000.0)
        with pytest.raises(InvalidRange):
            yin_f0(sine(seconds=0.5), fmin=500.0, fmax=400.0)

    @pytest.mark.parametrize("k", [0.5, 0.1, 0.01])
    def test_gain_changes_nothing(self, k):
        """Voicing and f0 are the same for a quieter copy."""
        buf = square(220.0, seconds=1.0, amplitude=0.8)
        loud, quiet = yin_f0(buf), yin_f0(buf.scaled(k))
        np.testing.assert_array_equal(quiet.voiced_flags, loud.voiced_flags)
        np.testing.assert_allclose(quiet.voiced_f0(), loud.voiced_f0(), rtol=1e-9)
