"""
Unit tests for data models.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.data_models.models import (
    CUE_ORDER,
    EMOTION_ORDER,
    AudioBuffer,
    BeatTrack,
    CueId,
    CueVector,
    Emotion,
    EmotionSummary,
    Emovector,
    FrameSeries,
    NoteEvent,
    PitchTrack,
    RankVector,
    Timeline,
)


class TestAudioBuffer:
    """Tests for AudioBuffer."""

    def test_valid_buffer(self):
        """Samples are stored read-only as float64."""
        buf = AudioBuffer(np.array([0.0, 0.5, -0.5], dtype=np.float32), 22050)
        assert buf.samples.dtype == np.float64
        assert len(buf) == 3
        assert buf.duration_seconds == pytest.approx(3 / 22050)
        with pytest.raises(ValueError):
            buf.samples[0] = 1.0

    def test_rejects_out_of_range(self):
        """Samples above full scale are rejected."""
        with pytest.raises(ValueError):
            AudioBuffer(np.array([0.0, 1.5]), 22050)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            AudioBuffer(np.array([0.0, np.nan]), 22050)

    def test_rejects_bad_rate_and_shape(self):
        with pytest.raises(ValueError):
            AudioBuffer(np.zeros(4), 0)
        with pytest.raises(ValueError):
            AudioBuffer(np.zeros((4, 2)), 22050)

    def test_scaled(self):
        buf = AudioBuffer(np.array([0.5, -1.0]), 8000).scaled(0.5)
        np.testing.assert_allclose(buf.samples, [0.25, -0.5])


class TestFrameSeries:
    """Tests for FrameSeries."""

    def test_frame_times(self):
        series = FrameSeries(np.zeros(3), 2048, 512, 22050)
        np.testing.assert_allclose(series.frame_times(), [0.0, 512 / 22050, 1024 / 22050])

    def test_rejects_frame_shorter_than_hop(self):
        with pytest.raises(ValueError):
            FrameSeries(np.zeros(3), 256, 512, 22050)


class TestBeatTrack:
    """Tests for BeatTrack."""

    def test_period(self):
        track = BeatTrack(120.0, np.array([0.5, 1.0, 1.5]))
        assert track.period_seconds == pytest.approx(0.5)

    def test_rejects_non_increasing_beats(self):
        with pytest.raises(ValueError):
            BeatTrack(120.0, np.array([0.5, 0.5, 1.0]))

    def test_rejects_tempo_outside_range(self):
        with pytest.raises(ValueError):
            BeatTrack(400.0, np.array([0.1, 0.2]))


class TestPitchTrack:
    """Tests for PitchTrack."""

    def test_voiced_f0(self):
        track = PitchTrack(np.array([440.0, np.nan, 220.0]), np.array([True, False, True]))
        np.testing.assert_allclose(track.voiced_f0(), [440.0, 220.0])

    def test_voicing_must_match_f0(self):
        """A voiced frame without f0 is inconsistent."""
        with pytest.raises(ValueError):
            PitchTrack(np.array([np.nan]), np.array([True]))

    def test_f0_within_bounds(self):
        with pytest.raises(ValueError):
            PitchTrack(np.array([30.0]), np.array([True]))


class TestTimeline:
    """Tests for NoteEvent and Timeline."""

    def _note(self, onset, pitch=60, channel=0, duration=0.5):
        return NoteEvent(
            onset_seconds=onset, duration_seconds=duration, pitch=pitch, velocity=100, channel=channel
        )

    def test_sorted_timeline(self):
        timeline = Timeline(notes=[self._note(0.0, 60), self._note(0.0, 64), self._note(1.0)], total_seconds=1.5)
        assert len(timeline.notes) == 3

    def test_unsorted_timeline_rejected(self):
        with pytest.raises(ValidationError):
            Timeline(notes=[self._note(1.0), self._note(0.0)], total_seconds=1.5)

    def test_total_covers_last_note(self):
        with pytest.raises(ValidationError):
            Timeline(notes=[self._note(1.0)], total_seconds=1.0)

    def test_velocity_zero_rejected(self):
        with pytest.raises(ValidationError):
            NoteEvent(onset_seconds=0, duration_seconds=1, pitch=60, velocity=0, channel=0)


class TestCueVector:
    """Tests for CueVector."""

    def test_missing_cues_filled_with_reason(self):
        """Cues not supplied become missing with a default reason."""
        vector = CueVector(values={CueId.TEMPO: 120.0})
        assert vector.get(CueId.TEMPO) == 120.0
        assert vector.is_missing(CueId.SOUND_LEVEL)
        assert vector.reasons[CueId.SOUND_LEVEL] == "NotMeasured"
        assert vector.present_count() == 1

    def test_explicit_reason_kept(self):
        vector = CueVector(
            values={CueId.PITCH_LEVEL: None}, reasons={CueId.PITCH_LEVEL: "NoVoicedFrames"}
        )
        assert vector.reasons[CueId.PITCH_LEVEL] == "NoVoicedFrames"

    def test_tempo_bounds(self):
        with pytest.raises(ValidationError):
            CueVector(values={CueId.TEMPO: 20.0})

    def test_negative_level_rejected(self):
        with pytest.raises(ValidationError):
            CueVector(values={CueId.SOUND_LEVEL: -0.1})

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            CueVector(values={CueId.SOUND_LEVEL: math.inf})


class TestRankVector:
    """Tests for RankVector."""

    def test_uniform(self):
        ranks = RankVector.uniform(0.5)
        assert list(ranks.ranks) == list(CUE_ORDER)
        assert ranks.coverage == 8

    def test_uniform_missing(self):
        assert RankVector.uniform(None).coverage == 0

    def test_rank_out_of_range(self):
        with pytest.raises(ValidationError):
            RankVector(ranks={CueId.TEMPO: 1.2})


class TestEmovector:
    """Tests for Emovector."""

    def test_accessors(self):
        ev = Emovector(
            scores=dict(zip(EMOTION_ORDER, (7, 4, 5, 0, 0))),
            coverage=dict(zip(EMOTION_ORDER, (8, 7, 7, 8, 8))),
        )
        assert ev.as_tuple() == (7, 4, 5, 0, 0)
        assert ev.total == 16
        assert ev.normalized(Emotion.ANGER) == pytest.approx(7 / 8)

    def test_zero_coverage_normalizes_to_none(self):
        ev = Emovector(scores={}, coverage={})
        assert ev.normalized(Emotion.FEAR) is None
        assert ev.total == 0

    def test_score_exceeding_coverage_rejected(self):
        with pytest.raises(ValidationError):
            Emovector(scores={Emotion.ANGER: 3}, coverage={Emotion.ANGER: 2})

    @pytest.mark.parametrize("emotion, limit", [
        (Emotion.ANGER, 8), (Emotion.FEAR, 7), (Emotion.HAPPINESS, 7),
        (Emotion.SADNESS, 8), (Emotion.TENDERNESS, 8),
    ])
    def test_coverage_bounded_by_applicable_cues(self, emotion, limit):
        assert Emovector(scores={}, coverage={emotion: limit}).coverage[emotion] == limit
        with pytest.raises(ValidationError):
            Emovector(scores={}, coverage={emotion: limit + 1})


class TestEmotionSummary:
    """Tests for EmotionSummary."""

    def test_sd_requires_two(self):
        with pytest.raises(ValidationError):
            EmotionSummary(n=1, mean=2.0, sd=0.0)

    def test_single_track(self):
        assert EmotionSummary(n=1, mean=2.0).sd is None
