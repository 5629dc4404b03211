"""
Toolkit exceptions, per-file error reporting and logging setup.

Every failure the toolkit can report is an ``EmovecError`` subclass. Each class
carries the process exit code the CLI maps it to (1 I/O, 2 validation/config,
3 empty result) so batch commands can fail per file and still exit cleanly.
"""

import logging
import os
import sys
import traceback
from enum import Enum
from typing import Any, Dict, Optional


LOGGER_NAME = "emovec"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class ErrorSeverity(str, Enum):
    """How loudly a failure is logged."""
    CRITICAL = "CRITICAL"  # run aborts
    ERROR = "ERROR"        # one file or command failed
    WARNING = "WARNING"
    INFO = "INFO"


class EmovecError(Exception):
    """Base exception for emovector toolkit errors."""

    exit_code: int = 1

    def __init__(
        self,
        message: str,
        severity: ErrorSeverity = ErrorSeverity.ERROR,
        details: Optional[Dict[str, Any]] = None,
        user_message: Optional[str] = None
    ):
        """
        Args:
            message: What went wrong, for logs
            severity: Log level used by ErrorHandler
            details: Structured context (path, cue, settings)
            user_message: Override for the stderr message
        """
        super().__init__(message)
        self.message = message
        self.severity = severity
        self.details = details or {}
        self.user_message = user_message or self._generate_user_message()

    @property
    def reason(self) -> str:
        """Machine-readable reason code (the error class name)."""
        return type(self).__name__

    def _generate_user_message(self) -> str:
        """Message shown on stderr when the CLI exits with this error."""
        return f"emovec: {self.message}"


# --- audio_io -------------------------------------------------------------

class AudioDecodeError(EmovecError):
    """WAV decoding errors."""

    exit_code = 2

    def _generate_user_message(self) -> str:
        return (
            f"Audio decoding failed: {self.message}\n"
            "Only RIFF/WAVE files with 16/24-bit PCM or 32-bit float samples are supported."
        )


class MalformedContainer(AudioDecodeError):
    """Bad RIFF magic or inconsistent chunk sizes."""


class UnsupportedEncoding(AudioDecodeError):
    """Compressed sample format, unsupported bit depth or more than two channels."""


class EmptyAudio(AudioDecodeError):
    """Container holds zero samples."""


class InvalidRate(EmovecError):
    """Non-positive resampling rate."""

    exit_code = 2


# --- midi_render ----------------------------------------------------------

class MidiError(EmovecError):
    """Standard MIDI File errors."""

    exit_code = 2

    def _generate_user_message(self) -> str:
        return (
            f"MIDI parsing failed: {self.message}\n"
            "Only Standard MIDI Files of format 0 or 1 can be rendered."
        )


class MalformedSMF(MidiError):
    """Bad MThd/MTrk header or truncated chunk."""


class UnsupportedFormat(MidiError):
    """SMF format 2 (independent sequences)."""


class DanglingNoteWarning(UserWarning):
    """A note-on was never closed and has been ended at end of track."""


# --- dsp_core / cue_extract ----------------------------------------------

class AnalysisError(EmovecError):
    """Signal analysis errors. Inside cue extraction these downgrade a cue to missing."""

    exit_code = 2


class InvalidFraming(AnalysisError):
    """Hop length of zero or frame shorter than hop."""


class InsufficientOnsets(AnalysisError):
    """Too few onset peaks or beats to estimate a tempo."""


class InvalidRange(AnalysisError):
    """Pitch search bounds outside 0 < fmin < fmax < rate/2."""


class NoEvents(AnalysisError):
    """No energy run above the attack threshold."""


class InsufficientBeats(AnalysisError):
    """Fewer than four tracked beats."""


class TooShort(AnalysisError):
    """Buffer shorter than the minimum analysis duration."""


# --- calibration ---------------------------------------------------------

class CalibrationError(EmovecError):
    """Calibration build and file errors."""

    exit_code = 2

    def _generate_user_message(self) -> str:
        return (
            f"Calibration failed: {self.message}\n"
            "Rebuild the calibration with the current toolkit version and settings."
        )


class InsufficientBenchmark(CalibrationError):
    """A cue has fewer than the minimum number of benchmark samples."""

    def _generate_user_message(self) -> str:
        return (
            f"Benchmark corpus too small: {self.message}\n"
            "Each cue needs at least 10 tracks where it could be measured."
        )


class NotCalibrated(CalibrationError):
    """Cue absent from the calibration."""


class SchemaMismatch(CalibrationError):
    """Document does not match the expected schema."""


class CorruptGrid(CalibrationError):
    """Quantile grid is not non-decreasing."""


class ConfigMismatch(CalibrationError):
    """Calibration was built with different analysis settings."""


# --- emovector / corpus_compare / cli -------------------------------------

class InvalidBand(EmovecError):
    """Scoring band outside (0, 0.5]."""

    exit_code = 2


class EmptyCorpus(EmovecError):
    """No emovectors to summarize."""

    exit_code = 3

    def _generate_user_message(self) -> str:
        return f"Nothing to compare: {self.message}"


class InputNotFound(EmovecError):
    """Input path missing or unreadable."""

    exit_code = 1


class ErrorHandler:
    """
    Logs failures under the package logger and turns them into report dicts.
    """

    def __init__(self, logger_name: str = LOGGER_NAME):
        """
        Attach to a logger, installing the package handler if needed.

        Args:
            logger_name: Logger to write to
        """
        self.logger = logging.getLogger(logger_name)
        setup_logging()

    def handle_error(
        self,
        error: Exception,
        context: Optional[str] = None,
        raise_error: bool = True
    ) -> Dict[str, Any]:
        """
        Log one failure at its severity and describe it.

        Args:
            error: The failure
            context: Context where error occurred (usually a file path)
            raise_error: Re-raise after logging

        Returns:
            Dict with severity, reason, messages, context, details and exit code
        """
        if isinstance(error, EmovecError):
            severity = error.severity
            user_message = error.user_message
            details = error.details
            reason = error.reason
            exit_code = error.exit_code
        else:
            severity = ErrorSeverity.ERROR
            user_message = f"emovec: unexpected {type(error).__name__}: {error}"
            details = {}
            reason = type(error).__name__
            exit_code = 1

        log_message = f"{context}: {str(error)}" if context else str(error)

        if severity == ErrorSeverity.CRITICAL:
            self.logger.critical(log_message, exc_info=True)
        elif severity == ErrorSeverity.ERROR:
            self.logger.error(log_message, exc_info=not isinstance(error, EmovecError))
        elif severity == ErrorSeverity.WARNING:
            self.logger.warning(log_message)
        else:
            self.logger.info(log_message)

        error_info = {
            'severity': severity.value,
            'reason': reason,
            'message': str(error),
            'user_message': user_message,
            'context': context,
            'details': details,
            'exit_code': exit_code,
            'traceback': traceback.format_exc() if severity == ErrorSeverity.CRITICAL else None
        }

        if raise_error:
            raise error

        return error_info

    def log_warning(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None
    ):
        """
        Log a batch-level warning, with details on a second line.

        Args:
            message: Warning text
            details: Extra key/value context
        """
        self.logger.warning(message)
        if details:
            self.logger.warning(f"Details: {details}")


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Install the package stream handler once and set the level.

    An explicit ``level`` always applies. Otherwise the level is only set when
    the handler is first installed, from ``EMOVEC_LOG_LEVEL`` or INFO.
    Logs go to stderr so report tables on stdout stay clean.
    """
    logger = logging.getLogger(LOGGER_NAME)
    first = not logger.handlers
    if first:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
    if level or first:
        resolved = (level or os.getenv("EMOVEC_LOG_LEVEL") or "INFO").upper()
        logger.setLevel(getattr(logging, resolved, logging.INFO))
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger under the package namespace, e.g. ``emovec.calibration``."""
    return logging.getLogger(f"{LOGGER_NAME}.{name}")


class BatchQualityWarning:
    """
    Corpus-level warnings for non-fatal batch outcomes.
    """

    @staticmethod
    def failed_files(failed: int, total: int) -> Optional[str]:
        """
        Warning when some inputs of a batch could not be analysed.

        Args:
            failed: Number of files that failed
            total: Number of files attempted

        Returns:
            Warning text, or None when nothing needs reporting
        """
        if failed > 0:
            return (
                f"{failed} of {total} files could not be analysed and were skipped.\n"
                "Check the log above for the per-file reason."
            )
        return None

    @staticmethod
    def low_cue_coverage(cue: str, count: int, total: int, threshold: float = 0.5) -> Optional[str]:
        """
        Warning when a cue could be measured on only a small share of a corpus.

        Args:
            cue: Cue name
            count: Tracks where the cue is present
            total: Tracks analysed
            threshold: Acceptable fraction

        Returns:
            Warning text, or None when nothing needs reporting
        """
        if total > 0 and count / total < threshold:
            return (
                f"Cue '{cue}' was measurable on only {count} of {total} tracks "
                f"({count / total:.0%}). Its percentile grid rests on a thin sample."
            )
        return None
