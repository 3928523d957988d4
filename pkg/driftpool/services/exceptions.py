from typing import List


class DriftPoolError(Exception):
    """root of every error raised by the engine, the data layer and the commands."""


class ConfigurationError(DriftPoolError):
    """throw an exception when a threshold or ratio lies outside its legal range."""


class NumericError(DriftPoolError):
    """throw an exception when a loss, forecast or gene stops being finite."""


class ShapeError(DriftPoolError):
    """throw an exception when a window or target does not have the expected length."""


class EmptyWindow(NumericError):
    """throw an exception when a gene is requested for a window without values."""


class NonFiniteInput(NumericError):
    """throw an exception when a window contains NaN or infinite values."""


class InternalStateError(DriftPoolError):
    """throw an exception when pool or gene bookkeeping reaches an impossible
    state, such as a global gene with a zero count."""


class RetrievalMismatch(InternalStateError):
    """throw an exception when the nearest-entry lookup disagrees with the
    exhaustive shadow scan."""


class EmptyWarmupSet(DriftPoolError):
    """throw an exception when the warm-up stage receives no instances."""


class SeriesTooShort(DriftPoolError):
    """throw an exception when a series cannot hold a warm-up and an online
    instance for the requested look-back and horizon."""


class DataSourceError(DriftPoolError):
    """throw an exception when a series cannot be read from its source."""


class DataFileNotFound(DataSourceError):
    """throw an exception when the delimited text file does not exist."""


class ColumnNotFound(DataSourceError):
    """throw an exception when the requested column is not in the file."""


class ValueParseError(DataSourceError):
    """throw an exception when a cell cannot be parsed as a real number."""

    def __init__(self, message: str, row: int):
        super().__init__(message)
        self.row = row


class ZeroVarianceSegment(DriftPoolError):
    """throw an exception when normalization statistics come from a constant segment."""


class ManifestMismatch(DriftPoolError):
    """throw an exception when compared manifests do not share data, look-back
    and horizon."""

    def __init__(self, fields: List[str]):
        super().__init__(", ".join(fields))
        self.fields = fields


class LabelMismatch(DriftPoolError):
    """throw an exception when concept labels do not line up with the run records."""
