"""Exception hierarchy mapped onto CLI exit codes."""


class TextriskError(Exception):
    """Base class for all library errors."""

    exit_code = 5


class ConfigError(TextriskError):
    """Invalid configuration, flags, or hyperparameters."""

    exit_code = 2


class DataError(TextriskError):
    """Malformed or inconsistent input data."""

    exit_code = 3


class NumericError(TextriskError):
    """Non-finite values or numerical failure during computation."""

    exit_code = 4
