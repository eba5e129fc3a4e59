"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class BcenetError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class UsageError(BcenetError):
    """Bad command line, unknown configuration key, or invalid option value."""

    exit_code = 1


class DataError(BcenetError):
    """Malformed, missing, or inconsistent input data (files, rasters, checkpoints)."""

    exit_code = 2


class NumericalError(BcenetError):
    """Non-finite values where finite ones are required (losses, features)."""

    exit_code = 3
