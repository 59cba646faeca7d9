"""Exception hierarchy; exit codes follow the CLI contract."""


class RanklociError(Exception):
    """Base class; maps to exit code 1 (internal error) unless refined."""

    exit_code = 1


class InputError(RanklociError, ValueError):
    """Malformed files, bad flags, dimension mismatches."""

    exit_code = 2


class DimensionError(InputError):
    """Shape or size violates an operation's contract."""


class SizeCapError(RanklociError):
    """Requested computation exceeds the desk-scale cap."""

    exit_code = 3


class PreconditionError(RanklociError):
    """Mathematical precondition violated (rank bound, surjectivity, ...)."""

    exit_code = 4
