"""Exception types shared across the package."""


class FarkasError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(FarkasError, ValueError):
    """Vector or coefficient lengths do not agree."""


class LimitExceeded(FarkasError):
    """An enumeration guard would be exceeded; the call refuses to run."""


class KernelRankError(FarkasError, ValueError):
    """The integer kernel of the given vectors is not one-dimensional."""


class ClassCheckError(FarkasError):
    """A decision rule was invoked on a family outside its class."""


class DisconnectedGraphError(FarkasError):
    """The operation requires a connected graph."""


class ParseError(FarkasError):
    """Malformed input file or inline value."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalInconsistency(FarkasError):
    """Two routes that must agree produced different answers (a bug trap)."""
