"""Exception types raised by the gravibounce package."""


class GravibounceError(Exception):
    """Base class for all package-specific errors."""


class ConstantsError(GravibounceError, ValueError):
    """Bad constants input: unreadable file, malformed line, or invalid value.

    ``line`` is the 1-based line number for file-level problems, ``key`` the
    offending constant name for value-level problems (either may be None).
    """

    def __init__(self, message: str, *, line: int | None = None, key: str | None = None):
        super().__init__(message)
        self.line = line
        self.key = key


class DomainError(GravibounceError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ConvergenceError(GravibounceError, RuntimeError):
    """An iterative numerical method did not reach its tolerance.

    ``index`` and ``last`` describe the failing zero search (which zero, last
    iterate); ``estimate`` is the achieved error estimate of a quadrature.
    """

    def __init__(
        self,
        message: str,
        *,
        index: int | None = None,
        last: float | None = None,
        estimate: float | None = None,
    ):
        super().__init__(message)
        self.index = index
        self.last = last
        self.estimate = estimate
