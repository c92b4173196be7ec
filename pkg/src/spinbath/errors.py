"""Exception hierarchy shared by all spinbath modules."""

from __future__ import annotations


class SpinbathError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(SpinbathError, ValueError):
    """An argument violates a documented precondition."""


class LengthMismatchError(InvalidArgumentError):
    """Paired per-spin vectors have different lengths."""


class DegenerateDistributionError(SpinbathError):
    """The requested statistic does not exist for this input.

    Raised when a dispersion-based quantity is requested for a
    zero-variance input, or when a distribution (Lorentzian) has no
    finite variance to report.
    """


class ResourceLimitError(SpinbathError):
    """A size cap would be exceeded; carries the cap name and value."""

    def __init__(self, message: str, limit_name: str, limit_value: int):
        super().__init__(message)
        self.limit_name = limit_name
        self.limit_value = limit_value


class UnsupportedFormError(SpinbathError):
    """The operation does not accept this representation of its input."""


class ConfigError(SpinbathError):
    """A run configuration is invalid; lists every violated field."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__(
            "invalid configuration:\n  - " + "\n  - ".join(self.violations)
        )
