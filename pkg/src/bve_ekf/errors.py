"""Exception types shared across the package."""


class BveError(Exception):
    """Base class for all package-specific errors."""


class DegenerateDirection(BveError):
    """A direction vector has (near-)zero norm and cannot be normalized."""


class SingularCovariance(BveError):
    """A covariance matrix is not positive definite or too ill-conditioned to invert."""


class NumericalBreakdown(BveError):
    """A numerically impossible intermediate value was produced (e.g. non-positive innovation variance)."""


class UnknownExperiment(BveError):
    """Experiment identifier outside E1..E10."""


class EmptyInput(BveError):
    """An operation received an empty input sequence."""


class ConfigError(BveError):
    """Invalid configuration key or value."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
