"""Exception hierarchy for the kis package."""


class KisError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(KisError):
    """Invalid configuration file or command-line parameter."""


class NumericError(KisError):
    """Base class for numerical failures (exit code 3 in the CLI)."""


class BasisTooSmall(NumericError):
    """The truncated basis cannot hold the requested state."""


class TruncationOverflow(NumericError):
    """Population leaked into the guard band beyond the configured bound.

    Attributes
    ----------
    kick : int or None
        Kick index at which the guard band filled, if raised mid-evolution.
    partial : object or None
        Trajectory computed up to (not including) the failing kick, so
        callers can flush partial output.
    """

    def __init__(self, message: str, kick: int | None = None, partial=None):
        super().__init__(message)
        self.kick = kick
        self.partial = partial


class ConvergenceFailure(NumericError):
    """A matrix routine did not reach its accuracy target."""


class NoConvergence(NumericError):
    """Newton polish failed on a root that passed the phase consistency check."""


class EigensolverFailure(NumericError):
    """Unitary eigendecomposition did not produce a clean spectrum."""


class DomainError(NumericError):
    """Input lies outside the mathematical domain of a formula."""
