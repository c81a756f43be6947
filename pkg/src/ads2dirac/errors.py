"""Exception types shared across the library."""


class Ads2DiracError(Exception):
    """Base class for all library errors."""


class DomainError(Ads2DiracError):
    """Argument outside the supported domain."""


class ConvergenceError(Ads2DiracError):
    """A series or iteration failed to meet tolerance within its cap."""


class BranchError(Ads2DiracError):
    """Parameter combination requires a different evaluation branch."""


class PoleError(Ads2DiracError):
    """Evaluation at a pole of the function."""


class SingularParameterError(Ads2DiracError):
    """Parameter combination where a defining limit degenerates."""


class ValidationError(Ads2DiracError):
    """Inconsistent or inadmissible configuration."""
