"""Exception types shared across the package."""


class Sl2RepError(Exception):
    """Base class for all library errors."""


class DomainError(Sl2RepError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class InvariantViolation(Sl2RepError):
    """A structural invariant (determinant, branch safety, ...) failed numerically."""


class TruncationError(Sl2RepError):
    """A grid or series truncation was detected to be unsafe."""


class ConfigError(Sl2RepError, ValueError):
    """Invalid run configuration."""
