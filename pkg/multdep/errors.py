"""Exceptions raised by the toolkit."""


class MultdepError(ValueError):
    """Base class for every error raised by the library."""


class DomainError(MultdepError):
    """Input outside the domain of an operation."""


class IndependentError(DomainError):
    """A relation was requested for a tuple that has none."""


class CapExceededError(DomainError):
    """Tuple too long for exhaustive subtuple classification."""


class ConfigError(MultdepError):
    """Invalid configuration value."""


class CheckMismatch(MultdepError):
    """A self-check or golden comparison failed."""

    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}
