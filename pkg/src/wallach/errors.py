"""Exception hierarchy shared by all modules."""


class WallachError(Exception):
    """Base class for errors raised by this package."""


class InputError(WallachError, ValueError):
    """Malformed or unsupported arguments."""


class DegeneracyError(WallachError, ArithmeticError):
    """Linearly dependent input where independence is required."""


class ContractError(WallachError):
    """A documented precondition does not hold (e.g. non-commuting involutions)."""


class InternalError(WallachError):
    """An internal consistency check failed."""


class SizeLimitError(WallachError):
    """The requested construction exceeds the configured size bound."""


class DomainError(WallachError, ValueError):
    """Argument lies outside the domain of a formula (e.g. a pole)."""
