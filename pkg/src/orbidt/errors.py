"""Exception hierarchy shared across the package."""


class OrbiDTError(Exception):
    """Base class for all library errors."""


class UsageError(OrbiDTError, ValueError):
    """Malformed call: mismatched arities, rings, truncation orders or flags."""


class ZeroWeight(OrbiDTError):
    """Bracket of the trivial monomial requested."""


class BracketVanishes(OrbiDTError, ZeroDivisionError):
    """A bracket evaluates to zero at a non-generic point."""

    def __init__(self, weight, msg=None):
        self.weight = weight
        super().__init__(msg or f"bracket of weight {weight} vanishes at this point")


class DomainError(OrbiDTError, ValueError):
    pass


class OutOfBound(OrbiDTError, ValueError):
    pass


class InvalidSlicing(OrbiDTError):
    pass


class DualityViolation(OrbiDTError):
    pass


class PairingFailure(OrbiDTError):
    pass


class NeutralZero(OrbiDTError):
    pass


class ExpDomain(OrbiDTError, ValueError):
    pass


class LogDomain(OrbiDTError, ValueError):
    pass


class CalabiYauViolation(OrbiDTError, ValueError):
    pass


class NonKappaContent(OrbiDTError, ValueError):
    pass
