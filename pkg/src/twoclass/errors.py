class ValidationError(ValueError):
    """Input outside the supported domain (non-prime, wrong congruence, ...)."""


class SymbolError(ArithmeticError):
    """A residue symbol was requested where it is not defined."""
