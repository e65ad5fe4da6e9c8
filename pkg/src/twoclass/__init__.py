"""2-class group rank and Galois structure for Q(sqrt(pq), i)."""

from twoclass.errors import ValidationError, SymbolError

__all__ = ["ValidationError", "SymbolError"]
__version__ = "0.1.0"
