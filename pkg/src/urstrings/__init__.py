"""Sequence and ur-string codings over exact arithmetic models."""
from . import beta, dyadic, errors, markov, rings, tcstrings

__all__ = ["beta", "dyadic", "errors", "markov", "rings", "tcstrings"]
__version__ = "0.1.0"
