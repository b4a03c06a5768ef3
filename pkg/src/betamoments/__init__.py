"""Exact moment sequences of Beta laws on [c, c+4] and the identities they satisfy."""
from .catalog import catalog, entry, entry_terms
from .exact import as_rational, binomial, catalan, central_binomial, falling_factorial, rising_factorial
from .moments import M, MomentSpec, S, BetaParams, m, moments

__version__ = "0.1.0"

__all__ = [
    "BetaParams",
    "M",
    "MomentSpec",
    "S",
    "as_rational",
    "binomial",
    "catalan",
    "catalog",
    "central_binomial",
    "entry",
    "entry_terms",
    "falling_factorial",
    "m",
    "moments",
    "rising_factorial",
]
