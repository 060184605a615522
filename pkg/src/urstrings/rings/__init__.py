"""Exact carriers (naturals, rationals, polynomials) and the model backends."""
from .models import (
    EucResult,
    ModelElem,
    ModelId,
    add,
    binomial_coords,
    check_member,
    coerce,
    elem,
    euc_raw,
    from_binomial_coords,
    is_member,
    leq,
    mul,
    one,
    sample_member,
    try_euc_div,
    try_sub,
    zero,
)
from .numtheory import divides, gcd, pow2_refute, pow2_smullyan, pow2_tarski, primal_split
from .parse import parse_matrix, parse_poly, render_matrix, render_poly
from .poly import Poly, X, binom_poly

__all__ = [
    "EucResult", "ModelElem", "ModelId", "Poly", "X",
    "add", "binom_poly", "binomial_coords", "check_member", "coerce", "divides",
    "elem", "euc_raw", "from_binomial_coords", "gcd", "is_member", "leq", "mul",
    "one", "parse_matrix", "parse_poly", "pow2_refute", "pow2_smullyan",
    "pow2_tarski", "primal_split", "render_matrix", "render_poly",
    "sample_member", "try_euc_div", "try_sub", "zero",
]
