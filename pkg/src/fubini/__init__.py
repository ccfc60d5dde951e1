"""Exact arithmetic for the Fubini polynomial family and its relatives.

Fubini (ordered Bell) polynomials and numbers, Stirling numbers of both
kinds, Bernoulli and p-Bernoulli numbers, and Apostol-Bernoulli rational
functions, all over exact rational arithmetic, plus a catalog of the
identities connecting them that can be machine-verified case by case.
"""

from .apostol import (
    apostol_bernoulli,
    apostol_via_fubini,
    improper_quadrature_oracle,
)
from .bernoulli_numbers import bernoulli, p_bernoulli
from .combinat import binomial, stirling1_unsigned, stirling2
from .exact import BiPoly, Poly, RatFunc, format_rational, parse_rational
from .polynomials import (
    fubini_number,
    fubini_poly,
    fubini_two_var,
)
from .registry import REGISTRY, list_identities, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Poly",
    "RatFunc",
    "REGISTRY",
    "apostol_bernoulli",
    "apostol_via_fubini",
    "bernoulli",
    "binomial",
    "format_rational",
    "fubini_number",
    "fubini_poly",
    "fubini_two_var",
    "improper_quadrature_oracle",
    "list_identities",
    "p_bernoulli",
    "parse_rational",
    "stirling1_unsigned",
    "stirling2",
    "verify",
    "verify_all",
]
