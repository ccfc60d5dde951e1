"""Bernoulli and p-Bernoulli numbers, and the Fubini moment integrals.

Convention: B_1 = -1/2 (forced by the Stirling-sum construction below);
odd-index values vanish from B_3 on.  The two-index family B_{n,p} is
computed from the first-kind Stirling relation and reduces to B_n at
p = 0.  Integral identities pair an exact polynomial integral with an
independent Bernoulli-sum route, returning both so callers can compare.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .combinat import (
    binomial,
    factorial,
    stirling1_unsigned,
    stirling2,
    stirling2_row,
)
from .exact import Poly
from .polynomials import fubini_poly

_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = []
_recurrence_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n = sum_k S2(n,k) * (-1)^k * k! / (k+1)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            row = stirling2_row(m)
            value = sum(
                (
                    Fraction(row[k] * (-1) ** k * factorial(k), k + 1)
                    for k in range(m + 1)
                ),
                Fraction(0),
            )
            _bernoulli_cache.append(value)
    return _bernoulli_cache[n]


def bernoulli_recurrence(n: int) -> Fraction:
    """B_n by the classical binomial recurrence, independent of Stirling numbers.

    B_0 = 1 and sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if n < len(_recurrence_cache):
        return _recurrence_cache[n]
    with _lock:
        while len(_recurrence_cache) <= n:
            m = len(_recurrence_cache)
            acc = sum(
                (binomial(m + 1, k) * _recurrence_cache[k] for k in range(m)),
                Fraction(0),
            )
            _recurrence_cache.append(-acc / (m + 1))
    return _recurrence_cache[n]


def bernoulli_via_integral(n: int) -> Fraction:
    """B_n as the exact integral of F_n over [-1, 0], for n >= 1."""
    if n < 1:
        raise ValueError("integral representation stated for n >= 1")
    return fubini_poly(n).integrate(-1, 0)


def fubini_moment_integral(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Both routes of the moment integral of y^k * F_n(y) over [-1, 0].

    Returns (exact integral, ((-1)^k / k!) * sum_j S1u(k+1, j+1) * B_{n+j});
    the two agree for k >= 0, n >= 1.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    if k < 0:
        raise ValueError("requires k >= 0")
    exact = (Poly.monomial(k) * fubini_poly(n)).integrate(-1, 0)
    acc = sum(
        (stirling1_unsigned(k + 1, j + 1) * bernoulli(n + j) for j in range(k + 1)),
        Fraction(0),
    )
    formula = Fraction((-1) ** k, factorial(k)) * acc
    return exact, formula


def fubini_product_integral(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both routes of the integral of F_m * F_n over [-1, 0].

    Returns (exact integral, (-1)^m * sum_j C(m,j) * B_{n+j}), equal for
    m >= 0, n >= 1.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    if m < 0:
        raise ValueError("requires m >= 0")
    exact = (fubini_poly(m) * fubini_poly(n)).integrate(-1, 0)
    formula = (-1) ** m * sum(
        (binomial(m, j) * bernoulli(n + j) for j in range(m + 1)), Fraction(0)
    )
    return exact, formula


def double_sum_identity(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Termwise double sum for the product integral versus the Bernoulli sum.

    Returns (sum_{k,j} S2(n,k) S2(m,j) (-1)^(k+j) k! j! / (k+j+1),
    (-1)^m * sum_j C(m,j) * B_{n+j}); equal for n >= 1.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    row_n = stirling2_row(n)
    row_m = stirling2_row(m)
    lhs = Fraction(0)
    for k in range(n + 1):
        if row_n[k] == 0:
            continue
        for j in range(m + 1):
            if row_m[j] == 0:
                continue
            lhs += Fraction(
                row_n[k] * row_m[j] * (-1) ** (k + j) * factorial(k) * factorial(j),
                k + j + 1,
            )
    rhs = (-1) ** m * sum(
        (binomial(m, j) * bernoulli(n + j) for j in range(m + 1)), Fraction(0)
    )
    return lhs, rhs


def p_bernoulli(n: int, p: int) -> Fraction:
    """B_{n,p} from the first-kind Stirling relation:

    B_{n,p} = ((p+1) / p!) * sum_{j=0}^{p} (-1)^j * S1u(p,j) * B_{n+j}.

    This is the single source of truth for the two-index family; at p = 0
    it degenerates to B_n.
    """
    if n < 0 or p < 0:
        raise ValueError("indices must be non-negative")
    acc = sum(
        ((-1) ** j * stirling1_unsigned(p, j) * bernoulli(n + j) for j in range(p + 1)),
        Fraction(0),
    )
    return Fraction(p + 1, factorial(p)) * acc


def p_bernoulli_shift_relation(n: int, p: int) -> tuple[Fraction, Fraction]:
    """Both sides of the shifted first-kind relation, for n >= 1:

    sum_j (-1)^(j+1) S1u(p+1, j+1) B_{n+j}  versus  ((p+1)!/(p+2)) * B_{n-1, p+1}.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    lhs = sum(
        (
            (-1) ** (j + 1) * stirling1_unsigned(p + 1, j + 1) * bernoulli(n + j)
            for j in range(p + 1)
        ),
        Fraction(0),
    )
    rhs = Fraction(factorial(p + 1), p + 2) * p_bernoulli(n - 1, p + 1)
    return lhs, rhs


def p_bernoulli_odd_explicit(n: int, p: int) -> Fraction:
    """Explicit odd-index formula:

    B_{2n-1,p} = ((p+1)/p) * sum_{k=0}^{2n-1} S2(2n, k+1) * (-1)^k * (k+1)! / (k+p+1)

    for n >= 1, p >= 1.  Agrees with p_bernoulli(2n-1, p).
    """
    if p < 1:
        raise ValueError("requires p >= 1")
    if n < 1:
        raise ValueError("requires n >= 1")
    acc = sum(
        (
            Fraction(stirling2(2 * n, k + 1) * (-1) ** k * factorial(k + 1), k + p + 1)
            for k in range(2 * n)
        ),
        Fraction(0),
    )
    return Fraction(p + 1, p) * acc


def p_bernoulli_even_explicit(n: int, p: int) -> Fraction:
    """Explicit even-index formula:

    B_{2n,p} = ((p+1)/p) * sum_{k=0}^{2n} S2(2n+1, k+1) * (-1)^(k+1) * (k+1)! / (k+p+1)

    for n >= 1, p >= 1.  Agrees with p_bernoulli(2n, p).
    """
    if p < 1:
        raise ValueError("requires p >= 1")
    if n < 1:
        raise ValueError("requires n >= 1")
    acc = sum(
        (
            Fraction(
                stirling2(2 * n + 1, k + 1) * (-1) ** (k + 1) * factorial(k + 1),
                k + p + 1,
            )
            for k in range(2 * n + 1)
        ),
        Fraction(0),
    )
    return Fraction(p + 1, p) * acc


def fubini_moment_parity(p: int, n: int) -> tuple[Fraction, Fraction]:
    """Both routes of the moment integral written through B_{n-1, p+1}.

    Returns (exact integral of y^p * F_n over [-1, 0], the parity form
    (-1)^p (p+1)/(p+2) B_{n-1,p+1} for odd n and (-1)^(p+1) (p+1)/(p+2)
    B_{n-1,p+1} for even n); stated for n >= 2, p >= 0.
    """
    if n < 2:
        raise ValueError("requires n >= 2")
    if p < 0:
        raise ValueError("requires p >= 0")
    exact = (Poly.monomial(p) * fubini_poly(n)).integrate(-1, 0)
    sign = (-1) ** p if n % 2 == 1 else (-1) ** (p + 1)
    parity = sign * Fraction(p + 1, p + 2) * p_bernoulli(n - 1, p + 1)
    return exact, parity
