"""Fubini (ordered Bell) polynomials and numbers.

The polynomial of index n is F_n(y) = sum_k S2(n,k) * k! * y^k; its value
at y = 1 counts ordered set partitions of an n-element set.  This module
builds the family by several independent routes (triangle sum, derivative
recurrence, reflection form, split form) plus the two-variable extension
F_n(x;y) = sum_k C(n,k) * F_k(y) * x^(n-k).  Route agreement is what the
identity catalog checks; each route is kept self-contained here.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .combinat import binomial, factorial, stirling2_row
from .exact import BiPoly, Poly, Scalar

BRUTEFORCE_CAP = 10

_lock = threading.Lock()
_recurrence_cache: list[Poly] = [Poly.constant(1)]
_two_var_cache: dict[int, BiPoly] = {}


def fubini_poly(n: int) -> Poly:
    """F_n(y) from the Stirling triangle: sum_k S2(n,k) * k! * y^k."""
    if n < 0:
        raise ValueError("index must be non-negative")
    row = stirling2_row(n)
    return Poly([row[k] * factorial(k) for k in range(n + 1)])


def fubini_poly_recurrence(n: int) -> Poly:
    """F_n(y) from F_0 = 1 and F_{m+1}(y) = y * d/dy[(1+y) * F_m(y)]."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n < len(_recurrence_cache):
        return _recurrence_cache[n]
    one_plus_y = Poly([1, 1])
    y = Poly.variable()
    with _lock:
        while len(_recurrence_cache) <= n:
            prev = _recurrence_cache[-1]
            _recurrence_cache.append(y * (one_plus_y * prev).derivative())
    return _recurrence_cache[n]


def fubini_number(n: int) -> int:
    """The n-th Fubini number F_n = F_n(1)."""
    value = fubini_poly(n)(1)
    return value.numerator


def ordered_partition_block_counts(n: int, cap: int = BRUTEFORCE_CAP) -> tuple[int, ...]:
    """Count ordered set partitions of an n-set by block count, index k = #blocks.

    Direct enumeration: every set partition is generated as a restricted
    growth string, then weighted by the k! orderings of its blocks.  No
    Stirling numbers are involved.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if n > cap:
        raise ValueError(f"enumeration capped at n <= {cap}, got {n}")
    partitions = [0] * (n + 1)

    def assign(i: int, used: int) -> None:
        if i == n:
            partitions[used] += 1
            return
        for block in range(used + 1):
            assign(i + 1, max(used, block + 1))

    assign(0, 0)
    return tuple(partitions[k] * factorial(k) for k in range(n + 1))


def fubini_number_bruteforce(n: int, cap: int = BRUTEFORCE_CAP) -> int:
    """F_n by exhaustive enumeration of ordered set partitions."""
    return sum(ordered_partition_block_counts(n, cap=cap))


def fubini_two_var(n: int) -> BiPoly:
    """Two-variable polynomial F_n(x;y) = sum_k C(n,k) * F_k(y) * x^(n-k)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    cached = _two_var_cache.get(n)
    if cached is not None:
        return cached
    result = BiPoly.zero()
    for k in range(n + 1):
        term = BiPoly.outer(Poly.monomial(n - k, binomial(n, k)), fubini_poly(k))
        result = result + term
    with _lock:
        _two_var_cache.setdefault(n, result)
    return _two_var_cache[n]


def fubini_two_var_eval(n: int, x: Scalar, y: Scalar) -> Fraction:
    """F_n(x;y) at a rational point, via the binomial convolution directly."""
    xv, yv = Fraction(x), Fraction(y)
    total = Fraction(0)
    for k in range(n + 1):
        total += binomial(n, k) * fubini_poly(k)(yv) * xv ** (n - k)
    return total


def fubini_reflection_form(n: int) -> Poly:
    """F_n(y) rebuilt from the reflection route:

    y * sum_{k=1}^{n} S2(n,k) * (-1)^(n+k) * k! * (y+1)^(k-1), valid for n >= 1.
    """
    if n < 1:
        raise ValueError("reflection form requires n >= 1")
    one_plus_y = Poly([1, 1])
    row = stirling2_row(n)
    total = Poly.zero()
    power = Poly.constant(1)
    for k in range(1, n + 1):
        total = total + (row[k] * (-1) ** (n + k) * factorial(k)) * power
        power = power * one_plus_y
    return Poly.variable() * total


def fubini_split_eval(n: int, y: Scalar) -> Fraction:
    """Value of the split form of F_n at a rational y != -1/2:

    sum_k S2(n,k) k! y^k [2^(n+1) (y+1) y^k + (-1)^(k+1)] / (2y+1)^(k+1).
    """
    yv = Fraction(y)
    if yv == Fraction(-1, 2):
        raise ValueError("split form is singular at y = -1/2")
    row = stirling2_row(n)
    two_y_plus_1 = 2 * yv + 1
    total = Fraction(0)
    for k in range(n + 1):
        if row[k] == 0:
            continue
        numer = 2 ** (n + 1) * (yv + 1) * yv**k + (-1) ** (k + 1)
        total += row[k] * factorial(k) * yv**k * numer / two_y_plus_1 ** (k + 1)
    return total


def fubini_split_collapse(n: int) -> tuple[Poly, Poly]:
    """Both sides of the split form after clearing (2y+1)^(n+1).

    Returns (F_n(y) * (2y+1)^(n+1), the cleared split sum); the pair is
    equal as polynomials, which certifies that the split form collapses
    to F_n everywhere away from y = -1/2.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    y = Poly.variable()
    two_y_plus_1 = Poly([1, 2])
    lhs = fubini_poly(n) * two_y_plus_1 ** (n + 1)
    row = stirling2_row(n)
    rhs = Poly.zero()
    for k in range(n + 1):
        if row[k] == 0:
            continue
        bracket = (2 ** (n + 1)) * Poly([1, 1]) * y**k + Poly.constant((-1) ** (k + 1))
        rhs = rhs + (row[k] * factorial(k)) * y**k * bracket * two_y_plus_1 ** (n - k)
    return lhs, rhs


def fubini_number_split_sum(n: int) -> Fraction:
    """F_n via the split form at y = 1: sum_k S2(n,k) k! [2^(n+2) + (-1)^(k+1)] / 3^(k+1)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    row = stirling2_row(n)
    return sum(
        (
            Fraction(row[k] * factorial(k) * (2 ** (n + 2) + (-1) ** (k + 1)), 3 ** (k + 1))
            for k in range(n + 1)
        ),
        Fraction(0),
    )


def fubini_number_split_sum_neg2(n: int) -> Fraction:
    """F_n via the split form at y = -2:

    sum_k (-1)^(n-k) S2(n,k) k! 2^(k-1) [2^(n+k+1) + 1] / 3^(k+1), for n >= 1.
    """
    if n < 1:
        raise ValueError("this specialization requires n >= 1")
    row = stirling2_row(n)
    total = Fraction(0)
    for k in range(n + 1):
        if row[k] == 0:
            continue
        total += (
            (-1) ** (n - k)
            * row[k]
            * factorial(k)
            * Fraction(2, 1) ** (k - 1)
            * (2 ** (n + k + 1) + 1)
            / 3 ** (k + 1)
        )
    return total


def geometric_moment_partial_sum(n: int, x: Scalar, terms: int) -> Fraction:
    """Exact partial sum sum_{k=0}^{terms} k^n x^k for |x| < 1.

    As terms grows this approaches F_n(x/(1-x)) / (1-x); at x = 1/2 the
    limit is 2 * F_n.
    """
    xv = Fraction(x)
    if abs(xv) >= 1:
        raise ValueError("requires |x| < 1")
    if n < 0 or terms < 0:
        raise ValueError("indices must be non-negative")
    total = Fraction(0)
    xk = Fraction(1)
    for k in range(terms + 1):
        total += k**n * xk
        xk *= xv
    return total
