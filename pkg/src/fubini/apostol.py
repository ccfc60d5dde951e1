"""Apostol-Bernoulli functions as exact rational functions of lambda.

Each index n yields a rational function whose only pole sits at
lambda = 1 with order at most n.  Three construction routes are kept:
the direct Stirling sum, substitution of lambda/(1-lambda) into the
Fubini polynomial of index n-1, and an alternating power form (valid
from index 2 up; its index-1 instance is a known erratum and is
rejected rather than patched).  The improper integrals over
(-inf, 0] reduce exactly to finite Fubini integrals via the
substitution y = lambda/(1-lambda); a numerical quadrature oracle
cross-checks them independently.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Union

from .bernoulli_numbers import bernoulli
from .combinat import binomial, factorial, stirling1_unsigned, stirling2_row
from .exact import (
    Poly,
    RatFunc,
    Scalar,
    compose_poly_rational,
    count_real_roots_nonpositive,
)
from .polynomials import fubini_poly

_LAMBDA = Poly.variable()
_LAMBDA_MINUS_1 = Poly([-1, 1])
# lambda / (1 - lambda), the argument that turns Fubini polynomials into
# Apostol-Bernoulli functions.
_FUBINI_ARG = RatFunc(Poly([0, 1]), Poly([1, -1]))

_lock = threading.Lock()
_apostol_cache: list[RatFunc] = [RatFunc.zero()]


def apostol_bernoulli(n: int) -> RatFunc:
    """Index-n Apostol-Bernoulli function, canonical form.

    (n/(lambda-1)) * sum_{k=0}^{n-1} S2(n-1,k) k! (lambda/(1-lambda))^k,
    with the index-0 function identically zero.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if n < len(_apostol_cache):
        return _apostol_cache[n]
    with _lock:
        while len(_apostol_cache) <= n:
            m = len(_apostol_cache)
            row = stirling2_row(m - 1)
            total = RatFunc.zero()
            power = RatFunc.from_scalar(1)
            for k in range(m):
                if row[k]:
                    total = total + (row[k] * factorial(k)) * power
                power = power * _FUBINI_ARG
            value = RatFunc(Poly.constant(m), _LAMBDA_MINUS_1) * total
            _apostol_cache.append(value)
    return _apostol_cache[n]


def apostol_via_fubini(n: int) -> RatFunc:
    """Index-n function by substituting lambda/(1-lambda) into F_{n-1}.

    Requires n >= 1; agrees with apostol_bernoulli(n) as canonical forms.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    composed = compose_poly_rational(fubini_poly(n - 1), _FUBINI_ARG)
    return RatFunc(Poly.constant(n), _LAMBDA_MINUS_1) * composed


def apostol_alternating_form(n: int) -> RatFunc:
    """Index-(n+1) function from the alternating power sum, for n >= 1:

    (n+1) * (-1)^n * lambda * sum_k S2(n,k) k! (1/(lambda-1))^(k+1).

    The n = 0 instance of this sum yields lambda/(lambda-1) instead of
    the true 1/(lambda-1), so it is rejected here; see the errata notes.
    """
    if n < 1:
        raise ValueError("alternating form valid for n >= 1 only")
    row = stirling2_row(n)
    inv = RatFunc(Poly.constant(1), _LAMBDA_MINUS_1)
    total = RatFunc.zero()
    power = inv
    for k in range(n + 1):
        if row[k]:
            total = total + (row[k] * factorial(k)) * power
        power = power * inv
    return ((n + 1) * (-1) ** n) * RatFunc.from_poly(_LAMBDA) * total


def apostol_split_eval(n: int, lam: Scalar) -> Fraction:
    """Split-form value equal to (index n+1 function at lam) / (n+1):

    sum_k S2(n,k) k! (-lam)^k [2^(n+1) lam^k + (lam-1)^(k+1)] / (lam^2-1)^(k+1),

    for rational lam different from 1 and -1.
    """
    lv = Fraction(lam)
    if lv == 1 or lv == -1:
        raise ValueError("split form is singular at lambda = +/-1")
    row = stirling2_row(n)
    total = Fraction(0)
    for k in range(n + 1):
        if row[k] == 0:
            continue
        bracket = 2 ** (n + 1) * lv**k + (lv - 1) ** (k + 1)
        total += row[k] * factorial(k) * (-lv) ** k * bracket / (lv**2 - 1) ** (k + 1)
    return total


def apostol_sum_of_products(n: int, lam: Scalar) -> tuple[Fraction, Fraction]:
    """Both sides of the binomial sum of products, evaluated at rational lam != 1.

    Returns (sum_k C(n,k) A_{k+1} A_{n-k+1} / ((k+1)(n-k+1)),
    -[A_{n+2}/(n+2) + A_{n+1}/(n+1)]) where A_m is the index-m function
    value at lam.
    """
    lv = Fraction(lam)
    if lv == 1:
        raise ValueError("functions have their pole at lambda = 1")
    values = [apostol_bernoulli(m)(lv) for m in range(n + 3)]
    lhs = sum(
        (
            binomial(n, k) * values[k + 1] * values[n - k + 1]
            / ((k + 1) * (n - k + 1))
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    rhs = -(values[n + 2] / (n + 2) + values[n + 1] / (n + 1))
    return lhs, rhs


def lambda_moment_weight(k: int) -> RatFunc:
    """The weight lambda^k / (lambda-1)^(k+1) used by the moment integral."""
    if k < 0:
        raise ValueError("requires k >= 0")
    return RatFunc(Poly.monomial(k), _LAMBDA_MINUS_1 ** (k + 1))


def apostol_moment_integral(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Both routes of the improper moment integral over (-inf, 0]:

    integral of lambda^k/(lambda-1)^(k+1) times the index-(n+1) function.

    The exact route substitutes y = lambda/(1-lambda), which reduces the
    integral to (-1)^k (n+1) times the finite moment integral of y^k F_n
    over [-1, 0]; the formula route is ((n+1)/k!) sum_j S1u(k+1,j+1) B_{n+j}.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    if k < 0:
        raise ValueError("requires k >= 0")
    exact = (-1) ** k * (n + 1) * (Poly.monomial(k) * fubini_poly(n)).integrate(-1, 0)
    acc = sum(
        (stirling1_unsigned(k + 1, j + 1) * bernoulli(n + j) for j in range(k + 1)),
        Fraction(0),
    )
    formula = Fraction(n + 1, factorial(k)) * acc
    return exact, formula


def apostol_product_integral_exact(m: int, n: int) -> Fraction:
    """Exact improper integral of the index-(m+1) and index-(n+1) functions.

    The substitution y = lambda/(1-lambda) turns the product into
    (m+1)(n+1) F_m(y) F_n(y) dy over [-1, 0]; valid for all m, n >= 0.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    return (m + 1) * (n + 1) * (fubini_poly(m) * fubini_poly(n)).integrate(-1, 0)


def apostol_product_integral(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both routes of the improper product integral over (-inf, 0]:

    integral of the index-(m+1) times the index-(n+1) function equals
    (-1)^m (m+1)(n+1) sum_j C(m,j) B_{n+j}, for m >= 0, n >= 1.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    if m < 0:
        raise ValueError("requires m >= 0")
    exact = apostol_product_integral_exact(m, n)
    formula = (
        (-1) ** m
        * (m + 1)
        * (n + 1)
        * sum((binomial(m, j) * bernoulli(n + j) for j in range(m + 1)), Fraction(0))
    )
    return exact, formula


def improper_quadrature_oracle(f: RatFunc, tol: Union[float, Fraction] = 1e-10) -> float:
    """Numerically integrate a rational function over (-inf, 0].

    Requires that f has no pole on (-inf, 0] (checked exactly by Sturm
    chains) and decays at least like 1/lambda^2.  The domain is
    compactified by lambda = -t/(1-t) with t in [0, 1); the transformed
    integrand is built exactly as a rational function of t, so it has no
    pole on [0, 1] and adaptive quadrature applies directly.  The result
    carries absolute error at most tol.
    """
    tol = float(tol)
    if f.is_zero():
        return 0.0
    if f.den.degree - f.num.degree < 2:
        raise ValueError("integrand must decay at least like 1/lambda^2")
    if count_real_roots_nonpositive(f.den) > 0:
        raise ValueError("integrand has a pole on (-inf, 0]")
    # lambda = -t/(1-t): integral over (-inf, 0] becomes
    # integral over [0, 1] of f(-t/(1-t)) / (1-t)^2 dt.
    t_map = RatFunc(Poly([0, -1]), Poly([1, -1]))
    num_t = compose_poly_rational(f.num, t_map)
    den_t = compose_poly_rational(f.den, t_map)
    g = (num_t / den_t) * RatFunc(Poly.constant(1), Poly([1, -1]) ** 2)
    gnum = [float(c) for c in g.num.coeffs]
    gden = [float(c) for c in g.den.coeffs]

    def integrand(t: float) -> float:
        num = 0.0
        for c in reversed(gnum):
            num = num * t + c
        den = 0.0
        for c in reversed(gden):
            den = den * t + c
        return num / den

    from scipy.integrate import quad

    value, estimate = quad(integrand, 0.0, 1.0, epsabs=tol / 2, epsrel=1e-12, limit=200)
    if estimate > tol:
        raise ArithmeticError(f"quadrature error estimate {estimate} exceeds {tol}")
    return value
