"""Exact big-integer and big-rational first-moment machinery.

Everything here avoids floating point: perfect-matching counts, the
per-group boundary-edge placement coefficients, and the exact expected
numbers of subsets with a prescribed boundary signature in a uniform
random pairing of d*n points.  These values are the ground truth against
which the floating-point rate functions in ``bounds`` and the sampler in
``pairing`` are validated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .bounds import (
    BoundQuery,
    DomainError,
    ExponentPoint,
    _log_pow1p_m1,
    edge_exponent,
    solve_stationary_x,
    vertex_exponent,
)

__all__ = [
    "ExactExpectation",
    "boundary_coefficient",
    "boundary_coefficient_row",
    "coefficient_asymptotics_check",
    "coefficient_upper_bound_check",
    "expected_edge_count",
    "expected_vertex_count",
    "exponent_convergence_check",
    "log_fraction",
    "matchings_count",
]


def matchings_count(two_m: int) -> int:
    """Number of perfect matchings of two_m labeled points,
    (2m)!/(m! 2**m); exact integer."""
    if two_m < 0 or two_m % 2 != 0:
        raise DomainError(f"two_m = {two_m!r} must be even and nonnegative")
    m = two_m // 2
    return factorial(two_m) // (factorial(m) << m)


def boundary_coefficient_row(d: int, sn: int, cap: int | None = None) -> list[int]:
    """Coefficients of ((x+1)**d - 1)**sn up to degree cap (default d*sn).

    Index k counts the ways to mark k items out of sn groups of d so that
    every group gets at least one mark.  Exact dense convolution, truncated
    at the cap.
    """
    if d < 1:
        raise DomainError(f"group size d = {d!r} must be >= 1")
    if sn < 0:
        raise DomainError(f"group count sn = {sn!r} must be >= 0")
    if cap is None:
        cap = d * sn
    base = [0] + [comb(d, j) for j in range(1, d + 1)]
    row = [1]
    for _ in range(sn):
        new_len = min(len(row) + d, cap + 1)
        out = [0] * new_len
        for i, ci in enumerate(row):
            if ci == 0:
                continue
            for j in range(1, min(d, new_len - 1 - i) + 1):
                out[i + j] += ci * base[j]
        row = out
    return row


def boundary_coefficient(d: int, sn: int, yn: int) -> int:
    """Number of ways to mark yn items in sn groups of d with every group
    hit; 0 outside the support range sn <= yn <= d*sn."""
    if yn < 0 or yn < sn or yn > d * sn:
        return 0
    row = boundary_coefficient_row(d, sn, cap=yn)
    return row[yn] if yn < len(row) else 0


def _log_int(k: int) -> float:
    """Natural log of a positive integer of any size."""
    if k <= 0:
        raise DomainError(f"k = {k!r} must be positive")
    return math.log(k)


def log_fraction(value: Fraction) -> float:
    """Natural log of a positive rational, overflow-safe for huge terms."""
    if value <= 0:
        raise DomainError(f"value = {value!r} must be positive")
    return _log_int(value.numerator) - _log_int(value.denominator)


def coefficient_upper_bound_check(d: int, sn: int, yn: int, x: float) -> tuple[float, bool]:
    """Tilt bound x**(-yn) ((x+1)**d - 1)**sn against the exact coefficient.

    Returns (bound, holds); the comparison runs in log space so that huge
    cases stay exact, and the bound itself is inf once it overflows a float.
    The bound dominates the coefficient for every x > 0.
    """
    if not (x > 0.0):
        raise DomainError(f"tilt x = {x!r} must be positive")
    log_bound = -yn * math.log(x) + sn * _log_pow1p_m1(d, x)
    coefficient = boundary_coefficient(d, sn, yn)
    holds = True if coefficient == 0 else log_bound >= _log_int(coefficient) - 1e-12
    bound = math.exp(log_bound) if log_bound < 700.0 else math.inf
    return bound, holds


def coefficient_asymptotics_check(
    d: int, s: Fraction, y: Fraction, n_list: list[int]
) -> list[float]:
    """n-th root of the exact coefficient over its stationary-tilt bound.

    Returns r(n) = C(d, s*n, y*n)**(1/n) / (x0**(-y) ((x0+1)**d - 1)**s)
    for each n; the bound is asymptotically tight in the interior
    s < y < d*s, so the ratios climb toward 1 from below.  Each n must
    make s*n and y*n integral; fractional signatures are rejected, never
    rounded.
    """
    s = Fraction(s)
    y = Fraction(y)
    if d < 3:
        raise DomainError(f"group size d = {d!r} must be >= 3")
    if not (s < y < d * s):
        raise DomainError(f"need s < y < d*s as rationals, got s = {s}, y = {y}")
    x0 = solve_stationary_x(BoundQuery(d, 0.5), float(s), float(y)).value
    log_tilt_bound = -float(y) * math.log(x0) + float(s) * _log_pow1p_m1(d, x0)
    ratios = []
    for n in n_list:
        sn = _integral(s * n, f"s*n at n = {n}")
        yn = _integral(y * n, f"y*n at n = {n}")
        coefficient = boundary_coefficient(d, sn, yn)
        if coefficient <= 0:
            raise DomainError(f"coefficient vanished at n = {n}: signature ({sn}, {yn})")
        ratios.append(math.exp(_log_int(coefficient) / n - log_tilt_bound))
    return ratios


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise DomainError(f"{what} = {value} is not an integer; rejected rather than rounded")
    return int(value)


@dataclass(frozen=True)
class ExactExpectation:
    """An exact expected subset count and the integer signature it belongs to.

    sn is None for the edge-only signature.  The value is a nonnegative
    rational kept in lowest terms (automatic with Fraction).
    """

    value: Fraction
    n: int
    d: int
    un: int
    sn: int | None
    yn: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise DomainError(f"expectation {self.value!r} must be nonnegative")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __float__(self) -> float:
        return float(self.value)


def _check_signature(n: int, d: int, un: int, yn: int, sn: int | None) -> None:
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n = {n!r}, d = {d!r}")
    if (d * n) % 2 != 0:
        raise DomainError(f"d*n = {d * n} must be even for a pairing to exist")
    if not (0 <= un <= n):
        raise DomainError(f"un = {un!r} must lie in [0, n]")
    if yn < 0:
        raise DomainError(f"yn = {yn!r} must be nonnegative")
    if sn is not None:
        if sn < 0:
            raise DomainError(f"sn = {sn!r} must be nonnegative")
        if un + sn > n:
            raise DomainError(f"un + sn = {un + sn} exceeds n = {n}")


def _check_parity(n: int, d: int, un: int, yn: int) -> None:
    inside = d * un - yn
    outside = d * n - d * un - yn
    if inside % 2 != 0:
        raise DomainError(
            f"d*un - yn = {inside} is odd: the leftover points inside the subset cannot pair up"
        )
    if outside % 2 != 0:
        raise DomainError(
            f"d*n - d*un - yn = {outside} is odd: the leftover points outside cannot pair up"
        )


def expected_vertex_count(n: int, d: int, un: int, sn: int, yn: int) -> ExactExpectation:
    """Expected number of un-cell subsets with sn boundary cells and yn
    boundary edges in a uniform pairing of d*n points.

    Product of the placement coefficient for the boundary-edge endpoints
    falling in the boundary cells, the binomials choosing the subset, its
    boundary cells and the inside endpoints, the factorial matching the two
    endpoint sets, and the matching counts of both leftover pools, all over
    the total number of pairings.  Exact rational; zero whenever the
    placement support is empty, a parity violation (leftover pool of odd
    size) raises with the offending term named.
    """
    _check_signature(n, d, un, yn, sn)
    zero = ExactExpectation(Fraction(0), n, d, un, sn, yn)
    if yn > d * un or yn > d * (n - un):
        return zero
    _check_parity(n, d, un, yn)
    coefficient = boundary_coefficient(d, sn, yn)
    if coefficient == 0:
        return zero
    numerator = (
        coefficient
        * comb(n, un)
        * comb(n - un, sn)
        * comb(d * un, yn)
        * factorial(yn)
        * matchings_count(d * un - yn)
        * matchings_count(d * n - d * un - yn)
    )
    return ExactExpectation(Fraction(numerator, matchings_count(d * n)), n, d, un, sn, yn)


def expected_edge_count(n: int, d: int, un: int, yn: int) -> ExactExpectation:
    """Expected number of un-cell subsets with yn boundary edges in a
    uniform pairing of d*n points; edge-only analog of
    expected_vertex_count."""
    _check_signature(n, d, un, yn, sn=None)
    if yn > d * un or yn > d * (n - un):
        return ExactExpectation(Fraction(0), n, d, un, None, yn)
    _check_parity(n, d, un, yn)
    numerator = (
        comb(n, un)
        * comb(d * un, yn)
        * comb(d * n - d * un, yn)
        * factorial(yn)
        * matchings_count(d * un - yn)
        * matchings_count(d * n - d * un - yn)
    )
    return ExactExpectation(Fraction(numerator, matchings_count(d * n)), n, d, un, None, yn)


def exponent_convergence_check(
    d: int,
    u: Fraction,
    s: Fraction | None,
    y: Fraction,
    n_list: list[int],
    kind: str = "vertex",
) -> list[float]:
    """Gaps (1/n) log E(n) - rate for the exact expectations along n_list.

    For kind="vertex" the rate is the subset rate at the stationary tilt of
    (s, y); for kind="edge" (s ignored) it is the edge rate at y.  The gaps
    absorb the polynomial prefactors of the expectation, so their magnitude
    decays like log(n)/n; no sign is asserted.
    """
    u = Fraction(u)
    y = Fraction(y)
    if kind == "vertex":
        if s is None:
            raise DomainError("vertex signature needs s")
        s = Fraction(s)
        q = BoundQuery(d, float(u))
        x0 = solve_stationary_x(q, float(s), float(y)).value
        rate = vertex_exponent(q, ExponentPoint(float(u), float(s), float(y), x0))
    elif kind == "edge":
        q = BoundQuery(d, float(u))
        rate = edge_exponent(q, float(y))
    else:
        raise DomainError(f"kind = {kind!r} must be 'vertex' or 'edge'")
    gaps = []
    for n in n_list:
        un = _integral(u * n, f"u*n at n = {n}")
        yn = _integral(y * n, f"y*n at n = {n}")
        if kind == "vertex":
            sn = _integral(s * n, f"s*n at n = {n}")
            expectation = expected_vertex_count(n, d, un, sn, yn)
        else:
            expectation = expected_edge_count(n, d, un, yn)
        if expectation.value <= 0:
            raise DomainError(f"expectation vanished at n = {n}; signature infeasible")
        gaps.append(log_fraction(expectation.value) / n - rate)
    return gaps
