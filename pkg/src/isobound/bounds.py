"""Lower bounds on the expansion of random d-regular graphs.

First-moment counting in the uniform pairing of d*n points gives, for
subsets occupying a fraction u of the cells, a per-vertex exponential
growth rate for the expected number of subsets whose vertex boundary has
density s and whose edge boundary has density y.  Wherever that rate is
negative such subsets die out as n grows, so the first zero of the rate
along its critical profile turns into a lower bound on the expansion of
sets of relative size u.

This module evaluates the rates, locates their zeros by bisection (all
brackets are justified by monotonicity, unimodality or concavity of the
rate in question), and exposes the resulting bounds:

* ``vertex_bound(q)``            vertex-expansion lower bound at (d, u)
* ``vertex_bound_half(d)``       the u = 1/2 case via a one-variable equation
* ``edge_bound(q)``              edge-expansion lower bound at (d, u)
* ``edge_bound_theorem_form``    the same root from its explicit-equation form
* negativity scans certifying that the rate stays negative on the regions
  needed to convert expansion-profile bounds into isoperimetric bounds
* closed-form spectral, diameter and large-d reference bounds

Everything is pure IEEE-double arithmetic; logs of quantities such as
(x+1)**d - 1 or 2**d - 1 are computed in shifted form so degrees in the
hundreds stay overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

__all__ = [
    "BoundQuery",
    "BracketError",
    "DomainError",
    "ExponentPoint",
    "InvalidPointError",
    "RootResult",
    "ScanReport",
    "SCAN_NEGATIVITY_LIMIT",
    "binary_entropy",
    "diameter_upper_bound",
    "edge_asymptote",
    "edge_bound",
    "edge_bound_theorem_form",
    "edge_exponent",
    "edge_gap_coefficient",
    "edge_negativity_scan",
    "find_edge_profile_zero",
    "find_edge_theorem_zero",
    "find_half_occupancy_zero",
    "find_profile_zero",
    "max_exponent_unit_x",
    "max_min_exponent",
    "profile_domain_max",
    "profile_exponent",
    "profile_mode",
    "profile_s",
    "profile_x",
    "solve_stationary_x",
    "spectral_vertex_bound",
    "stationary_s",
    "vertex_bound",
    "vertex_bound_half",
    "vertex_exponent",
    "vertex_half_asymptote",
    "vertex_negativity_scan",
]

# Log arguments at or below this threshold, when they carry a nonzero
# weight, indicate an invalid evaluation point rather than a limit.
_TINY = 1e-300

LOG2 = math.log(2.0)

# Negativity scans must clear this margin to count as a pass.
SCAN_NEGATIVITY_LIMIT = -1e-9


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class InvalidPointError(DomainError):
    """A log with nonzero weight was asked for a non-positive argument."""


class BracketError(RuntimeError):
    """A root bracket could not be established; message carries diagnostics."""


@dataclass(frozen=True)
class BoundQuery:
    """A (degree, occupancy) pair plus root-solver settings.

    d is the graph degree, u the fraction of vertices the subsets occupy.
    tol is the absolute bisection tolerance on the root abscissa and
    max_iter caps the bisection steps.
    """

    d: int
    u: float
    tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self) -> None:
        if self.d != int(self.d) or int(self.d) < 3:
            raise DomainError(f"degree d = {self.d!r} must be an integer >= 3")
        object.__setattr__(self, "d", int(self.d))
        if not (0.0 < self.u <= 0.5):
            raise DomainError(f"occupancy u = {self.u!r} must lie in (0, 1/2]")
        if not (self.tol > 0.0):
            raise DomainError(f"tol = {self.tol!r} must be positive")
        if self.max_iter < 1:
            raise DomainError(f"max_iter = {self.max_iter!r} must be >= 1")


@dataclass(frozen=True)
class ExponentPoint:
    """Evaluation point (u, s, y, x) for the subset-count growth rate.

    u: subset density, s: vertex-boundary density, y: edge-boundary
    density, x: positive tilt for the boundary-edge placement bound.
    The tilt is ignored when s = y = 0.
    """

    u: float
    s: float
    y: float
    x: float = 1.0


@dataclass(frozen=True)
class RootResult:
    """A located root with its final bracket, residual and step count."""

    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a grid negativity scan over a rate region.

    u is the target occupancy for the edge region and None for the vertex
    region, whose occupancy axis is scanned.  argmax is the grid point
    attaining max_value (ties broken by smallest grid index).
    """

    d: int
    u: float | None
    grid: int
    margin: float
    max_value: float
    argmax: tuple[float, float]
    n_points: int

    @property
    def passed(self) -> bool:
        return self.max_value < SCAN_NEGATIVITY_LIMIT


# ---------------------------------------------------------------------------
# log-domain primitives


def _tlogt(t: float, what: str) -> float:
    """t*log(t) continued by its limit value 0 at t = 0."""
    if t <= 0.0:
        if t < -1e-12:
            raise InvalidPointError(f"{what} = {t!r} is negative")
        return 0.0
    return t * math.log(t)


def _wlog(w: float, z: float, what: str) -> float:
    """w*log(z) where the weight does not vanish with the argument."""
    if w == 0.0:
        return 0.0
    if not (z > _TINY):
        raise InvalidPointError(f"log argument {what} = {z!r} carries weight {w!r}")
    return w * math.log(z)


def _log_pow1p_m1(d: int, x: float) -> float:
    """log((x+1)**d - 1), safe for d large enough to overflow the power."""
    if not (x > _TINY):
        raise InvalidPointError(f"tilt x = {x!r} must be positive")
    t = d * math.log1p(x)
    return t + math.log1p(-math.exp(-t))


def _log_2d_m1(d: int) -> float:
    """log(2**d - 1) without forming the power."""
    return d * LOG2 + math.log1p(-(2.0 ** -d))


def _tilted_mean(d: int, x: float) -> float:
    """G(x) = x d (x+1)**(d-1) / ((x+1)**d - 1).

    Mean number of marked items per group of d under tilt x; increases
    from 1 at x -> 0 to d at x -> infinity.
    """
    return d * x / ((1.0 + x) * (-math.expm1(-d * math.log1p(x))))


def binary_entropy(u: float) -> float:
    """-u*log(u) - (1-u)*log(1-u) in nats."""
    if not (0.0 <= u <= 1.0):
        raise DomainError(f"u = {u!r} must lie in [0, 1]")
    return -_tlogt(u, "u") - _tlogt(1.0 - u, "1 - u")


# ---------------------------------------------------------------------------
# growth rates


def _check_point(d: int, p: ExponentPoint) -> None:
    if not (0.0 < p.u <= 0.5):
        raise InvalidPointError(f"u = {p.u!r} must lie in (0, 1/2]")
    if not (-1e-15 <= p.s <= 1.0 - p.u + 1e-12):
        raise InvalidPointError(f"s = {p.s!r} must lie in [0, 1 - u]")
    cap = min(d * p.s, d * p.u)
    if not (-1e-15 <= p.y <= cap * (1.0 + 1e-12) + 1e-15):
        raise InvalidPointError(f"y = {p.y!r} must lie in [0, min(d*s, d*u)] = [0, {cap!r}]")
    if (p.s > 0.0 or p.y > 0.0) and not (p.x > 0.0):
        raise InvalidPointError(f"tilt x = {p.x!r} must be positive when s or y is nonzero")


def _f_vertex(d: int, u: float, s: float, y: float, x: float) -> float:
    du = d * u
    total = du * math.log(du)
    total += 0.5 * _tlogt(d - du - y, "d - d*u - y")
    if s > 0.0:
        total += s * _log_pow1p_m1(d, x)
    total -= _wlog(y, x, "x")
    total -= u * math.log(u)
    total -= _tlogt(s, "s")
    total -= _tlogt(1.0 - u - s, "1 - u - s")
    total -= 0.5 * _tlogt(du - y, "d*u - y")
    total -= 0.5 * d * math.log(d)
    return total


def _f_vertex_tiltless(d: int, u: float, s: float, y: float) -> float:
    """The vertex rate with its two tilt terms removed (their limit is added
    separately at the y = s and y = d*s endpoints)."""
    du = d * u
    return (
        du * math.log(du)
        + 0.5 * _tlogt(d - du - y, "d - d*u - y")
        - u * math.log(u)
        - _tlogt(s, "s")
        - _tlogt(1.0 - u - s, "1 - u - s")
        - 0.5 * _tlogt(du - y, "d*u - y")
        - 0.5 * d * math.log(d)
    )


def vertex_exponent(q: BoundQuery, p: ExponentPoint) -> float:
    """Growth rate of the expected count of subsets with boundary profile (s, y).

    Per-cell exponential rate, in a uniform random pairing at degree q.d, of
    the expected number of subsets of density p.u whose vertex boundary has
    density p.s and edge boundary density p.y; p.x > 0 is the free tilt used
    to bound the boundary-edge placement count.  Uses the 0*log(0) = 0
    convention on the boundary of the domain; a log argument that is not
    positive while carrying nonzero weight raises InvalidPointError.
    """
    _check_point(q.d, p)
    return _f_vertex(q.d, p.u, p.s, p.y, p.x)


def _f_edge(d: int, u: float, y: float) -> float:
    du = d * u
    return (
        du * math.log(du)
        + (d - du) * math.log(d - du)
        - u * math.log(u)
        - (1.0 - u) * math.log(1.0 - u)
        - _tlogt(y, "y")
        - 0.5 * (_tlogt(du - y, "d*u - y") + _tlogt(d - du - y, "d - d*u - y") + d * math.log(d))
    )


def edge_exponent(q: BoundQuery, y: float) -> float:
    """Growth rate of the expected count of subsets with edge-boundary density y.

    Strictly concave in y on [0, d*u); negative as y -> 0+ and equal to the
    binary entropy of u at y = d*u*(1-u), which is what makes its first zero
    a usable bound.
    """
    du = q.d * q.u
    if not (0.0 <= y < du):
        raise DomainError(f"y = {y!r} must lie in [0, d*u) = [0, {du!r})")
    return _f_edge(q.d, q.u, y)


# ---------------------------------------------------------------------------
# the critical profile in (x, s, y)


def profile_x(q: BoundQuery, y: float) -> float:
    """Tilt sqrt((d*u - y)/(d - d*u - y)) at which y is the critical
    edge-boundary density; nonincreasing in y, identically 1 at u = 1/2."""
    du = q.d * q.u
    if not (0.0 <= y < du):
        raise DomainError(f"y = {y!r} must lie in [0, d*u) = [0, {du!r})")
    denom = q.d - du - y
    if not (denom > 0.0):
        raise DomainError(f"y = {y!r} must stay below d - d*u = {q.d - du!r}")
    return math.sqrt((du - y) / denom)


def stationary_s(q: BoundQuery, y: float, x: float) -> float:
    """S(y, x) = y ((x+1)**d - 1) / (x d (x+1)**(d-1)).

    The vertex-boundary density for which x is the stationary tilt of the
    rate at edge-boundary density y; linear in y and strictly decreasing
    in x for y > 0.
    """
    if not (x > 0.0):
        raise DomainError(f"tilt x = {x!r} must be positive")
    if y < 0.0:
        raise DomainError(f"y = {y!r} must be nonnegative")
    if y == 0.0:
        return 0.0
    return y / _tilted_mean(q.d, x)


def profile_s(q: BoundQuery, y: float) -> float:
    """Vertex-boundary density paired with y on the critical profile,
    S(y, profile_x(y)); strictly increasing in y, 0 at y = 0."""
    if y == 0.0:
        return 0.0
    return stationary_s(q, y, profile_x(q, y))


def profile_mode(q: BoundQuery) -> float:
    """d*u*(1-u), the mode of the profile rate."""
    return q.d * q.u * (1.0 - q.u)


def profile_domain_max(q: BoundQuery) -> float:
    """Largest edge-boundary density on the critical profile.

    The paired vertex-boundary density profile_s(y) grows to d*u as
    y -> d*u and may cross its ceiling 1 - u on the way; past that point
    the profile leaves the rate's domain.  Returns d*u when no crossing
    occurs, otherwise the crossing point (profile_s is increasing, so it
    is unique); always above the mode.
    """
    du = q.d * q.u
    ceiling = 1.0 - q.u
    probe = du * (1.0 - 1e-12)
    if profile_s(q, probe) <= ceiling:
        return probe
    lo = profile_mode(q)
    root = _bisect_increasing(
        lambda y: profile_s(q, y) - ceiling, lo, probe, q.tol, q.max_iter
    )
    return root.bracket_lo


def profile_exponent(q: BoundQuery, y: float) -> float:
    """The vertex rate along the critical profile (profile_s(y), y, profile_x(y)).

    Unimodal in y with mode at profile_mode(q), negative as y -> 0+ and
    equal to the binary entropy of u at the mode; its unique zero below the
    mode determines the vertex bound.  Defined while the paired
    vertex-boundary density stays below 1 - u (see profile_domain_max).
    """
    du = q.d * q.u
    if not (0.0 < y < du):
        raise DomainError(f"y = {y!r} must lie in (0, d*u) = (0, {du!r})")
    x = profile_x(q, y)
    s = stationary_s(q, y, x)
    if s > 1.0 - q.u + 1e-12:
        raise DomainError(
            f"y = {y!r} is beyond the profile domain: paired s = {s!r} exceeds 1 - u = {1.0 - q.u!r}"
        )
    return _f_vertex(q.d, q.u, s, y, x)


# ---------------------------------------------------------------------------
# bisection plumbing


def _bisect_increasing(fn, lo: float, hi: float, tol: float, max_iter: int) -> RootResult:
    """Bisection for the zero of an increasing-through-zero function.

    Requires fn(lo) < 0 < fn(hi); the returned bracket endpoints still
    straddle the zero and the residual is fn evaluated at the midpoint.
    """
    flo = fn(lo)
    fhi = fn(hi)
    if not (flo < 0.0):
        raise BracketError(f"fn({lo!r}) = {flo!r} is not negative; bracket invalid")
    if not (fhi > 0.0):
        raise BracketError(f"fn({hi!r}) = {fhi!r} is not positive; bracket invalid")
    iterations = 0
    while hi - lo > tol * max(1.0, abs(hi)) and iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        if fn(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    value = 0.5 * (lo + hi)
    return RootResult(value, lo, hi, fn(value), iterations)


def solve_stationary_x(q: BoundQuery, s: float, y: float) -> RootResult:
    """Positive root x0 of the tilt-stationarity condition s*G(x) = y.

    G increases from 1 to d, so a root exists exactly for s < y < d*s;
    asking for the endpoints pushes the root to 0 or infinity and raises
    BracketError once the bracket expansion hits its cap.  The recorded
    residual is the stationarity equation itself,
    s d (x+1)**(d-1)/((x+1)**d - 1) - y/x, at the root.
    """
    d = q.d
    if not (s > 0.0):
        raise DomainError(f"s = {s!r} must be positive")
    if y < s or y > d * s:
        raise DomainError(f"no stationary tilt: y = {y!r} outside [s, d*s] = [{s!r}, {d * s!r}]")
    target = y / s
    lo = 1.0
    hi = 1.0
    expansions = 0
    while _tilted_mean(d, lo) >= target:
        lo *= 0.125
        expansions += 1
        if lo < 1e-13:
            raise BracketError(
                f"stationary tilt fell below {lo:.3e}: y/s = {target!r} is at the y -> s boundary"
            )
    while _tilted_mean(d, hi) <= target:
        hi *= 8.0
        expansions += 1
        if hi > 1e13:
            raise BracketError(
                f"stationary tilt grew beyond {hi:.3e}: y/s = {target!r} is at the y -> d*s boundary"
            )
    root = _bisect_increasing(lambda x: _tilted_mean(d, x) - target, lo, hi, q.tol, q.max_iter)
    residual = s * (_tilted_mean(d, root.value) - target) / root.value
    return replace(root, residual=residual, iterations=root.iterations + expansions)


def find_profile_zero(q: BoundQuery) -> RootResult:
    """The unique zero of the profile rate below its mode.

    The rate is strictly increasing on (0, mode), provably negative near 0
    and positive at the mode; both bracket signs are re-verified at runtime
    before bisecting.
    """
    ym = profile_mode(q)
    lo = 1e-9 * ym
    return _bisect_increasing(lambda y: profile_exponent(q, y), lo, ym, q.tol, q.max_iter)


def vertex_bound(q: BoundQuery) -> float:
    """Lower bound on the u-vertex expansion of random d-regular graphs,
    profile_s at the profile zero divided by u."""
    ybar = find_profile_zero(q).value
    return profile_s(q, ybar) / q.u


def find_half_occupancy_zero(d: int, tol: float = 1e-12, max_iter: int = 200) -> RootResult:
    """Smallest positive root of the half-occupancy rate equation.

    phi(s) = s log(2**d - 1) - (d/2 + s - 1) log 2 - ((1-2s)/2) log(1-2s)
    - s log(s) is the u = 1/2 rate as a function of the vertex-boundary
    density alone (the edge density drops out at tilt 1).  phi increases
    through zero on (0, (1 - 2**-d)/2], which brackets the smallest root.
    """
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if not (tol > 0.0):
        raise DomainError(f"tol = {tol!r} must be positive")
    log_2d = _log_2d_m1(d)

    def phi(s: float) -> float:
        return (
            s * log_2d
            - (0.5 * d + s - 1.0) * LOG2
            - 0.5 * _tlogt(1.0 - 2.0 * s, "1 - 2s")
            - _tlogt(s, "s")
        )

    s_mode = 0.5 * (1.0 - 2.0 ** -d)
    return _bisect_increasing(phi, 1e-9, s_mode, tol, max_iter)


def vertex_bound_half(d: int, tol: float = 1e-12) -> float:
    """Vertex-expansion lower bound at half occupancy, 2 * (smallest root of
    the half-occupancy equation); agrees with vertex_bound(d, 1/2)."""
    return 2.0 * find_half_occupancy_zero(d, tol).value


# ---------------------------------------------------------------------------
# max-min rate over the boundary densities


def _min_exponent_over_x(q: BoundQuery, s: float, y: float) -> float:
    """min over tilts x > 0 of the vertex rate at fixed (s, y).

    Interior minimum at the stationarity root for s < y < d*s; at the
    endpoints the tilt terms converge to s*log(d) (y = s, x -> 0) and 0
    (y = d*s, x -> infinity).
    """
    d, u = q.d, q.u
    if y <= s * (1.0 + 1e-12):
        return _f_vertex_tiltless(d, u, s, s) + s * math.log(d)
    if y >= d * s * (1.0 - 1e-12):
        return _f_vertex_tiltless(d, u, s, d * s)
    x0 = solve_stationary_x(q, s, y).value
    return _f_vertex(d, u, s, y, x0)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fn, lo: float, hi: float, tol: float, max_iter: int = 200) -> float:
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    e = a + _INVPHI * (b - a)
    fc, fe = fn(c), fn(e)
    iterations = 0
    while b - a > tol and iterations < max_iter:
        if fc >= fe:
            b, e, fe = e, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, e, fe
            e = a + _INVPHI * (b - a)
            fe = fn(e)
        iterations += 1
    return fn(0.5 * (a + b))


def max_min_exponent(q: BoundQuery, s: float, grid: int = 256) -> float:
    """max over y in [s, min(d*s, d*u)] of the tilt-minimized vertex rate.

    Grid scan with golden-section refinement in the winning cell; the grid
    guards against multimodality in y, which is not ruled out away from the
    critical profile.  Negative exactly when vertex-boundary density s is
    unreachable for subsets of density u, which is what the bounds exploit.
    """
    d, u = q.d, q.u
    du = d * u
    if grid < 16:
        raise DomainError(f"grid = {grid!r} must be >= 16")
    if s == 0.0:
        # s = 0 forces y = 0 and the tilt drops out.
        return _f_vertex(d, u, 0.0, 0.0, 1.0)
    if not (0.0 < s < 1.0 - u):
        raise DomainError(f"s = {s!r} must lie in (0, 1 - u)")
    if s > du:
        raise DomainError(f"s = {s!r} exceeds d*u = {du!r}: no admissible edge-boundary density")
    y_hi = min(d * s, du)
    if y_hi <= s:
        return _min_exponent_over_x(q, s, s)
    ys = [s + (y_hi - s) * k / grid for k in range(grid + 1)]
    vals = [_min_exponent_over_x(q, s, y) for y in ys]
    k = max(range(len(vals)), key=lambda i: (vals[i], -i))
    a = ys[max(k - 1, 0)]
    b = ys[min(k + 1, grid)]
    refined = _golden_max(lambda yy: _min_exponent_over_x(q, s, yy), a, b, tol=1e-10 * max(1.0, y_hi))
    return max(vals[k], refined)


def max_exponent_unit_x(q: BoundQuery, s: float) -> float:
    """max over admissible y of the vertex rate at tilt x = 1.

    For u < 1/2 the rate decreases in y at unit tilt, so the maximum sits at
    y = s; at u = 1/2 the rate is y-free and y = s returns the common value.
    Always an upper bound for max_min_exponent at the same s.
    """
    d, u = q.d, q.u
    if s == 0.0:
        return _f_vertex(d, u, 0.0, 0.0, 1.0)
    if not (0.0 < s < 1.0 - u):
        raise DomainError(f"s = {s!r} must lie in (0, 1 - u)")
    if s > d * u:
        raise DomainError(f"s = {s!r} exceeds d*u = {d * u!r}: no admissible edge-boundary density")
    return _f_vertex(d, u, s, s, 1.0)


# ---------------------------------------------------------------------------
# negativity scans


def vertex_negativity_scan(d: int, grid: int = 128, margin: float = 1e-3) -> ScanReport:
    """Grid maximum of the unit-tilt vertex rate g(u, r) = f(u, r*u, r*u, 1)
    over the open region 0 < u < 1/2, 0 <= r < vertex_bound_half(d).

    The rate tends to 0 on the u -> 0 and r -> bound edges, so the scan
    keeps a margin away from them; a strictly negative maximum certifies
    that the half-occupancy bound survives for all smaller subset sizes.
    """
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if grid < 64:
        raise DomainError(f"grid = {grid!r} must be >= 64")
    a_half = vertex_bound_half(d)
    best = -math.inf
    arg = (math.nan, math.nan)
    for i in range(grid):
        u = margin + (0.5 - 2.0 * margin) * i / (grid - 1)
        for j in range(grid):
            r = (a_half - margin) * j / (grid - 1)
            value = _f_vertex(d, u, r * u, r * u, 1.0)
            if value > best:
                best = value
                arg = (u, r)
    return ScanReport(d=d, u=None, grid=grid, margin=margin, max_value=best, argmax=arg, n_points=grid * grid)


def edge_negativity_scan(d: int, u: float = 0.5, grid: int = 128, margin: float = 1e-3) -> ScanReport:
    """Grid maximum of g(r, w) = edge rate at (w, r*w) over
    0 <= r < edge_bound(d, u), 0 < w <= u.

    Certifies that the edge bound at occupancy u survives for all smaller
    subset sizes; the rate tends to 0 as w -> 0, hence the margin.
    """
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if grid < 64:
        raise DomainError(f"grid = {grid!r} must be >= 64")
    if not (0.0 < u <= 0.5):
        raise DomainError(f"occupancy u = {u!r} must lie in (0, 1/2]")
    a_hat = edge_bound(BoundQuery(d, u))
    best = -math.inf
    arg = (math.nan, math.nan)
    for i in range(grid):
        w = margin + (u - margin) * i / (grid - 1)
        for j in range(grid):
            r = (a_hat - margin) * j / (grid - 1)
            value = _f_edge(d, w, r * w)
            if value > best:
                best = value
                arg = (r, w)
    return ScanReport(d=d, u=u, grid=grid, margin=margin, max_value=best, argmax=arg, n_points=grid * grid)


# ---------------------------------------------------------------------------
# edge bounds


def find_edge_profile_zero(q: BoundQuery) -> RootResult:
    """Smallest positive zero of the edge rate.

    The rate is negative as y -> 0+, positive at y = d*u*(1-u) and strictly
    concave on [0, d*u), so its smallest zero lies in that bracket and is
    found by bisection; a sign check halfway to the mode re-confirms that
    the smaller of the (at most two) zeros was taken.
    """
    ym = profile_mode(q)
    lo = 1e-9 * ym
    root = _bisect_increasing(lambda y: edge_exponent(q, y), lo, ym, q.tol, q.max_iter)
    midpoint = 0.5 * (root.value + ym)
    if edge_exponent(q, midpoint) < 0.0:
        raise BracketError(
            f"edge rate dipped negative at {midpoint!r} between root {root.value!r} and mode {ym!r}"
        )
    return root


def edge_bound(q: BoundQuery) -> float:
    """Lower bound on the u-edge expansion of random d-regular graphs,
    the smallest zero of the edge rate divided by u."""
    return find_edge_profile_zero(q).value / q.u


def find_edge_theorem_zero(d: int, u: float, tol: float = 1e-12, max_iter: int = 200) -> RootResult:
    """Smallest positive root of the explicit edge-bound equation

    d**(d/2) u**((d-1)u) (1-u)**((d-1)(1-u))
        = (du-y)**((du-y)/2) (d-du-y)**((d-du-y)/2) y**y,

    solved in log form on the same bracket as the edge rate.  Analytically
    this is the edge rate rearranged; the implementation keeps the two
    parameterizations separate so their agreement stays a checkable
    invariant instead of an assumption.
    """
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if not (0.0 < u <= 0.5):
        raise DomainError(f"occupancy u = {u!r} must lie in (0, 1/2]")
    if not (tol > 0.0):
        raise DomainError(f"tol = {tol!r} must be positive")
    du = d * u
    lhs = 0.5 * d * math.log(d) + (d - 1.0) * (u * math.log(u) + (1.0 - u) * math.log(1.0 - u))

    def gap(y: float) -> float:
        rhs = (
            0.5 * _tlogt(du - y, "d*u - y")
            + 0.5 * _tlogt(d - du - y, "d - d*u - y")
            + _tlogt(y, "y")
        )
        return lhs - rhs

    ym = du * (1.0 - u)
    return _bisect_increasing(gap, 1e-9 * ym, ym, tol, max_iter)


def edge_bound_theorem_form(d: int, u: float, tol: float = 1e-12) -> float:
    """Edge-expansion lower bound from the explicit-equation form; agrees
    with edge_bound to root-finding accuracy."""
    return find_edge_theorem_zero(d, u, tol).value / u


# ---------------------------------------------------------------------------
# closed-form reference bounds


def vertex_half_asymptote(d: int) -> float:
    """Leading-order large-d value 1 - 2/d of the half-occupancy vertex bound."""
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    return 1.0 - 2.0 / d


def edge_gap_coefficient(u: float) -> float:
    """Coefficient 2 (1-u) sqrt(H(u)) of the sqrt(d) correction in the
    large-d edge bound, with H the binary entropy in nats."""
    if not (0.0 < u < 1.0):
        raise DomainError(f"u = {u!r} must lie in (0, 1)")
    return 2.0 * (1.0 - u) * math.sqrt(binary_entropy(u))


def edge_asymptote(d: int, u: float) -> float:
    """Large-d approximation d(1-u) - edge_gap_coefficient(u) sqrt(d) of the
    edge bound; at u = 1/2 this is d/2 - sqrt(d log 2)."""
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if not (0.0 < u <= 0.5):
        raise DomainError(f"occupancy u = {u!r} must lie in (0, 1/2]")
    return d * (1.0 - u) - edge_gap_coefficient(u) * math.sqrt(d)


def spectral_vertex_bound(d: int, u: float) -> float:
    """Vertex-expansion bound 1/(u(1-a) + a) - 1 with a = 4(d-1)/d**2, the
    squared second-eigenvalue ratio guaranteed for random d-regular graphs."""
    if d < 3:
        raise DomainError(f"degree d = {d!r} must be >= 3")
    if not (0.0 < u <= 0.5):
        raise DomainError(f"occupancy u = {u!r} must lie in (0, 1/2]")
    alpha_sq = 4.0 * (d - 1.0) / (d * d)
    return 1.0 / (u * (1.0 - alpha_sq) + alpha_sq) - 1.0


def diameter_upper_bound(n: int, iv: float) -> float:
    """2 log(n/2) / log(1 + iv): iterated neighbourhoods grow by 1 + iv until
    they pass n/2, bounding the diameter of any graph with vertex
    isoperimetric number iv."""
    if n < 2:
        raise DomainError(f"n = {n!r} must be >= 2")
    if not (iv > 0.0):
        raise DomainError(f"iv = {iv!r} must be positive")
    return 2.0 * math.log(n / 2.0) / math.log1p(iv)
