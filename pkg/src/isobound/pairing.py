"""Uniform pairing model: sampling, exhaustive enumeration, boundary statistics.

A pairing on n cells of d points is a perfect matching of the d*n points;
collapsing cells gives a random d-regular multigraph.  This module samples
pairings uniformly, enumerates them exhaustively at desk scale, projects
them to multigraphs, and computes exact boundary statistics: per-subset
boundary summaries, exact isoperimetric minima over all small subsets, and
counts of subsets with a prescribed boundary signature, whose enumeration
averages and Monte Carlo estimates validate the exact expectations in
``exact``.

Subset scans are vectorized with numpy over all size-k subsets at once;
the subset matrices are cached per (n, k) so repeated scans over sampled
graphs stay fast.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .bounds import DomainError
from .exact import matchings_count

__all__ = [
    "BoundarySummary",
    "CapExceededError",
    "IsoperimetricResult",
    "MonteCarloEstimate",
    "Multigraph",
    "Pairing",
    "boundary_summary",
    "count_subsets_with_signature",
    "enumerate_pairings",
    "is_connected",
    "min_isoperimetric_exhaustive",
    "monte_carlo_expectation",
    "project",
    "sample_pairing",
    "sample_simple_pairing",
    "signature_means_by_enumeration",
]

ENUMERATION_CAP = 10_000_000
SUBSET_SCAN_CAP_N = 24
SIGNATURE_SCAN_CAP = 5_000_000


class CapExceededError(RuntimeError):
    """An exhaustive scan was refused because it exceeds its configured cap."""


@dataclass(frozen=True)
class Pairing:
    """A perfect matching of the d*n points; point p lives in cell p // d."""

    n: int
    d: int
    mate: tuple[int, ...]

    def __post_init__(self) -> None:
        dn = self.n * self.d
        if dn % 2 != 0:
            raise DomainError(f"d*n = {dn} must be even")
        if len(self.mate) != dn:
            raise DomainError(f"mate table has {len(self.mate)} entries, expected {dn}")
        for p, q in enumerate(self.mate):
            if q == p or not (0 <= q < dn) or self.mate[q] != p:
                raise DomainError(f"mate table is not a fixed-point-free involution at point {p}")

    def cell(self, point: int) -> int:
        return point // self.d

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Each matched pair once, as (p, mate[p]) with p < mate[p]."""
        for p, q in enumerate(self.mate):
            if p < q:
                yield p, q


@dataclass(frozen=True)
class Multigraph:
    """Edge multiset on n vertices; loops allowed, multiplicities recorded.

    edges holds ((a, b), multiplicity) with a <= b, sorted; a == b is a loop.
    """

    n: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    @property
    def simple(self) -> bool:
        return all(a != b and m == 1 for (a, b), m in self.edges)

    @property
    def num_edges(self) -> int:
        return sum(m for _, m in self.edges)

    def degrees(self) -> list[int]:
        out = [0] * self.n
        for (a, b), m in self.edges:
            out[a] += m
            out[b] += m
        return out

    def adjacency(self) -> list[dict[int, int]]:
        """Neighbor -> multiplicity per vertex, loops excluded (they never
        contribute to a boundary)."""
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for (a, b), m in self.edges:
            if a == b:
                continue
            adj[a][b] = adj[a].get(b, 0) + m
            adj[b][a] = adj[b].get(a, 0) + m
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        """Symmetric multiplicity matrix with a zero diagonal (float64 so the
        subset scans run through BLAS; entries are small exact integers)."""
        mat = np.zeros((self.n, self.n), dtype=np.float64)
        for (a, b), m in self.edges:
            if a == b:
                continue
            mat[a, b] += m
            mat[b, a] += m
        return mat


@dataclass(frozen=True)
class BoundarySummary:
    """Subset size with its vertex- and edge-boundary sizes."""

    subset_size: int
    vertex_boundary: int
    edge_boundary: int

    def __post_init__(self) -> None:
        if min(self.subset_size, self.vertex_boundary, self.edge_boundary) < 0:
            raise DomainError("boundary sizes must be nonnegative")
        if self.vertex_boundary > self.edge_boundary:
            raise DomainError(
                f"vertex boundary {self.vertex_boundary} exceeds edge boundary {self.edge_boundary}"
            )
        if (self.vertex_boundary == 0) != (self.edge_boundary == 0):
            raise DomainError("one boundary is empty while the other is not")


@dataclass(frozen=True)
class IsoperimetricResult:
    """Exact isoperimetric minima with one witness subset each."""

    vertex_ratio: Fraction
    edge_ratio: Fraction
    vertex_witness: frozenset[int]
    edge_witness: frozenset[int]


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    std_error: float
    samples: int


def _sample_seed(master: int, index: int) -> int:
    # Per-sample seeds depend only on (master, index), so any partitioning
    # of the index range reproduces the same stream.
    return (master << 32) + index


def sample_pairing(n: int, d: int, seed: int) -> Pairing:
    """Uniform random pairing: shuffle the d*n points and pair consecutively.

    Every matching arises from the same number of orderings, so a uniform
    shuffle induces the uniform distribution on pairings.  Deterministic in
    the seed.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n = {n!r}, d = {d!r}")
    dn = n * d
    if dn % 2 != 0:
        raise DomainError(f"d*n = {dn} must be even")
    rng = random.Random(seed)
    points = list(range(dn))
    rng.shuffle(points)
    mate = [0] * dn
    for i in range(0, dn, 2):
        a, b = points[i], points[i + 1]
        mate[a] = b
        mate[b] = a
    return Pairing(n, d, tuple(mate))


def sample_simple_pairing(n: int, d: int, seed: int, max_attempts: int = 100_000) -> tuple[Pairing, int]:
    """Rejection-sample until the projected multigraph is simple.

    Returns (pairing, rejections); deterministic in the seed.
    """
    for attempt in range(max_attempts):
        p = sample_pairing(n, d, _sample_seed(seed, attempt))
        if project(p).simple:
            return p, attempt
    raise CapExceededError(f"no simple projection within {max_attempts} attempts at n={n}, d={d}")


def enumerate_pairings(n: int, d: int, cap: int = ENUMERATION_CAP) -> Iterator[Pairing]:
    """Every pairing of the d*n points exactly once.

    Pairs the smallest unmatched point with each larger unmatched point and
    recurses, which visits each perfect matching once.  Refuses upfront when
    the matching count exceeds the cap.
    """
    if n < 1 or d < 1:
        raise DomainError(f"need n >= 1 and d >= 1, got n = {n!r}, d = {d!r}")
    dn = n * d
    if dn % 2 != 0:
        raise DomainError(f"d*n = {dn} must be even")
    total = matchings_count(dn)
    if total > cap:
        raise CapExceededError(f"{total} pairings at n={n}, d={d}; rerun with cap >= {total}")

    mate = [-1] * dn

    def rec(first_free: int) -> Iterator[Pairing]:
        while first_free < dn and mate[first_free] >= 0:
            first_free += 1
        if first_free == dn:
            yield Pairing(n, d, tuple(mate))
            return
        a = first_free
        for b in range(a + 1, dn):
            if mate[b] >= 0:
                continue
            mate[a] = b
            mate[b] = a
            yield from rec(a + 1)
            mate[a] = -1
            mate[b] = -1

    return rec(0)


def project(p: Pairing) -> Multigraph:
    """Collapse each cell to a vertex; the pairs become the edge multiset."""
    counts: dict[tuple[int, int], int] = {}
    for a, b in p.pairs():
        ca, cb = a // p.d, b // p.d
        key = (ca, cb) if ca <= cb else (cb, ca)
        counts[key] = counts.get(key, 0) + 1
    return Multigraph(p.n, tuple(sorted(counts.items())))


def boundary_summary(g: Multigraph | Pairing, subset: Iterable[int]) -> BoundarySummary:
    """Vertex and edge boundary of a cell subset.

    The vertex boundary collects vertices outside the subset adjacent to it;
    the edge boundary counts edges with exactly one end inside, with
    multiplicity.  Loops never touch a boundary.
    """
    if isinstance(g, Pairing):
        g = project(g)
    members = set(subset)
    for v in members:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v!r} outside range(0, {g.n})")
    edge_boundary = 0
    vertex_boundary: set[int] = set()
    for (a, b), m in g.edges:
        a_in = a in members
        if a_in != (b in members):
            edge_boundary += m
            vertex_boundary.add(a if not a_in else b)
    return BoundarySummary(len(members), len(vertex_boundary), edge_boundary)


@lru_cache(maxsize=64)
def _subset_matrix(n: int, k: int) -> tuple[np.ndarray, np.ndarray, list[tuple[int, ...]]]:
    """All size-k subsets of range(n) as a membership matrix plus its complement.

    float64 so the boundary reductions run through BLAS; the counts involved
    stay far below 2**53 and remain exact.
    """
    combos = list(itertools.combinations(range(n), k))
    mat = np.zeros((len(combos), n), dtype=np.float64)
    for i, combo in enumerate(combos):
        mat[i, list(combo)] = 1.0
    return mat, mat == 0.0, combos


def _subset_boundaries(
    mat: np.ndarray, notmat: np.ndarray, adjacency: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vertex- and edge-boundary sizes for every subset row of mat."""
    into = mat @ adjacency  # edges (with multiplicity) from each subset into each vertex
    edge = into.sum(axis=1) - np.einsum("ij,ij->i", into, mat)
    vertex = ((into >= 0.5) & notmat).sum(axis=1)
    return vertex.astype(np.int64), edge.astype(np.int64)


def min_isoperimetric_exhaustive(
    g: Multigraph, u: float, max_n: int = SUBSET_SCAN_CAP_N
) -> IsoperimetricResult:
    """Exact isoperimetric minima over nonempty subsets of size <= floor(u*n).

    Returns both ratios as exact rationals with one witness subset each
    (first in combination order among the minimizers).  Refuses above the
    size cap; the scan enumerates all size-restricted subsets.
    """
    if g.n > max_n:
        raise CapExceededError(f"n = {g.n} exceeds the subset-scan cap {max_n}")
    if not (0.0 < u <= 1.0):
        raise DomainError(f"u = {u!r} must lie in (0, 1]")
    k_max = math.floor(u * g.n)
    if k_max < 1:
        raise DomainError(f"u = {u!r} admits no nonempty subset at n = {g.n}")
    adjacency = g.adjacency_matrix()
    best_v: tuple[Fraction, frozenset[int]] | None = None
    best_e: tuple[Fraction, frozenset[int]] | None = None
    for k in range(1, k_max + 1):
        mat, notmat, combos = _subset_matrix(g.n, k)
        vertex, edge = _subset_boundaries(mat, notmat, adjacency)
        iv = int(np.argmin(vertex))
        ie = int(np.argmin(edge))
        cand_v = (Fraction(int(vertex[iv]), k), frozenset(combos[iv]))
        cand_e = (Fraction(int(edge[ie]), k), frozenset(combos[ie]))
        if best_v is None or cand_v[0] < best_v[0]:
            best_v = cand_v
        if best_e is None or cand_e[0] < best_e[0]:
            best_e = cand_e
    assert best_v is not None and best_e is not None
    return IsoperimetricResult(best_v[0], best_e[0], best_v[1], best_e[1])


def count_subsets_with_signature(
    p: Pairing, un: int, sn: int | None, yn: int, cap: int = SIGNATURE_SCAN_CAP
) -> int:
    """Number of size-un cell subsets of this pairing whose boundary matches
    the signature: vertex boundary sn (ignored when None) and edge boundary yn."""
    if not (1 <= un <= p.n):
        raise DomainError(f"un = {un!r} must lie in [1, n] = [1, {p.n}]")
    if comb(p.n, un) > cap:
        raise CapExceededError(f"binom({p.n}, {un}) = {comb(p.n, un)} exceeds the cap {cap}")
    adjacency = project(p).adjacency_matrix()
    mat, notmat, _ = _subset_matrix(p.n, un)
    vertex, edge = _subset_boundaries(mat, notmat, adjacency)
    match = edge == yn
    if sn is not None:
        match &= vertex == sn
    return int(match.sum())


def signature_means_by_enumeration(
    n: int, d: int, cap: int = ENUMERATION_CAP
) -> tuple[dict[tuple[int, int, int], Fraction], dict[tuple[int, int], Fraction]]:
    """Average, over all pairings, of the subset counts per boundary signature.

    Returns ({(un, sn, yn): mean}, {(un, yn): mean}) with exact rational
    means over the full enumeration; missing keys mean an average of zero.
    These are exactly the expectations computed in closed form by ``exact``.
    """
    vertex_hist: dict[tuple[int, int, int], int] = {}
    edge_hist: dict[tuple[int, int], int] = {}
    total = 0
    for p in enumerate_pairings(n, d, cap=cap):
        total += 1
        cell_pairs = [(a // d, b // d) for a, b in p.pairs()]
        for mask in range(1, 1 << n):
            un = mask.bit_count()
            edge_b = 0
            boundary_mask = 0
            for ca, cb in cell_pairs:
                a_in = (mask >> ca) & 1
                b_in = (mask >> cb) & 1
                if a_in != b_in:
                    edge_b += 1
                    boundary_mask |= 1 << (cb if a_in else ca)
            sv = boundary_mask.bit_count()
            key = (un, sv, edge_b)
            vertex_hist[key] = vertex_hist.get(key, 0) + 1
            edge_key = (un, edge_b)
            edge_hist[edge_key] = edge_hist.get(edge_key, 0) + 1
    vertex_means = {k: Fraction(v, total) for k, v in vertex_hist.items()}
    edge_means = {k: Fraction(v, total) for k, v in edge_hist.items()}
    return vertex_means, edge_means


def monte_carlo_expectation(
    n: int,
    d: int,
    un: int,
    sn: int | None,
    yn: int,
    samples: int,
    seed: int,
) -> MonteCarloEstimate:
    """Sample mean and standard error of the signature count over independent
    uniform pairings.

    Per-sample seeds derive from (seed, sample index), so the estimate is
    reproducible and independent of any partitioning of the index range.
    """
    if samples < 2:
        raise DomainError(f"samples = {samples!r} must be >= 2 for a standard error")
    if not (1 <= un <= n):
        raise DomainError(f"un = {un!r} must lie in [1, n] = [1, {n}]")
    if comb(n, un) > SIGNATURE_SCAN_CAP:
        raise CapExceededError(f"binom({n}, {un}) exceeds the cap {SIGNATURE_SCAN_CAP}")
    if (n * d) % 2 != 0:
        raise DomainError(f"d*n = {n * d} must be even")
    mat, notmat, _ = _subset_matrix(n, un)
    dn = n * d
    total = 0
    total_sq = 0
    for i in range(samples):
        # Same stream as sample_pairing at the derived seed, minus the
        # per-sample Pairing construction, which dominates at 1e5 samples.
        rng = random.Random(_sample_seed(seed, i))
        points = list(range(dn))
        rng.shuffle(points)
        adjacency = np.zeros((n, n), dtype=np.float64)
        for j in range(0, dn, 2):
            ca, cb = points[j] // d, points[j + 1] // d
            if ca != cb:
                adjacency[ca, cb] += 1.0
                adjacency[cb, ca] += 1.0
        vertex, edge = _subset_boundaries(mat, notmat, adjacency)
        match = edge == yn
        if sn is not None:
            match &= vertex == sn
        count = int(match.sum())
        total += count
        total_sq += count * count
    mean = total / samples
    variance = (total_sq - total * total / samples) / (samples - 1)
    std_error = math.sqrt(max(variance, 0.0) / samples)
    return MonteCarloEstimate(mean, std_error, samples)


def is_connected(g: Multigraph) -> bool:
    """Connectivity of the multigraph (loops do not connect anything)."""
    if g.n == 0:
        return True
    adjacency = g.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
