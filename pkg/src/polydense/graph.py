"""Edge oracle and graph-density computations for ±1-polytopes.

Two vertices v, w of conv(X) form an edge exactly when the segment [v, w]
misses the convex hull of the other points of X on the smallest cube face
containing v and w.  The obstruction set is collected by filtering X with a
bit mask (never by enumerating the 2**k face), and the test itself is
performed inside the face: dropping the coordinates where v and w agree and
flipping signs so that v maps to all-minus-one is an affine isometry of the
face, after which the query is a diagonal-versus-hull test in dimension k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

import numpy as np

from .cube import CubeVertex, VertexSet, sample_pair
from .errors import BudgetExceeded, DegenerateInput
from .exactlp import segment_hull_intersect
from .mc import wilson_interval

__all__ = [
    "EXACT",
    "SAMPLED",
    "DensityReport",
    "long_edge_survives",
    "edge_kernel",
    "is_edge",
    "graph_density_exact",
    "graph_density_sampled",
]

EXACT = "exact"
SAMPLED = "sampled"


@dataclass(frozen=True)
class DensityReport:
    """Graph density |E| / C(n, 2), exact or estimated from sampled pairs."""

    n: int
    edge_count: int
    density: Fraction
    mode: str
    ci: tuple[float, float] | None = None
    samples: int | None = None

    def __post_init__(self):
        if not 0 <= self.density <= 1:
            raise ValueError("density out of [0, 1]")
        if self.mode == EXACT and self.ci is not None:
            raise ValueError("exact reports carry no confidence interval")


def long_edge_survives(k: int, face_points: Iterable[int]) -> bool:
    """Whether the main diagonal of the k-cube is an edge against obstructions.

    ``face_points`` are interior face vertices given as k-bit masks (bit set
    means +1).  Survival means the segment from all-minus-one to all-ones
    misses the convex hull of the points.  A point together with its
    coordinatewise negation forces the midpoint onto both hulls, so that
    case short-circuits the feasibility solve.
    """
    pts = set(face_points)
    if not pts:
        return True
    mask = (1 << k) - 1
    for p in pts:
        if not 0 < p < mask:
            raise ValueError(f"face point 0x{p:x} is not interior to the {k}-face")
        if p ^ mask in pts:
            return False
    a = (-1,) * k
    b = (1,) * k
    S = [tuple(1 if p >> i & 1 else -1 for i in range(k)) for p in sorted(pts)]
    return not segment_hull_intersect(a, b, S)


@lru_cache(maxsize=200_000)
def _long_edge_survives_cached(k: int, face_points: frozenset[int]) -> bool:
    return long_edge_survives(k, face_points)


def edge_kernel(d: int, v_bits: int, w_bits: int, obstruction_bits: Iterable[int],
                cached: bool = False) -> bool:
    """Edge test for a vertex pair given the obstructions already filtered
    to the open face; inputs are raw bitmasks."""
    if v_bits == w_bits:
        raise DegenerateInput("v == w has no connecting edge")
    free = v_bits ^ w_bits
    positions = [i for i in range(d) if free >> i & 1]
    compressed = []
    for u in obstruction_bits:
        rel = u ^ v_bits
        compressed.append(sum((rel >> pos & 1) << j for j, pos in enumerate(positions)))
    k = len(positions)
    if cached:
        return _long_edge_survives_cached(k, frozenset(compressed))
    return long_edge_survives(k, compressed)


def is_edge(X: VertexSet, v: CubeVertex, w: CubeVertex, cached: bool = False) -> bool:
    """Whether {v, w} is an edge of conv(X); exact."""
    if v not in X or w not in X:
        raise ValueError("v and w must belong to X")
    if v.bits == w.bits:
        raise DegenerateInput("v == w")
    vb, wb = v.bits, w.bits
    free = vb ^ wb
    notfree = ((1 << X.dim) - 1) & ~free
    obst = [u.bits for u in X.members
            if u.bits != vb and u.bits != wb and not (u.bits ^ vb) & notfree]
    return edge_kernel(X.dim, vb, wb, obst, cached=cached)


def graph_density_exact(X: VertexSet, max_pairs: int = 200_000) -> DensityReport:
    """Exact density: test every vertex pair of X."""
    n = len(X)
    if n < 2:
        raise ValueError("density needs at least two vertices")
    pairs = comb(n, 2)
    if pairs > max_pairs:
        raise BudgetExceeded(f"{pairs} pair tests exceed max_pairs={max_pairs}",
                             required=pairs)
    members = X.members
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if is_edge(X, members[i], members[j], cached=True):
                edges += 1
    return DensityReport(n=n, edge_count=edges, density=Fraction(edges, pairs),
                         mode=EXACT)


def graph_density_sampled(X: VertexSet, pair_budget: int,
                          rng: np.random.Generator) -> DensityReport:
    """Density estimated from uniformly sampled pairs (with replacement),
    with a 95% Wilson interval."""
    if len(X) < 2:
        raise ValueError("density needs at least two vertices")
    if pair_budget < 1:
        raise ValueError("pair budget must be positive")
    hits = 0
    for _ in range(pair_budget):
        v, w = sample_pair(X, rng)
        if is_edge(X, v, w):
            hits += 1
    return DensityReport(n=len(X), edge_count=hits,
                         density=Fraction(hits, pair_budget), mode=SAMPLED,
                         ci=wilson_interval(hits, pair_budget), samples=pair_budget)
