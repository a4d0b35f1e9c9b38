"""Exact scalar invariants: components, toughness, sigma2, alpha, delta_lambda.

All thresholds and ratios are exact: values are ``fractions.Fraction`` with
``INF`` (``math.inf``) as the sentinel for complete graphs.  Comparing a
Fraction against INF is exact in Python, and no finite float ever enters a
comparison, so boundary cases cannot be corrupted by rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .graphs import Graph, VertexSet, bit, bits

INF = math.inf

Rational = Union[Fraction, float]  # float only ever holds INF


def rational_str(x: Rational | None) -> str | None:
    if x is None:
        return None
    return "inf" if x == INF else str(x)


def parse_rational(text: str) -> Rational:
    if text == "inf":
        return INF
    return Fraction(text)


def components(g: Graph, removed: VertexSet = 0) -> list[VertexSet]:
    """Connected components of g - removed, ordered by minimum vertex."""
    remaining = g.full_mask & ~removed
    out = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def c_lambda(g: Graph, removed: VertexSet, lam: int) -> int:
    """Number of components of g - removed with at least ``lam`` vertices."""
    if lam <= 1:
        return len(components(g, removed))
    return sum(1 for comp in components(g, removed) if comp.bit_count() >= lam)


def is_complete(g: Graph) -> bool:
    return all(g.adj[v] == g.full_mask ^ bit(v) for v in range(g.n))


@dataclass(frozen=True)
class ToughnessResult:
    value: Rational
    witness_cut: VertexSet | None  # None iff complete
    witness_components: int

    def as_strings(self) -> str:
        return rational_str(self.value)


def toughness(g: Graph) -> ToughnessResult:
    """Exact toughness with a minimizing cut witness.

    INF for complete graphs, 0 with the empty cut for disconnected ones;
    otherwise the minimum of |S| / c(G-S) over cuts leaving >= 2 components.
    Subsets are scanned in increasing size so the size-ratio lower bound
    k/(n-k) can stop the scan once it cannot improve on the best ratio.
    """
    if is_complete(g):
        return ToughnessResult(INF, None, 0)
    n = g.n
    c0 = len(components(g))
    if c0 >= 2:
        return ToughnessResult(Fraction(0), 0, c0)

    best = None  # (Fraction, cut, ncomp)
    for k in range(1, n - 1):
        if best is not None and Fraction(k, n - k) >= best[0]:
            break
        for combo in combinations(range(n), k):
            cut = 0
            for v in combo:
                cut |= 1 << v
            ncomp = len(components(g, cut))
            if ncomp < 2:
                continue
            ratio = Fraction(k, ncomp)
            if best is None or ratio < best[0]:
                best = (ratio, cut, ncomp)
    assert best is not None, "non-complete connected graph must have a 2-component cut"
    return ToughnessResult(best[0], best[1], best[2])


def toughness_naive(g: Graph) -> ToughnessResult:
    """Reference toughness: full 2^n scan, no pruning, fresh components per set."""
    if is_complete(g):
        return ToughnessResult(INF, None, 0)
    best = None
    for cut in range(1 << g.n):
        ncomp = len(components(g, cut))
        if ncomp < 2:
            continue
        ratio = Fraction(cut.bit_count(), ncomp)
        if best is None or ratio < best[0]:
            best = (ratio, cut, ncomp)
    assert best is not None
    return ToughnessResult(best[0], best[1], best[2])


def is_t_tough(g: Graph, t: Rational) -> bool:
    """Exact check of |S| >= t * c(G-S) for every cut S with c(G-S) >= 2.

    Early-exits on the first violating subset; the comparison is done
    cross-multiplied in integers, never in floats.
    """
    if t == INF:
        return is_complete(g)
    t = Fraction(t)
    if t <= 0:
        return True
    if is_complete(g):
        return True
    num, den = t.numerator, t.denominator
    for cut in range(1 << g.n):
        ncomp = len(components(g, cut))
        if ncomp >= 2 and cut.bit_count() * den < num * ncomp:
            return False
    return True


def sigma2(g: Graph) -> int | float:
    """Minimum degree sum over nonadjacent vertex pairs; INF when complete."""
    best = None
    degs = [g.degree(v) for v in range(g.n)]
    for u in range(g.n):
        nonadj = g.full_mask & ~g.adj[u] & ~bit(u) & ~((1 << (u + 1)) - 1)
        for v in bits(nonadj):
            s = degs[u] + degs[v]
            if best is None or s < best:
                best = s
    return INF if best is None else best


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def _mis_size(adj: tuple[int, ...], candidates: int) -> int:
    """Branch-and-bound maximum independent set size within ``candidates``."""
    if candidates == 0:
        return 0
    best = 0
    stack = [(candidates, 0)]
    while stack:
        cand, size = stack.pop()
        if size + cand.bit_count() <= best:
            continue
        if cand == 0:
            best = max(best, size)
            continue
        # branch on a maximum-degree vertex: include it or discard it
        v = max(bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        stack.append((cand & ~bit(v), size))
        stack.append((cand & ~bit(v) & ~adj[v], size + 1))
    return best


def max_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set; ties broken by smallest bitmask value.

    The size is found by branch and bound, then membership of each vertex is
    fixed from the highest index down, excluding a vertex whenever a maximum
    set without it still exists.
    """
    alpha = _mis_size(g.adj, g.full_mask)
    chosen = 0
    cand = g.full_mask
    need = alpha
    for v in range(g.n - 1, -1, -1):
        if not (cand >> v & 1):
            continue
        without = cand & ~bit(v)
        if _mis_size(g.adj, without) >= need:
            cand = without
        else:
            chosen |= bit(v)
            need -= 1
            cand = without & ~g.adj[v]
    assert need == 0 and chosen.bit_count() == alpha
    return chosen


def alpha(g: Graph) -> int:
    return _mis_size(g.adj, g.full_mask)


def delta_lambda(g: Graph, lam: int) -> int:
    """Minimum of |N_G(T)| over connected vertex sets T of exactly ``lam`` vertices."""
    if not 1 <= lam <= g.n:
        raise ValueError(f"lambda must be in [1, {g.n}], got {lam}")
    if lam == 1:
        return min_degree(g)
    best = None
    for combo in combinations(range(g.n), lam):
        t = 0
        for v in combo:
            t |= 1 << v
        if len(components(g.induced(t)[0])) != 1:
            continue
        boundary = 0
        for v in combo:
            boundary |= g.adj[v]
        deg = (boundary & ~t).bit_count()
        if best is None or deg < best:
            best = deg
    if best is None:
        raise ValueError(f"no connected subgraph of order {lam}")
    return best


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    edges: int
    delta: int
    sigma2: int | float
    alpha: int
    tau: ToughnessResult
    hamiltonian: bool | None = None


def invariant_bundle(g: Graph) -> InvariantBundle:
    return InvariantBundle(
        n=g.n,
        edges=g.edge_count(),
        delta=min_degree(g),
        sigma2=sigma2(g),
        alpha=alpha(g),
        tau=toughness(g),
    )
