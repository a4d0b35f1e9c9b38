"""Exact cycle engines: hamiltonian search, the cycle-set index, and the
minimum-lambda cycle analysis.

A cycle's vertex SET is what the lambda machinery cares about (the leftover
components and their attachment degrees depend only on which vertices lie on
the cycle), so the central object is an index flagging every vertex subset
that carries a spanning cycle.  Explicit oriented cycles are reconstructed
only when a witness is demanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, VertexSet, bit, bits
from .invariants import (
    INF,
    Rational,
    c_lambda,
    components,
    is_connected,
    is_t_tough,
    min_degree,
)


class OrientedCycle:
    """Cyclic sequence of distinct vertices, consecutive ones adjacent in the
    host graph.  Orientation is the listed order ("clockwise")."""

    __slots__ = ("graph", "vertices", "vertex_set", "_pos")

    def __init__(self, graph: Graph, vertices):
        vertices = tuple(vertices)
        if len(vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        mask = 0
        for v in vertices:
            if not 0 <= v < graph.n:
                raise ValueError(f"vertex {v} out of range")
            if mask >> v & 1:
                raise ValueError(f"repeated vertex {v} in cycle")
            mask |= 1 << v
        for i, v in enumerate(vertices):
            w = vertices[(i + 1) % len(vertices)]
            if not graph.has_edge(v, w):
                raise ValueError(f"consecutive cycle vertices {v},{w} not adjacent")
        self.graph = graph
        self.vertices = vertices
        self.vertex_set = mask
        self._pos = {v: i for i, v in enumerate(vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"OrientedCycle{self.vertices}"

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"vertex {v} not on the cycle") from None

    def successor(self, v: int) -> int:
        return self.vertices[(self.position(v) + 1) % len(self.vertices)]

    def predecessor(self, v: int) -> int:
        return self.vertices[(self.position(v) - 1) % len(self.vertices)]

    def reversed(self) -> "OrientedCycle":
        """Same cycle walked against the orientation, starting vertex kept."""
        return OrientedCycle(self.graph, (self.vertices[0],) + self.vertices[:0:-1])

    def canonical(self) -> tuple[int, ...]:
        """Rotation starting at the minimum vertex (orientation preserved)."""
        i = self.vertices.index(min(self.vertices))
        return self.vertices[i:] + self.vertices[:i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedCycle)
            and self.graph == other.graph
            and self.canonical() == other.canonical()
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.canonical()))


# ---------------------------------------------------------------------------
# Hamiltonian search
# ---------------------------------------------------------------------------


def hamiltonian_cycle(g: Graph) -> OrientedCycle | None:
    """Spanning cycle via subset DP over (mask, endpoint) paths anchored at 0.

    dp[mask] holds the endpoints e for which some path covers exactly
    ``mask`` from vertex 0 to e; a cycle exists iff some endpoint of the
    full mask is adjacent back to 0.  Reconstruction walks the table
    backwards preferring the lowest predecessor, so witnesses are
    deterministic.
    """
    n = g.n
    if n < 3:
        return None
    full = g.full_mask
    adj = g.adj
    dp = [0] * (full + 1)
    dp[1] = 1
    for mask in range(1, full + 1, 2):  # only masks containing vertex 0
        ends = dp[mask]
        if not ends:
            continue
        rest = ~mask
        for e in bits(ends):
            for w in bits(adj[e] & rest):
                dp[mask | (1 << w)] |= 1 << w
    closers = dp[full] & adj[0]
    if not closers:
        return None
    e = (closers & -closers).bit_length() - 1
    path = [e]
    mask = full
    while mask != 1:
        prev = mask ^ (1 << e)
        preds = dp[prev] & adj[e]
        e = (preds & -preds).bit_length() - 1
        path.append(e)
        mask = prev
    path.reverse()
    return OrientedCycle(g, path)


def hamiltonian_cycle_backtracking(g: Graph) -> OrientedCycle | None:
    """Independent oracle: plain depth-first search with degree pruning."""
    n = g.n
    if n < 3 or min_degree(g) < 2 or not is_connected(g):
        return None
    adj = g.adj
    full = g.full_mask

    def extend(path: list[int], visited: int) -> list[int] | None:
        if len(path) == n:
            return path if adj[path[-1]] & 1 else None
        last = path[-1]
        open_ends = ~visited | (1 << last) | 1
        for v in bits(full & ~visited):
            if (adj[v] & open_ends).bit_count() < 2:
                return None
        for w in bits(adj[last] & ~visited):
            path.append(w)
            found = extend(path, visited | (1 << w))
            if found is not None:
                return found
            path.pop()
        return None

    result = extend([0], 1)
    return None if result is None else OrientedCycle(g, result)


def spanning_cycle_on(g: Graph, subset: VertexSet) -> OrientedCycle | None:
    """A cycle of g whose vertex set is exactly ``subset``, if one exists."""
    if subset.bit_count() < 3:
        return None
    sub, old = g.induced(subset)
    found = hamiltonian_cycle(sub)
    if found is None:
        return None
    return OrientedCycle(g, [old[v] for v in found.vertices])


# ---------------------------------------------------------------------------
# The cycle-set index
# ---------------------------------------------------------------------------

INDEX_ORDER_CAP = 24


@dataclass(frozen=True)
class CycleSetIndex:
    """For each vertex subset T (as a bit of ``flags``), whether some cycle of
    the host graph has vertex set exactly T."""

    n: int
    flags: int  # bit T set iff G[T] has a spanning cycle

    def has_cycle_set(self, subset: VertexSet) -> bool:
        return bool(self.flags >> subset & 1)

    def iter_flagged(self):
        """Flagged subsets in increasing numeric order."""
        flags = self.flags
        while flags:
            low = flags & -flags
            yield low.bit_length() - 1
            flags ^= low

    def count(self) -> int:
        return self.flags.bit_count()


def cycle_vertex_sets(g: Graph) -> CycleSetIndex:
    """Flag every subset carrying a spanning cycle, in one 2^n DP sweep.

    Paths are anchored at the minimum vertex of their subset and only ever
    extended by higher-numbered vertices, which visits each (subset,
    endpoint) state exactly once.
    """
    n = g.n
    if n > INDEX_ORDER_CAP:
        raise ValueError(f"cycle-set index needs order <= {INDEX_ORDER_CAP}, got {n}")
    adj = g.adj
    size = 1 << n
    dp = [0] * size
    for v in range(n):
        dp[1 << v] = 1 << v
    flags = 0
    for mask in range(1, size):
        ends = dp[mask]
        if not ends:
            continue
        a = (mask & -mask).bit_length() - 1
        if mask.bit_count() >= 3 and ends & adj[a]:
            flags |= 1 << mask
        allowed = ~mask & ~((1 << (a + 1)) - 1)
        for e in bits(ends):
            for w in bits(adj[e] & allowed):
                dp[mask | (1 << w)] |= 1 << w
    return CycleSetIndex(n, flags)


# ---------------------------------------------------------------------------
# D-lambda machinery
# ---------------------------------------------------------------------------


def _max_leftover_order(g: Graph, cycle_set: VertexSet) -> int:
    leftover = components(g, cycle_set)
    return max((c.bit_count() for c in leftover), default=0)


def has_d_lambda_cycle(
    g: Graph, lam: int, index: CycleSetIndex | None = None
) -> VertexSet | None:
    """Some cycle set leaving only components of order < lam, or None."""
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    if index is None:
        index = cycle_vertex_sets(g)
    for t in index.iter_flagged():
        if _max_leftover_order(g, t) < lam:
            return t
    return None


def select_cycle(
    g: Graph,
    lambda_plus_one: int,
    policy: str = "A",
    index: CycleSetIndex | None = None,
) -> VertexSet:
    """Optimal D_(lambda+1) cycle set under the requested tie-break policy.

    Policy "A" minimizes the count of order->=lambda leftover components
    first, then maximizes cycle length; policy "B" swaps those two
    priorities.  Both end with the smallest bitmask for determinism.
    """
    if policy not in ("A", "B"):
        raise ValueError(f"unknown policy {policy!r}")
    if index is None:
        index = cycle_vertex_sets(g)
    lam = lambda_plus_one - 1
    best = None
    best_key = None
    for t in index.iter_flagged():
        if _max_leftover_order(g, t) >= lambda_plus_one:
            continue
        clam = c_lambda(g, t, lam) if lam >= 1 else len(components(g, t))
        size = t.bit_count()
        key = (clam, -size, t) if policy == "A" else (-size, clam, t)
        if best_key is None or key < best_key:
            best, best_key = t, key
    if best is None:
        raise ValueError(f"no D_{lambda_plus_one}-cycle exists")
    return best


@dataclass(frozen=True)
class ComponentRecord:
    vertices: VertexSet
    order: int
    attachment: VertexSet  # neighbors of the component on the chosen cycle
    omega: int
    degree: int  # |N_G(V(H))|; equals omega since all neighbors sit on the cycle


@dataclass(frozen=True)
class DLambdaAnalysis:
    threshold: int  # minimal lambda >= 1 admitting a D_lambda cycle
    paper_lambda: int  # threshold - 1
    chosen_set: VertexSet
    chosen_cycle: OrientedCycle
    c_lambda_value: int
    component_records: tuple[ComponentRecord, ...]


def lambda_threshold(
    g: Graph, policy: str = "A", index: CycleSetIndex | None = None
) -> DLambdaAnalysis:
    """Minimal lambda admitting a D_lambda cycle, with the chosen cycle's full
    leftover-component accounting.  Raises on acyclic input."""
    if index is None:
        index = cycle_vertex_sets(g)
    if index.flags == 0:
        raise ValueError("graph has no cycle")
    threshold = 1
    while has_d_lambda_cycle(g, threshold, index) is None:
        threshold += 1
    lam = threshold - 1
    chosen = select_cycle(g, threshold, policy, index)
    cyc = spanning_cycle_on(g, chosen)
    assert cyc is not None
    records = []
    for comp in components(g, chosen):
        nbrs = 0
        for v in bits(comp):
            nbrs |= g.adj[v]
        attachment = nbrs & chosen
        degree = (nbrs & ~comp).bit_count()
        records.append(
            ComponentRecord(
                vertices=comp,
                order=comp.bit_count(),
                attachment=attachment,
                omega=attachment.bit_count(),
                degree=degree,
            )
        )
    clam = c_lambda(g, chosen, lam) if lam >= 1 else len(components(g, chosen))
    return DLambdaAnalysis(
        threshold=threshold,
        paper_lambda=lam,
        chosen_set=chosen,
        chosen_cycle=cyc,
        c_lambda_value=clam,
        component_records=tuple(records),
    )


# ---------------------------------------------------------------------------
# Lemma-level operations
# ---------------------------------------------------------------------------


def is_2_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return all(len(components(g, bit(v))) == 1 for v in range(g.n))


@dataclass(frozen=True)
class Lemma1Report:
    """Per-component margins of n >= (t + lambda) * (d_G(H) + 1).

    ``applicable`` is False when a precondition fails (with the reason),
    in which case no verdict is issued.
    """

    applicable: bool
    reason: str | None
    t: Fraction | None
    lam: int | None
    margins: tuple[tuple[VertexSet, Fraction], ...]
    holds: bool | None
    analysis: DLambdaAnalysis | None


def check_lemma1(
    g: Graph, t: Rational, index: CycleSetIndex | None = None
) -> Lemma1Report:
    """Instantiate the order bound for every order-lambda component left by
    the policy-A cycle at the minimal-lambda threshold."""

    def fail(reason: str) -> Lemma1Report:
        return Lemma1Report(False, reason, None, None, (), None, None)

    if not is_2_connected(g):
        return fail("not 2-connected")
    if t == INF or not is_t_tough(g, t):
        return fail(f"not {t}-tough" if t != INF else "t = inf only holds for complete graphs")
    if index is None:
        index = cycle_vertex_sets(g)
    if index.flags == 0:
        return fail("acyclic")
    analysis = lambda_threshold(g, policy="A", index=index)
    lam = analysis.paper_lambda
    if lam < 1:
        return fail("hamiltonian: no lambda >= 1 with a D_(lambda+1)- but no D_lambda-cycle")
    t = Fraction(t)
    margins = []
    for rec in analysis.component_records:
        if rec.order != lam:
            continue
        margins.append((rec.vertices, g.n - (t + lam) * (rec.degree + 1)))
    assert margins, "threshold minimality guarantees an order-lambda component"
    holds = all(m >= 0 for _, m in margins)
    return Lemma1Report(True, None, t, lam, tuple(margins), holds, analysis)


@dataclass(frozen=True)
class ExtensionOutcome:
    cycle: OrientedCycle | None
    premise_held: bool  # deg_G(x, C) > n/(t+1) - 1 at the supplied t

    @property
    def succeeded(self) -> bool:
        return self.cycle is not None


def extend_cycle(g: Graph, c: OrientedCycle, x: int, t: Rational) -> ExtensionOutcome:
    """Try to absorb the off-cycle vertex x into the cycle (exact search on
    the induced subgraph), reporting whether the degree premise held."""
    if c.graph != g:
        raise ValueError("cycle does not belong to this graph")
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    if x in c:
        raise ValueError(f"vertex {x} already lies on the cycle")
    deg_on_c = (g.adj[x] & c.vertex_set).bit_count()
    if t == INF:
        premise = True  # threshold n/(t+1) - 1 degenerates to -1
    else:
        premise = Fraction(deg_on_c) > Fraction(g.n) / (Fraction(t) + 1) - 1
    found = spanning_cycle_on(g, c.vertex_set | bit(x))
    return ExtensionOutcome(found, premise)
