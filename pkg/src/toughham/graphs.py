"""Immutable bitmask graphs, the graph6 codec, and basic constructions.

A graph on n <= 64 vertices is stored as one adjacency bitmask per vertex,
so neighborhood queries are single integer operations.  Vertex sets are
plain Python ints used as bitmasks over [0, n); helpers for iterating and
building such masks live here as well.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_ORDER = 64

VertexSet = int  # bitmask over [0, n)


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Yield the set vertex indices of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph: order plus one adjacency bitmask per vertex.

    Instances are immutable after construction and safe to share between
    workers.  Adjacency is kept symmetric and loop-free.
    """

    __slots__ = ("n", "adj", "full_mask")

    n: int
    adj: tuple[int, ...]
    full_mask: int

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("graph order must be at least 1")
        if n > MAX_ORDER:
            raise ValueError(f"graph order {n} exceeds the {MAX_ORDER}-vertex cap")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))
        object.__setattr__(self, "full_mask", (1 << n) - 1)

    @classmethod
    def from_adjacency(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        g = cls.__new__(cls)
        n = len(rows)
        if n < 1 or n > MAX_ORDER:
            raise ValueError(f"invalid order {n}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has out-of-range bits")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not (rows[u] >> v & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", rows)
        object.__setattr__(g, "full_mask", full)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def induced(self, subset: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``subset`` plus the old-label list.

        Vertex i of the result corresponds to the i-th lowest vertex of the
        subset.
        """
        old = list(bits(subset))
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for u in bits(self.adj[v] & subset):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph.from_adjacency(rows), old


# ---------------------------------------------------------------------------
# graph6 codec (short form mandatory, long form accepted on input)
# ---------------------------------------------------------------------------

GRAPH6_HEADER = b">>graph6<<"


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line into a labeled Graph.

    Accepts the short form (n <= 62) and the 3-byte long form (n <= 64 given
    the order cap).  Strict about trailing padding bits: they must be zero so
    that re-encoding reproduces the input byte-exactly.
    """
    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.rstrip(b"\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line", 0)

    if line[0] == 126:  # '~' introduces the long form
        if len(line) < 4:
            raise Graph6Error("truncated long-form order field", len(line))
        if line[1] == 126:
            raise Graph6Error("8-byte graph6 order form not supported", 1)
        n = 0
        for i in (1, 2, 3):
            c = line[i]
            if not 63 <= c <= 126:
                raise Graph6Error(f"character {c} outside graph6 range", i)
            n = (n << 6) | (c - 63)
        body_start = 4
    else:
        c = line[0]
        if not 63 <= c <= 126:
            raise Graph6Error(f"header character {c} outside graph6 range", 0)
        n = c - 63
        body_start = 1

    if n < 1:
        raise Graph6Error("graph of order 0 not representable", 0)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the {MAX_ORDER}-vertex cap", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - body_start < nbytes:
        raise Graph6Error(
            f"truncated bit block: need {nbytes} bytes, have {len(line) - body_start}",
            len(line),
        )
    if len(line) - body_start > nbytes:
        raise Graph6Error("trailing bytes after bit block", body_start + nbytes)

    rows = [0] * n
    bitpos = 0
    for i in range(body_start, body_start + nbytes):
        c = line[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {c} outside graph6 range", i)
        group = c - 63
        for k in range(5, -1, -1):
            if group >> k & 1:
                if bitpos >= nbits:
                    raise Graph6Error("nonzero padding bits", i)
                # column-major upper triangle: bit order (0,1),(0,2),(1,2),...
                col = _column_of(bitpos)
                row = bitpos - col * (col - 1) // 2
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            bitpos += 1
    return Graph.from_adjacency(rows)


def _column_of(bitpos: int) -> int:
    # smallest col with col*(col-1)/2 > bitpos, minus 1
    col = int((2 * bitpos) ** 0.5) + 1
    while col * (col - 1) // 2 > bitpos:
        col -= 1
    while (col + 1) * col // 2 <= bitpos:
        col += 1
    return col


def to_graph6(g: Graph) -> bytes:
    """Encode a Graph as a short-form graph6 line (no trailing newline)."""
    if g.n > 62:
        raise ValueError(f"short-form graph6 requires order <= 62, got {g.n}")
    out = [g.n + 63]
    group = 0
    count = 0
    for col in range(1, g.n):
        for row in range(col):
            group = group << 1 | (g.adj[row] >> col & 1)
            count += 1
            if count == 6:
                out.append(group + 63)
                group = count = 0
    if count:
        out.append((group << (6 - count)) + 63)
    return bytes(out)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("order must be positive")
    full = (1 << n) - 1
    return Graph.from_adjacency(full ^ (1 << v) for v in range(n))


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("order must be positive")
    return Graph(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; g keeps its labels, h is shifted."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"joined order {n} exceeds the {MAX_ORDER}-vertex cap")
    g_full = (1 << g.n) - 1
    h_block = ((1 << h.n) - 1) << g.n
    rows = [g.adj[v] | h_block for v in range(g.n)]
    rows += [(h.adj[v] << g.n) | g_full for v in range(h.n)]
    return Graph.from_adjacency(rows)


def family_h(h_part: Graph) -> Graph:
    """Join of a k-vertex graph with k+1 isolated vertices (order 2k+1).

    These odd-order graphs sit exactly on the degree-sum boundary of the
    verified conditions and are the conjectured extremal family.
    """
    return join(h_part, empty(h_part.n + 1))


# ---------------------------------------------------------------------------
# Neighborhood queries
# ---------------------------------------------------------------------------


def neighbors_in_set(g: Graph, v: int, s: VertexSet) -> VertexSet:
    return g.adj[v] & s


def set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Union of neighborhoods of s, excluding s itself."""
    out = 0
    for v in bits(s):
        out |= g.adj[v]
    return out & ~s


def are_remote(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """True iff the two vertex sets are disjoint with no edge between them."""
    if a & b:
        return False
    return not any(g.adj[v] & b for v in bits(a))
