"""Oriented-cycle segment algebra and certificate-producing cycle rewrites.

The rewrites are total, validated transformations: every output is checked
against the host graph's adjacency, so a successful return IS the
certificate.  They are building blocks for shortcutting a cycle through an
outside path, not replays of any particular proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .graphs import Graph, VertexSet, bits, mask_of
from .hamilton import OrientedCycle


def dist_along(c: OrientedCycle, u: int, v: int) -> int:
    """Number of edges from u to v following the orientation; 0 for u == v."""
    return (c.position(v) - c.position(u)) % len(c)


def l_set(c: OrientedCycle, u: int, k: int | Fraction, direction: str) -> VertexSet:
    """The k consecutive successors ("+") or predecessors ("-") of u.

    A fractional k is rounded up: these sets play the role of blocks of at
    least k cycle vertices, so the ceiling keeps that guarantee.
    """
    if direction not in ("+", "-"):
        raise ValueError(f"direction must be '+' or '-', got {direction!r}")
    width = k if isinstance(k, int) else math.ceil(k)
    if width < 1:
        raise ValueError(f"width must be at least 1, got {k}")
    pos = c.position(u)
    n = len(c)
    width = min(width, n - 1)
    step = 1 if direction == "+" else -1
    out = 0
    for i in range(1, width + 1):
        out |= 1 << c.vertices[(pos + step * i) % n]
    return out


def _check_chord(c: OrientedCycle, chord: tuple[int, int]) -> None:
    u, v = chord
    pu, pv = c.position(u), c.position(v)
    if u == v:
        raise ValueError(f"degenerate chord ({u},{v})")
    if not c.graph.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge of the graph")
    if (pu - pv) % len(c) in (1, len(c) - 1):
        raise ValueError(f"({u},{v}) is a cycle edge, not a chord")


def is_crossing(
    c: OrientedCycle, chord1: tuple[int, int], chord2: tuple[int, int]
) -> bool:
    """Whether two vertex-disjoint chords interleave around the cycle."""
    _check_chord(c, chord1)
    _check_chord(c, chord2)
    u, x = chord1
    v, y = chord2
    if len({u, x, v, y}) != 4:
        raise ValueError("chords share an endpoint")
    px = dist_along(c, u, x)
    pv = dist_along(c, u, v)
    py = dist_along(c, u, y)
    return (pv < px) != (py < px)


# ---------------------------------------------------------------------------
# Assembly of rewritten cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """Piece of a host cycle from ``start`` to ``end`` inclusive, walked with
    the orientation (forward=True) or against it."""

    cycle: OrientedCycle
    start: int
    end: int
    forward: bool = True

    def expand(self) -> list[int]:
        verts = self.cycle.vertices
        n = len(verts)
        i = self.cycle.position(self.start)
        j = self.cycle.position(self.end)
        step = 1 if self.forward else -1
        out = [verts[i]]
        while i != j:
            i = (i + step) % n
            out.append(verts[i])
        return out


@dataclass(frozen=True)
class EdgeHop:
    """Explicit traversal of a single edge."""

    u: int
    v: int

    def expand(self) -> list[int]:
        return [self.u, self.v]


@dataclass(frozen=True)
class PathPiece:
    """A path outside the cycle being rewritten, listed end to end."""

    vertices: tuple[int, ...]

    def expand(self) -> list[int]:
        return list(self.vertices)


Piece = Union[Segment, EdgeHop, PathPiece]
SurgeryPlan = Sequence[Piece]


def assemble(g: Graph, plan: SurgeryPlan) -> OrientedCycle:
    """Concatenate the plan's pieces into a validated cycle.

    Consecutive pieces (and the closing pair) must be joined by an edge of
    g; any repeated vertex or non-edge junction is rejected.
    """
    if not plan:
        raise ValueError("empty surgery plan")
    seq: list[int] = []
    for piece in plan:
        part = piece.expand()
        if isinstance(piece, EdgeHop) and not g.has_edge(piece.u, piece.v):
            raise ValueError(f"edge hop ({piece.u},{piece.v}) is not an edge")
        if isinstance(piece, PathPiece):
            for a, b in zip(part, part[1:]):
                if not g.has_edge(a, b):
                    raise ValueError(f"path piece step ({a},{b}) is not an edge")
        if seq and not g.has_edge(seq[-1], part[0]):
            raise ValueError(f"junction ({seq[-1]},{part[0]}) is not an edge")
        seq.extend(part)
    if len(seq) != len(set(seq)):
        raise ValueError("plan revisits a vertex")
    if not g.has_edge(seq[-1], seq[0]):
        raise ValueError(f"plan does not close: ({seq[-1]},{seq[0]}) is not an edge")
    return OrientedCycle(g, seq)


def _check_external_path(g: Graph, c: OrientedCycle, p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    if not p:
        raise ValueError("external path must be nonempty")
    if mask_of(p) & c.vertex_set:
        raise ValueError("external path touches the cycle")
    return p


def reroute_detour(
    g: Graph, c: OrientedCycle, u: int, v: int, p: Sequence[int]
) -> OrientedCycle:
    """Replace the forward segment strictly between u and v by an outside path.

    The result walks from u against the orientation to v, then jumps to the
    path (whose first vertex must be adjacent to v and last adjacent to u).
    Vertex set: (V(C) minus the interior of u->v) union V(p).
    """
    if u == v:
        raise ValueError("u and v must be distinct cycle vertices")
    p = _check_external_path(g, c, p)
    if not g.has_edge(v, p[0]):
        raise ValueError(f"path start {p[0]} not adjacent to {v}")
    if not g.has_edge(p[-1], u):
        raise ValueError(f"path end {p[-1]} not adjacent to {u}")
    return assemble(g, [Segment(c, u, v, forward=False), PathPiece(p)])


def reroute_crossing(
    g: Graph,
    c: OrientedCycle,
    u: int,
    x: int,
    v: int,
    y: int,
    p: Sequence[int],
) -> OrientedCycle:
    """Shortcut across a chord xy and an outside path, excising two arcs.

    The four vertices must appear in orientation order u, x, v, y.  The
    result walks u backwards to y, crosses the chord y-x, follows the
    orientation from x to v, and returns to u through the path.  The arcs
    strictly inside u->x and v->y drop off the cycle (either may be empty).
    """
    du_x = dist_along(c, u, x)
    du_v = dist_along(c, u, v)
    du_y = dist_along(c, u, y)
    if not 0 < du_x < du_v < du_y:
        raise ValueError("vertices must appear in orientation order u, x, v, y")
    if not g.has_edge(x, y):
        raise ValueError(f"chord ({x},{y}) is not an edge")
    p = _check_external_path(g, c, p)
    if not g.has_edge(v, p[0]):
        raise ValueError(f"path start {p[0]} not adjacent to {v}")
    if not g.has_edge(p[-1], u):
        raise ValueError(f"path end {p[-1]} not adjacent to {u}")
    return assemble(
        g,
        [
            Segment(c, u, y, forward=False),
            Segment(c, x, v, forward=True),
            PathPiece(p),
        ],
    )


def interior(c: OrientedCycle, u: int, v: int) -> VertexSet:
    """Vertices strictly between u and v along the orientation."""
    d = dist_along(c, u, v)
    verts = c.vertices
    n = len(verts)
    i = c.position(u)
    return mask_of(verts[(i + k) % n] for k in range(1, d))
