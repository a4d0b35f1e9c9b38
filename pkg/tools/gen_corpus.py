#!/usr/bin/env python3
"""Generate the connected-graph corpus (3 <= n <= 8, one graph per iso class).

Works by vertex augmentation: every graph on n vertices arises from some
graph on n-1 vertices by attaching a new vertex to a neighborhood subset, so
extending every representative by every subset reaches every class.
Duplicates are removed by an exact canonical key: vertices are first
partitioned by iterated degree refinement, then the adjacency bit string is
minimized over all partition-respecting orderings (refinement colors are
isomorphism-invariant, so the restricted minimum is a complete invariant).

The class counts are asserted against the published sequences for all
simple graphs and for connected simple graphs, which pins correctness.

Usage: python tools/gen_corpus.py [out_path]    (default: data/connected_3to8.g6)
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from toughham.graphs import Graph, bits, to_graph6
from toughham.invariants import is_connected

MAX_N = 8
ALL_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def refined_colors(adj: tuple[int, ...], n: int, rounds: int = 3) -> list[int]:
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(rounds):
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        refined = [order[k] for k in keys]
        if refined == colors:
            break
        colors = refined
    return colors


_ROW_INF = 1 << 62


def canonical_key(adj: tuple[int, ...], n: int) -> tuple:
    """Complete isomorphism invariant: refined color spectrum plus the
    minimum adjacency bit rows over color-respecting vertex orderings.

    ``best`` holds the smallest row sequence seen for the current prefix;
    rows larger than it prune, strictly smaller ones truncate it, so the
    lexicographic minimum path is never cut off.
    """
    colors = refined_colors(adj, n)
    required = sorted(colors)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    best = [_ROW_INF] * n
    placed = [0] * n

    def search(i: int) -> None:
        if i == n:
            return
        pool = by_color[required[i]]
        for idx, v in enumerate(pool):
            if v < 0:
                continue
            row = 0
            av = adj[v]
            for j in range(i):
                row = row << 1 | (av >> placed[j] & 1)
            if row > best[i]:
                continue
            if row < best[i]:
                best[i] = row
                for k in range(i + 1, n):
                    best[k] = _ROW_INF
            placed[i] = v
            pool[idx] = -1
            search(i + 1)
            pool[idx] = v

    search(0)
    assert best[-1] != _ROW_INF or n == 1
    return (n, tuple(required), tuple(best))


def augment(parents: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    seen: dict[tuple, tuple[int, ...]] = {}
    new_bit = 1 << (n - 1)
    for parent in parents:
        for subset in range(1 << (n - 1)):
            rows = [
                parent[v] | new_bit if subset >> v & 1 else parent[v]
                for v in range(n - 1)
            ]
            rows.append(subset)
            adj = tuple(rows)
            key = canonical_key(adj, n)
            if key not in seen:
                seen[key] = adj
    return list(seen.values())


def main(out_path: str) -> None:
    reps: list[tuple[int, ...]] = [(0,)]
    by_n: dict[int, list[tuple[int, ...]]] = {1: reps}
    for n in range(2, MAX_N + 1):
        start = time.perf_counter()
        reps = augment(reps, n)
        by_n[n] = reps
        took = time.perf_counter() - start
        print(f"n={n}: {len(reps)} iso classes ({took:.1f}s)", flush=True)
        assert len(reps) == ALL_GRAPH_COUNTS[n], (
            f"class count mismatch at n={n}: {len(reps)} != {ALL_GRAPH_COUNTS[n]}"
        )

    lines = []
    for n in range(3, MAX_N + 1):
        graphs = [Graph.from_adjacency(adj) for adj in by_n[n]]
        connected = [g for g in graphs if is_connected(g)]
        assert len(connected) == CONNECTED_COUNTS[n], (
            f"connected count mismatch at n={n}: {len(connected)} != {CONNECTED_COUNTS[n]}"
        )
        lines.extend(sorted(to_graph6(g) for g in connected))

    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(b"\n".join(lines) + b"\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/connected_3to8.g6")
