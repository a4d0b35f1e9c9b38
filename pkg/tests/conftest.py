import functools
from pathlib import Path

import pytest

from toughham import Graph, parse_graph6

REPO_ROOT = Path(__file__).resolve().parent.parent
CORPUS_PATH = REPO_ROOT / "data" / "connected_3to8.g6"


@functools.lru_cache(maxsize=None)
def corpus_lines() -> tuple[bytes, ...]:
    return tuple(CORPUS_PATH.read_bytes().split())


@functools.lru_cache(maxsize=None)
def corpus_graphs(max_n: int = 8) -> tuple[Graph, ...]:
    graphs = [parse_graph6(line) for line in corpus_lines()]
    return tuple(g for g in graphs if g.n <= max_n)


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    return Graph(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()
