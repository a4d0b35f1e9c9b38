"""Graph representation, graph6 codec, and constructors."""

import random

import networkx as nx
import pytest

from toughham import (
    Graph,
    Graph6Error,
    are_remote,
    complete,
    complete_bipartite,
    cycle,
    empty,
    family_h,
    join,
    mask_of,
    neighbors_in_set,
    parse_graph6,
    set_neighborhood,
    to_graph6,
)

from conftest import corpus_lines


def reference_encode(n: int, edges: set[tuple[int, int]]) -> bytes:
    """Independent graph6 encoder straight from the published format rules:
    order byte n+63, then the column-major upper triangle packed into 6-bit
    groups, zero-padded, each group offset by 63."""
    assert n <= 62
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if (row, col) in edges or (col, row) in edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [n + 63]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        out.append(group + 63)
    return bytes(out)


class TestCodec:
    def test_k2_hand_encoded(self):
        # n=2 -> 'A'; single bit 1 -> group 100000 = 32 -> chr(95) = '_'
        assert reference_encode(2, {(0, 1)}) == b"A_"
        g = parse_graph6(b"A_")
        assert g.n == 2 and g.has_edge(0, 1)
        assert to_graph6(g) == b"A_"

    def test_empty_pair(self):
        assert reference_encode(2, set()) == b"A?"
        g = parse_graph6(b"A?")
        assert g.n == 2 and g.edge_count() == 0
        assert to_graph6(g) == b"A?"

    def test_encode_matches_reference_on_random_graphs(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(1, 13)
            edges = {
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            }
            g = Graph(n, edges)
            assert to_graph6(g) == reference_encode(n, edges)

    def test_cross_check_networkx(self):
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randint(2, 12)
            edges = {
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            }
            line = to_graph6(Graph(n, edges))
            h = nx.from_graph6_bytes(line)
            assert set(h.nodes) == set(range(n))
            assert {tuple(sorted(e)) for e in h.edges} == edges

    def test_round_trip_corpus_sample(self):
        for line in corpus_lines()[::37]:
            assert to_graph6(parse_graph6(line)) == line

    def test_parse_accepts_header_prefix_and_str(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6(b"A_")

    def test_parse_long_form(self):
        # long form of K2: '~' then n=2 in three 6-bit bytes, then the body
        assert parse_graph6(b"~??A_") == parse_graph6(b"A_")

    def test_encode_rejects_large_order(self):
        with pytest.raises(ValueError):
            to_graph6(Graph(63))

    @pytest.mark.parametrize(
        "line,offset",
        [
            (b"", 0),  # nothing at all
            (b"\x1cQQ", 0),  # header byte below the printable range
            (b"D", 1),  # order 5 needs a bit block
            (b"DQ\x07", 2),  # out-of-range byte inside the block
            (b"DQQQ", 2),  # trailing bytes after the block
            (b"A" + bytes([127]), 1),  # above the graph6 range
        ],
    )
    def test_malformed_lines_report_offsets(self, line, offset):
        with pytest.raises(Graph6Error) as err:
            parse_graph6(line)
        assert err.value.offset == offset

    def test_nonzero_padding_rejected(self):
        # n=2 leaves 5 padding bits; set one of them
        bad = bytes([65, 63 + 1])
        with pytest.raises(Graph6Error):
            parse_graph6(bad)


class TestConstructions:
    def test_complete(self):
        g = complete(3)
        assert g.edge_count() == 3
        assert all(g.degree(v) == 2 for v in range(3))

    def test_complete_bipartite(self):
        g = complete_bipartite(2, 3)
        assert g.edge_count() == 6
        assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
        assert g.has_edge(0, 2)

    def test_empty(self):
        assert empty(4).edge_count() == 0

    def test_zero_order_rejected(self):
        for ctor in (complete, empty):
            with pytest.raises(ValueError):
                ctor(0)

    def test_join_of_empties_is_complete_bipartite(self):
        assert join(empty(2), empty(3)) == complete_bipartite(2, 3)

    def test_join_of_completes_is_complete(self):
        for a, b in [(1, 1), (2, 3), (4, 2)]:
            assert join(complete(a), complete(b)) == complete(a + b)

    def test_join_edge_count_identity(self):
        rng = random.Random(7)
        for _ in range(25):
            na, nb = rng.randint(1, 6), rng.randint(1, 6)
            ga = Graph(na, {(u, v) for u in range(na) for v in range(u + 1, na) if rng.random() < 0.5})
            gb = Graph(nb, {(u, v) for u in range(nb) for v in range(u + 1, nb) if rng.random() < 0.5})
            j = join(ga, gb)
            assert j.edge_count() == ga.edge_count() + gb.edge_count() + na * nb

    def test_family_h_k23(self):
        assert family_h(empty(2)) == complete_bipartite(2, 3)

    def test_family_h_small_join_part(self):
        g = family_h(complete(2))
        assert g == join(complete(2), empty(3))
        assert g.n == 5

    def test_family_h_order_and_independent_side(self):
        rng = random.Random(11)
        for _ in range(20):
            k = rng.randint(1, 5)
            h = Graph(k, {(u, v) for u in range(k) for v in range(u + 1, k) if rng.random() < 0.5})
            g = family_h(h)
            assert g.n == 2 * k + 1 and g.n % 2 == 1
            tail = range(k, 2 * k + 1)
            for u in tail:
                for v in tail:
                    assert u == v or not g.has_edge(u, v)
                for a in range(k):
                    assert g.has_edge(u, a)

    def test_family_h_complete3_component_count(self):
        from toughham import components

        g = family_h(complete(3))
        left = components(g, mask_of(range(3)))
        assert len(left) == 4


class TestNeighborhoods:
    def test_neighbors_in_set(self):
        g = complete_bipartite(2, 3)
        three_side = mask_of([2, 3, 4])
        assert neighbors_in_set(g, 0, three_side) == three_side

    def test_set_neighborhood(self):
        g = complete_bipartite(2, 3)
        assert set_neighborhood(g, mask_of([2, 3, 4])) == mask_of([0, 1])
        assert set_neighborhood(g, g.full_mask) == 0

    def test_are_remote(self):
        g = cycle(6)
        assert are_remote(g, mask_of([0]), mask_of([3]))
        assert not are_remote(g, mask_of([0]), mask_of([1]))  # adjacent
        assert not are_remote(g, mask_of([0, 2]), mask_of([2, 4]))  # overlap

    def test_are_remote_symmetric(self):
        rng = random.Random(21)
        for _ in range(50):
            n = rng.randint(2, 10)
            g = Graph(n, {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3})
            a = rng.getrandbits(n)
            b = rng.getrandbits(n)
            assert are_remote(g, a, b) == are_remote(g, b, a)


class TestGraphType:
    def test_immutability(self):
        g = complete(3)
        with pytest.raises(AttributeError):
            g.n = 5

    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_order_cap(self):
        Graph(64)
        with pytest.raises(ValueError):
            Graph(65)

    def test_induced(self):
        g = cycle(5)
        sub, old = g.induced(mask_of([1, 2, 3]))
        assert old == [1, 2, 3]
        assert sub.edge_count() == 2
        assert sub.has_edge(0, 1) and sub.has_edge(1, 2)
