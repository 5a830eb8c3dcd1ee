"""Graph construction, family constructors, and the graph6 codec."""

import itertools
import random

import pytest

from specrad.graphs import (
    ExtremalParams,
    Graph,
    complete,
    cycle,
    disjoint_union,
    edge_slots,
    extremal_graph,
    from_edges,
    g6_decode,
    g6_encode,
    induced_subgraph,
    is_connected,
    join,
    min_degree,
    parse_edge_list,
    path,
    shiu_graph,
    star,
)


def brute_force_degrees(g):
    # independent of the bitset plumbing: count via has_edge
    return tuple(sum(g.has_edge(i, j) for j in range(g.n) if j != i) for i in range(g.n))


def random_graph(rng, n, p=0.5):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                          if rng.random() < p])


class TestComplete:
    def test_single_vertex(self):
        g = complete(1)
        assert g.n == 1 and g.edge_count == 0

    def test_k4(self):
        g = complete(4)
        assert g.edge_count == 6
        assert g.degrees() == (3, 3, 3, 3)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            complete(0)


class TestJoinAndUnion:
    def test_join_of_singletons_is_edge(self):
        g = join(complete(1), complete(1))
        assert g.n == 2 and g.edge_count == 1

    def test_join_of_completes_is_complete(self):
        g = join(complete(2), complete(3))
        assert g == complete(5)

    def test_union_isolated(self):
        g = disjoint_union(complete(1), complete(1))
        assert g.n == 2 and g.edge_count == 0 and not is_connected(g)

    def test_union_counts(self):
        g = disjoint_union(complete(2), complete(3))
        assert g.n == 5 and g.edge_count == 4
        assert not is_connected(g)

    def test_union_min_degree(self):
        # K_{d-k+1} u K_{n-d-1} has min degree d-k when the first clique
        # is no bigger than the second
        n, k, d = 9, 2, 4
        g = disjoint_union(complete(d - k + 1), complete(n - d - 1))
        assert min_degree(g) == d - k

    def test_join_edge_count_random(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 10))
            h = random_graph(rng, rng.randint(1, 10))
            j = join(g, h)
            assert j.edge_count == g.edge_count + h.edge_count + g.n * h.n
            j.validate()


class TestExtremalGraph:
    def test_paw(self):
        g = extremal_graph(ExtremalParams(4, 1, 1))
        # K_1 joined to (K_1 u K_2): triangle {0,2,3} plus pendant 1 on 0
        assert g.edge_count == 4
        assert sorted(g.degrees()) == [1, 2, 2, 3]
        assert g == from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)])

    def test_7_2_3(self):
        g = extremal_graph(ExtremalParams(7, 2, 3))
        assert g.degrees() == (6, 6, 3, 3, 4, 4, 4)
        assert min_degree(g) == 3

    def test_degree_multiset(self):
        for n in range(4, 11):
            for k in range(1, n - 1):
                for d in range(k, n - 1):
                    p = ExtremalParams(n, k, d)
                    g = extremal_graph(p)
                    g.validate()
                    want = [n - 1] * k + [d] * (d - k + 1) + [n - d - 2 + k] * (n - d - 1)
                    assert list(g.degrees()) == want
                    assert brute_force_degrees(g) == g.degrees()
                    if p.realizes_min_degree:
                        assert min_degree(g) == d

    def test_both_cliques_trivial(self):
        # n = k+2, delta = k: K_{k+2} minus one edge
        for k in (1, 2, 3):
            g = extremal_graph(ExtremalParams(k + 2, k, k))
            assert g.edge_count == (k + 2) * (k + 1) // 2 - 1
            assert not g.has_edge(k, k + 1)

    def test_invalid_params_messages(self):
        with pytest.raises(ValueError, match="n - delta - 1"):
            extremal_graph(ExtremalParams(5, 4, 4))
        with pytest.raises(ValueError, match="delta >= k"):
            extremal_graph(ExtremalParams(6, 3, 2))
        with pytest.raises(ValueError, match="k >= 1"):
            extremal_graph(ExtremalParams(6, 0, 2))

    def test_realizes_flag(self):
        assert ExtremalParams(7, 2, 3).realizes_min_degree
        assert not ExtremalParams(7, 1, 4).realizes_min_degree  # B-degree 2 < 4


class TestShiuGraph:
    def test_paw_case(self):
        assert shiu_graph(4, 1) == extremal_graph(ExtremalParams(4, 1, 1))

    def test_complete_case(self):
        for n in (3, 5, 8):
            assert shiu_graph(n, n - 1) == complete(n)

    def test_5_2_degrees(self):
        assert sorted(shiu_graph(5, 2).degrees(), reverse=True) == [4, 4, 3, 3, 2]

    def test_matches_extremal_at_delta_k(self):
        for n in range(4, 11):
            for k in range(1, n - 1):
                assert shiu_graph(n, k) == extremal_graph(ExtremalParams(n, k, k))

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            shiu_graph(5, 0)
        with pytest.raises(ValueError):
            shiu_graph(5, 5)


class TestQueries:
    def test_min_degree_complete(self):
        assert min_degree(complete(5)) == 4

    def test_disconnected_union(self):
        assert not is_connected(disjoint_union(complete(2), complete(2)))

    def test_connected_small(self):
        assert is_connected(complete(1))
        assert is_connected(path(6))
        assert is_connected(cycle(5))
        assert is_connected(star(4))
        assert not is_connected(disjoint_union(path(1), path(1)))

    def test_induced_clique_inside_extremal(self):
        # blocks A u S of the (7,2,3) graph induce K_4; S u B induce K_5
        g = extremal_graph(ExtremalParams(7, 2, 3))
        assert induced_subgraph(g, [0, 1, 2, 3]) == complete(4)
        assert induced_subgraph(g, [0, 1, 4, 5, 6]) == complete(5)

    def test_induced_rejects(self):
        g = complete(4)
        with pytest.raises(ValueError):
            induced_subgraph(g, [])
        with pytest.raises(ValueError):
            induced_subgraph(g, [0, 9])

    def test_edges_iterator(self):
        g = from_edges(5, [(0, 3), (1, 2), (3, 4)])
        assert sorted(g.edges()) == [(0, 3), (1, 2), (3, 4)]

    def test_validate_catches_asymmetry(self):
        bad = Graph(3, (0b010, 0b000, 0b000))
        with pytest.raises(ValueError, match="asymmetric"):
            bad.validate()


class TestGraph6:
    def test_k3_bytes(self):
        assert g6_encode(complete(3)) == b"Bw"
        assert g6_decode(b"Bw") == complete(3)

    def test_single_vertex(self):
        assert g6_encode(complete(1)) == b"@"

    def test_round_trip_order5_exhaustive(self):
        slots = edge_slots(5)
        for mask in range(1 << 10):
            g = from_edges(5, [slots[t] for t in range(10) if mask >> t & 1])
            assert g6_decode(g6_encode(g)) == g

    def test_round_trip_random_orders(self):
        rng = random.Random(11)
        for n in (1, 2, 6, 13, 30, 62):
            g = random_graph(rng, n, 0.4)
            assert g6_decode(g6_encode(g)) == g

    def test_extended_header(self):
        g = path(80)
        enc = g6_encode(g)
        assert enc[0] == 126
        assert g6_decode(enc) == g

    def test_malformed_inputs(self):
        with pytest.raises(ValueError, match="header"):
            g6_decode(b"")
        with pytest.raises(ValueError, match="length mismatch"):
            g6_decode(b"D")          # order 5 with no edge bytes
        with pytest.raises(ValueError, match="padding"):
            g6_decode(bytes([63 + 2, 63 + 1]))  # order 2: lone edge bit padded wrong
        with pytest.raises(ValueError, match="8-byte"):
            g6_decode(b"~~AAAAAA")

    def test_accepts_str_and_newline(self):
        assert g6_decode("Bw\n") == complete(3)


class TestEdgeList:
    def test_p4(self):
        g = parse_edge_list("0 1\n1 2\n2 3\n")
        assert g == path(4)

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a square\n0 1\n\n1 2\n2 3\n0 3\n")
        assert g == cycle(4)

    def test_line_numbers_in_errors(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_edge_list("0 1\n1 x\n")
        with pytest.raises(ValueError, match="line 3"):
            parse_edge_list("0 1\n1 2\n2\n")

    def test_explicit_order_allows_isolated(self):
        g = parse_edge_list("0 1\n", n=4)
        assert g.n == 4 and g.degrees() == (1, 1, 0, 0)
