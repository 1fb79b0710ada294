"""Explicit families: structural invariants and criticality."""

from __future__ import annotations

import random

import pytest

from distcrit import (
    Graph,
    canonical_form,
    common_neighbors,
    cycle,
    cycle_power,
    embed_host,
    gamma,
    is_distance_critical,
    max_clique_size,
    max_degree_extremal,
    regular_extremal,
)
from conftest import random_graph


class TestCycles:
    def test_cycle_basics(self):
        c6 = cycle(6)
        assert c6.edge_count() == 6 and c6.is_regular() and c6.degree(0) == 2
        with pytest.raises(ValueError):
            cycle(2)

    def test_cycle_power_edges(self):
        g = cycle_power(9, 2)
        assert g.is_regular() and g.degree(0) == 4
        assert g.has_edge(0, 2) and not g.has_edge(0, 3)
        assert cycle_power(5, 1) == cycle(5)

    def test_cycle_power_saturates_to_complete(self):
        g = cycle_power(6, 3)
        assert g.edge_count() == 15

    def test_cycle_power_validation(self):
        with pytest.raises(ValueError):
            cycle_power(2, 1)
        with pytest.raises(ValueError):
            cycle_power(6, 0)
        with pytest.raises(ValueError):
            cycle_power(6, 6)

    def test_square_cycles_critical(self):
        assert is_distance_critical(cycle_power(9, 2))
        assert is_distance_critical(cycle_power(10, 2))


class TestGamma:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_shape_and_criticality(self, m):
        g, layout = gamma(m)
        na = m * (m - 1) // 2
        assert g.n == m * (m + 5) // 2
        assert g.edge_count() == na * (na - 1) // 2 + 2 * na + 2 * m + 2 * m
        assert is_distance_critical(g)
        assert max_clique_size(g) == na
        assert layout.m == m
        assert sorted(layout.a.values()) + list(layout.b) + list(layout.c) \
            == list(range(g.n))

    def test_known_edge_counts(self):
        g3, _ = gamma(3)
        g5, _ = gamma(5)
        assert g3.edge_count() == 21
        assert g5.edge_count() == 85

    def test_layout_edge_roles(self):
        g, lay = gamma(4)
        # clique part: all pairs adjacent
        ids = sorted(lay.a.values())
        for x in ids:
            for y in ids:
                if x < y:
                    assert g.has_edge(x, y)
        # pair {i, j} meets exactly b_i and b_j in the middle layer
        for (i, j), v in lay.a.items():
            mids = [b for b in lay.b if g.has_edge(v, b)]
            assert mids == sorted((lay.b[i], lay.b[j]))
        # middle b_i meets exactly the antipodal rim pair c_i, c_{i+m}
        for i, bv in enumerate(lay.b):
            rims = [c for c in lay.c if g.has_edge(bv, c)]
            assert rims == sorted((lay.c[i], lay.c[i + lay.m]))
        # rim is a single cycle
        rim = set(lay.c)
        for t, cv in enumerate(lay.c):
            nbrs = [u for u in g.neighbors(cv) if u in rim]
            assert sorted(nbrs) == sorted((lay.c[(t - 1) % (2 * lay.m)],
                                           lay.c[(t + 1) % (2 * lay.m)]))

    def test_named_witness_pairs(self):
        g, lay = gamma(4)
        for (i, j), v in lay.a.items():
            assert common_neighbors(g, lay.b[i], lay.b[j]) == (v,)
        for i, bv in enumerate(lay.b):
            assert common_neighbors(g, lay.c[i], lay.c[i + lay.m]) == (bv,)
        for t, cv in enumerate(lay.c):
            prev_c = lay.c[(t - 1) % (2 * lay.m)]
            next_c = lay.c[(t + 1) % (2 * lay.m)]
            assert common_neighbors(g, prev_c, next_c) == (cv,)

    def test_non_edge_count_at_least_n(self):
        for m in (3, 4, 5, 6):
            g, _ = gamma(m)
            non_edges = g.n * (g.n - 1) // 2 - g.edge_count()
            assert non_edges >= g.n

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            gamma(2)


class TestEmbedHost:
    def test_random_graphs_embed(self):
        rng = random.Random(2024)
        for _ in range(8):
            base = random_graph(rng.randint(3, 8), rng.choice([0.3, 0.6]), rng)
            host, inj = embed_host(base)
            assert is_distance_critical(host)
            assert sorted(inj) == list(range(base.n))
            image = [inj[v] for v in range(base.n)]
            assert len(set(image)) == base.n
            for x in range(base.n):
                for y in range(x + 1, base.n):
                    assert base.has_edge(x, y) == host.has_edge(inj[x], inj[y])

    def test_host_order_uses_smallest_m(self):
        g = random_graph(7, 0.4, random.Random(1))
        host, _ = embed_host(g)
        # smallest m with m(m-1)/2 >= 7 is 5; order n + ... = 7 + 3m
        assert host.n == 7 + 15

    def test_extreme_inputs(self):
        empty = Graph.empty(4)
        host, inj = embed_host(empty)
        assert is_distance_critical(host)
        assert all(not host.has_edge(inj[x], inj[y])
                   for x in range(4) for y in range(x + 1, 4))
        k5 = Graph.from_edges(5, [(i, j) for i in range(5)
                                  for j in range(i + 1, 5)])
        host, inj = embed_host(k5)
        assert is_distance_critical(host)
        with pytest.raises(ValueError):
            embed_host(Graph.empty(2))


class TestMaxDegreeExtremal:
    @pytest.mark.parametrize("n", range(6, 15))
    def test_degree_and_criticality(self, n):
        g = max_degree_extremal(n)
        assert g.n == n
        assert g.max_degree() == n - 4
        assert is_distance_critical(g)

    def test_seed_graphs(self):
        assert canonical_form(max_degree_extremal(6)) == canonical_form(cycle(6))
        with pytest.raises(ValueError):
            max_degree_extremal(5)


class TestRegularExtremal:
    @pytest.mark.parametrize("n", range(5, 17))
    def test_degree_and_criticality(self, n):
        g = regular_extremal(n)
        d = (n - 1) // 4 + n // 4
        assert g.is_regular() and g.degree(0) == d
        assert is_distance_critical(g)

    def test_antipodal_chords_at_8(self, antipodal_c8):
        got = regular_extremal(8)
        assert got == antipodal_c8
        chords = [(i, i + 4) for i in range(4)]
        want = cycle(8)
        for x, y in chords:
            want = want.add_edge(x, y)
        assert got == want

    def test_residue_one_is_pure_cycle_power(self):
        assert regular_extremal(9) == cycle_power(9, 2)
        assert regular_extremal(13) == cycle_power(13, 3)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            regular_extremal(4)
