import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgebetti.atlas import enumerate_graphs
from edgebetti.betti import (
    EdgelessGraphError,
    betti_table_hochster,
    betti_table_koszul,
    depth_of_quotient,
    kpolynomial_numerator,
    pd_reg,
    table_alternating_sum,
)
from edgebetti.graphs import (
    complete,
    disjoint_union,
    from_edges,
    induced_subgraph,
    isolated,
    join,
    path,
    relabel,
)
from edgebetti.ideals import MonomialIdeal, initial_ideal


class TestHochsterGoldens:
    def test_principal_ideal(self):
        table = betti_table_hochster(MonomialIdeal(4, (0b1001,)))
        assert table.entries == {(0, 0): 1, (1, 2): 1}

    def test_path_three(self):
        table = betti_table_hochster(initial_ideal(path(3)))
        assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
        assert pd_reg(path(3)) == (1, 3)

    def test_triangle(self):
        table = betti_table_hochster(initial_ideal(complete(3)))
        assert table.quotient_pd == 2 and table.quotient_reg == 1
        assert pd_reg(complete(3)) == (1, 2)

    def test_zero_ideal(self):
        assert betti_table_hochster(MonomialIdeal(4, ())).entries == {(0, 0): 1}

    def test_unit_rejected(self):
        with pytest.raises(ValueError):
            betti_table_hochster(MonomialIdeal(4, (0,)))
        with pytest.raises(ValueError):
            betti_table_koszul(MonomialIdeal(4, (0,)))


class TestPdReg:
    def test_extremal_families_small(self):
        for n in range(2, 6):
            assert pd_reg(complete(n)) == (n - 2, 2)
            assert pd_reg(path(n)) == (n - 2, n)

    def test_two_edges(self):
        assert pd_reg(disjoint_union([complete(2), complete(2)])) == (1, 3)

    def test_edgeless_rejected(self):
        with pytest.raises(EdgelessGraphError):
            pd_reg(isolated(3))

    def test_isolated_vertices_are_free(self):
        # extra isolated vertices only add free variables
        assert pd_reg(disjoint_union([path(3), isolated(2)])) == pd_reg(path(3))

    @given(st.data())
    @settings(max_examples=25, deadline=None)
    def test_isomorphism_invariance(self, data):
        graphs = [g for n in (3, 4, 5) for g in [path(n)]] + [
            from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]),
            join(path(2), isolated(2)),
        ]
        g = data.draw(st.sampled_from(graphs))
        perm = data.draw(st.permutations(list(g.vertices)))
        assert pd_reg(relabel(g, list(perm))) == pd_reg(g)

    @given(st.data())
    @settings(max_examples=25, deadline=None)
    def test_induced_monotonicity(self, data):
        n = data.draw(st.integers(3, 5))
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        bits = data.draw(st.integers(1, 2 ** len(pairs) - 1))
        g = from_edges(n, [e for t, e in enumerate(pairs) if bits >> t & 1])
        size = data.draw(st.integers(2, n))
        sub_vertices = data.draw(st.permutations(list(g.vertices)))[:size]
        sub = induced_subgraph(g, sub_vertices)
        if sub.edge_count == 0:
            return
        sp, sr = pd_reg(sub)
        p, r = pd_reg(g)
        assert sp <= p and sr <= r


class TestDepth:
    def test_examples(self):
        assert depth_of_quotient(complete(3)) == 4
        assert depth_of_quotient(path(4)) == 5
        # a join with two independent universal vertices has minimal depth
        assert depth_of_quotient(join(path(3), isolated(2))) == 4


def random_squarefree_ideal(rng, max_slots=8):
    slots = rng.randint(2, max_slots)
    gens = []
    for _ in range(rng.randint(1, 5)):
        size = rng.randint(1, min(3, slots))
        gens.append(sum(1 << b for b in rng.sample(range(slots), size)))
    return MonomialIdeal(slots, tuple(gens))


class TestOracleAgreement:
    def test_small_graphs_both_fields(self):
        for n in (2, 3):
            for g in enumerate_graphs(n, dedup=True):
                ideal = initial_ideal(g)
                for field_tag in ("q", "f2"):
                    assert (
                        betti_table_hochster(ideal, field_tag).entries
                        == betti_table_koszul(ideal, field_tag).entries
                    )

    def test_random_ideals(self):
        rng = random.Random(11)
        for _ in range(25):
            ideal = random_squarefree_ideal(rng)
            for field_tag in ("q", "f2"):
                assert (
                    betti_table_hochster(ideal, field_tag).entries
                    == betti_table_koszul(ideal, field_tag).entries
                )


class TestHilbertSeriesIdentity:
    def test_all_graphs_up_to_four(self):
        for n in (2, 3, 4):
            for g in enumerate_graphs(n, dedup=True):
                ideal = initial_ideal(g)
                table = betti_table_hochster(ideal)
                assert table_alternating_sum(table) == kpolynomial_numerator(ideal)

    def test_random_ideals(self):
        rng = random.Random(13)
        for _ in range(25):
            ideal = random_squarefree_ideal(rng)
            table = betti_table_hochster(ideal)
            assert table_alternating_sum(table) == kpolynomial_numerator(ideal)
