from __future__ import annotations

import random

import pytest

from coverideals import graphs
from coverideals.monomial import MonomialIdeal, RingContext


def test_complement_examples():
    assert graphs.complement(graphs.complete_graph(4)) == graphs.edgeless(4)
    G = graphs.cycle(6)
    assert graphs.complement(graphs.complement(G)) == G
    assert graphs.complement(graphs.cycle(4)).edges == ((1, 3), (2, 4))


def test_builders():
    assert graphs.complete_multipartite((1, 1, 1)) == graphs.complete_graph(3)
    assert graphs.cycle(3) == graphs.complete_graph(3)
    assert len(graphs.complete_multipartite((2, 3)).edges) == 6
    assert graphs.star(5).edges == ((1, 2), (1, 3), (1, 4), (1, 5))


def test_minimal_vertex_covers():
    covers = {c.vertices for c in graphs.minimal_vertex_covers(graphs.cycle(4))}
    assert covers == {frozenset({1, 3}), frozenset({2, 4})}
    n = 5
    covers = {c.vertices for c in graphs.minimal_vertex_covers(graphs.complete_graph(n))}
    assert covers == {frozenset(range(1, n + 1)) - {i} for i in range(1, n + 1)}
    assert [c.vertices for c in graphs.minimal_vertex_covers(graphs.edgeless(3))] == [frozenset()]


def test_cover_and_edge_ideals():
    assert str(graphs.cover_ideal(graphs.cycle(4))) == "<x1*x3, x2*x4>"
    assert str(graphs.cover_ideal(graphs.complete_graph(3))) == "<x1*x2, x1*x3, x2*x3>"
    unit = graphs.cover_ideal(graphs.edgeless(3))
    assert unit.generators == (RingContext(3).one(),)
    assert str(graphs.edge_ideal(graphs.SimpleGraph(2, [(1, 2)]))) == "<x1*x2>"
    assert len(graphs.edge_ideal(graphs.cycle(4))) == 4
    assert graphs.edge_ideal(graphs.edgeless(3)).is_zero


def _is_cover(G, vs):
    return all(i in vs or j in vs for i, j in G.edges)


def test_cover_ideal_generators_are_minimal_covers():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 7)
        G = graphs.SimpleGraph(n, [e for e in graphs.complete_graph(n).edges if rng.random() < 0.5])
        supports = [frozenset(k + 1 for k in g.support) for g in graphs.cover_ideal(G).generators]
        assert len(set(supports)) == len(supports)
        for c in supports:
            assert _is_cover(G, c)
            assert all(not _is_cover(G, c - {v}) for v in c)
        # every minimal cover appears: brute force over all subsets
        brute = set()
        for mask in range(1 << n):
            c = frozenset(v + 1 for v in range(n) if mask >> v & 1)
            if _is_cover(G, c) and all(not _is_cover(G, c - {v}) for v in c):
                brute.add(c)
        assert brute == set(supports)


def test_graph_from_ideal_examples():
    R4 = RingContext(4)
    J = MonomialIdeal(R4, [R4.squarefree(s) for s in ([2, 3], [0, 3], [0, 1], [1, 2])])
    assert graphs.graph_from_ideal(J) == graphs.cycle(4)
    R3 = RingContext(3)
    assert graphs.graph_from_ideal(MonomialIdeal(R3, [R3.var(2)])).edges == ((1, 2),)
    assert str(graphs.ideal_from_graph(graphs.path(3))) == "<x1, x3>"
    single = graphs.ideal_from_graph(graphs.SimpleGraph(4, [(1, 2)]))
    assert len(single) == 1 and single.generators[0].degree == 2


def test_ideal_graph_round_trip():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(3, 8)
        edges = [e for e in graphs.complete_graph(n).edges if rng.random() < 0.4] or [(1, 2)]
        G = graphs.SimpleGraph(n, edges)
        assert graphs.graph_from_ideal(graphs.ideal_from_graph(G)) == G


def test_graph_from_ideal_rejects_wrong_degree():
    R = RingContext(4)
    with pytest.raises(ValueError):
        graphs.graph_from_ideal(MonomialIdeal(R, [R.squarefree([0])]))


@pytest.mark.parametrize("n", range(3, 8))
def test_cover_ideal_of_tree_complement(n):
    for T in graphs.nonisomorphic_trees(n):
        J = graphs.cover_ideal(graphs.complement(T))
        assert all(g.degree == n - 2 for g in J.generators)
        assert graphs.graph_from_ideal(J) == T


def test_ideal_from_graph_is_cover_of_complement_when_triangle_free():
    # maximal cliques of a triangle-free graph are its edges, so the covers of
    # the complement are exactly the edge complements
    for G in [graphs.cycle(4), graphs.cycle(5), graphs.cycle(7), graphs.path(5), graphs.star(6)]:
        assert graphs.ideal_from_graph(G) == graphs.cover_ideal(graphs.complement(G))
    J = graphs.ideal_from_graph(graphs.complete_graph(5))
    assert len(J) == 10 and all(g.degree == 3 for g in J.generators)


def test_structure():
    st = graphs.structure(graphs.path(6))
    assert st.is_forest and st.cyclomatic_number == 0
    assert graphs.structure(graphs.cycle(5)).odd_unicyclic
    st4 = graphs.structure(graphs.cycle(4))
    assert not st4.odd_unicyclic and st4.cyclomatic_number == 1
    assert st4.girth_parity_of_unique_cycle == "even"


def test_cyclomatic_number():
    rng = random.Random(5)
    for _ in range(40):
        G = graphs.random_connected_graph(rng.randint(2, 8), rng)
        assert graphs.structure(G).cyclomatic_number == len(G.edges) - G.n + 1


def test_shelling_order_properties():
    order = graphs.shelling_edge_order(graphs.cycle(4))
    tree_part = graphs.SimpleGraph(4, order[:3])
    assert graphs.structure(tree_part).is_forest and graphs.structure(tree_part).is_connected
    assert set(order) == set(graphs.cycle(4).edges)
    star_order = graphs.shelling_edge_order(graphs.star(5))
    assert 1 in star_order[0]
    rng = random.Random(2)
    for _ in range(30):
        G = graphs.random_connected_graph(rng.randint(3, 7), rng)
        order = graphs.shelling_edge_order(G)
        assert sorted(order) == list(G.edges)
        seen = set(order[0])
        for e in order[1:]:
            assert seen & set(e), "each edge meets an earlier one"
            seen |= set(e)


@pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)])
def test_nonisomorphic_tree_counts(n, count):
    trees = graphs.nonisomorphic_trees(n)
    assert len(trees) == count
    assert len({graphs.tree_canonical_form(T) for T in trees}) == count


def test_tree_canonical_form_is_label_invariant():
    rng = random.Random(8)
    for _ in range(30):
        T = graphs.random_tree(7, rng)
        perm = list(range(1, 8))
        rng.shuffle(perm)
        relabeled = T.relabel(dict(zip(range(1, 8), perm)))
        assert graphs.tree_canonical_form(T) == graphs.tree_canonical_form(relabeled)


@pytest.mark.parametrize("n,count", [(3, 4), (4, 38), (5, 728)])
def test_labeled_connected_counts(n, count):
    assert sum(1 for _ in graphs.labeled_connected_graphs(n)) == count


def test_connected_up_to_isomorphism_counts():
    by_n = {}
    for G in graphs.connected_graphs_up_to_isomorphism(7):
        by_n[G.n] = by_n.get(G.n, 0) + 1
    assert by_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_has_four_cycle():
    assert graphs.has_four_cycle(graphs.cycle(4))
    assert graphs.has_four_cycle(graphs.complete_graph(4))
    assert not graphs.has_four_cycle(graphs.cycle(6))
    assert not graphs.has_four_cycle(graphs.cycle(5))


def test_graph_json_round_trip():
    G = graphs.complete_multipartite((2, 3))
    assert graphs.SimpleGraph.from_json(G.to_json()) == G
