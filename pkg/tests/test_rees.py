from __future__ import annotations

import itertools

import pytest

from coverideals import graphs, rees
from coverideals.monomial import MonomialIdeal, RingContext, hilbert_function, power
from coverideals.rees import IndexMultiset as A


def gj(G):
    return graphs.ideal_from_graph(G)


def test_taylor_relation_example():
    R = RingContext(3)
    I = MonomialIdeal(R, [R.squarefree([0, 1]), R.squarefree([1, 2])])
    rel = rees.taylor_relation(I, A((0,)), A((1,)))
    # lcm / u_beta on T_beta minus lcm / u_alpha on T_alpha
    assert str(rel) == "x1*T2 - x3*T1"
    assert rel.vanishes_on(I)
    assert rel.to_json() == {"left": {"coef": [1, 0, 0], "T": [2]}, "right": {"coef": [0, 0, 1], "T": [1]}}


def test_taylor_relation_rejects_bad_input():
    R = RingContext(3)
    I = MonomialIdeal(R, [R.squarefree([0, 1]), R.squarefree([1, 2])])
    with pytest.raises(ValueError):
        rees.taylor_relation(I, A((0,)), A((0,)))
    with pytest.raises(ValueError):
        rees.taylor_relation(I, A((0,)), A((0, 1)))


def test_taylor_antisymmetry():
    J = gj(graphs.cycle(5))
    for a, b in itertools.combinations([A(x) for x in itertools.combinations_with_replacement(range(5), 2)], 2):
        assert rees.taylor_relation(J, a, b) == -rees.taylor_relation(J, b, a)
        assert rees.taylor_relation(J, a, b).vanishes_on(J)


def test_c4_coincidence_has_unit_coefficients():
    J = gj(graphs.cycle(4))
    (rel,) = rees.binomial_coincidences(J, 2)
    assert rel.left_coef.degree == 0 and rel.right_coef.degree == 0
    assert rel.left.product(J) == rel.right.product(J)
    # the two pairs are the alternating edges of the 4-cycle
    edges = [graphs.missing_pair(u) for u in J.generators]
    for side in (rel.left, rel.right):
        e1, e2 = (edges[k] for k in side.indices)
        assert not set(e1) & set(e2)
    taylor = rees.taylor_relation(J, rel.right, rel.left)
    assert taylor == rel


def test_k1_counts():
    R = RingContext(2)
    assert rees.k1_generators(MonomialIdeal(R, [R.var(0)])) == []
    JK3 = graphs.cover_ideal(graphs.complete_graph(3))
    assert len(rees.k1_generators(JK3)) == 3
    assert len(rees.k1_generators(JK3, reduced=True)) == 2
    assert len(rees.k1_generators(gj(graphs.path(4)), reduced=True)) == 2


def test_reduced_k1_relations_lie_in_k():
    for G in [graphs.cycle(5), graphs.complete_graph(5), graphs.star(6), graphs.complete_multipartite((2, 3))]:
        J = gj(G)
        k1 = rees.k1_generators(J, reduced=True)
        assert all(b.vanishes_on(J) and b.x_degrees == (1, 1) for b in k1)
        assert len(k1) == 2 * len(G.edges) - G.n


def test_coincidence_examples():
    assert rees.binomial_coincidences(gj(graphs.path(5)), 3) == []
    for s in range(2, 5):
        assert rees.binomial_coincidences(gj(graphs.cycle(3)), s) == []
        assert rees.binomial_coincidences(gj(graphs.star(5)), s) == []
    with pytest.raises(ValueError):
        rees.binomial_coincidences(gj(graphs.cycle(4)), 1)


def test_coincidence_budget():
    J = gj(graphs.complete_graph(8))  # 28 generators
    with pytest.raises(rees.BudgetExceeded):
        rees.binomial_coincidences(J, 2)
    with pytest.raises(rees.BudgetExceeded):
        rees.binomial_coincidences(gj(graphs.cycle(4)), 6)


def test_coincidences_match_brute_force():
    for G in [graphs.cycle(6), graphs.complete_graph(4), graphs.complete_multipartite((2, 3))]:
        J = gj(G)
        for s in (2, 3):
            got = {(b.left, b.right) for b in rees.binomial_coincidences(J, s)}
            multisets = [A(x) for x in itertools.combinations_with_replacement(range(len(J)), s)]
            want = {
                (a, b)
                for a, b in itertools.combinations(multisets, 2)
                if a.product(J) == b.product(J)
            }
            assert got == want


def test_defining_ideal_examples():
    T = graphs.from_prufer([2, 2, 3])
    d = rees.defining_ideal_generators(gj(T), 4)
    assert len(d.k1) == T.n - 2 and all(not v for v in d.coincidences.values())
    c4 = rees.defining_ideal_generators(gj(graphs.cycle(4)), 3)
    assert len(c4.k1) == 4 and len(c4.coincidences[2]) == 1
    c5 = rees.defining_ideal_generators(gj(graphs.cycle(5)), 4)
    assert all(not v for v in c5.coincidences.values())


def test_linear_type_examples():
    assert rees.linear_type(gj(graphs.path(5))).linear_type_by_graph
    c4 = rees.linear_type(gj(graphs.cycle(4)))
    assert c4.graph_verdict == "other" and c4.witness_degree == 2 and c4.consistent
    c7 = rees.linear_type(gj(graphs.cycle(7)), s_max=3)
    assert c7.graph_verdict == "odd-unicyclic" and c7.witness is None


def test_linear_type_escalation_degrees():
    # even closed walks without a 4-cycle appear at s = half their length
    assert rees.linear_type(gj(graphs.cycle(6))).witness_degree == 3
    bowtie = graphs.SimpleGraph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    assert rees.linear_type(gj(bowtie)).witness_degree == 3
    dumbbell = graphs.SimpleGraph(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)])
    report = rees.linear_type(gj(dumbbell), s_max=4)
    assert report.witness is None and not report.consistent
    assert rees.first_coincidence(gj(dumbbell), 5).t_degree == 5


def test_disconnected_odd_unicyclic_components():
    G = graphs.SimpleGraph(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7)])
    assert rees.graph_verdict(G) == "odd-unicyclic-components"
    assert rees.linear_type(gj(G)).witness is None


def test_ci_report_examples():
    tree4 = rees.ci_report(gj(graphs.path(4)))
    assert (tree4.mu_K, tree4.expected_height, tree4.verdict) == (2, 2, "CI")
    tri = rees.ci_report(gj(graphs.cycle(3)))
    assert (tri.mu_K, tri.verdict) == (3, "ACI") and tri.all_bidegree_1_1
    star = rees.ci_report(gj(graphs.star(5)))
    assert (star.mu_K, star.verdict) == (3, "CI")
    with pytest.raises(ValueError):
        rees.ci_report(gj(graphs.cycle(4)))


def test_rees_series_rows():
    n = 4
    J = gj(graphs.path(n))
    B = rees.rees_hilbert_ci(n, 12, 2)
    assert rees.extract_power_series(B, 0) == [hilbert_function(MonomialIdeal.zero(J.ctx), d, "quotient") for d in range(13)]
    assert rees.extract_power_series(B, 1) == [hilbert_function(J, d) for d in range(13)]
    assert rees.extract_power_series(B, 2) == [hilbert_function(power(J, 2), d) for d in range(13)]
    assert all(c >= 0 for row in B.coeffs for c in row)
    with pytest.raises(ValueError):
        rees.extract_power_series(B, 3)


def test_series_rows_agree_across_trees():
    rows = {
        graphs.tree_canonical_form(T): rees.extract_power_series(rees.rees_hilbert_direct(gj(T), 18, 3), 3)
        for T in graphs.nonisomorphic_trees(6)
    }
    assert len(set(map(tuple, rows.values()))) == 1


def test_index_multiset_validation():
    assert A((3, 1, 2)).indices == (1, 2, 3)
    with pytest.raises(ValueError):
        A(())
