from __future__ import annotations

import random

import pytest

from coverideals import formulas, graphs
from coverideals.experiments import weighted_complete_cover
from coverideals.monomial import MonomialIdeal, RingContext, power
from coverideals.oracle import betti_table_oracle
from coverideals.quotients import (
    NotLinearQuotients,
    QuotientOrder,
    a_t_census,
    betti_from_linear_quotients,
    compute_set_data,
    find_linear_quotient_order,
    linear_quotient_betti,
    revlex_order,
    set_formula_complete_power,
    weighted_betti,
)
from coverideals.rees import shelling_order
from coverideals.tables import BettiTable, pdim, regularity


def JK(n, s=1):
    return power(graphs.cover_ideal(graphs.complete_graph(n)), s)


def test_revlex_order_examples():
    assert [str(u) for u in revlex_order(JK(3)).sequence] == ["x1*x2", "x1*x3", "x2*x3"]
    R = RingContext(3)
    single = MonomialIdeal(R, [R.squarefree([0, 2])])
    assert revlex_order(single).sequence == single.generators


def test_set_data_jk3():
    data = compute_set_data(revlex_order(JK(3)))
    assert data.sets == (frozenset(), frozenset({1}), frozenset({0}))


def test_not_linear_quotients_witness():
    R = RingContext(4)
    I = MonomialIdeal(R, [R.squarefree([0, 1]), R.squarefree([2, 3])])
    with pytest.raises(NotLinearQuotients) as err:
        compute_set_data(QuotientOrder(I, I.generators))
    assert err.value.index == 1
    assert err.value.witness == R.squarefree([0, 1])
    assert find_linear_quotient_order(I) is None


def test_principal_ideal_has_linear_quotients():
    R = RingContext(3)
    I = MonomialIdeal(R, [R.monomial((2, 0, 1))])
    assert find_linear_quotient_order(I) is not None
    table = linear_quotient_betti(I)
    assert table.entries == {(0, 3): 1}
    assert regularity(table) == 3 and pdim(table) == 0


def test_set_formula_examples():
    R3 = RingContext(3)
    assert set_formula_complete_power(3, 1, R3.squarefree([1, 2])) == frozenset({0})
    R4 = RingContext(4)
    assert set_formula_complete_power(4, 2, R4.monomial((2, 2, 2, 0))) == frozenset()
    assert set_formula_complete_power(4, 2, R4.monomial((1, 2, 2, 1))) == frozenset({0})


def test_a_t_census_examples():
    assert a_t_census(compute_set_data(revlex_order(JK(3)))) == [1, 2]
    assert a_t_census(compute_set_data(revlex_order(JK(4, 2)))) == [1, 6, 3]
    assert [formulas.a_t_formula(4, 2, t) for t in range(4)] == [1, 6, 3, 0]


def test_betti_from_linear_quotients_examples():
    assert linear_quotient_betti(JK(3)).entries == {(0, 2): 3, (1, 3): 2}
    t = linear_quotient_betti(graphs.ideal_from_graph(graphs.cycle(4)))
    assert t.entries == {(0, 2): 4, (1, 3): 4, (2, 4): 1}


def test_regularity_pdim_examples():
    t = linear_quotient_betti(JK(3))
    assert regularity(t) == 2 and pdim(t) == 1
    assert pdim(linear_quotient_betti(JK(4, 2)).to_quotient()) == 3
    with pytest.raises(ValueError):
        regularity(BettiTable())


def test_weighted_betti_examples():
    data = compute_set_data(revlex_order(JK(3)))
    assert weighted_betti(data, (1, 1, 1)).entries == betti_from_linear_quotients(data).entries
    two = compute_set_data(revlex_order(weighted_complete_cover((2, 3))))
    assert weighted_betti(two).entries == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
    w = (1, 1, 2)
    table = weighted_betti(compute_set_data(revlex_order(weighted_complete_cover(w))))
    assert regularity(table) - 1 == formulas.reg_multipartite(w, 1)


@pytest.mark.parametrize("w,s", [((2, 3), 1), ((2, 3), 2), ((1, 2), 3), ((1, 1, 2), 2), ((2, 2), 2), ((1, 1, 3), 1)])
def test_weighted_collapse_matches_oracle_on_multipartite(w, s):
    """The one-variable-per-part table equals the real multipartite table."""
    real = power(graphs.cover_ideal(graphs.complete_multipartite(w)), s)
    oracle = betti_table_oracle(real).to_ideal()
    table = weighted_betti(compute_set_data(revlex_order(power(weighted_complete_cover(w), s))))
    assert table.same_numbers(oracle)


@pytest.mark.parametrize("n", range(3, 7))
def test_connected_gj_table_shape(n):
    rng = random.Random(n)
    for _ in range(15):
        G = graphs.random_connected_graph(n, rng)
        r = len(G.edges)
        J = graphs.ideal_from_graph(G)
        table = linear_quotient_betti(J, order=shelling_order(J))
        want = {(0, n - 2): r, (1, n - 1): 2 * r - n}
        if r > n - 1:
            want[(2, n)] = r - n + 1
        assert table.entries == want


def test_table_independent_of_order():
    rng = random.Random(1)
    for _ in range(25):
        G = graphs.random_connected_graph(rng.randint(3, 6), rng)
        J = graphs.ideal_from_graph(G)
        via_shelling = linear_quotient_betti(J, order=shelling_order(J))
        found = find_linear_quotient_order(J)
        assert found is not None
        assert linear_quotient_betti(J, order=found).entries == via_shelling.entries
        try:
            via_revlex = linear_quotient_betti(J, order=revlex_order(J))
        except NotLinearQuotients:
            continue
        assert via_revlex.entries == via_shelling.entries


def test_degree_order_enforced():
    R = RingContext(2)
    I = MonomialIdeal(R, [R.var(0), R.monomial((0, 2))])
    with pytest.raises(ValueError):
        QuotientOrder(I, (I.generators[1], I.generators[0]))


def test_betti_sum_over_set_sizes():
    # sum_t A_t C(t, i) = beta_i
    for n in range(2, 6):
        for s in range(1, 5):
            data = compute_set_data(revlex_order(JK(n, s)))
            table = betti_from_linear_quotients(data)
            census = a_t_census(data)
            for i in range(n):
                assert table.total(i) == sum(a * formulas.binom(t, i) for t, a in enumerate(census))
