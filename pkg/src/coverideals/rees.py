"""Defining ideal of the Rees algebra R(I) = S[It] of a monomial ideal.

Generators of I are indexed by their position in ``I.generators`` (0-based);
T_k is the variable mapped to u_k * t.  A relation is stored as the binomial
``left - right`` where each side is a coefficient monomial times a product of
T variables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import graphs
from .monomial import Monomial, MonomialIdeal, lcm, power
from .quotients import NotLinearQuotients, compute_set_data, find_linear_quotient_order, revlex_order, QuotientOrder

DEFAULT_MAX_GENERATORS = 24
DEFAULT_MAX_DEGREE = 5


class BudgetExceeded(ValueError):
    pass


class CriterionContradiction(RuntimeError):
    """The coincidence search disagrees with the graph criterion for linear type."""


@dataclass(frozen=True, order=True)
class IndexMultiset:
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.indices))
        if not idx:
            raise ValueError("an index multiset needs degree >= 1")
        if idx[0] < 0:
            raise ValueError("indices are non-negative")
        object.__setattr__(self, "indices", idx)

    @property
    def degree(self) -> int:
        return len(self.indices)

    def product(self, I: MonomialIdeal) -> Monomial:
        out = I.ctx.one()
        for k in self.indices:
            out = out * I.generators[k]
        return out

    def __str__(self) -> str:
        return "*".join(f"T{k + 1}" for k in self.indices)


@dataclass(frozen=True)
class ReesBinomial:
    left_coef: Monomial
    left: IndexMultiset
    right_coef: Monomial
    right: IndexMultiset

    def __post_init__(self):
        if self.left.degree != self.right.degree:
            raise ValueError("both sides need the same T-degree")

    @property
    def t_degree(self) -> int:
        return self.left.degree

    @property
    def x_degrees(self) -> tuple[int, int]:
        return (self.left_coef.degree, self.right_coef.degree)

    def __neg__(self) -> ReesBinomial:
        return ReesBinomial(self.right_coef, self.right, self.left_coef, self.left)

    def vanishes_on(self, I: MonomialIdeal) -> bool:
        """True when T_k -> u_k t sends the binomial to zero, i.e. it lies in K."""
        return self.left_coef * self.left.product(I) == self.right_coef * self.right.product(I)

    def __str__(self) -> str:
        def side(c, a):
            return str(a) if c.degree == 0 else f"{c}*{a}"

        return f"{side(self.left_coef, self.left)} - {side(self.right_coef, self.right)}"

    def to_json(self) -> dict:
        return {
            "left": {"coef": list(self.left_coef.exponents), "T": [k + 1 for k in self.left.indices]},
            "right": {"coef": list(self.right_coef.exponents), "T": [k + 1 for k in self.right.indices]},
        }


def taylor_relation(I: MonomialIdeal, alpha: IndexMultiset, beta: IndexMultiset) -> ReesBinomial:
    """T_{alpha,beta} = lcm/u_beta * T_beta - lcm/u_alpha * T_alpha."""
    if alpha.degree != beta.degree:
        raise ValueError("alpha and beta must have the same degree")
    if alpha == beta:
        raise ValueError("alpha == beta gives the zero relation")
    ua, ub = alpha.product(I), beta.product(I)
    m = lcm(ua, ub)
    return ReesBinomial(m / ub, beta, m / ua, alpha)


def k1_generators(I: MonomialIdeal, reduced: bool = False, order: QuotientOrder | None = None) -> list[ReesBinomial]:
    """Degree-one part of K.

    Raw: every T_{(i),(j)} with i < j.  Reduced: one relation x_k T_j - c T_l
    per k in set(u_j), where u_l is the first earlier generator dividing
    x_k u_j; these are the linear syzygies of the mapping-cone resolution, so
    there are beta_1(I) of them.
    """
    r = len(I)
    if not reduced:
        return [
            taylor_relation(I, IndexMultiset((i,)), IndexMultiset((j,)))
            for i, j in itertools.combinations(range(r), 2)
        ]
    if order is None:
        order = _linear_order(I)
    data = compute_set_data(order)
    pos = order.positions()
    seq = order.sequence
    out = []
    for j, st in enumerate(data.sets):
        uj = seq[j]
        for k in sorted(st):
            xk = I.ctx.var(k)
            target = xk * uj
            l = next(l for l in range(j) if seq[l].divides(target))
            out.append(ReesBinomial(xk, IndexMultiset((pos[j],)), target / seq[l], IndexMultiset((pos[l],))))
    return out


def _linear_order(I: MonomialIdeal) -> QuotientOrder:
    order = revlex_order(I)
    try:
        compute_set_data(order)
        return order
    except NotLinearQuotients:
        pass
    if I.is_squarefree and all(g.degree == I.ctx.n - 2 for g in I.generators):
        G = graphs.graph_from_ideal(I)
        if graphs.structure(G).is_connected:
            return shelling_order(I)
    found = find_linear_quotient_order(I)
    if found is None:
        raise NotLinearQuotients(0, I.generators[0])
    return found


def shelling_order(J: MonomialIdeal) -> QuotientOrder:
    """Generator order induced by a shelling of the connected graph G_J."""
    G = graphs.graph_from_ideal(J)
    by_edge = {graphs.missing_pair(u): u for u in J.generators}
    return QuotientOrder(J, tuple(by_edge[e] for e in graphs.shelling_edge_order(G)))


def _encode(I: MonomialIdeal, s: int):
    # pack exponent vectors into one int; each slot holds up to s * max exponent
    top = max((max(g) for g in I.exponent_vectors), default=0) * s
    bits = max(top.bit_length(), 1)
    codes = [sum(a << (bits * i) for i, a in enumerate(g)) for g in I.exponent_vectors]
    return codes


def _coincidence_groups(I: MonomialIdeal, s: int) -> list[list[tuple[int, ...]]]:
    codes = _encode(I, s)
    groups: dict[int, list[tuple[int, ...]]] = {}
    for alpha in itertools.combinations_with_replacement(range(len(codes)), s):
        groups.setdefault(sum(codes[k] for k in alpha), []).append(alpha)
    return [g for g in groups.values() if len(g) > 1]


def _check_budget(I: MonomialIdeal, s: int, max_generators: int, max_degree: int) -> None:
    if len(I) > max_generators:
        raise BudgetExceeded(f"{len(I)} generators exceeds the cap of {max_generators}")
    if s > max_degree:
        raise BudgetExceeded(f"degree {s} exceeds the cap of {max_degree}")


def binomial_coincidences(
    I: MonomialIdeal,
    s: int,
    max_generators: int = DEFAULT_MAX_GENERATORS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> list[ReesBinomial]:
    """P_s: T_alpha - T_beta for every unordered pair alpha != beta with u_alpha = u_beta."""
    if s < 2:
        raise ValueError("coincidences start in degree 2")
    _check_budget(I, s, max_generators, max_degree)
    one = I.ctx.one()
    out = []
    for group in _coincidence_groups(I, s):
        for a, b in itertools.combinations(sorted(group), 2):
            out.append(ReesBinomial(one, IndexMultiset(a), one, IndexMultiset(b)))
    out.sort(key=lambda rb: (rb.left, rb.right))
    return out


def first_coincidence(I: MonomialIdeal, s_max: int, **caps) -> ReesBinomial | None:
    """The first pair (smallest degree, then lexicographic) with u_alpha = u_beta."""
    for s in range(2, s_max + 1):
        _check_budget(I, s, caps.get("max_generators", DEFAULT_MAX_GENERATORS), caps.get("max_degree", DEFAULT_MAX_DEGREE))
        groups = _coincidence_groups(I, s)
        if groups:
            one = I.ctx.one()
            a, b = min(tuple(sorted(g)[:2]) for g in groups)
            return ReesBinomial(one, IndexMultiset(a), one, IndexMultiset(b))
    return None


def _require_degree_n_minus_2(J: MonomialIdeal) -> graphs.SimpleGraph:
    # raises ValueError for non-squarefree or wrong-degree generators
    return graphs.graph_from_ideal(J)


@dataclass
class DefiningIdeal:
    k1: list[ReesBinomial]
    k1_raw_count: int
    coincidences: dict[int, list[ReesBinomial]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "K1": [b.to_json() for b in self.k1],
            "K1_raw_count": self.k1_raw_count,
            "coincidences": {str(s): [b.to_json() for b in bs] for s, bs in sorted(self.coincidences.items())},
        }


def defining_ideal_generators(J: MonomialIdeal, s_max: int) -> DefiningIdeal:
    """Reduced K_1 together with P_2, ..., P_{s_max}."""
    G = _require_degree_n_minus_2(J)
    if graphs.structure(G).is_connected:
        k1 = k1_generators(J, reduced=True, order=_linear_order(J))
    else:
        try:
            k1 = k1_generators(J, reduced=True)
        except NotLinearQuotients:
            k1 = k1_generators(J, reduced=False)
    coincidences = {s: binomial_coincidences(J, s) for s in range(2, s_max + 1)}
    return DefiningIdeal(k1, math.comb(len(J), 2), coincidences)


def graph_verdict(G: graphs.SimpleGraph) -> str:
    """"forest", "odd-unicyclic", "odd-unicyclic-components" or "other".

    The third covers disconnected graphs whose components each have at most
    one cycle, which is odd; those are of linear type as well.
    """
    st = graphs.structure(G)
    if st.is_forest:
        return "forest"
    if st.odd_unicyclic:
        return "odd-unicyclic"
    profile = graphs.component_cycle_profile(G)
    if all(c == 0 or (c == 1 and length % 2) for c, length in profile):
        return "odd-unicyclic-components"
    return "other"


LINEAR_TYPE_VERDICTS = ("forest", "odd-unicyclic", "odd-unicyclic-components")


@dataclass
class LinearTypeReport:
    graph_verdict: str
    s_max: int
    witness: ReesBinomial | None
    consistent: bool

    @property
    def linear_type_by_graph(self) -> bool:
        return self.graph_verdict in LINEAR_TYPE_VERDICTS

    @property
    def search_verdict(self) -> str:
        return "no coincidence found" if self.witness is None else "witness binomial"

    @property
    def witness_degree(self) -> int | None:
        return None if self.witness is None else self.witness.t_degree

    def to_json(self) -> dict:
        return {
            "graph_verdict": self.graph_verdict,
            "linear_type": self.linear_type_by_graph,
            "search_verdict": self.search_verdict,
            "s_max": self.s_max,
            "witness": None if self.witness is None else self.witness.to_json(),
            "witness_degree": self.witness_degree,
            "consistent": self.consistent,
        }


def linear_type(J: MonomialIdeal, s_max: int = 4) -> LinearTypeReport:
    """Compare the graph criterion for linear type with a coincidence search up to s_max.

    ``consistent`` is False when a non-linear-type graph shows no coincidence
    within s_max (the search was too shallow); a coincidence for a
    linear-type graph raises CriterionContradiction.
    """
    G = _require_degree_n_minus_2(J)
    verdict = graph_verdict(G)
    witness = first_coincidence(J, s_max)
    linear = verdict in LINEAR_TYPE_VERDICTS
    if linear and witness is not None:
        raise CriterionContradiction(f"G_J is {verdict} but {witness} lies in K")
    return LinearTypeReport(verdict, s_max, witness, linear == (witness is None))


@dataclass
class CIReport:
    mu_K: int
    expected_height: int
    all_bidegree_1_1: bool
    verdict: str

    def to_json(self) -> dict:
        return {
            "mu_K": self.mu_K,
            "expected_height": self.expected_height,
            "all_bidegree_1_1": self.all_bidegree_1_1,
            "verdict": self.verdict,
        }


def ci_report(J: MonomialIdeal) -> CIReport:
    """Generator count and bidegrees of K for G_J a tree or an odd-unicyclic graph.

    The height of K is dim R - dim R(J) = (n + r) - (n + 1) = r - 1; the
    verdict is CI when mu(K) equals it and ACI when mu(K) exceeds it by one.
    """
    G = _require_degree_n_minus_2(J)
    st = graphs.structure(G)
    if not (st.is_connected and (st.is_forest or st.odd_unicyclic)):
        raise ValueError("ci_report needs G_J to be a tree or a connected odd-unicyclic graph")
    k1 = k1_generators(J, reduced=True, order=_linear_order(J))
    height = len(J) - 1
    linear = all(b.x_degrees == (1, 1) and b.t_degree == 1 for b in k1)
    mu = len(k1)
    if mu == height:
        verdict = "CI"
    elif mu == height + 1:
        verdict = "ACI"
    else:
        verdict = "neither"
    return CIReport(mu, height, linear, verdict)


# -- bigraded Hilbert series -----------------------------------------------


@dataclass
class BigradedSeries:
    """Truncated series sum c[d][s] z1^d z2^s for d <= d_max, s <= s_max."""

    coeffs: list[list[int]]

    @property
    def d_max(self) -> int:
        return len(self.coeffs) - 1

    @property
    def s_max(self) -> int:
        return len(self.coeffs[0]) - 1

    def __getitem__(self, ds: tuple[int, int]) -> int:
        d, s = ds
        return self.coeffs[d][s]


def _binom(a: int, b: int) -> int:
    return math.comb(a, b) if 0 <= b <= a else 0


def rees_hilbert_ci(n: int, d_max: int, s_max: int) -> BigradedSeries:
    """Expansion of (1 - z1^(n-1) z2)^(n-2) / ((1 - z1)^n (1 - z1^(n-2) z2)^(n-1)).

    This is the Hilbert series of R/K when K is a complete intersection of
    n - 2 forms of bidegree (n-1, 1), with x-variables in bidegree (1, 0) and
    the n - 1 T-variables in bidegree (n-2, 1).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    c = [[0] * (s_max + 1) for _ in range(d_max + 1)]
    # numerator: sum_a (-1)^a C(n-2, a) z1^{a(n-1)} z2^a
    # 1/(1 - z1^{n-2} z2)^{n-1}: sum_b C(b+n-2, n-2) z1^{b(n-2)} z2^b
    # 1/(1 - z1)^n: sum_e C(e+n-1, n-1) z1^e
    for a in range(min(n - 2, s_max) + 1):
        for b in range(s_max - a + 1):
            base = a * (n - 1) + b * (n - 2)
            coef = (-1) ** a * math.comb(n - 2, a) * _binom(b + n - 2, n - 2)
            for d in range(base, d_max + 1):
                c[d][a + b] += coef * _binom(d - base + n - 1, n - 1)
    return BigradedSeries(c)


def rees_hilbert_direct(J: MonomialIdeal, d_max: int, s_max: int) -> BigradedSeries:
    """c[d][s] = number of degree-d monomials of J^s, counted directly (J^0 = S)."""
    from .monomial import hilbert_function

    n = J.ctx.n
    c = [[0] * (s_max + 1) for _ in range(d_max + 1)]
    for d in range(d_max + 1):
        c[d][0] = _binom(d + n - 1, n - 1)
    for s in range(1, s_max + 1):
        P = power(J, s)
        for d in range(d_max + 1):
            c[d][s] = hilbert_function(P, d, "ideal")
    return BigradedSeries(c)


def extract_power_series(B: BigradedSeries, s: int) -> list[int]:
    """dim (J^s)_d for d = 0..d_max: the z2^s coefficient, i.e. (1/s!) d^s/dz2^s at z2 = 0."""
    if not 0 <= s <= B.s_max:
        raise ValueError(f"s={s} outside 0..{B.s_max}")
    return [row[s] for row in B.coeffs]
