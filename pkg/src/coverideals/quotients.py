"""Linear quotients and the Betti numbers they determine.

If the generators u_1, ..., u_r of I are ordered so that every colon ideal
(u_1, ..., u_{j-1}) : u_j is generated by variables, the iterated mapping
cone is a minimal resolution with one basis element per pair (u, sigma),
sigma a subset of set(u), in homological degree |sigma| (for I) and
degree deg(u) + |sigma|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .monomial import Monomial, MonomialIdeal, revlex_key
from .tables import BettiTable, pdim, regularity

__all__ = [
    "NotLinearQuotients",
    "SearchBudgetExceeded",
    "QuotientOrder",
    "SetData",
    "revlex_order",
    "compute_set_data",
    "set_formula_complete_power",
    "a_t_census",
    "betti_from_linear_quotients",
    "weighted_betti",
    "find_linear_quotient_order",
    "linear_quotient_betti",
    "regularity",
    "pdim",
]


class NotLinearQuotients(ValueError):
    """The order fails at position ``index`` (0-based); ``witness`` is a colon
    generator of degree >= 2 not divisible by any linear colon generator."""

    def __init__(self, index: int, witness: Monomial):
        super().__init__(f"colon ideal at position {index + 1} is not generated by variables; witness {witness}")
        self.index = index
        self.witness = witness


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class QuotientOrder:
    ideal: MonomialIdeal
    sequence: tuple[Monomial, ...]

    def __post_init__(self):
        if sorted(g.exponents for g in self.sequence) != sorted(self.ideal.exponent_vectors):
            raise ValueError("sequence must be a permutation of the minimal generators")
        degs = [g.degree for g in self.sequence]
        if any(a > b for a, b in zip(degs, degs[1:])):
            raise ValueError("degrees along a quotient order must be non-decreasing")

    def positions(self) -> list[int]:
        """Index in ``ideal.generators`` of each element of the sequence."""
        where = {e: k for k, e in enumerate(self.ideal.exponent_vectors)}
        return [where[g.exponents] for g in self.sequence]


@dataclass(frozen=True)
class SetData:
    order: QuotientOrder
    sets: tuple[frozenset[int], ...]  # 0-based variable indices per generator in order

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]


def revlex_order(I: MonomialIdeal) -> QuotientOrder:
    seq = sorted(I.generators, key=lambda g: revlex_key(g.exponents))
    return QuotientOrder(I, tuple(seq))


def _colon_rows(E: np.ndarray, j: int) -> np.ndarray:
    return np.maximum(E[:j] - E[j], 0)


def _check_position(E: np.ndarray, j: int) -> tuple[frozenset[int], int | None]:
    """set(u_j) and, on failure, the row index of an offending colon generator."""
    if j == 0:
        return frozenset(), None
    C = _colon_rows(E, j)
    deg = C.sum(axis=1)
    linear = deg == 1
    varset = frozenset(int(k) for k in np.nonzero(C[linear].any(axis=0))[0])
    if linear.all():
        return varset, None
    mask = np.zeros(E.shape[1], dtype=bool)
    mask[list(varset)] = True
    covered = (C[:, mask] > 0).any(axis=1) | linear
    bad = np.nonzero(~covered)[0]
    if bad.size == 0:
        return varset, None
    # smallest-degree offender, ties by position
    return varset, int(min(bad, key=lambda r: (deg[r], r)))


def compute_set_data(order: QuotientOrder) -> SetData:
    """set(u_j) = {k : x_k u_j in (u_1..u_{j-1})}; raises if some colon ideal is not linear."""
    ctx = order.ideal.ctx
    E = np.array([g.exponents for g in order.sequence], dtype=np.int64).reshape(len(order.sequence), ctx.n)
    sets = []
    for j in range(len(order.sequence)):
        varset, bad = _check_position(E, j)
        if bad is not None:
            witness = Monomial(ctx, tuple(int(a) for a in _colon_rows(E, j)[bad]))
            raise NotLinearQuotients(j, witness)
        sets.append(varset)
    return SetData(order, tuple(sets))


def set_formula_complete_power(n: int, s: int, u: Monomial) -> frozenset[int]:
    """For u = X^s / v in M(J(K_n)^s): the variables of supp(v) other than x_n.

    Returned as 0-based indices.
    """
    if u.ctx.n != n:
        raise ValueError("monomial lives in a ring of the wrong size")
    v = [s - a for a in u.exponents]
    if any(b < 0 for b in v) or sum(v) != s:
        raise ValueError(f"{u} is not of the form X^{s}/v with deg v = {s}")
    return frozenset(i for i in range(n - 1) if v[i] > 0)


def a_t_census(setdata: SetData) -> list[int]:
    """A_t = number of generators with |set(u)| = t, for t = 0..max."""
    sizes = setdata.sizes
    counts = [0] * (max(sizes, default=0) + 1)
    for t in sizes:
        counts[t] += 1
    return counts


def betti_from_linear_quotients(setdata: SetData) -> BettiTable:
    table = BettiTable(kind="ideal")
    for u, st in zip(setdata.order.sequence, setdata.sets):
        for i in range(len(st) + 1):
            table.add(i, u.degree + i, math.comb(len(st), i))
    return table


def weighted_betti(setdata: SetData, weights=None) -> BettiTable:
    """Same basis as the standard table, graded by deg_w(u) + sum of w_k over sigma."""
    ctx = setdata.order.ideal.ctx
    w = tuple(weights) if weights is not None else ctx.weights
    if len(w) != ctx.n or any(x < 1 for x in w):
        raise ValueError("need one positive weight per variable")
    table = BettiTable(kind="ideal", weights=w)
    for u, st in zip(setdata.order.sequence, setdata.sets):
        base = sum(a * x for a, x in zip(u.exponents, w))
        # subset-sum DP: (size, weight) -> count
        dist = {(0, 0): 1}
        for k in sorted(st):
            nxt = dict(dist)
            for (i, d), c in dist.items():
                key = (i + 1, d + w[k])
                nxt[key] = nxt.get(key, 0) + c
            dist = nxt
        for (i, d), c in dist.items():
            table.add(i, base + d, c)
    return table


def find_linear_quotient_order(I: MonomialIdeal, budget: int = 100_000) -> QuotientOrder | None:
    """Depth-first search for a linear-quotient order with non-decreasing degrees.

    Tries generators in revlex order first, so a valid revlex order is found
    without backtracking.  Returns None when the search space is exhausted
    (no such order exists) and raises SearchBudgetExceeded when the budget of
    node expansions runs out first.
    """
    gens = sorted(I.generators, key=lambda g: revlex_key(g.exponents))
    r = len(gens)
    if r == 0:
        return None
    E = np.array([g.exponents for g in gens], dtype=np.int64)
    degs = E.sum(axis=1)
    dead: set[int] = set()
    expansions = 0

    def ok(prefix: list[int], cand: int) -> bool:
        if not prefix:
            return True
        sub = np.vstack([E[prefix], E[cand]])
        _, bad = _check_position(sub, len(prefix))
        return bad is None

    def extend(prefix: list[int], used: int) -> list[int] | None:
        nonlocal expansions
        if len(prefix) == r:
            return prefix
        if used in dead:
            return None
        expansions += 1
        if expansions > budget:
            raise SearchBudgetExceeded(f"no order found within {budget} expansions")
        remaining = [k for k in range(r) if not used >> k & 1]
        dmin = min(degs[k] for k in remaining)
        for k in remaining:
            if degs[k] == dmin and ok(prefix, k):
                found = extend(prefix + [k], used | 1 << k)
                if found is not None:
                    return found
        dead.add(used)
        return None

    found = extend([], 0)
    if found is None:
        return None
    return QuotientOrder(I, tuple(gens[k] for k in found))


def linear_quotient_betti(I: MonomialIdeal, order: QuotientOrder | None = None, budget: int = 100_000) -> BettiTable:
    """Betti table of I via linear quotients: the given order, else revlex, else a search."""
    if order is not None:
        return betti_from_linear_quotients(compute_set_data(order))
    try:
        return betti_from_linear_quotients(compute_set_data(revlex_order(I)))
    except NotLinearQuotients:
        pass
    found = find_linear_quotient_order(I, budget)
    if found is None:
        raise NotLinearQuotientsAnyOrder(I)
    return betti_from_linear_quotients(compute_set_data(found))


class NotLinearQuotientsAnyOrder(ValueError):
    def __init__(self, I: MonomialIdeal):
        super().__init__(f"no degree-compatible linear-quotient order exists for {I}")
        self.ideal = I
