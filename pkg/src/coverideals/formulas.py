"""Closed-form Betti numbers, regularity and projective dimension.

Every evaluator is exact integer arithmetic.  ``binom`` vanishes outside
0 <= b <= a, which several edge cases rely on (e.g. the last Betti number of
a tree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable


def binom(a: int, b: int) -> int:
    return math.comb(a, b) if 0 <= b <= a else 0


def betti_connected_graph(r: int, n: int) -> tuple[int, int, int]:
    """(beta_{0,n-2}, beta_{1,n-1}, beta_{2,n}) of the degree-(n-2) ideal of a connected graph.

    Args:
        r: number of edges.
        n: number of vertices.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if not n - 1 <= r <= math.comb(n, 2):
        raise ValueError(f"a connected graph on {n} vertices has between {n - 1} and {math.comb(n, 2)} edges")
    return (r, 2 * r - n, r - n + 1)


def betti_planar(n: int, m: int) -> tuple[int, int, int]:
    """Same triple for a connected planar graph with m bounded regions (r = n + m - 1)."""
    if n < 3 or m < 0:
        raise ValueError("need n >= 3 and m >= 0")
    return (n + m - 1, n + 2 * m - 2, m)


def betti_complete_power(n: int, s: int, i: int) -> int:
    """beta_i(J(K_n)^s); nonzero only in internal degree s(n-1) + i."""
    if n < 2 or s < 1 or i < 0:
        raise ValueError("need n >= 2, s >= 1, i >= 0")
    return binom(n - 1, i) * binom(n - 1 - i + s, n - 1)


def betti_tree_complement_power(n: int, s: int, i: int) -> int:
    """beta_i(J(complement of a tree on n vertices)^s)."""
    if n < 3 or s < 1 or i < 0:
        raise ValueError("need n >= 3, s >= 1, i >= 0")
    return binom(n - 2, i) * binom(n - 2 - i + s, n - 2)


def reg_multipartite(weights, s: int) -> int:
    """reg(S/J(G)^s) for the complete multipartite graph with sorted part sizes."""
    w = [int(x) for x in weights]
    n = len(w)
    if n < 2 or s < 1:
        raise ValueError("need at least two parts and s >= 1")
    if any(a < 1 for a in w):
        raise ValueError("part sizes must be positive")
    if w != sorted(w):
        raise ValueError(f"weights must be sorted ascending, got {w}")
    total = sum(w)
    if s < n - 1:
        return s * total - (s + 1)
    return s * total - w[0] * (s - n + 1) - n


def pdim_complete_power(n: int, s: int) -> int:
    """pdim(S/J(K_n)^s)."""
    if n < 2 or s < 1:
        raise ValueError("need n >= 2, s >= 1")
    return s + 1 if s < n - 1 else n


def a_t_formula(n: int, s: int, t: int) -> int:
    """Number of generators u of J(K_n)^s with |set(u)| = t."""
    return binom(n - 1, t) * binom(s, t)


def chu_vandermonde_sum(n: int, s: int, i: int) -> int:
    """sum_t C(n-1, t) C(s, t) C(t, i): the mapping-cone count of beta_i(J(K_n)^s)."""
    return sum(a_t_formula(n, s, t) * binom(t, i) for t in range(min(n - 1, s) + 1))


@dataclass(frozen=True)
class FormulaResult:
    formula: str
    inputs: dict
    value: object

    def to_json(self) -> dict:
        v = list(self.value) if isinstance(self.value, tuple) else self.value
        return {"formula": self.formula, "inputs": self.inputs, "value": v}


@dataclass(frozen=True)
class FormulaSpec:
    func: Callable
    params: tuple[str, ...]
    help: str = ""
    list_params: frozenset = field(default_factory=frozenset)


FORMULAS: dict[str, FormulaSpec] = {
    "connected-graph": FormulaSpec(betti_connected_graph, ("r", "n"), "Betti triple from edge and vertex counts"),
    "planar": FormulaSpec(betti_planar, ("n", "m"), "Betti triple from bounded regions"),
    "complete-power": FormulaSpec(betti_complete_power, ("n", "s", "i"), "beta_i of J(K_n)^s"),
    "tree-complement-power": FormulaSpec(betti_tree_complement_power, ("n", "s", "i"), "beta_i of J(tree complement)^s"),
    "reg-multipartite": FormulaSpec(reg_multipartite, ("w", "s"), "reg of S/J(K_w)^s", frozenset({"w"})),
    "pdim-complete-power": FormulaSpec(pdim_complete_power, ("n", "s"), "pdim of S/J(K_n)^s"),
    "a-t": FormulaSpec(a_t_formula, ("n", "s", "t"), "generators with |set| = t"),
    "chu-vandermonde": FormulaSpec(chu_vandermonde_sum, ("n", "s", "i"), "mapping-cone double count"),
}


def evaluate(formula_id: str, **params) -> FormulaResult:
    """Evaluate a registered formula; list-valued parameters accept sequences."""
    if formula_id not in FORMULAS:
        raise KeyError(f"unknown formula {formula_id!r}; choose from {sorted(FORMULAS)}")
    spec = FORMULAS[formula_id]
    missing = [p for p in spec.params if p not in params]
    extra = sorted(set(params) - set(spec.params))
    if missing or extra:
        raise ValueError(f"{formula_id} takes {spec.params}; missing {missing}, unexpected {extra}")
    args = [params[p] for p in spec.params]
    inputs = {p: (list(params[p]) if p in spec.list_params else params[p]) for p in spec.params}
    return FormulaResult(formula_id, inputs, spec.func(*args))
