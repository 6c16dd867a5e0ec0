"""Brute-force graded Betti numbers via polarization and Hochster's formula.

For a squarefree ideal with Stanley-Reisner complex D on vertex set V,

    beta_{i,j}(S/I) = sum over sigma in V with |sigma| = j of dim H~_{j-i-1}(D|sigma).

Only sigma that are unions of generator supports can contribute: any other
sigma has a vertex outside every support it contains, and D|sigma is a cone
over that vertex.  This module is independent of the linear-quotient code and
serves as its oracle.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .monomial import MonomialIdeal, RingContext
from .tables import BettiTable

DEFAULT_PRIME = 32003
DEFAULT_CAP = 22


class OracleCapExceeded(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for a prime p, or the rationals when p = 0."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (_is_prime(p) and p < 1 << 31):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


@dataclass(frozen=True)
class PolarizedIdeal:
    original: MonomialIdeal
    slots: dict  # (variable index, occurrence 1..a) -> polarized variable index
    ideal: MonomialIdeal

    @property
    def nvars(self) -> int:
        return len(self.slots)

    def support_masks(self) -> list[int]:
        return [sum(1 << k for k in g.support) for g in self.ideal.generators]


def polarize(I: MonomialIdeal) -> PolarizedIdeal:
    """Replace x_i^a by y_{i,1} ... y_{i,a}; squarefree ideals map to a copy of themselves."""
    n = I.ctx.n
    top = [max((g[i] for g in I.exponent_vectors), default=0) for i in range(n)]
    slots = {}
    for i in range(n):
        for e in range(1, top[i] + 1):
            slots[(i, e)] = len(slots)
    ctx = RingContext(max(len(slots), 1))
    gens = [
        ctx.squarefree(slots[(i, e)] for i in range(n) for e in range(1, g[i] + 1))
        for g in I.exponent_vectors
    ]
    return PolarizedIdeal(I, slots, MonomialIdeal(ctx, gens))


def homology_rank(sigma: int, nonfaces, d: int, field: FieldSpec = FieldSpec()) -> int:
    """dim H~_d of the complex on ``sigma`` whose minimal non-faces are ``nonfaces``."""
    return kernels.reduced_homology_dim(sigma, nonfaces, d, field.characteristic)


def lcm_lattice(supports: list[int], max_size: int | None = None) -> set[int]:
    """All unions of subsets of ``supports`` (including the empty union), capped in size."""
    lattice = {0}
    for s in sorted(set(supports)):
        grown = set()
        for x in lattice:
            y = x | s
            if max_size is None or y.bit_count() <= max_size:
                grown.add(y)
        lattice |= grown
    return lattice


def _sweep(args) -> dict[tuple[int, int], int]:
    sigmas, supports, degrees, p = args
    out: dict[tuple[int, int], int] = {}
    for sigma in sigmas:
        inside = [s for s in supports if s & ~sigma == 0]
        size = sigma.bit_count()
        for i in degrees:
            h = kernels.reduced_homology_dim(sigma, inside, size - i - 1, p)
            if h:
                out[(i, size)] = out.get((i, size), 0) + h
    return out


def _chunks(items: list, k: int) -> list[list]:
    return [items[t::k] for t in range(k)] if k > 1 else [items]


def _run(sigmas, supports, degrees, p, jobs):
    jobs = max(1, min(jobs, len(sigmas) or 1))
    parts = [(c, supports, degrees, p) for c in _chunks(sorted(sigmas), jobs)]
    if jobs == 1:
        results = [_sweep(parts[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep, parts))
    total: dict[tuple[int, int], int] = {}
    for res in results:
        for k, v in res.items():
            total[k] = total.get(k, 0) + v
    return total


def _subsets_containing_support(supports: list[int], nvars: int, j: int) -> list[int]:
    out = []
    for combo in itertools.combinations(range(nvars), j):
        m = sum(1 << t for t in combo)
        if any(s & ~m == 0 for s in supports):
            out.append(m)
    return out


def hochster_entry(
    I: MonomialIdeal,
    i: int,
    j: int,
    field: FieldSpec = FieldSpec(),
    jobs: int = 1,
    sweep: str = "lattice",
) -> int:
    """beta_{i,j}(S/I) by Hochster's formula on the polarization of I.

    ``sweep="lattice"`` visits only unions of generator supports;
    ``sweep="subsets"`` visits every j-subset containing at least one support.
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    if I.is_zero:
        return int(i == 0 and j == 0)
    pol = polarize(I)
    supports = pol.support_masks()
    if 0 in supports:
        return 0  # unit ideal: S/I = 0
    if sweep == "lattice":
        sigmas = [s for s in lcm_lattice(supports, max_size=j) if s.bit_count() == j]
    elif sweep == "subsets":
        sigmas = _subsets_containing_support(supports, pol.nvars, j)
    else:
        raise ValueError(f"unknown sweep {sweep!r}")
    return _run(sigmas, supports, (i,), field.characteristic, jobs).get((i, j), 0)


def betti_table_oracle(
    I: MonomialIdeal,
    field: FieldSpec = FieldSpec(),
    window: tuple[int, int] | None = None,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> BettiTable:
    """Full table of S/I over the window (max i, max j); default is everything.

    Homological degrees run up to the number of original variables, which
    bounds the projective dimension.
    """
    if I.is_zero:
        return BettiTable({(0, 0): 1}, "quotient")
    pol = polarize(I)
    if pol.nvars > cap:
        raise OracleCapExceeded(
            f"polarization has {pol.nvars} variables (cap {cap}); use hochster_entry for single values"
        )
    supports = pol.support_masks()
    if 0 in supports:
        return BettiTable({}, "quotient")
    imax, jmax = window if window is not None else (I.ctx.n, pol.nvars)
    sigmas = list(lcm_lattice(supports, max_size=jmax))
    entries = _run(sigmas, supports, tuple(range(imax + 1)), field.characteristic, jobs)
    return BettiTable(entries, "quotient")
