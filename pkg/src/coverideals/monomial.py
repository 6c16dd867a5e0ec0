"""Monomials and monomial ideals over a fixed polynomial ring.

Variables are indexed from 0 internally; ``x1`` is exponent slot 0.  Every
ideal stores its minimal generators in graded reverse lexicographic order
(lower degree first, then descending revlex with x1 > x2 > ... > xn).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence


class ContextMismatch(ValueError):
    """Raised when objects from different rings are combined."""


@dataclass(frozen=True)
class RingContext:
    n: int
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * self.n)
        else:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) != self.n:
            raise ValueError("weight vector length must equal n")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def monomial(self, exponents: Sequence[int]) -> Monomial:
        return Monomial(self, tuple(exponents))

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.n)

    def var(self, i: int) -> Monomial:
        """The variable x_{i+1} (0-based index)."""
        e = [0] * self.n
        e[i] = 1
        return Monomial(self, tuple(e))

    def squarefree(self, support: Iterable[int]) -> Monomial:
        """X_F for a set F of 0-based variable indices."""
        e = [0] * self.n
        for i in support:
            e[i] = 1
        return Monomial(self, tuple(e))

    def all_variables(self) -> Monomial:
        return Monomial(self, (1,) * self.n)


@dataclass(frozen=True)
class Monomial:
    ctx: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.ctx.n:
            raise ValueError(
                f"exponent vector has length {len(self.exponents)}, ring has {self.ctx.n} variables"
            )
        if any(a < 0 for a in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    def divides(self, other: Monomial) -> bool:
        _check(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _check(self, other)
        return Monomial(self.ctx, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        _check(self, other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ctx, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, s: int) -> Monomial:
        return Monomial(self.ctx, tuple(a * s for a in self.exponents))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exponents):
            if a == 1:
                parts.append(f"x{i + 1}")
            elif a > 1:
                parts.append(f"x{i + 1}^{a}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def to_json(self) -> list[int]:
        return list(self.exponents)


def _check(u: Monomial, v: Monomial) -> None:
    if u.ctx != v.ctx:
        raise ContextMismatch("monomials live in different rings")


def revlex_key(exponents: Sequence[int]) -> tuple:
    """Sort key: ascending degree, then descending revlex (x1 > ... > xn).

    Within one degree u precedes v iff the last nonzero entry of u - v is
    negative.
    """
    return (sum(exponents), tuple(reversed(exponents)))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return Monomial(u.ctx, tuple(max(a, b) for a, b in zip(u.exponents, v.exponents)))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return Monomial(u.ctx, tuple(min(a, b) for a, b in zip(u.exponents, v.exponents)))


def colon(u: Monomial, v: Monomial) -> Monomial:
    """Generator of the principal colon ideal (u) : v, i.e. u / gcd(u, v)."""
    _check(u, v)
    return Monomial(u.ctx, tuple(max(a - b, 0) for a, b in zip(u.exponents, v.exponents)))


def weighted_degree(u: Monomial, ctx: RingContext | None = None) -> int:
    ctx = ctx or u.ctx
    if ctx.n != u.ctx.n:
        raise ContextMismatch("weight vector does not match the monomial's ring")
    return sum(a * w for a, w in zip(u.exponents, ctx.weights))


def complement_monomial(u: Monomial) -> Monomial:
    """X / u for squarefree u, where X is the product of all variables."""
    if not u.is_squarefree:
        raise ValueError(f"{u} is not squarefree")
    return Monomial(u.ctx, tuple(1 - a for a in u.exponents))


def _minimal_exponents(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # degree-sorted sweep: a vector can only be divided by one of no larger degree
    ordered = sorted(set(vectors), key=revlex_key)
    kept: list[tuple[int, ...]] = []
    for v in ordered:
        if not any(all(a <= b for a, b in zip(k, v)) for k in kept):
            kept.append(v)
    return kept


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators.

    The zero ideal (no generators) is allowed; it is what the edge ideal of an
    edgeless graph is.
    """

    __slots__ = ("ctx", "generators", "_exps")

    def __init__(self, ctx: RingContext, generators: Iterable[Monomial] = ()):
        gens = list(generators)
        for g in gens:
            if g.ctx != ctx:
                raise ContextMismatch("generator from a different ring")
        exps = _minimal_exponents(g.exponents for g in gens)
        self.ctx = ctx
        self._exps = tuple(exps)
        self.generators = tuple(Monomial(ctx, e) for e in exps)

    @classmethod
    def from_exponents(cls, ctx: RingContext, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls(ctx, (Monomial(ctx, tuple(v)) for v in vectors))

    @classmethod
    def zero(cls, ctx: RingContext) -> MonomialIdeal:
        return cls(ctx, ())

    @property
    def exponent_vectors(self) -> tuple[tuple[int, ...], ...]:
        return self._exps

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self._exps == other._exps

    def __hash__(self) -> int:
        return hash((self.ctx, self._exps))

    def __contains__(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.generators)

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def __repr__(self) -> str:
        return f"MonomialIdeal(<{', '.join(str(g) for g in self.generators)}>)"

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def to_json(self) -> dict:
        return {
            "n": self.ctx.n,
            "weights": list(self.ctx.weights),
            "generators": [list(e) for e in self._exps],
        }

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        ctx = RingContext(int(data["n"]), tuple(data.get("weights") or ()))
        return cls.from_exponents(ctx, data["generators"])


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("minimalize needs at least one monomial")
    ctx = gens[0].ctx
    return MonomialIdeal(ctx, gens)


def product_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ctx != J.ctx:
        raise ContextMismatch("ideals live in different rings")
    prods = {
        tuple(a + b for a, b in zip(u, v)) for u in I.exponent_vectors for v in J.exponent_vectors
    }
    return MonomialIdeal.from_exponents(I.ctx, prods)


_power_cache: dict[tuple[MonomialIdeal, int], MonomialIdeal] = {}


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generators of I^s, built by repeated multiplication with I."""
    if s < 1:
        raise ValueError("power must be >= 1")
    key = (I, s)
    if key in _power_cache:
        return _power_cache[key]
    if s == 1:
        result = I
    else:
        half = power(I, s // 2)
        result = product_ideal(half, half)
        if s % 2:
            result = product_ideal(result, I)
    if len(_power_cache) > 256:
        _power_cache.clear()
    _power_cache[key] = result
    return result


# -- Hilbert functions ---------------------------------------------------


def _numerator(gens: frozenset, n: int) -> dict[int, int]:
    """K(z) with H_{S/I}(z) = K(z) / (1 - z)^n, by pivoting on a shared variable."""
    return dict(_numerator_cached(gens, n))


@lru_cache(maxsize=200_000)
def _numerator_cached(gens: frozenset, n: int) -> tuple[tuple[int, int], ...]:
    if not gens:
        return ((0, 1),)
    if any(sum(g) == 0 for g in gens):
        return ()
    count = [0] * n
    for g in gens:
        for i, a in enumerate(g):
            if a:
                count[i] += 1
    pivot = max(range(n), key=lambda i: count[i])
    if count[pivot] <= 1:
        # pairwise coprime generators: K = prod (1 - z^deg g)
        poly = {0: 1}
        for g in gens:
            d = sum(g)
            nxt: dict[int, int] = {}
            for k, c in poly.items():
                nxt[k] = nxt.get(k, 0) + c
                nxt[k + d] = nxt.get(k + d, 0) - c
            poly = nxt
        return tuple(sorted((k, c) for k, c in poly.items() if c))
    xi = tuple(1 if i == pivot else 0 for i in range(n))
    plus = frozenset(_minimal_exponents([g for g in gens if g[pivot] == 0] + [xi]))
    quot = frozenset(
        _minimal_exponents(
            tuple(a - 1 if i == pivot and a else a for i, a in enumerate(g)) for g in gens
        )
    )
    poly = dict(_numerator_cached(plus, n))
    for k, c in _numerator_cached(quot, n):
        poly[k + 1] = poly.get(k + 1, 0) + c
    return tuple(sorted((k, c) for k, c in poly.items() if c))


def hilbert_numerator(I: MonomialIdeal) -> dict[int, int]:
    """Coefficients of K(z) where the Hilbert series of S/I is K(z)/(1-z)^n."""
    return _numerator(frozenset(I.exponent_vectors), I.ctx.n)


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def hilbert_function(I: MonomialIdeal, d: int, mode: str = "ideal", method: str = "auto") -> int:
    """Number of degree-d monomials in I (mode="ideal") or outside I (mode="quotient").

    ``method="enumerate"`` counts by listing every degree-d monomial; the
    default evaluates the Hilbert series numerator.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if mode not in ("ideal", "quotient"):
        raise ValueError(f"unknown mode {mode!r}")
    n = I.ctx.n
    total = _binom(d + n - 1, n - 1)
    if method == "enumerate":
        inside = sum(
            1
            for e in monomials_of_degree(n, d)
            if any(all(a <= b for a, b in zip(g, e)) for g in I.exponent_vectors)
        )
    elif method == "auto":
        K = hilbert_numerator(I)
        outside = sum(c * _binom(d - k + n - 1, n - 1) for k, c in K.items())
        inside = total - outside
    else:
        raise ValueError(f"unknown method {method!r}")
    return inside if mode == "ideal" else total - inside


def monomials_of_degree(n: int, d: int):
    """Yield exponent tuples of all degree-d monomials in n variables."""
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)
