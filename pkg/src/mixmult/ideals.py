"""Monomial ideals of a polynomial ring, kept as minimal generating sets."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    GradedRing,
    Monomial,
    Multidegree,
    compositions,
    grlex_key,
    monomial_lcm,
    monomial_quotient,
    support,
)
from .errors import ArityMismatch, HypothesisViolation, MixMultError, NotMPrimary

#: Krull dimension of the zero ring.
DIM_ZERO_RING = -math.inf


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=grlex_key):
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: GradedRing
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.ring.check(g) for g in self.generators)
        object.__setattr__(self, "generators", _minimal(gens))

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, ring: GradedRing) -> MonomialIdeal:
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: GradedRing) -> MonomialIdeal:
        return cls(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: GradedRing) -> MonomialIdeal:
        return cls(ring, tuple(ring.variable(i) for i in range(ring.variable_count)))

    # predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (self.ring.one(),)

    def contains(self, m: Monomial) -> bool:
        m = self.ring.check(m)
        return any(all(a <= b for a, b in zip(g, m)) for g in self.generators)

    __contains__ = contains

    def is_subset(self, other: MonomialIdeal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def _same_ring(self, other: MonomialIdeal) -> None:
        if other.ring != self.ring:
            raise ArityMismatch("ideals live in different rings")

    # arithmetic ---------------------------------------------------------

    def sum(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal(self.ring, self.generators + other.generators)

    def product(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        gens = {tuple(a + b for a, b in zip(g, h))
                for g in self.generators for h in other.generators}
        return MonomialIdeal(self.ring, tuple(gens))

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        gens = {monomial_lcm(g, h) for g in self.generators for h in other.generators}
        return MonomialIdeal(self.ring, tuple(gens))

    def power(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("negative power")
        result = MonomialIdeal.unit(self.ring)
        base = self
        # square-and-multiply keeps the candidate lists short
        while n:
            if n & 1:
                result = result.product(base)
            n >>= 1
            if n:
                base = base.product(base)
        return result

    __add__ = sum
    __mul__ = product
    __and__ = intersect
    __pow__ = power

    def colon(self, m: Monomial) -> MonomialIdeal:
        """``I : m`` for a single monomial."""
        m = self.ring.check(m)
        return MonomialIdeal(self.ring, tuple(monomial_quotient(g, m) for g in self.generators))

    def colon_ideal(self, other: MonomialIdeal) -> MonomialIdeal:
        """``I : J`` as the intersection of the colons by the generators of ``J``."""
        self._same_ring(other)
        if other.is_zero:
            return MonomialIdeal.unit(self.ring)
        result = None
        for g in other.generators:
            c = self.colon(g)
            result = c if result is None else result.intersect(c)
        return result

    def saturation(self, other: MonomialIdeal) -> MonomialIdeal:
        """``I : J^oo``, the intersection over generators g of J of ``I : g^oo``.

        Each ``I : g^oo`` is the fixpoint of repeated colon by ``g``; it must
        settle within ``1 + max exponent sum`` steps.
        """
        self._same_ring(other)
        if other.is_zero:
            raise HypothesisViolation("saturation by the zero ideal")
        cap = 1 + max((sum(g) for g in self.generators), default=0)
        result = None
        for g in other.generators:
            cur = self
            for _ in range(cap + 1):
                nxt = cur.colon(g)
                if nxt == cur:
                    break
                cur = nxt
            else:
                raise MixMultError(f"colon iteration by {g} did not settle after {cap} steps")
            result = cur if result is None else result.intersect(cur)
        return result

    def radical(self) -> MonomialIdeal:
        gens = tuple(tuple(int(e > 0) for e in g) for g in self.generators)
        return MonomialIdeal(self.ring, gens)

    # dimension theory ---------------------------------------------------

    def krull_dim_quotient(self) -> int | float:
        """Krull dimension of ``R / I``; ``DIM_ZERO_RING`` for the unit ideal.

        A set T of variables is independent modulo I iff no generator has
        support inside T; the dimension is the largest such |T|.
        """
        n = self.ring.variable_count
        if self.is_unit:
            return DIM_ZERO_RING
        supports = [sum(1 << i for i in support(g)) for g in self.generators]
        for size in range(n, -1, -1):
            for combo in itertools.combinations(range(n), size):
                mask = sum(1 << i for i in combo)
                if all(s & ~mask for s in supports):
                    return size
        return DIM_ZERO_RING  # unreachable for proper ideals

    def height(self) -> int:
        if self.is_unit:
            raise HypothesisViolation("height of the unit ideal is undefined")
        return self.ring.variable_count - int(self.krull_dim_quotient())

    def m_primary_exponent(self) -> int:
        """Least ``c`` with ``m^c`` inside the ideal."""
        n = self.ring.variable_count
        pure = []
        for i in range(n):
            powers = [g[i] for g in self.generators if support(g) <= {i}]
            if not powers:
                raise NotMPrimary(f"no power of variable {i} lies in the ideal")
            pure.append(min(powers))
        if self.is_unit:
            return 0
        bound = sum(a - 1 for a in pure) + 1
        for c in range(1, bound + 1):
            if all(self.contains(m) for m in compositions(c, n)):
                return c
        return bound

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def standard_monomials(self) -> list[Monomial]:
        """Monomials outside an m-primary ideal (a basis of R/I)."""
        c = self.m_primary_exponent()
        out = []
        for d in range(c):
            out += [m for m in compositions(d, self.ring.variable_count) if not self.contains(m)]
        return sorted(out, key=grlex_key)

    # io -----------------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [list(g) for g in self.generators]

    @classmethod
    def from_json(cls, ring: GradedRing, data: Sequence[Sequence[int]]) -> MonomialIdeal:
        return cls(ring, tuple(tuple(g) for g in data))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.to_json()})"


def minimalize(ring: GradedRing, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(tuple(g) for g in gens))


def multipower(ideals: Sequence[MonomialIdeal], n: Multidegree) -> MonomialIdeal:
    """The product ``I_1^{n_1} ... I_s^{n_s}``; the unit ideal when all ``n_i = 0``."""
    if len(ideals) != len(n):
        raise ArityMismatch(f"{len(ideals)} ideals but exponent vector of length {len(n)}")
    if not ideals:
        raise ValueError("need at least one ideal")
    result = MonomialIdeal.unit(ideals[0].ring)
    for ideal, e in zip(ideals, n):
        if e:
            result = result.product(ideal.power(e))
    return result


def product_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    return multipower(ideals, (1,) * len(ideals))
