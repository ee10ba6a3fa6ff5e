"""Multigraded monomial modules ``F / K`` with ``F`` free with shifts.

A module is stored coordinate-wise: generator ``e_i`` sits in multidegree
``shifts[i]`` and ``coordinate_ideals[i] = {m : m e_i in K}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import GradedRing, Monomial, Multidegree
from .errors import ArityMismatch, HypothesisViolation
from .ideals import MonomialIdeal


@dataclass(frozen=True)
class MonomialModule:
    ring: GradedRing
    shifts: tuple[Multidegree, ...]
    coordinate_ideals: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        shifts = tuple(tuple(int(x) for x in d) for d in self.shifts)
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "coordinate_ideals", tuple(self.coordinate_ideals))
        if not shifts or len(shifts) != len(self.coordinate_ideals):
            raise ArityMismatch("need one shift per coordinate ideal, at least one")
        for d in shifts:
            if len(d) != self.ring.arity:
                raise ArityMismatch(f"shift {d} for grading arity {self.ring.arity}")
        for K in self.coordinate_ideals:
            if K.ring != self.ring:
                raise ArityMismatch("coordinate ideal over another ring")

    # construction -------------------------------------------------------

    @classmethod
    def free(cls, ring: GradedRing, rank: int = 1,
             shifts: Sequence[Multidegree] | None = None) -> MonomialModule:
        if shifts is None:
            shifts = [(0,) * ring.arity] * rank
        return cls(ring, tuple(shifts), tuple(MonomialIdeal.zero(ring) for _ in shifts))

    @classmethod
    def quotient(cls, ideal: MonomialIdeal, shift: Multidegree | None = None) -> MonomialModule:
        """The cyclic module ``R / I`` (optionally shifted)."""
        ring = ideal.ring
        return cls(ring, (shift or (0,) * ring.arity,), (ideal,))

    @classmethod
    def from_relations(cls, ring: GradedRing, shifts: Sequence[Multidegree],
                       relations: Sequence[tuple[int, Monomial]]) -> MonomialModule:
        """Build from monomial relations ``m e_i``, given as ``(i, m)`` pairs."""
        gens: list[list[Monomial]] = [[] for _ in shifts]
        for i, m in relations:
            if not 0 <= i < len(shifts):
                raise ArityMismatch(f"relation on generator {i} of {len(shifts)}")
            gens[i].append(tuple(m))
        return cls(ring, tuple(shifts), tuple(MonomialIdeal(ring, tuple(g)) for g in gens))

    # structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(K.is_unit for K in self.coordinate_ideals)

    def piece_dimension(self, n: Multidegree) -> int:
        """Dimension over the field of the graded piece ``M_n``."""
        n = tuple(n)
        if len(n) != self.ring.arity:
            raise ArityMismatch(f"multidegree {n} for grading arity {self.ring.arity}")
        total = 0
        for shift, K in zip(self.shifts, self.coordinate_ideals):
            d = tuple(a - b for a, b in zip(n, shift))
            if min(d) < 0 or K.is_unit:
                continue
            for mu in self.ring.enumerate_monomials_of_degree(d):
                if not K.contains(mu):
                    total += 1
        return total

    def rank(self) -> int:
        # monomials are units of the fraction field, so a coordinate survives
        # localization iff nothing kills it
        return sum(1 for K in self.coordinate_ideals if K.is_zero)

    def annihilator(self) -> MonomialIdeal:
        ann = self.coordinate_ideals[0]
        for K in self.coordinate_ideals[1:]:
            ann = ann.intersect(K)
        return ann

    def supp_plusplus_nonempty(self) -> bool:
        """True iff some monomial of multidegree (1,...,1) is outside sqrt(Ann M)."""
        if self.is_zero:
            return False
        rad = self.annihilator().radical()
        ones = (1,) * self.ring.arity
        return any(not rad.contains(m) for m in self.ring.enumerate_monomials_of_degree(ones))

    def saturate(self, ideal: MonomialIdeal) -> MonomialModule:
        """``N / (0_N : I^oo)``: saturate every coordinate ideal by ``I``."""
        if ideal.ring != self.ring:
            raise ArityMismatch("ideal over another ring")
        if ideal.is_zero:
            raise HypothesisViolation("saturation by the zero ideal")
        return MonomialModule(self.ring, self.shifts,
                              tuple(K.saturation(ideal) for K in self.coordinate_ideals))

    def direct_sum(self, other: MonomialModule) -> MonomialModule:
        if other.ring != self.ring:
            raise ArityMismatch("direct sum of modules over different rings")
        return MonomialModule(self.ring, self.shifts + other.shifts,
                              self.coordinate_ideals + other.coordinate_ideals)

    __add__ = direct_sum

    def max_degree(self) -> int:
        """Largest total degree among shifts and coordinate ideal generators."""
        shift_deg = max(sum(d) for d in self.shifts)
        ideal_deg = max(K.max_generator_degree() for K in self.coordinate_ideals)
        return max(shift_deg, ideal_deg)

    def dimension(self) -> int | float:
        """Krull dimension of the module (max over nonzero coordinates)."""
        return max(K.krull_dim_quotient() for K in self.coordinate_ideals)

    # io -----------------------------------------------------------------

    def to_json(self) -> dict:
        rels = [[i, list(g)] for i, K in enumerate(self.coordinate_ideals) for g in K.generators]
        return {"shifts": [list(d) for d in self.shifts], "relations": rels}

    @classmethod
    def from_json(cls, ring: GradedRing, data: dict) -> MonomialModule:
        shifts = data.get("shifts")
        if shifts is None:
            shifts = [[0] * ring.arity] * int(data.get("rank", 1))
        rels = [(int(i), tuple(m)) for i, m in data.get("relations", [])]
        return cls.from_relations(ring, [tuple(d) for d in shifts], rels)
