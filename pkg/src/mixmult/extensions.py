"""Module-finite monomial extensions ``A -> B = B_1 x ... x B_r``.

Each factor ``B_j = k[u_1..u_d]`` receives ``x_i -> u^{E_j[i]}`` for a square
exponent matrix ``E_j``.  Every factor is a graded domain with one
homogeneous maximal ideal and residue field ``k``, so ``[B/Q:k] = 1``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import GradedRing, Monomial
from .errors import HypothesisViolation, InfiniteLength, NonIntegralQuotient, NotMPrimary
from .hilbert import GridSpec
from .ideal_mixed import (
    IdealSystem,
    LocalMixedMultiplicities,
    default_ideal_grid,
    ideal_mixed_multiplicities,
    q_dimension,
    values_json,
)
from .ideals import MonomialIdeal
from .modules import MonomialModule
from .report import FAIL, PASS, CheckResult, VerificationReport


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination (Bareiss)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class MonomialMapComponent:
    """Substitution ``x_i -> u^{exponent_matrix[i]}`` into ``k[u_1..u_e]``."""

    exponent_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.exponent_matrix)
        object.__setattr__(self, "exponent_matrix", rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("exponent matrix must be square and nonempty")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("negative exponent in substitution")

    @property
    def dimension(self) -> int:
        return len(self.exponent_matrix)

    @property
    def target_ring(self) -> GradedRing:
        return GradedRing.standard_graded(self.dimension)

    def determinant(self) -> int:
        return integer_determinant(self.exponent_matrix)

    def image(self, a: Monomial) -> Monomial:
        e = self.dimension
        return tuple(sum(a[i] * self.exponent_matrix[i][j] for i in range(e)) for j in range(e))

    def images_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.target_ring, self.exponent_matrix)

    def is_module_finite(self) -> bool:
        # graded Nakayama: B/(images of the variables) must be finite dimensional
        return self.determinant() != 0 and self.images_ideal().krull_dim_quotient() == 0

    def lattice_basis(self) -> list[Monomial]:
        """Monomials ``u^r`` spanning ``B`` freely over ``A``.

        For a module-finite substitution these are the standard monomials of
        ``B / (images of the base variables)``.
        """
        if not self.is_module_finite():
            raise HypothesisViolation("substitution is not module-finite")
        return self.images_ideal().standard_monomials()

    def transport(self, ideal: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(self.target_ring, tuple(self.image(g) for g in ideal.generators))

    def to_json(self) -> dict:
        return {"vars": self.dimension, "images": [list(r) for r in self.exponent_matrix]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialMapComponent:
        comp = cls(tuple(tuple(r) for r in data["images"]))
        if "vars" in data and int(data["vars"]) != comp.dimension:
            raise ValueError("only square substitutions are supported")
        return comp


@dataclass(frozen=True)
class MonomialExtension:
    base: GradedRing
    components: tuple[MonomialMapComponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("an extension needs at least one component")
        for c in self.components:
            if c.dimension != self.base.variable_count:
                raise ValueError("component size differs from the number of base variables")
            if not c.is_module_finite():
                raise HypothesisViolation(f"component {c.exponent_matrix} is not module-finite")

    @classmethod
    def from_matrices(cls, base: GradedRing, matrices) -> MonomialExtension:
        return cls(base, tuple(MonomialMapComponent(tuple(map(tuple, m))) for m in matrices))

    def rank_over_base(self) -> int:
        return sum(abs(c.determinant()) for c in self.components)

    def transport_ideal(self, j: int, ideal: MonomialIdeal) -> MonomialIdeal:
        return self.components[j].transport(ideal)

    def as_base_module(self) -> MonomialModule:
        """``B`` as an ``A``-module: free on the lattice basis of every factor."""
        rank = sum(len(c.lattice_basis()) for c in self.components)
        return MonomialModule.free(GradedRing.standard_graded(self.base.variable_count), rank)

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, base: GradedRing, data: dict) -> MonomialExtension:
        return cls(base, tuple(MonomialMapComponent.from_json(c) for c in data["components"]))


def transported_system(ext: MonomialExtension, j: int, sys: IdealSystem) -> IdealSystem:
    return IdealSystem(ext.transport_ideal(j, sys.J),
                       tuple(ext.transport_ideal(j, I) for I in sys.ideals))


def local_mixed_multiplicities(ext: MonomialExtension, j: int, sys: IdealSystem,
                               grid: GridSpec | None = None) -> LocalMixedMultiplicities:
    """``e_{B_Q}(J B_Q^[k0+1], I B_Q^[k]; B_Q)`` for the ``j``-th factor.

    ``B_j`` is free over ``A`` on monomials, so every length over ``B_j``
    is ``|det|`` times the matching length over ``A``; the transported
    fiber function is therefore polynomial wherever the base one is, and
    the base grid is used by default.
    """
    if sys.module.rank() != 1 or len(sys.module.coordinate_ideals) != 1:
        raise HypothesisViolation("local multiplicities are defined for N = A")
    tsys = transported_system(ext, j, sys)
    if tsys.product.height() <= 0:
        raise HypothesisViolation("transported I has height zero")
    d = ext.base.variable_count
    grid = grid or default_ideal_grid(sys, q_dimension(sys))
    local = ideal_mixed_multiplicities(tsys, grid)
    if local.q != d:
        raise HypothesisViolation(f"dim B_Q = {local.q} differs from dim A = {d}")
    return local


def check_thm_3_9(ext: MonomialExtension, sys: IdealSystem) -> VerificationReport:
    """``e_A(...; A) = sum_Q e_{B_Q}(...; B_Q) [B/Q:k] / rank_A B``."""
    t0 = time.perf_counter()
    if sys.module.rank() != 1 or len(sys.module.coordinate_ideals) != 1:
        raise HypothesisViolation("the extension check compares multiplicities of A itself")
    if sys.product.height() <= 0:
        raise HypothesisViolation("I must have positive height")
    base = ideal_mixed_multiplicities(sys)
    grid = default_ideal_grid(sys, base.q)
    rank = ext.rank_over_base()
    totals = {k: 0 for k in base.values}
    per_component = []
    for j in range(len(ext.components)):
        local = local_mixed_multiplicities(ext, j, sys, grid)
        per_component.append(values_json(local.values))
        for k, v in local.values.items():
            totals[k] = totals.get(k, 0) + v * 1  # residue degree [B/Q:k] = 1
    rhs = {}
    for k, v in totals.items():
        quotient = Fraction(v, rank)
        if quotient.denominator != 1:
            raise NonIntegralQuotient(f"sum {v} over rank {rank} at k={k}")
        rhs[k] = int(quotient)
    res = CheckResult("thm3.9", {**sys.to_json(), **ext.to_json()}, values_json(base.values),
                      values_json(rhs), PASS if base.values == rhs else FAIL,
                      extra={"rank": rank, "local": per_component})
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)


def _count_outside(ideal: MonomialIdeal) -> int:
    if ideal.is_unit:
        return 0
    try:
        return len(ideal.standard_monomials())
    except NotMPrimary as exc:
        raise InfiniteLength(f"{ideal} is not m-primary") from exc


def _pullback(comp: MonomialMapComponent, K: MonomialIdeal, r: Monomial,
              base: GradedRing) -> MonomialIdeal:
    """``{a : u^(aE) u^r in K}`` as a monomial ideal of ``A``.

    Module-finite substitutions are monomial permutations with positive
    scalings, so each base variable feeds exactly one target variable.
    """
    d = comp.dimension
    target = [next(j for j in range(d) if comp.exponent_matrix[i][j]) for i in range(d)]
    scale = [comp.exponent_matrix[i][target[i]] for i in range(d)]
    gens = []
    for g in K.generators:
        a = [0] * d
        for i in range(d):
            need = g[target[i]] - r[target[i]]
            a[i] = max(0, -(-need // scale[i]))
        gens.append(tuple(a))
    return MonomialIdeal(base, tuple(gens))


def length_decompose(ext: MonomialExtension, modules: Sequence[MonomialModule]) -> VerificationReport:
    """Check ``l_A(F) = sum_Q l_{B_Q}(F_Q) [B/Q:k]`` for ``F = F_1 x ... x F_r``.

    ``modules[j]`` is a finite-length monomial module over the ``j``-th
    factor.  The left side counts monomials of ``A`` through the lattice
    decomposition ``B_j = sum_r A u^r``; the right side counts monomials of
    ``B_j`` directly.
    """
    t0 = time.perf_counter()
    if len(modules) != len(ext.components):
        raise ValueError("one module per component required")
    base = GradedRing.standard_graded(ext.base.variable_count)
    lhs = 0
    per_component = []
    for comp, F in zip(ext.components, modules):
        local = 0
        for K in F.coordinate_ideals:
            K = MonomialIdeal(comp.target_ring, K.generators)
            local += _count_outside(K)
            for r in comp.lattice_basis():
                lhs += _count_outside(_pullback(comp, K, r, base))
        per_component.append(local)
    rhs = sum(per_component)
    res = CheckResult("length", ext.to_json(), lhs, rhs, PASS if lhs == rhs else FAIL,
                      extra={"per_component": per_component})
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)
