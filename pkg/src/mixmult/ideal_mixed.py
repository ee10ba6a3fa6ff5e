"""Mixed multiplicities of ideal systems ``e(J^[k0+1], I^[k]; N)``.

The graded polynomial ring stands in for the local ring at its homogeneous
maximal ideal; all lengths are monomial counts.  The fiber cone is never
built as an algebra: only its Hilbert function

    (n0, n) -> length( J^n0 I^n N / J^(n0+1) I^n N )

is evaluated, on staircase arrays, and interpolated.
"""
from __future__ import annotations

import math
import time
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _staircase as st
from .core import compositions
from .errors import HypothesisViolation, NonIntegral, RankZero
from .hilbert import GridSpec, RationalPolynomial, mixed_multiplicities_from_poly, stable_polynomial
from .ideals import MonomialIdeal, multipower, product_all
from .modules import MonomialModule
from .report import FAIL, NOT_APPLICABLE, PASS, CheckResult, VerificationReport


@dataclass(frozen=True)
class IdealSystem:
    """``J`` (m-primary), ideals ``I_1..I_s`` and a module ``N`` over one ring.

    ``module=None`` means ``N = A``.
    """

    J: MonomialIdeal
    ideals: tuple[MonomialIdeal, ...]
    module: MonomialModule | None = None

    def __post_init__(self):
        object.__setattr__(self, "ideals", tuple(self.ideals))
        if self.module is None:
            object.__setattr__(self, "module", MonomialModule.free(self.J.ring))
        if not self.ideals:
            raise ValueError("an ideal system needs at least one ideal I_1")
        for I in self.ideals:
            if I.ring != self.J.ring:
                raise ValueError("all ideals must live in the ring of J")
        if self.module.ring.variable_count != self.J.ring.variable_count:
            raise ValueError("module and ideals over different rings")
        self.J.m_primary_exponent()  # raises NotMPrimary
        if self.product.is_zero:
            raise HypothesisViolation("I = I_1 ... I_s is the zero ideal")

    @property
    def ring(self):
        return self.J.ring

    @property
    def s(self) -> int:
        return len(self.ideals)

    @property
    def product(self) -> MonomialIdeal:
        return product_all(self.ideals)

    @property
    def coordinates(self) -> tuple[MonomialIdeal, ...]:
        """Coordinate ideals of N re-homed in the ring of J (grading is irrelevant here)."""
        return tuple(MonomialIdeal(self.ring, K.generators) for K in self.module.coordinate_ideals)

    def with_module(self, module: MonomialModule | None) -> IdealSystem:
        return replace(self, module=module)

    def with_ideals(self, ideals: Sequence[MonomialIdeal]) -> IdealSystem:
        return replace(self, ideals=tuple(ideals))

    def scaled(self, u: Sequence[int]) -> IdealSystem:
        """The system with every ``I_i`` replaced by ``I_i^{u_i}``."""
        if len(u) != self.s or any(x < 1 for x in u):
            raise ValueError("need one positive exponent per ideal")
        return self.with_ideals([I.power(x) for I, x in zip(self.ideals, u)])

    def saturated_coordinates(self) -> tuple[MonomialIdeal, ...]:
        """Coordinate ideals of ``N / (0_N : I^oo)``."""
        I = self.product
        return tuple(K.saturation(I) for K in self.coordinates)

    def to_json(self) -> dict:
        return {"J": self.J.to_json(), "ideals": [I.to_json() for I in self.ideals],
                "module": self.module.to_json()}


@dataclass(frozen=True)
class LocalMixedMultiplicities:
    """Values keyed by ``(k0, k1, ..., ks)`` with ``k0 + |k| = q - 1``."""

    q: int
    values: dict[tuple[int, ...], int] = field(hash=False)
    polynomial: RationalPolynomial | None = field(default=None, compare=False, hash=False)

    def __getitem__(self, key) -> int:
        return self.values[tuple(key)]

    def total(self) -> int:
        return sum(self.values.values())

    def to_json(self) -> list[dict]:
        return values_json(self.values)


def values_json(values: dict[tuple[int, ...], int]) -> list[dict]:
    return [{"k": list(k), "e": v} for k, v in sorted(values.items(), reverse=True)]


def check_hypothesis(sys: IdealSystem) -> None:
    """Require ``I`` not inside ``sqrt(Ann N)``."""
    ann = sys.coordinates[0]
    for K in sys.coordinates[1:]:
        ann = ann.intersect(K)
    rad = ann.radical()
    if all(rad.contains(g) for g in sys.product.generators):
        raise HypothesisViolation("I = I_1...I_s lies in sqrt(Ann N)")


# staircase evaluation ---------------------------------------------------

class _PowerCache:
    """Arrays of ``I^m`` on one box, built by successive dilation.

    Least recently used arrays are dropped once the cache exceeds
    ``budget`` bytes; dropped entries are rebuilt on demand.
    """

    def __init__(self, ideals: Sequence[MonomialIdeal], shape: tuple[int, ...],
                 budget: int = 1 << 28):
        self.gens = [I.generators for I in ideals]
        self.shape = shape
        self.capacity = max(2, budget // max(1, math.prod(shape)))
        self.memo: OrderedDict[tuple[int, ...], np.ndarray] = OrderedDict()

    def get(self, m: tuple[int, ...]) -> np.ndarray:
        arr = self.memo.get(m)
        if arr is not None:
            self.memo.move_to_end(m)
            return arr
        # walk down to the nearest cached power (or the unit ideal), then dilate back up
        chain = []
        cur = m
        while cur not in self.memo and any(cur):
            i = next(j for j, x in enumerate(cur) if x)
            chain.append((cur, i))
            cur = cur[:i] + (cur[i] - 1,) + cur[i + 1:]
        arr = self.memo[cur] if cur in self.memo else st.unit_array(self.shape)
        self._store(cur, arr)
        for key, i in reversed(chain):
            arr = st.dilate(arr, self.gens[i])
            self._store(key, arr)
        return arr

    def _store(self, key: tuple[int, ...], arr: np.ndarray) -> None:
        self.memo[key] = arr
        self.memo.move_to_end(key)
        while len(self.memo) > self.capacity:
            self.memo.popitem(last=False)


class FiberHilbertFunction:
    """``(n0, n) -> length(J^n0 I^n N / J^(n0+1) I^n N)``.

    A monomial in ``L1 = J^n0 I^n`` of total degree at least
    ``deg L1 + c`` (``m^c`` inside ``J``) already lies in ``J L1``, so a
    cube of that side holds every counted monomial.
    """

    def __init__(self, sys: IdealSystem):
        self.sys = sys
        self.c = sys.J.m_primary_exponent()
        self.deg_J = sys.J.max_generator_degree()
        self.deg_I = [I.max_generator_degree() for I in sys.ideals]
        self.coords = [K for K in sys.coordinates if not K.is_unit]

    def bound(self, point: Sequence[int]) -> int:
        n0, n = point[0], point[1:]
        return n0 * self.deg_J + sum(a * b for a, b in zip(n, self.deg_I)) + self.c

    def __call__(self, point: Sequence[int]) -> int:
        point = tuple(point)
        return self.evaluate_many([point])[point]

    def evaluate_many(self, points: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
        points = [tuple(int(x) for x in p) for p in points]
        if not points:
            return {}
        if not self.coords:
            return {p: 0 for p in points}
        side = max(self.bound(p) for p in points) + 1
        shape = (side,) * self.sys.ring.variable_count
        kills = [st.ideal_array(K.generators, shape) for K in self.coords]
        cache = _PowerCache(self.sys.ideals, shape)
        by_n: dict[tuple[int, ...], set[int]] = {}
        for p in points:
            by_n.setdefault(p[1:], set()).add(p[0])
        out = {}
        jgens = self.sys.J.generators
        for n in sorted(by_n):
            wanted = by_n[n]
            cur = cache.get(n)
            for a in range(max(wanted) + 1):
                nxt = st.dilate(cur, jgens)
                if a in wanted:
                    diff = cur & ~nxt
                    out[(a,) + n] = int(sum(np.count_nonzero(diff & ~k) for k in kills))
                cur = nxt
        return out


def fiber_hilbert(sys: IdealSystem, n0: int, n: Sequence[int]) -> int:
    if len(n) != sys.s:
        raise ValueError(f"expected {sys.s} exponents, got {len(n)}")
    check_hypothesis(sys)
    return FiberHilbertFunction(sys)((n0, *n))


def q_dimension(sys: IdealSystem) -> int:
    """``dim N / (0_N : I^oo)``."""
    check_hypothesis(sys)
    dims = [K.krull_dim_quotient() for K in sys.saturated_coordinates()]
    q = max(dims)
    if q == -math.inf:
        raise HypothesisViolation("N / (0_N : I^oo) is zero")
    return int(q)


def _max_input_degree(sys: IdealSystem) -> int:
    degs = [sys.J.max_generator_degree()] + [I.max_generator_degree() for I in sys.ideals]
    degs += [K.max_generator_degree() for K in sys.coordinates]
    return max(degs)


def default_ideal_grid(sys: IdealSystem, q: int) -> GridSpec:
    d = _max_input_degree(sys)
    return GridSpec((d + 1,) * (sys.s + 1), q + 1, 3)


def ideal_mixed_multiplicities(sys: IdealSystem, grid: GridSpec | None = None,
                               retries: int = 4) -> LocalMixedMultiplicities:
    q = q_dimension(sys)
    grid = grid or default_ideal_grid(sys, q)
    p, _ = stable_polynomial(FiberHilbertFunction(sys), grid, retries, expected_degree=q - 1)
    mm = mixed_multiplicities_from_poly(p)
    return LocalMixedMultiplicities(q, mm.values, p)


# multi-Rees modules -----------------------------------------------------

def _kept(sys: IdealSystem, omit: int | None) -> tuple[MonomialIdeal, ...]:
    if omit is None:
        return sys.ideals
    if not 1 <= omit <= sys.s:
        raise ValueError(f"omit must index I_1..I_{sys.s}, got {omit}")
    return sys.ideals[:omit - 1] + sys.ideals[omit:]


def _multi_indices_below(total: int, parts: int):
    for t in range(total):
        yield from compositions(t, parts)


class ReesLengthFunction:
    """``n -> length(R(I; Nbar) / Jfrak^n R(I; Nbar))`` for ``Jfrak = (J, R(I;A)_+)``.

    Uses the closed form ``(Jfrak^n)_m = J^max(n-|m|,0) I^m``, so only the
    components with ``|m| < n`` contribute.
    """

    def __init__(self, J: MonomialIdeal, kept: Sequence[MonomialIdeal],
                 coords: Sequence[MonomialIdeal]):
        self.J = J
        self.kept = tuple(kept)
        self.coords = [K for K in coords if not K.is_unit]
        self.c = J.m_primary_exponent()
        self.step = max([self.c] + [I.max_generator_degree() for I in self.kept])

    def __call__(self, point) -> int:
        point = tuple(point)
        return self.evaluate_many([point])[point]

    def evaluate_many(self, points):
        points = [tuple(int(x) for x in p) for p in points]
        nmax = max(p[0] for p in points)
        if not self.coords or nmax <= 0:
            return {p: 0 for p in points}
        side = nmax * self.step + 1
        shape = (side,) * self.J.ring.variable_count
        kills = [st.ideal_array(K.generators, shape) for K in self.coords]
        cache = _PowerCache(self.kept, shape)
        counts: dict[tuple[tuple[int, ...], int], int] = {}
        s = len(self.kept)
        for m in _multi_indices_below(nmax, s):
            base = cache.get(m)
            cur = base
            for a in range(1, nmax - sum(m) + 1):
                cur = st.dilate(cur, self.J.generators)
                diff = base & ~cur
                counts[(m, a)] = int(sum(np.count_nonzero(diff & ~k) for k in kills))
        out = {}
        for p in points:
            n = p[0]
            out[p] = sum(counts[(m, n - sum(m))] for m in _multi_indices_below(n, s))
        return out


def rees_module_multiplicity(sys: IdealSystem, omit: int | None = None,
                             grid: GridSpec | None = None, retries: int = 4) -> int:
    """Hilbert-Samuel multiplicity ``e(Jfrak; R(I; Nbar))``, optionally dropping ``I_omit``.

    ``Nbar`` is always saturated by the full product ``I = I_1 ... I_s``;
    ``omit`` counts from 1.
    """
    q = q_dimension(sys)
    kept = _kept(sys, omit)
    dim = q + len(kept)
    hf = ReesLengthFunction(sys.J, kept, sys.saturated_coordinates())
    grid = grid or GridSpec((_max_input_degree(sys) + 1,), dim + 2, 3)
    p, _ = stable_polynomial(hf, grid, retries, expected_degree=dim)
    lead = p.terms.get((dim,), Fraction(0)) * math.factorial(dim)
    if lead.denominator != 1:
        raise NonIntegral(f"Rees multiplicity {lead} is not an integer")
    return int(lead)


def jadic_component_closed(sys: IdealSystem, n: int, m: Sequence[int],
                           omit: int | None = None) -> MonomialIdeal:
    kept = _kept(sys, omit)
    m = tuple(m)
    power = sys.J.power(max(n - sum(m), 0))
    return power.product(multipower(kept, m)) if kept else power


def jadic_components_direct(sys: IdealSystem, n: int, max_total: int,
                            omit: int | None = None) -> dict[tuple[int, ...], MonomialIdeal]:
    """Components of ``Jfrak^n`` for ``|m| <= max_total`` by repeated multiplication.

    ``Jfrak`` has component ``J`` in degree 0 and ``I^a`` in every degree
    ``a != 0``; ``Jfrak^0`` is the Rees algebra itself.
    """
    kept = _kept(sys, omit)
    s = len(kept)
    ring = sys.ring
    degrees = [m for t in range(max_total + 1) for m in compositions(t, s)]
    rees = {m: (multipower(kept, m) if s else MonomialIdeal.unit(ring)) for m in degrees}
    gen = dict(rees)
    gen[(0,) * s] = sys.J
    cur = dict(rees)
    for _ in range(n):
        nxt = {}
        for m in degrees:
            acc = MonomialIdeal.zero(ring)
            for a in degrees:
                rest = tuple(x - y for x, y in zip(m, a))
                if min(rest, default=0) < 0:
                    continue
                acc = acc.sum(gen[a].product(cur[rest]))
            nxt[m] = acc
        cur = nxt
    return cur


def validate_jadic_formula(sys: IdealSystem, nmax: int = 4, omit: int | None = None) -> bool:
    """Compare the closed form of ``(Jfrak^n)_m`` with direct expansion for ``n <= nmax``."""
    s = len(_kept(sys, omit))
    for n in range(1, nmax + 1):
        direct = jadic_components_direct(sys, n, n + 1, omit)
        for m in (m for t in range(n + 2) for m in compositions(t, s)):
            if direct[m] != jadic_component_closed(sys, n, m, omit):
                return False
    return True


# transmutation checks ---------------------------------------------------

def _inputs(sys: IdealSystem) -> dict:
    return sys.to_json()


def check_thm_3_4(sys: IdealSystem) -> VerificationReport:
    """Compare ``e(J^[k0+1], I^[k]; N)`` with ``e(J^[k0+1], I^[k]; A) * rank N``."""
    t0 = time.perf_counter()
    r = sys.module.rank()
    res = CheckResult("thm3.4", _inputs(sys), extra={"rank": r})
    if r == 0:
        res.status = NOT_APPLICABLE
        res.detail = str(RankZero("rank_A N = 0"))
    else:
        mod = ideal_mixed_multiplicities(sys)
        ring = ideal_mixed_multiplicities(sys.with_module(None))
        scaled = {k: v * r for k, v in ring.values.items()}
        res.lhs = values_json(mod.values)
        res.rhs = values_json(scaled)
        res.extra["q"] = mod.q
        res.status = PASS if mod.values == scaled else FAIL
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)


def check_prop_2_1(sys: IdealSystem, i: int) -> VerificationReport:
    """Sum of ``e(J^[k0+1], I^[k]; N)`` over ``k_i = 0`` vs ``e(Jfrak_i; R(I_i; Nbar))``.

    ``i`` counts from 1.
    """
    t0 = time.perf_counter()
    if not 1 <= i <= sys.s:
        raise ValueError(f"i must lie in 1..{sys.s}")
    mm = ideal_mixed_multiplicities(sys)
    lhs = sum(v for k, v in mm.values.items() if k[i] == 0)
    rhs = rees_module_multiplicity(sys, omit=i)
    res = CheckResult("prop2.1", {**_inputs(sys), "i": i}, lhs, rhs,
                      PASS if lhs == rhs else FAIL, extra={"q": mm.q})
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)


def check_cor_3_8(sys: IdealSystem) -> VerificationReport:
    """``e(Jfrak; R(I; Nbar)) = e(Jfrak; R(I; Abar)) * rank N``."""
    t0 = time.perf_counter()
    r = sys.module.rank()
    res = CheckResult("cor3.8", _inputs(sys), extra={"rank": r})
    if r == 0:
        res.status = NOT_APPLICABLE
        res.detail = str(RankZero("rank_A N = 0"))
    else:
        res.lhs = rees_module_multiplicity(sys)
        res.rhs = rees_module_multiplicity(sys.with_module(None)) * r
        res.status = PASS if res.lhs == res.rhs else FAIL
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)


def check_sum_identity(sys: IdealSystem) -> VerificationReport:
    """Rees multiplicity equals the sum of all mixed multiplicities."""
    t0 = time.perf_counter()
    mm = ideal_mixed_multiplicities(sys)
    rees = rees_module_multiplicity(sys)
    res = CheckResult("sum", _inputs(sys), rees, mm.total(), PASS if rees == mm.total() else FAIL)
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)


def check_power_scaling(sys: IdealSystem, u: Sequence[int]) -> VerificationReport:
    """``e(J^[k0+1], (I^u)^[k]) = u^k e(J^[k0+1], I^[k])``.

    The scaled fiber function is the original one at ``(n0, u*n)``, so the
    scaled system reuses the original grid with every ideal axis divided by
    ``u_i``; stability validation still runs on the scaled system.
    """
    t0 = time.perf_counter()
    if len(u) != sys.s or any(x < 1 for x in u):
        raise ValueError("need one positive exponent per ideal")
    base = ideal_mixed_multiplicities(sys)
    grid = default_ideal_grid(sys, base.q)
    shrunk = GridSpec((grid.base[0], *(-(-b // x) for b, x in zip(grid.base[1:], u))),
                      grid.width, grid.validation_offset)
    scaled = ideal_mixed_multiplicities(sys.scaled(u), shrunk)
    expected = {k: v * math.prod(x ** e for x, e in zip(u, k[1:])) for k, v in base.values.items()}
    res = CheckResult("scaling", {**_inputs(sys), "u": list(u)}, values_json(scaled.values),
                      values_json(expected), PASS if scaled.values == expected else FAIL)
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)
