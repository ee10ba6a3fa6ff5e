"""Exact Hilbert polynomials by finite differences, and mixed multiplicities.

Hilbert functions are sampled on a tensor grid, interpolated in Newton form
with exact rationals, validated on shifted grids and, once stable, the
total-degree leading form is normalized by ``k!``.
"""
from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .core import Multidegree, compositions
from .errors import DegreeMismatch, EmptySupport, Negative, NonIntegral, Unstable
from .modules import MonomialModule

Exponent = tuple[int, ...]
HilbertFunction = Callable[[tuple[int, ...]], int]

#: Degree of the zero polynomial.
DEG_ZERO = -math.inf


class RationalPolynomial:
    """Multivariate polynomial with ``Fraction`` coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        self.arity = arity
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity:
                raise ValueError(f"exponent {exp} for arity {arity}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, arity: int, c) -> RationalPolynomial:
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity: int, i: int) -> RationalPolynomial:
        return cls(arity, {tuple(int(j == i) for j in range(arity)): 1})

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(self.arity, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return RationalPolynomial(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalPolynomial) else -Fraction(other))

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = Fraction(other)
            return RationalPolynomial(self.arity, {e: c * other for e, c in self.terms.items()})
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return RationalPolynomial(self.arity, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.arity == other.arity and self.terms == other.terms
        return self == RationalPolynomial.constant(self.arity, other)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __call__(self, point: Sequence[int | Fraction]) -> Fraction:
        if len(point) != self.arity:
            raise ValueError(f"point of length {len(point)} for arity {self.arity}")
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(point, exp):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    # structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | float:
        return max((sum(e) for e in self.terms), default=DEG_ZERO)

    def axis_degree(self, axis: int) -> int | float:
        return max((e[axis] for e in self.terms), default=DEG_ZERO)

    def leading_form(self) -> dict[Exponent, Fraction]:
        return total_degree_leading_terms(self)

    # io -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "num": c.numerator, "den": c.denominator}
                          for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-e for e in t[0]]))]}

    @classmethod
    def from_json(cls, data: dict, arity: int | None = None) -> RationalPolynomial:
        terms = {tuple(t["exp"]): Fraction(t["num"], t.get("den", 1)) for t in data["terms"]}
        if arity is None:
            if not terms:
                raise ValueError("arity required for the zero polynomial")
            arity = len(next(iter(terms)))
        return cls(arity, terms)

    def __repr__(self) -> str:
        return f"RationalPolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"n{i}" for i in range(self.arity)]
        parts = []
        for exp, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-e for e in t[0]])):
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
            coef = str(c)
            if mono:
                parts.append(mono if c == 1 else f"{coef}*{mono}")
            else:
                parts.append(coef)
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def _shifted_binomial(arity: int, axis: int, shift: int, j: int) -> RationalPolynomial:
    """``binom(n_axis - shift, j)`` as a polynomial in ``n``."""
    x = RationalPolynomial.variable(arity, axis)
    p = RationalPolynomial.constant(arity, 1)
    for t in range(j):
        p = p * (x - (shift + t))
    return p * Fraction(1, math.factorial(j))


@dataclass(frozen=True)
class GridSpec:
    """Tensor grid ``base + {0..width-1}^s`` plus a validation offset."""

    base: Multidegree
    width: int
    validation_offset: int = 3

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(b) for b in self.base))
        if self.width < 1 or self.validation_offset < 1:
            raise ValueError("width and validation_offset must be positive")

    @property
    def arity(self) -> int:
        return len(self.base)

    def points(self) -> list[tuple[int, ...]]:
        return [tuple(b + t for b, t in zip(self.base, off))
                for off in itertools.product(range(self.width), repeat=self.arity)]

    def shifted(self, offset: Sequence[int]) -> GridSpec:
        return GridSpec(tuple(b + o for b, o in zip(self.base, offset)),
                        self.width, self.validation_offset)

    def validation_grids(self) -> list[GridSpec]:
        s, off = self.arity, self.validation_offset
        grids = [self.shifted(tuple(off * (j == a) for j in range(s))) for a in range(s)]
        if s > 1:
            grids.append(self.shifted((off,) * s))
        return grids

    def enlarged(self) -> GridSpec:
        """Next retry grid: base doubled (at least +1 on every axis)."""
        return GridSpec(tuple(max(2 * b, b + 1) for b in self.base),
                        self.width, self.validation_offset)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MIXMULT_THREADS", "1")))
    except ValueError:
        return 1


def evaluate_grid(hf: HilbertFunction, points: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    """Evaluate a pure Hilbert function at every point; optionally threaded.

    Callables exposing ``evaluate_many`` get the whole batch at once.
    """
    many = getattr(hf, "evaluate_many", None)
    if many is not None:
        return many(points)
    n = _threads()
    if n > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            vals = list(pool.map(hf, points))
    else:
        vals = [hf(p) for p in points]
    return dict(zip(points, vals))


def interpolate(values: Mapping[tuple[int, ...], int | Fraction], grid: GridSpec) -> RationalPolynomial:
    """Unique polynomial of per-axis degree < width matching ``values`` on the grid."""
    s, w = grid.arity, grid.width
    # Newton coefficients: forward differences at the base along every axis
    table: dict[tuple[int, ...], Fraction] = {}
    for off in itertools.product(range(w), repeat=s):
        point = tuple(b + t for b, t in zip(grid.base, off))
        table[off] = Fraction(values[point])
    for axis in range(s):
        for j in range(1, w):
            # after step j, index j along axis holds Delta^j at the base
            for off in sorted(table, key=lambda o: -o[axis]):
                if off[axis] >= j:
                    prev = off[:axis] + (off[axis] - 1,) + off[axis + 1:]
                    table[off] = table[off] - table[prev]
    poly = RationalPolynomial(s)
    for off, c in table.items():
        if not c:
            continue
        term = RationalPolynomial.constant(s, c)
        for axis, j in enumerate(off):
            if j:
                term = term * _shifted_binomial(s, axis, grid.base[axis], j)
        poly = poly + term
    return poly


def stability_check(hf: HilbertFunction, p: RationalPolynomial, grid: GridSpec) -> bool:
    """True iff ``p`` agrees with ``hf`` on every validation grid."""
    points = [pt for g in grid.validation_grids() for pt in g.points()]
    actual = evaluate_grid(hf, points)
    return all(p(pt) == actual[pt] for pt in points)


def total_degree_leading_terms(p: RationalPolynomial) -> dict[Exponent, Fraction]:
    if p.is_zero:
        raise ValueError("zero polynomial has no leading form")
    m = p.degree()
    return {e: c for e, c in p.terms.items() if sum(e) == m}


@dataclass(frozen=True)
class MixedMultiplicitySet:
    """``e(M; k)`` for every ``k`` with ``|k| = total_degree``."""

    total_degree: int
    values: dict[tuple[int, ...], int] = field(hash=False)

    def __getitem__(self, k) -> int:
        return self.values[tuple(k)]

    def nonzero(self) -> dict[tuple[int, ...], int]:
        return {k: v for k, v in self.values.items() if v}

    def to_json(self) -> dict:
        return {"degree": self.total_degree,
                "values": [{"k": list(k), "e": v} for k, v in sorted(self.values.items(), reverse=True)]}


def mixed_multiplicities_from_poly(p: RationalPolynomial) -> MixedMultiplicitySet:
    """``e(k) = k! * coefficient of n^k`` in the top-degree part of ``p``."""
    lead = total_degree_leading_terms(p)
    m = int(p.degree())
    values = {}
    for k in compositions(m, p.arity):
        c = lead.get(k, Fraction(0)) * math.prod(math.factorial(x) for x in k)
        if c.denominator != 1:
            raise NonIntegral(f"e{k} = {c} is not an integer")
        if c < 0:
            raise Negative(f"e{k} = {c} is negative")
        values[k] = int(c)
    return MixedMultiplicitySet(m, values)


def stable_polynomial(hf: HilbertFunction, grid: GridSpec, retries: int = 4,
                      expected_degree: int | None = None) -> tuple[RationalPolynomial, GridSpec]:
    """Interpolate ``hf`` and validate, enlarging the grid up to ``retries`` times.

    With ``expected_degree`` set, an interpolant of any other total degree is
    rejected just like a failed validation.
    """
    degree_failed = False
    for _ in range(retries + 1):
        values = evaluate_grid(hf, grid.points())
        p = interpolate(values, grid)
        if stability_check(hf, p, grid):
            if expected_degree is None or p.degree() == expected_degree:
                return p, grid
            degree_failed = True
        grid = grid.enlarged()
    if degree_failed:
        raise DegreeMismatch(f"stable interpolant never reached degree {expected_degree}")
    raise Unstable(f"Hilbert function did not stabilize (last grid base {grid.base})")


# graded modules ---------------------------------------------------------

def default_module_grid(M: MonomialModule) -> GridSpec:
    """Grid for the Hilbert function of a monomial module.

    Base is the larger of ``max total generator degree + 1`` and the
    inclusion-exclusion bound: in slot j the function of ``R/K`` is
    polynomial once n_j exceeds the j-degree of the lcm of all generators
    of K, offset by the shift.
    """
    ring = M.ring
    d = M.max_degree()
    base = [d + 1] * ring.arity
    blocks = ring.blocks
    for shift, K in zip(M.shifts, M.coordinate_ideals):
        if K.is_unit:
            continue
        lcm = [max((g[i] for g in K.generators), default=0) for i in range(ring.variable_count)]
        for j, block in enumerate(blocks):
            base[j] = max(base[j], shift[j] + sum(lcm[i] for i in block))
    width = max(len(b) for b in blocks) - 1 + 2
    return GridSpec(tuple(base), width, 3)


def hilbert_polynomial(M: MonomialModule, grid: GridSpec | None = None,
                       retries: int = 4) -> RationalPolynomial:
    grid = grid or default_module_grid(M)
    p, _ = stable_polynomial(M.piece_dimension, grid, retries)
    return p


def graded_mixed_multiplicities(M: MonomialModule, grid: GridSpec | None = None,
                                retries: int = 4) -> MixedMultiplicitySet:
    if not M.supp_plusplus_nonempty():
        raise EmptySupport("S_(1,...,1) lies in the radical of the annihilator")
    p = hilbert_polynomial(M, grid, retries)
    if p.is_zero:
        raise EmptySupport("Hilbert polynomial is zero")
    return mixed_multiplicities_from_poly(p)
