"""Exponent vectors and standard multigradings of polynomial rings.

Monomials and multidegrees are plain tuples of non-negative ints.  A
:class:`GradedRing` only records how many variables there are and which
grading slot each variable lives in; coefficients are never stored.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatch

Monomial = tuple[int, ...]
Multidegree = tuple[int, ...]


def grlex_key(m: Sequence[int]) -> tuple:
    return (sum(m), tuple(m))


def _check_pair(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ArityMismatch(f"arity {len(a)} vs {len(b)}")


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_pair(a, b)
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    _check_pair(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_pair(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """Generator of the colon ``(a) : b``, i.e. ``a / gcd(a, b)``."""
    _check_pair(a, b)
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` naturals."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    # stars and bars
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def monomials_of_total_degree(nvars: int, degree: int) -> list[Monomial]:
    return sorted(compositions(degree, nvars), key=grlex_key)


@dataclass(frozen=True)
class GradedRing:
    """Polynomial ring over a field with an N^s grading on its variables.

    ``variable_degrees[i]`` is the multidegree of variable ``i``.  With
    ``standard=True`` (the default) each of them must be a unit vector.
    """

    variable_count: int
    arity: int
    variable_degrees: tuple[Multidegree, ...]
    standard: bool = True

    def __post_init__(self):
        if self.variable_count < 1 or self.arity < 1:
            raise ValueError("need at least one variable and one grading slot")
        degs = tuple(tuple(int(x) for x in d) for d in self.variable_degrees)
        object.__setattr__(self, "variable_degrees", degs)
        if len(degs) != self.variable_count:
            raise ArityMismatch("one multidegree per variable required")
        for d in degs:
            if len(d) != self.arity:
                raise ArityMismatch(f"variable degree {d} has wrong length")
            if any(x < 0 for x in d):
                raise ValueError("negative variable degree")
            if self.standard and sorted(d) != [0] * (self.arity - 1) + [1]:
                raise ValueError(f"{d} is not a standard basis vector")

    @classmethod
    def standard_graded(cls, nvars: int) -> GradedRing:
        """k[x_1..x_n] with every variable in degree 1."""
        return cls(nvars, 1, tuple((1,) for _ in range(nvars)))

    @classmethod
    def multigraded(cls, block_sizes: Sequence[int]) -> GradedRing:
        """Variables split into consecutive blocks, block ``j`` in slot ``j``."""
        s = len(block_sizes)
        degs = []
        for j, size in enumerate(block_sizes):
            degs += [tuple(int(t == j) for t in range(s))] * size
        return cls(len(degs), s, tuple(degs))

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Variable indices grouped by grading slot (standard rings only)."""
        if not self.standard:
            raise ValueError("blocks are defined for standard gradings only")
        return tuple(
            tuple(i for i, d in enumerate(self.variable_degrees) if d[j] == 1)
            for j in range(self.arity)
        )

    def one(self) -> Monomial:
        return (0,) * self.variable_count

    def variable(self, i: int) -> Monomial:
        return tuple(int(t == i) for t in range(self.variable_count))

    def check(self, m: Sequence[int]) -> Monomial:
        m = tuple(int(e) for e in m)
        if len(m) != self.variable_count:
            raise ArityMismatch(f"monomial {m} in a ring with {self.variable_count} variables")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        return m

    def degree_of(self, m: Monomial) -> Multidegree:
        m = self.check(m)
        out = [0] * self.arity
        for e, d in zip(m, self.variable_degrees):
            if e:
                for j, w in enumerate(d):
                    out[j] += e * w
        return tuple(out)

    def enumerate_monomials_of_degree(self, d: Multidegree) -> list[Monomial]:
        """Basis of the graded piece of multidegree ``d``, grlex ordered."""
        if len(d) != self.arity:
            raise ArityMismatch(f"multidegree {tuple(d)} for grading arity {self.arity}")
        if any(x < 0 for x in d):
            return []
        if self.standard:
            per_block = [
                list(compositions(dj, len(block))) for dj, block in zip(d, self.blocks)
            ]
            out = []
            for choice in itertools.product(*per_block):
                m = [0] * self.variable_count
                for block, exps in zip(self.blocks, choice):
                    for i, e in zip(block, exps):
                        m[i] = e
                out.append(tuple(m))
            return sorted(out, key=grlex_key)
        return sorted(self._enumerate_weighted(tuple(d)), key=grlex_key)

    def _enumerate_weighted(self, d: Multidegree) -> Iterable[Monomial]:
        # generic search; variables of degree zero make pieces infinite
        if any(all(w == 0 for w in deg) for deg in self.variable_degrees):
            raise ValueError("a variable of degree zero gives infinite graded pieces")
        n = self.variable_count

        def rec(i, remaining, acc):
            if i == n:
                if not any(remaining):
                    yield tuple(acc)
                return
            w = self.variable_degrees[i]
            e = 0
            while all(r - e * x >= 0 for r, x in zip(remaining, w)):
                yield from rec(i + 1, tuple(r - e * x for r, x in zip(remaining, w)), acc + [e])
                e += 1

        yield from rec(0, d, [])

    def to_json(self) -> dict:
        return {"vars": self.variable_count, "s": self.arity,
                "degrees": [list(d) for d in self.variable_degrees]}

    @classmethod
    def from_json(cls, data: dict) -> GradedRing:
        n, s = int(data["vars"]), int(data.get("s", 1))
        degrees = data.get("degrees")
        if degrees is None:
            if s != 1:
                raise ValueError("degrees required when s > 1")
            degrees = [[1]] * n
        return cls(n, s, tuple(tuple(d) for d in degrees))
