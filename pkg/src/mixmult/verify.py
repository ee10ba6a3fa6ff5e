"""Independent oracles and the graded rank check.

The oracles here never minimalize: ideals are handled as raw generator
lists and membership is plain divisibility.
"""
from __future__ import annotations

import itertools
import time
from typing import Sequence

from .core import GradedRing, Monomial, compositions
from .errors import InfiniteLength, RankZero
from .hilbert import GridSpec, graded_mixed_multiplicities
from .ideal_mixed import values_json
from .ideals import MonomialIdeal
from .modules import MonomialModule
from .report import FAIL, NOT_APPLICABLE, PASS, CheckResult, VerificationReport

Gens = Sequence[Sequence[int]]


def _raw(gens) -> list[Monomial]:
    if isinstance(gens, MonomialIdeal):
        return list(gens.generators)
    return [tuple(g) for g in gens]


def _member(m: Monomial, gens: Sequence[Monomial]) -> bool:
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def raw_product(*gen_lists: Gens) -> list[Monomial]:
    """All pairwise products of generator lists, duplicates removed, nothing else."""
    out = {()}
    for gens in gen_lists:
        out = {tuple(a + b for a, b in itertools.zip_longest(p, g, fillvalue=0))
               for p in out for g in gens}
    return sorted(out)


def raw_power(gens: Gens, n: int, nvars: int) -> list[Monomial]:
    if n == 0:
        return [(0,) * nvars]
    out = set()
    for combo in itertools.combinations_with_replacement([tuple(g) for g in gens], n):
        out.add(tuple(map(sum, zip(*combo))))
    return sorted(out)


def raw_multipower(gen_lists: Sequence[Gens], exps: Sequence[int], nvars: int) -> list[Monomial]:
    return raw_product(*[raw_power(g, e, nvars) for g, e in zip(gen_lists, exps)])


def _certificate(L1: list[Monomial], L2: list[Monomial], kills: list[list[Monomial]],
                 nvars: int, cap: int) -> int:
    """Least ``c`` such that ``g * nu`` dies for every generator ``g`` of L1 and ``|nu| = c``."""
    for c in range(cap + 1):
        shifts = list(compositions(c, nvars))
        ok = True
        for g in L1:
            for nu in shifts:
                mu = tuple(a + b for a, b in zip(g, nu))
                if not _member(mu, L2) and not all(_member(mu, K) for K in kills):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return c
    raise InfiniteLength(f"no finite-length certificate up to degree {cap}")


def brute_force_length(L1: Gens | MonomialIdeal, L2: Gens | MonomialIdeal,
                       module: MonomialModule | Sequence[Gens] | None = None,
                       nvars: int | None = None, bound: int | None = None,
                       cap: int = 64) -> int:
    """``length((L1 N + K) / (L2 N + K))`` by raw enumeration.

    ``module`` supplies the coordinate relations ``K_i`` (default: ``N = A``).
    Without an explicit ``bound`` a certificate degree ``c`` is searched so
    that everything of degree at least ``deg L1 + c`` is killed.
    """
    l1, l2 = _raw(L1), _raw(L2)
    if isinstance(module, MonomialModule):
        kills = [list(K.generators) for K in module.coordinate_ideals]
    elif module is None:
        kills = [[]]
    else:
        kills = [_raw(K) for K in module]
    if nvars is None:
        nvars = len(l1[0]) if l1 else len(l2[0])
    if not l1:
        return 0
    if bound is None:
        bound = max(sum(g) for g in l1) + _certificate(l1, l2, kills, nvars, cap)
    total = 0
    for deg in range(bound):
        for mu in compositions(deg, nvars):
            if not _member(mu, l1) or _member(mu, l2):
                continue
            total += sum(1 for K in kills if not _member(mu, K))
    return total


def brute_force_fiber(J: Gens, ideals: Sequence[Gens], n0: int, n: Sequence[int],
                      module: MonomialModule | None = None, nvars: int | None = None) -> int:
    """Raw oracle for ``length(J^n0 I^n N / J^(n0+1) I^n N)``."""
    nvars = nvars or len(J[0])
    L1 = raw_product(raw_power(J, n0, nvars), raw_multipower(ideals, n, nvars))
    L2 = raw_product(raw_power(J, n0 + 1, nvars), raw_multipower(ideals, n, nvars))
    return brute_force_length(L1, L2, module, nvars)


def brute_force_hilbert(M: MonomialModule, n: Sequence[int]) -> int:
    """Graded piece dimension by scanning all monomials up to the total degree."""
    ring = M.ring
    total = 0
    for shift, K in zip(M.shifts, M.coordinate_ideals):
        d = tuple(a - b for a, b in zip(n, shift))
        if min(d) < 0:
            continue
        for mu in compositions(sum(d), ring.variable_count):
            if ring.degree_of(mu) == d and not _member(mu, K.generators):
                total += 1
    return total


def check_thm_3_1(ring: GradedRing, M: MonomialModule,
                  grid: GridSpec | None = None, retries: int = 4) -> VerificationReport:
    """``e(M; k) = e(S; k) * rank M`` over the free multigraded ring ``S``."""
    t0 = time.perf_counter()
    r = M.rank()
    res = CheckResult("thm3.1", {"ring": ring.to_json(), "module": M.to_json()}, extra={"rank": r})
    if r == 0:
        res.status = NOT_APPLICABLE
        res.detail = str(RankZero("rank_S M = 0"))
    else:
        em = graded_mixed_multiplicities(M, grid, retries)
        es = graded_mixed_multiplicities(MonomialModule.free(ring), None, retries)
        scaled = {k: v * r for k, v in es.values.items()}
        res.lhs = values_json(em.values)
        res.rhs = values_json(scaled)
        res.status = PASS if em.values == scaled else FAIL
    res.seconds = time.perf_counter() - t0
    return VerificationReport.single(res)
