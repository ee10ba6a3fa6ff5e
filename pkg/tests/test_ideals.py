import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideal
from mixmult import DIM_ZERO_RING, GradedRing, HypothesisViolation, MonomialIdeal, NotMPrimary
from mixmult.core import compositions
from mixmult.ideals import minimalize, multipower


def test_minimalize(plane):
    assert minimalize(plane, [(2, 0), (2, 1), (0, 3)]).generators == ((2, 0), (0, 3))
    assert minimalize(plane, []).is_zero
    assert minimalize(plane, [(0, 0), (1, 0)]).is_unit


def test_contains(plane):
    I = ideal(plane, (2, 0), (0, 3))
    assert (2, 1) in I
    assert (1, 2) not in I
    assert all(m not in MonomialIdeal.zero(plane) for m in compositions(3, 2))


def test_sum_product_intersect(plane):
    x, m = ideal(plane, (1, 0)), MonomialIdeal.maximal(plane)
    assert x * m == ideal(plane, (2, 0), (1, 1))
    assert x & ideal(plane, (0, 1)) == ideal(plane, (1, 1))
    assert ideal(plane, (2, 0)) + x == x


def test_multipower(plane):
    m = MonomialIdeal.maximal(plane)
    assert multipower([m], (2,)) == ideal(plane, (2, 0), (1, 1), (0, 2))
    assert multipower([ideal(plane, (1, 0)), ideal(plane, (0, 1))], (1, 2)) == ideal(plane, (1, 2))
    assert multipower([m, ideal(plane, (1, 0))], (0, 0)).is_unit


def _iterated_colon(I, g):
    """Oracle: colon by g until the generator set stops changing."""
    cur = I
    while True:
        nxt = MonomialIdeal(I.ring, tuple(
            tuple(max(a - b, 0) for a, b in zip(h, g)) for h in cur.generators))
        if nxt == cur:
            return cur
        cur = nxt


def test_colon_and_saturation(plane):
    I = ideal(plane, (2, 1))
    x = ideal(plane, (1, 0))
    assert I.saturation(x) == _iterated_colon(I, (1, 0)) == ideal(plane, (0, 1))
    J = ideal(plane, (2, 0), (0, 3))
    assert J.saturation(ideal(plane, (0, 1))).is_unit
    assert J.colon((0, 0)) == J
    with pytest.raises(HypothesisViolation):
        J.saturation(MonomialIdeal.zero(plane))


def _radical_oracle(I, nvars, box):
    """Monomials m in the box with some power m^t in I, then minimalized."""
    top = max(max(g) for g in I.generators)
    members = [m for m in itertools.product(range(box), repeat=nvars)
               if any(I.contains(tuple(t * e for e in m)) for t in range(1, top + 1))]
    return MonomialIdeal(I.ring, tuple(members))


def test_radical(plane):
    for I, want in [(ideal(plane, (2, 0), (0, 3)), ideal(plane, (1, 0), (0, 1))),
                    (ideal(plane, (2, 4)), ideal(plane, (1, 1))),
                    (MonomialIdeal.maximal(plane), MonomialIdeal.maximal(plane))]:
        assert I.radical() == want == _radical_oracle(I, 2, 3)


def test_dimension_and_height(plane):
    assert ideal(plane, (2, 0), (1, 1)).krull_dim_quotient() == 1
    assert MonomialIdeal.maximal(plane).krull_dim_quotient() == 0
    assert MonomialIdeal.zero(plane).krull_dim_quotient() == 2
    assert MonomialIdeal.unit(plane).krull_dim_quotient() == DIM_ZERO_RING
    assert ideal(plane, (1, 0)).height() == 1
    assert MonomialIdeal.maximal(plane).height() == 2
    assert ideal(plane, (1, 1)).height() == 1
    with pytest.raises(HypothesisViolation):
        MonomialIdeal.unit(plane).height()


def _m_primary_scan(I):
    for c in itertools.count(0):
        if all(I.contains(m) for m in compositions(c, I.ring.variable_count)):
            return c


def test_m_primary_exponent(plane):
    assert MonomialIdeal.maximal(plane).m_primary_exponent() == 1
    J = ideal(plane, (2, 0), (0, 3))
    assert J.m_primary_exponent() == 4 == _m_primary_scan(J)
    with pytest.raises(NotMPrimary):
        ideal(plane, (1, 0)).m_primary_exponent()


# properties -------------------------------------------------------------

def ideals_in(nvars, max_exp=3, max_gens=4, allow_zero=False):
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.lists(mono, min_size=0 if allow_zero else 1, max_size=max_gens)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), ideals_in(n), ideals_in(n))))
def test_contains_matches_raw_generators(data):
    n, raw, probe = data
    R = GradedRing.standard_graded(n)
    I = MonomialIdeal(R, tuple(raw))
    for m in probe:
        assert I.contains(m) == any(all(a <= b for a, b in zip(g, m)) for g in raw)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), ideals_in(n), ideals_in(n))))
def test_saturation_idempotent_and_oracle(data):
    n, gi, gj = data
    R = GradedRing.standard_graded(n)
    I, J = MonomialIdeal(R, tuple(gi)), MonomialIdeal(R, tuple(gj))
    sat = I.saturation(J)
    assert sat.saturation(J) == sat
    oracle = None
    for g in J.generators:
        part = _iterated_colon(I, g)
        oracle = part if oracle is None else oracle & part
    assert sat == oracle


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), ideals_in(n))))
def test_radical_of_square(data):
    n, gens = data
    I = MonomialIdeal(GradedRing.standard_graded(n), tuple(gens))
    assert (I * I).radical() == I.radical()


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), ideals_in(n, allow_zero=True))))
def test_height_positive_iff_nonzero(data):
    n, gens = data
    I = MonomialIdeal(GradedRing.standard_graded(n), tuple(gens))
    if I.is_unit:
        return
    assert (I.height() > 0) == (not I.is_zero)


def _dim_oracle(I):
    """A variable set T is independent iff the product of high powers of T avoids I."""
    n = I.ring.variable_count
    if I.is_unit:
        return DIM_ZERO_RING
    top = max((max(g) for g in I.generators), default=0) + 1
    best = 0
    for size in range(n + 1):
        for T in itertools.combinations(range(n), size):
            probe = tuple(top if i in T else 0 for i in range(n))
            if not I.contains(probe):
                best = max(best, size)
    return best


@settings(max_examples=60)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), ideals_in(n, 2, 5, allow_zero=True))))
def test_dimension_matches_power_product_oracle(data):
    n, gens = data
    I = MonomialIdeal(GradedRing.standard_graded(n), tuple(gens))
    assert I.krull_dim_quotient() == _dim_oracle(I)


def test_json_roundtrip(plane):
    I = ideal(plane, (0, 3), (2, 0), (2, 5))
    assert I.to_json() == [[2, 0], [0, 3]]
    assert MonomialIdeal.from_json(plane, I.to_json()) == I
