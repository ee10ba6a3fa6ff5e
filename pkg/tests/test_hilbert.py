from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import quotient
from mixmult import (
    EmptySupport,
    GridSpec,
    MonomialModule,
    NonIntegral,
    RationalPolynomial,
    Unstable,
    graded_mixed_multiplicities,
    hilbert_polynomial,
    interpolate,
    mixed_multiplicities_from_poly,
    stability_check,
    total_degree_leading_terms,
)
from mixmult.errors import DegreeMismatch
from mixmult.hilbert import stable_polynomial
from mixmult.verify import brute_force_hilbert


def poly(arity, **terms):
    """``poly(2, n1n2=1, n1=1, c=1)`` style constructor for readable tests."""
    out = {}
    for name, c in terms.items():
        e = [0] * arity
        if name != "c":
            for part in name.split("n")[1:]:
                e[int(part)] += 1
        out[tuple(e)] = c
    return RationalPolynomial(arity, out)


def test_interpolate_examples():
    g1 = GridSpec((0,), 4)
    assert interpolate({(n,): n + 1 for n in range(4)}, g1) == poly(1, n0=1, c=1)
    g2 = GridSpec((0, 0), 4)
    table = {(a, b): (a + 1) * (b + 1) for a in range(4) for b in range(4)}
    assert interpolate(table, g2) == poly(2, n0n1=1, n0=1, n1=1, c=1)
    assert interpolate({(n,): 5 for n in range(7, 10)}, GridSpec((7,), 3)) == RationalPolynomial.constant(1, 5)


def test_interpolate_rational_coefficients():
    g = GridSpec((2,), 3)
    p = interpolate({(n,): n * (n + 1) // 2 for n in range(2, 5)}, g)
    assert p.terms == {(2,): Fraction(1, 2), (1,): Fraction(1, 2)}


def test_stability_check_examples(plane):
    hf = lambda n: min(n[0] + 1, 3)
    assert not stability_check(hf, interpolate({(n,): hf((n,)) for n in range(2)}, GridSpec((0,), 2)),
                               GridSpec((0,), 2))
    g3 = GridSpec((3,), 2)
    p3 = interpolate({pt: hf(pt) for pt in g3.points()}, g3)
    assert p3 == RationalPolynomial.constant(1, 3)
    assert stability_check(hf, p3, g3)
    M = MonomialModule.free(plane)
    for base in [0, 5]:
        g = GridSpec((base,), 3)
        assert stability_check(M.piece_dimension,
                               interpolate({pt: M.piece_dimension(pt) for pt in g.points()}, g), g)


def test_stable_polynomial_recovers_by_enlarging():
    hf = lambda n: min(n[0] + 1, 3)
    p, grid = stable_polynomial(hf, GridSpec((0,), 2))
    assert p == RationalPolynomial.constant(1, 3)
    assert grid.base[0] >= 2


def test_stable_polynomial_raises_unstable():
    with pytest.raises(Unstable):
        stable_polynomial(lambda n: 2 ** n[0], GridSpec((0,), 2), retries=2)


def test_stable_polynomial_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        stable_polynomial(lambda n: n[0] + 1, GridSpec((0,), 2), retries=1, expected_degree=2)


def test_leading_terms_examples():
    assert total_degree_leading_terms(poly(2, n0n1=1, n0=1, c=1)) == {(1, 1): 1}
    assert total_degree_leading_terms(poly(2, n0=1, n1=2, c=1)) == {(1, 0): 1, (0, 1): 2}
    assert total_degree_leading_terms(RationalPolynomial.constant(1, 7)) == {(0,): 7}


def test_mixed_from_poly_examples():
    mm = mixed_multiplicities_from_poly(poly(2, n0n1=1, n0=1, n1=1, c=1))
    assert mm.values == {(2, 0): 0, (1, 1): 1, (0, 2): 0}
    assert mixed_multiplicities_from_poly(poly(2, n0=1, n1=2, c=1)).values == {(1, 0): 1, (0, 1): 2}
    assert mixed_multiplicities_from_poly(RationalPolynomial.constant(2, 3)).values == {(0, 0): 3}
    with pytest.raises(NonIntegral):
        mixed_multiplicities_from_poly(RationalPolynomial(1, {(2,): Fraction(1, 3)}))


def test_graded_mixed_examples(bigraded):
    S = MonomialModule.free(bigraded)
    assert graded_mixed_multiplicities(S).values == {(2, 0): 0, (1, 1): 1, (0, 2): 0}
    assert graded_mixed_multiplicities(MonomialModule.free(bigraded, 2)).values[(1, 1)] == 2
    with pytest.raises(EmptySupport):
        graded_mixed_multiplicities(quotient(bigraded, (1, 0, 0, 0), (0, 1, 0, 0)))


def test_polynomial_str_and_json():
    p = poly(2, n0=1, n1=2, c=1)
    assert str(p) == "n0 + 2*n1 + 1"
    assert RationalPolynomial.from_json(p.to_json()) == p


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.integers(0, 6))
def test_interpolation_reproduces_polynomials(coeffs, base):
    true = RationalPolynomial(1, {(i,): c for i, c in enumerate(coeffs)})
    g = GridSpec((base,), len(coeffs))
    assert interpolate({pt: true(pt) for pt in g.points()}, g) == true


def test_degree_matches_support_dimension(bigraded):
    """deg P_M = dim Supp++ M, i.e. Krull dimension minus the arity, on known modules."""
    cases = [
        (MonomialModule.free(bigraded), 2),
        (quotient(bigraded, (1, 0, 0, 0)), 1),
        (quotient(bigraded, (1, 0, 0, 0), (0, 0, 1, 0)), 0),
        (quotient(bigraded, (1, 0, 1, 0)), 1),
    ]
    for M, want in cases:
        assert hilbert_polynomial(M).degree() == want
        assert M.dimension() - bigraded.arity == want


def test_hilbert_polynomial_agrees_with_scan_far_out(bigraded):
    M = quotient(bigraded, (2, 0, 1, 0), (0, 1, 0, 1)) + MonomialModule.free(bigraded, 1, [(1, 0)])
    p = hilbert_polynomial(M)
    for n in [(6, 6), (7, 9), (10, 6)]:
        assert p(n) == brute_force_hilbert(M, n)
