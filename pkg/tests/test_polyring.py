import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphpoly.errors import DivisibilityError
from graphpoly.polyring import (
    K,
    K_MINUS_1,
    ONE,
    IntPoly,
    ZERO,
    poly_add,
    poly_div_exact,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_pow,
    poly_sub,
    to_coeffs,
    to_pretty,
)

polys = st.lists(st.integers(-10**30, 10**30), max_size=6).map(IntPoly)


def test_basic_arithmetic():
    assert poly_add(K_MINUS_1, ONE) == K
    assert poly_mul(K_MINUS_1, K_MINUS_1) == IntPoly([1, -2, 1])
    p = IntPoly([3, 0, -7, 2])
    assert poly_sub(p, p) == ZERO
    assert poly_sub(p, p).coeffs == ()
    assert poly_neg(p) == IntPoly([-3, 0, 7, -2])


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly([0, 0]).degree == -1
    assert IntPoly([5]) == 5


def test_powers():
    assert poly_pow(K_MINUS_1, 0) == ONE
    assert poly_pow(K_MINUS_1, 3) == IntPoly([-1, 3, -3, 1])
    assert poly_pow(K, 2) == IntPoly([0, 0, 1])
    with pytest.raises(ValueError):
        poly_pow(K, -1)


def test_eval():
    c3 = K * K_MINUS_1 * IntPoly([-2, 1])
    assert poly_eval(c3, 3) == 6
    assert poly_eval(IntPoly([7, 1, 1]), 0) == 7
    assert poly_eval(poly_pow(K_MINUS_1, 4), 5) == 256
    assert poly_eval(ZERO, 12) == 0


def test_big_coefficients_stay_exact():
    p = poly_pow(IntPoly([-1, 1]), 80)
    assert p.coeffs[40] == 107507208733336176461620  # binomial(80, 40)
    assert poly_eval(p, 3) == 2**80


def test_div_exact():
    assert poly_div_exact(IntPoly([1, -2, 1]), K_MINUS_1) == K_MINUS_1
    assert poly_div_exact(ZERO, poly_pow(K_MINUS_1, 2)) == ZERO
    k4 = K * K_MINUS_1 * IntPoly([-2, 1]) * IntPoly([-3, 1])
    assert poly_div_exact(k4 - k4, poly_pow(K_MINUS_1, 2)) == ZERO


def test_div_inexact_carries_remainder():
    with pytest.raises(DivisibilityError) as info:
        poly_div_exact(IntPoly([0, 0, 1]), K_MINUS_1)
    assert info.value.remainder == ONE
    assert info.value.quotient == IntPoly([1, 1])
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(K, ZERO)


def test_rendering():
    assert to_pretty(IntPoly([0, 2, -3, 1])) == "k^3 - 3*k^2 + 2*k"
    assert to_pretty(ZERO) == "0"
    assert to_pretty(IntPoly([-1])) == "-1"
    assert to_pretty(IntPoly([1, -1])) == "-k + 1"
    assert to_coeffs(IntPoly([0, 2, -3, 1])) == "[0, 2, -3, 1]"
    assert to_coeffs(ZERO) == "[]"


def test_immutable():
    with pytest.raises(AttributeError):
        K.coeffs = (1,)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    for x in (p + q, p * q, p - r):
        assert not x.coeffs or x.coeffs[-1] != 0


divisors = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=4).map(IntPoly)


@given(polys, divisors.filter(lambda q: not q.is_zero()))
def test_div_exact_inverts_mul(p, q):
    assert poly_div_exact(poly_mul(p, q), q) == p


@given(polys, st.integers(-50, 50))
def test_eval_is_ring_hom(p, x):
    q = p * p + K
    assert q(x) == p(x) ** 2 + x
