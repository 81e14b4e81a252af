from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardyberndt.exactmath import (
    Cyclotomic,
    InvalidOrderError,
    bits_to_digits,
    complex_close,
    complex_from_json,
    complex_to_json,
    cyclotomic_polynomial,
    euler_phi,
    rational_from_str,
    rational_to_str,
)

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=9)
orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10, 12, 15])


@st.composite
def elements(draw, order=None):
    n = draw(orders) if order is None else order
    raw = draw(st.lists(small_q, min_size=n, max_size=n))
    return Cyclotomic.from_raw(n, raw)


def test_cyclotomic_polynomials_match_known_forms():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 25))
def test_zeta_has_exact_order(n):
    z = Cyclotomic.zeta(n)
    assert z**n == 1
    for d in range(1, n):
        if n % d == 0:
            assert z**d != 1
    assert len(z.coeffs) == euler_phi(n)


@pytest.mark.parametrize("n", range(2, 25))
def test_sum_of_roots_of_unity_vanishes(n):
    assert sum((Cyclotomic.zeta(n, j) for j in range(n)), Cyclotomic.rational(0)).is_zero()


def test_mixed_orders_lift_to_lcm():
    i = Cyclotomic.zeta(4)
    w = Cyclotomic.zeta(3)
    prod = i * w
    assert prod.order == 12
    assert prod == Cyclotomic.zeta(12, 7)
    assert Cyclotomic.zeta(6) == -Cyclotomic.zeta(3, 2)


def test_equality_with_plain_numbers():
    assert Cyclotomic.rational(Fraction(3, 4)) == Fraction(3, 4)
    assert Cyclotomic.zeta(4) ** 2 == -1
    assert Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2) == -1


def test_string_form():
    assert str(2 * Cyclotomic.zeta(6) - 1) == "-1 + 2*z6"
    assert str(Cyclotomic.rational(Fraction(-2, 3))) == "-2/3"


def test_immutability_and_hash():
    z = Cyclotomic.zeta(5)
    with pytest.raises(AttributeError):
        z.order = 3
    with pytest.raises(TypeError):
        hash(z)


def test_invalid_order():
    with pytest.raises(InvalidOrderError):
        Cyclotomic.from_raw(0, [])


@given(elements(12), elements(12), elements(12))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(elements(), elements())
def test_mixed_order_arithmetic_commutes_with_embedding(a, b):
    with mpmath.workprec(200):
        assert complex_close((a * b).embed(200), a.embed(200) * b.embed(200), mpmath.mpf(2) ** -150)
        assert complex_close((a + b).embed(200), a.embed(200) + b.embed(200), mpmath.mpf(2) ** -150)


@given(elements())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1
    assert a / a == 1


@given(elements())
def test_conjugate_and_norm(a):
    assert a.conjugate().conjugate() == a
    prod = a * a.conjugate()
    assert prod.conjugate() == prod
    assert isinstance(a.norm(), Fraction)
    with mpmath.workprec(200):
        assert complex_close(a.conjugate().embed(200), mpmath.conj(a.embed(200)), mpmath.mpf(2) ** -150)


@given(elements())
def test_json_round_trip(a):
    assert Cyclotomic.from_json(a.to_json()) == a


@given(small_q)
def test_rational_string_round_trip(q):
    assert rational_from_str(rational_to_str(q)) == q


def test_complex_json_round_trip():
    with mpmath.workprec(256):
        z = mpmath.mpc(mpmath.pi, -mpmath.e)
        data = complex_to_json(z, 256)
        assert set(data) == {"re", "im", "digits"}
        assert complex_close(complex_from_json(data), z, mpmath.mpf(10) ** -70)


def test_bits_to_digits():
    assert bits_to_digits(256) >= 77
    assert bits_to_digits(53) >= 15
