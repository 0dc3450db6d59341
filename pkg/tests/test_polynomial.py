from hypothesis import given, strategies as st

from vsgraph.polynomial import HalfInteger, LaurentPolynomial

polys = st.dictionaries(st.integers(-5, 5), st.integers(-4, 4), max_size=4).map(LaurentPolynomial)
halves = st.integers(-50, 50).map(HalfInteger)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPolynomial(0)


@given(polys, st.integers(-4, 4))
def test_shift_is_monomial_product(a, k):
    assert a.shift(k) == a * LaurentPolynomial.monomial(k)


@given(polys, polys)
def test_mirror_is_a_ring_map(a, b):
    assert (a * b).mirror() == a.mirror() * b.mirror()
    assert a.mirror().mirror() == a


def test_sigma_powers():
    s = LaurentPolynomial.sigma()
    assert s ** 0 == LaurentPolynomial(1)
    assert str(s ** 2) == "-2:1 -1:2 0:3 1:2 2:1"


@given(halves, halves)
def test_half_integer_arithmetic(a, b):
    assert (a + b).numerator == a.numerator + b.numerator
    assert (a - b) + b == a
    assert abs(-a) == abs(a)


def test_half_integer_rendering():
    assert str(HalfInteger(2)) == "1"
    assert str(HalfInteger(-3)) == "-3/2"
    assert HalfInteger(2).is_integer and HalfInteger(2).is_odd_integer()
    assert not HalfInteger(1).is_integer
    assert not HalfInteger(4).is_odd_integer()
    assert not HalfInteger(0)
