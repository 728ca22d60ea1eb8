import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftrace.cyclo import CycNum, cyclotomic_poly, from_rational, root, totient
from hopftrace.errors import OrderMismatch


def embed(x: CycNum) -> complex:
    """Numerical image under zeta_n -> exp(2 pi i / n); used only as a test oracle."""
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


def cyc(n):
    return st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=7),
                    min_size=totient(n), max_size=totient(n)).map(lambda cs: CycNum(n, cs))


orders = st.sampled_from([1, 2, 3, 4, 5, 7, 8, 9, 12])


def test_from_rational():
    assert from_rational(1, 5) == 1
    assert from_rational(0, 5).is_zero()
    x = from_rational(Fraction(-1, 2), 3)
    assert x.coeffs == (Fraction(-1, 2), Fraction(0))


def test_root_examples():
    assert root(5, 0) == 1
    assert root(5, 5) == 1
    z = root(3, 1)
    # x^2 mod x^2 + x + 1 is -1 - x
    assert z * z == CycNum(3, [-1, -1])


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [totient(n) for n in range(1, 14)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12]


@pytest.mark.parametrize("n", range(1, 14))
def test_root_order_and_minimal_poly(n):
    z = root(n, 1)
    assert z ** n == 1
    value = from_rational(0, n)
    for k, c in enumerate(cyclotomic_poly(n)):
        value = value + z ** k * c
    assert value.is_zero()
    for e in range(-n, 2 * n):
        assert root(n, e) ** n == 1
        assert abs(embed(root(n, e)) - cmath.exp(2j * cmath.pi * e / n)) < 1e-9


def test_field_examples():
    assert root(5, 1) * root(5, 4) == 1
    assert root(5, 1) + root(5, 2) + root(5, 3) + root(5, 4) == -1
    a = root(5, 2) + Fraction(1, 3)
    assert a + 0 == a
    assert root(5, 2).inv() == root(5, 3)
    assert from_rational(1, 5).inv() == 1
    b = 1 - root(3, 1)
    assert b * b.inv() == 1
    assert b.inv() == CycNum(3, [Fraction(2, 3), Fraction(1, 3)])


def test_pow():
    assert root(5, 1) ** -1 == root(5, 4)
    assert (root(5, 2) + 7) ** 0 == 1
    assert root(5, 2) ** 3 == root(5, 1)
    with pytest.raises(ZeroDivisionError):
        from_rational(0, 5) ** -1


def test_zero_inverse_and_mismatch():
    with pytest.raises(ZeroDivisionError):
        from_rational(0, 7).inv()
    with pytest.raises(OrderMismatch):
        root(5, 1) + root(7, 1)
    with pytest.raises(ValueError):
        CycNum(5, [1, 2])


@settings(max_examples=60, deadline=None)
@given(orders.flatmap(lambda n: st.tuples(cyc(n), cyc(n), cyc(n))))
def test_field_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - a).is_zero()
    if a:
        assert a * a.inv() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(orders.flatmap(lambda n: st.tuples(cyc(n), cyc(n))))
def test_agrees_with_complex_embedding(pair):
    a, b = pair
    assert abs(embed(a * b) - embed(a) * embed(b)) < 1e-6
    assert abs(embed(a + b) - (embed(a) + embed(b))) < 1e-6
    if a:
        assert abs(embed(a.inv()) * embed(a) - 1) < 1e-6


@settings(max_examples=40, deadline=None)
@given(orders.flatmap(cyc))
def test_json_roundtrip(a):
    assert CycNum.from_json(a.to_json()) == a


def test_json_format():
    x = CycNum(5, [1, Fraction(-2, 3), 0, 5])
    assert x.to_json() == {"order": 5, "coeffs": ["1", "-2/3", "0", "5"]}


def test_pretty():
    assert (1 - root(7, 2) + Fraction(1, 2) * root(7, 3)).pretty() == "1 - q^2 + (1/2)q^3"
    assert from_rational(0, 5).pretty() == "0"
    assert (-root(5, 1)).pretty() == "-q"
    assert (2 * root(5, 3) - 1).pretty() == "-1 + 2q^3"


def test_pretty_in_other_root():
    # with q = zeta^2, zeta itself is q^3
    assert root(5, 1).pretty(exponent=2) == "q^3"
    assert root(5, 2).pretty(exponent=2) == "q"


def test_hash_consistent_with_eq():
    assert hash(from_rational(3, 5)) == hash(3)
    assert {root(5, 1) * root(5, 1): 1}[root(5, 2)] == 1
