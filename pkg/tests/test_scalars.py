from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pencilalg.scalars import (
    CyclotomicField,
    FloatField,
    QQ,
    cyclotomic_polynomial,
    embed_order,
    format_scalar,
    parse_scalar,
    primitive_root,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_first_roots():
    assert root_of_unity(1) == 1
    assert root_of_unity(2) == -1
    z4 = root_of_unity(4)
    assert z4 * z4 == -1
    z3 = root_of_unity(3)
    assert z3 + z3 ** 2 == -1  # reduced mod 1 + x + x^2


def test_root_powers_nontrivial():
    for n in (3, 4, 5, 6, 8):
        z = root_of_unity(n)
        assert z ** n == 1
        for j in range(1, n):
            assert z ** j != 1


def test_field_ops_and_inverse():
    f = CyclotomicField(5)
    z = f.root()
    x = 1 + z + z ** 3
    assert x * x.inverse() == 1
    assert (x - x).is_zero()
    assert 1 * x == x
    with pytest.raises(ZeroDivisionError):
        f.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        x / f.zero()


def test_mixed_orders_rejected():
    a = root_of_unity(3)
    b = root_of_unity(4)
    with pytest.raises(ValueError):
        a + b
    lifted_a = embed_order(a, 12)
    lifted_b = embed_order(b, 12)
    assert (lifted_a * lifted_b) ** 12 == 1
    assert lifted_a ** 3 == 1


rationals = st.fractions(max_denominator=20)


@given(rationals, rationals, rationals)
def test_field_axioms_rational(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if not x.is_zero():
        assert x * x.inverse() == 1


@given(st.lists(rationals, min_size=2, max_size=2),
       st.lists(rationals, min_size=2, max_size=2))
def test_field_axioms_cyclotomic3(ac, bc):
    f = CyclotomicField(3)
    x, y = f(ac), f(bc)
    assert x * y == y * x
    assert (x + y) - y == x
    if not x.is_zero():
        assert (x * y) / x == y


@given(st.lists(rationals, min_size=4, max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
def test_embedding_commutes_with_arithmetic(ac, bc):
    f = CyclotomicField(5)
    ff = FloatField(1e-9)
    x, y = f(ac), f(bc)
    lhs = ff(x * y + x)
    rhs = ff(x) * ff(y) + ff(x)
    assert (lhs - rhs).is_zero()


def test_reduction_idempotent():
    f = CyclotomicField(6)
    x = f([1, 2, 3, 4, 5, 6, 7])  # long input reduced on construction
    again = f(list(x.coeffs))
    assert x == again


def test_float_backend_zero_test():
    ff = FloatField(1e-9)
    big = ff(1e12)
    assert not big.is_zero()
    assert (big - big).is_zero()
    tiny = ff(1e-13)
    assert tiny.is_zero()
    with pytest.raises(ZeroDivisionError):
        ff.zero().inverse()


def test_primitive_root_backends():
    f = CyclotomicField(6)
    e = primitive_root(f, 3)
    assert e ** 3 == 1 and e != 1
    ff = FloatField()
    w = primitive_root(ff, 8)
    assert (w ** 8 - ff.one()).is_zero()


@given(st.lists(rationals, min_size=2, max_size=2))
def test_string_roundtrip_cyclotomic(coeffs):
    f = CyclotomicField(3)
    x = f(coeffs)
    assert parse_scalar(format_scalar(x), f) == x


def test_string_forms():
    assert format_scalar(QQ(Fraction(-3, 4))) == "-3/4"
    f = CyclotomicField(4)
    assert format_scalar(f.root()) == "1*z"
    assert parse_scalar("2 + -1/2*z", f) == f([Fraction(2), Fraction(-1, 2)])
    assert parse_scalar("0", f).is_zero()


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
def test_float_string_roundtrip(re_part, im_part):
    ff = FloatField()
    x = ff(complex(re_part, im_part))
    back = parse_scalar(format_scalar(x), ff)
    assert complex(back) == complex(x)
