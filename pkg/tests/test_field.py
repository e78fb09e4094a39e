import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cayleycert.errors import DegenerateError, FieldMismatchError, StructureError
from cayleycert.field import (QuadExt, QuadField, conj, conjugate, qext_arith,
                              qext_inv, scalar_str)

F = QuadField(-3)
ZETA = F.zeta()


def test_conjugate_sum_is_rational():
    a = F.of(1, 1)
    assert a + a.conj() == 2


def test_conjugate_product_expands():
    # (1 + r)(1 - r) = 1 - r^2 = 1 - (-3) = 4
    assert F.of(1, 1) * F.of(1, -1) == 4


def test_zeta_is_primitive_cube_root():
    assert ZETA != 1
    assert ZETA ** 3 == 1
    assert ZETA * ZETA * ZETA == 1
    assert 1 + ZETA + ZETA ** 2 == 0


def test_inverse_of_one():
    assert qext_inv(F.one) == 1


def test_inverse_conjugate_over_norm():
    x = F.of(1, 1)
    assert qext_inv(x) == F.of(Fraction(1, 4), Fraction(-1, 4))
    assert x * qext_inv(x) == 1


def test_zeta_inverse_is_zeta_squared():
    assert qext_inv(ZETA) == ZETA ** 2
    assert ZETA ** -1 == ZETA ** 2


def test_conjugation_definition():
    assert conj(F.sqrt) == -F.sqrt
    assert conjugate(ZETA) == ZETA ** 2


def test_conjugation_involution_random():
    rng = random.Random(1)
    for _ in range(50):
        x = F.random(rng)
        assert conj(conj(x)) == x


def test_zero_inverse_raises():
    with pytest.raises(DegenerateError):
        qext_inv(F.zero)


def test_mismatched_discriminants_raise():
    with pytest.raises(FieldMismatchError):
        QuadExt(1, 1, -3) + QuadExt(1, 1, -1)


def test_rational_embeds_across_discriminants():
    # a value with zero irrational part is plain rational
    assert QuadExt(5, 0, -3) == QuadExt(5, 0, -1)
    assert QuadExt(5, 0, -3) + QuadExt(2, 0, -1) == 7


def test_bad_discriminant_rejected():
    for d in (0, 1, 4, 12):
        with pytest.raises(StructureError):
            QuadExt(1, 1, d)


def test_qext_arith_dispatch():
    x, y = F.of(2, 1), F.of(1, -1)
    assert qext_arith("add", x, y) == F.of(3, 0)
    assert qext_arith("sub", x, y) == F.of(1, 2)
    assert qext_arith("mul", x, y) == x * y
    with pytest.raises(StructureError):
        qext_arith("div", x, y)


def test_serialization_format():
    assert scalar_str(Fraction(3, 4)) == "3/4"
    assert scalar_str(F.of(Fraction(1, 2), Fraction(1, 2))) == "1/2+1/2*sqrt(-3)"
    assert scalar_str(F.of(0, -1)) == "-sqrt(-3)"
    assert scalar_str(F.of(5)) == "5"


small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def qext_values(draw, d=-3):
    return QuadExt(draw(small_rats), draw(small_rats), d)


@settings(max_examples=60, deadline=None)
@given(qext_values(), qext_values(), qext_values())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=60, deadline=None)
@given(qext_values())
def test_norm_is_rational(x):
    n = x * conj(x)
    assert n.b == 0
    assert n.a == x.norm()


@settings(max_examples=60, deadline=None)
@given(qext_values(), qext_values())
def test_conjugation_is_ring_homomorphism(x, y):
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)


@settings(max_examples=40, deadline=None)
@given(qext_values())
def test_inverse_round_trip(x):
    if x:
        assert x * x.inverse() == 1


def test_quadfield_other_discriminants():
    for d in (-1, 2, 5):
        K = QuadField(d)
        r = K.sqrt
        assert r * r == d
        assert conj(r) == -r
        x = K.of(3, 2)
        assert x * x.inverse() == 1
