"""Field arithmetic in Q(sqrt2, sqrt3, sqrt7) and its complexification."""

import random

import pytest

from g2kit.scalars import (
    CONE,
    CZERO,
    I_UNIT,
    ONE,
    ZERO,
    ComplexScalar,
    ExactScalar,
    Q,
    parse_complex,
    rational,
    render_complex,
    sqrtq,
)


def test_rational_addition():
    assert rational(1, 2) + rational(1, 3) == rational(5, 6)


def test_additive_inverse_of_radical():
    assert sqrtq(2) + (-sqrtq(2)) == ZERO
    assert not (sqrtq(2) - sqrtq(2))


def test_mixed_sum_collapses():
    assert (ONE + sqrtq(6)) + (rational(2) - sqrtq(6)) == rational(3)


def test_radical_product_table():
    assert sqrtq(2) * sqrtq(3) == sqrtq(6)
    assert sqrtq(6) * sqrtq(14) == rational(2) * sqrtq(21)
    assert sqrtq(42) * sqrtq(42) == rational(42)


def test_conjugate_product():
    assert (ONE + sqrtq(2)) * (ONE - sqrtq(2)) == rational(-1)


def test_square_of_normalization_constant():
    # (sqrt6/3)^2 = 2/3
    c = sqrtq(2, 3)
    assert c == sqrtq(6) / 3
    assert c * c == rational(2, 3)


def test_invert_rational():
    assert rational(2).invert() == rational(1, 2)


def test_invert_radical():
    assert sqrtq(2).invert() == sqrtq(2) / 2


def test_invert_generic_element():
    x = ONE + sqrtq(2) + sqrtq(3)
    assert x.invert() * x == ONE
    assert x * x.invert() == ONE


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.invert()
    with pytest.raises(ZeroDivisionError):
        CZERO.invert()


def test_sqrt_outside_field_rejected():
    with pytest.raises(ValueError):
        sqrtq(5)


def _random_scalar(rng, radicals=3):
    coeffs = [Q(0)] * 8
    for _ in range(radicals):
        coeffs[rng.randrange(8)] = Q(rng.randint(-9, 9), rng.randint(1, 7))
    return ExactScalar(coeffs)


def test_field_axioms_on_random_samples():
    rng = random.Random(20240217)
    for _ in range(60):
        x = _random_scalar(rng)
        y = _random_scalar(rng)
        z = _random_scalar(rng)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) + z == x + (y + z)
        if x:
            assert x * x.invert() == ONE


def test_canonical_equality_is_coefficientwise():
    a = sqrtq(6) / 3
    b = sqrtq(2) * sqrtq(3) / 3
    assert a == b
    assert hash(a) == hash(b)


def test_complex_unit_squares_to_minus_one():
    assert I_UNIT * I_UNIT == ComplexScalar.from_real(rational(-1))


def test_complex_conjugation():
    z = ComplexScalar(ONE, sqrtq(3))
    assert z.conjugate() == ComplexScalar(ONE, -sqrtq(3))
    assert z.conjugate().conjugate() == z


def test_complex_invert():
    assert I_UNIT.invert() == -I_UNIT
    z = ComplexScalar(ONE + sqrtq(2), sqrtq(3))
    assert z * z.invert() == CONE


def test_conjugate_distributes_over_product():
    rng = random.Random(7)
    for _ in range(25):
        x = ComplexScalar(_random_scalar(rng), _random_scalar(rng))
        y = ComplexScalar(_random_scalar(rng), _random_scalar(rng))
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_norm_squared_zero_iff_zero():
    rng = random.Random(99)
    for _ in range(25):
        z = ComplexScalar(_random_scalar(rng), _random_scalar(rng))
        assert bool(z.norm_squared()) == bool(z)


def test_render_example_from_grammar():
    # sqrt6/3 in the real slot
    z = ComplexScalar(sqrtq(6) / 3, ZERO)
    assert render_complex(z) == "(0,0,0,1/3,0,0,0,0|0,0,0,0,0,0,0,0)"


def test_parse_render_round_trip():
    rng = random.Random(4242)
    for _ in range(40):
        z = ComplexScalar(_random_scalar(rng), _random_scalar(rng))
        assert parse_complex(render_complex(z)) == z
