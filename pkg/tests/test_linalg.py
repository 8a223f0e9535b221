"""Matrix algebra, tensor products, characteristic polynomials, slice rings."""

import random

import pytest

from g2kit.errors import FormatError
from g2kit.linalg import (
    BivariatePoly,
    RepMatrix,
    UniPoly,
    char_poly,
    char_poly_from_diagonal,
    commutator,
    kron,
    matrices_from_text,
    matrices_to_text,
    partial_trace_first,
)
from g2kit.scalars import (
    CONE,
    CZERO,
    ComplexScalar,
    Q,
    ExactScalar,
    rational,
    sqrtq,
)


def _random_matrix(rng, n):
    def s():
        coeffs = [Q(0)] * 8
        coeffs[rng.randrange(8)] = Q(rng.randint(-5, 5), rng.randint(1, 3))
        return ExactScalar(coeffs)

    return RepMatrix(
        [[ComplexScalar(s(), s()) for _ in range(n)] for _ in range(n)]
    )


def test_commutator_with_itself_vanishes():
    a = _random_matrix(random.Random(1), 5)
    assert commutator(a, a).is_zero()


def test_trace_of_identity():
    assert RepMatrix.identity(7).trace() == ComplexScalar.from_real(7)


def test_dagger_involution():
    a = _random_matrix(random.Random(2), 4)
    assert a.dagger().dagger() == a


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        RepMatrix.identity(3) @ RepMatrix.identity(4)


def test_kron_of_identities():
    assert kron(RepMatrix.identity(2), RepMatrix.identity(3)) == RepMatrix.identity(6)


def test_kron_trace_factorizes():
    rng = random.Random(3)
    a = _random_matrix(rng, 3)
    b = _random_matrix(rng, 4)
    assert kron(a, b).trace() == a.trace() * b.trace()
    assert kron(a, b).n == 12


def test_kron_of_seven_dims():
    rng = random.Random(4)
    a = _random_matrix(rng, 7)
    b = _random_matrix(rng, 7)
    assert kron(a, b).n == 49


def test_trace_cyclicity():
    rng = random.Random(5)
    for _ in range(10):
        a = _random_matrix(rng, 4)
        b = _random_matrix(rng, 4)
        assert (a @ b).trace() == (b @ a).trace()


def test_partial_trace_of_kron():
    rng = random.Random(6)
    a = _random_matrix(rng, 3)
    b = _random_matrix(rng, 4)
    assert partial_trace_first(kron(a, b), 3) == b.scale(a.trace())


def test_char_poly_identity2():
    # t^2 - 2t + 1
    p = char_poly(RepMatrix.identity(2))
    assert p == UniPoly([rational(1), rational(-2), rational(1)])


def test_char_poly_zero7():
    p = char_poly(RepMatrix.zero(7))
    assert p == UniPoly([rational(0)] * 7 + [rational(1)])


def test_char_poly_cartan_diagonal():
    # diag(sqrt(2/3), sqrt(1/6), sqrt(1/6), 0, -sqrt(1/6), -sqrt(1/6), -sqrt(2/3))
    # has characteristic polynomial t^7 - t^5 + (1/4)t^3 - (1/54)t, frozen from
    # expanding the product of linear factors.
    d = [
        sqrtq(2, 3),
        sqrtq(1, 6),
        sqrtq(1, 6),
        ExactScalar.from_rational(0),
        -sqrtq(1, 6),
        -sqrtq(1, 6),
        -sqrtq(2, 3),
    ]
    expected = UniPoly(
        [
            rational(0),
            rational(-1, 54),
            rational(0),
            rational(1, 4),
            rational(0),
            rational(-1),
            rational(0),
            rational(1),
        ]
    )
    # independent oracle: expand prod (t - d_i)
    factors = char_poly_from_diagonal([ComplexScalar(x) for x in d])
    assert UniPoly([c.re for c in factors]) == expected
    # Faddeev-LeVerrier route
    assert char_poly(RepMatrix.diag(d)) == expected


def test_cayley_hamilton_on_random_matrices():
    rng = random.Random(7)
    for n in (2, 3, 4):
        a = _random_matrix(rng, n)
        a = a + a.dagger()  # hermitian, so coefficients stay real
        p = char_poly(a)
        assert p.evaluate_matrix(a).is_zero()


def test_char_poly_of_diagonal_matches_factorization():
    rng = random.Random(8)
    d = [ComplexScalar(ExactScalar.from_rational(rng.randint(-4, 4))) for _ in range(5)]
    assert char_poly(RepMatrix.diag([x.re for x in d])) == UniPoly(
        [c.re for c in char_poly_from_diagonal(d)]
    )


# -- bivariate polynomials ----------------------------------------------------


def _a():
    return BivariatePoly.variable_a()


def _b():
    return BivariatePoly.variable_b()


def test_bipoly_difference_of_squares():
    a, b = _a(), _b()
    lhs = (a * a - b * b) * (a * a + b * b)
    rhs = a**4 - b**4
    assert lhs == rhs


def test_bipoly_evaluation():
    a, b = _a(), _b()
    p = a * a + b * b
    assert p.evaluate(1, 0) == rational(1)
    assert p.evaluate(rational(1, 2), rational(1, 3)) == rational(13, 36)


def test_bipoly_evaluation_commutes_with_arithmetic():
    rng = random.Random(9)
    a, b = _a(), _b()
    p = a**2 * 3 - b * a + BivariatePoly.constant(rational(5, 7))
    q = b**3 + a * 2 - 1
    for _ in range(10):
        x = rational(rng.randint(-6, 6), rng.randint(1, 4))
        y = rational(rng.randint(-6, 6), rng.randint(1, 4))
        assert (p * q).evaluate(x, y) == p.evaluate(x, y) * q.evaluate(x, y)
        assert (p + q).evaluate(x, y) == p.evaluate(x, y) + q.evaluate(x, y)


def test_bipoly_equality_across_expansion_orders():
    a, b = _a(), _b()
    one_way = (a + b) * (a + b) * (a - b)
    other_way = (a * a - b * b) * (a + b)
    assert one_way == other_way


# -- matrix text dump -----------------------------------------------------------


def test_matrix_dump_round_trip():
    rng = random.Random(10)
    mats = [_random_matrix(rng, 3), RepMatrix.identity(4), RepMatrix.zero(2)]
    text = matrices_to_text(mats)
    back = matrices_from_text(text)
    assert back == mats
    assert text.splitlines()[0] == "matrix n=3"


def test_matrix_dump_rejects_garbage():
    with pytest.raises(FormatError):
        matrices_from_text("matrix n=2\n1 2\n")
    with pytest.raises(FormatError):
        matrices_from_text("1 1 (0,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)\n")
    with pytest.raises(FormatError):
        matrices_from_text("matrix n=2\n3 1 (0,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)\n")
