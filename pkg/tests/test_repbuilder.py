"""Construction checks for the b3 / g2 / z / y matrix families."""

import itertools

import pytest

from g2kit.linalg import RepMatrix, commutator
from g2kit.repbuilder import (
    B3_ROOT_ORDER,
    G2_ROOT_ORDER,
    b3_root_system,
    build_m,
    g2_root_system,
    lowering_matrix,
    B3_LOWERING,
    G2_LOWERING,
    C_CONST,
    S_CONST,
)
from g2kit.scalars import CZERO, ComplexScalar, Q, rational, sqrtq


# -- root data -------------------------------------------------------------------


def test_b3_positive_roots():
    rs = b3_root_system()
    expected = {
        "1": (1, -1, 0),
        "2": (0, 1, -1),
        "3": (0, 0, 1),
        "12": (1, 0, -1),
        "23": (0, 1, 0),
        "123": (1, 0, 0),
        "233": (0, 1, 1),
        "1233": (1, 0, 1),
        "12233": (1, 1, 0),
    }
    for label, vec in expected.items():
        assert rs.vector(label) == tuple(Q(x) for x in vec)
    assert {l for l in rs.order if rs.is_short(l)} == {"3", "23", "123"}


def test_b3_heights():
    rs = b3_root_system()
    assert [rs.height(l) for l in rs.order] == [1, 1, 1, 2, 2, 3, 3, 4, 5]


def test_g2_root_norms():
    rs = g2_root_system()
    short = {l for l in rs.order if rs.is_short(l)}
    assert short == {"1", "12", "112"}
    for label in rs.order:
        n2 = rs.norm_squared(label)
        assert n2 == (rational(2, 3) if label in short else rational(2))


def test_g2_nonsimple_roots_are_sums():
    rs = g2_root_system()
    r1, r2 = rs.vector("1"), rs.vector("2")

    def add(u, v, k=1):
        return tuple(a + b * k for a, b in zip(u, v))

    assert rs.vector("12") == add(r1, r2)
    assert rs.vector("112") == add(add(r1, r1), r2)
    assert rs.vector("11122") == add(add(add(r1, r1), r1), r2, 2) == tuple(
        a * 3 + b * 2 for a, b in zip(r1, r2)
    )


# -- b3 family ---------------------------------------------------------------------


def test_b3_trace_orthonormality(catalog):
    mats = catalog.b3
    two = ComplexScalar.from_real(2)
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            t = (a @ b).trace()
            assert t == (two if i == j else CZERO), (i, j)


def test_b3_hermitian_traceless(catalog):
    for m in catalog.b3:
        assert m.is_hermitian()
        assert m.is_traceless()


def test_b3_cartan_weyl_brackets(catalog):
    # [h, e_{-alpha}] = -R_alpha . h e_{-alpha} for each Cartan element
    rs = b3_root_system()
    cartan = catalog.b3[:3]
    for label in B3_ROOT_ORDER:
        e_minus = lowering_matrix(B3_LOWERING[label])
        vec = rs.vector(label)
        for r in range(3):
            lhs = commutator(cartan[r], e_minus)
            rhs = e_minus.scale(-rational(vec[r]))
            assert lhs == rhs, (label, r)


def test_b3_raising_lowering_brackets(catalog):
    # [e_alpha, e_{-alpha}] = R_alpha . h
    rs = b3_root_system()
    cartan = catalog.b3[:3]
    for label in B3_ROOT_ORDER:
        e_minus = lowering_matrix(B3_LOWERING[label])
        e_plus = e_minus.transpose()
        rhs = RepMatrix.zero(7)
        for r, comp in enumerate(rs.vector(label)):
            rhs = rhs + cartan[r].scale(rational(comp))
        assert commutator(e_plus, e_minus) == rhs, label


def test_b3_antitransposition(catalog):
    m = catalog.m
    for x in catalog.b3:
        assert x.transpose() == (m @ x @ m).scale(-1)


# -- g2 family -----------------------------------------------------------------------


def test_g2_cartan_diagonal_values(catalog):
    h1 = catalog.g2[0]
    s6 = sqrtq(6)
    expected = [s6 / 3, s6 / 6, s6 / 6, rational(0), -(s6 / 6), -(s6 / 6), -(s6 / 3)]
    for k in range(7):
        assert h1[k, k] == ComplexScalar(expected[k])


def test_g2_bracket_with_doubled_short_root(catalog):
    # [e_12, e_1] = (2/sqrt3) e_112
    e12 = lowering_matrix(G2_LOWERING["12"]).transpose()
    e1 = lowering_matrix(G2_LOWERING["1"]).transpose()
    e112 = lowering_matrix(G2_LOWERING["112"]).transpose()
    assert commutator(e12, e1) == e112.scale(rational(2) * sqrtq(3).invert())


def test_g2_cartan_weyl_brackets(catalog):
    rs = g2_root_system()
    cartan = catalog.g2[:2]
    for label in G2_ROOT_ORDER:
        e_minus = lowering_matrix(G2_LOWERING[label])
        vec = rs.vector(label)
        for r in range(2):
            assert commutator(cartan[r], e_minus) == e_minus.scale(-vec[r]), (
                label,
                r,
            )
        e_plus = e_minus.transpose()
        rhs = cartan[0].scale(vec[0]) + cartan[1].scale(vec[1])
        assert commutator(e_plus, e_minus) == rhs, label


def test_g2_embedding_is_checked_at_build():
    # build_g2_defining verifies the embedding internally; a corrupted b3
    # basis must be rejected
    from g2kit.repbuilder import build_b3_defining, build_g2_defining
    from g2kit.errors import InternalConsistencyError

    b3 = build_b3_defining()
    b3[3] = b3[3].scale(2)
    with pytest.raises(InternalConsistencyError):
        build_g2_defining(b3)


def test_g2_matrices_live_inside_b3_span(catalog):
    # every g2 matrix is trace-orthogonal to every z (the b3 complement is
    # exactly the z family)
    for x in catalog.g2:
        for z in catalog.z:
            assert (x @ z).trace() == CZERO


def test_g2_closure(catalog):
    # [x_i, x_j] stays inside the span of the x family: expanding against the
    # 48-element orthonormal family leaves no z or y component
    xs = catalog.g2
    half = ComplexScalar.from_real(rational(1, 2))
    for i, j in itertools.combinations(range(14), 2):
        comm = commutator(xs[i], xs[j])
        recon = RepMatrix.zero(7)
        for x in xs:
            recon = recon + x.scale((x @ comm).trace() * half)
        assert recon == comm, (i, j)


# -- z family ---------------------------------------------------------------------------


def test_z4_diagonal(catalog):
    z4 = catalog.z[3]
    s = S_CONST
    expected = [s, -s, -s, rational(0), s, s, -s]
    for k in range(7):
        assert z4[k, k] == ComplexScalar(expected[k])


def test_z_orthogonal_to_g2(catalog):
    for z in catalog.z:
        for x in catalog.g2:
            assert (z @ x).trace() == CZERO


def test_z_normalization(catalog):
    # tr(z_a z_b) = 2 delta_ab; the weaker normalization delta_ab would be
    # inconsistent with the z z product law
    two = ComplexScalar.from_real(2)
    for a, za in enumerate(catalog.z):
        for b, zb in enumerate(catalog.z):
            assert (za @ zb).trace() == (two if a == b else CZERO)


def test_z_antitransposition(catalog):
    m = catalog.m
    for z in catalog.z:
        assert z.transpose() == (m @ z @ m).scale(-1)


# -- y family -----------------------------------------------------------------------------


def test_y3_diagonal(catalog):
    y3 = catalog.y[2]
    w = sqrtq(1, 21)
    expected = [w, w, w, w * (-6), w, w, w]
    for k in range(7):
        assert y3[k, k] == ComplexScalar(expected[k])


def test_y_trace_orthonormality(catalog):
    two = ComplexScalar.from_real(2)
    ys = catalog.y
    for a in range(27):
        for b in range(a, 27):
            t = (ys[a] @ ys[b]).trace()
            assert t == (two if a == b else CZERO), (a, b)


def test_y_symmetric_under_antitransposition(catalog):
    m = catalog.m
    for y in catalog.y:
        assert y.transpose() == m @ y @ m


def test_y_orthogonal_to_x_and_z(catalog):
    for y in catalog.y:
        for other in list(catalog.g2) + list(catalog.z):
            assert (y @ other).trace() == CZERO


# -- the 48-element family ------------------------------------------------------------------


def test_all48_lambda_family(catalog):
    mats = catalog.all48()
    assert len(mats) == 48
    for m in mats:
        assert m.is_hermitian()
        assert m.is_traceless()
    # pairwise orthonormality doubles as linear independence
    two = ComplexScalar.from_real(2)
    for i, a in enumerate(mats):
        for j in range(i, 48):
            t = (a @ mats[j]).trace()
            assert t == (two if i == j else CZERO), (i, j)


def test_m_matrix_shape():
    m = build_m()
    assert m == m.transpose()
    assert (m @ m) == RepMatrix.identity(7)
