"""Invariant tensor extraction, the psi tensor, derived matrices, and the
tensor file format."""

import itertools

import pytest

from g2kit.errors import FormatError
from g2kit.linalg import RepMatrix, commutator
from g2kit.scalars import CZERO, ComplexScalar, ZERO, rational, sqrtq
from g2kit.tensors import (
    Tensor,
    build_psi,
    deserialize_tensors,
    epsilon7,
    perm_sign,
    serialize_tensors,
    tensor_from_text,
    tensor_to_text,
)


# -- psi --------------------------------------------------------------------------


def test_psi_values():
    psi = build_psi()
    assert psi[(0, 3, 6)] == rational(1)  # ordered triple 147
    assert psi[(3, 0, 6)] == rational(-1)  # odd permutation 417
    assert psi[(0, 1, 3)] == ZERO  # 124 is not a multiplication triple
    assert psi.nonzero_count() == 42  # 7 triples x 6 permutations


def test_psi_total_antisymmetry():
    psi = build_psi()
    for idx, val in psi.items():
        for perm in itertools.permutations(range(3)):
            assert psi[tuple(idx[p] for p in perm)] == val * perm_sign(perm)


def test_perm_sign_and_epsilon7():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert epsilon7((0, 1, 2, 3, 4, 5, 6)) == 1
    assert epsilon7((1, 0, 2, 3, 4, 5, 6)) == -1
    assert epsilon7((0, 0, 2, 3, 4, 5, 6)) == 0


# -- extraction ----------------------------------------------------------------------


def test_c_abc_is_psi_over_sqrt3(store):
    s3inv = sqrtq(3).invert()
    keys = set(store.c_abc.data) | set(store.psi_abc.data)
    for idx in keys:
        assert store.c_abc[idx] == store.psi_abc[idx] * s3inv


def test_c_ijk_nonzero_count(store):
    # frozen by enumerating the extracted tensor
    assert store.c_ijk.nonzero_count() == 180


def test_tensor_symmetries(store):
    for t in (store.c_ijk, store.c_abc, store.psi_abc):
        for (p, q, r), val in t.items():
            assert t[(q, p, r)] == -val
            assert t[(p, r, q)] == -val
    for (i, a, b), val in store.h_iab.items():
        assert store.h_iab[(i, b, a)] == -val
    for (i, j, A), val in store.d_ijA.items():
        assert store.d_ijA[(j, i, A)] == val
    for (a, b, A), val in store.d_abA.items():
        assert store.d_abA[(b, a, A)] == val
    for t in (store.phi_iAB, store.t_aAB):
        for (p, A, B), val in t.items():
            assert t[(p, B, A)] == -val
    for (A, B, C), val in store.d_ABC.items():
        for perm in itertools.permutations((A, B, C)):
            assert store.d_ABC[perm] == val


def test_traceless_contractions(store):
    # d_iiA = 0, d_aaA = 0, d_AAC = 0
    for A in range(27):
        assert sum((store.d_ijA[(i, i, A)] for i in range(14)), start=ZERO) == ZERO
        assert sum((store.d_abA[(a, a, A)] for a in range(7)), start=ZERO) == ZERO
    for C in range(27):
        assert sum((store.d_ABC[(A, A, C)] for A in range(27)), start=ZERO) == ZERO


def test_h_contraction(store):
    # h_iab h_jab = 2 delta_ij
    for i in range(14):
        for j in range(14):
            acc = ZERO
            for (ii, a, b), val in store.h_iab.items():
                if ii == i:
                    acc = acc + val * store.h_iab[(j, a, b)]
            assert acc == rational(2 if i == j else 0), (i, j)


# -- derived matrices ---------------------------------------------------------------------


def test_h_sign_choice(derived):
    assert derived.h_sign == -1


def test_h_bracket_closure(store, derived):
    H, c = derived.H, store.c_ijk
    for i in range(14):
        for j in range(i + 1, 14):
            rhs = RepMatrix.zero(7)
            for k in range(14):
                v = c[(i, j, k)]
                if v:
                    rhs = rhs + H[k].scale(ComplexScalar(ZERO, v))
            assert commutator(H[i], H[j]) == rhs


def test_hc_bracket(store, derived):
    # [H_i, C_a] = i h_iab C_b
    H, C = derived.H, derived.C
    for i in range(14):
        for a in range(7):
            rhs = RepMatrix.zero(7)
            for b in range(7):
                v = store.h_iab[(i, a, b)]
                if v:
                    rhs = rhs + C[b].scale(ComplexScalar(ZERO, v))
            assert commutator(H[i], C[a]) == rhs, (i, a)


def test_hy_bracket(store, derived):
    # [H_i, Y_A] = i phi_iAB Y_B
    H, Y = derived.H, derived.Y
    for i in range(14):
        for A in range(27):
            rhs = RepMatrix.zero(7)
            for B in range(27):
                v = store.phi_iAB[(i, A, B)]
                if v:
                    rhs = rhs + Y[B].scale(ComplexScalar(ZERO, v))
            assert commutator(H[i], Y[A]) == rhs, (i, A)


def test_ad_and_phi_brackets(store, derived):
    c = store.c_ijk
    for mats in (derived.ad, derived.Phi):
        n = mats[0].n
        for i in range(14):
            for j in range(i + 1, 14):
                rhs = RepMatrix.zero(n)
                for k in range(14):
                    v = c[(i, j, k)]
                    if v:
                        rhs = rhs + mats[k].scale(ComplexScalar(ZERO, v))
                assert commutator(mats[i], mats[j]) == rhs


def test_y_matrix_entries(store, derived):
    # (Y_A)_ab = -3 d_abA entrywise
    for A in range(27):
        for a in range(7):
            for b in range(7):
                assert derived.Y[A][a, b] == ComplexScalar(
                    store.d_abA[(a, b, A)] * rational(-3)
                )


def test_trace_ccc(store, derived):
    # tr(C_a C_b C_c) = i c_abc
    C = derived.C
    for a in range(7):
        for b in range(7):
            p = C[a] @ C[b]
            for c in range(7):
                assert (p @ C[c]).trace() == ComplexScalar(
                    ZERO, store.c_abc[(a, b, c)]
                )


def test_symmetry_patterns_of_derived(derived):
    for m in derived.H + derived.C:
        assert m.transpose() == -m
        assert m.is_hermitian()
    for m in derived.Y:
        assert m.transpose() == m
        assert m.is_hermitian()


def test_casimir_sums(derived):
    expected = {
        "ad": (derived.ad, rational(8)),
        "H": (derived.H, rational(4)),
        "C": (derived.C, rational(2)),
        "Phi": (derived.Phi, rational(28, 3)),
        "Y": (derived.Y, rational(54, 7)),
    }
    for name, (mats, val) in expected.items():
        n = mats[0].n
        acc = RepMatrix.zero(n)
        for m in mats:
            acc = acc + (m @ m)
        assert acc == RepMatrix.identity(n).scale(val), name


def test_product_law_xx(catalog, store):
    # x_i x_j = (2/7) delta_ij + (i/2) c_ijk x_k + (1/2) d_ijA y_A
    xs, ys = catalog.g2, catalog.y
    half = rational(1, 2)
    for i in range(14):
        for j in range(14):
            rhs = RepMatrix.zero(7)
            if i == j:
                rhs = rhs + RepMatrix.identity(7).scale(rational(2, 7))
            for k in range(14):
                v = store.c_ijk[(i, j, k)]
                if v:
                    rhs = rhs + xs[k].scale(ComplexScalar(ZERO, v * half))
            for A in range(27):
                v = store.d_ijA[(i, j, A)]
                if v:
                    rhs = rhs + ys[A].scale(v * half)
            assert (xs[i] @ xs[j]) == rhs, (i, j)


# -- serialization -------------------------------------------------------------------------


def test_tensor_round_trip(store, tmp_path):
    names = serialize_tensors(store, str(tmp_path))
    assert "c_ijk.txt" in names
    back = deserialize_tensors(str(tmp_path))
    for t1, t2 in zip(store.all_tensors(), back.all_tensors()):
        assert t1 == t2 and t1.name == t2.name


def test_psi_file_has_42_entries(store, tmp_path):
    text = tensor_to_text(store.psi_abc)
    lines = [l for l in text.splitlines() if l and not l.startswith(("#", "name="))]
    assert len(lines) == 42


def test_d_abc_header_dims(store):
    text = tensor_to_text(store.d_ABC)
    assert text.splitlines()[1] == "name=d_ABC rank=3 dims=27,27,27 indexbase=1"


def test_tensor_format_errors():
    with pytest.raises(FormatError):
        tensor_from_text("not a tensor\n")
    good = tensor_to_text(build_psi())
    with pytest.raises(FormatError):
        tensor_from_text(good.replace("indexbase=1", "indexbase=0"))
    with pytest.raises(FormatError):
        tensor_from_text(good + "8 1 1 (1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)\n")


def test_tensor_dense_semantics():
    t = Tensor("demo", (2, 2))
    assert t[(0, 1)] == ZERO
    t.add_at((0, 1), rational(3))
    t.add_at((0, 1), rational(-3))
    assert t.nonzero_count() == 0
