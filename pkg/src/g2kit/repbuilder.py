"""Construction of the 7x7 defining representations.

The constructions follow single-array placement tables: one 7x7 array whose
lower triangle holds, for every lowering operator, the positions and
coefficients of its matrix; the diagonal holds the Cartan matrices; the upper
triangle follows by hermiticity.  From the lowering/raising matrices the
hermitian trace-orthonormal family is formed via

    sqrt(2) e_{+-alpha} = u_alpha +- i v_alpha.

Four families are produced, all 7x7, hermitian, traceless, normalized to
tr(m^2) = 2 and mutually trace-orthogonal:

* 21 matrices of so(7) = b3 (3 Cartan + 9 u + 9 v),
* 14 matrices of its exceptional subalgebra g2 (2 Cartan + 6 u + 6 v),
* 7 matrices z_a spanning the b3 - g2 complement,
* 27 symmetric matrices y_alpha completing a 48-element basis of the
  traceless hermitian 7x7 matrices (an su(7) lambda family).

Index conventions are fixed here once and for all: u blocks before v blocks,
each in the root order of the tables below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .linalg import RepMatrix
from .scalars import CZERO, ComplexScalar, ExactScalar, Q, ZERO, rational, sqrtq

#: cos/sin of the mixing angle used throughout: c = sqrt(2/3), s = sqrt(1/3).
C_CONST = sqrtq(2, 3)
S_CONST = sqrtq(1, 3)

_HALF_SQRT2 = sqrtq(1, 2)  # 1/sqrt(2)


# -- root systems ----------------------------------------------------------------

B3_ROOT_ORDER = ("1", "2", "3", "12", "23", "123", "233", "1233", "12233")

#: expansion of each positive b3 root in simple roots (R1, R2, R3)
B3_EXPANSION = {
    "1": (1, 0, 0),
    "2": (0, 1, 0),
    "3": (0, 0, 1),
    "12": (1, 1, 0),
    "23": (0, 1, 1),
    "123": (1, 1, 1),
    "233": (0, 1, 2),
    "1233": (1, 1, 2),
    "12233": (1, 2, 2),
}

_B3_SIMPLE = {
    "1": (Q(1), Q(-1), Q(0)),
    "2": (Q(0), Q(1), Q(-1)),
    "3": (Q(0), Q(0), Q(1)),
}

G2_ROOT_ORDER = ("1", "2", "12", "112", "1112", "11122")

G2_EXPANSION = {
    "1": (1, 0),
    "2": (0, 1),
    "12": (1, 1),
    "112": (2, 1),
    "1112": (3, 1),
    "11122": (3, 2),
}

_G2_SIMPLE = {
    "1": (sqrtq(1, 6), -_HALF_SQRT2),
    "2": (ZERO, sqrtq(2)),
}


@dataclass(frozen=True)
class RootSystemData:
    """Positive-root data for one of the two algebras."""

    order: tuple
    simple: dict
    expansion: dict

    def vector(self, label):
        """Root vector as the stated sum of simple roots."""
        coeffs = self.expansion[label]
        simples = [self.simple[s] for s in sorted(self.simple)]
        dim = len(next(iter(self.simple.values())))
        out = []
        for component in range(dim):
            acc = None
            for k, simple_vec in zip(coeffs, simples):
                term = simple_vec[component] * k
                acc = term if acc is None else acc + term
            out.append(acc)
        return tuple(out)

    def height(self, label):
        return sum(self.expansion[label])

    def norm_squared(self, label):
        return sum((x * x for x in self.vector(label)), start=_zero_like(self))

    def is_short(self, label):
        # long roots are normalized to norm-squared 2 in both algebras
        n2 = self.norm_squared(label)
        if isinstance(n2, ExactScalar):
            return n2 != rational(2)
        return n2 != 2


def _zero_like(rs):
    sample = next(iter(rs.simple.values()))[0]
    return sample - sample


def b3_root_system():
    return RootSystemData(B3_ROOT_ORDER, dict(_B3_SIMPLE), dict(B3_EXPANSION))


def g2_root_system():
    return RootSystemData(G2_ROOT_ORDER, dict(_G2_SIMPLE), dict(G2_EXPANSION))


# -- placement tables --------------------------------------------------------------
#
# (row, col, coefficient) triples, 1-based, giving the lowering matrix of each
# positive root; the raising matrix is the transpose.

_ONE = rational(1)

B3_LOWERING = {
    "1": ((2, 1, _ONE), (7, 6, -_ONE)),
    "2": ((3, 2, _ONE), (6, 5, -_ONE)),
    "3": ((4, 3, _ONE), (5, 4, -_ONE)),
    "12": ((3, 1, _ONE), (7, 5, -_ONE)),
    "23": ((4, 2, _ONE), (6, 4, -_ONE)),
    "123": ((4, 1, _ONE), (7, 4, -_ONE)),
    "233": ((5, 2, _ONE), (6, 3, -_ONE)),
    "1233": ((5, 1, _ONE), (7, 3, -_ONE)),
    "12233": ((6, 1, _ONE), (7, 2, -_ONE)),
}

B3_CARTAN_DIAGS = (
    (1, 0, 0, 0, 0, 0, -1),
    (0, 1, 0, 0, 0, -1, 0),
    (0, 0, 1, 0, -1, 0, 0),
)

G2_LOWERING = {
    "1": ((2, 1, S_CONST), (4, 3, C_CONST), (5, 4, -C_CONST), (7, 6, -S_CONST)),
    "2": ((3, 2, _ONE), (6, 5, -_ONE)),
    "12": ((3, 1, S_CONST), (4, 2, -C_CONST), (6, 4, C_CONST), (7, 5, -S_CONST)),
    "112": ((4, 1, C_CONST), (5, 2, S_CONST), (6, 3, -S_CONST), (7, 4, -C_CONST)),
    "1112": ((5, 1, _ONE), (7, 3, -_ONE)),
    "11122": ((6, 1, _ONE), (7, 2, -_ONE)),
}

_S6 = sqrtq(1, 6)

G2_CARTAN_DIAGS = (
    (C_CONST, _S6, _S6, ZERO, -_S6, -_S6, -C_CONST),
    (ZERO, _HALF_SQRT2, -_HALF_SQRT2, ZERO, _HALF_SQRT2, -_HALF_SQRT2, ZERO),
)

#: the complement generators: h3 on the diagonal plus three primed lowerings
Z_H3_DIAG = tuple(S_CONST * k for k in (1, -1, -1, 0, 1, 1, -1))

Z_LOWERING = {
    "1": ((2, 1, -C_CONST), (4, 3, S_CONST), (5, 4, -S_CONST), (7, 6, C_CONST)),
    "2": ((3, 1, C_CONST), (4, 2, S_CONST), (6, 4, -S_CONST), (7, 5, -C_CONST)),
    "3": ((4, 1, S_CONST), (5, 2, -C_CONST), (6, 3, C_CONST), (7, 4, -S_CONST)),
}

Y_DIAGS = (
    tuple(_S6 * k for k in (2, -1, -1, 0, -1, -1, 2)),
    tuple(_HALF_SQRT2 * k for k in (0, 1, -1, 0, -1, 1, 0)),
    tuple(sqrtq(1, 21) * k for k in (1, 1, 1, -6, 1, 1, 1)),
)

_SQRT2 = sqrtq(2)

Y_LOWERING = {
    1: ((2, 1, _ONE), (7, 6, _ONE)),
    2: ((3, 2, _ONE), (6, 5, _ONE)),
    3: ((4, 3, _ONE), (5, 4, _ONE)),
    4: ((3, 1, _ONE), (7, 5, _ONE)),
    5: ((4, 2, _ONE), (6, 4, _ONE)),
    6: ((4, 1, _ONE), (7, 4, _ONE)),
    7: ((5, 2, _ONE), (6, 3, _ONE)),
    8: ((5, 1, _ONE), (7, 3, _ONE)),
    9: ((6, 1, _ONE), (7, 2, _ONE)),
    10: ((7, 1, _SQRT2),),
    11: ((6, 2, _SQRT2),),
    12: ((5, 3, _SQRT2),),
}

#: embedding of the g2 generators inside the b3 family.  The Cartan line for
#: h1 carries sqrt(1/6): the sqrt(1/3) sometimes quoted for it fails both the
#: normalization tr(h1^2) = 2 and the bracket eigenvalues, so the value here
#: is the one forced by the construction.
G2_IN_B3_CARTAN = (
    ((0, rational(2) * _S6), (1, _S6), (2, _S6)),  # h1 = (2k1 + k2 + k3)/sqrt6
    ((1, _HALF_SQRT2), (2, -_HALF_SQRT2)),  # h2 = (k2 - k3)/sqrt2
)

G2_IN_B3_LOWERING = {
    "1": (("1", S_CONST), ("3", C_CONST)),
    "2": (("2", _ONE),),
    "12": (("12", S_CONST), ("23", -C_CONST)),
    "112": (("123", C_CONST), ("233", S_CONST)),
    "1112": (("1233", _ONE),),
    "11122": (("12233", _ONE),),
}


# -- matrix assembly -----------------------------------------------------------------


def lowering_matrix(placements):
    """7x7 lowering matrix from (row, col, coefficient) triples."""
    return RepMatrix.from_entries(
        7, ((r - 1, c - 1, ComplexScalar(v)) for r, c, v in placements)
    )


def _hermitian_pair(placements):
    """The (u, v) hermitian pair of one lowering placement table."""
    u_entries = []
    v_entries = []
    for r, c, coef in placements:
        w = coef * _HALF_SQRT2
        u_entries.append((r - 1, c - 1, ComplexScalar(w)))
        u_entries.append((c - 1, r - 1, ComplexScalar(w)))
        v_entries.append((r - 1, c - 1, ComplexScalar(ZERO, w)))
        v_entries.append((c - 1, r - 1, ComplexScalar(ZERO, -w)))
    return RepMatrix.from_entries(7, u_entries), RepMatrix.from_entries(7, v_entries)


def _family(cartan_diags, lowering, order):
    """Cartan block, then all u matrices, then all v matrices."""
    mats = [RepMatrix.diag(d) for d in cartan_diags]
    pairs = [_hermitian_pair(lowering[label]) for label in order]
    mats.extend(u for u, _ in pairs)
    mats.extend(v for _, v in pairs)
    return mats


def build_b3_defining():
    """The 21 matrices of the so(7) defining representation."""
    return _family(
        [tuple(rational(k) for k in d) for d in B3_CARTAN_DIAGS],
        B3_LOWERING,
        B3_ROOT_ORDER,
    )


def build_g2_defining(b3=None):
    """The 14 matrices of the exceptional subalgebra, embedded in b3.

    Postcondition (hard): each matrix equals the documented linear
    combination of b3 matrices; violation raises InternalConsistencyError.
    """
    mats = _family(G2_CARTAN_DIAGS, G2_LOWERING, G2_ROOT_ORDER)
    if b3 is None:
        b3 = build_b3_defining()
    _check_embedding(mats, b3)
    return mats


def _check_embedding(g2, b3):
    n_b3 = len(B3_ROOT_ORDER)
    for r, combo in enumerate(G2_IN_B3_CARTAN):
        expect = RepMatrix.zero(7)
        for idx, coef in combo:
            expect = expect + b3[idx].scale(coef)
        if g2[r] != expect:
            raise InternalConsistencyError(
                "g2 Cartan matrix %d does not match its b3 combination" % (r + 1)
            )
    for k, label in enumerate(G2_ROOT_ORDER):
        for block, offset_g2, offset_b3 in (("u", 2, 3), ("v", 8, 3 + n_b3)):
            expect = RepMatrix.zero(7)
            for b3_label, coef in G2_IN_B3_LOWERING[label]:
                expect = expect + b3[offset_b3 + B3_ROOT_ORDER.index(b3_label)].scale(
                    coef
                )
            if g2[offset_g2 + k] != expect:
                raise InternalConsistencyError(
                    "g2 %s matrix for root %s does not match its b3 combination"
                    % (block, label)
                )


def build_z():
    """The 7 matrices z_a spanning the b3 - g2 complement.

    Ordering: z4 is the diagonal h3; the primed lowering operators n = 1, 2, 3
    supply (z7, z1), (z6, z2), (z5, z3) as their (u, v)-style pairs.
    """
    pairs = {n: _hermitian_pair(Z_LOWERING[n]) for n in ("1", "2", "3")}
    z = [None] * 7
    z[3] = RepMatrix.diag(Z_H3_DIAG)
    z[6], z[0] = pairs["1"]
    z[5], z[1] = pairs["2"]
    z[4], z[2] = pairs["3"]
    return z


def build_y():
    """The 27 symmetric matrices completing the su(7) lambda family.

    y1..y3 are diagonal; for n = 1..12 the pair (y_{2n+2}, y_{2n+3}) comes
    from the n-th placement row, so the family ends at y27.
    """
    y = [RepMatrix.diag(d) for d in Y_DIAGS]
    for n in range(1, 13):
        u, v = _hermitian_pair(Y_LOWERING[n])
        y.append(u)
        y.append(v)
    return y


def build_m():
    """The reversal matrix: ones down the main antidiagonal."""
    entries = [(i, 6 - i, ComplexScalar(rational(1))) for i in range(7)]
    return RepMatrix.from_entries(7, entries)


@dataclass(frozen=True)
class BasisCatalog:
    """All constructed matrices plus the constants that enter them."""

    b3: list
    g2: list
    z: list
    y: list
    m: RepMatrix

    @property
    def c(self):
        return C_CONST

    @property
    def s(self):
        return S_CONST

    def all48(self):
        """The 48-matrix union (g2, z, y) in canonical order."""
        return list(self.g2) + list(self.z) + list(self.y)


def build_catalog():
    """Construct every family once; safe to share read-only afterwards."""
    b3 = build_b3_defining()
    return BasisCatalog(
        b3=b3,
        g2=build_g2_defining(b3),
        z=build_z(),
        y=build_y(),
        m=build_m(),
    )
