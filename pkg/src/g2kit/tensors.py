"""Invariant tensors of the product laws, and the matrix families derived
from them.

Index conventions (1-based in files and reports, 0-based internally):

* ``i, j, k``  run over 1..14  (the exceptional subalgebra),
* ``a, b, c``  run over 1..7   (the complement inside so(7)),
* ``A, B, C``  run over 1..27  (the symmetric completion).

Every tensor is extracted from the constructed matrices by an exact trace:

    c_ijk    = -i tr(x_i x_j x_k)        h_iab    = -i tr(x_i z_a z_b)
    c_abc    = -i tr(z_a z_b z_c)        d_ijA    =    tr(x_i x_j y_A)
    d_abA    =    tr(z_a z_b y_A)        d_iaA    =    tr(x_i z_a y_A)
    phi_iAB  = -i tr(x_i y_A y_B)        t_aAB    = -i tr(z_a y_A y_B)
    d_ABC    =    tr(y_A y_B y_C)

Each trace must come out purely real (after stripping the explicit i); a
nonzero residue in the other component signals a broken construction and
raises InternalConsistencyError.  c_abc turns out to be psi_abc/sqrt3 with
psi the totally antisymmetric octonion multiplication tensor.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import FormatError, InternalConsistencyError
from .linalg import RepMatrix, commutator
from .scalars import (
    CZERO,
    ComplexScalar,
    ExactScalar,
    ZERO,
    parse_complex,
    rational,
    render_real,
    sqrtq,
)

TENSOR_NAMES = (
    "c_ijk",
    "h_iab",
    "c_abc",
    "psi_abc",
    "d_ijA",
    "d_abA",
    "d_iaA",
    "phi_iAB",
    "t_aAB",
    "d_ABC",
)


class Tensor:
    """Dense-by-contract multi-index array of exact scalars.

    Zero entries are not stored; ``self[idx]`` returns the zero scalar for
    absent indices, so the array behaves densely.
    """

    __slots__ = ("name", "dims", "data")

    def __init__(self, name, dims, data=None):
        self.name = name
        self.dims = tuple(dims)
        self.data = {}
        if data:
            for idx, v in data.items() if isinstance(data, dict) else data:
                if v:
                    self.data[tuple(idx)] = v

    def __getitem__(self, idx):
        return self.data.get(idx, ZERO)

    def add_at(self, idx, v):
        cur = self.data.get(idx)
        s = v if cur is None else cur + v
        if s:
            self.data[idx] = s
        elif cur is not None:
            del self.data[idx]

    def items(self):
        return self.data.items()

    def sorted_items(self):
        return sorted(self.data.items())

    @property
    def rank(self):
        return len(self.dims)

    def nonzero_count(self):
        return len(self.data)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.dims == other.dims and self.data == other.data

    def __repr__(self):
        return "Tensor(%s, dims=%s, nnz=%d)" % (self.name, self.dims, len(self.data))


@dataclass(frozen=True)
class TensorStore:
    """All invariant tensors of the product laws, plus psi."""

    c_ijk: Tensor
    h_iab: Tensor
    c_abc: Tensor
    psi_abc: Tensor
    d_ijA: Tensor
    d_abA: Tensor
    d_iaA: Tensor
    phi_iAB: Tensor
    t_aAB: Tensor
    d_ABC: Tensor

    def all_tensors(self):
        return [getattr(self, n) for n in TENSOR_NAMES]

    def by_name(self, name):
        if name not in TENSOR_NAMES:
            raise KeyError(name)
        return getattr(self, name)


# -- sparse helpers over RepMatrix ---------------------------------------------


def sparse(mat):
    """Nonzero entries of a matrix as {(row, col): value}."""
    return {(i, j): v for i, j, v in mat.entries()}


def sparse_product(a, b):
    """Sparse product of two sparse 7x7 (or any) matrices."""
    rows = {}
    for (i, k), v in a.items():
        rows.setdefault(i, []).append((k, v))
    by_row_b = {}
    for (k, j), v in b.items():
        by_row_b.setdefault(k, []).append((j, v))
    out = {}
    for i, items in rows.items():
        for k, av in items:
            cols = by_row_b.get(k)
            if not cols:
                continue
            for j, bv in cols:
                key = (i, j)
                cur = out.get(key)
                s = av * bv if cur is None else cur + av * bv
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return out


def sparse_trace_with(ab, c):
    """tr((AB) C) given AB sparse and C sparse."""
    t = CZERO
    for (u, v), x in ab.items():
        y = c.get((v, u))
        if y is not None:
            t = t + x * y
    return t


# -- extraction ----------------------------------------------------------------------


def _strip_real(trace_value, what, idx):
    if trace_value.im:
        raise InternalConsistencyError(
            "%s at %s has imaginary residue %s" % (what, idx, trace_value.im)
        )
    return trace_value.re


def _strip_imag(trace_value, what, idx):
    # value defined through -i * trace: trace must be purely imaginary
    if trace_value.re:
        raise InternalConsistencyError(
            "%s at %s has real residue %s" % (what, idx, trace_value.re)
        )
    return trace_value.im


def extract_tensors(catalog):
    """All invariant tensors of the product laws, by exact traces."""
    xs = [sparse(m) for m in catalog.g2]
    zs = [sparse(m) for m in catalog.z]
    ys = [sparse(m) for m in catalog.y]

    xx = {(i, j): sparse_product(xs[i], xs[j]) for i in range(14) for j in range(14)}
    zz = {(a, b): sparse_product(zs[a], zs[b]) for a in range(7) for b in range(7)}
    yy = {(A, B): sparse_product(ys[A], ys[B]) for A in range(27) for B in range(27)}
    xz = {(i, a): sparse_product(xs[i], zs[a]) for i in range(14) for a in range(7)}

    c_ijk = Tensor("c_ijk", (14, 14, 14))
    for (i, j), p in xx.items():
        for k in range(14):
            v = _strip_imag(sparse_trace_with(p, xs[k]), "c_ijk", (i, j, k))
            if v:
                c_ijk.data[(i, j, k)] = v

    h_iab = Tensor("h_iab", (14, 7, 7))
    for i in range(14):
        for (a, b), p in zz.items():
            v = _strip_imag(sparse_trace_with(p, xs[i]), "h_iab", (i, a, b))
            if v:
                h_iab.data[(i, a, b)] = v

    c_abc = Tensor("c_abc", (7, 7, 7))
    for (a, b), p in zz.items():
        for c in range(7):
            v = _strip_imag(sparse_trace_with(p, zs[c]), "c_abc", (a, b, c))
            if v:
                c_abc.data[(a, b, c)] = v

    d_ijA = Tensor("d_ijA", (14, 14, 27))
    for (i, j), p in xx.items():
        for A in range(27):
            v = _strip_real(sparse_trace_with(p, ys[A]), "d_ijA", (i, j, A))
            if v:
                d_ijA.data[(i, j, A)] = v

    d_abA = Tensor("d_abA", (7, 7, 27))
    for (a, b), p in zz.items():
        for A in range(27):
            v = _strip_real(sparse_trace_with(p, ys[A]), "d_abA", (a, b, A))
            if v:
                d_abA.data[(a, b, A)] = v

    d_iaA = Tensor("d_iaA", (14, 7, 27))
    for (i, a), p in xz.items():
        for A in range(27):
            v = _strip_real(sparse_trace_with(p, ys[A]), "d_iaA", (i, a, A))
            if v:
                d_iaA.data[(i, a, A)] = v

    phi_iAB = Tensor("phi_iAB", (14, 27, 27))
    t_aAB = Tensor("t_aAB", (7, 27, 27))
    d_ABC = Tensor("d_ABC", (27, 27, 27))
    for (A, B), p in yy.items():
        for i in range(14):
            v = _strip_imag(sparse_trace_with(p, xs[i]), "phi_iAB", (i, A, B))
            if v:
                phi_iAB.data[(i, A, B)] = v
        for a in range(7):
            v = _strip_imag(sparse_trace_with(p, zs[a]), "t_aAB", (a, A, B))
            if v:
                t_aAB.data[(a, A, B)] = v
        for C in range(27):
            v = _strip_real(sparse_trace_with(p, ys[C]), "d_ABC", (A, B, C))
            if v:
                d_ABC.data[(A, B, C)] = v

    return TensorStore(
        c_ijk=c_ijk,
        h_iab=h_iab,
        c_abc=c_abc,
        psi_abc=build_psi(),
        d_ijA=d_ijA,
        d_abA=d_abA,
        d_iaA=d_iaA,
        phi_iAB=phi_iAB,
        t_aAB=t_aAB,
        d_ABC=d_ABC,
    )


#: ordered triples (1-based) carrying psi = +1
PSI_TRIPLES = ((1, 2, 3), (1, 4, 7), (1, 6, 5), (2, 4, 6), (2, 5, 7), (3, 5, 4), (3, 6, 7))


def build_psi():
    """The totally antisymmetric octonion multiplication tensor.

    +1 on the seven ordered triples above, extended by antisymmetry, zero
    elsewhere: 42 nonzero entries in all.
    """
    psi = Tensor("psi_abc", (7, 7, 7))
    one = rational(1)
    for triple in PSI_TRIPLES:
        base = tuple(t - 1 for t in triple)
        for perm in itertools.permutations(range(3)):
            idx = tuple(base[p] for p in perm)
            psi.data[idx] = one * perm_sign(perm)
    return psi


def perm_sign(perm):
    """Sign of a permutation given as a tuple of distinct integers."""
    sign = 1
    seen = [False] * len(perm)
    order = sorted(range(len(perm)), key=lambda t: perm[t])
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = order[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def epsilon7(indices):
    """Rank-7 totally antisymmetric symbol on 0-based indices; 0 on repeats."""
    if len(set(indices)) != 7:
        return 0
    return perm_sign(indices)


# -- derived matrix families --------------------------------------------------------------


@dataclass(frozen=True)
class DerivedMatrices:
    """Matrix families rebuilt from the tensors alone.

    h_sign records the sign choice in (H_i)_ab = h_sign * i * h_iab that
    makes the H family close with the structure constants; both sign
    conventions appear in circulation, and only one of them works.
    """

    H: list
    C: list
    Y: list
    ad: list
    Phi: list
    h_sign: int


def _antisym_family(tensor, count, dim, scale_sign):
    """Family of matrices (M_t)_uv = scale_sign * i * T[t,u,v]."""
    mats = []
    for t in range(count):
        entries = []
        for (tt, u, v), val in tensor.items():
            if tt == t:
                entries.append((u, v, ComplexScalar(ZERO, val * scale_sign)))
        mats.append(RepMatrix.from_entries(dim, entries))
    return mats


def build_derived_matrices(store):
    """H, C, Y, ad, Phi from the extracted tensors, with the H sign fixed by
    the bracket test.  Raises InternalConsistencyError if neither sign
    closes."""
    c14 = store.c_ijk
    for sign in (1, -1):
        H = _antisym_family(store.h_iab, 14, 7, sign)
        if _h_brackets_close(H, c14):
            break
    else:
        raise InternalConsistencyError(
            "no sign choice makes the H family close on the structure constants"
        )

    C = _antisym_family(store.c_abc, 7, 7, 1)
    ad = _antisym_family(store.c_ijk, 14, 14, -1)
    Phi = _antisym_family(store.phi_iAB, 14, 27, -1)

    minus3 = rational(-3)
    Y = []
    for A in range(27):
        entries = []
        for (a, b, AA), val in store.d_abA.items():
            if AA == A:
                entries.append((a, b, ComplexScalar(val * minus3)))
        Y.append(RepMatrix.from_entries(7, entries))

    return DerivedMatrices(H=H, C=C, Y=Y, ad=ad, Phi=Phi, h_sign=sign)


def _h_brackets_close(H, c_ijk):
    for i in range(14):
        for j in range(i + 1, 14):
            lhs = commutator(H[i], H[j])
            rhs = RepMatrix.zero(7)
            for k in range(14):
                coef = c_ijk[(i, j, k)]
                if coef:
                    rhs = rhs + H[k].scale(ComplexScalar(ZERO, coef))
            if lhs != rhs:
                return False
    return True


# -- serialization -------------------------------------------------------------------------
#
# Tensor file format v1:
#   # g2kit tensor v1
#   name=<name> rank=<r> dims=<d1,...,dr> indexbase=1
#   <i1> ... <ir> <complex-scalar>
# one line per nonzero entry, lexicographic index order, zeros omitted.

_MAGIC = "# g2kit tensor v1"


def tensor_to_text(tensor):
    lines = [
        _MAGIC,
        "name=%s rank=%d dims=%s indexbase=1"
        % (tensor.name, tensor.rank, ",".join(str(d) for d in tensor.dims)),
    ]
    for idx, val in tensor.sorted_items():
        lines.append(
            "%s %s" % (" ".join(str(t + 1) for t in idx), render_real(val))
        )
    return "\n".join(lines) + "\n"


def tensor_from_text(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != _MAGIC:
        raise FormatError("missing tensor magic line", 1, lines[0] if lines else "")
    if len(lines) < 2:
        raise FormatError("missing tensor header", 2)
    header = {}
    for field in lines[1].split():
        if "=" not in field:
            raise FormatError("bad header field", 2, field)
        key, _, val = field.partition("=")
        header[key] = val
    for key in ("name", "rank", "dims", "indexbase"):
        if key not in header:
            raise FormatError("header missing %s" % key, 2, lines[1])
    try:
        rank = int(header["rank"])
        dims = tuple(int(d) for d in header["dims"].split(","))
        base = int(header["indexbase"])
    except ValueError as exc:
        raise FormatError("bad header value: %s" % exc, 2, lines[1])
    if base != 1 or len(dims) != rank:
        raise FormatError("inconsistent tensor header", 2, lines[1])
    tensor = Tensor(header["name"], dims)
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != rank + 1:
            raise FormatError("entry needs %d indices and a scalar" % rank, lineno, line)
        try:
            idx = tuple(int(f) - 1 for f in fields[:rank])
        except ValueError:
            raise FormatError("bad index", lineno, line)
        for t, d in zip(idx, dims):
            if not 0 <= t < d:
                raise FormatError("index out of range", lineno, line)
        z = parse_complex(fields[rank], lineno)
        if z.im:
            raise FormatError("tensor entries must be real", lineno, fields[rank])
        if z.re:
            tensor.data[idx] = z.re
    return tensor


def serialize_tensors(store, directory):
    """Write one file per tensor into ``directory``; returns the file names."""
    os.makedirs(directory, exist_ok=True)
    names = []
    for tensor in store.all_tensors():
        fname = tensor.name + ".txt"
        with open(os.path.join(directory, fname), "w") as fh:
            fh.write(tensor_to_text(tensor))
        names.append(fname)
    return names


def deserialize_tensors(directory):
    """Read back a TensorStore written by serialize_tensors."""
    loaded = {}
    for name in TENSOR_NAMES:
        path = os.path.join(directory, name + ".txt")
        with open(path) as fh:
            tensor = tensor_from_text(fh.read())
        if tensor.name != name:
            raise FormatError("tensor name mismatch in %s" % path, 2, tensor.name)
        loaded[name] = tensor
    return TensorStore(**loaded)
