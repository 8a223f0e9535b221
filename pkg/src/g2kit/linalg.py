"""Dense matrices over the exact complex field, tensor products, exact
characteristic polynomials, and the small polynomial rings used by the
invariant machinery.

Matrices are immutable-by-convention dense grids.  All matrices in this
package are at most 189x189 (the 7*27 tensor-product construction), so dense
storage is fine; the multiplication kernel skips zero entries, which is what
actually matters for speed because most of these matrices are very sparse.
"""

from __future__ import annotations

from .errors import FormatError, InternalConsistencyError
from .scalars import (
    CZERO,
    CONE,
    ZERO,
    ComplexScalar,
    ExactScalar,
    parse_complex,
    render_complex,
)


class RepMatrix:
    """A dense n x n matrix of ComplexScalar entries."""

    __slots__ = ("n", "rows", "_nz_rows")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix must be square")
        self._nz_rows = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n):
        return RepMatrix([[CZERO] * n for _ in range(n)])

    @staticmethod
    def identity(n):
        rows = [[CZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = CONE
        return RepMatrix(rows)

    @staticmethod
    def diag(entries):
        entries = list(entries)
        n = len(entries)
        rows = [[CZERO] * n for _ in range(n)]
        for i, e in enumerate(entries):
            if isinstance(e, ExactScalar):
                e = ComplexScalar(e)
            rows[i][i] = e
        return RepMatrix(rows)

    @staticmethod
    def from_entries(n, entries):
        """Build from an iterable of (row, col, ComplexScalar), 0-based."""
        rows = [[CZERO] * n for _ in range(n)]
        for r, c, v in entries:
            rows[r][c] = rows[r][c] + v
        return RepMatrix(rows)

    # -- helpers --------------------------------------------------------------

    def _nonzeros_by_row(self):
        if self._nz_rows is None:
            self._nz_rows = [
                [(j, v) for j, v in enumerate(row) if v] for row in self.rows
            ]
        return self._nz_rows

    def entries(self):
        """Iterate (row, col, value) over nonzero entries, row-major."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def __getitem__(self, rc):
        return self.rows[rc[0]][rc[1]]

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other):
        self._check_dim(other)
        return RepMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        self._check_dim(other)
        return RepMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return RepMatrix([[-a for a in row] for row in self.rows])

    def scale(self, s):
        """Multiply every entry by a scalar (ComplexScalar, ExactScalar, int)."""
        return RepMatrix([[v * s if v else v for v in row] for row in self.rows])

    def __matmul__(self, other):
        self._check_dim(other)
        n = self.n
        bnz = other._nonzeros_by_row()
        out = [[CZERO] * n for _ in range(n)]
        for i, arow in enumerate(self._nonzeros_by_row()):
            orow = out[i]
            for k, a in arow:
                for j, b in bnz[k]:
                    orow[j] = orow[j] + a * b
        return RepMatrix(out)

    def transpose(self):
        n = self.n
        return RepMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)])

    def dagger(self):
        n = self.n
        return RepMatrix(
            [[self.rows[j][i].conjugate() for j in range(n)] for i in range(n)]
        )

    def trace(self):
        t = CZERO
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def _check_dim(self, other):
        if not isinstance(other, RepMatrix) or other.n != self.n:
            raise ValueError("dimension mismatch")

    # -- predicates --------------------------------------------------------------

    def is_zero(self):
        return all(not v for row in self.rows for v in row)

    def is_hermitian(self):
        return self == self.dagger()

    def is_traceless(self):
        return not self.trace()

    def __eq__(self, other):
        if not isinstance(other, RepMatrix) or other.n != self.n:
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return "RepMatrix(n=%d, nnz=%d)" % (
            self.n,
            sum(1 for _ in self.entries()),
        )


def commutator(a, b):
    return (a @ b) - (b @ a)


def anticommutator(a, b):
    return (a @ b) + (b @ a)


def kron(a, b):
    """Tensor product with row-major index pairing (i-1)*m + j."""
    m = b.n
    n = a.n * m
    out = [[CZERO] * n for _ in range(n)]
    for i, k, av in a.entries():
        for j, l, bv in b.entries():
            out[i * m + j][k * m + l] = av * bv
    return RepMatrix(out)


def partial_trace_first(mat, first_dim):
    """Trace out the leading tensor factor of dimension ``first_dim``.

    For a matrix acting on V (x) W with dim V = first_dim, returns the
    dim W square matrix with entries sum_v M[(v,i),(v,j)].
    """
    if mat.n % first_dim:
        raise ValueError("dimension %d not divisible by %d" % (mat.n, first_dim))
    m = mat.n // first_dim
    out = [[CZERO] * m for _ in range(m)]
    for v in range(first_dim):
        base = v * m
        rows = mat.rows
        for i in range(m):
            src = rows[base + i]
            orow = out[i]
            for j in range(m):
                x = src[base + j]
                if x:
                    orow[j] = orow[j] + x
    return RepMatrix(out)


def mat_pow(a, k):
    result = RepMatrix.identity(a.n)
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


# -- characteristic polynomials -------------------------------------------------


class UniPoly:
    """Univariate polynomial with ExactScalar coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, a):
        """p(A) for a square matrix A."""
        acc = RepMatrix.zero(a.n)
        for c in reversed(self.coeffs):
            acc = (acc @ a) + RepMatrix.identity(a.n).scale(c)
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append("(%s)" % c)
            elif k == 1:
                terms.append("(%s)*t" % c)
            else:
                terms.append("(%s)*t^%d" % (c, k))
        return " + ".join(terms)

    def __repr__(self):
        return "UniPoly(%s)" % (self,)


def char_poly_generic(mat, one):
    """Monic characteristic polynomial coefficients by Faddeev-LeVerrier.

    Works over any commutative ring whose elements support +, -, *, and
    division by a Python int; ``one`` is the ring unit.  Returns the list
    [c_0, ..., c_n] with c_n = one.  Division occurs only by integers, which
    is exact in characteristic zero.
    """
    n = mat.n
    zero = one - one
    coeffs = [zero] * (n + 1)
    coeffs[n] = one

    m_rows = None  # M_0 = 0
    rows = mat.rows
    for k in range(1, n + 1):
        if m_rows is None:
            am = [row[:] for row in rows]
        else:
            am = []
            for i in range(n):
                arow = rows[i]
                nz = [(t, a) for t, a in enumerate(arow) if a]
                new = [zero] * n
                for t, a in nz:
                    mrow = m_rows[t]
                    for j in range(n):
                        b = mrow[j]
                        if b:
                            new[j] = new[j] + a * b
                am.append(new)
        tr = zero
        for i in range(n):
            tr = tr + am[i][i]
        c = -(tr / k)
        coeffs[n - k] = c
        if k < n:
            m_rows = [
                [am[i][j] + c if i == j else am[i][j] for j in range(n)]
                for i in range(n)
            ]
    return coeffs


def char_poly(mat):
    """Characteristic polynomial of a ComplexScalar matrix as a UniPoly.

    The coefficients must come out real (true for every matrix this package
    constructs); a nonzero imaginary residue raises InternalConsistencyError.
    """
    coeffs = char_poly_generic(mat, CONE)
    real = []
    for c in coeffs:
        if c.im:
            raise InternalConsistencyError(
                "characteristic coefficient has imaginary part: %s" % c
            )
        real.append(c.re)
    return UniPoly(real)


def char_poly_from_diagonal(diag_entries, one=None):
    """Product of (t - d) over the diagonal as coefficient list, low first.

    An independent route to the characteristic polynomial for diagonal
    matrices; ring-generic like char_poly_generic.
    """
    entries = list(diag_entries)
    if one is None:
        one = CONE
    zero = one - one
    coeffs = [one]
    for d in entries:
        nxt = [zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * d
        coeffs = nxt
    return coeffs


# -- bivariate polynomials --------------------------------------------------------


class BivariatePoly:
    """Polynomial in the two slice variables with ExactScalar coefficients.

    Stored as a map (deg_a, deg_b) -> coefficient with no explicit zeros.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    self.terms[key] = self.terms.get(key, ZERO) + c
            self.terms = {k: v for k, v in self.terms.items() if v}

    @staticmethod
    def constant(c):
        if isinstance(c, int):
            c = ExactScalar.from_rational(c)
        return BivariatePoly({(0, 0): c} if c else {})

    @staticmethod
    def variable_a():
        from .scalars import ONE

        return BivariatePoly({(1, 0): ONE})

    @staticmethod
    def variable_b():
        from .scalars import ONE

        return BivariatePoly({(0, 1): ONE})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = BivariatePoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        res = BivariatePoly()
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            if not other:
                return BivariatePoly()
            res = BivariatePoly()
            res.terms = {k: c * other for k, c in self.terms.items()}
            return res
        other = _as_bipoly(other)
        if other is NotImplemented:
            return other
        out = {}
        for (da, db), c in self.terms.items():
            for (ea, eb), d in other.terms.items():
                k = (da + ea, db + eb)
                s = out.get(k, ZERO) + c * d
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = BivariatePoly()
        res.terms = out
        return res

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, int):
            res = BivariatePoly()
            res.terms = {key: c / k for key, c in self.terms.items()}
            return res
        if isinstance(k, ExactScalar):
            inv = k.invert()
            return self * inv
        return NotImplemented

    def __pow__(self, n):
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, a, b):
        """Evaluate at exact scalars (or ints), returning an ExactScalar."""
        if isinstance(a, int):
            a = ExactScalar.from_rational(a)
        if isinstance(b, int):
            b = ExactScalar.from_rational(b)
        acc = ZERO
        for (da, db), c in self.terms.items():
            acc = acc + c * a**da * b**db
        return acc

    def degree(self):
        return max((da + db for da, db in self.terms), default=-1)

    def __eq__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (da, db) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[0])):
            c = self.terms[(da, db)]
            mono = "".join(
                s
                for s, d in (("a^%d" % da, da), ("b^%d" % db, db))
                if d
            )
            parts.append("(%s)%s" % (c, mono))
        return " + ".join(parts)

    def __repr__(self):
        return "BivariatePoly(%s)" % self


def _as_bipoly(x):
    if isinstance(x, BivariatePoly):
        return x
    if isinstance(x, (int, ExactScalar)):
        return BivariatePoly.constant(x)
    return NotImplemented


# -- generic square matrices over a ring (used for slice polynomials) -------------


class RingMatrix:
    """Minimal dense square matrix over any commutative ring.

    Used for matrices of BivariatePoly entries on the Cartan slice; mirrors
    the small part of the RepMatrix interface that char_poly_generic needs.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.n = len(self.rows)

    def __matmul__(self, other):
        n = self.n
        out = []
        for i in range(n):
            arow = self.rows[i]
            nz = [(k, a) for k, a in enumerate(arow) if a]
            new = []
            for j in range(n):
                acc = None
                for k, a in nz:
                    b = other.rows[k][j]
                    if b:
                        term = a * b
                        acc = term if acc is None else acc + term
                if acc is None:
                    acc = arow[0] - arow[0]  # ring zero
                new.append(acc)
            out.append(new)
        return RingMatrix(out)

    def trace(self):
        t = self.rows[0][0] - self.rows[0][0]
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t


# -- matrix text dump ---------------------------------------------------------------
#
# Format: header "matrix n=<n>", then one line per nonzero entry
# "<row> <col> <scalar>" with 1-based indices in lexicographic order.


def matrix_to_text(mat):
    lines = ["matrix n=%d" % mat.n]
    for i, j, v in mat.entries():
        lines.append("%d %d %s" % (i + 1, j + 1, render_complex(v)))
    return "\n".join(lines) + "\n"


def matrices_to_text(mats):
    return "".join(matrix_to_text(m) for m in mats)


def matrices_from_text(text):
    mats = []
    n = None
    entries = []
    lineno = 0

    def flush():
        if n is not None:
            mats.append(RepMatrix.from_entries(n, entries))

    for raw in text.splitlines():
        lineno += 1
        line = raw.strip()
        if not line:
            continue
        if line.startswith("matrix "):
            flush()
            entries = []
            fields = line.split()
            if len(fields) != 2 or not fields[1].startswith("n="):
                raise FormatError("bad matrix header", lineno, line)
            try:
                n = int(fields[1][2:])
            except ValueError:
                raise FormatError("bad matrix dimension", lineno, fields[1])
            continue
        if n is None:
            raise FormatError("entry before matrix header", lineno, line)
        fields = line.split()
        if len(fields) != 3:
            raise FormatError("entry needs row, col, scalar", lineno, line)
        try:
            r, c = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError("bad index", lineno, line)
        if not (1 <= r <= n and 1 <= c <= n):
            raise FormatError("index out of range", lineno, line)
        entries.append((r - 1, c - 1, parse_complex(fields[2], lineno)))
    flush()
    return mats
