"""Exact arithmetic in the real field Q(sqrt2, sqrt3, sqrt7) and its
complexification.

An :class:`ExactScalar` is a vector of eight rationals against the fixed
radical basis

    (1, sqrt2, sqrt3, sqrt6, sqrt7, sqrt14, sqrt21, sqrt42),

closed under multiplication because products of basis radicals reduce back
onto the basis with an integer square factor extracted (sqrt2*sqrt3 = sqrt6,
sqrt6*sqrt14 = 2*sqrt21, ...).  Every matrix entry and tensor component in
this package lives in this field (or in its complexification
:class:`ComplexScalar`), so all comparisons are exact: there are no
tolerances anywhere.

Rationals are arbitrary precision (gmpy2.mpq when available, else
fractions.Fraction), stored in lowest terms with positive denominator.
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as Q

from .errors import FormatError

#: Squarefree parts of the eight basis radicals, in canonical order.
RADICALS = (1, 2, 3, 6, 7, 14, 21, 42)

_RAD_INDEX = {r: i for i, r in enumerate(RADICALS)}

_Q0 = Q(0)
_Q1 = Q(1)


def _build_mul_table():
    # sqrt(r_i)*sqrt(r_j) = g*sqrt((r_i/g)*(r_j/g)) with g = gcd(r_i, r_j)
    table = []
    for ri in RADICALS:
        row = []
        for rj in RADICALS:
            g = math.gcd(ri, rj)
            row.append((_RAD_INDEX[(ri // g) * (rj // g)], g))
        table.append(tuple(row))
    return tuple(table)


_MUL = _build_mul_table()


class ExactScalar:
    """An element of Q(sqrt2, sqrt3, sqrt7), canonical and immutable.

    Two scalars are equal iff all eight coefficients agree, so ``==`` is an
    exact zero-tolerance test.
    """

    __slots__ = ("_c", "_nz", "_hash")

    def __init__(self, coeffs):
        self._c = tuple(coeffs)
        if len(self._c) != 8:
            raise ValueError("need exactly 8 coefficients")
        self._nz = tuple((i, c) for i, c in enumerate(self._c) if c)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_rational(p, q=1):
        """Rational p/q as a field element."""
        return ExactScalar((Q(p) / Q(q), _Q0, _Q0, _Q0, _Q0, _Q0, _Q0, _Q0))

    @staticmethod
    def sqrt_rational(p, q=1):
        """The square root of p/q, when it lies in the field.

        Valid whenever p*q factors as m**2 * r with r one of the eight basis
        radicals; raises ValueError otherwise.
        """
        p, q = int(p), int(q)
        if q < 0:
            p, q = -p, -q
        if p < 0 or q == 0:
            raise ValueError("sqrt argument must be a nonnegative rational")
        if p == 0:
            return ZERO
        m, r = _sqrt_decompose(p * q)
        coeffs = [_Q0] * 8
        coeffs[_RAD_INDEX[r]] = Q(m, q)
        return ExactScalar(coeffs)

    # -- predicates --------------------------------------------------------

    @property
    def coefficients(self):
        return self._c

    def __bool__(self):
        return bool(self._nz)

    @property
    def is_rational(self):
        return all(i == 0 for i, _ in self._nz)

    def rational_value(self):
        """The value as a rational; raises ValueError if irrational."""
        if not self.is_rational:
            raise ValueError("scalar is not rational: %s" % self)
        return self._c[0]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = ExactScalar.from_rational(other)
        elif not isinstance(other, ExactScalar):
            return NotImplemented
        if not other._nz:
            return self
        if not self._nz:
            return other
        a, b = self._c, other._c
        return ExactScalar(tuple(a[i] + b[i] for i in range(8)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = ExactScalar.from_rational(other)
        elif not isinstance(other, ExactScalar):
            return NotImplemented
        if not other._nz:
            return self
        a, b = self._c, other._c
        return ExactScalar(tuple(a[i] - b[i] for i in range(8)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        if not self._nz:
            return self
        return ExactScalar(tuple(-c for c in self._c))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0 or not self._nz:
                return ZERO
            if other == 1:
                return self
            q = Q(other)
            return ExactScalar(tuple(c * q for c in self._c))
        if not isinstance(other, ExactScalar):
            if type(other) is type(_Q0):
                return ExactScalar(tuple(c * other for c in self._c))
            return NotImplemented
        nza, nzb = self._nz, other._nz
        if not nza or not nzb:
            return ZERO
        if len(nza) == 1 and nza[0][0] == 0:
            q = nza[0][1]
            return ExactScalar(tuple(q * c for c in other._c))
        if len(nzb) == 1 and nzb[0][0] == 0:
            q = nzb[0][1]
            return ExactScalar(tuple(q * c for c in self._c))
        out = [_Q0] * 8
        for i, a in nza:
            row = _MUL[i]
            for j, b in nzb:
                k, m = row[j]
                out[k] += a * b * m
        return ExactScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division of exact scalar by zero")
            q = Q(1, other)
            return ExactScalar(tuple(c * q for c in self._c))
        if isinstance(other, ExactScalar):
            return self * other.invert()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self):
        """Multiplicative inverse, by solving the 8x8 rational system for
        multiplication by self.  Raises ZeroDivisionError on zero."""
        if not self._nz:
            raise ZeroDivisionError("inverse of zero exact scalar")
        if len(self._nz) == 1:
            # single radical term: 1/(a*sqrt(r)) = sqrt(r)/(a*r)
            i, a = self._nz[0]
            coeffs = [_Q0] * 8
            coeffs[i] = Q(1) / (a * RADICALS[i])
            return ExactScalar(coeffs)
        cols = []
        for j in range(8):
            col = [_Q0] * 8
            for i, a in self._nz:
                k, m = _MUL[i][j]
                col[k] += a * m
            cols.append(col)
        # Gaussian elimination on the multiplication matrix, rhs = e0.
        mat = [[cols[j][i] for j in range(8)] for i in range(8)]
        rhs = [_Q1] + [_Q0] * 7
        for p in range(8):
            piv = next(r for r in range(p, 8) if mat[r][p])
            if piv != p:
                mat[p], mat[piv] = mat[piv], mat[p]
                rhs[p], rhs[piv] = rhs[piv], rhs[p]
            inv = 1 / mat[p][p]
            mat[p] = [v * inv for v in mat[p]]
            rhs[p] = rhs[p] * inv
            for r in range(8):
                if r != p and mat[r][p]:
                    f = mat[r][p]
                    mat[r] = [mat[r][c] - f * mat[p][c] for c in range(8)]
                    rhs[r] = rhs[r] - f * rhs[p]
        return ExactScalar(rhs)

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self._c == other._c
        if isinstance(other, int):
            return self._c[0] == other and len(self._nz) <= 1 and (
                not self._nz or self._nz[0][0] == 0)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._nz:
            return "0"
        parts = []
        for i, c in self._nz:
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append("sqrt%d" % RADICALS[i])
            elif c == -1:
                parts.append("-sqrt%d" % RADICALS[i])
            else:
                parts.append("%s*sqrt%d" % (c, RADICALS[i]))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return "ExactScalar(%s)" % self


def _sqrt_decompose(n):
    # n = m**2 * r with r squarefree over primes {2, 3, 7}
    m = 1
    for p in (2, 3, 7):
        while n % (p * p) == 0:
            n //= p * p
            m *= p
    if n not in _RAD_INDEX:
        raise ValueError("square root of %d*m^2 is outside the field" % n)
    return m, n


ZERO = ExactScalar((_Q0,) * 8)
ONE = ExactScalar.from_rational(1)


def rational(p, q=1):
    """Shorthand for ExactScalar.from_rational."""
    return ExactScalar.from_rational(p, q)


def sqrtq(p, q=1):
    """Shorthand for ExactScalar.sqrt_rational."""
    return ExactScalar.sqrt_rational(p, q)


class ComplexScalar:
    """Element of the complexified field: re + i*im with exact parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=ZERO):
        self.re = re
        self.im = im

    @staticmethod
    def from_real(x):
        if isinstance(x, int):
            x = ExactScalar.from_rational(x)
        return ComplexScalar(x, ZERO)

    # -- predicates ----------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self):
        return not self.im

    @property
    def is_imaginary(self):
        return not self.re

    def norm_squared(self):
        """|z|^2 = re^2 + im^2, an exact scalar that is zero iff z is."""
        return self.re * self.re + self.im * self.im

    # -- field operations -----------------------------------------------------

    def __add__(self, other):
        other = _as_complex(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_complex(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        if not self:
            return self
        return ComplexScalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            if not other or not self:
                return CZERO
            return ComplexScalar(self.re * other, self.im * other)
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        if not self or not other:
            return CZERO
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return ComplexScalar(a * c, ZERO)
            return ComplexScalar(a * c, a * d)
        if not d:
            return ComplexScalar(a * c, b * c)
        return ComplexScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return ComplexScalar(self.re / other, self.im / other)
        other = _as_complex(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def conjugate(self):
        if not self.im:
            return self
        return ComplexScalar(self.re, -self.im)

    def invert(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero complex scalar")
        n = self.norm_squared().invert()
        return ComplexScalar(self.re * n, -(self.im * n))

    def times_i(self):
        """Multiplication by the imaginary unit, without forming products."""
        return ComplexScalar(-self.im, self.re)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        other = _as_complex(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "i*(%s)" % self.im
        return "(%s)+i*(%s)" % (self.re, self.im)

    def __repr__(self):
        return "ComplexScalar(%s)" % self


def _as_complex(x):
    if isinstance(x, ComplexScalar):
        return x
    if isinstance(x, ExactScalar):
        return ComplexScalar(x, ZERO)
    if isinstance(x, int):
        return ComplexScalar(ExactScalar.from_rational(x), ZERO)
    return NotImplemented


CZERO = ComplexScalar(ZERO, ZERO)
CONE = ComplexScalar(ONE, ZERO)
I_UNIT = ComplexScalar(ZERO, ONE)


# -- canonical text form -------------------------------------------------------
#
# A ComplexScalar renders as (q0,...,q7|q8,...,q15): sixteen rationals in
# basis order, real coefficients first, denominator omitted when 1.


def render_complex(z):
    """Canonical text form of a ComplexScalar."""
    re = ",".join(str(c) for c in z.re.coefficients)
    im = ",".join(str(c) for c in z.im.coefficients)
    return "(%s|%s)" % (re, im)


def render_real(x):
    """Canonical text form of an ExactScalar (as a complex scalar)."""
    return render_complex(ComplexScalar(x, ZERO))


def parse_complex(text, line=None):
    """Parse the canonical text form back into a ComplexScalar."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise FormatError("scalar must be parenthesized", line, text)
    body = s[1:-1]
    halves = body.split("|")
    if len(halves) != 2:
        raise FormatError("scalar needs exactly one '|'", line, text)
    parts = []
    for half in halves:
        fields = half.split(",")
        if len(fields) != 8:
            raise FormatError("each half needs 8 rationals", line, text)
        try:
            parts.append(ExactScalar(tuple(Q(f) for f in fields)))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError("bad rational: %s" % exc, line, text)
    return ComplexScalar(parts[0], parts[1])
