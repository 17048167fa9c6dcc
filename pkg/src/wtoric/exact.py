"""Exact scalars over Q and Q(sqrt d), and dense/sparse exact linear algebra.

Rational scalars are plain :class:`fractions.Fraction` objects.  Elements of a
real quadratic field are :class:`QuadraticNumber`.  Both support the usual
arithmetic operators and mix freely with ``int``/``Fraction``, so every routine
below is written once for any field element.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = [
    "QuadraticNumber",
    "Field",
    "Matrix",
    "SparseEchelon",
    "sign",
    "is_zero",
    "to_float",
    "scalar_to_json",
    "scalar_from_json",
    "inner_product",
    "check_gram",
    "rref",
    "rank",
    "solve",
    "kernel_basis",
    "inverse",
    "same_row_space",
]


def _squarefree(d):
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadraticNumber:
    """The number ``(p + q*sqrt(d)) / den`` with integers p, q and den > 0.

    Stored over a common denominator so that arithmetic stays in Python ints.
    ``a`` and ``b`` give the rational parts of ``a + b*sqrt(d)``.
    """

    __slots__ = ("p", "q", "den", "d")

    def __init__(self, a=0, b=0, d=5):
        if not isinstance(d, int) or not _squarefree(d):
            raise ValueError(f"discriminant must be a squarefree positive integer, got {d!r}")
        a = Fraction(a)
        b = Fraction(b)
        if d == 1 and b:
            raise ValueError("d = 1 is the rational case; b must be 0")
        den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (den // a.denominator), b.numerator * (den // b.denominator), den, d)

    def _set(self, p, q, den, d):
        g = math.gcd(p, q, den)
        if g != 1:
            p //= g
            q //= g
            den //= g
        self.p = p
        self.q = q
        self.den = den
        self.d = d

    @classmethod
    def _raw(cls, p, q, den, d):
        obj = object.__new__(cls)
        if den < 0:
            p, q, den = -p, -q, -den
        obj._set(p, q, den, d)
        return obj

    @property
    def a(self):
        return Fraction(self.p, self.den)

    @property
    def b(self):
        return Fraction(self.q, self.den)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"mixed discriminants {self.d} and {other.d}")
            return other
        if isinstance(other, int):
            return QuadraticNumber._raw(other, 0, 1, self.d)
        if isinstance(other, Rational):
            return QuadraticNumber._raw(other.numerator, 0, other.denominator, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return QuadraticNumber._raw(self.p + o.p, self.q + o.q, self.den, self.d)
        return QuadraticNumber._raw(
            self.p * o.den + o.p * self.den, self.q * o.den + o.q * self.den, self.den * o.den, self.d
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self.p, -self.q, self.den, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber._raw(
            self.p * o.p + self.d * self.q * o.q, self.p * o.q + self.q * o.p, self.den * o.den, self.d
        )

    __rmul__ = __mul__

    def norm(self):
        """Field norm a^2 - d b^2 as a Fraction."""
        return Fraction(self.p * self.p - self.d * self.q * self.q, self.den * self.den)

    def conjugate(self):
        return QuadraticNumber._raw(self.p, -self.q, self.den, self.d)

    def inverse(self):
        n = self.p * self.p - self.d * self.q * self.q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt %d)" % self.d)
        # 1/((p+q r)/den) = den (p - q r) / n
        return QuadraticNumber._raw(self.den * self.p, -self.den * self.q, n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self):
        """Exact sign of p + q sqrt(d) (den > 0 always)."""
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with d q^2
        lhs = self.p * self.p
        rhs = self.d * self.q * self.q
        if lhs == rhs:
            return 0
        return sp if lhs > rhs else sq

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.den == o.den

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.den))
        return hash((self.p, self.q, self.den, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.den

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.q == 0:
            return str(self.a)
        return f"({self.a}) + ({self.b})*sqrt({self.d})"


class Field:
    """Q (d = 1) or Q(sqrt d); produces scalars of the appropriate type."""

    def __init__(self, d=1):
        if not isinstance(d, int) or not _squarefree(d):
            raise ValueError(f"discriminant must be a squarefree positive integer, got {d!r}")
        self.d = d

    def __call__(self, a=0, b=0):
        if self.d == 1:
            if b:
                raise ValueError("rational field has no sqrt part")
            return Fraction(a)
        return QuadraticNumber(a, b, self.d)

    def coerce(self, x):
        if isinstance(x, QuadraticNumber):
            if x.d != self.d:
                raise ValueError(f"mixed discriminants {self.d} and {x.d}")
            return x
        return self(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def sqrt_d(self):
        if self.d == 1:
            return Fraction(1)
        return QuadraticNumber(0, 1, self.d)

    def __eq__(self, other):
        return isinstance(other, Field) and other.d == self.d

    def __hash__(self):
        return hash(("Field", self.d))

    def __repr__(self):
        return "Field(QQ)" if self.d == 1 else f"Field(QQ(sqrt({self.d})))"


def sign(x):
    if isinstance(x, QuadraticNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def is_zero(x):
    return not x


def to_float(x):
    return float(x)


def _frac_str(f):
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}"


def scalar_to_json(x):
    """Rationals as "p/q"; quadratic elements as ["p/q", "r/s"] (a + b sqrt d)."""
    if isinstance(x, QuadraticNumber):
        return [_frac_str(x.a), _frac_str(x.b)]
    return _frac_str(x)


def scalar_from_json(obj, d=1):
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValueError(f"quadratic scalar must have two parts, got {obj!r}")
        return Field(d)(Fraction(obj[0]), Fraction(obj[1]))
    return Field(d)(Fraction(obj))


class Matrix:
    """Immutable dense matrix of field elements."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(r) for r in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for r in entries:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n, one=Fraction(1)):
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols, zero=Fraction(0)):
        return cls([[zero] * cols for _ in range(rows)], cols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.entries[i][j]
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)
        return f"Matrix([{body}])"

    @property
    def T(self):
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch in matrix product")
            ot = other.T.entries
            return Matrix([[_dot(r, c) for c in ot] for r in self.entries], other.cols)
        v = tuple(other)
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(_dot(r, v) for r in self.entries)

    def __add__(self, other):
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other):
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols)

    def scale(self, c):
        return Matrix([[c * x for x in r] for r in self.entries], self.cols)

    def trace(self):
        t = 0
        for i in range(min(self.rows, self.cols)):
            t = self.entries[i][i] + t
        return t


def _dot(u, v):
    s = 0
    for x, y in zip(u, v):
        if x and y:
            s = x * y + s
    return s


def inner_product(u, v, gram):
    """u^T G v for vectors in simple-root coordinates."""
    g = gram.entries if isinstance(gram, Matrix) else gram
    n = len(g)
    if len(u) != n or len(v) != n:
        raise ValueError(f"dimension mismatch: {len(u)}, {len(v)} vs rank {n}")
    s = 0
    for i in range(n):
        if not u[i]:
            continue
        row = g[i]
        acc = 0
        for j in range(n):
            if v[j] and row[j]:
                acc = row[j] * v[j] + acc
        s = u[i] * acc + s
    return s


def check_gram(gram):
    """Raise ValueError unless ``gram`` is symmetric positive definite (exactly)."""
    g = gram.entries if isinstance(gram, Matrix) else tuple(tuple(r) for r in gram)
    n = len(g)
    for i in range(n):
        for j in range(n):
            if g[i][j] != g[j][i]:
                raise ValueError("Gram form is not symmetric")
    for k in range(1, n + 1):
        if sign(_det([list(r[:k]) for r in g[:k]])) <= 0:
            raise ValueError(f"leading principal minor {k} is not positive")


def _det(a):
    n = len(a)
    a = [list(r) for r in a]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return a[0][0] - a[0][0] if n else 1
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det = det * p
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _exact(x):
    # plain ints would turn into floats under "/"
    return Fraction(x) if type(x) is int else x


def _as_rows(m):
    if isinstance(m, Matrix):
        return [[_exact(x) for x in r] for r in m.entries], m.cols
    rows = [[_exact(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rref(m):
    """Reduced row echelon form.

    Pivot rule: leftmost column first; among rows that can pivot in that column
    the lowest row index wins.  Pivots are normalised to 1.  Returns
    ``(rank, reduced, pivot_columns)`` where ``reduced`` has the same shape as
    the input (zero rows at the bottom).
    """
    rows, ncols = _as_rows(m)
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return r, Matrix(rows, ncols), pivots


def rank(m):
    return rref(m)[0]


def solve(a, b):
    """Solve a x = b; return the pivot-rule solution (free variables 0) or None."""
    rows, ncols = _as_rows(a)
    b = [_exact(x) for x in b]
    if len(b) != len(rows):
        raise ValueError("dimension mismatch in solve")
    aug = [r + [bi] for r, bi in zip(rows, b)]
    r, red, piv = rref(Matrix(aug, ncols + 1)) if aug else (0, None, [])
    if ncols in piv:
        return None
    zero = b[0] - b[0] if b else 0
    x = [zero] * ncols
    for i, c in enumerate(piv):
        x[c] = red.entries[i][ncols]
    return tuple(x)


def kernel_basis(m):
    """Null space basis; one vector per free column, with a 1 in that column."""
    rows, ncols = _as_rows(m)
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    r, red, piv = rref(Matrix(rows, ncols))
    sample = rows[0][0] if ncols else 0
    zero = sample - sample
    one = zero + 1
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for i, c in enumerate(piv):
            v[c] = -red.entries[i][f]
        basis.append(tuple(v))
    return basis


def inverse(m):
    rows, n = _as_rows(m)
    if len(rows) != n:
        raise ValueError("inverse of a non-square matrix")
    zero = rows[0][0] - rows[0][0]
    one = zero + 1
    aug = [r + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    r, red, piv = rref(Matrix(aug, 2 * n))
    if piv[:n] != list(range(n)) or r < n:
        raise ZeroDivisionError("singular matrix")
    return Matrix([row[n:] for row in red.entries[:n]], n)


def same_row_space(m1, m2):
    """True iff two matrices with equal column counts span the same row space."""
    r1 = rank(m1)
    r2 = rank(m2)
    rows1, c1 = _as_rows(m1)
    rows2, c2 = _as_rows(m2)
    if c1 != c2:
        return False
    return r1 == r2 == rank(Matrix(rows1 + rows2, c1)) if (rows1 or rows2) else True


class SparseEchelon:
    """Incremental exact row reduction over dict-rows ``{column: value}``.

    Rows are added one at a time and reduced against the current pivots
    (semi-reduced echelon form).  :meth:`reduced_rows` back-substitutes to the
    unique reduced row echelon form for the column order ``0 < 1 < ...``, so the
    result does not depend on the order in which rows were added.
    """

    def __init__(self):
        self.pivots = {}  # pivot column -> row dict with row[col] == 1

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row):
        """Reduce ``row`` by existing pivots; returns the remainder (may be {})."""
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                return row
            c = min(hit)
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)

    def add(self, row):
        """Add a row; return True if the span grew."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / _exact(row[c])
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    def reduced_rows(self):
        """Fully reduced rows keyed by pivot column (pivot entry 1)."""
        out = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in sorted(k for k in row if k != c and k in out):
                f = row.pop(k)
                for kk, v in out[k].items():
                    if kk == k:
                        continue
                    nv = row.get(kk, 0) - f * v
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
            out[c] = row
        return out
