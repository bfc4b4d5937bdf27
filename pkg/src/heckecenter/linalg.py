"""
Dense exact linear algebra over R and Frac(R).

Everything that eliminates works fraction-free over R (Bareiss): each entry
produced after ``t`` pivot steps is a ``(t+1) x (t+1)`` minor of the input, so
the division by the previous pivot is exact and checked with
:func:`~heckecenter.ring.exact_div`.  Systems with rational-function entries
are first scaled row by row into R.  Solutions are verified by substitution
over R before they are returned.

Pivot rule: within the current column, the nonzero entry with the fewest terms,
ties going to the lowest row index.
"""

from fractions import Fraction
from math import gcd

from .ring import LaurentPoly, RatFunc, dot, exact_div, specialize

__all__ = [
    "Matrix", "mat_mul", "bareiss_det", "cofactor_det", "frac_nullspace",
    "frac_solve", "clear_denominators", "rank", "rank_at", "NotExactError",
    "UnderdeterminedError",
]


class NotExactError(ArithmeticError):
    """A division that must be exact in R left a remainder."""


class UnderdeterminedError(ValueError):
    """The system has free variables; ask for a nullspace instead."""


class Matrix:
    """Row-major matrix of LaurentPoly (a PolyMatrix) or RatFunc (a FracMatrix) entries."""

    __slots__ = ("rows", "nrows", "ncols", "k")

    def __init__(self, rows, k=None):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        if k is None:
            k = next((x.k for r in self.rows for x in r if not isinstance(x, int)), None)
            if k is None and self.rows and self.ncols:
                raise ValueError("cannot infer the number of variables from integer entries")
        if any(isinstance(x, int) for r in self.rows for x in r):
            self.rows = [[LaurentPoly.constant(x, k) if isinstance(x, int) else x for x in r]
                         for r in self.rows]
        self.k = k

    @classmethod
    def zeros(cls, nrows, ncols, k):
        z = LaurentPoly.constant(0, k)
        return cls([[z] * ncols for _ in range(nrows)], k)

    @classmethod
    def identity(cls, n, k):
        z, o = LaurentPoly.constant(0, k), LaurentPoly.constant(1, k)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], k)

    @classmethod
    def from_columns(cls, cols, k=None):
        return cls([list(r) for r in zip(*cols)], k)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.rows)], self.k)

    T = property(transpose)

    def is_square(self):
        return self.nrows == self.ncols

    def is_integral(self):
        """True when every entry lies in R."""
        return all(isinstance(x, LaurentPoly) or x.is_polynomial() for r in self.rows for x in r)

    def map(self, f):
        return Matrix([[f(x) for x in r] for r in self.rows], self.k)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        _same_shape(self, other)
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.k)

    def __sub__(self, other):
        _same_shape(self, other)
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.k)

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c):
        return self.map(lambda x: c * x)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    __hash__ = None

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return Matrix(self.rows + other.rows, self.k)

    def specialize(self, point):
        return [[x.specialize(point) if isinstance(x, RatFunc) else specialize(x, point)
                 for x in r] for r in self.rows]

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, k):
        def load(x):
            if isinstance(x, dict):
                return RatFunc.from_json(x, k)
            return LaurentPoly.from_json(x, k)
        return cls([[load(x) for x in r] for r in data], k)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def mat_mul(A, B):
    """Exact product; zero entries are skipped."""
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    zero = _zero_like(A, B)
    if all(isinstance(x, LaurentPoly) for M in (A, B) for r in M.rows for x in r):
        return _poly_mat_mul(A, B, zero)
    brows = [[(j, x) for j, x in enumerate(r) if not x.is_zero()] for r in B.rows]
    out = []
    for r in A.rows:
        acc = {}
        for t, a in enumerate(r):
            if a.is_zero():
                continue
            for j, b in brows[t]:
                p = a * b
                acc[j] = acc[j] + p if j in acc else p
        out.append([acc.get(j, zero) for j in range(B.ncols)])
    return Matrix(out, A.k)


def _poly_mat_mul(A, B, zero):
    """Product over R with every entry accumulated as one dot product."""
    k = A.k
    bcols = [[(t, r[j]) for t, r in enumerate(B.rows) if not r[j].is_zero()]
             for j in range(B.ncols)]
    out = []
    for r in A.rows:
        row = []
        for col in bcols:
            pairs = [(r[t], b) for t, b in col if not r[t].is_zero()]
            if not pairs:
                row.append(zero)
            elif len(pairs) == 1:
                row.append(pairs[0][0] * pairs[0][1])
            else:
                xs, ys = zip(*pairs)
                row.append(dot(xs, ys, k))
        out.append(row)
    return Matrix(out, k)


def _zero_like(*mats):
    for M in mats:
        for r in M.rows:
            for x in r:
                if isinstance(x, RatFunc):
                    return RatFunc(0, k=M.k)
    return LaurentPoly.constant(0, mats[0].k)


def _div(a, b):
    if b.is_one():
        return a
    q = exact_div(a, b)
    if q is None:
        raise NotExactError(f"fraction-free step: ({a}) / ({b}) is not exact")
    return q


def _choose_pivot(rows, col, start, candidates=None):
    best = None
    for i in (candidates if candidates is not None else range(start, len(rows))):
        x = rows[i][col]
        if not x.is_zero() and (best is None or len(x) < len(rows[best][col])):
            best = i
    return best


def bareiss_det(A):
    """Determinant by fraction-free elimination; every interior division is exact."""
    if not A.is_square():
        raise ValueError(f"determinant of a non-square {A.shape} matrix")
    n = A.nrows
    k = A.k
    if n == 0:
        return LaurentPoly.constant(1, k)
    M = [list(r) for r in A.rows]
    prev = LaurentPoly.constant(1, k)
    sign = 1
    for c in range(n):
        p = _choose_pivot(M, c, c)
        if p is None:
            return LaurentPoly.constant(0, k)
        if p != c:
            M[p], M[c] = M[c], M[p]
            sign = -sign
        piv = M[c][c]
        prow = M[c]
        for i in range(c + 1, n):
            row = M[i]
            a = row[c]
            new = row[:c + 1]
            for j in range(c + 1, n):
                x = piv * row[j]
                if not a.is_zero() and not prow[j].is_zero():
                    x = x - a * prow[j]
                new.append(_div(x, prev))
            M[i] = new
        prev = piv
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_det(A):
    """Laplace expansion along the first row; an independent oracle for small matrices."""
    n = A.nrows
    if n == 0:
        return LaurentPoly.constant(1, A.k)
    if n == 1:
        return A.rows[0][0]
    total = LaurentPoly.constant(0, A.k)
    for j, x in enumerate(A.rows[0]):
        if x.is_zero():
            continue
        minor = Matrix([r[:j] + r[j + 1:] for r in A.rows[1:]], A.k)
        term = x * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _integral_rows(rows, k):
    """Scale each row of a mixed LaurentPoly/RatFunc matrix into R."""
    out = []
    for r in rows:
        scale = LaurentPoly.constant(1, k)
        for x in r:
            if isinstance(x, RatFunc) and not x.den.is_one():
                if exact_div(scale, x.den) is None:
                    scale = scale * x.den
        new = []
        for x in r:
            if isinstance(x, RatFunc):
                x = x.num * _div(scale, x.den)
            elif not scale.is_one():
                x = x * scale
            new.append(x)
        out.append(new)
    return out


def _gauss_jordan(M, ncols_eliminate, column_order=None):
    """
    Fraction-free reduced row echelon form, in place on ``M`` (lists over R).

    Returns ``(pivots, D)`` with pivots a list of ``(row, col)`` pairs; after
    the call every pivot entry equals D and pivot columns are zero elsewhere.
    """
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    k = M[0][0].k if M else 1
    prev = LaurentPoly.constant(1, k)
    pivots = []
    r = 0
    order = column_order if column_order is not None else range(ncols_eliminate)
    for c in order:
        if r == nrows:
            break
        p = _choose_pivot(M, c, r)
        if p is None:
            continue
        if p != r:
            M[p], M[r] = M[r], M[p]
        piv = M[r][c]
        prow = M[r]
        for i in range(nrows):
            if i == r:
                continue
            row = M[i]
            a = row[c]
            if a.is_zero():
                if piv.is_one() and prev.is_one():
                    continue
                M[i] = [x if x.is_zero() else _div(piv * x, prev) for x in row]
                continue
            new = []
            for j in range(ncols):
                x = row[j]
                if not x.is_zero():
                    x = piv * x
                y = prow[j]
                if not y.is_zero():
                    x = x - a * y
                new.append(x if x.is_zero() else _div(x, prev))
            M[i] = new
        pivots.append((r, c))
        prev = piv
        r += 1
    return pivots, prev


def rank(A):
    """Rank over Frac(R)."""
    if A.nrows == 0 or A.ncols == 0:
        return 0
    M = _integral_rows(A.rows, A.k)
    pivots, _ = _gauss_jordan(M, A.ncols)
    return len(pivots)


def rank_at(A, point):
    """Rank of the specialisation of A at a rational point (ordinary Gaussian elimination over Q)."""
    M = [[Fraction(x) for x in r] for r in A.specialize(point)]
    nrows, ncols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, nrows):
            f = M[i][c] / M[r][c]
            if f:
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == nrows:
            break
    return r


def frac_nullspace(A, column_order=None):
    """
    Basis of the right nullspace of A over Frac(R).

    Each returned vector (a list of RatFunc) has coordinate 1 at its own free
    column and 0 at every other free column.  Vectors are ordered by free
    column position in ``column_order`` (default: natural column order).
    A nonzero ``A @ v`` is impossible: each vector is checked over R.
    """
    k = A.k
    n = A.ncols
    if A.nrows == 0:
        M = []
    else:
        M = _integral_rows(A.rows, k)
    order = list(column_order) if column_order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise ValueError("column_order must be a permutation of the columns")
    if M:
        pivots, D = _gauss_jordan(M, n, order)
    else:
        pivots, D = [], LaurentPoly.constant(1, k)
    pivot_cols = {c: r for r, c in pivots}
    free = [c for c in order if c not in pivot_cols]
    zero = LaurentPoly.constant(0, k)
    basis = []
    for f in free:
        num = [zero] * n
        num[f] = D
        for c, r in pivot_cols.items():
            num[c] = -M[r][f]
        # soundness over R: A_int @ num == 0
        if M:
            _check_kernel(_integral_rows(A.rows, k), num)
        basis.append([RatFunc(x, D) for x in num])
    return basis


def _check_kernel(rows, vec):
    for r in rows:
        acc = None
        for x, y in zip(r, vec):
            if x.is_zero() or y.is_zero():
                continue
            acc = x * y if acc is None else acc + x * y
        if acc is not None and not acc.is_zero():
            raise ArithmeticError("nullspace vector failed verification")


def frac_solve(A, b):
    """
    Solve ``A x = b`` exactly over Frac(R).

    ``b`` is a list (one right-hand side) or a Matrix (several).  Returns the
    solution in the same form, or ``None`` when the system is inconsistent.
    Raises :class:`UnderdeterminedError` when A has a nontrivial nullspace.
    """
    single = not isinstance(b, Matrix)
    B = Matrix.from_columns([b], A.k) if single else b
    if B.nrows != A.nrows:
        raise ValueError(f"right-hand side has {B.nrows} rows, matrix has {A.nrows}")
    k = A.k
    n, m = A.ncols, B.ncols
    aug = _integral_rows([ra + rb for ra, rb in zip(A.rows, B.rows)], k)
    A_int = [r[:n] for r in aug]
    B_int = [r[n:] for r in aug]
    M = [list(r) for r in aug]
    pivots, D = _gauss_jordan(M, n)
    if len(pivots) < n:
        raise UnderdeterminedError(
            f"rank {len(pivots)} < {n} unknowns; use frac_nullspace for the free part")
    pivot_rows = {r for r, _ in pivots}
    for i in range(len(M)):
        if i not in pivot_rows and any(not x.is_zero() for x in M[i][n:]):
            return None
    numer = [[None] * m for _ in range(n)]
    for r, c in pivots:
        numer[c] = M[r][n:]
    # substitution check over R: A_int @ numer == D * B_int
    for ra, rb in zip(A_int, B_int):
        for j in range(m):
            acc = LaurentPoly.constant(0, k)
            for x, row in zip(ra, numer):
                if not x.is_zero() and not row[j].is_zero():
                    acc = acc + x * row[j]
            if acc != D * rb[j]:
                raise ArithmeticError("solution failed back-substitution check")
    X = [[RatFunc(x, D) for x in row] for row in numer]
    if single:
        return [row[0] for row in X]
    return Matrix(X, k)


def clear_denominators(v):
    """
    Write a vector over Frac(R) as ``w / s`` with w over R.

    w is primitive: integer content 1, no monomial factor (per-variable minimum
    exponent 0 across all entries) and a positive leading coefficient on its
    first nonzero entry.  s is returned as a RatFunc.
    """
    entries = [x if isinstance(x, RatFunc) else RatFunc(x) for x in v]
    if not entries:
        raise ValueError("empty vector")
    k = entries[0].k
    s = LaurentPoly.constant(1, k)
    for x in entries:
        if not x.den.is_one() and exact_div(s, x.den) is None:
            s = s * x.den
    w = [x.num * _div(s, x.den) for x in entries]
    nz = [x for x in w if not x.is_zero()]
    if not nz:
        return w, RatFunc(1, k=k)
    g = 0
    for x in nz:
        g = gcd(g, x.content())
    lo = [min(min(e[i] for e, _ in x.items()) for x in nz) for i in range(k)]
    _, lc = nz[0].leading_term()
    unit = -1 if lc < 0 else 1
    shift = tuple(-e for e in lo)
    w = [LaurentPoly({tuple(a + b for a, b in zip(e, shift)): unit * c // g for e, c in x.items()}, k)
         for x in w]
    # v = w * (g * u^lo * unit) / s
    factor = LaurentPoly({tuple(lo): g * unit}, k)
    return w, RatFunc(s) / RatFunc(factor)
