"""Dense matrices over the exact fields of this package, with index labels."""

from fractions import Fraction

from .cyclotomic import Cyclo

__all__ = ["SymbolicMatrix", "mat_inverse"]


def _size(x):
    # rough complexity measure used to choose pivots
    num = getattr(x, "num", None)
    if num is None:
        return 0
    if hasattr(num, "terms"):
        return len(num.terms) + len(x.den.terms)
    return len(num.coeffs) + len(x.den.coeffs)


class SymbolicMatrix:
    """Row-major matrix of field elements.

    ``zero`` is the additive identity of the entry field and is needed for
    empty matrices and fresh products.  ``blocks`` is an optional list of
    (start, stop) index intervals covering the rows.
    """

    __slots__ = ("rows", "row_labels", "col_labels", "zero", "blocks")

    def __init__(self, rows, zero, row_labels=None, col_labels=None, blocks=None):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        m = len(self.rows[0]) if self.rows else (len(col_labels) if col_labels is not None else 0)
        if any(len(r) != m for r in self.rows):
            raise ValueError("ragged matrix")
        self.zero = zero
        self.row_labels = list(row_labels) if row_labels is not None else list(range(n))
        self.col_labels = list(col_labels) if col_labels is not None else list(range(m))
        if len(self.row_labels) != n or len(self.col_labels) != m:
            raise ValueError("label count mismatch")
        if blocks is not None:
            covered = sorted(i for a, b in blocks for i in range(a, b))
            if covered != list(range(n)):
                raise ValueError("block partition must cover every index exactly once")
        self.blocks = blocks

    @classmethod
    def identity(cls, n, zero, labels=None):
        one = zero.one() if hasattr(zero, "one") else 1
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(rows, zero, labels, labels)

    @classmethod
    def zeros(cls, n, m, zero, row_labels=None, col_labels=None):
        return cls([[zero] * m for _ in range(n)], zero, row_labels, col_labels)

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _like(self, rows, row_labels=None, col_labels=None):
        return SymbolicMatrix(
            rows,
            self.zero,
            self.row_labels if row_labels is None else row_labels,
            self.col_labels if col_labels is None else col_labels,
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._like([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return self._like([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self._like([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return self._like([[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, SymbolicMatrix):
            return self.scale(other)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch for product")
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            nz = [(j, a) for j, a in enumerate(r) if not _is_zero(a)]
            row = []
            for c in cols:
                acc = self.zero
                for j, a in nz:
                    b = c[j]
                    if not _is_zero(b):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SymbolicMatrix(out, self.zero, self.row_labels, other.col_labels)

    __matmul__ = __mul__

    def transpose(self):
        n, m = self.shape
        rows = [[self.rows[i][j] for i in range(n)] for j in range(m)]
        return SymbolicMatrix(rows, self.zero, self.col_labels, self.row_labels)

    T = property(transpose)

    def conjugate(self):
        return self._like([[a.conjugate() for a in r] for r in self.rows])

    def map(self, f, zero=None):
        return SymbolicMatrix(
            [[f(a) for a in r] for r in self.rows],
            self.zero if zero is None else zero,
            self.row_labels,
            self.col_labels,
        )

    def submatrix(self, rows, cols):
        return SymbolicMatrix(
            [[self.rows[i][j] for j in cols] for i in rows],
            self.zero,
            [self.row_labels[i] for i in rows],
            [self.col_labels[j] for j in cols],
        )

    def is_zero(self):
        return all(_is_zero(a) for r in self.rows for a in r)

    def inverse(self):
        return mat_inverse(self)

    def __eq__(self, other):
        if not isinstance(other, SymbolicMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return "SymbolicMatrix(%s)" % [[str(a) for a in r] for r in self.rows]

    def to_json(self, label_json=str):
        return {
            "row_labels": [label_json(x) for x in self.row_labels],
            "col_labels": [label_json(x) for x in self.col_labels],
            "rows": [[_entry_json(a) for a in r] for r in self.rows],
        }


def _is_zero(a):
    if isinstance(a, (int, Fraction)):
        return a == 0
    return a.is_zero()


def _entry_json(a):
    if isinstance(a, Fraction):
        return a.numerator if a.denominator == 1 else str(a)
    if isinstance(a, int):
        return a
    if isinstance(a, Cyclo) and a.is_rational():
        q = a.coeffs[0]
        return q.numerator if q.denominator == 1 else str(q)
    return a.to_json()


def mat_inverse(M):
    """Exact inverse by Gauss-Jordan elimination.

    Each step picks the structurally simplest nonzero pivot in the column and
    every entry is kept in reduced canonical form, which keeps intermediate
    fractions small.
    """
    n, m = M.shape
    if n != m:
        raise ValueError("matrix must be square")
    zero = M.zero
    one = zero.one() if hasattr(zero, "one") else 1
    A = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M.rows)]
    for col in range(n):
        best = None
        for i in range(col, n):
            a = A[i][col]
            if not _is_zero(a):
                s = _size(a)
                if best is None or s < best[0]:
                    best = (s, i)
        if best is None:
            raise ZeroDivisionError("singular matrix")
        p = best[1]
        A[col], A[p] = A[p], A[col]
        inv = 1 / A[col][col] if isinstance(A[col][col], (int, Fraction)) else A[col][col].inverse()
        A[col] = [x * inv if not _is_zero(x) else x for x in A[col]]
        pivot_row = A[col]
        nz = [j for j in range(2 * n) if not _is_zero(pivot_row[j])]
        for i in range(n):
            if i == col:
                continue
            f = A[i][col]
            if _is_zero(f):
                continue
            row = A[i]
            for j in nz:
                row[j] = row[j] - f * pivot_row[j]
    return SymbolicMatrix([r[n:] for r in A], zero, M.col_labels, M.row_labels)
