"""Exact rational matrices.

Entries are :class:`fractions.Fraction` throughout; nothing here touches
floating point. Matrices are immutable and may be empty in either dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ShapeError

Scalar = Fraction


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a float has already been rounded.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact scalar")


class Matrix:
    """Dense rectangular matrix of Fractions.

    Build from a nested sequence of rows. Pass ``cols`` to give a 0-row
    matrix a width, e.g. ``Matrix([], cols=3)``.
    """

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable] = (), cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows: " + str([len(r) for r in rows]))
            if cols is not None and cols != width:
                raise ShapeError(f"cols={cols} but rows have length {width}")
        else:
            width = 0 if cols is None else cols
        self._data = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> Matrix:
        # rows must already be a tuple of tuples of Fraction
        m = cls.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = cols
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        z = Fraction(0)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def diag(cls, values: Sequence) -> Matrix:
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        z = Fraction(0)
        return cls._raw(
            tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def column(cls, values: Sequence) -> Matrix:
        return cls([[v] for v in values], cols=1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self._data for x in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        d = self._data
        return Matrix._raw(tuple(tuple(d[i][j] for j in cols) for i in rows), len(cols))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def trace(self) -> Fraction:
        _require_square(self, "trace")
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        if self.rows == 0:
            return f"Matrix([], cols={self.cols})"
        return f"Matrix([{body}])"

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        _require_same_shape(self, other, "add")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        _require_same_shape(self, other, "subtract")
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self._data), self.cols)

    def __pow__(self, m: int) -> Matrix:
        _require_square(self, "power")
        if m < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.rows)
        base = self
        while m:
            if m & 1:
                result = result @ base
            base = base @ base
            m >>= 1
        return result


def _require_square(a: Matrix, what: str) -> None:
    if not a.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def _require_same_shape(a: Matrix, b: Matrix, what: str) -> None:
    if a.shape != b.shape:
        raise ShapeError(
            f"{what}: shapes {a.rows}x{a.cols} and {b.rows}x{b.cols} differ"
        )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.T._data
    zero = Fraction(0)
    return Matrix._raw(
        tuple(tuple(sum((x * y for x, y in zip(r, c)), zero) for c in bt) for r in a._data),
        b.cols,
    )


def transpose(a: Matrix) -> Matrix:
    return Matrix._raw(
        tuple(tuple(a._data[i][j] for i in range(a.rows)) for j in range(a.cols)), a.rows
    )


def block_diag(*blocks: Matrix) -> Matrix:
    for b in blocks:
        _require_square(b, "block_diag")
    n = sum(b.rows for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b):
            out[off + i][off : off + b.cols] = r
        off += b.rows
    return Matrix(out, cols=n)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ShapeError(f"hstack: {a.rows} rows vs {b.rows} rows")
    return Matrix._raw(tuple(r + s for r, s in zip(a._data, b._data)), a.cols + b.cols)


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise ShapeError(f"vstack: {a.cols} cols vs {b.cols} cols")
    return Matrix._raw(a._data + b._data, a.cols)


# -- elimination ------------------------------------------------------------


@dataclass(frozen=True)
class RREF:
    matrix: Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    # allow ``m, pivots, r = rref(a)``
    def __iter__(self):
        return iter((self.matrix, self.pivots, self.rank))


def rref(a: Matrix) -> RREF:
    """Reduced row echelon form; the pivot is the first nonzero entry in each column."""
    m = [list(r) for r in a._data]
    pivots = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        p = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(a.rows):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return RREF(Matrix(m, cols=a.cols), tuple(pivots))


def rank(a: Matrix) -> int:
    return rref(a).rank


def kernel_basis(a: Matrix) -> list[Matrix]:
    """Basis of the right null space as column vectors, one per free column."""
    red, pivots, _ = rref(a)
    free = [j for j in range(a.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(Matrix.column(v))
    return basis


@dataclass(frozen=True)
class RankFactorization:
    left: Matrix
    right: Matrix

    @property
    def rank(self) -> int:
        return self.left.cols


def rank_factorization(a: Matrix) -> RankFactorization:
    """Write ``a = left @ right`` with ``left`` the pivot columns of ``a``
    and ``right`` the nonzero rows of its RREF."""
    red, pivots, r = rref(a)
    left = a.submatrix(range(a.rows), pivots)
    right = red.submatrix(range(r), range(a.cols))
    return RankFactorization(left, right)


def inverse(a: Matrix) -> Matrix:
    _require_square(a, "inverse")
    n = a.rows
    red, pivots, r = rref(hstack(a, Matrix.identity(n)))
    if r < n or (n and pivots[n - 1] != n - 1):
        raise ZeroDivisionError("matrix is singular")
    return red.submatrix(range(n), range(n, 2 * n))


def pseudo_inverse(a: Matrix) -> Matrix:
    """Moore-Penrose inverse, exact.

    With ``a = C R`` a full-rank factorization,
    ``a+ = R^T (R R^T)^-1 (C^T C)^-1 C^T``.
    """
    fac = rank_factorization(a)
    if fac.rank == 0:
        return Matrix.zeros(a.cols, a.rows)
    c, r = fac.left, fac.right
    return r.T @ inverse(r @ r.T) @ inverse(c.T @ c) @ c.T


# -- determinants -------------------------------------------------------------


def integer_rows(a: Matrix) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row.

    Returns ``(rows, denoms)`` where ``rows[i] == a.row(i) * denoms[i]`` is
    integral. A minor on row set ``I`` is then the integer minor divided by
    the product of ``denoms[i]`` for ``i`` in ``I``.
    """
    rows, denoms = [], []
    for r in a._data:
        d = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * d) for x in r])
        denoms.append(d)
    return rows, denoms


def bareiss_det_int(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (list of rows, copied)."""
    n = len(m)
    if n == 0:
        return 1
    m = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det(a: Matrix) -> Fraction:
    """Classical determinant by Bareiss elimination on a row-scaled integer copy."""
    _require_square(a, "det")
    rows, denoms = integer_rows(a)
    scale = 1
    for d in denoms:
        scale *= d
    return Fraction(bareiss_det_int(rows), scale)


def is_normal(a: Matrix) -> bool:
    return a.is_square and a.T @ a == a @ a.T
