"""Dense matrices over the rationals.

Entries are :class:`fractions.Fraction` values, so every operation here is
exact.  Matrices are immutable; all operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import IndexOutOfRange, NotSquare, ShapeMismatch, UnsortedSelector

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    return str(value)


class Matrix:
    """An immutable rows x cols grid of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: Optional[int] = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ShapeMismatch("ragged rows")
            if cols is not None and cols != width:
                raise ShapeMismatch(f"expected {cols} columns, got {width}")
        else:
            width = 0 if cols is None else cols
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def _raw(cls, data: tuple, rows: int, cols: int) -> "Matrix":
        # trusted constructor: data is already a tuple of tuples of Fractions
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls._raw(tuple((zero,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(self.column(j), Fraction(0)) for j in range(self.cols))

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ShapeMismatch(f"{self.rows}x{self.cols} matrix times vector of length {len(vector)}")
        v = [as_rational(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "Matrix") -> "Matrix":
        return add(self, other)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return sub(self, other)

    def __neg__(self) -> "Matrix":
        return scale(self, -1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def __mul__(self, k) -> "Matrix":
        return scale(self, k)

    __rmul__ = __mul__


def _same_shape(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")


def add(a: Matrix, b: Matrix) -> Matrix:
    _same_shape(a, b)
    data = tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a._data, b._data))
    return Matrix._raw(data, a.rows, a.cols)


def sub(a: Matrix, b: Matrix) -> Matrix:
    _same_shape(a, b)
    data = tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a._data, b._data))
    return Matrix._raw(data, a.rows, a.cols)


def scale(m: Matrix, k) -> Matrix:
    k = as_rational(k)
    return Matrix._raw(tuple(tuple(k * x for x in row) for row in m._data), m.rows, m.cols)


def transpose(m: Matrix) -> Matrix:
    data = tuple(tuple(m._data[i][j] for i in range(m.rows)) for j in range(m.cols))
    return Matrix._raw(data, m.cols, m.rows)


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bt = transpose(b)._data
    zero = Fraction(0)
    data = tuple(
        tuple(sum((x * y for x, y in zip(ra, cb) if x and y), zero) for cb in bt)
        for ra in a._data
    )
    return Matrix._raw(data, a.rows, b.cols)


def _check_index(i: int, n: int, what: str) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"{what} index {i} outside 0..{n - 1}")


def _check_selector(sel: Sequence[int], n: int, what: str) -> None:
    for i in sel:
        _check_index(i, n, what)
    if any(a >= b for a, b in zip(sel, sel[1:])):
        raise UnsortedSelector(f"{what} selector {list(sel)} is not strictly ascending")


def select(m: Matrix, rows: Optional[Sequence[int]] = None, cols: Optional[Sequence[int]] = None) -> Matrix:
    """Submatrix on the given ascending row and column indices (``None`` keeps all)."""
    rows = range(m.rows) if rows is None else list(rows)
    cols = range(m.cols) if cols is None else list(cols)
    _check_selector(rows, m.rows, "row")
    _check_selector(cols, m.cols, "column")
    data = tuple(tuple(m._data[i][j] for j in cols) for i in rows)
    return Matrix._raw(data, len(rows), len(cols))


def delete_row_col(m: Matrix, r: int, c: Optional[int] = None) -> Matrix:
    """Remove row ``r`` and column ``c`` (defaults to ``r``)."""
    c = r if c is None else c
    _check_index(r, m.rows, "row")
    _check_index(c, m.cols, "column")
    data = tuple(
        tuple(x for j, x in enumerate(row) if j != c) for i, row in enumerate(m._data) if i != r
    )
    return Matrix._raw(data, m.rows - 1, m.cols - 1)


def det_integer_rows(rows: list[list[int]]) -> int:
    """Bareiss fraction-free elimination on a square integer matrix.

    ``rows`` is consumed (modified in place).
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
        prev = pivot
    if n == 0:
        return 1
    return sign * rows[n - 1][n - 1]


def det_rows(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square list-of-rows of Fractions or ints."""
    if all(type(x) is int for row in rows for x in row):
        return Fraction(det_integer_rows([list(row) for row in rows]))
    scaled = []
    denom = 1
    for row in rows:
        # int.denominator is 1, so integer rows pass through unscaled
        d = lcm(*(x.denominator for x in row)) if row else 1
        if d == 1:
            scaled.append([int(x) for x in row])
        else:
            denom *= d
            scaled.append([int(x * d) for x in row])
    return Fraction(det_integer_rows(scaled), denom)


def det(m: Matrix) -> Fraction:
    """Exact determinant; the 0x0 matrix has determinant 1."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return det_rows(m._data)


def cofactor(m: Matrix, i: int, j: int) -> Fraction:
    if not m.is_square:
        raise NotSquare(f"cofactor of a {m.rows}x{m.cols} matrix")
    minor = det(delete_row_col(m, i, j))
    return minor if (i + j) % 2 == 0 else -minor


def power_is_zero(m: Matrix, k: int) -> bool:
    """True iff ``m**k`` is the zero matrix."""
    if not m.is_square:
        raise NotSquare(f"power of a {m.rows}x{m.cols} matrix")
    if k < 1:
        raise ValueError("exponent must be at least 1")
    acc = m
    for _ in range(k - 1):
        if acc.is_zero():
            return True
        acc = multiply(acc, m)
    return acc.is_zero()
