"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; matrices are small dense immutable
values. Row reduction is fraction-free (Bareiss) on integer-scaled rows, so
intermediate entries stay integral until the final normalisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Vector",
    "Matrix",
    "SingularMatrixError",
    "to_rational",
    "format_rational",
    "zero_vector",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_neg",
    "is_zero_vector",
    "rank",
    "kernel_basis",
    "solve",
    "in_column_span",
    "rref",
]


class SingularMatrixError(ValueError):
    pass


def to_rational(x) -> Fraction:
    """Coerce ``x`` to an exact rational. Floats and bools are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(ch in s for ch in ".eE"):
            raise ValueError(f"not a rational string: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_add(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def vec_neg(a: Sequence) -> Vector:
    return tuple(-x for x in a)


def is_zero_vector(a: Iterable) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"matrix {self.rows}x{self.cols} needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(to_rational(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        entries = [Fraction(0)] * (rows * cols)
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(col):
                entries[i * cols + j] = to_rational(x)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        entries = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = to_rational(v)
        return cls(n, n, tuple(entries))

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [Fraction(0)] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[(r0 + i) * cols + c0 + j] = b.entries[i * b.cols + j]
            r0 += b.rows
            c0 += b.cols
        return cls(rows, cols, tuple(out))

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    # arithmetic -----------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            return Matrix(
                self.rows,
                other.cols,
                tuple(
                    sum((a * b for a, b in zip(self.row(i), oc) if a and b), Fraction(0))
                    for i in range(self.rows)
                    for oc in ocols
                ),
            )
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        nz = [(j, x) for j, x in enumerate(v) if x]
        c = self.cols
        e = self.entries
        return tuple(
            sum((e[i * c + j] * x for j, x in nz), Fraction(0)) for i in range(self.rows)
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix sum")
        return Matrix(self.rows, self.cols, vec_add(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix difference")
        return Matrix(self.rows, self.cols, vec_sub(self.entries, other.entries))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, vec_neg(self.entries))

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, vec_scale(to_rational(c), self.entries))

    __rmul__ = scale

    def transpose(self) -> "Matrix":
        return Matrix.from_columns([self.row(i) for i in range(self.rows)], self.cols)

    def is_zero(self) -> bool:
        return is_zero_vector(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix.from_columns(self.columns() + other.columns(), self.rows)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise SingularMatrixError("non-square matrix has no inverse")
        n = self.rows
        aug = self.hstack(Matrix.identity(n))
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in red[:n]])

    def is_invertible(self) -> bool:
        return self.is_square() and rank(self) == self.rows

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, Fraction(x).denominator)
        out.append([int(Fraction(x) * d) for x in r])
    return out


def _bareiss_echelon(a: list[list[int]], ncols: int) -> list[int]:
    """In-place fraction-free row echelon form; returns pivot columns."""
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * row_i[j] - aic * row_r[j], prev)
                assert rem == 0, "Bareiss division not exact"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = _integer_rows(M.to_rows())
    pivots = _bareiss_echelon(a, M.cols)
    red = [[Fraction(x) for x in row] for row in a]
    for k, c in enumerate(pivots):
        pv = red[k][c]
        red[k] = [x / pv for x in red[k]]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [x - f * y for x, y in zip(red[i], red[k])]
    return red, pivots


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _integer_rows(M.to_rows())
    return len(_bareiss_echelon(a, M.cols))


def kernel_basis(M: Matrix) -> list[Vector]:
    """Exact basis of ``{v : M v = 0}``; one vector per free column."""
    if M.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(M.cols)) for j in range(M.cols)]
    red, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -red[k][free]
        basis.append(tuple(v))
    return basis


def solve(M: Matrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``M x = b``, or ``None`` when the system is inconsistent."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {M.rows} rows")
    if M.rows == 0:
        return zero_vector(M.cols)
    aug = Matrix(
        M.rows,
        M.cols + 1,
        tuple(x for i in range(M.rows) for x in (*M.row(i), to_rational(b[i]))),
    )
    red, pivots = rref(aug)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for k, c in enumerate(pivots):
        x[c] = red[k][M.cols]
    return tuple(x)


def in_column_span(M: Matrix, b: Sequence) -> bool:
    return solve(M, b) is not None
