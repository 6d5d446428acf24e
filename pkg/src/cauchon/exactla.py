"""Exact integer/rational linear algebra for small dense matrices.

Ranks and kernels are computed by fraction-free elimination over Python
integers, so nothing is ever rounded.  Index sets handed to
:func:`delete_rows_cols` are 1-based, like the box labels they usually are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from cauchon import _kernels

MAX_SIZE = 4096


class MatrixError(ValueError):
    """Malformed matrix input."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MatrixError("negative matrix shape")
        if self.rows > MAX_SIZE or self.cols > MAX_SIZE:
            raise MatrixError(f"matrix larger than {MAX_SIZE} x {MAX_SIZE}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise MatrixError(f"entries do not form a {self.rows} x {self.cols} array")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "IntMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        if not self.rows:
            return IntMatrix(self.cols, 0, tuple(() for _ in range(self.cols)))
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise MatrixError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def is_antisymmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        e = self.entries
        return all(e[i][j] == -e[j][i] for i in range(self.rows) for j in range(i, self.cols))


class SkewIntMatrix(IntMatrix):
    """Square integer matrix with ``a[i][j] == -a[j][i]`` and zero diagonal."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_antisymmetric():
            raise MatrixError("matrix is not antisymmetric")

    @classmethod
    def from_rows(cls, rows, cols=None) -> "SkewIntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(entries), len(entries), entries)

    @classmethod
    def from_upper(cls, size: int, upper) -> "SkewIntMatrix":
        """Build from a function ``upper(i, j)`` giving entries for i < j (0-based)."""
        mat = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = upper(i, j)
                mat[i][j] = v
                mat[j][i] = -v
        return cls(size, size, tuple(map(tuple, mat)))

    @property
    def size(self) -> int:
        return self.rows


def _as_rows(m) -> tuple[Sequence[Sequence[int]], int]:
    if isinstance(m, IntMatrix):
        return m.entries, m.cols
    rows = [list(r) for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rank(m) -> int:
    """Rank over the rationals."""
    rows, cols = _as_rows(m)
    if not rows or not cols:
        return 0
    return _kernels.rank(rows)


def kernel_dim(m) -> int:
    """Dimension of the right kernel over the rationals (``cols - rank``)."""
    _, cols = _as_rows(m)
    return cols - rank(m)


def kernel_basis(m) -> list[tuple[int, ...]]:
    """Integer basis of the right kernel.

    One vector per non-pivot column of the echelon form, with a 1 in that
    column and 0 in the other free columns, scaled by the least common
    denominator of its entries.
    """
    rows, cols = _as_rows(m)
    a = [list(r) for r in rows]
    pivots = _kernels.echelon(a) if a and cols else []
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = a[r]
            s = sum((row[j] * x[j] for j in range(pc + 1, cols)), Fraction(0))
            x[pc] = -s / row[pc]
        den = lcm(*(v.denominator for v in x))
        basis.append(tuple(int(v * den) for v in x))
    return basis


def delete_rows_cols(m: IntMatrix, idx: Iterable[int]) -> IntMatrix:
    """Remove the rows and columns with the given 1-based indices from a square matrix."""
    drop = set(idx)
    if m.rows != m.cols:
        raise MatrixError("delete_rows_cols needs a square matrix")
    bad = [i for i in drop if not 1 <= i <= m.rows]
    if bad:
        raise IndexError(f"index {min(bad)} out of range 1..{m.rows}")
    keep = [i for i in range(m.rows) if i + 1 not in drop]
    entries = tuple(tuple(m.entries[i][j] for j in keep) for i in keep)
    out = IntMatrix(len(keep), len(keep), entries)
    if isinstance(m, SkewIntMatrix):
        return SkewIntMatrix(out.rows, out.cols, out.entries)
    return out


def principal_submatrix(m: IntMatrix, keep: Sequence[int]) -> IntMatrix:
    """Rows and columns at the 0-based positions ``keep``, in that order."""
    entries = tuple(tuple(m.entries[i][j] for j in keep) for i in keep)
    cls = SkewIntMatrix if isinstance(m, SkewIntMatrix) else IntMatrix
    return cls(len(keep), len(keep), entries)


def format_matrix(m: IntMatrix) -> str:
    """Text format: ``rows cols`` then one line of space-separated integers per row."""
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in r) for r in m.entries)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixError("line 1: empty matrix file")
    try:
        rows, cols = (int(t) for t in lines[0].split())
    except ValueError:
        raise MatrixError(f"line 1: expected 'rows cols', got {lines[0]!r}") from None
    if len(lines) - 1 != rows:
        raise MatrixError(f"expected {rows} matrix rows, found {len(lines) - 1}")
    entries = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            r = tuple(int(t) for t in ln.split())
        except ValueError:
            raise MatrixError(f"line {k}: non-integer entry") from None
        if len(r) != cols:
            raise MatrixError(f"line {k}: expected {cols} entries, found {len(r)}")
        entries.append(r)
    return IntMatrix(rows, cols, tuple(entries))
