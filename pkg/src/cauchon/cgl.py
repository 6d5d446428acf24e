"""Stratum dimensions for uniparameter CGL extensions.

An extension on N generators is reduced to its antisymmetric exponent
matrix.  A subset w of 1..N (the generators killed by the H-prime) has
stratum dimension equal to the kernel dimension of the principal submatrix
on the complement of w.  Which subsets are genuine Cauchon diagrams of the
extension is not decided here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from cauchon.diagram import CauchonDiagram, DiagramError
from cauchon.exactla import MatrixError, SkewIntMatrix, kernel_dim, principal_submatrix


@dataclass(frozen=True)
class CGLSystem:
    """``a[j][i]`` is the exponent with lambda_{j,i} = q ** a[j][i]."""

    N: int
    a: SkewIntMatrix

    def __post_init__(self):
        if self.N < 1 or self.a.size != self.N:
            raise MatrixError(f"need a {self.N} x {self.N} antisymmetric matrix")


def complement(sys: CGLSystem, w: Iterable[int]) -> list[int]:
    """Increasing 1-based indices not in ``w``."""
    w = set(w)
    bad = [k for k in w if not 1 <= k <= sys.N]
    if bad:
        raise IndexError(f"index {min(bad)} out of range 1..{sys.N}")
    return [k for k in range(1, sys.N + 1) if k not in w]


def stratum_matrix(sys: CGLSystem, w: Iterable[int]) -> SkewIntMatrix:
    return principal_submatrix(sys.a, [k - 1 for k in complement(sys, w)])


def cgl_stratum_dim(sys: CGLSystem, w: Iterable[int]) -> int:
    return kernel_dim(stratum_matrix(sys, w))


def box_index(m: int, i: int, j: int) -> int:
    """Index of grid box (i, j) in the quantum-matrix system: column-major, 1-based.

    Each m x m diagonal block of B then holds one grid column, ordered top to
    bottom, and this makes B the skew-adjacency matrix of the all-white grid.
    """
    return (j - 1) * m + i


def quantum_matrix_system(m: int, n: int) -> tuple[CGLSystem, dict[tuple[int, int], int]]:
    """The mn x mn matrix B of m x n quantum matrices and its box -> index map.

    B has n diagonal blocks A (0 on the diagonal, +1 above, -1 below) and
    +I_m / -I_m blocks above / below them.
    """
    if m < 1 or n < 1:
        raise DiagramError(f"shape must be positive, got {m} x {n}")
    size = m * n

    def upper(k, l):
        bk, rk = divmod(k, m)
        bl, rl = divmod(l, m)
        if bk == bl:
            return 1
        return 1 if rk == rl else 0

    index = {(i, j): box_index(m, i, j) for i in range(1, m + 1) for j in range(1, n + 1)}
    return CGLSystem(size, SkewIntMatrix.from_upper(size, upper)), index


def diagram_subset(c: CauchonDiagram, index: dict[tuple[int, int], int]) -> list[int]:
    """Indices of the black boxes of ``c`` under a box -> index map."""
    return sorted(index[b] for b in c.black)


def diagram_permutation(c: CauchonDiagram) -> list[int]:
    """For each row-major white box, its 0-based position among the column-major ones."""
    whites = c.white_boxes()
    order = sorted(range(len(whites)), key=lambda p: box_index(c.m, *whites[p]))
    pos = [0] * len(whites)
    for rank, p in enumerate(order):
        pos[p] = rank
    return pos


def format_system(sys: CGLSystem) -> str:
    lines = [str(sys.N)]
    lines.extend(" ".join(str(x) for x in r) for r in sys.a.entries)
    return "\n".join(lines) + "\n"


def parse_system(text: str) -> CGLSystem:
    """``N`` on the first line, then N rows of N integers."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixError("line 1: empty system file")
    try:
        size = int(lines[0])
    except ValueError:
        raise MatrixError(f"line 1: expected N, got {lines[0]!r}") from None
    if len(lines) - 1 != size:
        raise MatrixError(f"expected {size} matrix rows, found {len(lines) - 1}")
    rows = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            r = [int(t) for t in ln.split()]
        except ValueError:
            raise MatrixError(f"line {k}: non-integer entry") from None
        if len(r) != size:
            raise MatrixError(f"line {k}: expected {size} entries, found {len(r)}")
        rows.append(r)
    return CGLSystem(size, SkewIntMatrix.from_rows(rows))


def parse_subset(text: str) -> list[int]:
    """Space- or comma-separated 1-based indices."""
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise MatrixError(f"bad subset {text!r}") from None
