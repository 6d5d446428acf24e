"""Cauchon diagrams: validity, containment, enumeration and single-box extensions.

A diagram is stored as one n-bit word per row.  Column 1 is the most
significant bit and a set bit is a black box, so sorting words as integers
sorts rows lexicographically (white before black, read left to right).
Boxes are addressed 1-based as ``(row, column)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from cauchon import _kernels

MAX_COLUMNS = 64


class DiagramError(ValueError):
    """Malformed or invalid diagram."""


def _check_shape(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DiagramError(f"diagram shape must be positive, got {m} x {n}")
    if n > MAX_COLUMNS:
        raise DiagramError(f"at most {MAX_COLUMNS} columns are supported, got {n}")


def _bit(n: int, col: int) -> int:
    return 1 << (n - col)


def _leading_black(word: int, n: int) -> int:
    """Length of the run of black boxes starting at column 1."""
    k = 0
    while k < n and (word >> (n - 1 - k)) & 1:
        k += 1
    return k


def _offending(rows: Iterable[int], n: int) -> tuple[int, int] | None:
    full = (1 << n) - 1
    above = full  # columns black in every row so far
    for i, word in enumerate(rows, start=1):
        k = _leading_black(word, n)
        prefix = full ^ ((1 << (n - k)) - 1)
        bad = word & ~prefix & ~above
        if bad:
            return i, n - bad.bit_length() + 1
        above &= word
    return None


@dataclass(frozen=True)
class CauchonDiagram:
    """An m x n diagram; ``rows[i]`` is the black-box word of row i+1."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_shape(self.m, self.n)
        if len(self.rows) != self.m:
            raise DiagramError(f"expected {self.m} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(not 0 <= w <= full for w in self.rows):
            raise DiagramError("row word out of range")
        where = _offending(self.rows, self.n)
        if where is not None:
            raise DiagramError(f"invalid at {where}")

    @classmethod
    def from_black(cls, m: int, n: int, black: Iterable[tuple[int, int]]) -> "CauchonDiagram":
        return cls(m, n, _words_from_black(m, n, black))

    @classmethod
    def all_white(cls, m: int, n: int) -> "CauchonDiagram":
        return cls(m, n, (0,) * m)

    @classmethod
    def all_black(cls, m: int, n: int) -> "CauchonDiagram":
        return cls(m, n, ((1 << n) - 1,) * m)

    @classmethod
    def white_corner(cls, m: int, n: int, d: int) -> "CauchonDiagram":
        """Box (i, j) white exactly when i <= d and j <= d."""
        full = (1 << n) - 1
        top = full & ((1 << max(n - d, 0)) - 1)
        return cls(m, n, tuple(top if i < d else full for i in range(m)))

    def is_black(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] & _bit(self.n, j))

    @property
    def black(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1) if self.is_black(i, j)
        )

    def white_boxes(self) -> list[tuple[int, int]]:
        """White boxes in row-major order, i.e. in order of canonical label."""
        return [
            (i, j)
            for i in range(1, self.m + 1)
            for j in range(1, self.n + 1)
            if not self.is_black(i, j)
        ]

    @property
    def white_count(self) -> int:
        return self.m * self.n - sum(w.bit_count() for w in self.rows)

    def blacken(self, i: int, j: int) -> "CauchonDiagram":
        """The diagram with box (i, j) made black; raises DiagramError if invalid."""
        rows = list(self.rows)
        rows[i - 1] |= _bit(self.n, j)
        return CauchonDiagram(self.m, self.n, tuple(rows))

    def black_columns(self) -> list[int]:
        """Columns that are black in every row."""
        common = (1 << self.n) - 1
        for w in self.rows:
            common &= w
        return [j for j in range(1, self.n + 1) if common & _bit(self.n, j)]

    def __str__(self) -> str:
        return format_diagram(self).rstrip("\n")


def _words_from_black(m: int, n: int, black: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    _check_shape(m, n)
    rows = [0] * m
    for i, j in black:
        if not (1 <= i <= m and 1 <= j <= n):
            raise DiagramError(f"box {(i, j)} outside {m} x {n} grid")
        rows[i - 1] |= _bit(n, j)
    return tuple(rows)


def is_valid(m: int, n: int, black: Iterable[tuple[int, int]] | None = None, *, rows=None) -> bool:
    """Whether every black box has all boxes to its left, or all boxes above it, black.

    Give the grid either as a set of black 1-based positions or as row words.
    """
    if rows is None:
        rows = _words_from_black(m, n, black or ())
    else:
        _check_shape(m, n)
    return _offending(rows, n) is None


def first_violation(m: int, n: int, rows) -> tuple[int, int] | None:
    """First offending black box in row-major order, or None when valid."""
    _check_shape(m, n)
    return _offending(rows, n)


def contains(c: CauchonDiagram, c2: CauchonDiagram) -> bool:
    """True when every black box of ``c2`` is black in ``c``."""
    if (c.m, c.n) != (c2.m, c2.n):
        raise DiagramError(f"shape mismatch: {c.m} x {c.n} vs {c2.m} x {c2.n}")
    return all(b & ~a == 0 for a, b in zip(c.rows, c2.rows))


def first_rows(m: int, n: int) -> list[int]:
    """Row-1 words, one per enumeration partition, in enumeration order."""
    _check_shape(m, n)
    return _kernels.admissible_rows((1 << n) - 1, n)


def enumerate_rows(m: int, n: int, first_row: int | None = None) -> Iterator[tuple[int, ...]]:
    """Row-word tuples of every valid diagram (or of one row-1 partition).

    Rows are generated top to bottom carrying the set of columns that are
    black in all rows so far; each row is a black prefix plus black boxes
    under such columns.  Order is lexicographic in the rows, row 1 outermost.
    """
    _check_shape(m, n)
    return _kernels.iter_diagrams(m, n, first_row)


def enumerate_diagrams(m: int, n: int, first_row: int | None = None) -> Iterator[CauchonDiagram]:
    for rows in enumerate_rows(m, n, first_row):
        d = object.__new__(CauchonDiagram)
        object.__setattr__(d, "m", m)
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "rows", rows)
        yield d


def count_by_transfer(m: int, n: int) -> int:
    """Number of valid diagrams, by dynamic programming over the row-state."""
    _check_shape(m, n)
    states = {(1 << n) - 1: 1}
    for _ in range(m):
        nxt: dict[int, int] = {}
        for free, cnt in states.items():
            for s in _kernels.admissible_rows(free, n):
                nxt[free & s] = nxt.get(free & s, 0) + cnt
        states = nxt
    return sum(states.values())


def count_brute_force(m: int, n: int) -> int:
    """Number of valid diagrams by filtering all 2^(mn) colourings."""
    _check_shape(m, n)
    words = range(1 << n)
    return sum(1 for rows in itertools.product(words, repeat=m) if _offending(rows, n) is None)


@dataclass(frozen=True)
class WhiteLabelling:
    """Labels on the white boxes, increasing along rows and from row to row."""

    diagram: CauchonDiagram
    labels: Mapping[tuple[int, int], int]

    def __post_init__(self):
        whites = self.diagram.white_boxes()
        if set(self.labels) != set(whites):
            raise DiagramError("labels must cover exactly the white boxes")
        seq = [self.labels[b] for b in whites]
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise DiagramError("labels must increase along rows and down the rows")

    @classmethod
    def canonical(cls, diagram: CauchonDiagram) -> "WhiteLabelling":
        return cls(diagram, {b: k for k, b in enumerate(diagram.white_boxes(), start=1)})

    def box(self, label: int) -> tuple[int, int]:
        for b, lab in self.labels.items():
            if lab == label:
                return b
        raise KeyError(label)


def candidate_boxes(c: CauchonDiagram, labelling: WhiteLabelling | None = None) -> set[int]:
    """Labels of white boxes whose blackening alone leaves a valid diagram."""
    labelling = labelling or WhiteLabelling.canonical(c)
    out = set()
    for i, j in c.white_boxes():
        rows = list(c.rows)
        rows[i - 1] |= _bit(c.n, j)
        if _offending(rows, c.n) is None:
            out.add(labelling.labels[(i, j)])
    return out


def format_diagram(c: CauchonDiagram) -> str:
    """``m n`` then one line per row, ``.`` white and ``#`` black."""
    lines = [f"{c.m} {c.n}"]
    for i in range(1, c.m + 1):
        lines.append("".join("#" if c.is_black(i, j) else "." for j in range(1, c.n + 1)))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> tuple[int, int, tuple[int, ...]]:
    """Parse the diagram text format without checking validity."""
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise DiagramError("line 1: empty input")
    try:
        m, n = (int(t) for t in lines[0].split())
    except ValueError:
        raise DiagramError(f"line 1: expected 'm n', got {lines[0]!r}") from None
    _check_shape(m, n)
    if len(lines) - 1 != m:
        raise DiagramError(f"line {len(lines) + 1}: expected {m} grid lines, found {len(lines) - 1}")
    rows = []
    for k, ln in enumerate(lines[1:], start=2):
        if len(ln) != n or set(ln) - {".", "#"}:
            raise DiagramError(f"line {k}: expected {n} characters from '.#', got {ln!r}")
        rows.append(int(ln.replace(".", "0").replace("#", "1"), 2))
    return m, n, tuple(rows)


def parse_diagram(text: str) -> CauchonDiagram:
    m, n, rows = parse_grid(text)
    return CauchonDiagram(m, n, rows)
