"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package's own code paths: validity is
checked box by box straight from the definition, and ranks come from sympy.
"""

import itertools
from pathlib import Path

import pytest
import sympy

from cauchon.diagram import CauchonDiagram, parse_diagram

GOLDEN = Path(__file__).parent / "golden"

FIVE_WHITE_MATRIX = [
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [-1, 0, 0, 1, 1],
    [0, -1, -1, 0, 1],
    [0, 0, -1, -1, 0],
]
# non-consecutive labels for the labelled 4 x 4 example, row-major over its white boxes
SPARSE_LABELS = [1, 3, 4, 8, 10, 15, 16]


def oracle_valid(m, n, black):
    """Definition check on a set of 1-based black positions."""
    for i, j in black:
        left = all((i, k) in black for k in range(1, j))
        above = all((k, j) in black for k in range(1, i))
        if not (left or above):
            return False
    return True


def oracle_black_sets(m, n):
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    for bits in itertools.product((0, 1), repeat=m * n):
        yield {c for c, b in zip(cells, bits) if b}


def oracle_rank(rows):
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def oracle_skew_adjacency(m, n, black):
    whites = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1) if (i, j) not in black]
    out = []
    for a, b in whites:
        row = []
        for c, e in whites:
            if (a == c and b < e) or (b == e and a < c):
                row.append(1)
            elif (a == c and b > e) or (b == e and a > c):
                row.append(-1)
            else:
                row.append(0)
        out.append(row)
    return out


@pytest.fixture
def labelled():
    return parse_diagram((GOLDEN / "labelled.txt").read_text())


@pytest.fixture
def five_white():
    return parse_diagram((GOLDEN / "five_white.txt").read_text())


@pytest.fixture
def white2():
    return CauchonDiagram.all_white(2, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: s[7:10]):
        terminalreporter.write_line(line)
