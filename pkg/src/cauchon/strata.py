"""Stratum dimensions of Cauchon diagrams and dimension-decreasing chains.

The stratum dimension of a diagram is the rational kernel dimension of its
skew-adjacency matrix M(C), indexed by the white boxes in row-major order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from cauchon import _kernels
from cauchon.diagram import (
    CauchonDiagram,
    DiagramError,
    WhiteLabelling,
    candidate_boxes,
    format_diagram,
    parse_diagram,
)
from cauchon.exactla import IntMatrix, SkewIntMatrix, delete_rows_cols, kernel_dim


class DescentError(ValueError):
    """Raised when no single-box blackening lowers the stratum dimension."""


def skew_adjacency(c: CauchonDiagram) -> SkewIntMatrix:
    """M(C): +1 at (p, q) when white box p is left of q in its row or above q in its column."""
    boxes = c.white_boxes()

    def upper(p, q):
        (ip, jp), (iq, jq) = boxes[p], boxes[q]
        # q after p in row-major order, so q is right of or below p
        return 1 if ip == iq or jp == jq else 0

    return SkewIntMatrix.from_upper(len(boxes), upper)


def stratum_dim(c: CauchonDiagram) -> int:
    return _kernels.diagram_kernel_dim(c.rows, c.n)


@dataclass(frozen=True)
class StratumReport:
    diagram: CauchonDiagram
    white_count: int
    stratum_dim: int


def report(c: CauchonDiagram) -> StratumReport:
    return StratumReport(c, c.white_count, stratum_dim(c))


def strip_black_columns(c: CauchonDiagram) -> CauchonDiagram:
    """Drop every all-black column; M(C) is unchanged by this."""
    drop = set(c.black_columns())
    if len(drop) == c.n:
        raise DiagramError("every column is black")
    keep = [j for j in range(1, c.n + 1) if j not in drop]
    black = [(i, k) for i in range(1, c.m + 1) for k, j in enumerate(keep, start=1) if c.is_black(i, j)]
    return CauchonDiagram.from_black(c.m, len(keep), black)


@dataclass
class Lemma1Report:
    """Outcome of :func:`verify_lemma1`.

    ``column_tops`` are the labels a_1..a_n of the top white box per column,
    ``deleted`` is S*M(C) with those rows and columns removed, and ``blocks``
    gives its diagonal blocks as (start, size), one per diagram row.
    """

    passed: bool
    s: IntMatrix
    product: IntMatrix
    column_tops: list[int]
    deleted: IntMatrix
    blocks: list[tuple[int, int]] = field(default_factory=list)
    failure: str | None = None
    entry: tuple[int, int] | None = None


def lemma1_matrix(c: CauchonDiagram) -> tuple[IntMatrix, list[int]]:
    """The unit lower-triangular S, and the column-top labels a_1..a_n.

    S has -1 at (p, a_k) when white box p sits in column k below its top box.
    """
    if c.black_columns():
        raise DiagramError(f"all-black columns {c.black_columns()}; strip them first")
    boxes = c.white_boxes()
    d = len(boxes)
    tops: dict[int, int] = {}
    for label, (_, j) in enumerate(boxes, start=1):
        tops.setdefault(j, label)
    s = [[int(p == q) for q in range(d)] for p in range(d)]
    for label, (_, j) in enumerate(boxes, start=1):
        a = tops[j]
        if a != label:
            s[label - 1][a - 1] = -1
    return IntMatrix.from_rows(s, d), [tops[j] for j in range(1, c.n + 1)]


def verify_lemma1(c: CauchonDiagram) -> Lemma1Report:
    """Audit the triangular reduction that bounds the stratum dimension by n.

    Checks that deleting the column-top rows/columns from S*M(C) leaves a
    block lower-triangular matrix (blocks = diagram rows) whose diagonal
    blocks are -I plus an antisymmetric matrix, and that it is invertible.
    """
    s, tops = lemma1_matrix(c)
    product = s @ skew_adjacency(c)
    deleted = delete_rows_cols(product, tops)
    top_set = set(tops)
    # row of the diagram for each surviving index
    row_of = [i for label, (i, _) in enumerate(c.white_boxes(), start=1) if label not in top_set]
    blocks: list[tuple[int, int]] = []
    for k, i in enumerate(row_of):
        if blocks and row_of[blocks[-1][0]] == i:
            blocks[-1] = (blocks[-1][0], blocks[-1][1] + 1)
        else:
            blocks.append((k, 1))
    rep = Lemma1Report(True, s, product, tops, deleted, blocks)

    def fail(msg, p, q):
        rep.passed, rep.failure, rep.entry = False, msg, (p + 1, q + 1)
        return rep

    e = deleted.entries
    size = deleted.rows
    for p in range(size):
        for q in range(size):
            if row_of[q] > row_of[p] and e[p][q] != 0:
                return fail("nonzero entry above the diagonal blocks", p, q)
            if row_of[q] == row_of[p]:
                # -I + antisymmetric: diagonal -1, off-diagonal pairs sum to 0
                want = -1 if p == q else -e[q][p]
                if e[p][q] != want:
                    return fail("diagonal block is not -I plus antisymmetric", p, q)
    if kernel_dim(deleted) != 0:
        rep.passed, rep.failure = False, "deleted matrix is singular"
    return rep


def descend_one(c: CauchonDiagram) -> CauchonDiagram:
    """Blacken one box to lower the stratum dimension by exactly one.

    Among the boxes whose blackening keeps the diagram valid, the one with
    the smallest row-major label that works is chosen.
    """
    e = stratum_dim(c)
    if e == 0:
        raise DescentError("stratum dimension is already 0")
    labelling = WhiteLabelling.canonical(c)
    for label in sorted(candidate_boxes(c, labelling)):
        nxt = c.blacken(*labelling.box(label))
        if stratum_dim(nxt) == e - 1:
            return nxt
    raise DescentError(f"no single blackening lowers dimension {e}")


@dataclass(frozen=True)
class DiagramChain:
    """Diagrams C_0 ⊊ C_1 ⊊ ... with their stratum dimensions."""

    steps: tuple[tuple[CauchonDiagram, int], ...]

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def diagrams(self) -> list[CauchonDiagram]:
        return [d for d, _ in self.steps]

    @property
    def dims(self) -> list[int]:
        return [e for _, e in self.steps]


def build_chain(c: CauchonDiagram) -> DiagramChain:
    """Descend from ``c`` one box at a time down to stratum dimension 0."""
    steps = [(c, stratum_dim(c))]
    while steps[-1][1] > 0:
        nxt = descend_one(steps[-1][0])
        steps.append((nxt, steps[-1][1] - 1))
    return DiagramChain(tuple(steps))


def format_chain(chain: DiagramChain) -> str:
    """Each step as ``dim: <e>`` followed by the diagram in text format."""
    return "".join(f"dim: {e}\n" + format_diagram(d) for d, e in chain.steps)


def chain_to_json(chain: DiagramChain) -> str:
    return json.dumps(
        {
            "schema": 1,
            "steps": [{"diagram": format_diagram(d), "dim": e} for d, e in chain.steps],
        },
        indent=2,
    )


def parse_chain(text: str) -> DiagramChain:
    steps = []
    block: list[str] = []
    dim = None
    for line in text.splitlines():
        if line.startswith("dim:"):
            if dim is not None:
                steps.append((parse_diagram("\n".join(block)), dim))
            dim = int(line.split(":", 1)[1])
            block = []
        elif line.strip():
            block.append(line)
    if dim is not None:
        steps.append((parse_diagram("\n".join(block)), dim))
    return DiagramChain(tuple(steps))
