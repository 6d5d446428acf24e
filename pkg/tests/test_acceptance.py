"""Acceptance gate.

Each criterion records one PASS/FAIL line, echoed in the terminal summary
(see ``pytest_terminal_summary`` in conftest.py). Running this file directly
with ``python tests/test_acceptance.py`` prints the same lines.
"""

import functools
import time
from fractions import Fraction

from cauchon.cgl import cgl_stratum_dim, diagram_subset, quantum_matrix_system, stratum_matrix
from cauchon.counting import conjecture_limit, conjecture_table, diagram_count, dim_distribution, table_to_text
from cauchon.diagram import (
    WhiteLabelling,
    candidate_boxes,
    count_brute_force,
    enumerate_diagrams,
    enumerate_rows,
    parse_diagram,
)
from cauchon.strata import build_chain, skew_adjacency, stratum_dim, verify_lemma1
from cauchon.weyl import reduced_words, root_system, schubert_cgl_matrix, weyl_element, zero_stratum_dim
from cauchon.exactla import kernel_dim

from conftest import SPARSE_LABELS, FIVE_WHITE_MATRIX, GOLDEN, oracle_rank, oracle_skew_adjacency

RESULTS: list[str] = []


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS.append(f"FAIL  [{number:2d}] {title} ({type(exc).__name__}: {exc})")
                raise
            took = time.perf_counter() - t0
            extra = f"; {detail}" if detail else ""
            RESULTS.append(f"PASS  [{number:2d}] {title} ({took:.2f}s{extra})")

        return run

    return wrap


def shapes(limit: int):
    return [(m, n) for m in range(1, limit + 1) for n in range(1, limit + 1)]


@criterion(1, "five-white-box skew-adjacency matrix matches the reference 5x5 matrix")
def test_01_five_white_matrix():
    c = parse_diagram((GOLDEN / "five_white.txt").read_text())
    assert skew_adjacency(c).tolist() == FIVE_WHITE_MATRIX


@criterion(2, "candidate boxes of the labelled 4x4 example are {1,3,4,8,15}")
def test_02_candidates():
    c = parse_diagram((GOLDEN / "labelled.txt").read_text())
    labelling = WhiteLabelling(c, dict(zip(c.white_boxes(), SPARSE_LABELS)))
    assert candidate_boxes(c, labelling) == {1, 3, 4, 8, 15}


@criterion(3, "streamed count = closed form for m,n <= 5; = brute force for mn <= 16")
def test_03_count_equivalence():
    brute = 0
    for m, n in shapes(5):
        streamed = sum(1 for _ in enumerate_rows(m, n))
        assert streamed == diagram_count(m, n), (m, n)
        if m * n <= 16:
            assert count_brute_force(m, n) == streamed, (m, n)
            brute += 1
    assert diagram_count(5, 5) == 329462
    return f"{len(shapes(5))} shapes, {brute} brute-forced"


@criterion(4, "stratum_dim <= min(m,n) and has the parity of the white count, m,n <= 4")
def test_04_bound_and_parity():
    total = 0
    for m, n in shapes(4):
        for c in enumerate_diagrams(m, n):
            e = stratum_dim(c)
            assert 0 <= e <= min(m, n), c
            assert e % 2 == c.white_count % 2, c
            total += 1
    return f"{total} diagrams"


@criterion(5, "dimension support is exactly {0..min(m,n)} for m,n <= 5")
def test_05_surjectivity():
    for m, n in shapes(5):
        dist = dim_distribution(m, n)
        assert sorted(dist.counts) == list(range(min(m, n) + 1)), (m, n, dist.counts)
        assert dist.total == diagram_count(m, n)


@criterion(6, "chains descend by exactly 1 with strict containment, m,n <= 4")
def test_06_chains():
    total = 0
    for m, n in shapes(4):
        for c in enumerate_diagrams(m, n):
            chain = build_chain(c)
            dims = [stratum_dim(d) for d in chain.diagrams]
            assert dims == chain.dims
            assert dims == list(range(dims[0], -1, -1))
            for a, b in zip(chain.diagrams, chain.diagrams[1:]):
                assert a.black < b.black and len(b.black) == len(a.black) + 1
            total += 1
    return f"{total} chains"


@criterion(7, "triangular reduction audit passes without all-black columns, m,n <= 4")
def test_07_lemma_audit():
    total = 0
    for m, n in shapes(4):
        for c in enumerate_diagrams(m, n):
            if c.black_columns():
                continue
            rep = verify_lemma1(c)
            assert rep.passed, (c, rep.failure, rep.entry)
            total += 1
    return f"{total} diagrams audited"


@criterion(8, "diagram matrix = quantum-matrix CGL submatrix up to the index permutation, mn <= 16")
def test_08_diagram_cgl():
    total = 0
    for m, n in shapes(16):
        if m * n > 16:
            continue
        system, index = quantum_matrix_system(m, n)
        for c in enumerate_diagrams(m, n):
            whites = c.white_boxes()
            # column-major position of each white box, computed without the package helper
            order = sorted(range(len(whites)), key=lambda p: (whites[p][1], whites[p][0]))
            pos = {p: r for r, p in enumerate(order)}
            sub = stratum_matrix(system, diagram_subset(c, index)).tolist()
            mc = oracle_skew_adjacency(m, n, c.black)
            assert all(mc[p][q] == sub[pos[p]][pos[q]] for p in range(len(mc)) for q in range(len(mc)))
            assert cgl_stratum_dim(system, diagram_subset(c, index)) == stratum_dim(c)
            total += 1
    return f"{total} diagrams"


@criterion(9, "Schubert CGL kernel = ker(id + w) over all reduced words in A1 A2 A3 B2 G2")
def test_09_weyl():
    total = 0
    for name in ("A1", "A2", "A3", "B2", "G2"):
        rs = root_system(name)
        for word in reduced_words(rs):
            k = kernel_dim(schubert_cgl_matrix(rs, word))
            assert k == zero_stratum_dim(rs, word), (name, word)
            w = weyl_element(rs, word)
            rows = [[w[i, j] + (i == j) for j in range(rs.rank)] for i in range(rs.rank)]
            assert k == rs.rank - oracle_rank(rows), (name, word)
            total += 1
    return f"{total} reduced words"


@criterion(10, "m = 1: fraction of 1-dimensional strata is exactly 1/2 for n <= 20")
def test_10_one_row():
    for n in range(1, 21):
        dist = dim_distribution(1, n)
        assert dist.fraction(1) == Fraction(1, 2) == conjecture_limit(1, 1), n


@criterion(11, "m = 2: |empirical - limit| smaller at n = 12 than at n = 4 for i = 0,1,2")
def test_11_two_rows():
    rows = conjecture_table(2, 12, n_min=2)
    err = {(r.n, r.i): r.abs_error for r in rows}
    assert [conjecture_limit(2, i) for i in range(3)] == [Fraction(3, 8), Fraction(1, 2), Fraction(1, 8)]
    assert sum(r.count for r in rows if r.n == 12) == diagram_count(2, 12)
    table = "; ".join(
        f"n={n}: " + " ".join(f"{float(err[(n, i)]):.3g}" for i in range(3)) for n in range(2, 13)
    )
    print(table_to_text(rows))
    shrunk = {i: err[(12, i)] < err[(4, i)] for i in range(3)}
    assert all(shrunk.values()), f"strict decrease by i: {shrunk}; abs errors (i=0 1 2): {table}"
    return f"abs errors (i=0 1 2): {table}"


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    ok = True
    for t in tests:
        try:
            t()
        except BaseException:
            ok = False
    print("\n".join(RESULTS))
    sys.exit(0 if ok else 1)
