import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchon.diagram import (
    CauchonDiagram,
    DiagramError,
    WhiteLabelling,
    candidate_boxes,
    contains,
    count_brute_force,
    count_by_transfer,
    enumerate_diagrams,
    enumerate_rows,
    first_rows,
    first_violation,
    format_diagram,
    is_valid,
    parse_diagram,
    parse_grid,
)

from conftest import SPARSE_LABELS, GOLDEN, oracle_black_sets, oracle_valid


def test_is_valid_examples(labelled):
    assert is_valid(4, 4, labelled.black)
    assert is_valid(3, 5, set())
    assert not is_valid(2, 2, {(2, 2)})
    assert first_violation(2, 2, parse_grid("2 2\n..\n.#\n")[2]) == (2, 2)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_is_valid_matches_definition(m, n):
    for black in oracle_black_sets(m, n):
        assert is_valid(m, n, black) == oracle_valid(m, n, black)


def test_contains_examples():
    left = CauchonDiagram.from_black(2, 2, {(1, 1)})
    right = CauchonDiagram.from_black(2, 2, {(2, 1), (2, 2)})
    assert not contains(left, right) and not contains(right, left)
    assert contains(left, left)
    assert contains(CauchonDiagram.all_black(2, 2), CauchonDiagram.all_white(2, 2))
    with pytest.raises(DiagramError):
        contains(left, CauchonDiagram.all_white(2, 3))


def test_contains_is_a_partial_order():
    ds = list(enumerate_diagrams(2, 3))
    for a in ds:
        assert contains(a, a)
        for b in ds:
            if contains(a, b) and contains(b, a):
                assert a == b
            for c in ds:
                if contains(a, b) and contains(b, c):
                    assert contains(a, c)


@pytest.mark.parametrize("m,n,count", [(2, 2, 14), (3, 3, 230), (1, 1, 2), (1, 5, 32), (1, 7, 128)])
def test_enumerate_counts(m, n, count):
    assert sum(1 for _ in enumerate_rows(m, n)) == count


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)] + [(2, 7), (7, 2), (1, 12)])
def test_enumeration_matches_brute_force(m, n):
    seen = set(enumerate_rows(m, n))
    brute = {
        rows for rows in itertools.product(range(1 << n), repeat=m)
        if is_valid(m, n, rows=rows)
    }
    assert seen == brute
    assert len(seen) == sum(1 for _ in enumerate_rows(m, n))  # no repeats
    assert count_by_transfer(m, n) == len(brute) == count_brute_force(m, n)


@pytest.mark.parametrize("m,n", [(1, 4), (2, 3), (2, 5), (3, 4), (2, 6)])
def test_enumeration_count_symmetric(m, n):
    assert sum(1 for _ in enumerate_rows(m, n)) == sum(1 for _ in enumerate_rows(n, m))


def test_enumeration_order_and_partitions():
    rows = list(enumerate_rows(3, 3))
    assert rows == sorted(rows)
    parts = [list(enumerate_rows(3, 3, first_row=r)) for r in first_rows(3, 3)]
    assert [x for p in parts for x in p] == rows
    assert all(p and all(x[0] == r for x in p) for p, r in zip(parts, first_rows(3, 3)))


def test_enumeration_supports_early_stop():
    gen = enumerate_diagrams(6, 6)
    first = list(itertools.islice(gen, 5))
    assert len(first) == 5 and first[0] == CauchonDiagram.all_white(6, 6)


def test_candidate_boxes_sparse_labels(labelled):
    labelling = WhiteLabelling(labelled, dict(zip(labelled.white_boxes(), SPARSE_LABELS)))
    assert candidate_boxes(labelled, labelling) == {1, 3, 4, 8, 15}
    assert candidate_boxes(labelled) == {1, 2, 3, 4, 6}


def test_candidate_boxes_trivial():
    assert candidate_boxes(CauchonDiagram.all_white(1, 5)) == {1, 2, 3, 4, 5}
    assert candidate_boxes(CauchonDiagram.all_black(3, 2)) == set()


@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 4)])
def test_candidates_are_exactly_the_valid_blackenings(m, n):
    for c in enumerate_diagrams(m, n):
        cands = candidate_boxes(c)
        for label, (i, j) in enumerate(c.white_boxes(), start=1):
            assert oracle_valid(m, n, c.black | {(i, j)}) == (label in cands)


def test_labelling_must_increase(labelled):
    whites = labelled.white_boxes()
    with pytest.raises(DiagramError):
        WhiteLabelling(labelled, dict(zip(whites, [1, 3, 2, 8, 10, 15, 16])))


def test_white_corner():
    c = CauchonDiagram.white_corner(4, 3, 2)
    assert format_diagram(c) == "4 3\n..#\n..#\n###\n###\n"


def test_text_format_roundtrip(labelled):
    text = (GOLDEN / "labelled.txt").read_text()
    assert format_diagram(labelled) == text
    assert parse_diagram(text) == labelled


@pytest.mark.parametrize(
    "text",
    ["", "2\n..\n..\n", "2 2\n..\n", "2 2\n..\n.x\n", "2 2\n...\n..\n", "0 2\n", "2 2\n..\n.#\n"],
)
def test_parse_errors(text):
    with pytest.raises(DiagramError):
        parse_diagram(text)


def test_too_many_columns():
    with pytest.raises(DiagramError):
        CauchonDiagram.all_white(1, 65)
    assert CauchonDiagram.all_white(1, 64).white_count == 64


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_random_grids_agree_with_definition(m, n, data):
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    black = set(data.draw(st.lists(st.sampled_from(cells), unique=True)))
    assert is_valid(m, n, black) == oracle_valid(m, n, black)
