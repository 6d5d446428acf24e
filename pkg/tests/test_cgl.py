import pytest

from cauchon.cgl import (
    CGLSystem,
    cgl_stratum_dim,
    diagram_permutation,
    diagram_subset,
    format_system,
    parse_subset,
    parse_system,
    quantum_matrix_system,
    stratum_matrix,
)
from cauchon.diagram import CauchonDiagram, enumerate_diagrams
from cauchon.exactla import MatrixError, SkewIntMatrix
from cauchon.strata import skew_adjacency, stratum_dim


def test_quantum_matrix_system_small():
    sys11, index = quantum_matrix_system(1, 1)
    assert sys11.a.tolist() == [[0]] and index == {(1, 1): 1}
    sys22, _ = quantum_matrix_system(2, 2)
    assert sys22.a.tolist() == [[0, 1, 1, 0], [-1, 0, 0, 1], [-1, 0, 0, 1], [0, -1, -1, 0]]


def test_quantum_matrix_system_block_pattern():
    system, index = quantum_matrix_system(2, 3)
    a = system.a.tolist()
    block = lambda r, c: [row[2 * c : 2 * c + 2] for row in a[2 * r : 2 * r + 2]]
    for r in range(3):
        for c in range(3):
            want = [[0, 1], [-1, 0]] if r == c else ([[1, 0], [0, 1]] if r < c else [[-1, 0], [0, -1]])
            assert block(r, c) == want
    # each diagonal block is one grid column
    assert [index[(i, 2)] for i in (1, 2)] == [3, 4]


def test_stratum_matrix_trivial_subsets():
    system, _ = quantum_matrix_system(2, 3)
    assert stratum_matrix(system, range(1, 7)).shape == (0, 0)
    assert stratum_matrix(system, []) == system.a
    assert cgl_stratum_dim(system, range(1, 7)) == 0
    with pytest.raises(IndexError):
        stratum_matrix(system, [7])


def test_cgl_stratum_dim_examples():
    system, _ = quantum_matrix_system(2, 2)
    assert cgl_stratum_dim(system, []) == 2
    zero = CGLSystem(5, SkewIntMatrix.from_upper(5, lambda i, j: 0))
    assert cgl_stratum_dim(zero, []) == 5


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (1, 5)])
def test_diagram_cgl_equivalence(m, n):
    system, index = quantum_matrix_system(m, n)
    for c in enumerate_diagrams(m, n):
        w = diagram_subset(c, index)
        sub = stratum_matrix(system, w).tolist()
        mc = skew_adjacency(c).tolist()
        perm = diagram_permutation(c)
        assert all(mc[p][q] == sub[perm[p]][perm[q]] for p in range(len(mc)) for q in range(len(mc)))
        assert cgl_stratum_dim(system, w) == stratum_dim(c)


def test_every_subset_is_accepted():
    system, _ = quantum_matrix_system(2, 2)
    dims = [cgl_stratum_dim(system, [k for k in range(1, 5) if mask >> (k - 1) & 1]) for mask in range(16)]
    assert len(dims) == 16
    # parity of the complement size
    assert all(e % 2 == (4 - bin(mask).count("1")) % 2 for mask, e in enumerate(dims))


def test_system_file_roundtrip():
    system, _ = quantum_matrix_system(2, 2)
    text = format_system(system)
    assert text.splitlines()[0] == "4"
    assert parse_system(text) == system
    assert parse_subset("1 3,4") == [1, 3, 4]


@pytest.mark.parametrize("text", ["", "2\n0 1\n", "2\n0 1\n1 0\n", "x\n", "2\n0 1\n-1 a\n"])
def test_system_parse_errors(text):
    with pytest.raises(MatrixError):
        parse_system(text)


def test_all_white_matches_b():
    for m, n in [(2, 3), (3, 4)]:
        system, _ = quantum_matrix_system(m, n)
        assert cgl_stratum_dim(system, []) == stratum_dim(CauchonDiagram.all_white(m, n))
