"""Root systems, Weyl group words, and (0)-strata of quantum Schubert cells.

Vectors live in the simple-root basis.  With Cartan matrix entries
``a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`` the simple reflection
is ``s_i(alpha_j) = alpha_j - a[i][j] alpha_i`` and the inner product is the
Gram matrix ``(alpha_i, alpha_j) = d_i a[i][j]`` with short roots of squared
length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from cauchon.exactla import IntMatrix, SkewIntMatrix, kernel_dim

Vector = tuple[int, ...]


class WeylError(ValueError):
    pass


def _chain_gram(lengths: Sequence[int], links: dict[tuple[int, int], int]) -> list[list[int]]:
    n = len(lengths)
    g = [[0] * n for _ in range(n)]
    for i, sq in enumerate(lengths):
        g[i][i] = sq
    for (i, j), v in links.items():
        g[i][j] = g[j][i] = v
    return g


def _gram(kind: str, rank: int) -> list[list[int]]:
    """Gram matrix of the simple roots, Bourbaki numbering, 0-based."""
    path = {(i, i + 1): -1 for i in range(rank - 1)}
    if kind == "A" and rank >= 1:
        return _chain_gram([2] * rank, path)
    if kind == "B" and rank >= 2:
        # alpha_1..alpha_{n-1} long, alpha_n short
        return _chain_gram([4] * (rank - 1) + [2], {k: -2 for k in path})
    if kind == "C" and rank >= 2:
        links = dict(path)
        links[(rank - 2, rank - 1)] = -2
        return _chain_gram([2] * (rank - 1) + [4], links)
    if kind == "D" and rank >= 4:
        links = {(i, i + 1): -1 for i in range(rank - 2)}
        links[(rank - 3, rank - 1)] = -1
        return _chain_gram([2] * rank, links)
    if kind == "E" and rank in (6, 7, 8):
        # 1-3-4-5-6-7-8 with 2 attached to 4
        links = {(0, 2): -1, (1, 3): -1}
        links.update({(i, i + 1): -1 for i in range(2, rank - 1)})
        return _chain_gram([2] * rank, links)
    if kind == "F" and rank == 4:
        return _chain_gram([4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    if kind == "G" and rank == 2:
        return _chain_gram([2, 6], {(0, 1): -3})
    raise WeylError(f"unsupported root system {kind}{rank}")


@dataclass(frozen=True)
class RootSystemData:
    kind: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.d[i] * a for a in row) for i, row in enumerate(self.cartan))

    def inner(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def simple_root(self, i: int) -> Vector:
        return tuple(int(k == i - 1) for k in range(self.rank))


def root_system(name: str) -> RootSystemData:
    """Parse names like ``A3``, ``G2``, ``E8``.  Ranks above 8 are not stored."""
    match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", name)
    if not match:
        raise WeylError(f"bad root system name {name!r}")
    kind, rank = match.group(1).upper(), int(match.group(2))
    if not 1 <= rank <= 8:
        raise WeylError(f"rank must be 1..8, got {rank}")
    g = _gram(kind, rank)
    d = tuple(g[i][i] // 2 for i in range(rank))
    cartan = tuple(tuple(2 * g[i][j] // g[i][i] for j in range(rank)) for i in range(rank))
    return RootSystemData(kind, rank, cartan, d)


def _check_index(rs: RootSystemData, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise WeylError(f"reflection index {i} out of range 1..{rs.rank}")


def reflection_matrix(rs: RootSystemData, i: int) -> IntMatrix:
    """Matrix of s_i on the simple-root basis; column j is s_i(alpha_j)."""
    _check_index(rs, i)
    n = rs.rank
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        rows[i - 1][j] -= rs.cartan[i - 1][j]
    return IntMatrix.from_rows(rows, n)


def reflect(rs: RootSystemData, i: int, v: Sequence[int]) -> Vector:
    """s_i(v) = v - <v, alpha_i^vee> alpha_i."""
    coeff = sum(v[j] * rs.cartan[i - 1][j] for j in range(rs.rank))
    out = list(v)
    out[i - 1] -= coeff
    return tuple(out)


def weyl_element(rs: RootSystemData, word: Sequence[int]) -> IntMatrix:
    """Matrix of s_{i_1} ... s_{i_t} (leftmost factor applied last)."""
    w = IntMatrix.identity(rs.rank)
    for i in word:
        w = w @ reflection_matrix(rs, i)
    return w


def beta_roots(rs: RootSystemData, word: Sequence[int]) -> list[Vector]:
    """beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})."""
    out = []
    for k, i in enumerate(word):
        _check_index(rs, i)
        v = rs.simple_root(i)
        for j in reversed(word[:k]):
            v = reflect(rs, j, v)
        out.append(v)
    return out


def is_reduced(rs: RootSystemData, word: Sequence[int]) -> bool:
    betas = beta_roots(rs, word)
    return all(min(b) >= 0 for b in betas) and len(set(betas)) == len(betas)


def _require_reduced(rs, word):
    if not is_reduced(rs, word):
        raise WeylError(f"word {tuple(word)} is not reduced in {rs.name}")


def schubert_cgl_matrix(rs: RootSystemData, word: Sequence[int]) -> SkewIntMatrix:
    """Antisymmetric matrix with (beta_i, beta_j) above the diagonal."""
    _require_reduced(rs, word)
    betas = beta_roots(rs, word)
    return SkewIntMatrix.from_upper(len(betas), lambda i, j: rs.inner(betas[i], betas[j]))


def zero_stratum_dim(rs: RootSystemData, word: Sequence[int]) -> int:
    """dim ker(id + w) for the Weyl element spelled by a reduced word."""
    _require_reduced(rs, word)
    w = weyl_element(rs, word)
    n = rs.rank
    return kernel_dim(IntMatrix.from_rows([[w[r, c] + (r == c) for c in range(n)] for r in range(n)], n))


def coxeter_order(rs: RootSystemData, i: int, j: int) -> int:
    """Order of s_i s_j, found by repeated multiplication."""
    p = reflection_matrix(rs, i) @ reflection_matrix(rs, j)
    ident = IntMatrix.identity(rs.rank)
    acc, k = p, 1
    while acc != ident:
        acc, k = acc @ p, k + 1
        if k > 12:
            raise WeylError("s_i s_j has order above 12")
    return k


def expected_coxeter_order(rs: RootSystemData, i: int, j: int) -> int:
    """2, 3, 4, 6 for a_ij a_ji = 0, 1, 2, 3."""
    return {0: 2, 1: 3, 2: 4, 3: 6}[rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1]]


def reduced_words(rs: RootSystemData, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every reduced word, depth first.

    ``word + (i,)`` is reduced exactly when the element of ``word`` sends
    alpha_i to a positive root.
    """
    stack: list[tuple[tuple[int, ...], IntMatrix]] = [((), IntMatrix.identity(rs.rank))]
    while stack:
        word, w = stack.pop()
        yield word
        if max_length is not None and len(word) >= max_length:
            continue
        for i in range(rs.rank, 0, -1):
            image = [w[r, i - 1] for r in range(rs.rank)]
            if min(image) >= 0:
                stack.append((word + (i,), w @ reflection_matrix(rs, i)))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise WeylError(f"bad word {text!r}") from None


def quantum_matrix_word_check(m: int, n: int, word: Sequence[int]) -> tuple[int, int]:
    """(0)-stratum dimension of a word in A_{m+n-1}, and that of the all-white m x n grid.

    The word is supplied by the caller as a presentation of m x n quantum
    matrices; the two numbers agree when it is one.
    """
    from cauchon.diagram import CauchonDiagram
    from cauchon.strata import stratum_dim

    rs = root_system(f"A{m + n - 1}")
    if len(word) != m * n:
        raise WeylError(f"word has length {len(word)}, expected {m * n}")
    return zero_stratum_dim(rs, word), stratum_dim(CauchonDiagram.all_white(m, n))
