"""Pure-Python hot kernels.

Reference implementation for :mod:`cauchon._kernels._ckernels`; both modules
expose the same functions with the same results.  Rows of a diagram are
n-bit words with column 1 in the most significant bit, a set bit meaning the
box is black.
"""


def echelon(a):
    """Fraction-free (Bareiss) row echelon form, in place.

    ``a`` is a list of row lists of ints.  Returns the list of pivot columns;
    rows past ``len(pivots)`` are zero on exit.  Every intermediate entry is
    a minor of the input, so all divisions are exact.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and a[piv][c] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        top = a[r]
        p = top[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * top[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def rank(rows):
    """Exact rank of an integer matrix given as a sequence of rows."""
    return len(echelon([list(r) for r in rows]))


def white_boxes(rows, n):
    """Row-major list of (row, column) for the white boxes, 0-based."""
    out = []
    for i, word in enumerate(rows):
        for c in range(n):
            if not (word >> (n - 1 - c)) & 1:
                out.append((i, c))
    return out


def skew_adjacency_rows(rows, n):
    boxes = white_boxes(rows, n)
    d = len(boxes)
    mat = [[0] * d for _ in range(d)]
    for p in range(d):
        ip, cp = boxes[p]
        mp = mat[p]
        for q in range(p + 1, d):
            iq, cq = boxes[q]
            # row-major order puts q right of p in a row, or below p in a column
            if ip == iq or cp == cq:
                mp[q] = 1
                mat[q][p] = -1
    return mat


def diagram_kernel_dim(rows, n):
    """Kernel dimension of the skew-adjacency matrix of a diagram."""
    mat = skew_adjacency_rows(rows, n)
    return len(mat) - len(echelon(mat))


def admissible_rows(free, n):
    """Row words allowed below a state whose all-black-so-far columns are ``free``.

    A row is a black prefix of length k, a white box at column k+1, then any
    black boxes among ``free`` further right.  Sorted ascending, which is
    lexicographic order on the row read left to right with white < black.
    """
    full = (1 << n) - 1
    out = [full]
    for k in range(n):
        prefix = full ^ ((1 << (n - k)) - 1)
        tail = free & ((1 << (n - k - 1)) - 1)
        sub = tail
        while True:
            out.append(prefix | sub)
            if sub == 0:
                break
            sub = (sub - 1) & tail
    out.sort()
    return out


def iter_diagrams(m, n, first_row=None):
    """Yield every valid m x n diagram as a tuple of row words."""
    full = (1 << n) - 1
    table = {}

    def rows_for(free):
        got = table.get(free)
        if got is None:
            got = table[free] = admissible_rows(free, n)
        return got

    firsts = rows_for(full) if first_row is None else [first_row]
    if m == 1:
        for s in firsts:
            yield (s,)
        return
    for s in firsts:
        # explicit stack: (depth, free, prefix rows, iterator)
        stack = [(iter(rows_for(s)), s)]
        path = [s]
        while stack:
            it, free = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                continue
            if len(path) == m - 1:
                yield tuple(path) + (nxt,)
                continue
            path.append(nxt)
            stack.append((iter(rows_for(free & nxt)), free & nxt))


def dim_histogram(m, n, first_row=None):
    """Histogram {stratum dimension: count} over all (or one partition of) diagrams."""
    hist = {}
    for rows in iter_diagrams(m, n, first_row):
        e = diagram_kernel_dim(rows, n)
        hist[e] = hist.get(e, 0) + 1
    return hist
