# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same surface and results as ``_pykernels``.

Elimination runs on int64 entries with 128-bit intermediate products.  That is
exact whenever every minor of the input fits in 62 bits, which is checked up
front with the Hadamard bound; otherwise the call is routed to the
pure-Python kernel.
"""

from libc.math cimport log2
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

from cauchon._kernels import _pykernels
from cauchon._kernels._pykernels import admissible_rows, iter_diagrams, white_boxes

cdef extern from *:
    """
    static inline long long cauchon_ff_step(long long p, long long x,
                                            long long f, long long y,
                                            long long prev) {
        return (long long)(((__int128)p * x - (__int128)f * y) / prev);
    }
    """
    long long cauchon_ff_step(long long p, long long x, long long f,
                              long long y, long long prev) nogil

# log2 of the largest minor magnitude the int64/int128 path accepts
cdef double SAFE_LOG2 = 61.5


cdef int _rank_buf(int64_t* a, int nrows, int ncols) noexcept nogil:
    cdef int r = 0, c, i, j, piv
    cdef int64_t p, f, prev = 1, t
    cdef int64_t* top
    cdef int64_t* row
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and a[piv * ncols + c] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != r:
            for j in range(c, ncols):
                t = a[r * ncols + j]
                a[r * ncols + j] = a[piv * ncols + j]
                a[piv * ncols + j] = t
        top = a + r * ncols
        p = top[c]
        for i in range(r + 1, nrows):
            row = a + i * ncols
            f = row[c]
            if f != 0 or p != prev:
                for j in range(c + 1, ncols):
                    row[j] = cauchon_ff_step(p, row[j], f, top[j], prev)
            row[c] = 0
        prev = p
        r += 1
    return r


def rank(rows):
    """Exact rank of an integer matrix given as a sequence of rows."""
    rows = [list(r) for r in rows]
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef double bound = 0.0, norm2
    for r in rows:
        norm2 = 0.0
        for x in r:
            if not -(1 << 62) < x < (1 << 62):
                return _pykernels.rank(rows)
            norm2 += <double>x * <double>x
        if norm2 > 1.0:
            bound += 0.5 * log2(norm2)
    if bound >= SAFE_LOG2:
        return _pykernels.rank(rows)
    cdef int64_t* buf = <int64_t*>malloc(nrows * ncols * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int i, j
    try:
        for i in range(nrows):
            for j in range(ncols):
                buf[i * ncols + j] = rows[i][j]
        return _rank_buf(buf, nrows, ncols)
    finally:
        free(buf)


cdef int _diagram_rank(const uint64_t* words, int m, int n,
                       int* bi, int* bc, int64_t* buf, int* rank_out) noexcept nogil:
    """Build M(C) for the given rows in ``buf`` and rank it.

    Returns d (white count) and stores the rank, or -1 for an unsafe bound.
    """
    cdef int d = 0, i, c, p, q, nnz
    cdef int colcount[64]
    cdef double bound = 0.0
    for c in range(n):
        colcount[c] = 0
    for i in range(m):
        for c in range(n):
            if not ((words[i] >> (n - 1 - c)) & 1):
                bi[d] = i
                bc[d] = c
                d += 1
                colcount[c] += 1
    for p in range(d):
        # nonzeros in row p: other white boxes in its row and column
        nnz = colcount[bc[p]] - 1
        q = 0
        for c in range(n):
            if not ((words[bi[p]] >> (n - 1 - c)) & 1):
                q += 1
        nnz += q - 1
        if nnz > 1:
            bound += 0.5 * log2(<double>nnz)
    if bound >= SAFE_LOG2:
        return -1
    for p in range(d * d):
        buf[p] = 0
    for p in range(d):
        for q in range(p + 1, d):
            if bi[p] == bi[q] or bc[p] == bc[q]:
                buf[p * d + q] = 1
                buf[q * d + p] = -1
    rank_out[0] = _rank_buf(buf, d, d)
    return d


def diagram_kernel_dim(rows, int n):
    """Kernel dimension of the skew-adjacency matrix of a diagram."""
    cdef int m = len(rows)
    if n > 64 or m * n > 4096:
        return _pykernels.diagram_kernel_dim(rows, n)
    cdef uint64_t* words = <uint64_t*>malloc(m * sizeof(uint64_t))
    cdef int* bi = <int*>malloc(m * n * sizeof(int))
    cdef int* bc = <int*>malloc(m * n * sizeof(int))
    cdef int64_t* buf = <int64_t*>malloc(m * n * m * n * sizeof(int64_t) + 8)
    cdef int i, d, rk = 0
    try:
        if words == NULL or bi == NULL or bc == NULL or buf == NULL:
            raise MemoryError()
        for i in range(m):
            words[i] = rows[i]
        d = _diagram_rank(words, m, n, bi, bc, buf, &rk)
        if d < 0:
            return _pykernels.diagram_kernel_dim(rows, n)
        return d - rk
    finally:
        free(words)
        free(bi)
        free(bc)
        free(buf)


cdef struct Walk:
    int m
    int n
    uint64_t* words
    int* bi
    int* bc
    int64_t* buf
    long long* hist
    long long unsafe


cdef void _walk(Walk* w, int depth, uint64_t free_cols) noexcept nogil:
    cdef int n = w.n, k, d, rk = 0
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t prefix, tail, sub, s
    # the all-black row, then every (prefix k, white at k+1, subset of free tail)
    k = -1
    while k < n:
        if k < 0:
            tail = 0
            prefix = full
        else:
            prefix = full ^ (((<uint64_t>1) << (n - k)) - 1) if n - k < 64 else 0
            tail = free_cols & (((<uint64_t>1) << (n - k - 1)) - 1)
        sub = tail
        while True:
            s = prefix | sub
            w.words[depth] = s
            if depth == w.m - 1:
                d = _diagram_rank(w.words, w.m, n, w.bi, w.bc, w.buf, &rk)
                if d < 0:
                    w.unsafe += 1
                else:
                    w.hist[d - rk] += 1
            else:
                _walk(w, depth + 1, free_cols & s)
            if sub == 0:
                break
            sub = (sub - 1) & tail
        k += 1


def dim_histogram(int m, int n, first_row=None):
    """Histogram {stratum dimension: count} over all (or one partition of) diagrams."""
    if n > 63 or m * n > 4096:
        return _pykernels.dim_histogram(m, n, first_row)
    cdef Walk w
    cdef uint64_t full = ((<uint64_t>1) << n) - 1, first
    cdef int i
    w.m = m
    w.n = n
    w.unsafe = 0
    w.words = <uint64_t*>malloc(m * sizeof(uint64_t))
    w.bi = <int*>malloc(m * n * sizeof(int))
    w.bc = <int*>malloc(m * n * sizeof(int))
    w.buf = <int64_t*>malloc(m * n * m * n * sizeof(int64_t) + 8)
    w.hist = <long long*>malloc((m * n + 1) * sizeof(long long))
    try:
        if (w.words == NULL or w.bi == NULL or w.bc == NULL
                or w.buf == NULL or w.hist == NULL):
            raise MemoryError()
        for i in range(m * n + 1):
            w.hist[i] = 0
        if first_row is None:
            with nogil:
                _walk(&w, 0, full)
        else:
            first = first_row
            w.words[0] = first
            if m == 1:
                w.hist[_pykernels.diagram_kernel_dim((first_row,), n)] += 1
            else:
                with nogil:
                    _walk(&w, 1, full & first)
        if w.unsafe:
            # a bound check failed somewhere: recount exactly in Python
            return _pykernels.dim_histogram(m, n, first_row)
        return {e: int(w.hist[e]) for e in range(m * n + 1) if w.hist[e]}
    finally:
        free(w.words)
        free(w.bi)
        free(w.bc)
        free(w.buf)
        free(w.hist)
