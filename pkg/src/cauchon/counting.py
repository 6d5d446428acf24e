"""Diagram counts, stratum-dimension histograms and the limit-distribution table."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from cauchon import _kernels
from cauchon.diagram import first_rows

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def diagram_count(m: int, n: int) -> int:
    """Number of m x n Cauchon diagrams, the poly-Bernoulli number B_n^(-m)."""
    if m < 1 or n < 1:
        raise ValueError(f"shape must be positive, got {m} x {n}")
    return sum(
        factorial(k) ** 2 * stirling2(n + 1, k + 1) * stirling2(m + 1, k + 1)
        for k in range(min(m, n) + 1)
    )


@dataclass(frozen=True)
class DimDistribution:
    m: int
    n: int
    counts: dict[int, int]
    total: int

    def fraction(self, e: int) -> Fraction:
        return Fraction(self.counts.get(e, 0), self.total)


def _partition_histogram(args):
    m, n, row = args
    return _kernels.dim_histogram(m, n, row)


def merge_histograms(parts) -> dict[int, int]:
    total: Counter = Counter()
    for h in parts:
        total.update(h)
    return dict(sorted(total.items()))


def dim_distribution(m: int, n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> DimDistribution:
    """Exact histogram of stratum dimensions over all m x n diagrams.

    With ``jobs > 1`` the row-1 partitions are farmed out to worker processes;
    the merged histogram does not depend on the number of workers.
    """
    expected = diagram_count(m, n)
    if expected > cap:
        raise CapExceeded(f"{m} x {n} has {expected} diagrams, above the cap {cap}")
    if jobs <= 1:
        counts = dict(sorted(_kernels.dim_histogram(m, n).items()))
    else:
        tasks = [(m, n, row) for row in first_rows(m, n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = merge_histograms(pool.map(_partition_histogram, tasks, chunksize=8))
    total = sum(counts.values())
    if total != expected:
        raise AssertionError(f"enumerated {total} diagrams, closed form gives {expected}")
    return DimDistribution(m, n, counts, total)


def conjecture_limit(m: int, i: int) -> Fraction:
    """Conjectured limiting share of i-dimensional strata among m x n diagrams, n -> infinity."""
    if not 0 <= i <= m:
        return Fraction(0)
    return Fraction(2 ** (1 - (i == 0)) * comb(2 * m, m + i), 4**m)


@dataclass(frozen=True)
class ConjectureRow:
    m: int
    n: int
    i: int
    count: int
    total: int
    empirical: Fraction
    limit: Fraction
    abs_error: Fraction


def conjecture_rows(dist: DimDistribution) -> list[ConjectureRow]:
    rows = []
    for i in range(dist.m + 1):
        emp = dist.fraction(i)
        lim = conjecture_limit(dist.m, i)
        rows.append(ConjectureRow(dist.m, dist.n, i, dist.counts.get(i, 0), dist.total, emp, lim, abs(emp - lim)))
    return rows


def conjecture_table(
    m: int, n_max: int, cap: int = DEFAULT_CAP, jobs: int = 1, n_min: int | None = None
) -> list[ConjectureRow]:
    """Rows for n = max(m, n_min)..n_max and i = 0..m."""
    if m < 1:
        raise ValueError("m must be positive")
    start = m if n_min is None else max(m, n_min)
    out = []
    for n in range(start, n_max + 1):
        out.extend(conjecture_rows(dim_distribution(m, n, cap=cap, jobs=jobs)))
    return out


CSV_COLUMNS = ["m", "n", "i", "count", "total", "empirical", "limit", "abs_error"]


def _render(x, precision: int | None):
    if isinstance(x, Fraction):
        return f"{float(x):.{precision}f}" if precision is not None else str(x)
    return x


def table_to_csv(rows: list[ConjectureRow]) -> str:
    """Exact fractions as ``p/q`` strings, in the fixed column order."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([_render(getattr(r, c), None) for c in CSV_COLUMNS])
    return buf.getvalue()


def table_to_json(rows: list[ConjectureRow]) -> str:
    data = [{c: _render(getattr(r, c), None) for c in CSV_COLUMNS} for r in rows]
    return json.dumps({"schema": 1, "rows": data}, indent=2)


def table_to_text(rows: list[ConjectureRow], precision: int = 6) -> str:
    header = f"{'m':>3} {'n':>3} {'i':>3} {'count':>10} {'total':>10} {'empirical':>12} {'limit':>12} {'abs_error':>12}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.m:>3} {r.n:>3} {r.i:>3} {r.count:>10} {r.total:>10} "
            f"{_render(r.empirical, precision):>12} {_render(r.limit, precision):>12} "
            f"{_render(r.abs_error, precision):>12}"
        )
    return "\n".join(lines) + "\n"
