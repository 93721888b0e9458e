"""maxpower table and enumeration of all Abelian periods.

A period ``(i, p)`` uses a 0-based shift ``i`` (length of the head part) and
block length ``p`` with ``1 <= p <= n - i``.
"""
from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np

from .parikh import DEFAULT_MAX_N, INF, Word, check_size
from .tables import HeadRow, TailColumn, _head_row, compute_tail_suffix_column


class MaxpowerTable:
    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        # values[i, p] for 1 <= i <= n + 1, 1 <= p <= n; row n + 1 is all zero
        self.values = values

    def __call__(self, i: int, p: int) -> int:
        if not (1 <= i <= self.n + 1 and 1 <= p <= self.n):
            raise IndexError(f"maxpower({i}, {p}) outside the table")
        return int(self.values[i, p])


def _maxpower_sweep(w: Word, max_n: int | None) -> Tuple[MaxpowerTable, HeadRow | None]:
    # Descending i so that maxpower(i + p, p) is final when row i is filled.
    # square(i, p) is taken from head row i and dropped right after.
    check_size(w.n, max_n)
    n = w.n
    s = w.padded()
    mp = np.zeros((n + 2, n + 1), dtype=np.int32)
    ps = np.arange(1, n + 1, dtype=np.int32)
    first = None
    for i in range(n, 0, -1):
        row = _head_row(s, n, w.m, i)
        fit = n - i + 1
        vals = ps[:fit].copy()
        half = fit // 2
        sq = row.head_prime[:half] == i + 2 * ps[:half] - 1
        q = ps[:half][sq]
        vals[q - 1] += mp[i + q, q]
        mp[i, 1 : fit + 1] = vals
        if i == 1:
            first = row
    return MaxpowerTable(n, mp), first


def compute_maxpower(w: Word, max_n: int | None = DEFAULT_MAX_N) -> MaxpowerTable:
    return _maxpower_sweep(w, max_n)[0]


def head1(head_row1: HeadRow | None, i: int) -> int:
    """head(1, i) with head(1, 0) = 0."""
    if i == 0:
        return 0
    return head_row1.head(i)


def is_abelian_period(
    w: Word,
    head_row1: HeadRow,
    tail_col: TailColumn,
    mp: MaxpowerTable,
    i: int,
    p: int,
) -> bool:
    n = w.n
    if not 0 <= i <= n - 1 or p < 1:
        raise IndexError(f"({i}, {p}) is not a valid shift/length pair for n={n}")
    if p > n - i:
        return False
    j = i + 1 + mp(i + 1, p)
    return p >= head1(head_row1, i) and p >= tail_col[j]


class PeriodSet:
    """All Abelian periods, as per-shift sorted arrays of lengths."""

    def __init__(self, n: int, by_shift: list):
        self.n = n
        self.by_shift = by_shift  # by_shift[i]: sorted lengths p for shift i

    def lengths(self, i: int) -> np.ndarray:
        return self.by_shift[i]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        for i, ps in enumerate(self.by_shift):
            for p in ps:
                yield i, int(p)

    def __len__(self) -> int:
        return sum(len(ps) for ps in self.by_shift)

    def __contains__(self, item) -> bool:
        i, p = item
        if not 0 <= i < self.n:
            return False
        ps = self.by_shift[i]
        k = np.searchsorted(ps, p)
        return bool(k < len(ps) and ps[k] == p)

    def min_per_shift(self) -> list:
        return minimal_period_per_shift(self, self.n)


class PeriodContext:
    """Preprocessed data answering :func:`is_abelian_period` queries in O(1)."""

    def __init__(self, w: Word, max_n: int | None = DEFAULT_MAX_N):
        self.word = w
        self.maxpower, self.head_row1 = _maxpower_sweep(w, max_n)
        self.tail_col = compute_tail_suffix_column(w)

    def __call__(self, i: int, p: int) -> bool:
        return is_abelian_period(self.word, self.head_row1, self.tail_col, self.maxpower, i, p)

    def period_set(self) -> PeriodSet:
        n = self.word.n
        mp = self.maxpower.values
        tails = self.tail_col.values
        heads1 = np.zeros(n + 1, dtype=np.int64)
        if n:
            heads1[1:] = self.head_row1.heads()
        out = []
        for i in range(n):
            ps = np.arange(1, n - i + 1, dtype=np.int64)
            j = i + 1 + mp[i + 1, 1 : n - i + 1]
            ok = (ps >= heads1[i]) & (ps >= tails[j])
            out.append(ps[ok])
        return PeriodSet(n, out)


def all_abelian_periods(w: Word, max_n: int | None = DEFAULT_MAX_N) -> PeriodSet:
    return PeriodContext(w, max_n).period_set()


def minimal_period_per_shift(ps: PeriodSet, n: int) -> list:
    return [int(ps.by_shift[i][0]) if len(ps.by_shift[i]) else INF for i in range(n)]
