"""Linear-time MinLong table: the shortest long (p > n/2) period per shift.

Every long period at shift ``i`` is ``(i, p)`` with ``MinLong(i) <= p <= n - i``,
so the table encodes a possibly quadratic set in O(n) space.
"""
from __future__ import annotations

from array import array

import numpy as np

from .parikh import INF, MINUS_INF, Word
from .tables import _head_row, compute_tail_suffix_column


class FTable:
    """f(j) = j - tail(j, n) for j = 1..n+1; MINUS_INF where tail is INF."""

    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = values  # slot 0 unused

    def __getitem__(self, j: int) -> int:
        if not 1 <= j <= self.n + 1:
            raise IndexError(j)
        return int(self.values[j])


class FHat:
    """f_hat(i) = min{j : f(j) > i} for i = 0..n, INF when undefined."""

    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = values

    def __getitem__(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise IndexError(i)
        return int(self.values[i])


def compute_f(w: Word) -> FTable:
    values = compute_tail_suffix_column(w).values
    inf = values == INF
    np.subtract(np.arange(w.n + 2, dtype=np.int32), values, out=values)
    values[inf] = MINUS_INF
    values[0] = MINUS_INF
    return FTable(w.n, values)


def compute_f_hat(f: FTable) -> FHat:
    n = f.n
    fv = array("i", f.values.astype(np.int32).tobytes())
    for j in range(2, n + 2):
        if fv[j] < fv[j - 1]:
            raise ValueError(f"f is not non-decreasing at j={j}")
    out = array("i", bytes(4 * (n + 1)))
    # one merged pass: j only moves forward as i grows
    j = 1
    for i in range(n + 1):
        while j <= n + 1 and fv[j] <= i:
            j += 1
        out[i] = j if j <= n + 1 else INF
    return FHat(n, np.frombuffer(out, dtype=np.int32))


class MinLongTable:
    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = values  # int32, one entry per shift 0..n-1

    def __getitem__(self, i: int) -> int:
        return int(self.values[i])

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def is_long_period(self, i: int, p: int) -> bool:
        return 0 <= i < self.n and 2 * p > self.n and self[i] <= p <= self.n - i


def compute_minlong(w: Word) -> MinLongTable:
    n = w.n
    out = np.full(n, INF, dtype=np.int32)
    if n == 0:
        return MinLongTable(0, out)
    short = (n + 1) // 2  # shifts i with 2i < n
    fh = compute_f_hat(compute_f(w)).values[:short]
    h = np.zeros(short, dtype=np.int32)  # h[i] = head(1, i), head(1, 0) = 0
    h[1:] = _head_row(w.padded(), n, w.m, 1).heads()[: short - 1]
    blocked = (h == INF) | (fh == INF)
    cand = fh - np.arange(1, short + 1, dtype=np.int32)  # f_hat(i) - i - 1
    np.maximum(cand, h, out=cand)
    np.maximum(cand, n // 2 + 1, out=cand)
    cand[blocked] = INF
    out[:short] = cand
    return MinLongTable(n, out)
