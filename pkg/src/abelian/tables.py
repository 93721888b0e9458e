"""head and tail tables.

``head(i, j)`` is the length of the shortest window starting right after ``j``
whose Parikh vector dominates that of ``w[i, j]``; ``head'(i, j) = j +
head(i, j)`` is where that window ends. ``tail`` is the mirror image, with the
window ending right before ``i``. Both use :data:`INF` when no window fits.
"""
from __future__ import annotations

from array import array

import numpy as np

from .parikh import DEFAULT_MAX_N, INF, Word, check_size


class HeadRow:
    """Row ``i`` of the head' table, holding ``head'(i, j)`` for ``j = i..n``."""

    __slots__ = ("i", "n", "head_prime")

    def __init__(self, i: int, n: int, head_prime: np.ndarray):
        self.i = i
        self.n = n
        self.head_prime = head_prime

    def prime(self, j: int) -> int:
        if j < self.i:
            return j
        return int(self.head_prime[j - self.i])

    def head(self, j: int) -> int:
        if j < self.i:
            return 0
        hp = int(self.head_prime[j - self.i])
        return INF if hp == INF else hp - j

    def heads(self) -> np.ndarray:
        """``head(i, j)`` for ``j = i..n`` as an int32 array (INF preserved)."""
        out = self.head_prime.copy()
        inf = out == INF
        out -= np.arange(self.i, self.n + 1, dtype=np.int32)
        out[inf] = INF
        return out

    def __len__(self) -> int:
        return len(self.head_prime)


def _sweep(s: list, n: int, m: int, i: int) -> array:
    # s is 1-based (s[0] unused). Returns head'(i, j) for j = i..n.
    out = array("i", bytes(4 * (n - i + 1)))
    delta = [0] * (m + 1)
    delta[s[i]] = 1  # w[i] pre-counted in y so the first move below subtracts it
    k = i
    for j in range(i, n + 1):
        c = s[j]
        d = delta[c] - 2
        if d < 0:
            while k < n:
                k += 1
                if s[k] == c:
                    d += 1
                    if d >= 0:
                        break
                else:
                    delta[s[k]] += 1
            if d < 0:
                # k hit n: by monotonicity every later entry is INF too
                for t in range(j - i, n - i + 1):
                    out[t] = INF
                return out
        delta[c] = d
        out[j - i] = k
    return out


def compute_head_row(w: Word, i: int) -> HeadRow:
    if not 1 <= i <= w.n:
        raise IndexError(f"row {i} outside [1, {w.n}]")
    return _head_row(w.padded(), w.n, w.m, i)


def _head_row(s: list, n: int, m: int, i: int) -> HeadRow:
    return HeadRow(i, n, np.frombuffer(_sweep(s, n, m, i), dtype=np.int32))


class HeadTable:
    def __init__(self, n: int, rows: list):
        self.n = n
        self.rows = rows

    def row(self, i: int) -> HeadRow:
        return self.rows[i - 1]

    def head(self, i: int, j: int) -> int:
        if j < i:
            return 0
        return self.rows[i - 1].head(j)

    def prime(self, i: int, j: int) -> int:
        return self.rows[i - 1].prime(j)

    def __len__(self) -> int:
        return self.n


def compute_head_table(w: Word, max_n: int | None = DEFAULT_MAX_N) -> HeadTable:
    check_size(w.n, max_n)
    s = w.padded()
    return HeadTable(w.n, [_head_row(s, w.n, w.m, i) for i in range(1, w.n + 1)])


class TailColumn:
    """``tail(j, n)`` for ``j = 1..n+1``; ``tail(n+1, n) = 0``."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = values  # values[j] for j = 0..n+1, slot 0 unused

    def __getitem__(self, j: int) -> int:
        if not 1 <= j <= self.n + 1:
            raise IndexError(f"tail column index {j} outside [1, {self.n + 1}]")
        return int(self.values[j])

    def __len__(self) -> int:
        return self.n + 1


def compute_tail_suffix_column(w: Word) -> TailColumn:
    n = w.n
    values = np.zeros(n + 2, dtype=np.int32)
    if n:
        # tail_w(j, n) = head_rev(1, n + 1 - j)
        rev = [0]
        rev.extend(reversed(w.symbols))
        values[1 : n + 1] = _head_row(rev, n, w.m, 1).heads()[::-1]
    return TailColumn(n, values)


class TailTable:
    """Full tail table, backed by the head table of the reversed word."""

    def __init__(self, n: int, reversed_heads: HeadTable):
        self.n = n
        self._rev = reversed_heads

    def tail(self, i: int, j: int) -> int:
        if j < i:
            return 0
        n = self.n
        return self._rev.head(n + 1 - j, n + 1 - i)

    def __len__(self) -> int:
        return self.n


def compute_tail_table(w: Word, max_n: int | None = DEFAULT_MAX_N) -> TailTable:
    check_size(w.n, max_n)
    return TailTable(w.n, compute_head_table(w.reversed(), max_n=None))
