from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np

from .parikh import DEFAULT_MAX_N, Word, check_size, ranges_equivalent
from .tables import HeadRow, HeadTable, _head_row


def is_abelian_square_at(w: Word, i: int, p: int) -> bool:
    if i < 1 or p < 1 or i + 2 * p - 1 > w.n:
        raise IndexError(f"square ({i}, {p}) does not fit in a word of length {w.n}")
    return ranges_equivalent(w, (i, i + p - 1), (i + p, i + 2 * p - 1))


def square_from_head(h: HeadTable | HeadRow, i: int, p: int) -> bool:
    """square(i, p) read off the head table: ``head(i, i+p-1) == p``."""
    if i < 1 or p < 1 or i + 2 * p - 1 > h.n:
        raise IndexError(f"square ({i}, {p}) does not fit in a word of length {h.n}")
    if isinstance(h, HeadTable):
        return h.head(i, i + p - 1) == p
    if h.i != i:
        raise ValueError(f"head row {h.i} given for square at {i}")
    return h.head(i + p - 1) == p


def squares_in_row(row: HeadRow) -> np.ndarray:
    """Sorted bases p of all Abelian squares starting at ``row.i``."""
    i = row.i
    half = (row.n - i + 1) // 2
    p = np.arange(1, half + 1)
    # head(i, i+p-1) == p  <=>  head'(i, i+p-1) == i + 2p - 1
    return p[row.head_prime[:half] == i + 2 * p - 1]


class SquareSet:
    """Abelian squares as per-start sorted arrays of bases; iterates (i, p) ascending."""

    def __init__(self, n: int, by_start: list):
        self.n = n
        self.by_start = by_start  # by_start[i - 1]: sorted bases for start i

    def bases(self, i: int) -> np.ndarray:
        return self.by_start[i - 1]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        for i, ps in enumerate(self.by_start, start=1):
            for p in ps:
                yield i, int(p)

    def __len__(self) -> int:
        return sum(len(ps) for ps in self.by_start)

    def __contains__(self, item) -> bool:
        i, p = item
        if not 1 <= i <= self.n:
            return False
        ps = self.by_start[i - 1]
        k = np.searchsorted(ps, p)
        return bool(k < len(ps) and ps[k] == p)

    def centered(self) -> Iterator[Tuple[int, int]]:
        """Entries in center-indexed ``(i + p - 1, p)`` coordinates, sorted."""
        return iter(sorted(square_prime_index(i, p) for i, p in self))


def all_abelian_squares(w: Word, max_n: int | None = DEFAULT_MAX_N) -> SquareSet:
    check_size(w.n, max_n)
    s = w.padded()
    rows = [squares_in_row(_head_row(s, w.n, w.m, i)) for i in range(1, w.n + 1)]
    return SquareSet(w.n, rows)


def square_prime_index(i: int, p: int) -> Tuple[int, int]:
    return i + p - 1, p


def square_from_prime_index(center: int, p: int) -> Tuple[int, int]:
    return center - p + 1, p
