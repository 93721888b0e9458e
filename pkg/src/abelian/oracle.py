"""Brute-force reference implementations, straight from the definitions.

Slow on purpose; used as ground truth in tests and behind ``--oracle``.
"""
from __future__ import annotations

from .parikh import INF, ParikhDelta, Word, check_size, is_abelian_factor, parikh_of_range

ORACLE_MAX_N = 256


def naive_head(w: Word, i: int, j: int) -> int:
    if j < i:
        return 0
    x = parikh_of_range(w, i, j)
    for k in range(0, w.n - j + 1):
        if is_abelian_factor(x, parikh_of_range(w, j + 1, j + k)):
            return k
    return INF


def naive_tail(w: Word, i: int, j: int) -> int:
    if j < i:
        return 0
    x = parikh_of_range(w, i, j)
    for k in range(0, i):
        if is_abelian_factor(x, parikh_of_range(w, i - k, i - 1)):
            return k
    return INF


def naive_square_set(w: Word) -> list:
    """All ``(i, p)`` with ``w[i, i+2p-1]`` an Abelian square, sorted."""
    check_size(w.n, ORACLE_MAX_N)
    n = w.n
    s = w.padded()
    out = []
    for i in range(1, n + 1):
        # delta = P(right half) - P(left half), grown one p at a time
        delta = ParikhDelta.zero(w.m)
        for p in range(1, (n - i + 1) // 2 + 1):
            mid = i + p - 1
            delta.add(s[mid], -2)  # leaves the right half, joins the left
            delta.add(s[2 * p + i - 2])
            delta.add(s[2 * p + i - 1])
            # equal half lengths: no negative entry means all entries are zero
            if delta.is_nonnegative():
                out.append((i, p))
    out.sort()
    return out


def _blocks_equivalent(w: Word, start: int, p: int, k: int) -> bool:
    first = parikh_of_range(w, start, start + p - 1)
    return all(
        parikh_of_range(w, start + t * p, start + (t + 1) * p - 1) == first for t in range(1, k)
    )


def naive_period_set(w: Word) -> list:
    """All Abelian periods ``(i, p)`` (0-based shift), trying every k >= 1."""
    check_size(w.n, ORACLE_MAX_N)
    n = w.n
    out = []
    for i in range(0, n):
        prefix = parikh_of_range(w, 1, i)
        for p in range(1, n - i + 1):
            block = parikh_of_range(w, i + 1, i + p)
            if not is_abelian_factor(prefix, block):
                continue
            for k in range(1, (n - i) // p + 1):
                j = i + k * p
                if _blocks_equivalent(w, i + 1, p, k) and is_abelian_factor(
                    parikh_of_range(w, j + 1, n), block
                ):
                    out.append((i, p))
                    break
    return out


def naive_minlong(w: Word) -> list:
    n = w.n
    best = [INF] * n
    for i, p in naive_period_set(w):
        if 2 * p > n and p < best[i]:
            best[i] = p
    return best


def naive_maxpower(w: Word, i: int, p: int) -> int:
    """Greedy block scan: longest Abelian power prefix of ``w[i, n]`` with base p."""
    n = w.n
    if n - i < p - 1:
        return 0
    first = parikh_of_range(w, i, i + p - 1)
    k = 1
    while i + (k + 1) * p - 1 <= n and parikh_of_range(w, i + k * p, i + (k + 1) * p - 1) == first:
        k += 1
    return k * p
