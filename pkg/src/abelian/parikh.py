"""Words over a dense integer alphabet and Parikh-vector arithmetic.

Positions are 1-based everywhere in the public API. Internally the symbol
sequence is stored 0-based; use :meth:`Word.at` or :meth:`Word.padded` to get
1-based access.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence, Tuple

# Sentinels sit outside every valid position/length and fit in int32 tables.
INF = 2**31 - 1
MINUS_INF = -INF

DEFAULT_MAX_N = 8192


class SizeError(ValueError):
    """Input too long for a routine that allocates a quadratic table."""

    def __init__(self, n: int, max_n: int):
        super().__init__(f"word length {n} exceeds size cap {max_n} (use a larger max_n)")
        self.n = n
        self.max_n = max_n


def check_size(n: int, max_n: int | None) -> None:
    if max_n is not None and n > max_n:
        raise SizeError(n, max_n)


@dataclass(frozen=True)
class Word:
    symbols: Tuple[int, ...]
    m: int
    decode: dict = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def at(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} outside [1, {self.n}]")
        return self.symbols[pos - 1]

    def padded(self) -> list:
        """Symbol list with a dummy slot 0 so that ``s[pos]`` is 1-based."""
        return [0, *self.symbols]

    def reversed(self) -> "Word":
        # keeps the original coding; codes stay dense since the symbol set is unchanged
        return Word(self.symbols[::-1], self.m, self.decode)

    def text(self) -> Sequence[Any]:
        return [self.decode[c] for c in self.symbols]

    def __len__(self) -> int:
        return self.n


def normalize_word(text: Iterable[Hashable]) -> Word:
    """Recode ``text`` to codes 1..m assigned in order of first occurrence.

    ``text`` may be a ``str`` (one symbol per character), ``bytes`` (one per
    byte) or any iterable of hashable items.
    """
    codes: dict = {}
    symbols = []
    for ch in text:
        c = codes.get(ch)
        if c is None:
            c = codes[ch] = len(codes) + 1
        symbols.append(c)
    decode = {c: ch for ch, c in codes.items()}
    return Word(tuple(symbols), len(codes), decode)


@dataclass(frozen=True)
class ParikhVector:
    counts: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.counts)

    def __len__(self) -> int:
        return sum(self.counts)

    def __getitem__(self, c: int) -> int:
        """Count of symbol code ``c`` (1-based)."""
        return self.counts[c - 1]

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        _same_alphabet(self, other)
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "ParikhVector") -> "ParikhDelta":
        _same_alphabet(self, other)
        return ParikhDelta([a - b for a, b in zip(self.counts, other.counts)])


def _same_alphabet(q, r) -> None:
    if len(q.counts) != len(r.counts):
        raise ValueError(f"alphabet sizes differ: {len(q.counts)} vs {len(r.counts)}")


class ParikhDelta:
    """Signed difference of two Parikh vectors.

    Tracks the number of negative entries so that "is the first vector
    contained in the second" is an O(1) query under single-symbol updates.
    """

    __slots__ = ("counts", "negatives")

    def __init__(self, counts: Iterable[int]):
        self.counts = list(counts)
        self.negatives = sum(1 for x in self.counts if x < 0)

    @classmethod
    def zero(cls, m: int) -> "ParikhDelta":
        return cls([0] * m)

    def add(self, c: int, amount: int = 1) -> None:
        """Add ``amount`` to the entry for code ``c`` (1-based)."""
        old = self.counts[c - 1]
        new = old + amount
        self.counts[c - 1] = new
        self.negatives += (new < 0) - (old < 0)

    def __getitem__(self, c: int) -> int:
        return self.counts[c - 1]

    def is_nonnegative(self) -> bool:
        return self.negatives == 0

    def __repr__(self) -> str:
        return f"ParikhDelta({self.counts}, negatives={self.negatives})"


def parikh_of_range(w: Word, i: int, j: int) -> ParikhVector:
    """Parikh vector of ``w[i, j]``; ``j < i`` gives the zero vector."""
    counts = [0] * w.m
    if j < i:
        return ParikhVector(tuple(counts))
    if i < 1 or j > w.n:
        raise IndexError(f"range [{i}, {j}] outside [1, {w.n}]")
    for c in w.symbols[i - 1 : j]:
        counts[c - 1] += 1
    return ParikhVector(tuple(counts))


def is_abelian_factor(q: ParikhVector, r: ParikhVector) -> bool:
    """True iff ``q <= r`` component-wise (non-strict)."""
    _same_alphabet(q, r)
    return all(a <= b for a, b in zip(q.counts, r.counts))


def ranges_equivalent(w: Word, r1: Tuple[int, int], r2: Tuple[int, int]) -> bool:
    return parikh_of_range(w, *r1) == parikh_of_range(w, *r2)
