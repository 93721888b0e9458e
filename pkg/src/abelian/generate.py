from __future__ import annotations

import numpy as np


def generate_fibonacci(n: int) -> str:
    """Length-``n`` prefix of the fixed point of a -> ab, b -> a."""
    if n < 0:
        raise ValueError("length must be non-negative")
    prev, cur = "a", "ab"
    while len(cur) < n:
        # f_{k+1} = f_k f_{k-1}
        prev, cur = cur, cur + prev
    return cur[:n]


def generate_random(n: int, sigma: int, seed: int) -> str:
    """Uniform word over the first ``sigma`` lowercase letters.

    Uses numpy's PCG64 seeded with ``seed mod 2**64``, which yields the same
    stream on every platform.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    if not 1 <= sigma <= 26:
        raise ValueError("sigma must be in 1..26")
    rng = np.random.Generator(np.random.PCG64(seed % 2**64))
    codes = rng.integers(0, sigma, size=n, dtype=np.uint8) + ord("a")
    return codes.tobytes().decode("ascii")

