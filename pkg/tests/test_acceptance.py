"""Exit criteria. Each test reports one PASS/FAIL line in the terminal summary."""
import io
import statistics
import subprocess
import sys
import time

import pytest

from abelian import (
    INF,
    all_abelian_periods,
    all_abelian_squares,
    compute_f,
    compute_head_row,
    compute_head_table,
    compute_minlong,
    compute_tail_suffix_column,
    compute_tail_table,
    is_abelian_square_at,
    normalize_word,
    square_from_head,
)
from abelian.cli import RunConfig, run
from abelian.oracle import naive_head, naive_minlong, naive_period_set, naive_square_set, naive_tail

from conftest import binary_words, random_words

EXHAUSTIVE = [normalize_word(t) for t in binary_words(12)]
RANDOMIZED = [normalize_word(t) for t in random_words(500, 48, 4, seed=20120615)]


def detail(request, text):
    request.node.acceptance_detail = text


def oracle_mismatches(w):
    """Names of the fast-path results that disagree with the oracles on ``w``."""
    bad = []
    n = w.n
    h = compute_head_table(w)
    t = compute_tail_table(w)
    col = compute_tail_suffix_column(w)
    for i in range(1, n + 1):
        for j in range(i - 1, n + 1):
            if h.head(i, j) != naive_head(w, i, j):
                bad.append(f"head({i},{j})")
            if t.tail(i, j) != naive_tail(w, i, j):
                bad.append(f"tail({i},{j})")
        if col[i] != naive_tail(w, i, n):
            bad.append(f"tail_col({i})")
    if list(all_abelian_squares(w)) != naive_square_set(w):
        bad.append("squares")
    if list(all_abelian_periods(w)) != naive_period_set(w):
        bad.append("periods")
    if list(compute_minlong(w)) != naive_minlong(w):
        bad.append("minlong")
    return bad


@pytest.mark.criterion(1, "Example 1: head(1, 1..11) and Abelian-square prefixes of the Fibonacci word")
def test_c1_fibonacci_example(request):
    w = normalize_word("abaababaabaababaababaa")
    row = compute_head_row(w, 1)
    heads = [row.head(j) for j in range(1, 12)]
    prefixes = {2 * int(p) for p in all_abelian_squares(w).bases(1)}
    detail(request, f"head={heads}, prefix lengths={sorted(prefixes)}")
    assert heads == [2, 3, 3, 5, 5, 6, 8, 8, 10, 10, 11]
    assert prefixes == {6, 10, 12, 16, 20, 22}


@pytest.mark.criterion(2, "MinLong table on caabbcabbcaaa")
def test_c2_minlong_table(request):
    got = list(compute_minlong(normalize_word("caabbcabbcaaa")))
    detail(request, "MinLong=" + ",".join("inf" if v == INF else str(v) for v in got))
    assert got == [7, 7, 9, 8, 7, 7] + [INF] * 7


@pytest.mark.criterion(3, "oracle equivalence on all 8190 binary words of length <= 12")
def test_c3_exhaustive_oracle(request):
    assert len(EXHAUSTIVE) == 8190
    start = time.perf_counter()
    failures = [(w.text(), bad) for w in EXHAUSTIVE if (bad := oracle_mismatches(w))]
    elapsed = time.perf_counter() - start
    detail(request, f"{len(failures)} mismatching words, {elapsed:.1f}s")
    assert not failures, failures[:3]
    assert elapsed < 60


@pytest.mark.criterion(4, "oracle equivalence on 500 random words (n <= 48, sigma <= 4)")
def test_c4_random_oracle(request):
    assert len(RANDOMIZED) == 500
    assert max(w.n for w in RANDOMIZED) <= 48 and max(w.m for w in RANDOMIZED) <= 4
    failures = [("".join(w.text()), bad) for w in RANDOMIZED if (bad := oracle_mismatches(w))]
    detail(request, f"{len(failures)} mismatching words")
    assert not failures, failures[:3]


@pytest.mark.criterion(5, "square_from_head agrees with the direct square check everywhere")
def test_c5_observation_squares(request):
    checked = 0
    for w in EXHAUSTIVE + RANDOMIZED:
        h = compute_head_table(w)
        for i in range(1, w.n + 1):
            for p in range(1, (w.n - i + 1) // 2 + 1):
                assert square_from_head(h, i, p) == is_abelian_square_at(w, i, p), (w.text(), i, p)
                checked += 1
    detail(request, f"{checked} (i, p) pairs")


@pytest.mark.criterion(6, "head' rows and f are non-decreasing")
def test_c6_monotonicity(request):
    rows = 0
    for w in EXHAUSTIVE + RANDOMIZED:
        h = compute_head_table(w)
        for i in range(1, w.n + 1):
            hp = h.row(i).head_prime.tolist()
            assert hp == sorted(hp), (w.text(), i)
            rows += 1
        f = compute_f(w).values[1:].tolist()
        assert f == sorted(f), w.text()
    detail(request, f"{rows} head rows, {len(EXHAUSTIVE) + len(RANDOMIZED)} f tables")


class _Null(io.TextIOBase):
    def write(self, s):
        return len(s)


def _periods_seconds(n, seed):
    cfg = RunConfig(subcommand="periods", random=n, sigma=4, seed=seed)
    start = time.perf_counter()
    code = run(cfg, out=_Null())
    elapsed = time.perf_counter() - start
    assert code == 0
    return elapsed


@pytest.mark.slow
@pytest.mark.criterion(7, "periods scales quadratically: t(4000)/t(2000) in [2.5, 6.0], t(4000) < 30 s")
def test_c7_quadratic_scaling(request):
    small = statistics.median(_periods_seconds(2000, s) for s in range(5))
    large = statistics.median(_periods_seconds(4000, s) for s in range(5))
    ratio = large / small
    detail(request, f"median t(2000)={small:.2f}s t(4000)={large:.2f}s ratio={ratio:.2f}")
    assert 2.5 <= ratio <= 6.0
    assert large < 30


# A child forked from a large process inherits its RSS in ru_maxrss, so the
# command is started from a small launcher whose own child is measured.
_LAUNCHER = """
import os, subprocess, sys, time
start = time.perf_counter()
proc = subprocess.Popen(sys.argv[1:], stdout=subprocess.DEVNULL)
_, status, usage = os.wait4(proc.pid, 0)
print(os.waitstatus_to_exitcode(status), time.perf_counter() - start, usage.ru_maxrss)
"""


def _run_minlong(n, *extra):
    cmd = [sys.executable, "-m", "abelian", "minlong", "--random", str(n), "--sigma", "4", "--seed", "1", *extra]
    r = subprocess.run([sys.executable, "-c", _LAUNCHER, *cmd], capture_output=True, text=True)
    code, elapsed, maxrss_kib = r.stdout.split()
    return int(code), float(elapsed), int(maxrss_kib) / 1024, r.stderr


@pytest.mark.slow
@pytest.mark.criterion(8, "minlong on n = 10**6 in < 5 s with peak memory < 100 MiB and no size cap")
def test_c8_linear_minlong(request):
    code, elapsed, peak_mib, err = _run_minlong(10**6)
    detail(request, f"{elapsed:.2f}s, peak RSS {peak_mib:.1f} MiB")
    assert code == 0, err
    assert elapsed < 5
    assert peak_mib < 100
    # the quadratic-table cap is not consulted on this path
    code, _, _, err = _run_minlong(10**6, "--max-n", "10")
    assert code == 0, err


@pytest.mark.criterion(9, "(0, n) is always a period; unary square counts match the closed form")
def test_c9_trivial_checks(request):
    words = [normalize_word(t) for t in random_words(200, 60, 4, seed=99)]
    assert all((0, w.n) in all_abelian_periods(w) for w in words)
    for n in range(1, 65):
        expected = sum(n - 2 * p + 1 for p in range(1, n // 2 + 1))
        assert len(all_abelian_squares(normalize_word("a" * n))) == expected, n
    detail(request, "200 random words, n = 1..64 unary")
