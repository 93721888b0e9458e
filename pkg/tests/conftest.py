import itertools
import random

import pytest
from hypothesis import strategies as st

from abelian import normalize_word


def binary_words(max_n):
    for n in range(1, max_n + 1):
        for tup in itertools.product("ab", repeat=n):
            yield "".join(tup)


def random_words(count, max_n, max_sigma, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        sigma = rng.randint(1, max_sigma)
        out.append("".join(rng.choice("abcd"[:sigma]) for _ in range(n)))
    return out


def small_words(alphabet="abc", max_size=14):
    return st.text(alphabet=alphabet, min_size=1, max_size=max_size)


@pytest.fixture(scope="session")
def fib22():
    return normalize_word("abaababaabaababaababaa")


@pytest.fixture(scope="session")
def minlong_word():
    return normalize_word("caabbcabbcaaa")


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        detail = getattr(item, "acceptance_detail", "")
        _acceptance.append((marker.args[0], marker.args[1], rep.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, detail in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {num}. {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
