"""``abelian`` command line tool.

Output is TSV (one record per line) or a single JSON object. Squares, head,
tail and maxpower use 1-based positions; periods and minlong use 0-based
shifts. Infinity is written as ``inf``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import oracle
from .generate import generate_fibonacci, generate_random
from .longperiods import compute_minlong
from .parikh import DEFAULT_MAX_N, INF, SizeError, Word, check_size, normalize_word
from .periods import all_abelian_periods, compute_maxpower, minimal_period_per_shift
from .squares import all_abelian_squares, square_prime_index
from .tables import compute_head_table, compute_tail_table

SUBCOMMANDS = ("squares", "periods", "minlong", "head", "tail", "maxpower")

EXIT_USAGE = 1
EXIT_TOO_LARGE = 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    text: str | None = None
    file: str | None = None
    fib: int | None = None
    random: int | None = None
    sigma: int | None = None
    seed: int | None = None
    format: str = "tsv"
    count_only: bool = False
    min_per_shift: bool = False
    include_trailing_row: bool = False
    center_index: bool = False
    max_n: int = DEFAULT_MAX_N
    use_oracle: bool = False

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        sources = [x is not None for x in (self.text, self.file, self.fib, self.random)]
        if sum(sources) != 1:
            raise UsageError("exactly one of --text, --file, --fib, --random is required")
        if self.random is not None:
            if self.sigma is None or self.seed is None:
                raise UsageError("--random needs --sigma and --seed")
            if not 1 <= self.sigma <= 26:
                raise UsageError("--sigma must be in 1..26")
            if not -(2**63) <= self.seed < 2**64:
                raise UsageError("--seed must fit in 64 bits")
        for name in ("fib", "random"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name} must be non-negative")
        if self.format not in ("tsv", "json"):
            raise UsageError("--format must be tsv or json")
        if self.min_per_shift and self.subcommand != "periods":
            raise UsageError("--min-per-shift only applies to periods")
        if self.center_index and self.subcommand != "squares":
            raise UsageError("--center-index only applies to squares")
        if self.include_trailing_row and self.subcommand != "minlong":
            raise UsageError("--trailing-row only applies to minlong")
        if self.max_n < 0:
            raise UsageError("--max-n must be non-negative")


def load_input(cfg: RunConfig) -> Word:
    if cfg.text is not None:
        data = cfg.text.encode("utf-8")
    elif cfg.file is not None:
        try:
            with open(cfg.file, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.file}: {exc}") from exc
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    elif cfg.fib is not None:
        data = generate_fibonacci(cfg.fib).encode("ascii")
    else:
        data = generate_random(cfg.random, cfg.sigma, cfg.seed).encode("ascii")
    return normalize_word(data)


def _fmt(v: int):
    return "inf" if v >= INF else v


def _records(cfg: RunConfig, w: Word) -> tuple:
    """(field names, iterable of rows) for the configured subcommand."""
    n = w.n
    sub = cfg.subcommand
    if sub == "squares":
        if cfg.use_oracle:
            rows: Iterable = oracle.naive_square_set(w)
        else:
            rows = all_abelian_squares(w, max_n=cfg.max_n)
        if cfg.center_index:
            return ("center", "p"), sorted(square_prime_index(i, p) for i, p in rows)
        return ("i", "p"), rows
    if sub == "periods":
        if cfg.use_oracle:
            pairs = oracle.naive_period_set(w)
            if cfg.min_per_shift:
                best = [INF] * n
                for i, p in pairs:
                    best[i] = min(best[i], p)
                return ("i", "p"), ((i, _fmt(v)) for i, v in enumerate(best))
            return ("i", "p"), pairs
        ps = all_abelian_periods(w, max_n=cfg.max_n)
        if cfg.min_per_shift:
            mins = minimal_period_per_shift(ps, n)
            return ("i", "p"), ((i, _fmt(v)) for i, v in enumerate(mins))
        return ("i", "p"), ps
    if sub == "minlong":
        values = oracle.naive_minlong(w) if cfg.use_oracle else _chunked(compute_minlong(w).values)
        rows = ((i, _fmt(v)) for i, v in enumerate(values))
        if cfg.include_trailing_row:
            rows = itertools.chain(rows, [(n, "inf")])
        return ("i", "minlong"), rows
    if sub == "head":
        check_size(n, cfg.max_n)
        if cfg.use_oracle:
            get = lambda i, j: oracle.naive_head(w, i, j)  # noqa: E731
        else:
            get = compute_head_table(w, max_n=cfg.max_n).head
        return ("i", "j", "head"), _triangle(n, get)
    if sub == "tail":
        check_size(n, cfg.max_n)
        if cfg.use_oracle:
            get = lambda i, j: oracle.naive_tail(w, i, j)  # noqa: E731
        else:
            get = compute_tail_table(w, max_n=cfg.max_n).tail
        return ("i", "j", "tail"), _triangle(n, get)
    # maxpower
    check_size(n, cfg.max_n)
    if cfg.use_oracle:
        get = lambda i, p: oracle.naive_maxpower(w, i, p)  # noqa: E731
    else:
        get = compute_maxpower(w, max_n=cfg.max_n)
    rows = ((i, p, get(i, p)) for i in range(1, n + 1) for p in range(1, n - i + 2))
    return ("i", "p", "maxpower"), rows


def _chunked(a, size: int = 1 << 16) -> Iterator[int]:
    # converting a whole 10**6 array with tolist() would dominate peak memory
    for start in range(0, len(a), size):
        yield from a[start : start + size].tolist()


def _triangle(n: int, get) -> Iterator[tuple]:
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield i, j, _fmt(get(i, j))


def render(cfg: RunConfig, n: int, fields: Sequence[str], rows: Iterable) -> Iterator[str]:
    """Output text in chunks; concatenated it is the full document."""
    if cfg.count_only:
        count = len(rows) if hasattr(rows, "__len__") else sum(1 for _ in rows)
        if cfg.format == "json":
            yield json.dumps({"n": n, "subcommand": cfg.subcommand, "count": count}) + "\n"
        else:
            yield f"{count}\n"
        return
    if cfg.format == "json":
        results = [dict(zip(fields, map(_plain, row))) for row in rows]
        yield json.dumps({"n": n, "subcommand": cfg.subcommand, "results": results}) + "\n"
        return
    lines = ("\t".join(map(str, row)) + "\n" for row in rows)
    while True:
        chunk = "".join(itertools.islice(lines, 1 << 14))
        if not chunk:
            return
        yield chunk


def _plain(v):
    # numpy integers are not JSON serialisable
    return v if isinstance(v, str) else int(v)


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        cfg.validate()
        w = load_input(cfg)
        if cfg.use_oracle:
            check_size(w.n, oracle.ORACLE_MAX_N)
        fields, rows = _records(cfg, w)
        for chunk in render(cfg, w.n, fields, rows):
            out.write(chunk)
    except UsageError as exc:
        print(f"abelian: error: {exc}", file=err)
        return EXIT_USAGE
    except SizeError as exc:
        print(f"abelian: error: {exc}", file=err)
        return EXIT_TOO_LARGE
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", help="literal input word")
    src.add_argument("--file", help="read the word from a file (one trailing newline dropped)")
    src.add_argument("--fib", type=int, metavar="N", help="Fibonacci word prefix of length N")
    src.add_argument("--random", type=int, metavar="N", help="random word of length N")
    common.add_argument("--sigma", type=int, help="alphabet size for --random (1..26)")
    common.add_argument("--seed", type=int, help="seed for --random")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--count", dest="count_only", action="store_true",
                        help="print only the number of records")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help="size cap for quadratic subcommands (default %(default)s)")
    common.add_argument("--oracle", dest="use_oracle", action="store_true", help=argparse.SUPPRESS)

    parser = _Parser(prog="abelian", description="Abelian squares and periods of a word.")
    subs = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    subs.add_parser("squares", parents=[common], help="all Abelian squares (i, p)").add_argument(
        "--center-index", action="store_true", help="report (i + p - 1, p) instead of (i, p)")
    subs.add_parser("periods", parents=[common], help="all Abelian periods (i, p)").add_argument(
        "--min-per-shift", action="store_true", help="shortest period for every shift")
    subs.add_parser("minlong", parents=[common], help="MinLong table (linear time)").add_argument(
        "--trailing-row", dest="include_trailing_row", action="store_true",
        help="also print the row for shift n")
    subs.add_parser("head", parents=[common], help="head(i, j) for all i <= j")
    subs.add_parser("tail", parents=[common], help="tail(i, j) for all i <= j")
    subs.add_parser("maxpower", parents=[common], help="maxpower(i, p) where a block fits")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = vars(build_parser().parse_args(argv))
    return run(RunConfig(**args))


if __name__ == "__main__":
    sys.exit(main())
