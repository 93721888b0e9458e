"""Abelian squares, Abelian periods and long Abelian periods of a word."""
from .longperiods import FHat, FTable, MinLongTable, compute_f, compute_f_hat, compute_minlong
from .parikh import (
    DEFAULT_MAX_N,
    INF,
    MINUS_INF,
    ParikhDelta,
    ParikhVector,
    SizeError,
    Word,
    is_abelian_factor,
    normalize_word,
    parikh_of_range,
    ranges_equivalent,
)
from .periods import (
    MaxpowerTable,
    PeriodContext,
    PeriodSet,
    all_abelian_periods,
    compute_maxpower,
    is_abelian_period,
    minimal_period_per_shift,
)
from .squares import (
    SquareSet,
    all_abelian_squares,
    is_abelian_square_at,
    square_from_head,
    square_from_prime_index,
    square_prime_index,
)
from .tables import (
    HeadRow,
    HeadTable,
    TailColumn,
    TailTable,
    compute_head_row,
    compute_head_table,
    compute_tail_suffix_column,
    compute_tail_table,
)

__version__ = "0.1.0"
