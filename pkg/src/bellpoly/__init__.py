"""Exact evaluation of Bell polynomials, classical number families and the
identities that connect them."""
from .exact_arith import (
    ArithError,
    Rational,
    binomial_general,
    double_factorial,
    factorial,
    falling_factorial,
    format_rational,
    parse_rational,
    rat_arith,
    rising_factorial,
)
from .series import (
    SeriesError,
    TruncatedSeries,
    ser_compose,
    ser_div,
    ser_exp,
    ser_log,
    ser_mul,
    ser_pow,
    ser_scale_reindex,
)
from .sequences import (
    bernoulli,
    catalan,
    central_factorial_T,
    euler,
    gen_bernoulli_poly,
    gen_euler_poly,
)
from .bell import (
    ArgSequence,
    complete_bell_egf,
    complete_bell_partition_sum,
    complete_bell_sum,
    enumerate_partitions,
    faa_di_bruno,
    partial_bell_direct,
    partial_bell_recurrence,
)

__version__ = "0.1.0"
