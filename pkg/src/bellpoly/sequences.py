"""Bernoulli, Euler and Catalan numbers, central factorial numbers, and
values of the generalized (Norlund) Bernoulli and Euler polynomials.

Bernoulli and Euler numbers come from their generating functions through the
series engine and are cached in grow-on-demand tables.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from .exact_arith import binomial_general, factorial, int_pow, to_rational
from .series import (
    TruncatedSeries,
    cosh_series,
    exp_series,
    expm1_over_z_series,
    ser_div,
    ser_mul,
    ser_pow,
)

__all__ = [
    "SequenceTable",
    "bernoulli",
    "euler",
    "catalan",
    "central_factorial_T",
    "gen_bernoulli_poly",
    "gen_euler_poly",
    "bernoulli_gf",
    "euler_gf",
    "table",
    "SEQUENCE_KINDS",
]


def bernoulli_gf(order: int) -> TruncatedSeries:
    """z/(e^z - 1) with the formal z cancelled."""
    return ser_div(TruncatedSeries.constant(1, order), expm1_over_z_series(order))


def euler_gf(order: int) -> TruncatedSeries:
    """2/(e^z + e^{-z}), the hyperbolic secant."""
    return ser_div(TruncatedSeries.constant(1, order), cosh_series(order))


def _catalan_values(n: int) -> list[Fraction]:
    return [binomial_general(2 * k, k) / (k + 1) for k in range(n + 1)]


class SequenceTable:
    """Cached values of one number family, extended on demand.

    Extension recomputes through at least twice the previous index so the
    amortized cost of a sweep stays quadratic in the series order.
    """

    _builders = {
        "bernoulli": lambda n: [c * factorial(k) for k, c in enumerate(bernoulli_gf(n))],
        "euler": lambda n: [c * factorial(k) for k, c in enumerate(euler_gf(n))],
        "catalan": _catalan_values,
    }

    def __init__(self, kind: str):
        if kind not in self._builders:
            raise ValueError(f"unknown sequence kind {kind!r}")
        self.kind = kind
        self.values: list[Fraction] = []
        self._lock = threading.Lock()

    @property
    def computed_through(self) -> int:
        return len(self.values) - 1

    def extend(self, n: int) -> None:
        if n <= self.computed_through:
            return
        with self._lock:
            if n > self.computed_through:
                target = max(n, 2 * self.computed_through, 16)
                self.values = self._builders[self.kind](target)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(f"{self.kind} index must be nonnegative, got {n}")
        self.extend(n)
        return self.values[n]

    def upto(self, n: int) -> list[Fraction]:
        self.extend(n)
        return self.values[: n + 1]


_TABLES = {kind: SequenceTable(kind) for kind in SequenceTable._builders}
SEQUENCE_KINDS = tuple(_TABLES)


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    return _TABLES["bernoulli"][n]


def euler(n: int) -> Fraction:
    """E_n, the coefficients of sech z (E_2 = -1)."""
    return _TABLES["euler"][n]


def catalan(k: int) -> Fraction:
    return _TABLES["catalan"][k]


def table(kind: str, n: int) -> list[Fraction]:
    """Values 0..n of a named family."""
    if kind not in _TABLES:
        raise ValueError(f"unknown sequence kind {kind!r}")
    return list(_TABLES[kind].upto(n))


def central_factorial_T(p: int, q: int) -> Fraction:
    """Central factorial number of the second kind,
    ``T(p, q) = (1/q!) sum_k (-1)^k C(q, k) (q/2 - k)^p`` with 0^0 = 1."""
    if p < 0 or q < 0:
        raise ValueError("central factorial numbers need p, q >= 0")
    half = Fraction(q, 2)
    s = Fraction(0)
    for k in range(q + 1):
        term = binomial_general(q, k) * int_pow(half - k, p)
        s += -term if k & 1 else term
    return s / factorial(q)


def _poly_value(gf: TruncatedSeries, sigma, x, k: int) -> Fraction:
    powered = ser_pow(gf, sigma)
    x = to_rational(x)
    if x != 0:
        powered = ser_mul(powered, exp_series(k, x))
    return powered[k] * factorial(k)


def gen_bernoulli_poly(k: int, sigma, x) -> Fraction:
    """B_k^{(sigma)}(x): k! [z^k] (z/(e^z-1))^sigma e^{xz}."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return _poly_value(bernoulli_gf(k), sigma, x, k)


def gen_euler_poly(k: int, sigma, x) -> Fraction:
    """E_k^{(sigma)}(x): k! [z^k] (2/(e^z+1))^sigma e^{xz}."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    one_plus_exp = exp_series(k) + 1
    gf = ser_div(TruncatedSeries.constant(2, k), one_plus_exp)
    return _poly_value(gf, sigma, x, k)
