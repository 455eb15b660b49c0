"""Truncated formal power series over the rationals.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of a power
series known exactly up to and including degree ``N`` (its *order*).  Binary
operations truncate to the smaller order of the two operands.

The transcendental operations use the usual quadratic recurrences:

* division by forward substitution,
* ``exp`` through ``(exp a)' = a' exp a``,
* ``log`` as the integral of ``a'/a``,
* ``pow(a, q)`` as ``exp(q log a)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import ArithError, factorial, format_rational, to_rational

__all__ = [
    "SeriesError",
    "TruncatedSeries",
    "ser_mul",
    "ser_div",
    "ser_exp",
    "ser_log",
    "ser_pow",
    "ser_compose",
    "ser_scale_reindex",
    "exp_series",
    "sin_series",
    "cos_series",
    "sinh_series",
    "cosh_series",
    "sinc_series",
    "sinhc_series",
    "expm1_over_z_series",
]


class SeriesError(ArithError):
    """A series operation's precondition on the coefficients failed."""


class TruncatedSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        c = tuple(to_rational(x) for x in coeffs)
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self._c = c

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value] + [0] * order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff=1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c)

    @classmethod
    def from_function(cls, fn, order: int) -> "TruncatedSeries":
        """Coefficients ``fn(0), ..., fn(order)``."""
        return cls(fn(n) for n in range(order + 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, n):
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        body = ", ".join(format_rational(x) for x in self._c[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"TruncatedSeries([{body}{more}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._c[: order + 1])

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self._c]

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return TruncatedSeries(a + b for a, b in zip(self._c[:n], other._c[:n]))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-a for a in self._c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ser_mul(self, other)
        s = to_rational(other)
        return TruncatedSeries(a * s for a in self._c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return ser_div(self, other)
        s = to_rational(other)
        if s == 0:
            raise ArithError("series divided by zero scalar")
        return TruncatedSeries(a / s for a in self._c)

    def __rtruediv__(self, other):
        return ser_div(self._coerce(other), self)

    def __pow__(self, q):
        return ser_pow(self, q)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the order drops by one (stays >= 0)."""
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries(n * self._c[n] for n in range(1, len(self._c)))


def ser_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return TruncatedSeries(
        sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(n + 1)
    )


def ser_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``q`` with ``q * b == a`` through the common order."""
    b0 = b[0]
    if b0 == 0:
        raise SeriesError("divisor has zero constant term")
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    q: list[Fraction] = []
    for k in range(n + 1):
        s = ac[k]
        for i in range(1, k + 1):
            s -= bc[i] * q[k - i]
        q.append(s / b0)
    return TruncatedSeries(q)


def ser_exp(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 0:
        raise SeriesError("exp needs a series with zero constant term")
    ac = a.coeffs
    e = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = sum((k * ac[k] * e[n - k] for k in range(1, n + 1)), Fraction(0))
        e.append(s / n)
    return TruncatedSeries(e)


def ser_log(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 1:
        raise SeriesError("log needs a series with constant term 1")
    ac = a.coeffs
    out = [Fraction(0)]
    for n in range(1, a.order + 1):
        # n*L_n = n*a_n - sum_{k<n} k*L_k*a_{n-k}
        s = n * ac[n]
        for k in range(1, n):
            s -= k * out[k] * ac[n - k]
        out.append(s / n)
    return TruncatedSeries(out)


def ser_pow(a: TruncatedSeries, q) -> TruncatedSeries:
    """``a**q`` for a unit series ``a`` (constant term 1) and rational ``q``."""
    if a[0] != 1:
        raise SeriesError("pow needs a series with constant term 1")
    q = to_rational(q)
    if q == 0:
        return TruncatedSeries.constant(1, a.order)
    return ser_exp(ser_log(a) * q)


def ser_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))``; ``inner`` must vanish at zero.

    The result is known up to the smaller of the two orders.
    """
    if inner[0] != 0:
        raise SeriesError("inner series of a composition must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    # Horner: (((o_n) z + o_{n-1}) z + ...)
    acc = TruncatedSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        acc = ser_mul(acc, inner) + outer[k]
    return acc


def ser_scale_reindex(a: TruncatedSeries, c=1, mode: str = "substitute_cz") -> TruncatedSeries:
    """Rescale or reindex the variable of a series.

    ``substitute_cz`` replaces ``x`` by ``c*x``.  ``even_part_as_z`` first
    does the same and then reads an even series ``sum c_2k x^2k`` as
    ``sum c_2k z^k``, which is how substitutions ``x = sqrt(z)`` are written
    without leaving the rationals.
    """
    c = to_rational(c)
    scaled = [x * c**k for k, x in enumerate(a.coeffs)]
    if mode == "substitute_cz":
        return TruncatedSeries(scaled)
    if mode == "even_part_as_z":
        odd = [k for k in range(1, len(scaled), 2) if scaled[k] != 0]
        if odd:
            raise SeriesError(f"series has a nonzero odd coefficient at degree {odd[0]}")
        return TruncatedSeries(scaled[0::2])
    raise ValueError(f"unknown reindex mode {mode!r}")


# Seed series, built from their coefficient formulas (not from exp) so that
# they are independent inputs for the exp/log machinery.

def _sparse(order: int, parity: int, coeff) -> TruncatedSeries:
    return TruncatedSeries(coeff(n) if n % 2 == parity else 0 for n in range(order + 1))


def exp_series(order: int, c=1) -> TruncatedSeries:
    """e^{cz}."""
    c = to_rational(c)
    return TruncatedSeries(c**n / factorial(n) for n in range(order + 1))


def sin_series(order: int) -> TruncatedSeries:
    return _sparse(order, 1, lambda n: Fraction((-1) ** (n // 2)) / factorial(n))


def cos_series(order: int) -> TruncatedSeries:
    return _sparse(order, 0, lambda n: Fraction((-1) ** (n // 2)) / factorial(n))


def sinh_series(order: int) -> TruncatedSeries:
    return _sparse(order, 1, lambda n: 1 / factorial(n))


def cosh_series(order: int) -> TruncatedSeries:
    return _sparse(order, 0, lambda n: 1 / factorial(n))


def sinc_series(order: int) -> TruncatedSeries:
    """sin(x)/x."""
    return _sparse(order, 0, lambda n: Fraction((-1) ** (n // 2)) / factorial(n + 1))


def sinhc_series(order: int) -> TruncatedSeries:
    """sinh(x)/x."""
    return _sparse(order, 0, lambda n: 1 / factorial(n + 1))


def expm1_over_z_series(order: int) -> TruncatedSeries:
    """(e^z - 1)/z."""
    return TruncatedSeries(1 / factorial(n + 1) for n in range(order + 1))
