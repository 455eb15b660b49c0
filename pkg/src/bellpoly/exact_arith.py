"""Exact rational scalars and factorial-type primitives.

Every scalar in the package is a :class:`fractions.Fraction`, which is kept
reduced with a positive denominator after each operation, so equality of two
values is plain structural equality.
"""
from __future__ import annotations

import math
import operator
import re
import threading
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "ArithError",
    "to_rational",
    "rat_arith",
    "factorial",
    "double_factorial",
    "rising_factorial",
    "falling_factorial",
    "binomial_general",
    "int_pow",
    "format_rational",
    "parse_rational",
]


class ArithError(ArithmeticError):
    """Raised for undefined exact operations (division by zero, bad domain)."""


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = to_rational(a), to_rational(b)
    if op == "div" and b == 0:
        raise ArithError(f"division of {a} by zero")
    return fn(a, b)


class _GrowTable:
    """Grow-only memo table; reads are lock-free, extension is serialized."""

    def __init__(self, seed, step):
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                values.append(self._step(values, len(values)))
            return values[n]


# _fact[n] = n!;  _dfact[n] = (n - 1)!! so that index 0 holds (-1)!!
_fact = _GrowTable([1], lambda v, n: v[n - 1] * n)
_dfact = _GrowTable([1, 1], lambda v, n: v[n - 2] * (n - 1))


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ArithError(f"factorial of negative integer {n}")
    return Fraction(_fact[n])


def double_factorial(n: int) -> Fraction:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ArithError(f"double factorial undefined for n = {n}")
    return Fraction(_dfact[n + 1])


def rising_factorial(z, l: int) -> Fraction:
    """Pochhammer symbol z(z+1)...(z+l-1); equals 1 for l = 0."""
    if l < 0:
        raise ArithError("rising factorial needs a nonnegative length")
    z = to_rational(z)
    out = Fraction(1)
    for i in range(l):
        out *= z + i
    return out


def falling_factorial(z, n: int) -> Fraction:
    """z(z-1)...(z-n+1); equals 1 for n = 0."""
    if n < 0:
        raise ArithError("falling factorial needs a nonnegative length")
    z = to_rational(z)
    out = Fraction(1)
    for i in range(n):
        out *= z - i
    return out


def binomial_general(z, k: int) -> Fraction:
    """Binomial coefficient with rational top and integer bottom.

    Defined as ``(-1)**k * rising_factorial(-z, k) / k!`` for ``k >= 0`` and
    as zero for negative ``k``.
    """
    if k < 0:
        return Fraction(0)
    z = to_rational(z)
    if z.denominator == 1:
        n = z.numerator
        if n >= 0:
            return Fraction(math.comb(n, k))
        value = math.comb(k - n - 1, k)
        return Fraction(-value if k & 1 else value)
    value = rising_factorial(-to_rational(z), k) / _fact[k]
    return -value if k & 1 else value


def int_pow(x, n: int) -> Fraction:
    """x**n for integer n >= 0, with 0**0 = 1."""
    if n < 0:
        raise ArithError("int_pow only takes nonnegative exponents")
    return to_rational(x) ** n


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else (floats included) is rejected."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)
