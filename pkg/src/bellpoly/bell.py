"""Partial and complete Bell polynomials evaluated at rational arguments.

Three independent routes are provided so they can check one another:

* :func:`partial_bell_direct` / :func:`complete_bell_partition_sum` sum over
  the multi-indices returned by :func:`enumerate_partitions`;
* :func:`partial_bell_recurrence` / :func:`complete_bell_sum` use the
  recurrence ``B_{k,j} = sum_i C(k-1, i-1) a_i B_{k-i, j-1}``;
* :func:`complete_bell_egf` reads the values off ``exp(sum a_k z^k / k!)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Sequence

from .exact_arith import factorial, to_rational
from .series import TruncatedSeries, ser_exp

__all__ = [
    "ArgSequence",
    "enumerate_partitions",
    "partition_weight_sum",
    "partial_bell_direct",
    "partial_bell_recurrence",
    "complete_bell_sum",
    "complete_bell_partition_sum",
    "complete_bell_egf",
    "faa_di_bruno",
]


class ArgSequence:
    """A rule ``i -> a_i`` (1-based) producing Bell polynomial arguments.

    Built from a callable, or from an explicit list with
    :meth:`from_values`, in which case indices past the end raise
    ``IndexError``.
    """

    def __init__(self, rule: Callable[[int], object], name: str = "", length: int | None = None):
        self._rule = rule
        self.name = name
        self.length = length

    @classmethod
    def from_values(cls, values: Sequence, name: str = "") -> "ArgSequence":
        vals = [to_rational(v) for v in values]
        return cls(lambda i: vals[i - 1], name=name, length=len(vals))

    def __call__(self, i: int) -> Fraction:
        if i < 1 or (self.length is not None and i > self.length):
            raise IndexError(f"argument a_{i} not available for {self!r}")
        return to_rational(self._rule(i))

    __getitem__ = __call__

    def take(self, n: int) -> list[Fraction]:
        """a_1, ..., a_n."""
        return [self(i) for i in range(1, n + 1)]

    def scaled(self, c) -> "ArgSequence":
        c = to_rational(c)
        return ArgSequence(lambda i: c * self(i), name=f"{c}*{self.name}", length=self.length)

    def __repr__(self):
        return f"ArgSequence({self.name or '<rule>'})"


def _as_args(args) -> ArgSequence:
    if isinstance(args, ArgSequence):
        return args
    if callable(args):
        return ArgSequence(args)
    return ArgSequence.from_values(args)


def enumerate_partitions(k: int, j: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every ``(l_1, ..., l_k)`` with ``sum i*l_i == k`` (and
    ``sum l_i == j`` when ``j`` is given).

    Vectors come out in decreasing lexicographic order, so ``k = 3`` gives
    ``(3,0,0), (1,1,0), (0,0,1)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if j is not None and not 0 <= j <= k:
        if j < 0:
            raise ValueError("block count must be nonnegative")
        return
    parts = [0] * k

    def descend(i: int, rem: int, blocks: int | None):
        if i > k:
            if rem == 0 and (blocks is None or blocks == 0):
                yield tuple(parts)
            return
        top = rem // i
        if blocks is not None:
            # each of the remaining blocks has size >= i and <= k
            if blocks * i > rem or blocks * k < rem:
                return
            top = min(top, blocks)
        for l in range(top, -1, -1):
            parts[i - 1] = l
            yield from descend(i + 1, rem - i * l, None if blocks is None else blocks - l)
        parts[i - 1] = 0

    if k == 0:
        if j in (None, 0):
            yield ()
        return
    yield from descend(1, k, j)


def partition_weight_sum(k: int, weights, j: int | None = None) -> Fraction:
    """``sum over partitions of prod_i w_i**l_i / l_i!``.

    This is the raw multi-index sum; with ``w_i = a_i / i!`` it equals
    ``B_k / k!`` (or ``B_{k,j} / k!`` when ``j`` is given).
    """
    w = _as_args(weights)
    width = k if j is None else k - j + 1
    vals = w.take(max(width, 0))
    total = Fraction(0)
    for parts in enumerate_partitions(k, j):
        term = Fraction(1)
        for i, l in enumerate(parts):
            if l:
                term *= vals[i] ** l / factorial(l)
        total += term
    return total


def partial_bell_direct(k: int, j: int, args) -> Fraction:
    """B_{k,j}(a_1, ..., a_{k-j+1}) as the multinomial partition sum."""
    if not 0 <= j <= k:
        raise ValueError(f"partial Bell polynomial needs k >= j >= 0, got k={k}, j={j}")
    if j == 0:
        return Fraction(1 if k == 0 else 0)
    a = _as_args(args)
    weights = [a(i) / factorial(i) for i in range(1, k - j + 2)]
    return factorial(k) * partition_weight_sum(k, weights, j)


def _recurrence_table(k_max: int, a: ArgSequence, j_max: int | None = None, gap: int | None = None) -> dict:
    """B_{n,m} for n <= k_max by the first-part recurrence.

    With ``gap`` set, only entries with ``n - m <= gap`` are filled; that is
    all B_{k,j} needs when ``gap = k - j``.
    """
    j_max = k_max if j_max is None else j_max
    gap = k_max if gap is None else gap
    # fetched lazily: B_{k,j} only ever touches a_1 .. a_{k-j+1}
    vals: list[Fraction] = []
    cache = {(0, 0): Fraction(1)}

    def get_a(i):
        while len(vals) < i:
            vals.append(a(len(vals) + 1))
        return vals[i - 1]

    for n in range(1, k_max + 1):
        cache[(n, 0)] = Fraction(0)
        for m in range(max(1, n - gap), min(n, j_max) + 1):
            s = Fraction(0)
            for i in range(1, n - m + 2):
                prev = cache.get((n - i, m - 1), Fraction(0))
                if prev:
                    s += comb(n - 1, i - 1) * get_a(i) * prev
            cache[(n, m)] = s
    return cache


def partial_bell_recurrence(k: int, j: int, args) -> Fraction:
    if not 0 <= j <= k:
        raise ValueError(f"partial Bell polynomial needs k >= j >= 0, got k={k}, j={j}")
    if j == 0:
        return Fraction(1 if k == 0 else 0)
    return _recurrence_table(k, _as_args(args), j, k - j)[(k, j)]


def complete_bell_sum(k: int, args) -> Fraction:
    """B_k = sum_j B_{k,j}, the partial values taken from the recurrence."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    table = _recurrence_table(k, _as_args(args))
    return sum((table[(k, j)] for j in range(1, k + 1)), Fraction(0))


def complete_bell_partition_sum(k: int, args) -> Fraction:
    """B_k as k! times the unrestricted multi-index sum."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = _as_args(args)
    weights = [a(i) / factorial(i) for i in range(1, k + 1)]
    return factorial(k) * partition_weight_sum(k, weights)


def complete_bell_egf(args, K: int) -> list[Fraction]:
    """[B_0, ..., B_K] read from exp(sum_{k>=1} a_k z^k / k!)."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    a = _as_args(args)
    inner = TruncatedSeries([0] + [a(i) / factorial(i) for i in range(1, K + 1)])
    return [c * factorial(n) for n, c in enumerate(ser_exp(inner))]


def faa_di_bruno(f_derivs: Sequence, h_derivs: Sequence, k: int) -> Fraction:
    """k-th derivative of f(h(z)) at a point.

    ``f_derivs[j]`` is f^{(j)} at h(z0) for j = 0..k, and ``h_derivs[i-1]``
    is h^{(i)}(z0) for i = 1..k.
    """
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if len(f_derivs) < k + 1:
        raise ValueError(f"need f derivatives of orders 0..{k}, got {len(f_derivs)}")
    if len(h_derivs) < k:
        raise ValueError(f"need h derivatives of orders 1..{k}, got {len(h_derivs)}")
    if k == 0:
        return to_rational(f_derivs[0])
    table = _recurrence_table(k, ArgSequence.from_values(h_derivs[:k]))
    return sum((to_rational(f_derivs[j]) * table[(k, j)] for j in range(k + 1)), Fraction(0))
