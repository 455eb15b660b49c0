"""Both sides of the Bell-polynomial identities, and exact verification runs.

Every identity has a string id (``HEQI_T6``, ``XU_T12``, ``FILOMAT_EVEN``,
...).  A verification run evaluates left and right sides as exact rationals
and records a :class:`CaseResult` per parameter tuple; a case passes only on
structural equality.

For the Bell-form identities the left side is computed three ways (the
multi-index partition sum, the partial-Bell recurrence and the exponential
generating function).  If these disagree the case fails with a diagnostic
before any comparison with the right side is made.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .bell import (
    ArgSequence,
    complete_bell_egf,
    complete_bell_partition_sum,
    complete_bell_sum,
    faa_di_bruno,
    partial_bell_direct,
    partial_bell_recurrence,
    partition_weight_sum,
)
from .exact_arith import (
    binomial_general,
    double_factorial,
    factorial,
    falling_factorial,
    format_rational,
    int_pow,
    rising_factorial,
    to_rational,
)
from .sequences import (
    bernoulli,
    catalan,
    central_factorial_T,
    euler,
    gen_bernoulli_poly,
    gen_euler_poly,
)
from .series import (
    TruncatedSeries,
    cos_series,
    ser_div,
    ser_exp,
    ser_log,
    ser_pow,
    ser_scale_reindex,
    sinc_series,
    sinhc_series,
)

__all__ = [
    "DEFAULT_EPSILONS",
    "DEFAULT_K_MAX",
    "DEFAULT_ORDER",
    "DEFAULT_M_MAX",
    "IdentityCase",
    "CaseResult",
    "VerificationReport",
    "IdentityDomainError",
    "RouteMismatch",
    "BELL_IDENTITIES",
    "build_theorem_args",
    "closed_form_rhs",
    "lhs_bell",
    "verify_identity",
    "verify_appendix",
    "verify_filomat",
    "verify_classical",
    "verify_generating",
    "verify_remarks",
    "verify_consistency",
    "RunConfig",
    "SUITES",
    "random_rationals",
    "run_suites",
]

F = Fraction

DEFAULT_EPSILONS = (F(1), F(-1), F(1, 2), F(-1, 2), F(2), F(-3, 2), F(5, 3))
DEFAULT_K_MAX = 12
DEFAULT_ORDER = 24
DEFAULT_M_MAX = 6
PM1 = (F(1), F(-1))


class IdentityDomainError(ValueError):
    """Parameters outside the range an identity is stated for."""


class RouteMismatch(ArithmeticError):
    """The independent left-side routes of a Bell identity disagree."""


@dataclass(frozen=True)
class IdentityCase:
    identity_id: str
    k: int
    epsilon: Fraction | None = None
    extra: Fraction | None = None

    def sort_key(self):
        return (
            self.identity_id,
            self.k,
            self.epsilon is not None,
            self.epsilon if self.epsilon is not None else 0,
            self.extra is not None,
            self.extra if self.extra is not None else 0,
        )


@dataclass
class CaseResult:
    case: IdentityCase
    lhs: Fraction | None
    rhs: Fraction | None
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        c = self.case
        out = {
            "id": c.identity_id,
            "k": c.k,
            "epsilon": None if c.epsilon is None else format_rational(c.epsilon),
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "pass": self.passed,
        }
        if c.extra is not None:
            out["extra"] = format_rational(c.extra)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[CaseResult]:
        return [r for r in self.cases if not r.passed]

    def sorted(self) -> "VerificationReport":
        cases = sorted(self.cases, key=lambda r: r.case.sort_key())
        return VerificationReport(self.suite, cases, self.wall_time)

    @classmethod
    def merge(cls, suite: str, reports: Iterable["VerificationReport"]) -> "VerificationReport":
        out = cls(suite)
        for rep in reports:
            out.cases.extend(rep.cases)
            out.wall_time += rep.wall_time
        return out

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "cases": [r.to_dict() for r in self.cases],
            "passed": self.passed,
            "failed": self.failed,
        }
        if timing:
            d["wall_ms"] = round(self.wall_time * 1000)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=1)

    def summary(self) -> str:
        status = "OK" if self.ok else "FAILED"
        return f"{self.suite}: {self.passed} passed, {self.failed} failed [{status}]"


def _check(case: IdentityCase, lhs_fn: Callable[[], Fraction], rhs_fn: Callable[[], Fraction]) -> CaseResult:
    try:
        lhs = lhs_fn()
    except RouteMismatch as exc:
        return CaseResult(case, None, None, False, f"left-side routes disagree: {exc}")
    rhs = rhs_fn()
    lhs, rhs = to_rational(lhs), to_rational(rhs)
    return CaseResult(case, lhs, rhs, lhs == rhs)


def _timed(suite: str, results: list[CaseResult], start: float) -> VerificationReport:
    return VerificationReport(suite, results, time.perf_counter() - start)


# --- argument rules --------------------------------------------------------

def _b_ratio(i: int) -> Fraction:
    """(i-1)! B_{2i} / (2i)!"""
    return factorial(i - 1) * bernoulli(2 * i) / factorial(2 * i)


def _filomat_arg(i: int) -> Fraction:
    return F(1, i + 1) if i % 2 == 0 else F(0)


_ARG_RULES: dict[str, Callable[[Fraction, int], Fraction]] = {
    "HEQI_T4": lambda e, i: e / 2 * _b_ratio(i),
    "HEQI_T5": lambda e, i: (4**i - 1) * e / 2 * _b_ratio(i),
    "HEQI_T6": lambda e, i: e / 2 * factorial(i - 1) * binomial_general(2 * i, i),
    "HEQI_T7": lambda e, i: e * _b_ratio(i),
    "HEQI_T8": lambda e, i: (4**i - 1) * e * _b_ratio(i),
    "HEQI_T9": lambda e, i: e * factorial(i - 1) * binomial_general(2 * i, i),
}
_ARG_RULES["XU_T10"] = _ARG_RULES["HEQI_T7"]
_ARG_RULES["XU_T11"] = _ARG_RULES["HEQI_T8"]
_ARG_RULES["XU_T12"] = _ARG_RULES["HEQI_T9"]
# the multi-index forms are the same complete Bell values divided by k!
_ARG_RULES["GENCEV_T2"] = _ARG_RULES["HEQI_T4"]
_ARG_RULES["GENCEV_T3"] = _ARG_RULES["HEQI_T5"]
_ARG_RULES["GENCEV_T4"] = _ARG_RULES["HEQI_T6"]


def build_theorem_args(identity_id: str, epsilon=None) -> ArgSequence:
    """Argument rule ``i -> a_i`` of a Bell-form identity."""
    if identity_id in ("FILOMAT_EVEN", "FILOMAT_ODD"):
        return ArgSequence(_filomat_arg, name=identity_id)
    if identity_id == "HOFFMAN_T1":
        identity_id, epsilon = "HEQI_T4", F(1)
    try:
        rule = _ARG_RULES[identity_id]
    except KeyError:
        raise IdentityDomainError(f"{identity_id!r} is not a Bell-form identity") from None
    if epsilon is None:
        raise IdentityDomainError(f"{identity_id} needs an epsilon")
    e = to_rational(epsilon)
    return ArgSequence(lambda i: rule(e, i), name=f"{identity_id}(eps={e})")


# --- right-hand sides ------------------------------------------------------

def _t7_rhs(k: int, e: Fraction) -> Fraction:
    total = F(0)
    for l in range(1, 2 * k + 1):
        inner = F(0)
        for j in range(1, l + 1):
            t = binomial_general(l, j) * central_factorial_T(2 * k + j, j) / binomial_general(2 * k + j, j)
            inner += -t if j & 1 else t
        total += rising_factorial(-2 * e, l) / factorial(l) * inner
    return factorial(k) / factorial(2 * k) * total


def _binom_power_inner(l: int, k2: int) -> Fraction:
    """sum_m (-1)^m/2^m C(l,m) sum_q C(m,q) (2q-m)^k2, with 0^0 = 1."""
    s = F(0)
    for m in range(l + 1):
        inner = sum((binomial_general(m, q) * int_pow(2 * q - m, k2) for q in range(m + 1)), F(0))
        s += F(-1) ** m / 2**m * binomial_general(l, m) * inner
    return s


def _t8_rhs(k: int, e: Fraction) -> Fraction:
    total = sum(
        (rising_factorial(-2 * e, l) / factorial(l) * _binom_power_inner(l, 2 * k) for l in range(2 * k + 1)),
        F(0),
    )
    return factorial(k) / (4**k * factorial(2 * k)) * total


def _t9_rhs(k: int, e: Fraction) -> Fraction:
    return sum(
        (
            rising_factorial(2 * e, k - l)
            * binomial_general(k + l - 1, 2 * l)
            * 2**l
            * double_factorial(2 * l - 1)
            for l in range(k + 1)
        ),
        F(0),
    )


def _pm1(fn_pos, fn_neg):
    def rhs(k, e):
        if e == 1:
            return fn_pos(k)
        if e == -1:
            return fn_neg(k)
        raise IdentityDomainError(f"identity only stated for epsilon = +-1, got {e}")
    return rhs


@dataclass(frozen=True)
class BellIdentity:
    rhs: Callable[[int, Fraction], Fraction]
    k_min: int
    pm1_only: bool
    # multi-index weight w_i (so that w_i = a_i / i!) for the raw Gencev/Hoffman forms
    weight: Callable[[Fraction, int], Fraction] | None = None
    reformulation: str | None = None


def _w_bernoulli(e, i):
    return e * bernoulli(2 * i) / (2 * i * factorial(2 * i))


BELL_IDENTITIES: dict[str, BellIdentity] = {
    "HOFFMAN_T1": BellIdentity(
        rhs=lambda k, e: 1 / (4**k * factorial(2 * k + 1)),
        k_min=1, pm1_only=False,
        weight=lambda e, i: _w_bernoulli(F(1), i),
        reformulation="HEQI_T4",
    ),
    "GENCEV_T2": BellIdentity(
        rhs=_pm1(
            lambda k: 1 / ((2 * k + 1) * double_factorial(4 * k)),
            lambda k: (2 - 4**k) * bernoulli(2 * k) / double_factorial(4 * k),
        ),
        k_min=0, pm1_only=True, weight=_w_bernoulli, reformulation="HEQI_T4",
    ),
    "GENCEV_T3": BellIdentity(
        rhs=_pm1(
            lambda k: 1 / double_factorial(4 * k),
            lambda k: euler(2 * k) / double_factorial(4 * k),
        ),
        k_min=0, pm1_only=True,
        weight=lambda e, i: (4**i - 1) * _w_bernoulli(e, i),
        reformulation="HEQI_T5",
    ),
    "GENCEV_T4": BellIdentity(
        rhs=_pm1(lambda k: catalan(k), lambda k: -catalan(k - 1)),
        k_min=1, pm1_only=True,
        weight=lambda e, i: e / (2 * i) * binomial_general(2 * i, i),
        reformulation="HEQI_T6",
    ),
    "HEQI_T4": BellIdentity(
        rhs=_pm1(
            lambda k: factorial(k) / ((2 * k + 1) * double_factorial(4 * k)),
            lambda k: factorial(k) * (2 - 4**k) * bernoulli(2 * k) / double_factorial(4 * k),
        ),
        k_min=0, pm1_only=True,
    ),
    "HEQI_T5": BellIdentity(
        rhs=_pm1(
            lambda k: factorial(k) / double_factorial(4 * k),
            lambda k: factorial(k) * euler(2 * k) / double_factorial(4 * k),
        ),
        k_min=0, pm1_only=True,
    ),
    "HEQI_T6": BellIdentity(
        rhs=_pm1(
            lambda k: factorial(k) * catalan(k),
            lambda k: -factorial(k) * catalan(k - 1),
        ),
        k_min=1, pm1_only=True,
    ),
    "HEQI_T7": BellIdentity(rhs=_t7_rhs, k_min=1, pm1_only=False),
    "HEQI_T8": BellIdentity(rhs=_t8_rhs, k_min=0, pm1_only=False),
    "HEQI_T9": BellIdentity(rhs=_t9_rhs, k_min=0, pm1_only=False),
    "XU_T10": BellIdentity(
        rhs=lambda k, e: factorial(k) / factorial(2 * k) * gen_bernoulli_poly(2 * k, -2 * e, -e),
        k_min=0, pm1_only=False,
    ),
    "XU_T11": BellIdentity(
        rhs=lambda k, e: factorial(k) / factorial(2 * k) * gen_euler_poly(2 * k, -2 * e, -e),
        k_min=0, pm1_only=False,
    ),
    "XU_T12": BellIdentity(
        rhs=lambda k, e: 2 * e * factorial(k - 1) * binomial_general(2 * k - 1 + 2 * e, k - 1),
        k_min=1, pm1_only=False,
    ),
}


def _identity(identity_id: str) -> BellIdentity:
    try:
        return BELL_IDENTITIES[identity_id]
    except KeyError:
        raise IdentityDomainError(f"unknown Bell identity {identity_id!r}") from None


def _validate(case: IdentityCase) -> tuple[BellIdentity, Fraction]:
    ident = _identity(case.identity_id)
    if case.k < ident.k_min:
        raise IdentityDomainError(f"{case.identity_id} is stated for k >= {ident.k_min}")
    if case.identity_id == "HOFFMAN_T1":
        return ident, F(1)
    if case.epsilon is None:
        raise IdentityDomainError(f"{case.identity_id} needs an epsilon")
    e = to_rational(case.epsilon)
    if ident.pm1_only and e not in PM1:
        raise IdentityDomainError(f"{case.identity_id} is only stated for epsilon = +-1, got {e}")
    return ident, e


def closed_form_rhs(case: IdentityCase) -> Fraction:
    """Right side of a Bell-form identity at ``case.k`` and ``case.epsilon``."""
    ident, e = _validate(case)
    return ident.rhs(case.k, e)


def _bell_routes(k: int, args: ArgSequence) -> Fraction:
    a = complete_bell_partition_sum(k, args)
    b = complete_bell_sum(k, args)
    c = complete_bell_egf(args, k)[k]
    if not a == b == c:
        raise RouteMismatch(
            f"k={k}: partition sum {format_rational(a)}, recurrence {format_rational(b)}, egf {format_rational(c)}"
        )
    return a


def lhs_bell(case: IdentityCase) -> Fraction:
    """Left side of a Bell-form identity, cross-checked over three routes.

    For the raw multi-index forms (Hoffman and Gencev) the value is the
    weighted partition sum itself; it must also equal the complete Bell
    value of the reformulated arguments divided by ``k!``.
    """
    ident, e = _validate(case)
    if ident.weight is None:
        return _bell_routes(case.k, build_theorem_args(case.identity_id, e))
    raw = partition_weight_sum(case.k, ArgSequence(lambda i: ident.weight(e, i)))
    reform = _bell_routes(case.k, build_theorem_args(ident.reformulation, e)) / factorial(case.k)
    if raw != reform:
        raise RouteMismatch(
            f"k={case.k}: multi-index sum {format_rational(raw)} but "
            f"{ident.reformulation}/k! gives {format_rational(reform)}"
        )
    return raw


def _epsilons_for(ident: BellIdentity, identity_id: str, epsilons) -> list[Fraction | None]:
    if identity_id == "HOFFMAN_T1":
        return [None]
    eps = sorted({to_rational(e) for e in epsilons})
    if ident.pm1_only:
        eps = [e for e in eps if e in PM1]
    return eps


def verify_identity(identity_id: str, k_max: int = DEFAULT_K_MAX, epsilons=DEFAULT_EPSILONS) -> VerificationReport:
    """Check one Bell-form identity for every valid k <= k_max and epsilon.

    Identities stated only for epsilon = +-1 silently use the +-1 members of
    ``epsilons``; k values below the identity's stated range are skipped.
    """
    start = time.perf_counter()
    ident = _identity(identity_id)
    results = []
    for k in range(ident.k_min, k_max + 1):
        for e in _epsilons_for(ident, identity_id, epsilons):
            case = IdentityCase(identity_id, k, e)
            results.append(_check(case, lambda: lhs_bell(case), lambda: closed_form_rhs(case)))
    return _timed(identity_id, results, start)


# --- appendix --------------------------------------------------------------

def _expansion_1114(q: Fraction, order: int) -> TruncatedSeries:
    """((1 + sqrt(1+x)) / 2)^q through the series engine."""
    root = ser_pow(TruncatedSeries([1, 1] + [0] * (order - 1)), F(1, 2))
    return ser_pow((root + 1) / 2, q)


def _coeff_1114(q: Fraction, k: int) -> Fraction:
    if k == 0:
        return F(1)
    return q * binomial_general(q - k - 1, k - 1) / (k * 4**k)


def _derivative_sum_1114(q: Fraction, k: int) -> Fraction:
    s = F(0)
    for j in range(1, k + 1):
        t = (
            falling_factorial(q, j) / 2 ** (k + j)
            * double_factorial(2 * k - 2 * j - 1)
            * binomial_general(2 * k - j - 1, 2 * k - 2 * j)
        )
        s += t if (k + j) % 2 == 0 else -t
    return s


def _half_falling_closed(k: int, j: int) -> Fraction:
    v = double_factorial(2 * k - 2 * j - 1) / 2**k * binomial_general(2 * k - j - 1, 2 * k - 2 * j)
    return v if (k + j) % 2 == 0 else -v


def _gould_lhs(q: Fraction, k: int) -> Fraction:
    s = F(0)
    for j in range(k + 1):
        t = binomial_general(q, j) * binomial_general(2 * k - j, k)
        s += -t if j & 1 else t
    return s


def random_rationals(n: int, seed: int = 0, num: int = 40, den: int = 12) -> list[Fraction]:
    """Deterministic pseudo-random rationals p/q with |p| <= num, 1 <= q <= den."""
    rng = random.Random(seed)
    return [F(rng.randint(-num, num), rng.randint(1, den)) for _ in range(n)]


def verify_appendix(
    q_samples=DEFAULT_EPSILONS,
    k_max: int = DEFAULT_K_MAX,
    *,
    order: int = 16,
    gould_k_max: int = 20,
    scaling_instances: int = 100,
    seed: int = 0,
) -> VerificationReport:
    """The generalized square-root binomial expansion and its supporting lemmas.

    Covers the expansion of ``((1+sqrt(1+x))/2)^q`` (series engine vs closed
    coefficients, and the Faa di Bruno route), the alternating binomial sum
    identity and its source identities, the partial Bell closed form at
    falling factorials of 1/2, and the Bell scaling identity.
    """
    start = time.perf_counter()
    qs = sorted({to_rational(q) for q in q_samples})
    out: list[CaseResult] = []

    for q in qs:
        series = _expansion_1114(q, order)
        for k in range(order + 1):
            out.append(_check(IdentityCase("APPENDIX_1114", k, extra=q), lambda: series[k], lambda: _coeff_1114(q, k)))
        for k in range(1, order + 1):
            out.append(_check(
                IdentityCase("APPENDIX_1114_SUM", k, extra=q),
                lambda: _derivative_sum_1114(q, k),
                lambda: q * binomial_general(q - k - 1, k - 1) * factorial(k - 1) / 4**k,
            ))

            def bruno():
                f = [falling_factorial(q, j) for j in range(k + 1)]  # u(0) = 1
                h = [falling_factorial(F(1, 2), i) / 2 for i in range(1, k + 1)]
                return faa_di_bruno(f, h, k) / factorial(k)

            out.append(_check(IdentityCase("APPENDIX_1114_BRUNO", k, extra=q), bruno, lambda: _coeff_1114(q, k)))

        for k in range(gould_k_max + 1):
            out.append(_check(
                IdentityCase("APPENDIX_GOULD", k, extra=q),
                lambda: _gould_lhs(q, k),
                lambda: F(-1) ** k * binomial_general(q - k - 1, k),
            ))
            out.append(_check(
                IdentityCase("APPENDIX_SPRUGNOLI", k, extra=q),
                lambda: _gould_lhs(q, k),
                lambda: binomial_general(2 * k - q, k),
            ))
            out.append(_check(
                IdentityCase("APPENDIX_REFLECTION", k, extra=q),
                lambda: binomial_general(q, k),
                lambda: F(-1) ** k * binomial_general(-q + k - 1, k),
            ))

    halves = ArgSequence(lambda i: falling_factorial(F(1, 2), i), name="<1/2>_i")
    for k in range(k_max + 1):
        for j in range(k + 1):
            out.append(_check(
                IdentityCase("APPENDIX_HALF_FALLING", k, extra=F(j)),
                lambda: partial_bell_direct(k, j, halves),
                lambda: _half_falling_closed(k, j),
            ))

    rng = random.Random(seed)
    for _ in range(scaling_instances):
        k = rng.randint(0, min(k_max, 9))
        j = rng.randint(0, k)
        a, b = F(rng.randint(-9, 9), rng.randint(1, 7)), F(rng.randint(-9, 9), rng.randint(1, 7))
        z = [F(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(k + 1)]
        scaled = [a * b ** (i + 1) * z[i] for i in range(k + 1)]
        out.append(_check(
            IdentityCase("APPENDIX_SCALING", k, extra=F(j)),
            lambda: partial_bell_direct(k, j, scaled),
            lambda: a**j * b**k * partial_bell_direct(k, j, z),
        ))
    return _timed("appendix", out, start)


# --- central-factorial formulas --------------------------------------------

def _filomat_even_rhs(m: int, k: int) -> Fraction:
    s = F(0)
    for l in range(k + 1):
        t = binomial_general(k, l) * central_factorial_T(2 * m + l, l) / binomial_general(2 * m + l, l)
        s += -t if l & 1 else t
    return F(-1) ** k * F(4**m) / factorial(k) * s


def _binom_power_rhs(j: int, k: int) -> Fraction:
    s = F(0)
    for l in range(2 * j + 1):
        t = binomial_general(2 * j, l) * int_pow(j - l, k)
        s += -t if l & 1 else t
    return F(-1) ** j / 2**j * s


def _bridge_b(k: int, e: Fraction) -> Fraction:
    return factorial(2 * k) / factorial(k) * _t7_rhs(k, -e / 2)


def _bridge_e(k: int, e: Fraction) -> Fraction:
    total = sum(
        (rising_factorial(e, l) / factorial(l) * _binom_power_inner(l, 2 * k) for l in range(2 * k + 1)),
        F(0),
    )
    return total / 4**k


def verify_filomat(m_max: int = DEFAULT_M_MAX, epsilons=DEFAULT_EPSILONS, k_max: int | None = None) -> VerificationReport:
    """Partial Bell values at (0, 1/3, 0, 1/5, ...), the two-sided
    binomial-power identity, and the three central-factorial bridging
    formulas for the generalized Bernoulli/Euler values."""
    start = time.perf_counter()
    k_max = 2 * m_max if k_max is None else k_max
    args = build_theorem_args("FILOMAT_EVEN")
    out: list[CaseResult] = []
    for m in range(m_max + 1):
        for k in range(m + 1):
            out.append(_check(
                IdentityCase("FILOMAT_EVEN", k, extra=F(m)),
                lambda: partial_bell_direct(2 * m, k, args),
                lambda: _filomat_even_rhs(m, k),
            ))
            out.append(_check(
                IdentityCase("FILOMAT_ODD", k, extra=F(m)),
                lambda: partial_bell_direct(2 * m + 1, k, args),
                lambda: F(0),
            ))
    for j in range(m_max + 1):
        for k in range(1, k_max + 1):
            out.append(_check(
                IdentityCase("FILOMAT_BINOM_SUM", k, extra=F(j)),
                lambda: _binom_power_inner(j, k),
                lambda: _binom_power_rhs(j, k),
            ))
    eps = sorted({to_rational(e) for e in epsilons})
    for k in range(1, m_max + 1):
        for e in eps:
            out.append(_check(
                IdentityCase("BRIDGE_B", k, e),
                lambda: gen_bernoulli_poly(2 * k, e, e / 2),
                lambda: _bridge_b(k, e),
            ))
            out.append(_check(
                IdentityCase("BRIDGE_E", k, e),
                lambda: gen_euler_poly(2 * k, e, e / 2),
                lambda: _bridge_e(k, e),
            ))
            out.append(_check(
                IdentityCase("BRIDGE_BINOM", k, e),
                lambda: e * factorial(k - 1) * binomial_general(2 * k - 1 + e, k - 1),
                lambda: _t9_rhs(k, e / 2),
            ))
    return _timed("filomat", out, start)


# --- classical expansions --------------------------------------------------

def _abs(x: Fraction) -> Fraction:
    return -x if x < 0 else x


def _even_only(fn: Callable[[int], Fraction]) -> Callable[[int], Fraction]:
    """Coefficient rule of an even series from its rule at x^{2k}."""
    return lambda n: fn(n // 2) if n % 2 == 0 else F(0)


def _classical_table(order: int, binomial_qs) -> list[tuple[str, Fraction | None, TruncatedSeries, Callable[[int], Fraction]]]:
    sinc, sinhc, cos = sinc_series(order), sinhc_series(order), cos_series(order)
    one = TruncatedSeries.constant(1, order)
    x2 = TruncatedSeries.monomial(2, order)
    B = lambda k: bernoulli(2 * k)  # noqa: E731
    rows = [
        ("CLASSICAL_LN_SINC", None, ser_log(sinc),
         _even_only(lambda k: F(0) if k == 0 else -_abs(B(k)) / (2 * k) * 4**k / factorial(2 * k))),
        ("CLASSICAL_LN_SINHC", None, ser_log(sinhc),
         _even_only(lambda k: F(0) if k == 0 else F(-1) ** (k + 1) * _abs(B(k)) / (2 * k) * 4**k / factorial(2 * k))),
        ("CLASSICAL_X_CSC", None, ser_div(one, sinc),
         _even_only(lambda k: (4**k - 2) * _abs(B(k)) / factorial(2 * k) if k else F(1))),
        ("CLASSICAL_X_CSCH", None, ser_div(one, sinhc),
         _even_only(lambda k: -(4**k - 2) * B(k) / factorial(2 * k) if k else F(1))),
        ("CLASSICAL_LN_COS", None, ser_log(cos),
         _even_only(lambda k: F(0) if k == 0 else -F(2 ** (2 * k - 1) * (4**k - 1)) * _abs(B(k)) / k / factorial(2 * k))),
        ("CLASSICAL_SEC", None, ser_div(one, cos),
         _even_only(lambda k: _abs(euler(2 * k)) / factorial(2 * k))),
        ("CLASSICAL_LN_1P_SQRT", None, ser_log((ser_pow(one + x2, F(1, 2)) + 1) / 2),
         _even_only(lambda k: F(0) if k == 0 else -F(-1) ** k * factorial(2 * k - 1) / (4**k * factorial(k) ** 2))),
        ("CLASSICAL_CATALAN_GF", None,
         ser_div(2 * one, ser_pow(TruncatedSeries([1, -4] + [0] * (order - 1)), F(1, 2)) + 1),
         catalan),
    ]
    for q in sorted({to_rational(q) for q in binomial_qs}):
        rows.append(("CLASSICAL_BINOMIAL", q, ser_pow(TruncatedSeries([1, 1] + [0] * (order - 1)), q),
                     lambda n, q=q: binomial_general(q, n)))
    return rows


def verify_classical(order: int = DEFAULT_ORDER, binomial_qs=DEFAULT_EPSILONS) -> VerificationReport:
    """Series-engine expansions of the classical functions against their
    closed coefficient formulas, coefficientwise through ``order``."""
    if order < 4 or order % 2:
        raise ValueError("classical expansions need an even order >= 4")
    start = time.perf_counter()
    out: list[CaseResult] = []
    for name, q, series, coeff in _classical_table(order, binomial_qs):
        for n in range(order + 1):
            out.append(_check(IdentityCase(name, n, extra=q), lambda: series[n], lambda: coeff(n)))
    return _timed("classical", out, start)


# --- generating functions behind the Bell identities -----------------------

def _in_z(even_series: TruncatedSeries, c: Fraction) -> TruncatedSeries:
    """Rewrite f(x), f even, at x^2 = c*z as a series in z."""
    return ser_scale_reindex(ser_scale_reindex(even_series, 1, "even_part_as_z"), c, "substitute_cz")


def _exp_of_args(rule: Callable[[int], Fraction], order: int) -> TruncatedSeries:
    return ser_exp(TruncatedSeries([0] + [rule(i) / factorial(i) for i in range(1, order + 1)]))


def verify_generating(order: int = DEFAULT_ORDER // 2, epsilons=DEFAULT_EPSILONS) -> VerificationReport:
    """The exponential generating functions of the theorem argument lists
    against the elementary functions they sum to, as series in z.

    The square roots are removed by reindexing even series: sinh(sqrt(z)/2)
    becomes ``x^2 = z/4`` and sin(sqrt(-z)/2), cos(sqrt(-z)/2) become
    ``x^2 = -z/4``.
    """
    start = time.perf_counter()
    n = order
    sinhc_z = _in_z(sinhc_series(2 * n + 1), F(1, 4))
    sinc_z = _in_z(sinc_series(2 * n + 1), F(-1, 4))
    cos_z = _in_z(cos_series(2 * n + 1), F(-1, 4))
    one = TruncatedSeries.constant(1, n)
    catalan_gf = ser_div(2 * one, ser_pow(TruncatedSeries([1, -4] + [0] * (n - 1)), F(1, 2)) + 1)

    rows = [
        ("GF_SINHC", F(1), "HEQI_T4", sinhc_z),
        ("GF_SINHC", F(-1), "HEQI_T4", ser_div(one, sinhc_z)),
        ("GF_COS", F(1), "HEQI_T5", cos_z),
        ("GF_COS", F(-1), "HEQI_T5", ser_div(one, cos_z)),
        ("GF_CATALAN", F(1), "HEQI_T6", catalan_gf),
        ("GF_CATALAN", F(-1), "HEQI_T6", ser_div(one, catalan_gf)),
    ]
    for e in sorted({to_rational(e) for e in epsilons}):
        rows.append(("GF_SINC_POW", e, "XU_T10", ser_pow(sinc_z, 2 * e)))
        rows.append(("GF_COS_POW", e, "XU_T11", ser_pow(cos_z, 2 * e)))
        rows.append(("GF_CATALAN_POW", e, "XU_T12", ser_pow(catalan_gf, 2 * e)))

    out: list[CaseResult] = []
    for name, e, args_id, target in rows:
        args = build_theorem_args(args_id, e)
        lhs = _exp_of_args(args, n)
        for k in range(n + 1):
            out.append(_check(IdentityCase(name, k, e), lambda: lhs[k], lambda: target[k]))
    return _timed("generating", out, start)


# --- remarks: generalized Bernoulli/Euler corollaries ----------------------

def _sinc_t_form(k: int, r: Fraction) -> Fraction:
    if k == 0:
        return F(1)
    return F(-1) ** k * factorial(2 * k) / factorial(k) * _t7_rhs(k, r / 2)


def verify_remarks(k_max: int = 8, epsilons=DEFAULT_EPSILONS) -> VerificationReport:
    """Odd-index vanishing, the (sin z/z)^r and (cos z)^r expansions, and
    the four closed special values at sigma = +-1, x = +-1/2."""
    start = time.perf_counter()
    out: list[CaseResult] = []
    order = 2 * k_max
    sinc, cos = sinc_series(order), cos_series(order)
    for e in sorted({to_rational(e) for e in epsilons}):
        sinc_r, cos_r = ser_pow(sinc, e), ser_pow(cos, e)
        for k in range(k_max + 1):
            scale = factorial(2 * k) / 4**k
            out.append(_check(IdentityCase("REMARK_ODD_B", k, e),
                              lambda: gen_bernoulli_poly(2 * k + 1, 2 * e, e), lambda: F(0)))
            out.append(_check(IdentityCase("REMARK_ODD_E", k, e),
                              lambda: gen_euler_poly(2 * k + 1, 2 * e, e), lambda: F(0)))
            out.append(_check(IdentityCase("REMARK_SINC_POW", k, e),
                              lambda: sinc_r[2 * k] * scale,
                              lambda: F(-1) ** k * gen_bernoulli_poly(2 * k, -e, -e / 2)))
            out.append(_check(IdentityCase("REMARK_SINC_POW_T", k, e),
                              lambda: sinc_r[2 * k] * scale, lambda: _sinc_t_form(k, e)))
            out.append(_check(IdentityCase("REMARK_COS_POW", k, e),
                              lambda: cos_r[2 * k] * scale,
                              lambda: F(-1) ** k * gen_euler_poly(2 * k, -e, -e / 2)))
            out.append(_check(IdentityCase("REMARK_COS_POW_SUM", k, e),
                              lambda: cos_r[2 * k] * factorial(2 * k),
                              lambda: F(-1) ** k * _bridge_e(k, -e) * 4**k))
    half = F(1, 2)
    for k in range(k_max + 1):
        out.append(_check(IdentityCase("REMARK_B_NEG1", k),
                          lambda: gen_bernoulli_poly(2 * k, -1, -half), lambda: F(1, 4**k * (2 * k + 1))))
        out.append(_check(IdentityCase("REMARK_B_POS1", k),
                          lambda: gen_bernoulli_poly(2 * k, 1, half),
                          lambda: F(2 - 4**k, 4**k) * bernoulli(2 * k)))
        out.append(_check(IdentityCase("REMARK_E_NEG1", k),
                          lambda: gen_euler_poly(2 * k, -1, -half), lambda: F(1, 4**k)))
        out.append(_check(IdentityCase("REMARK_E_POS1", k),
                          lambda: gen_euler_poly(2 * k, 1, half), lambda: euler(2 * k) / 4**k))
    return _timed("remarks", out, start)


# --- agreement between theorem families ------------------------------------

_CROSS = [
    # (id, first, second, halve epsilon for the second, pm1 only)
    ("CROSS_T4_T7", "HEQI_T4", "HEQI_T7", True),
    ("CROSS_T5_T8", "HEQI_T5", "HEQI_T8", True),
    ("CROSS_T6_T9", "HEQI_T6", "HEQI_T9", True),
    ("CROSS_T7_T10", "HEQI_T7", "XU_T10", False),
    ("CROSS_T8_T11", "HEQI_T8", "XU_T11", False),
    ("CROSS_T9_T12", "HEQI_T9", "XU_T12", False),
]


def verify_consistency(k_max: int = 8, epsilons=DEFAULT_EPSILONS) -> VerificationReport:
    """Right sides of overlapping identities agree, and argument lists that
    should coincide (epsilon vs epsilon/2) do coincide."""
    start = time.perf_counter()
    out: list[CaseResult] = []
    for cid, first, second, halve in _CROSS:
        a, b = BELL_IDENTITIES[first], BELL_IDENTITIES[second]
        for e in _epsilons_for(a, first, epsilons):
            e2 = e / 2 if halve else e
            args1, args2 = build_theorem_args(first, e), build_theorem_args(second, e2)
            for k in range(max(a.k_min, b.k_min), k_max + 1):
                c1, c2 = IdentityCase(first, k, e), IdentityCase(second, k, e2)
                case = IdentityCase(cid, k, e)
                if args1.take(k) != args2.take(k):
                    out.append(CaseResult(case, None, None, False, "argument lists differ"))
                    continue
                out.append(_check(case, lambda: closed_form_rhs(c1), lambda: closed_form_rhs(c2)))
    return _timed("consistency", out, start)


# --- suite registry --------------------------------------------------------

@dataclass
class RunConfig:
    k_max: int = DEFAULT_K_MAX
    order: int = DEFAULT_ORDER
    epsilons: tuple = DEFAULT_EPSILONS
    appendix_random_q: int = 50
    seed: int = 0


def _bell_suite(identity_ids):
    def run(cfg: RunConfig) -> VerificationReport:
        return VerificationReport.merge(
            "+".join(identity_ids), (verify_identity(i, cfg.k_max, cfg.epsilons) for i in identity_ids)
        )
    return run


SUITES: dict[str, Callable[[RunConfig], VerificationReport]] = {
    "hoffman": _bell_suite(["HOFFMAN_T1"]),
    "gencev2": _bell_suite(["GENCEV_T2"]),
    "gencev3": _bell_suite(["GENCEV_T3"]),
    "gencev4": _bell_suite(["GENCEV_T4"]),
    "heqi4": _bell_suite(["HEQI_T4"]),
    "heqi5": _bell_suite(["HEQI_T5"]),
    "heqi6": _bell_suite(["HEQI_T6"]),
    "heqi7": _bell_suite(["HEQI_T7"]),
    "heqi8": _bell_suite(["HEQI_T8"]),
    "heqi9": _bell_suite(["HEQI_T9"]),
    "xu10": _bell_suite(["XU_T10"]),
    "xu11": _bell_suite(["XU_T11"]),
    "xu12": _bell_suite(["XU_T12"]),
    "filomat": lambda c: verify_filomat(c.k_max // 2, c.epsilons, k_max=c.k_max),
    "appendix": lambda c: verify_appendix(
        tuple(c.epsilons) + tuple(random_rationals(c.appendix_random_q, c.seed)),
        c.k_max, order=c.order, seed=c.seed,
    ),
    "classical": lambda c: verify_classical(c.order, c.epsilons),
    "generating": lambda c: verify_generating(c.order // 2, c.epsilons),
    "remarks": lambda c: verify_remarks(min(c.k_max, c.order // 2), c.epsilons),
    "consistency": lambda c: verify_consistency(c.k_max, c.epsilons),
}


def run_suites(names: Iterable[str] = ("all",), cfg: RunConfig | None = None) -> VerificationReport:
    """Run the named suites and merge them into one deterministically ordered report."""
    cfg = cfg or RunConfig()
    names = list(names)
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    start = time.perf_counter()
    reports = [SUITES[n](cfg) for n in dict.fromkeys(names)]
    label = "all" if len(reports) == len(SUITES) else ",".join(dict.fromkeys(names))
    merged = VerificationReport.merge(label, reports).sorted()
    merged.wall_time = time.perf_counter() - start
    return merged
