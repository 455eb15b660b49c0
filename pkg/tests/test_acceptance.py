"""The ten acceptance criteria, each at exact equality and its runtime budget.

Every test records one PASS/FAIL line that is printed in the terminal
summary under "acceptance criteria".
"""
import json
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction as F

from bellpoly.bell import (
    complete_bell_egf,
    complete_bell_partition_sum,
    complete_bell_sum,
    faa_di_bruno,
    partial_bell_direct,
    partial_bell_recurrence,
)
from bellpoly.exact_arith import binomial_general, factorial
from bellpoly.identities import (
    DEFAULT_EPSILONS,
    IdentityCase,
    closed_form_rhs,
    lhs_bell,
    random_rationals,
    verify_appendix,
    verify_classical,
    verify_consistency,
    verify_filomat,
    verify_identity,
    verify_remarks,
)
from bellpoly.sequences import catalan, central_factorial_T, euler, bernoulli, gen_bernoulli_poly, gen_euler_poly
from bellpoly.series import TruncatedSeries, ser_compose
from conftest import rand_rational


def _failures(*reports):
    return [r.to_dict() for rep in reports for r in rep.failures()]


def test_c01_hoffman(criterion):
    t0 = time.perf_counter()
    values = {k: lhs_bell(IdentityCase("HOFFMAN_T1", k)) for k in range(1, 13)}
    ok = all(v == F(1, 4**k * factorial(2 * k + 1)) for k, v in values.items())
    ok = ok and values[1] == F(1, 24) and values[2] == F(1, 1920)
    ok = ok and verify_identity("HOFFMAN_T1", 12).ok
    dt = time.perf_counter() - t0
    assert criterion("C1 Hoffman partition sum, k <= 12", ok and dt < 5, f"{dt:.2f}s"), values
    assert dt < 5


def test_c02_heqi_pm1(criterion):
    t0 = time.perf_counter()
    reps = [verify_identity(i, 12, (F(1), F(-1))) for i in ("HEQI_T4", "HEQI_T5", "HEQI_T6")]
    n_cases = sum(len(r.cases) for r in reps)
    spot = complete_bell_sum(3, [1, 3, 20]) == 30 and complete_bell_sum(2, [-1, -3]) == -2
    dt = time.perf_counter() - t0
    bad = _failures(*reps)
    ok = not bad and spot and n_cases == 2 * (13 + 13 + 12)
    assert criterion("C2 eps = +-1 Bell forms, k <= 12", ok and dt < 10, f"{n_cases} cases, {dt:.2f}s"), bad
    assert dt < 10


def test_c03_general_eps(criterion):
    t0 = time.perf_counter()
    reps = [verify_identity(i, 10, DEFAULT_EPSILONS) for i in ("HEQI_T7", "HEQI_T8", "HEQI_T9")]
    t_ok = all(central_factorial_T(q, q) == 1 for q in range(21)) and all(
        central_factorial_T(p, 0) == 0 for p in range(1, 21))
    dt = time.perf_counter() - t0
    bad = _failures(*reps)
    ok = not bad and t_ok and all(len(r.cases) > 0 for r in reps)
    assert criterion("C3 general-eps Bell forms, k <= 10", ok and dt < 30, f"{dt:.2f}s"), bad
    assert dt < 30


def test_c04_xu_and_special_values(criterion):
    t0 = time.perf_counter()
    reps = [verify_identity(i, 10, DEFAULT_EPSILONS) for i in ("XU_T10", "XU_T11", "XU_T12")]
    half = F(1, 2)
    special = all(
        gen_bernoulli_poly(2 * k, -1, -half) == F(1, 4**k * (2 * k + 1))
        and gen_bernoulli_poly(2 * k, 1, half) == F(2 - 4**k, 4**k) * bernoulli(2 * k)
        and gen_euler_poly(2 * k, -1, -half) == F(1, 4**k)
        and gen_euler_poly(2 * k, 1, half) == euler(2 * k) / 4**k
        for k in range(9)
    )
    dt = time.perf_counter() - t0
    bad = _failures(*reps)
    assert criterion("C4 Xu forms k <= 10 and special values k <= 8", not bad and special and dt < 30,
                     f"{dt:.2f}s"), bad
    assert dt < 30


def test_c05_cross_consistency(criterion):
    rep = verify_consistency(8, DEFAULT_EPSILONS)
    counts = Counter(r.case.identity_id for r in rep.cases)
    # independent restatement: HEQI_T4..T6 at eps = +-1 match T7..T9 at eps/2
    direct = all(
        closed_form_rhs(IdentityCase(a, k, e)) == closed_form_rhs(IdentityCase(b, k, e / 2))
        for a, b in (("HEQI_T4", "HEQI_T7"), ("HEQI_T5", "HEQI_T8"), ("HEQI_T6", "HEQI_T9"))
        for e in (F(1), F(-1)) for k in range(1, 9)
    )
    ok = rep.ok and direct and len(counts) == 6 and counts["CROSS_T9_T12"] == 8 * len(DEFAULT_EPSILONS)
    assert criterion("C5 cross-identity consistency, k <= 8", ok), _failures(rep)


def test_c06_appendix(criterion):
    qs = random_rationals(50, seed=11)
    # the alternating binomial sum, written out here without the library helper
    gould = all(
        sum(F(-1) ** j * binomial_general(q, j) * binomial_general(2 * k - j, k) for j in range(k + 1))
        == F(-1) ** k * binomial_general(q - k - 1, k)
        for q in qs for k in range(21)
    )
    rep = verify_appendix(tuple(DEFAULT_EPSILONS) + tuple(qs), 12, order=16, gould_k_max=20,
                          scaling_instances=100, seed=11)
    counts = Counter(r.case.identity_id for r in rep.cases)
    n_q = len(set(DEFAULT_EPSILONS) | set(qs))
    shape = (counts["APPENDIX_1114"] == 17 * n_q and counts["APPENDIX_GOULD"] == 21 * n_q
             and counts["APPENDIX_HALF_FALLING"] == sum(k + 1 for k in range(13))
             and counts["APPENDIX_SCALING"] == 100)
    assert criterion("C6 appendix lemmas", gould and rep.ok and shape), _failures(rep)


def test_c07_filomat(criterion):
    rep = verify_filomat(6, DEFAULT_EPSILONS, k_max=12)
    counts = Counter(r.case.identity_id for r in rep.cases)
    shape = counts["FILOMAT_EVEN"] == 28 and counts["FILOMAT_BINOM_SUM"] == 7 * 12
    # B_{2,1} and B_{4,2} at (0, 1/3, 0, 1/5) by hand
    hand = [partial_bell_direct(2, 1, [0, F(1, 3)]), partial_bell_direct(4, 2, [0, F(1, 3), 0])]
    ok = rep.ok and shape and hand == [F(1, 3), F(1, 3)]
    assert criterion("C7 central-factorial partial Bell formulas", ok), _failures(rep)


def test_c08_classical(criterion):
    rep = verify_classical(24, DEFAULT_EPSILONS)
    expansions = {r.case.identity_id for r in rep.cases} - {"CLASSICAL_BINOMIAL", "CLASSICAL_CATALAN_GF"}
    cat = [r.lhs for r in rep.cases if r.case.identity_id == "CLASSICAL_CATALAN_GF"]
    ok = rep.ok and len(expansions) == 7 and cat[:4] == [1, 1, 2, 5]
    ok = ok and cat[:13] == [catalan(k) for k in range(13)]
    assert criterion("C8 classical expansions to order 24", ok), _failures(rep)


def test_c09_oracle_equivalences(criterion, rng):
    ok = True
    for _ in range(100):
        k = rng.randint(0, 9)
        args = [rand_rational(rng) for _ in range(max(k, 1))]
        egf = complete_bell_egf(args, k)[k]
        ok &= complete_bell_sum(k, args) == egf == complete_bell_partition_sum(k, args)
        ok &= all(partial_bell_direct(k, j, args) == partial_bell_recurrence(k, j, args) for j in range(k + 1))
    for _ in range(50):
        n = 7
        f = [rand_rational(rng) for _ in range(rng.randint(1, n))]
        h = [0] + [rand_rational(rng) for _ in range(rng.randint(1, n))]
        f += [0] * (n + 1 - len(f))
        h += [0] * (n + 1 - len(h))
        comp = ser_compose(TruncatedSeries(f), TruncatedSeries(h))
        fd = [factorial(j) * f[j] for j in range(n + 1)]
        hd = [factorial(i) * h[i] for i in range(1, n + 1)]
        ok &= all(faa_di_bruno(fd, hd, k) == factorial(k) * comp[k] for k in range(n + 1))
    assert criterion("C9 route equivalences on random inputs", ok)


def test_c10_determinism(criterion):
    cmd = [sys.executable, "-m", "bellpoly", "verify", "--suite", "all", "--format", "json"]
    outs, times = [], []
    for _ in range(2):
        t0 = time.perf_counter()
        proc = subprocess.run(cmd, capture_output=True, check=False)
        times.append(time.perf_counter() - t0)
        outs.append(proc.stdout)
        assert proc.returncode == 0, proc.stderr.decode()
    report = json.loads(outs[0])
    ok = outs[0] == outs[1] and report["failed"] == 0 and max(times) < 120
    note = f"{report['passed']} cases, runs {times[0]:.1f}s / {times[1]:.1f}s"
    assert criterion("C10 full run byte-identical, < 2 min", ok, note)
