import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bellpoly import identities as ids
from bellpoly.bell import complete_bell_sum
from bellpoly.exact_arith import binomial_general, double_factorial, factorial
from bellpoly.identities import (
    BELL_IDENTITIES,
    CaseResult,
    IdentityCase,
    IdentityDomainError,
    RunConfig,
    VerificationReport,
    build_theorem_args,
    closed_form_rhs,
    lhs_bell,
    run_suites,
    verify_classical,
    verify_identity,
)
from bellpoly.sequences import bernoulli, catalan, gen_bernoulli_poly
from bellpoly.series import TruncatedSeries, ser_div, sinhc_series


def test_theorem_args():
    assert build_theorem_args("HEQI_T6", F(1)).take(3) == [1, 3, 20]
    assert build_theorem_args("XU_T12", F(1)).take(3) == [2, 6, 40]
    assert build_theorem_args("HEQI_T9", F(1, 2)).take(3) == [1, 3, 20]
    assert build_theorem_args("FILOMAT_EVEN").take(4) == [0, F(1, 3), 0, F(1, 5)]
    assert build_theorem_args("HEQI_T4", F(1)).take(2) == [F(1, 24), F(-1, 1440)]
    assert build_theorem_args("HOFFMAN_T1").take(3) == build_theorem_args("HEQI_T4", 1).take(3)
    with pytest.raises(IdentityDomainError):
        build_theorem_args("NOPE", F(1))


def test_closed_form_examples():
    assert closed_form_rhs(IdentityCase("HOFFMAN_T1", 1)) == F(1, 24)
    assert closed_form_rhs(IdentityCase("HOFFMAN_T1", 2)) == F(1, 1920)
    assert closed_form_rhs(IdentityCase("HEQI_T6", 3, F(1))) == 30
    assert closed_form_rhs(IdentityCase("HEQI_T6", 2, F(-1))) == -2
    assert closed_form_rhs(IdentityCase("GENCEV_T4", 3, F(1))) == catalan(3)
    assert closed_form_rhs(IdentityCase("GENCEV_T3", 2, F(1))) == F(1, 384)
    assert closed_form_rhs(IdentityCase("XU_T12", 2, F(1))) == 10


def test_lhs_examples():
    assert lhs_bell(IdentityCase("HEQI_T6", 3, F(1))) == 30
    assert lhs_bell(IdentityCase("HEQI_T6", 2, F(-1))) == -2
    assert lhs_bell(IdentityCase("HOFFMAN_T1", 2)) == F(1, 1920)
    # complete Bell value: k! times the Hoffman multi-index sum
    assert lhs_bell(IdentityCase("HEQI_T4", 2, F(1))) == F(1, 960)
    assert lhs_bell(IdentityCase("HEQI_T5", 1, F(-1))) == F(-1, 8)
    assert lhs_bell(IdentityCase("HEQI_T7", 1, F(1, 2))) == F(1, 24)


def test_pm1_only_rejected():
    with pytest.raises(IdentityDomainError):
        closed_form_rhs(IdentityCase("HEQI_T4", 2, F(1, 2)))
    with pytest.raises(IdentityDomainError):
        lhs_bell(IdentityCase("GENCEV_T3", 2, F(2)))
    with pytest.raises(IdentityDomainError):
        closed_form_rhs(IdentityCase("HEQI_T6", 0, F(1)))
    with pytest.raises(IdentityDomainError):
        closed_form_rhs(IdentityCase("XU_T10", 1))


def test_pm1_suite_ignores_other_epsilons():
    rep = verify_identity("HEQI_T5", 4, (F(1, 2), F(-1), F(3)))
    assert {r.case.epsilon for r in rep.cases} == {F(-1)}
    assert rep.ok and len(rep.cases) == 5


@pytest.mark.parametrize("ident", sorted(BELL_IDENTITIES))
def test_every_identity_small_k(ident):
    rep = verify_identity(ident, 5)
    assert rep.ok, [r.to_dict() for r in rep.failures()]


@settings(max_examples=25, deadline=None)
@given(st.fractions(-6, 6, max_denominator=7), st.integers(1, 6))
def test_t9_equals_t12_random_eps(e, k):
    assert closed_form_rhs(IdentityCase("HEQI_T9", k, e)) == closed_form_rhs(IdentityCase("XU_T12", k, e))
    assert lhs_bell(IdentityCase("XU_T12", k, e)) == closed_form_rhs(IdentityCase("XU_T12", k, e))


@settings(max_examples=15, deadline=None)
@given(st.fractions(-4, 4, max_denominator=5), st.integers(0, 5))
def test_t10_by_independent_sum(e, k):
    # recurrence route alone against the generalized Bernoulli value
    args = build_theorem_args("XU_T10", e).take(max(k, 1))
    want = factorial(k) / factorial(2 * k) * gen_bernoulli_poly(2 * k, -2 * e, -e)
    assert complete_bell_sum(k, args) == want


def test_printed_csch_coefficient_fails():
    order = 8
    x_csch = ser_div(TruncatedSeries.constant(1, order), sinhc_series(order))
    corrected = [-(4**k - 2) * bernoulli(2 * k) / factorial(2 * k) if k else 1 for k in range(5)]
    printed = [-(4**k - 1) * bernoulli(2 * k) / factorial(2 * k) if k else 1 for k in range(5)]
    assert [x_csch[2 * k] for k in range(5)] == corrected
    assert x_csch[2] == F(-1, 6)
    assert printed[1] == F(-1, 4) != x_csch[2]


def test_classical_suite_passes():
    rep = verify_classical(12, (F(1, 2), F(-3)))
    assert rep.ok
    ids_seen = {r.case.identity_id for r in rep.cases}
    assert "CLASSICAL_X_CSCH" in ids_seen and "CLASSICAL_BINOMIAL" in ids_seen


def test_report_json_round_trip():
    rep = run_suites(["hoffman", "xu12"], RunConfig(k_max=3, epsilons=(F(1), F(-1, 2))))
    d = json.loads(rep.to_json(timing=False))
    assert d["suite"] == "hoffman,xu12"
    assert d["failed"] == 0 and d["passed"] == len(d["cases"]) == 3 + 6
    assert "wall_ms" not in d
    assert "wall_ms" in json.loads(rep.to_json(timing=True))
    first = d["cases"][0]
    assert first == {"id": "HOFFMAN_T1", "k": 1, "epsilon": None, "lhs": "1/24", "rhs": "1/24", "pass": True}
    keys = [(c["id"], c["k"]) for c in d["cases"]]
    assert keys == sorted(keys)


def test_run_suites_rejects_unknown():
    with pytest.raises(KeyError):
        run_suites(["hoffman", "nonsense"])


def test_route_mismatch_is_reported(monkeypatch):
    real = ids.complete_bell_egf

    def skewed(args, K):
        vals = real(args, K)
        vals[-1] += 1
        return vals

    monkeypatch.setattr(ids, "complete_bell_egf", skewed)
    rep = verify_identity("HEQI_T6", 2, (F(1),))
    assert not rep.ok
    bad = rep.failures()[0]
    assert bad.lhs is None and "routes disagree" in bad.detail
    assert "detail" in bad.to_dict()


def test_report_counts():
    case = IdentityCase("X", 1)
    rep = VerificationReport("x", [CaseResult(case, F(1), F(1), True), CaseResult(case, F(1), F(2), False)])
    assert (rep.passed, rep.failed, rep.ok) == (1, 1, False)
    assert "FAILED" in rep.summary()


def test_gencev_t4_by_hand():
    # partitions of 2: (2,0) gives 1^2/2!, (0,1) gives C(4,2)/4 = 3/2
    assert lhs_bell(IdentityCase("GENCEV_T4", 2, F(1))) == 2
    assert binomial_general(4, 2) / 4 + F(1, 2) == 2


def test_hoffman_formula_small():
    for k in range(1, 6):
        assert closed_form_rhs(IdentityCase("HOFFMAN_T1", k)) == F(1, 4**k * factorial(2 * k + 1))
        assert closed_form_rhs(IdentityCase("HEQI_T4", k, F(1))) == factorial(k) / ((2 * k + 1) * double_factorial(4 * k))
