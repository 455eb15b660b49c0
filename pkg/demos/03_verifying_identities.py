"""
Running identity checks from Python
===================================

Every check compares two exact rationals; nothing is approximate.
"""
from fractions import Fraction

from bellpoly.identities import IdentityCase, RunConfig, closed_form_rhs, lhs_bell, run_suites, verify_identity

case = IdentityCase("HOFFMAN_T1", 2)
print(lhs_bell(case), closed_form_rhs(case))

# general epsilon: the Catalan-type identity at eps = 5/3
rep = verify_identity("XU_T12", k_max=6, epsilons=[Fraction(5, 3)])
for r in rep.cases:
    print(r.case.k, r.lhs, r.passed)
print(rep.summary())

# several suites at once, merged into one ordered report
rep = run_suites(["filomat", "classical"], RunConfig(k_max=8, order=16))
print(rep.summary())
print(rep.to_json(timing=False)[:300])
