"""
Bell polynomials at rational arguments
======================================

Partial and complete Bell polynomials evaluated three ways, plus the
chain rule they encode.
"""
from fractions import Fraction

from bellpoly import (
    complete_bell_egf,
    complete_bell_sum,
    enumerate_partitions,
    faa_di_bruno,
    partial_bell_direct,
    partial_bell_recurrence,
)

# multi-indices (l_1, l_2, l_3) with l_1 + 2 l_2 + 3 l_3 = 3
for parts in enumerate_partitions(3):
    print(parts)

# with all arguments equal to one, B_{k,j} counts set partitions (Stirling numbers)
print([int(partial_bell_direct(6, j, [1] * 6)) for j in range(7)])

# the recurrence agrees with the multinomial sum
args = [Fraction(1, 2), Fraction(-3, 4), Fraction(5), Fraction(2, 7)]
print(partial_bell_direct(5, 2, args), partial_bell_recurrence(5, 2, args))

# complete Bell values: k! C_k shows up at arguments 1, 3, 20, ...
print(complete_bell_sum(3, [1, 3, 20]))
print([str(v) for v in complete_bell_egf([1, 3, 20, 210], 4)])

# fifth derivative of exp(sin z) at 0: f = exp, h = sin
f_derivs = [1] * 6
h_derivs = [1, 0, -1, 0, 1]
print(faa_di_bruno(f_derivs, h_derivs, 5))
