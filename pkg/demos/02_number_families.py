"""
Bernoulli, Euler, Catalan and their generalizations
===================================================

"""
from fractions import Fraction

from bellpoly import bernoulli, catalan, central_factorial_T, euler, gen_bernoulli_poly, gen_euler_poly
from bellpoly.series import TruncatedSeries, ser_div, ser_pow, sinc_series

print("B:", [str(bernoulli(n)) for n in range(13)])
print("E:", [str(euler(n)) for n in range(13)])
print("C:", [str(catalan(n)) for n in range(13)])

# Catalan numbers straight from 2/(1 + sqrt(1 - 4x))
one = TruncatedSeries.constant(1, 10)
root = ser_pow(TruncatedSeries([1, -4] + [0] * 9), Fraction(1, 2))
print([str(c) for c in ser_div(2 * one, root + 1)])

# central factorial numbers T(p, q) for p <= 8
for p in range(9):
    print(p, [str(central_factorial_T(p, q)) for q in range(p + 1)])

# Norlund polynomials at sigma = -1, x = -1/2 and sigma = 1, x = 1/2
half = Fraction(1, 2)
print([str(gen_bernoulli_poly(2 * k, -1, -half)) for k in range(6)])
print([str(gen_euler_poly(2 * k, 1, half)) for k in range(6)])

# fractional powers of sin(z)/z are just as exact
print([str(c) for c in ser_pow(sinc_series(10), Fraction(-3, 2))])
