"""
Exact numbers in cyclotomic fields
==================================

The reflection matrices of a triangle group need the numbers 2cos(pi/p).
They all live in one cyclotomic field Q(zeta_n), where arithmetic is exact.
"""

from trigon.cyclotomic import (cyclotomic_polynomial, field_new, inverse,
                               two_cos_pi_over, zeta_power)

# The 12th cyclotomic polynomial, coefficients from the constant term up
print("Phi_12 =", cyclotomic_polynomial(12))

# One field holds every 2cos(pi/p) with 2p dividing n.  For (2,3,7) that is
# n = lcm(4, 6, 14) = 84.
f = field_new(84)
print("Q(zeta_%d) has degree %d" % (f.n, f.degree))

for p in (2, 3, 7):
    t = two_cos_pi_over(f, p)
    print("2cos(pi/%d) ~ %.6f" % (p, t.to_complex().real))

# zeta_84^84 is exactly one, and the golden ratio satisfies t^2 = t + 1
print(zeta_power(f, 84) == f.one())
g = field_new(10)
phi = two_cos_pi_over(g, 5)
print("golden ratio check:", phi * phi == phi + g.one())

# Inverses come from the extended Euclidean algorithm, so nothing is rounded
a = zeta_power(f, 1) + f(3)
print("a * a^-1 == 1:", a * inverse(a) == f.one())
