"""
Closed forms against iteration
==============================

x[m] can be read off a product formula without iterating.  Every form
should land on the same rational.
"""
from fractions import Fraction

from ratrec import (
    InitialConditions, Parameters, closed_form, corollary1_term,
    corollary2_term, simulate, theorem1_term,
)

params = Parameters(alpha=Fraction(3, 2), A=2, B=Fraction(-1, 3))
init = InitialConditions(a=1, b=Fraction(1, 2), c=-3, d=5)
traj = simulate(params, init, 24)

for m in (1, 2, 7, 24):
    print(m, traj[m], theorem1_term(params, init, m), corollary1_term(params, init, m))

# A = alpha: the product collapses to rising factorials
params = Parameters(1, 1, 1)
init = InitialConditions(1, 1, 1, 1)
print([str(corollary2_term(params, init, m)) for m in range(1, 9)])

# 'auto' picks the cheapest form that applies
print(closed_form(params, init, 400))
