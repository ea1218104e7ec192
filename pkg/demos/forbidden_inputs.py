"""
Where the iteration breaks down
===============================

A denominator A + B x[n-1] x[n-3] can vanish.  We build seeds that hit zero
at a chosen step and check that iteration and the product factors agree.
"""
from fractions import Fraction

from ratrec import InitialConditions, Parameters, simulate
from ratrec.analysis import paper_good_set_condition, gamma_form_forbidden_index
from ratrec.closedform import forbidden_index_from_factors

params = Parameters(alpha=1, A=2, B=1)

# A + B b d = 0 kills the very first step
init = InitialConditions(a=1, b=1, c=1, d=-2)
print(simulate(params, init, 10).status)

# the j-th factor A^j + B uv sum_i A^i alpha^(j-1-i) vanishes at index 2j-1 (b,d)
# or 2j (a,c)
for j in range(1, 5):
    s = sum(params.A**i * params.alpha**(j - 1 - i) for i in range(j))
    ac = -Fraction(params.A**j) / (params.B * s)
    init = InitialConditions(a=1, b=3, c=ac, d=1)
    traj = simulate(params, init, 40)
    print(j, traj.status, forbidden_index_from_factors(params, init, 40))

# with A = alpha the bad set is A/(B uv) in {-1, -2, ...}; parity plays no part.
# Here A/(Bbd) = 3 and A/(Bac) = -3: the published test (not 1, not even)
# accepts these seeds, yet x[6] is undefined.
ones = Parameters(1, 1, 1)
init = InitialConditions(a=1, b=1, c=Fraction(-1, 3), d=Fraction(1, 3))
print(simulate(ones, init, 20).status, gamma_form_forbidden_index(ones, init),
      paper_good_set_condition(ones, init))
