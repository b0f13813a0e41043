"""Certified Bell lower bounds inside the polynomial algebra.

Every candidate is a quadruple of self-adjoint one-norm contractions, so
each value is a true lower bound on the Bell supremum.  The single-orbit
monomial family caps at sqrt(2)/2; richer supports climb toward the
classical value 1; the quantum maximum sqrt(2) lives in the weak closure
and is reached exactly by the finite matrix model (demo 05), not by this
search - which is the point of keeping both routes.
"""

import math
import time
from fractions import Fraction

from eprbell import (
    SearchConfig,
    StateFunctional,
    monomial_family_value,
    optimize_bell,
    point,
    weyl_double,
)
from eprbell.weyl import negate

state = StateFunctional.epr()

# closed form of the monomial family at its optimal angles
value = monomial_family_value(
    Fraction(1), Fraction(0), 0.0, -math.pi / 2, math.pi / 4, -math.pi / 4, state
)
print(f"monomial family at optimal angles: {value:.12f} (sqrt(2)/2 = {math.sqrt(2)/2:.12f})")

# the search recovers the family maximum from random starts
xa, xb = point(1, 2), point(-1, 2)
family = SearchConfig(
    supports=((xa, negate(xa)), (xa, negate(xa)), (xb, negate(xb)), (xb, negate(xb))),
    seed=0,
)
start = time.perf_counter()
result = optimize_bell(state, family)
print(f"\nsearch on the family: {result.value:.12f} "
      f"({result.evaluations} evaluations, {time.perf_counter()-start:.2f}s)")

# growing supports: how fast the certified lower bound climbs with support
# size is an open experiment; each printed value is a genuine bound, but a
# search that stalls on a bigger support reports a smaller one
print("\nbest found over nested supports (seed 3):")
zero = point(0, 0)
for extra in range(0, 3):
    support = [zero]
    for k in range(1, extra + 1):
        support += [point(k, 0), point(-k, 0), point(0, k), point(0, -k)]
    cfg = SearchConfig(supports=(tuple(support),) * 4, restarts=12, max_iters=250, seed=3)
    res = optimize_bell(state, cfg)
    print(f"  {len(support):2d} points per slot -> certified lower bound {res.value:.9f}")

# perfect correlations: each W(a,b) x I has an exact double in the other factor
res = weyl_double(Fraction(3, 2), Fraction(1, 3), state)
print(f"\ndouble of W(3/2,1/3) x I: partner point {res['partner']}, "
      f"deviation {res['deviation']:.2e}")
