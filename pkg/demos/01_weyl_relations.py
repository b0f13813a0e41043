"""Exact Weyl-relation arithmetic: phases, adjoints, commutation factors.

Generators W(x) are labelled by rational phase-space points and multiply as
W(x) W(y) = exp{i s(x,y)} W(x+y).  Everything below is computed by the
sparse polynomial engine; support arithmetic is exact.
"""

import math
from fractions import Fraction

from eprbell import WeylPolynomial, adjoint, one_norm, point, weyl_multiply

# the canonical pair picks up the phase e^{i/2}
p = weyl_multiply(WeylPolynomial.generator(point(1, 0)),
                  WeylPolynomial.generator(point(0, 1)))
coeff = p.terms[point(1, 1)]
print("W(1,0) W(0,1) =", p)
print("  phase angle:", math.atan2(coeff.imag, coeff.real), "(expected 0.5)")

# generators are unitary: W(x) W(x)* is exactly the identity
g = WeylPolynomial.generator(point("3/2", "-5/7"))
print("\nW(x) W(x)* == identity:", weyl_multiply(g, adjoint(g)) == WeylPolynomial.identity(2))

# the commutation factor that forces the correlated state's support:
# moving W(s,0) x W(-s,0) past W(a,b) x W(c,d) multiplies by e^{i s (b-d)}
s, (a, b, c, d) = Fraction(2), (Fraction(1), Fraction(3), Fraction(0), Fraction(1))
u = WeylPolynomial.generator((s, Fraction(0), -s, Fraction(0)))
w = WeylPolynomial.generator((a, b, c, d))
uw, wu = weyl_multiply(u, w), weyl_multiply(w, u)
zpt = uw.points()[0]
ratio = uw.terms[zpt] / wu.terms[zpt]
print("\ncommutation factor for s=2, (b-d)=2:", ratio)
print("  expected exp(4i) =", complex(math.cos(4), math.sin(4)))

# one-norm dominates the operator norm and certifies contractions
h = 0.5 * WeylPolynomial.generator(point(1, 0)) + 0.5 * WeylPolynomial.generator(point(-1, 0))
print("\none_norm of (W(1,0)+W(-1,0))/2:", one_norm(h))
