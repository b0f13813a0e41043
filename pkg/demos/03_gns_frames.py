"""Finite frames in the state's representation space.

Generator vectors W(x) Omega probe the (nonseparable) representation space
through finite Gram matrices.  Factor-1 monomials are orthonormal, every
two-sided generator vector is collinear with a factor-1 one, and the
Gram-whitened compression of an element lower-bounds its operator norm.
"""

from fractions import Fraction

import numpy as np

from eprbell import (
    StateFunctional,
    WeylPolynomial,
    build_frame,
    collinearity_check,
    norm_lower_bound,
    one_norm,
    point,
)

state = StateFunctional.epr(0.5, 0.25)

# factor-1 generator vectors are exactly orthonormal
pts = [(Fraction(j), Fraction(k), Fraction(0), Fraction(0))
       for j in range(2) for k in range(2)]
frame = build_frame(state, pts)
print("factor-1 frame Gram == identity:", np.array_equal(frame.gram, np.eye(4)))

# collinearity: W(a,b) x W(c,d) Omega is a phase times W(a+c,b-d) x I Omega
res = collinearity_check(Fraction(1), Fraction(1), Fraction(1), Fraction(1), state)
print("\ncollinearity overlap:", res["overlap"])
print("  modulus:", res["modulus"], " expected phase:", res["expected_phase"])

# norm bounds: the compression certifies a lower bound, the coefficient
# one-norm an upper bound
p = WeylPolynomial.generator(point(1, 0, 0, 0)) + WeylPolynomial.generator(point(-1, 0, 0, 0))
lower = norm_lower_bound(state, frame, p)
print(f"\nW(1,0)+W(-1,0) embedded: norm in [{lower:.6f}, {one_norm(p):.6f}]")

two_i = 2.0 * WeylPolynomial.identity(4)
print(f"2*I: certified lower bound {norm_lower_bound(state, frame, two_i):.12f}")
