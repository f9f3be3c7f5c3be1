"""Inverting the exponential: the principal logarithm on SO(4).

log_so4 conjugates the input into a tensor-product unitary, factors out
the two SU(2) blocks, and takes each block's principal logarithm with its
angle in [0, pi]. Because the factor pair is only defined up to a joint
sign flip, the logarithm may return either of two principal candidates;
exponentiating the result reproduces the input either way.
"""
import math

import numpy as np

from so4exp import (
    NotSpecialOrthogonal,
    SkewSo4,
    Su2Pair,
    Su2Vec,
    exp_so4_closed,
    log_so4,
    max_abs,
    so4_from_su2_pair,
    su2_pair_from_so4,
)

A = SkewSo4(f12=0.1, f13=-0.2, f14=0.15, f23=0.05, f24=-0.1, f34=0.2)
X = exp_so4_closed(A)
L = log_so4(X)
print("small generator, coefficients recovered verbatim:")
print("  original: ", A.coeffs())
print("  recovered:", L.coeffs())
print("  max difference:", max(abs(x - y) for x, y in zip(A.coeffs(), L.coeffs())))

# with larger coefficients the returned candidate may be the other branch,
# but the round trip through exp is still exact
A = SkewSo4(0.3, -1.2, 0.7, 2.1, -0.4, 0.9)
X = exp_so4_closed(A)
L = log_so4(X)
a, b = su2_pair_from_so4(L)
print("\nlarger generator:")
print("  returned block angles:", a.norm(), b.norm(), "(both in [0, pi])")
print("  |exp(log X) - X| =", max_abs(exp_so4_closed(L) - X))

# the half-turn, where the rotation angle hits the branch edge pi
X = np.diag([-1.0, -1.0, 1.0, 1.0])
L = log_so4(X)
print("\nhalf turn in the (1,2) plane:")
print("  log coefficients:", tuple(round(c, 12) for c in L.coeffs()))
print("  |exp(log X) - X| =", max_abs(exp_so4_closed(L) - X))

# block angles a hair away from pi, the hardest inputs for axis recovery
rng = np.random.default_rng(1)
axis = rng.normal(size=3)
axis /= np.linalg.norm(axis)
near = Su2Vec(*((math.pi - 1e-9) * axis))
A = so4_from_su2_pair(Su2Pair(near, Su2Vec(0.4, -0.2, 0.8)))
X = exp_so4_closed(A)
print("\nblock angle pi - 1e-9:")
print("  |exp(log X) - X| =", max_abs(exp_so4_closed(log_so4(X)) - X))

# inputs outside SO(4) are rejected rather than silently projected
try:
    log_so4(np.diag([1.0, 1.0, 1.0, -1.0]))
except NotSpecialOrthogonal as e:
    print("\na reflection has no logarithm here:")
    print(" ", e)
