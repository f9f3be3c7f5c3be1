"""The two-to-one map from SU(2) x SU(2) onto SO(4), and its inverse.

F(P, Q) conjugates the Kronecker product P (x) Q into a real special
orthogonal matrix. F is a homomorphism whose kernel is the simultaneous
sign flip, so recovering (P, Q) from a product has a two-fold ambiguity;
factor_local_gate resolves it with a fixed sign convention. Entangling
gates are not Kronecker products and are rejected.
"""
import numpy as np

from so4exp import (
    LocalUnitaryPair,
    NotAKroneckerProduct,
    Su2Vec,
    exp_su2,
    factor_local_gate,
    group_iso_F,
    is_special_orthogonal,
    kron2,
    max_abs,
)

rng = np.random.default_rng(42)


def random_su2():
    return exp_su2(Su2Vec(*rng.uniform(-3, 3, size=3)))


P1, Q1, P2, Q2 = (random_su2() for _ in range(4))

F1 = group_iso_F(LocalUnitaryPair(P1, Q1))
F2 = group_iso_F(LocalUnitaryPair(P2, Q2))
F12 = group_iso_F(LocalUnitaryPair(P1 @ P2, Q1 @ Q2))

print("F(P1, Q1) =")
print(F1)
print("\nis special orthogonal:", is_special_orthogonal(F1).ok)
print("homomorphism |F(P1P2, Q1Q2) - F(P1,Q1) F(P2,Q2)| =", max_abs(F12 - F1 @ F2))

flipped = group_iso_F(LocalUnitaryPair(-P1, -Q1))
print("kernel: |F(P, Q) - F(-P, -Q)| =", max_abs(F1 - flipped))

T = kron2(P1, Q1)
pair = factor_local_gate(T)
print("\nfactoring P (x) Q back out:")
print("  reconstruction residual:", max_abs(kron2(pair.p, pair.q) - T))
print("  SU(2) residual of the factors:", pair.su2_residual())
sign = "+1" if max_abs(pair.p - P1) < 1e-10 else "-1"
print("  recovered the original pair up to sign:", sign)

cnot = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
try:
    factor_local_gate(cnot)
except NotAKroneckerProduct as e:
    print("\nCNOT is entangling, so factoring fails as it should:")
    print(" ", e)
