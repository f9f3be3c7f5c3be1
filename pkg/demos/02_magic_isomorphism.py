"""How the magic basis splits so(4) into two commuting su(2) halves.

The magic matrix R holds the four Bell states in its columns, with phases
(1, -i, -1, -i). Conjugating any real antisymmetric A by R produces
i(a.sigma (x) 1 + 1 (x) b.sigma): six real coefficients become two
independent 3-vectors, and everything about exp(A) reduces to the two
2x2 blocks.
"""
import numpy as np

from so4exp import (
    ID2,
    SkewSo4,
    Su2Vec,
    bell_state,
    conjugate_so4_to_local,
    kron2,
    magic_matrix,
    max_abs,
    self_dual_split,
    so4_from_su2_pair,
    su2_pair_from_so4,
    su2vec_to_matrix,
)

R = magic_matrix()
print("magic matrix R =")
print(R)

print("\ncolumns are phased Bell states:")
for k, phase in zip((1, 2, 3, 4), (1, -1j, -1, -1j)):
    residual = max_abs(R[:, k - 1] - phase * bell_state(k))
    print(f"  column {k} = {phase} * Bell_{k}   (residual {residual:.1e})")

print("\nunitarity |R R^dagger - 1|:", max_abs(R @ R.conj().T - np.eye(4)))

A = SkewSo4(f12=0.3, f13=-1.2, f14=0.7, f23=2.1, f24=-0.4, f34=0.9)
a, b = su2_pair_from_so4(A)
print("\nA coefficients:", A.coeffs())
print("a =", tuple(a), " |a| =", a.norm())
print("b =", tuple(b), " |b| =", b.norm())

target = 1j * (kron2(su2vec_to_matrix(a), ID2) + kron2(ID2, su2vec_to_matrix(b)))
print("\n|R A R^dagger - i(a(x)1 + 1(x)b)| =", max_abs(conjugate_so4_to_local(A) - target))

back = so4_from_su2_pair(su2_pair_from_so4(A))
print("round trip error on coefficients:",
      max(abs(x - y) for x, y in zip(back.coeffs(), A.coeffs())))

# the same split, expressed inside so(4): a self-dual and an anti-self-dual
# part that commute as matrices
sd, asd = self_dual_split(A)
m1, m2 = sd.matrix(), asd.matrix()
print("\nself-dual part coefficients:     ", sd.coeffs())
print("anti-self-dual part coefficients:", asd.coeffs())
print("|[A_sd, A_asd]| =", max_abs(m1 @ m2 - m2 @ m1))
print("|A_sd + A_asd - A| =", max_abs((sd + asd).matrix() - A.matrix()))
