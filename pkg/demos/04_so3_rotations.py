"""3x3 rotations through the 4x4 machinery, checked against Rodrigues.

An antisymmetric 3x3 matrix embeds as the leading block of an so(4)
element with a vanishing fourth row and column. Its 4x4 exponential keeps
the fourth axis fixed, and the leading 3x3 block is exactly the rotation
the Rodrigues formula produces.
"""
import math

import numpy as np

from so4exp import SkewSo3, SkewSo4, exp_so3, exp_so4_closed, max_abs, rodrigues_so3

B = SkewSo3(a=0.4, b=-1.1, c=2.2)
print("generator B =")
print(B.matrix())
print("rotation angle:", B.angle())

X = exp_so3(B)
print("\nexp(B) =")
print(X)
print("\nvs Rodrigues formula:", max_abs(X - rodrigues_so3(B)))
print("orthogonality |X^T X - 1|:", max_abs(X.T @ X - np.eye(3)))

# the embedded 4x4 exponential fixes the fourth axis
X4 = exp_so4_closed(SkewSo4(f12=B.a, f13=B.c, f23=B.b))
print("\nembedded 4x4 exponential, fourth row:   ", X4[3])
print("embedded 4x4 exponential, fourth column:", X4[:, 3])

# a quarter turn about the third axis moves e1 onto... see for yourself
quarter = exp_so3(SkewSo3(a=math.pi / 2))
print("\nquarter turn in the (1,2) plane:")
print(np.round(quarter, 15))
print("it sends e1 to", np.round(np.array([1.0, 0, 0]) @ quarter, 15))

# angles near 0 and near pi are the classic trouble spots for axis-angle
# formulas; the sinc-based forms sail through both
for angle in (1e-9, math.pi - 1e-9, math.pi):
    B = SkewSo3(a=angle)
    err = max_abs(exp_so3(B) - rodrigues_so3(B))
    print(f"angle {angle:.10g}: closed vs Rodrigues {err:.1e}")
