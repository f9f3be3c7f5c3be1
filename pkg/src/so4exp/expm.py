"""Closed-form exponentials on su(2), so(3) and so(4), plus the so(4) logarithm.

The su(2) exponential is the two-term formula

    exp(i x.sigma) = cos|x| 1 + i sinc|x| (x.sigma),

and the so(4) exponential follows by splitting A into its two su(2) halves
(a, b), exponentiating each, and conjugating the tensor product back to real
form.  exp_so4_closed writes out the sixteen resulting entries directly in
cos/sinc products of (a, b), so no complex arithmetic is performed at all;
exp_so4_via_kron keeps the conjugation explicit and serves as the structural
cross-check of the same computation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmbeddingLeak, NonRealResult, NotSpecialOrthogonal
from .mat_core import Su2Vec, adjoint, kron2, max_abs
from .magic import (
    SkewSo4,
    Su2Pair,
    factor_local_gate,
    is_special_orthogonal,
    magic_matrix,
    so4_from_su2_pair,
    su2_pair_from_so4,
)

__all__ = [
    "SINC_TAYLOR_THRESHOLD",
    "SkewSo3",
    "exp_so3",
    "exp_so4_closed",
    "exp_so4_via_kron",
    "exp_su2",
    "log_so4",
    "sinc",
]

# Below this |t| the direct quotient sin(t)/t loses relative accuracy, so a
# short even Taylor polynomial takes over; both branches agree to ~1e-16 at
# the threshold itself.
SINC_TAYLOR_THRESHOLD = 1e-4


def sinc(t: float) -> float:
    """The unnormalised cardinal sine sin(t)/t, with sinc(0) = 1."""
    t = abs(t)
    if t < SINC_TAYLOR_THRESHOLD:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


def exp_su2(v: Su2Vec) -> np.ndarray:
    """exp(i x.sigma) = cos|x| 1 + i sinc|x| (x.sigma), an element of SU(2)."""
    x1, x2, x3 = v
    n = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    c = math.cos(n)
    s = sinc(n)
    return np.array(
        [
            [c + 1j * s * x3, 1j * s * (x1 - 1j * x2)],
            [1j * s * (x1 + 1j * x2), c - 1j * s * x3],
        ]
    )


def exp_so4_closed(A: SkewSo4) -> np.ndarray:
    """Exponential of a real antisymmetric 4x4 matrix in closed form.

    All sixteen entries are bilinear in (cos, sinc) of the two block norms
    |a| and |b|, with purely real scalar arithmetic throughout.
    """
    (a1, a2, a3), (b1, b2, b3) = su2_pair_from_so4(A)
    na = math.sqrt(a1 * a1 + a2 * a2 + a3 * a3)
    nb = math.sqrt(b1 * b1 + b2 * b2 + b3 * b3)
    ca = math.cos(na)
    cb = math.cos(nb)
    sa = sinc(na)
    sb = sinc(nb)

    cc = ca * cb
    casb = ca * sb
    sacb = sa * cb
    ss = sa * sb

    a1b1 = a1 * b1
    a1b2 = a1 * b2
    a1b3 = a1 * b3
    a2b1 = a2 * b1
    a2b2 = a2 * b2
    a2b3 = a2 * b3
    a3b1 = a3 * b1
    a3b2 = a3 * b2
    a3b3 = a3 * b3

    return np.array(
        [
            [
                cc - ss * (a1b1 - a2b2 + a3b3),
                casb * b1 + sacb * a1 + ss * (a2b3 + a3b2),
                -casb * b2 + sacb * a2 - ss * (a1b3 - a3b1),
                casb * b3 + sacb * a3 - ss * (a1b2 + a2b1),
            ],
            [
                -casb * b1 - sacb * a1 + ss * (a2b3 + a3b2),
                cc - ss * (a1b1 + a2b2 - a3b3),
                -casb * b3 + sacb * a3 + ss * (a1b2 - a2b1),
                -casb * b2 - sacb * a2 - ss * (a1b3 + a3b1),
            ],
            [
                casb * b2 - sacb * a2 - ss * (a1b3 - a3b1),
                casb * b3 - sacb * a3 + ss * (a1b2 - a2b1),
                cc + ss * (a1b1 + a2b2 + a3b3),
                -casb * b1 + sacb * a1 - ss * (a2b3 - a3b2),
            ],
            [
                -casb * b3 - sacb * a3 - ss * (a1b2 + a2b1),
                casb * b2 + sacb * a2 - ss * (a1b3 + a3b1),
                casb * b1 - sacb * a1 - ss * (a2b3 - a3b2),
                cc + ss * (a1b1 - a2b2 - a3b3),
            ],
        ]
    )


def exp_so4_via_kron(A: SkewSo4) -> np.ndarray:
    """Exponential through the explicit route exp(A) = R^dagger (e^{ia} (x) e^{ib}) R.

    Numerically equivalent to exp_so4_closed but goes through complex 4x4
    arithmetic; kept as an independent path for cross-validation.  Raises
    NonRealResult if the conjugated result keeps an imaginary residue above
    1e-10, which cannot happen for a genuine SkewSo4 input.
    """
    a, b = su2_pair_from_so4(A)
    R = magic_matrix()
    M = adjoint(R) @ kron2(exp_su2(a), exp_su2(b)) @ R
    imag = max_abs(M.imag)
    if imag > 1e-10:
        raise NonRealResult(f"exponential kept an imaginary residue of {imag:.3e}")
    return M.real.copy()


@dataclass(frozen=True)
class SkewSo3:
    """Real antisymmetric 3x3 matrix [[0, a, c], [-a, 0, b], [-c, -b, 0]]."""

    a: float = 0.0
    b: float = 0.0
    c: float = 0.0

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [0.0, self.a, self.c],
                [-self.a, 0.0, self.b],
                [-self.c, -self.b, 0.0],
            ]
        )

    def angle(self) -> float:
        return math.sqrt(self.a * self.a + self.b * self.b + self.c * self.c)


def exp_so3(B: SkewSo3) -> np.ndarray:
    """Exponential of a 3x3 antisymmetric matrix via the 4x4 closed form.

    B embeds as the leading 3x3 block of an so(4) element whose fourth row
    and column vanish; the embedded exponential then fixes the fourth axis,
    and the rotation is read off the leading block.  Raises EmbeddingLeak if
    the fourth row or column of the 4x4 result strays from (0, 0, 0, 1) by
    more than 1e-10.
    """
    A = SkewSo4(f12=B.a, f13=B.c, f23=B.b)
    X = exp_so4_closed(A)
    leak = max(
        max_abs(X[3, :3]),
        max_abs(X[:3, 3]),
        abs(X[3, 3] - 1.0),
    )
    if leak > 1e-10:
        raise EmbeddingLeak(f"embedded exponential leaked {leak:.3e} outside the 3x3 block")
    return X[:3, :3].copy()


def _log_su2(u: np.ndarray) -> Su2Vec:
    """Principal logarithm of an SU(2) element, as x with u = exp(i x.sigma).

    The rotation angle |x| = atan2(|p|, cos) lands in [0, pi].  At the branch
    edge |x| = pi the axis is read from whatever Pauli component survives, or
    fixed to (1, 0, 0) when the matrix is exactly -1 and every axis works.
    """
    c = (u[0, 0].real + u[1, 1].real) / 2.0
    p1 = (u[0, 1].imag + u[1, 0].imag) / 2.0
    p2 = (u[0, 1].real - u[1, 0].real) / 2.0
    p3 = (u[0, 0].imag - u[1, 1].imag) / 2.0
    s = math.sqrt(p1 * p1 + p2 * p2 + p3 * p3)
    angle = math.atan2(s, c)
    if abs(angle - math.pi) <= 1e-12:
        if max(abs(p1), abs(p2), abs(p3)) >= 1e-12:
            return Su2Vec(angle * p1 / s, angle * p2 / s, angle * p3 / s)
        return Su2Vec(math.pi, 0.0, 0.0)
    if s == 0.0:
        return Su2Vec(0.0, 0.0, 0.0)
    scale = angle / s
    return Su2Vec(scale * p1, scale * p2, scale * p3)


def log_so4(X: np.ndarray) -> SkewSo4:
    """Principal logarithm of a special orthogonal 4x4 matrix.

    The input is validated against the SO(4) predicate at 1e-10, conjugated
    into a tensor-product unitary, factored into its SU(2) pair, and each
    factor gets its principal su(2) logarithm with both block angles in
    [0, pi].  The overall sign ambiguity of the factor pair affects only
    which of the two principal candidates is returned; exponentiating the
    result reproduces X either way.

    Raises NotSpecialOrthogonal on inputs failing the predicate and
    propagates NotAKroneckerProduct if the conjugated matrix does not
    factor, which signals a defective input rather than a branch issue.
    """
    X = np.asarray(X, dtype=float)
    chk = is_special_orthogonal(X, tol=1e-10)
    if not chk.ok:
        raise NotSpecialOrthogonal(
            "input fails the SO(4) predicate at 1e-10: "
            f"orthogonality {max(chk.left_residual, chk.right_residual):.3e}, "
            f"|det - 1| {chk.det_residual:.3e}"
        )
    R = magic_matrix()
    pair = factor_local_gate(R @ X @ adjoint(R))
    return so4_from_su2_pair(Su2Pair(_log_su2(pair.p), _log_su2(pair.q)))
