"""The magic-basis correspondence between so(4) and a pair of su(2) blocks.

Two-qubit coordinates are ordered |00>, |01>, |10>, |11>.  The magic matrix R
holds phased Bell states in its columns, and conjugation by R turns any real
antisymmetric A into i(a.sigma (x) 1 + 1 (x) b.sigma), splitting the six
so(4) coefficients into two independent 3-vectors a and b.  On the group
level the same conjugation realises the two-to-one map

    F(P, Q) = R^dagger (P (x) Q) R  in  SO(4),

whose kernel is the simultaneous sign flip (P, Q) -> (-P, -Q).  The
factorisation routine below resolves that ambiguity with a fixed sign
convention so decompositions are reproducible.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NonRealResult, NotAKroneckerProduct, NotSpecialOrthogonal
from .mat_core import Su2Vec, adjoint, det4_real, kron2, max_abs

__all__ = [
    "LocalUnitaryPair",
    "SkewSo4",
    "SpecialOrthogonalCheck",
    "Su2Pair",
    "bell_state",
    "conjugate_so4_to_local",
    "factor_local_gate",
    "group_iso_F",
    "is_special_orthogonal",
    "magic_matrix",
    "self_dual_split",
    "so4_from_su2_pair",
    "su2_pair_from_so4",
]

_SQRT_HALF = 1.0 / np.sqrt(2.0)

_BELL = (
    np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) * _SQRT_HALF,
    np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) * _SQRT_HALF,
    np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) * _SQRT_HALF,
    np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) * _SQRT_HALF,
)

_R = _SQRT_HALF * np.array(
    [
        [1.0, 0.0, 0.0, -1.0j],
        [0.0, -1.0j, -1.0, 0.0],
        [0.0, -1.0j, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0j],
    ]
)
_R.setflags(write=False)


def bell_state(k: int) -> np.ndarray:
    """Bell state k in {1, 2, 3, 4} as a length-4 real vector.

    1: (|00> + |11>)/sqrt2    2: (|01> + |10>)/sqrt2
    3: (|01> - |10>)/sqrt2    4: (|00> - |11>)/sqrt2
    """
    if k not in (1, 2, 3, 4):
        raise ValueError(f"Bell index must be in 1..4, got {k!r}")
    return _BELL[k - 1].copy()


def magic_matrix() -> np.ndarray:
    """The unitary R whose columns are the Bell states with phases (1, -i, -1, -i).

    Returned as a read-only constant; copy before mutating.
    """
    return _R


@dataclass(frozen=True)
class SkewSo4:
    """Real antisymmetric 4x4 matrix, stored by its strict upper triangle.

    Coefficient f_ij sits at entry (i-1, j-1); the lower triangle is the
    negative mirror.  Instances are immutable and support +, -, unary -, and
    scaling by a real number.
    """

    f12: float = 0.0
    f13: float = 0.0
    f14: float = 0.0
    f23: float = 0.0
    f24: float = 0.0
    f34: float = 0.0

    def coeffs(self) -> tuple[float, float, float, float, float, float]:
        return (self.f12, self.f13, self.f14, self.f23, self.f24, self.f34)

    def matrix(self) -> np.ndarray:
        f12, f13, f14, f23, f24, f34 = self.coeffs()
        return np.array(
            [
                [0.0, f12, f13, f14],
                [-f12, 0.0, f23, f24],
                [-f13, -f23, 0.0, f34],
                [-f14, -f24, -f34, 0.0],
            ]
        )

    @classmethod
    def from_matrix(cls, m: np.ndarray, tol: float = 1e-12) -> "SkewSo4":
        """Read the six coefficients off a real antisymmetric matrix.

        The symmetric residue max|m + m^T| must stay within tol; the input is
        then symmetrised as (m - m^T)/2 so tiny asymmetries cannot leak into
        the coefficients.
        """
        m = np.asarray(m, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        residue = max_abs(m + m.T)
        if residue > tol:
            raise ValueError(
                f"matrix is not antisymmetric: max|m + m^T| = {residue:.3e} > {tol:.3e}"
            )
        s = (m - m.T) / 2.0
        return cls(s[0, 1], s[0, 2], s[0, 3], s[1, 2], s[1, 3], s[2, 3])

    def __add__(self, other: "SkewSo4") -> "SkewSo4":
        return SkewSo4(*(x + y for x, y in zip(self.coeffs(), other.coeffs())))

    def __sub__(self, other: "SkewSo4") -> "SkewSo4":
        return SkewSo4(*(x - y for x, y in zip(self.coeffs(), other.coeffs())))

    def __neg__(self) -> "SkewSo4":
        return SkewSo4(*(-x for x in self.coeffs()))

    def __mul__(self, s: float) -> "SkewSo4":
        return SkewSo4(*(x * s for x in self.coeffs()))

    __rmul__ = __mul__


class Su2Pair(NamedTuple):
    """The two su(2) coefficient vectors carried by one so(4) element."""

    a: Su2Vec
    b: Su2Vec


class LocalUnitaryPair(NamedTuple):
    """A pair (P, Q) of 2x2 special unitaries acting as P (x) Q."""

    p: np.ndarray
    q: np.ndarray

    def su2_residual(self) -> float:
        """How far either factor is from SU(2): unitarity defect and |det - 1|."""
        worst = 0.0
        for u in (self.p, self.q):
            worst = max(worst, max_abs(adjoint(u) @ u - np.eye(2)))
            det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
            worst = max(worst, abs(det - 1.0))
        return worst


class SpecialOrthogonalCheck(NamedTuple):
    ok: bool
    left_residual: float
    right_residual: float
    det_residual: float


def su2_pair_from_so4(A: SkewSo4) -> Su2Pair:
    """Split the six so(4) coefficients into the two commuting su(2) halves.

    The half-sum / half-difference combinations below are exactly what
    conjugation by the magic matrix produces; see conjugate_so4_to_local.
    """
    f12, f13, f14, f23, f24, f34 = A.coeffs()
    a = Su2Vec((f12 + f34) / 2.0, (f13 - f24) / 2.0, (f14 + f23) / 2.0)
    b = Su2Vec((f12 - f34) / 2.0, -(f13 + f24) / 2.0, (f14 - f23) / 2.0)
    return Su2Pair(a, b)


def so4_from_su2_pair(pair: Su2Pair) -> SkewSo4:
    """Inverse of su2_pair_from_so4; exact on coefficients up to rounding."""
    (a1, a2, a3), (b1, b2, b3) = pair
    return SkewSo4(
        f12=a1 + b1,
        f13=a2 - b2,
        f14=a3 + b3,
        f23=a3 - b3,
        f24=-(a2 + b2),
        f34=a1 - b1,
    )


def conjugate_so4_to_local(A: SkewSo4) -> np.ndarray:
    """R A R^dagger, the complex 4x4 form i(a.sigma (x) 1 + 1 (x) b.sigma)."""
    return _R @ A.matrix() @ adjoint(_R)


def group_iso_F(pair: LocalUnitaryPair) -> np.ndarray:
    """Map an SU(2) x SU(2) pair to SO(4) via F(P, Q) = R^dagger (P (x) Q) R.

    Raises NonRealResult if the conjugated matrix keeps an imaginary part
    above 1e-10, and NotSpecialOrthogonal if the real part fails the SO(4)
    predicate at 1e-12.  Both only occur for inputs outside SU(2).
    """
    T = kron2(pair.p, pair.q)
    M = adjoint(_R) @ T @ _R
    imag = max_abs(M.imag)
    if imag > 1e-10:
        raise NonRealResult(
            f"conjugated product has imaginary residue {imag:.3e}; inputs are not in SU(2)"
        )
    X = M.real.copy()
    chk = is_special_orthogonal(X)
    if not chk.ok:
        raise NotSpecialOrthogonal(
            "conjugated product is not special orthogonal: "
            f"orthogonality {max(chk.left_residual, chk.right_residual):.3e}, "
            f"|det - 1| {chk.det_residual:.3e}"
        )
    return X


def _det2(m: np.ndarray) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _project_su2(m: np.ndarray) -> np.ndarray:
    """Nearest special unitary: polar projection via SVD, then a det phase fix."""
    u, _, vh = np.linalg.svd(m)
    w = u @ vh
    return w / cmath.sqrt(_det2(w))


def factor_local_gate(T: np.ndarray) -> LocalUnitaryPair:
    """Factor a 4x4 unitary as P (x) Q with P, Q in SU(2).

    The 2x2 block of largest magnitude seeds Q (any such block is p_ij * Q,
    so dividing by a square root of its determinant removes p_ij up to sign).
    P's entries are then recovered by projecting each block onto Q, both
    factors are polished to exact SU(2) elements, and the global sign is
    fixed so that the first entry of P with magnitude above 1/2 has positive
    real part (positive imaginary part breaking the tie on the imaginary
    axis).  Raises NotAKroneckerProduct when the rebuilt product misses T by
    more than 1e-8.
    """
    T = np.asarray(T, dtype=complex)
    if T.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {T.shape}")

    blocks = [[T[2 * i: 2 * i + 2, 2 * j: 2 * j + 2] for j in range(2)] for i in range(2)]
    i0, j0 = max(
        ((i, j) for i in range(2) for j in range(2)),
        key=lambda ij: max_abs(blocks[ij[0]][ij[1]]),
    )
    seed = blocks[i0][j0]
    seed_det = _det2(seed)
    if abs(seed_det) < 1e-12:
        raise NotAKroneckerProduct(
            "largest 2x2 block is numerically singular; no SU(2) factor can seed it"
        )
    q0 = seed / cmath.sqrt(seed_det)

    qnorm2 = float(np.sum(np.abs(q0) ** 2))
    p0 = np.array(
        [[np.vdot(q0, blocks[i][j]) / qnorm2 for j in range(2)] for i in range(2)]
    )

    p = _project_su2(p0)
    q = _project_su2(q0)

    for z in p.flat:
        if abs(z) > 0.5:
            if z.real < 0.0 or (z.real == 0.0 and z.imag < 0.0):
                p, q = -p, -q
            break

    residual = max_abs(kron2(p, q) - T)
    if residual > 1e-8:
        raise NotAKroneckerProduct(
            f"reconstruction residual {residual:.3e} exceeds 1e-8; "
            "input is not a Kronecker product of special unitaries"
        )
    return LocalUnitaryPair(p, q)


def self_dual_split(A: SkewSo4) -> tuple[SkewSo4, SkewSo4]:
    """Split A into its self-dual part (b = 0) and anti-self-dual part (a = 0).

    The two parts commute as matrices and sum back to A up to roundoff in
    the half-sum coefficients.
    """
    a, b = su2_pair_from_so4(A)
    zero = Su2Vec(0.0, 0.0, 0.0)
    return (
        so4_from_su2_pair(Su2Pair(a, zero)),
        so4_from_su2_pair(Su2Pair(zero, b)),
    )


def is_special_orthogonal(M: np.ndarray, tol: float = 1e-12) -> SpecialOrthogonalCheck:
    """Residuals of M^T M = I, M M^T = I and det M = 1, each compared to tol.

    Written for 4x4 inputs but happy with any square real matrix; the
    determinant uses the explicit cofactor expansion in the 4x4 case.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    eye = np.eye(n)
    left = max_abs(M.T @ M - eye)
    right = max_abs(M @ M.T - eye)
    det = det4_real(M) if M.shape == (4, 4) else float(np.linalg.det(M))
    det_residual = abs(det - 1.0)
    ok = left <= tol and right <= tol and det_residual <= tol
    return SpecialOrthogonalCheck(ok, left, right, det_residual)
