"""Dense 2x2 / 4x4 matrix helpers shared by the rest of the package.

Real matrices are float64 ndarrays, complex ones complex128.  The Pauli
constants are module-level read-only arrays; copy before mutating.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "ID2",
    "Su2Vec",
    "adjoint",
    "det4_real",
    "kron2",
    "matmul",
    "max_abs",
    "pauli_matrix",
    "su2vec_to_matrix",
    "sub",
    "transpose",
]


def _readonly(m):
    m.setflags(write=False)
    return m


_SIGMA = (
    _readonly(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)),
    _readonly(np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)),
    _readonly(np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)),
)

ID2 = _readonly(np.eye(2, dtype=complex))


class Su2Vec(NamedTuple):
    """Coefficient vector (x1, x2, x3) of x1*s1 + x2*s2 + x3*s3 in the Pauli basis."""

    x1: float
    x2: float
    x3: float

    def norm(self) -> float:
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


def pauli_matrix(k: int) -> np.ndarray:
    """Pauli matrix sigma_k for k in {1, 2, 3}, as a read-only 2x2 complex array."""
    if k not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {k!r}")
    return _SIGMA[k - 1]


def su2vec_to_matrix(v: Su2Vec) -> np.ndarray:
    """Hermitian traceless 2x2 matrix x1*s1 + x2*s2 + x3*s3."""
    x1, x2, x3 = v
    return np.array(
        [[x3, x1 - 1j * x2], [x1 + 1j * x2, -x3]],
        dtype=complex,
    )


def kron2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices; block (i, j) of the result is a[i, j] * b."""
    return np.kron(a, b)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def transpose(a: np.ndarray) -> np.ndarray:
    return a.T


def sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a - b


def max_abs(a) -> float:
    """Largest entrywise absolute value (the max norm)."""
    return float(np.max(np.abs(a)))


def det4_real(m: np.ndarray) -> float:
    """Determinant of a real 4x4 matrix by cofactor expansion along the first row.

    Kept explicit so the result is a plain arithmetic expression in the
    entries, independent of any LU pivoting strategy.
    """
    m = np.asarray(m, dtype=float)
    a11, a12, a13, a14 = m[0]
    a21, a22, a23, a24 = m[1]
    a31, a32, a33, a34 = m[2]
    a41, a42, a43, a44 = m[3]
    m1 = (a22 * (a33 * a44 - a34 * a43)
          - a23 * (a32 * a44 - a34 * a42)
          + a24 * (a32 * a43 - a33 * a42))
    m2 = (a21 * (a33 * a44 - a34 * a43)
          - a23 * (a31 * a44 - a34 * a41)
          + a24 * (a31 * a43 - a33 * a41))
    m3 = (a21 * (a32 * a44 - a34 * a42)
          - a22 * (a31 * a44 - a34 * a41)
          + a24 * (a31 * a42 - a32 * a41))
    m4 = (a21 * (a32 * a43 - a33 * a42)
          - a22 * (a31 * a43 - a33 * a41)
          + a23 * (a31 * a42 - a32 * a41))
    return float(a11 * m1 - a12 * m2 + a13 * m3 - a14 * m4)
