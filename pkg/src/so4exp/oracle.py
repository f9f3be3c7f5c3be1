"""Slow reference implementations used to cross-check the closed forms.

Nothing here is performance-sensitive; these routines trade speed for being
obviously correct term-by-term.
"""
from __future__ import annotations

import math

import numpy as np

from .expm import SINC_TAYLOR_THRESHOLD, SkewSo3, sinc
from .mat_core import max_abs

__all__ = ["rodrigues_so3", "taylor_exp"]


def taylor_exp(m: np.ndarray, terms: int = 30, squarings: int | None = None) -> np.ndarray:
    """Matrix exponential by scaled-and-squared Taylor summation.

    The input is halved until its largest entry is at most 1/2 (unless an
    explicit squarings count is given), the series 1 + M + M^2/2! + ... is
    summed through the M^terms term, and the result is squared back up.
    With the default depth the truncation error sits far below double
    precision roundoff for any bounded input.
    """
    if terms < 1:
        raise ValueError(f"terms must be at least 1, got {terms}")
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    m = m.astype(complex) if np.iscomplexobj(m) else m.astype(float)

    if squarings is None:
        squarings = 0
        scale = max_abs(m)
        while scale > 0.5:
            scale /= 2.0
            squarings += 1
    elif squarings < 0:
        raise ValueError(f"squarings must be nonnegative, got {squarings}")

    ms = m / (2.0 ** squarings)
    acc = np.eye(m.shape[0], dtype=ms.dtype)
    term = np.eye(m.shape[0], dtype=ms.dtype)
    for k in range(1, terms + 1):
        term = term @ ms / k
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def rodrigues_so3(B: SkewSo3) -> np.ndarray:
    """Rotation exp(B) = 1 + sinc(t) B + k(t) B^2 with t the rotation angle.

    k(t) = (1 - cos t)/t^2 switches to its Taylor polynomial 1/2 - t^2/24
    near zero for the same reason sinc does.
    """
    t = B.angle()
    if t < SINC_TAYLOR_THRESHOLD:
        k = 0.5 - t * t / 24.0
    else:
        k = (1.0 - math.cos(t)) / (t * t)
    m = B.matrix()
    return np.eye(3) + sinc(t) * m + k * (m @ m)
