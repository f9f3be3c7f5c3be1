"""Closed-form exponentials and logarithms on so(4).

The six coefficients of a real antisymmetric 4x4 matrix split into two
independent 3-vectors under conjugation by the magic (Bell-state) basis, so
the exponential reduces to two su(2) exponentials.  This package carries the
split, both exponential routes, the inverse logarithm, slow series oracles,
and a JSON command line tool.
"""

from .errors import (
    EmbeddingLeak,
    NonRealResult,
    NotAKroneckerProduct,
    NotSpecialOrthogonal,
    So4Error,
)
from .mat_core import (
    ID2,
    Su2Vec,
    adjoint,
    det4_real,
    kron2,
    matmul,
    max_abs,
    pauli_matrix,
    su2vec_to_matrix,
    sub,
    transpose,
)
from .magic import (
    LocalUnitaryPair,
    SkewSo4,
    SpecialOrthogonalCheck,
    Su2Pair,
    bell_state,
    conjugate_so4_to_local,
    factor_local_gate,
    group_iso_F,
    is_special_orthogonal,
    magic_matrix,
    self_dual_split,
    so4_from_su2_pair,
    su2_pair_from_so4,
)
from .expm import (
    SINC_TAYLOR_THRESHOLD,
    SkewSo3,
    exp_so3,
    exp_so4_closed,
    exp_so4_via_kron,
    exp_su2,
    log_so4,
    sinc,
)
from .oracle import rodrigues_so3, taylor_exp

__version__ = "0.1.0"

__all__ = [
    "EmbeddingLeak",
    "ID2",
    "LocalUnitaryPair",
    "NonRealResult",
    "NotAKroneckerProduct",
    "NotSpecialOrthogonal",
    "SINC_TAYLOR_THRESHOLD",
    "SkewSo3",
    "SkewSo4",
    "So4Error",
    "SpecialOrthogonalCheck",
    "Su2Pair",
    "Su2Vec",
    "adjoint",
    "bell_state",
    "conjugate_so4_to_local",
    "det4_real",
    "exp_so3",
    "exp_so4_closed",
    "exp_so4_via_kron",
    "exp_su2",
    "factor_local_gate",
    "group_iso_F",
    "is_special_orthogonal",
    "kron2",
    "log_so4",
    "magic_matrix",
    "matmul",
    "max_abs",
    "pauli_matrix",
    "rodrigues_so3",
    "self_dual_split",
    "sinc",
    "so4_from_su2_pair",
    "su2_pair_from_so4",
    "su2vec_to_matrix",
    "sub",
    "taylor_exp",
    "transpose",
]
