"""Operator p-norm bounds for small dense complex matrices.

Matrices are 2-d array-likes (converted to complex128). Exponents are
numbers >= 1, ``math.inf``, or strings such as ``"inf"``.
"""

from ._core import (
    CertificateRejected,
    MatrixIOError,
    MatrixParseError,
    anchor_norms,
    ascent_lower_bound,
    certified_bound,
    circulant,
    circulant_two_norm,
    classify_circulant_la,
    default_grid,
    direct_sum,
    doubly_balanced_norm,
    dual_exponent,
    hankel,
    is_log_affine,
    is_p_isometry,
    la_envelope,
    norm_inf,
    norm_one,
    norm_two,
    oracle_norm,
    profile,
    read_matrix,
    tensor,
    upper_bound,
    vec_norm,
    write_matrix,
)

__all__ = [
    "CertificateRejected",
    "MatrixIOError",
    "MatrixParseError",
    "anchor_norms",
    "ascent_lower_bound",
    "certified_bound",
    "circulant",
    "circulant_two_norm",
    "classify_circulant_la",
    "default_grid",
    "direct_sum",
    "doubly_balanced_norm",
    "dual_exponent",
    "hankel",
    "is_log_affine",
    "is_p_isometry",
    "la_envelope",
    "norm_inf",
    "norm_one",
    "norm_two",
    "oracle_norm",
    "profile",
    "read_matrix",
    "tensor",
    "upper_bound",
    "vec_norm",
    "write_matrix",
]
