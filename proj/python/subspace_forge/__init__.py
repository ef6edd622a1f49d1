"""Almost affinely disjoint subspace families over finite fields."""

from ._core import (
    Family,
    FormatError,
    Field,
    GuardError,
    ParameterError,
    batch,
    bounds,
    build_code_based_family,
    build_random_family,
    build_rs_family,
    compute_L_aad,
    compute_L_as,
    encode,
    is_partial_spread,
    search,
    vandermonde_family,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FormatError",
    "Field",
    "GuardError",
    "ParameterError",
    "batch",
    "bounds",
    "build_code_based_family",
    "build_random_family",
    "build_rs_family",
    "compute_L_aad",
    "compute_L_as",
    "encode",
    "is_partial_spread",
    "search",
    "vandermonde_family",
    "verify",
]
