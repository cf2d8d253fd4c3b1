"""Mutually unbiased bases, approximate MUBs, and their real doubling."""
from .bases import (
    BasisCollection,
    GammaReport,
    gamma,
    inner,
    realify_collection,
    realify_vector,
    tensor_collections,
    tolerance,
    welch_collection_sum,
)
from .bounds import delta_bound, real_mub_upper_bound, welch_bound
from .constructions import (
    amub_elliptic,
    amub_gauss,
    amub_jacobi,
    build,
    mub_prime_power,
    real_amub_from_complex,
    real_pair_from_hadamard,
    standard_basis,
)

__version__ = "0.1.0"

__all__ = [
    "delta_bound",
    "real_mub_upper_bound",
    "welch_bound",
    "BasisCollection",
    "GammaReport",
    "gamma",
    "inner",
    "realify_collection",
    "realify_vector",
    "tensor_collections",
    "tolerance",
    "welch_collection_sum",
    "amub_elliptic",
    "amub_gauss",
    "amub_jacobi",
    "build",
    "mub_prime_power",
    "real_amub_from_complex",
    "real_pair_from_hadamard",
    "standard_basis",
]
