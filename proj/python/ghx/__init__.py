"""Python surface for the sigma_m / mixed Hodge-index verification core."""

from ._core import (
    GhxError,
    GhxParseError,
    GhxPreconditionError,
    HermitianForm,
    MetricPencil,
    corollary_hodge_index,
    garding_gap,
    in_gamma_m,
    inner,
    log_concavity,
    mixed_sigma,
    mixed_sigma_oracle,
    pencil_eigenvalues,
    positive_representer,
    proportionality,
    sample_gamma_m,
    sigma,
    verify_theorem_a,
)

__all__ = [
    "GhxError",
    "GhxParseError",
    "GhxPreconditionError",
    "HermitianForm",
    "MetricPencil",
    "corollary_hodge_index",
    "garding_gap",
    "in_gamma_m",
    "inner",
    "log_concavity",
    "mixed_sigma",
    "mixed_sigma_oracle",
    "pencil_eigenvalues",
    "positive_representer",
    "proportionality",
    "sample_gamma_m",
    "sigma",
    "verify_theorem_a",
]
