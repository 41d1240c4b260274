"""Minkowski asymmetry, symmetrization ratios and diametrical completeness in the plane."""

from ._core import (
    MinkasymError,
    alpha,
    asymmetry,
    c_lambda,
    centered,
    completeness,
    crossings,
    diagram_csv,
    euclidean_dw_bound,
    family,
    hood,
    polygon,
    tau,
    tilde_s,
    verify,
)

__all__ = [
    "MinkasymError",
    "alpha",
    "asymmetry",
    "c_lambda",
    "centered",
    "completeness",
    "crossings",
    "diagram_csv",
    "euclidean_dw_bound",
    "family",
    "hood",
    "polygon",
    "tau",
    "tilde_s",
    "verify",
]
