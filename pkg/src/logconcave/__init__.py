"""Exact coefficients of prod (1 - q^n)^(-n^(d-1)) and their log-concavity landscape."""

from .series import (
    CoeffRow,
    DeltaClassification,
    ExponentSequence,
    RowCache,
    Shape,
    closed_form_pd,
    compute_row,
    delta,
    find_first_exception,
    oracle_row,
    power_row,
    sigma,
    sigma_table,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffRow",
    "DeltaClassification",
    "ExponentSequence",
    "RowCache",
    "Shape",
    "closed_form_pd",
    "compute_row",
    "delta",
    "find_first_exception",
    "oracle_row",
    "power_row",
    "sigma",
    "sigma_table",
]
