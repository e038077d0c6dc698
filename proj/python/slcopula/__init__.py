"""Semilinear copulas, semi-copulas and quasi-copulas built from diagonal sections."""

from ._slcopula import (
    Diagonal,
    DomainError,
    NotAMixtureError,
    PreconditionError,
    Semilinear,
    SlcError,
    SpecError,
    asymmetry_bounds,
    attain_bounds,
    classify,
    closed_form_measures,
    numeric_measures,
    recover_measure,
    to_piecewise,
    validate,
)

__all__ = [
    "Diagonal",
    "DomainError",
    "NotAMixtureError",
    "PreconditionError",
    "Semilinear",
    "SlcError",
    "SpecError",
    "asymmetry_bounds",
    "attain_bounds",
    "classify",
    "closed_form_measures",
    "numeric_measures",
    "recover_measure",
    "to_piecewise",
    "validate",
]
