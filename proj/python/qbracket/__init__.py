"""Python bindings for the qbracket knot-invariant library."""

from ._core import (
    CapacityError,
    bracket,
    bracket3,
    canonical,
    groebner_basis,
    ideal_generators,
    normal_form,
    run_cli,
    scan,
    verify_branches,
    verify_groebner,
)

__all__ = [
    "CapacityError",
    "bracket",
    "bracket3",
    "canonical",
    "groebner_basis",
    "ideal_generators",
    "normal_form",
    "run_cli",
    "scan",
    "verify_branches",
    "verify_groebner",
]
