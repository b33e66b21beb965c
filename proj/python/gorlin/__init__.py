"""Exact Gorenstein-linear free resolutions from inverse-system coefficients.

The heavy lifting happens in the compiled extension; this package re-exports
its surface. Polynomial values cross the boundary as exact canonical strings.
"""

from gorlin._core import (
    CapacityError,
    CheckResult,
    DegenerateSystemError,
    DegreeError,
    InputError,
    InverseSystem,
    Report,
    Resolution,
    ShapeError,
    __version__,
    annihilator,
    build_phi,
    build_resolution,
    check_colon_ideal,
    colon_phi,
    full_report,
    generic_phi,
    load_phi_json,
    monomials,
    random_phi,
    run_examples,
)

__all__ = [
    "CapacityError",
    "CheckResult",
    "DegenerateSystemError",
    "DegreeError",
    "InputError",
    "InverseSystem",
    "Report",
    "Resolution",
    "ShapeError",
    "__version__",
    "annihilator",
    "build_phi",
    "build_resolution",
    "check_colon_ideal",
    "colon_phi",
    "full_report",
    "generic_phi",
    "load_phi_json",
    "monomials",
    "random_phi",
    "run_examples",
]
