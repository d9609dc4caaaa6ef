"""Exact higher-order autocorrelations of rational signals on finite abelian groups.

The library computes autocorrelation tensors of any order in exact rational
arithmetic, mirrors them on the Fourier side with exact cyclotomic values,
decides translation equivalence from partial autocorrelation data, classifies
and generates the maximal homometric pairs on Z_6 and their lifts to Z_30,
and derives completeness-order bounds from spectral supports.

A compiled extension accelerates the integer tensor kernels when available;
`backend()` reports which implementation is active.
"""

from abelcorr._kernels import BACKEND as _BACKEND
from abelcorr.autocorr import (
    AutocorrTensor,
    CompareReport,
    GroupMismatchError,
    InvalidTupleError,
    TensorCapError,
    autocorr_direct,
    autocorr_fourier,
    autocorr_profile,
    equal_through_order,
    identity_tuples,
    is_translate,
)
from abelcorr.bounds import (
    BoundsReport,
    UnitsDecomposition,
    bounds_report,
    grunbaum_moore_bound,
    index2_exponent,
    invariant_basis_bound,
    min_cover_exponent,
    units_sum_decompose,
)
from abelcorr.cyclotomic import (
    ConductorError,
    Cyclotomic,
    GaloisAuto,
    InvalidAutomorphismError,
    cyclotomic_polynomial,
    root_of_unity,
    sqrt_minus_three,
)
from abelcorr.groups import (
    Group,
    InvalidGroupError,
    invariant_factors,
    make_group,
    product_power_set,
    subgroup_generated,
)
from abelcorr.homometry import (
    GeneratedPair,
    GenerationError,
    HomometryVerdict,
    LiftError,
    NormFormSolution,
    SearchCapError,
    brute_force_search,
    classify_z6_pair,
    generate_z6_pairs,
    lift_to_z30,
    norm_form_count,
    norm_form_solutions,
    translation_canonical,
)
from abelcorr.spectral import (
    InversionResult,
    NonRationalSpectrumError,
    RationalityCertificate,
    Signal,
    Spectrum,
    fourier,
    inverse_fourier,
    orbit_vanishing_check,
    rationality_check,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrTensor",
    "BoundsReport",
    "CompareReport",
    "ConductorError",
    "Cyclotomic",
    "GaloisAuto",
    "GeneratedPair",
    "GenerationError",
    "Group",
    "GroupMismatchError",
    "HomometryVerdict",
    "InvalidAutomorphismError",
    "InvalidGroupError",
    "InvalidTupleError",
    "InversionResult",
    "LiftError",
    "NonRationalSpectrumError",
    "NormFormSolution",
    "RationalityCertificate",
    "SearchCapError",
    "Signal",
    "Spectrum",
    "TensorCapError",
    "UnitsDecomposition",
    "autocorr_direct",
    "autocorr_fourier",
    "autocorr_profile",
    "backend",
    "bounds_report",
    "brute_force_search",
    "classify_z6_pair",
    "cyclotomic_polynomial",
    "equal_through_order",
    "fourier",
    "generate_z6_pairs",
    "grunbaum_moore_bound",
    "identity_tuples",
    "index2_exponent",
    "invariant_basis_bound",
    "invariant_factors",
    "inverse_fourier",
    "is_translate",
    "lift_to_z30",
    "make_group",
    "min_cover_exponent",
    "norm_form_count",
    "norm_form_solutions",
    "orbit_vanishing_check",
    "product_power_set",
    "rationality_check",
    "root_of_unity",
    "sqrt_minus_three",
    "subgroup_generated",
    "support",
    "translation_canonical",
    "units_sum_decompose",
]


def backend() -> str:
    """Name of the active tensor kernel implementation: "compiled" or "pure"."""
    return _BACKEND
