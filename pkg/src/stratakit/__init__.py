"""Orbit and bundle stratification of matrix pencils and matrix polynomials."""

from .closure import (
    ClosureReport,
    FailedCondition,
    bundle_closure_contains_pencil,
    bundle_closure_contains_poly,
    bundle_closure_decomposition,
    orbit_closure_contains_pencil,
    orbit_closure_contains_poly,
    weakly_majorizes,
)
from .codim import (
    CodimReport,
    Convention,
    codim_bundle_pencil,
    codim_orbit_pencil,
    codim_orbit_segre_oracle,
    codim_poly,
    weyr_orbit_codim,
)
from .eigenstruct import (
    INFINITY,
    BundleKey,
    CoalescenceMap,
    EigenvalueKey,
    Eigenstructure,
    bundle_key,
    coalesce,
    companion_structure,
    conjugate,
    validate,
    weyr_of_min_indices,
    weyr_union,
)
from .errors import StrataError
from .strata import StrataGraph, build_hasse, enumerate_bundles, verify_stratification

__version__ = "0.1.0"
