"""Exact polynomial maps over rational quaternion division algebras and checkers for
Nullstellensatz-style radical-membership certificates."""

from .algebra import QuatAlgebra, Quaternion, parse_quaternion
from .coordbridge import ComponentVector, expand, realize, realize_central, reduced_norm_poly, reduced_trace_poly
from .cpoly import (
    CPoly,
    FormCertificate,
    check_form_certificate,
    decompose_into_powers,
    falsify_quasi_anisotropy,
    parse_cpoly,
    polarization_rhs,
)
from .groebner import GroebnerBasis, MonomialOrder, ResourceLimitError, buchberger, ideal_member, normal_form
from .ncpoly import NcMonomial, NcPoly, equals_fn, extract_component, is_zero_function, parse_nc, print_nc
from .nullsatz import (
    ApCertificate,
    CentralIdeal,
    RadDPrimeWitness,
    RadDWitness,
    TwoSidedIdeal,
    Verdict,
    central_part,
    check_ap_certificate,
    check_d_radical_on_samples,
    check_rad_d_witness,
    check_rad_dprime_witness,
    transform_witness,
    vanishes_on_zero_locus,
    zero_locus_grid,
)

__version__ = "0.1.0"

__all__ = [
    "QuatAlgebra",
    "Quaternion",
    "parse_quaternion",
    "ComponentVector",
    "expand",
    "realize",
    "realize_central",
    "reduced_norm_poly",
    "reduced_trace_poly",
    "CPoly",
    "FormCertificate",
    "check_form_certificate",
    "decompose_into_powers",
    "falsify_quasi_anisotropy",
    "parse_cpoly",
    "polarization_rhs",
    "GroebnerBasis",
    "MonomialOrder",
    "ResourceLimitError",
    "buchberger",
    "ideal_member",
    "normal_form",
    "NcMonomial",
    "NcPoly",
    "equals_fn",
    "extract_component",
    "is_zero_function",
    "parse_nc",
    "print_nc",
    "ApCertificate",
    "CentralIdeal",
    "RadDPrimeWitness",
    "RadDWitness",
    "TwoSidedIdeal",
    "Verdict",
    "central_part",
    "check_ap_certificate",
    "check_d_radical_on_samples",
    "check_rad_d_witness",
    "check_rad_dprime_witness",
    "transform_witness",
    "vanishes_on_zero_locus",
    "zero_locus_grid",
]
