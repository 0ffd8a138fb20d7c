"""Exact verification and construction of symplectic, contact-symplectic and contact pairs."""

__version__ = "0.1.0"

from .exterior import ExteriorForm, Subspace, contract, kernel, rank_two_form, restrict, wedge
from .lie import LieAlgebra, ce_d, closed_forms, cohomology_dims, jacobi_check
from .catalog import catalog_get
from .pairs import (
    PairReport,
    check_contact_pair,
    check_contact_symplectic_pair,
    check_symplectic_pair,
    couple_type,
    form_class,
    pair_to_pm,
    pm_to_pair,
)
from .boothbywang import bw_contact_pair_from_cs, bw_contact_symplectic, central_extension, torus_extension
from .search import (
    brute_force_oracle,
    construct_pair_witness,
    has_invariant_symplectic,
    has_invariant_symplectic_pair,
    signature,
    wedge_gram,
)

__all__ = [
    "ExteriorForm", "Subspace", "contract", "kernel", "rank_two_form", "restrict", "wedge",
    "LieAlgebra", "ce_d", "closed_forms", "cohomology_dims", "jacobi_check",
    "catalog_get",
    "PairReport", "check_contact_pair", "check_contact_symplectic_pair", "check_symplectic_pair",
    "couple_type", "form_class", "pair_to_pm", "pm_to_pair",
    "bw_contact_pair_from_cs", "bw_contact_symplectic", "central_extension", "torus_extension",
    "brute_force_oracle", "construct_pair_witness", "has_invariant_symplectic",
    "has_invariant_symplectic_pair", "signature", "wedge_gram",
]
