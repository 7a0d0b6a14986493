"""A∞-structures: Stasheff identities, cyclicity, classification, morphisms."""

from precy_bench.ainfty.classify import classify, goodness_failure, is_dg_extension
from precy_bench.ainfty.cyclic import (
    all_sectors,
    check_cyclic,
    check_ultracyclic,
    cyclic_defect,
    is_essentially_odd,
    natural_form,
    pairing_functional,
    sector_defects,
    stasheff_gamma_defect,
    validate_sector,
)
from precy_bench.ainfty.morphisms import (
    check_morphism,
    form_preservation_defect,
    morphism_defect,
)
from precy_bench.ainfty.stasheff import (
    check_stasheff,
    default_n_max,
    reduced_even_defect,
    reduced_odd_defect,
    stasheff_defect,
)

__all__ = [
    "all_sectors",
    "check_cyclic",
    "check_morphism",
    "check_stasheff",
    "check_ultracyclic",
    "classify",
    "cyclic_defect",
    "default_n_max",
    "form_preservation_defect",
    "goodness_failure",
    "is_dg_extension",
    "is_essentially_odd",
    "morphism_defect",
    "natural_form",
    "pairing_functional",
    "reduced_even_defect",
    "reduced_odd_defect",
    "sector_defects",
    "stasheff_defect",
    "stasheff_gamma_defect",
    "validate_sector",
]
