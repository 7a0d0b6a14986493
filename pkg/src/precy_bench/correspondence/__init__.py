"""Double Poisson brackets ↔ nice pre-Calabi-Yau structures on ∂_{d-1}A."""

from precy_bench.correspondence.boundary import (
    base_algebra_of,
    boundary_algebra,
    boundary_from_structure,
    mixed_form,
    square_zero_extension,
)
from precy_bench.correspondence.bracket import (
    bracket_from_precy,
    bracket_sign,
    extraction_report,
    precy_from_bracket,
)
from precy_bench.correspondence.rotation import rotate_leading_sector
from precy_bench.correspondence.sectors import (
    DISTINGUISHED_SECTORS,
    sector_reduction_check,
)

__all__ = [
    "DISTINGUISHED_SECTORS",
    "base_algebra_of",
    "boundary_algebra",
    "boundary_from_structure",
    "bracket_from_precy",
    "bracket_sign",
    "extraction_report",
    "mixed_form",
    "precy_from_bracket",
    "rotate_leading_sector",
    "sector_reduction_check",
    "square_zero_extension",
]
