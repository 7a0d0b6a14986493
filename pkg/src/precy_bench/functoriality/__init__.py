"""Functoriality of the boundary construction: ∂φ, composition, cohomology."""

from precy_bench.functoriality.cohomology import (
    check_quasi_iso,
    cohomology,
    induced_rank,
)
from precy_bench.functoriality.compose import compose_boundary
from precy_bench.functoriality.mixed import (
    boundary_morphism,
    check_mixed_boundary,
    intertwining_defects,
)
from precy_bench.functoriality.morphism import (
    as_structure,
    check_dpa_morphism,
    strict_map,
    underlying_morphism,
)

__all__ = [
    "as_structure",
    "boundary_morphism",
    "check_dpa_morphism",
    "check_mixed_boundary",
    "check_quasi_iso",
    "cohomology",
    "compose_boundary",
    "induced_rank",
    "intertwining_defects",
    "strict_map",
    "underlying_morphism",
]
