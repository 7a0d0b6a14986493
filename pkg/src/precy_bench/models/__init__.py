"""Domain models."""

from precy_bench.models.ainfty import (
    AInfinityData,
    BilinearForm,
    Classification,
    MorphismData,
    Part,
)
from precy_bench.models.algebra import (
    DgAlgebraData,
    DoubleBracket,
    DpaMorphism,
    PoissonAlgebra,
)
from precy_bench.models.boundary import (
    BoundaryAlgebra,
    CompositionWitness,
    MixedBoundary,
)
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport, CheckResult, Witness
from precy_bench.models.run import (
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_PASSED,
    RunReport,
)

__all__ = [
    "AInfinityData",
    "AxiomReport",
    "BilinearForm",
    "BoundaryAlgebra",
    "CheckResult",
    "Classification",
    "CompositionWitness",
    "DgAlgebraData",
    "DoubleBracket",
    "DpaMorphism",
    "EXIT_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_PASSED",
    "MixedBoundary",
    "MorphismData",
    "PInfinityFamily",
    "Part",
    "PoissonAlgebra",
    "RunReport",
    "Witness",
]
