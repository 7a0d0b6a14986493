"""Double P∞ checks."""

from precy_bench.models.algebra import PoissonAlgebra
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.models.report import AxiomReport
from precy_bench.pinfty.axioms import check_p_infinity
from precy_bench.storage.codec import WorkbenchDocument
from precy_bench.verifiers.base import BaseVerifier, Verification


class PInfinityVerifier(BaseVerifier):
    """
    Antisymmetry, DLeib∞ and DJac∞. A degree-0 bracket file is read as the
    family with ⟨…⟩_1 = ∂ and ⟨…⟩_2 = ⟨,⟩.
    """

    kinds = ("pinfty", "bracket")

    def verify(self, document: WorkbenchDocument) -> Verification:
        self.require(document)
        family: PInfinityFamily
        if isinstance(document.value, PoissonAlgebra):
            family = PInfinityFamily.from_double_poisson(
                document.value.algebra, document.value.bracket
            )
        else:
            family = document.value  # type: ignore[assignment]
        report: AxiomReport = check_p_infinity(family, self.mode, p_limit=self.max_n)
        return Verification(
            reports=[report],
            predicates=["double_p_infinity"] if report.passed else [],
        )
