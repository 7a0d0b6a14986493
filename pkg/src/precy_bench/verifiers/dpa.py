"""Double Poisson dg algebra checks."""

import logging

from precy_bench.dpa.axioms import (
    check_dg_algebra,
    check_double_poisson,
    check_leibniz_uform,
)
from precy_bench.dpa.quotient import induced_quotient_lie
from precy_bench.models.algebra import PoissonAlgebra
from precy_bench.models.report import AxiomReport
from precy_bench.storage.codec import WorkbenchDocument
from precy_bench.verifiers.base import BaseVerifier, Verification

logger = logging.getLogger(__name__)


class DpaVerifier(BaseVerifier):
    """dg algebra axioms, the four bracket axioms and the quotient Lie structure."""

    kinds = ("algebra", "bracket")

    def verify(self, document: WorkbenchDocument) -> Verification:
        self.require(document)
        value: PoissonAlgebra = document.value  # type: ignore[assignment]
        dg: AxiomReport = check_dg_algebra(value.algebra)
        poisson: AxiomReport = check_double_poisson(value.algebra, value.bracket)
        uform: AxiomReport = check_leibniz_uform(value.algebra, value.bracket)
        result: Verification = Verification(reports=[dg, poisson, uform])
        if dg.passed:
            result.predicates.append("dg_algebra")
        if poisson.passed:
            result.predicates.append("double_poisson")
            if dg.passed:
                _, quotient = induced_quotient_lie(value.algebra, value.bracket)
                result.reports.append(quotient)
        logger.debug("Verified double Poisson axioms: %s", result.predicates)
        return result
