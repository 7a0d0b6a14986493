"""A∞ checks: Stasheff, cyclicity, ultracyclicity and classification."""

import logging
from typing import Optional

from precy_bench.ainfty.classify import classify
from precy_bench.ainfty.cyclic import (
    check_cyclic,
    check_ultracyclic,
    is_essentially_odd,
)
from precy_bench.ainfty.stasheff import check_stasheff
from precy_bench.correspondence.boundary import (
    boundary_from_structure,
    reference_structure,
)
from precy_bench.correspondence.sectors import (
    DISTINGUISHED_SECTORS,
    sector_reduction_check,
)
from precy_bench.models.ainfty import AInfinityData, Classification
from precy_bench.models.boundary import BoundaryAlgebra
from precy_bench.storage.codec import WorkbenchDocument
from precy_bench.utils.exceptions import MissingFormError, ValidationError
from precy_bench.verifiers.base import BaseVerifier, Verification

logger = logging.getLogger(__name__)


class AInfinityVerifier(BaseVerifier):
    """
    SI(n) up to `max_n`, cyclicity and ultracyclicity when a form is
    present, and the structural predicates.

    Structures recognised as boundary algebras are also classified against
    their square-zero extension and, when good, small and manageable,
    checked for the SI(4)/SI(5) sector reductions.
    """

    kinds = ("ainfty",)

    def verify(self, document: WorkbenchDocument) -> Verification:
        self.require(document)
        S: AInfinityData = document.value  # type: ignore[assignment]
        result: Verification = Verification(reports=[check_stasheff(S, self.max_n)])
        if S.form is not None:
            result.reports.append(check_cyclic(S))
            if is_essentially_odd(S):
                result.reports.append(check_ultracyclic(S, self.mode))

        boundary: Optional[BoundaryAlgebra] = None
        try:
            boundary = boundary_from_structure(S)
        except (MissingFormError, ValidationError) as e:
            logger.debug("Not a boundary structure: %s", e)
        classification: Classification = classify(
            S,
            reference=reference_structure(boundary) if boundary is not None else None,
        )
        result.predicates.extend(classification.predicates())

        if boundary is not None and not classification.require(
            "good", "small", "manageable"
        ):
            for n in sorted(DISTINGUISHED_SECTORS):
                if self.max_n is None or n <= self.max_n:
                    result.reports.append(sector_reduction_check(boundary, n))
        return result
