"""A∞-morphism identities MI(n) and form preservation."""

import logging
from collections.abc import Iterator
from typing import Optional

from precy_bench.graded.maps import MultiMap, compose, tensor_maps
from precy_bench.graded.signs import parity
from precy_bench.models.ainfty import BilinearForm, MorphismData
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import DimensionError, MissingFormError

logger = logging.getLogger(__name__)


def _compositions(n: int, parts: list[int]) -> Iterator[tuple[int, ...]]:
    """Ordered tuples from `parts` summing to n."""
    if n == 0:
        yield ()
        return
    for first in parts:
        if first <= n:
            for rest in _compositions(n - first, parts):
                yield (first,) + rest


def morphism_defect(F: MorphismData, n: int) -> MultiMap:
    """
    Σ (-1)^{r+st} f_{r+1+t}(id^r ⊗ m_s ⊗ id^t)
    - Σ (-1)^w m'_q(f_{i_1} ⊗ ... ⊗ f_{i_q}),
    w = Σ_j (q - j)(i_j - 1). The Koszul signs of the blockwise tensor
    product are carried by `tensor_maps`.
    """
    if n < 1:
        raise DimensionError(f"MI(n) needs n ≥ 1, got {n}")
    source = F.source
    target = F.target
    total: MultiMap = MultiMap.zero((source.space,) * n, (target.space,), 2 - n)
    for s in source.ops:
        for r in range(0, n - s + 1):
            t: int = n - s - r
            outer: int = r + 1 + t
            if outer not in F.components:
                continue
            term: MultiMap = compose(F.components[outer], source.ops[s], r)
            total = total + term.scale(parity(r + s * t))
    arities: list[int] = sorted(F.components)
    for split in _compositions(n, arities):
        q: int = len(split)
        if q not in target.ops:
            continue
        w: int = sum((q - j) * (i - 1) for j, i in enumerate(split, start=1))
        block: MultiMap = tensor_maps([F.components[i] for i in split])
        total = total - compose(target.ops[q], block, 0).scale(parity(w))
    return total


def check_morphism(F: MorphismData, n_max: Optional[int] = None) -> AxiomReport:
    """MI(n) for n = 1..n_max."""
    widest: int = max(F.source.max_arity, F.target.max_arity, F.max_arity, 1)
    limit: int = n_max if n_max is not None else 2 * widest - 1
    report: AxiomReport = AxiomReport(subject="A∞-morphism")
    for n in range(1, limit + 1):
        logger.debug("Evaluating MI(%d)", n)
        report.add(CheckResult.from_defect(f"MI({n})", morphism_defect(F, n)))
    return report


def form_preservation_defect(F: MorphismData) -> MultiMap:
    """γ - γ'∘(f_1 ⊗ f_1) for a strict morphism."""
    form: Optional[BilinearForm] = F.source.form
    other: Optional[BilinearForm] = F.target.form
    if form is None or other is None:
        raise MissingFormError("Both structures need a bilinear form")
    f1: MultiMap = F.component(1)
    return form.table - compose(other.table, tensor_maps([f1, f1]), 0)
