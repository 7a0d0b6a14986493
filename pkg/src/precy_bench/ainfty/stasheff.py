"""Stasheff identities SI(n) and their essentially-odd reductions."""

import logging
from typing import Optional

from precy_bench.graded.maps import MultiMap, compose
from precy_bench.graded.signs import parity
from precy_bench.models.ainfty import AInfinityData
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import DimensionError

logger = logging.getLogger(__name__)


def default_n_max(S: AInfinityData) -> int:
    """Largest n for which SI(n) can contain a nonvanishing composite."""
    return max(1, 2 * S.max_arity - 1)


def stasheff_defect(S: AInfinityData, n: int) -> MultiMap:
    """
    Σ_{r+s+t=n} (-1)^{r+st} m_{r+1+t} ∘ (id^{⊗r} ⊗ m_s ⊗ id^{⊗t}).

    Raises:
        DimensionError: If n < 1
    """
    if n < 1:
        raise DimensionError(f"SI(n) needs n ≥ 1, got {n}")
    total: MultiMap = MultiMap.zero((S.space,) * n, (S.space,), 3 - n)
    for s in range(1, n + 1):
        if s not in S.ops:
            continue
        for r in range(0, n - s + 1):
            t: int = n - s - r
            outer: int = r + 1 + t
            if outer not in S.ops:
                continue
            term: MultiMap = compose(S.ops[outer], S.ops[s], r)
            total = total + term.scale(parity(r + s * t))
    return total


def check_stasheff(S: AInfinityData, n_max: Optional[int] = None) -> AxiomReport:
    """SI(n) for n = 1..n_max; n_max defaults to 2·max_arity - 1."""
    limit: int = n_max if n_max is not None else default_n_max(S)
    if limit < 1:
        raise DimensionError(f"n_max must be at least 1, got {limit}")
    report: AxiomReport = AxiomReport(subject="A∞ structure")
    for n in range(1, limit + 1):
        logger.debug("Evaluating SI(%d)", n)
        report.add(CheckResult.from_defect(f"SI({n})", stasheff_defect(S, n)))
    return report


def reduced_even_defect(S: AInfinityData, p: int) -> MultiMap:
    """
    SI(2p) of an essentially odd structure:
    Σ_{r=0}^{2p-2} (-1)^r m_{2p-1}∘(id^r ⊗ m_2 ⊗ id^{2p-2-r})
    - m_2∘(m_{2p-1} ⊗ id + id ⊗ m_{2p-1}).
    """
    n: int = 2 * p
    odd: MultiMap = S.op(2 * p - 1)
    m2: MultiMap = S.op(2)
    total: MultiMap = MultiMap.zero((S.space,) * n, (S.space,), 3 - n)
    for r in range(0, 2 * p - 1):
        total = total + compose(odd, m2, r).scale(parity(r))
    return total - compose(m2, odd, 0) - compose(m2, odd, 1)


def reduced_odd_defect(S: AInfinityData, p: int) -> MultiMap:
    """
    SI(2p-1) of an essentially odd structure:
    δ_{p,2} m_2∘(m_2 ⊗ id - id ⊗ m_2)
    + Σ_{i=1}^{p} Σ_r m_{2i-1}∘(id^r ⊗ m_{2(p-i)+1} ⊗ id^{2i-2-r}).
    """
    n: int = 2 * p - 1
    total: MultiMap = MultiMap.zero((S.space,) * n, (S.space,), 3 - n)
    if p == 2:
        m2: MultiMap = S.op(2)
        total = total + compose(m2, m2, 0) - compose(m2, m2, 1)
    for i in range(1, p + 1):
        outer: MultiMap = S.op(2 * i - 1)
        inner: MultiMap = S.op(2 * (p - i) + 1)
        for r in range(0, 2 * i - 1):
            total = total + compose(outer, inner, r)
    return total
