"""Structural predicates: small, essentially odd, good, special, nice."""

import logging
from typing import Optional

from precy_bench.ainfty.cyclic import (
    check_cyclic,
    check_ultracyclic,
    is_essentially_odd,
)
from precy_bench.ainfty.stasheff import stasheff_defect
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, Classification
from precy_bench.utils.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)


def _alternates(pattern: str) -> bool:
    return all(a != b for a, b in zip(pattern, pattern[1:]))


def goodness_failure(S: AInfinityData) -> Optional[tuple[int, Key]]:
    """
    First (arity, tuple) where an odd operation is not good.

    Good means m_n vanishes off alternating sector tuples and sends an
    alternating tuple into the summand of its first letter.
    """
    for n in sorted(S.ops):
        if n % 2 == 0:
            continue
        for key in S.ops[n].support():
            pattern: str = S.pattern(key)
            if not _alternates(pattern):
                return (n, key)
            for (k,) in S.ops[n].entries[key]:
                if S.part(k).value != pattern[0]:
                    return (n, key)
    return None


def is_dg_extension(S: AInfinityData) -> bool:
    """(B, m_2, m_1) is a dg algebra."""
    truncated: AInfinityData = S.with_ops({n: S.op(n) for n in (1, 2)})
    return all(stasheff_defect(truncated, n).is_zero() for n in (1, 2, 3))


def classify(
    S: AInfinityData, reference: Optional[AInfinityData] = None
) -> Classification:
    """
    Evaluate every predicate of S.

    Manageability compares m_2 (and m_1) with a reference structure on the
    same carrier; without one those predicates stay None.
    """
    small: bool = S.max_arity <= 3
    odd: bool = is_essentially_odd(S)
    failure: Optional[tuple[int, Key]] = goodness_failure(S) if odd else None
    good: bool = odd and failure is None
    special: bool = False
    if odd and S.form is not None:
        special = check_cyclic(S).passed and check_ultracyclic(S).passed
    manageable: Optional[bool] = None
    fully: Optional[bool] = None
    if reference is not None:
        if reference.space != S.space:
            raise SpaceMismatchError("Reference structure lives on another carrier")
        manageable = S.op(2).entries == reference.op(2).entries
        fully = manageable and S.op(1).entries == reference.op(1).entries
    result: Classification = Classification(
        fully_manageable_extension=is_dg_extension(S),
        small=small,
        essentially_odd=odd,
        good=good,
        special=special,
        nice=good and small,
        manageable=manageable,
        fully_manageable=fully,
        goodness_witness=failure,
    )
    logger.debug("Classified %r: %s", S, result.predicates())
    return result
