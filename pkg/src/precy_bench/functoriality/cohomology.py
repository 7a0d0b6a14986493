"""Cohomology ranks and quasi-isomorphism checks by exact row reduction."""

import logging
from fractions import Fraction

from precy_bench.graded import linalg
from precy_bench.graded.maps import MultiMap, compose
from precy_bench.graded.space import GradedSpace
from precy_bench.models.ainfty import MorphismData
from precy_bench.utils.exceptions import DifferentialError, DimensionError

logger = logging.getLogger(__name__)


def _rows(
    f: MultiMap, sources: list[int], targets: list[int]
) -> list[list[Fraction]]:
    """Images of the `sources` basis vectors, in `targets` coordinates."""
    position: dict[int, int] = {t: i for i, t in enumerate(targets)}
    rows: list[list[Fraction]] = []
    for s in sources:
        row: list[Fraction] = [Fraction(0)] * len(targets)
        for (t,), value in f.value((s,)).items():
            row[position[t]] = value
        rows.append(row)
    return rows


def _image_rows(
    space: GradedSpace, differential: MultiMap, degree: int
) -> list[list[Fraction]]:
    """Spanning rows of im(∂) in degree `degree`."""
    return _rows(
        differential,
        space.indices_of_degree(degree - 1),
        space.indices_of_degree(degree),
    )


def _require_differential(space: GradedSpace, differential: MultiMap) -> None:
    if differential.domain != (space,) or differential.codomain != (space,):
        raise DimensionError("Differential must be an endomorphism of the space")
    if not compose(differential, differential).is_zero():
        raise DifferentialError("Differential does not square to zero")


def cohomology(space: GradedSpace, differential: MultiMap) -> dict[int, int]:
    """
    dim H^k = dim ker ∂_k - rank ∂_{k-1} for every degree present.

    Raises:
        DifferentialError: If ∂² ≠ 0
    """
    _require_differential(space, differential)
    ranks: dict[int, int] = {}
    for k in space.degrees_present():
        here: list[int] = space.indices_of_degree(k)
        outgoing: int = linalg.rank(
            _rows(differential, here, space.indices_of_degree(k + 1)),
            len(space.indices_of_degree(k + 1)),
        )
        incoming: int = linalg.rank(_image_rows(space, differential, k), len(here))
        ranks[k] = len(here) - outgoing - incoming
    return ranks


def induced_rank(
    source: GradedSpace,
    source_diff: MultiMap,
    target: GradedSpace,
    target_diff: MultiMap,
    f: MultiMap,
    degree: int,
) -> int:
    """Rank of H^k(f): H^k(source) → H^k(target)."""
    here: list[int] = source.indices_of_degree(degree)
    there: list[int] = target.indices_of_degree(degree)
    if not here or not there:
        return 0
    outgoing: list[list[Fraction]] = _rows(
        source_diff, here, source.indices_of_degree(degree + 1)
    )
    # cycles: kernel of the transpose of the row matrix
    columns: list[list[Fraction]] = [list(col) for col in zip(*outgoing)]
    cycles: list[list[Fraction]] = linalg.nullspace(columns, len(here))
    boundaries: list[list[Fraction]] = _image_rows(target, target_diff, degree)
    f_rows: list[list[Fraction]] = _rows(f, here, there)
    images: list[list[Fraction]] = [
        [
            sum((z[i] * f_rows[i][j] for i in range(len(here))), Fraction(0))
            for j in range(len(there))
        ]
        for z in cycles
    ]
    base: int = linalg.rank(boundaries, len(there))
    return linalg.rank(boundaries + images, len(there)) - base


def check_quasi_iso(F: MorphismData) -> bool:
    """
    Whether the strict map f_1 induces isomorphisms on cohomology in every
    degree.

    Raises:
        DifferentialError: If f_1 is not a chain map
    """
    f: MultiMap = F.component(1)
    source: GradedSpace = F.source.space
    target: GradedSpace = F.target.space
    source_diff: MultiMap = F.source.op(1)
    target_diff: MultiMap = F.target.op(1)
    if not (compose(f, source_diff) - compose(target_diff, f)).is_zero():
        raise DifferentialError("f_1 is not a chain map")
    h_source: dict[int, int] = cohomology(source, source_diff)
    h_target: dict[int, int] = cohomology(target, target_diff)
    for k in sorted(set(h_source) | set(h_target)):
        dim: int = h_source.get(k, 0)
        if dim != h_target.get(k, 0):
            logger.debug("H^%d dimensions differ: %d vs %d", k, dim, h_target.get(k, 0))
            return False
        if dim and induced_rank(source, source_diff, target, target_diff, f, k) != dim:
            logger.debug("H^%d(f) is not injective", k)
            return False
    return True
