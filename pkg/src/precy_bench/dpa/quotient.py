"""The dg Lie structure induced on (A/[A,A])[d]."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from precy_bench.dpa.axioms import check_double_poisson
from precy_bench.graded import linalg
from precy_bench.graded.maps import MultiMap, compose, permutation_map
from precy_bench.graded.signs import SignedPermutation, parity
from precy_bench.graded.space import BasisElement, GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.algebra import DgAlgebraData, DoubleBracket
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import PreconditionError

logger = logging.getLogger(__name__)

DIFFERENTIAL_SIGN_NOTE: str = (
    "quotient differential: s^d ∂ s^-d with identity underlying suspensions "
    "(sign +1)"
)


@dataclass
class QuotientLieData:
    """Quotient (A/[A,A])[d] with its induced bracket and differential."""

    space: GradedSpace
    """Quotient basis, shifted by d"""

    representatives: list[int]
    """Indices in A of the basis elements chosen as class representatives"""

    commutators: list[list[Fraction]]
    """Row-reduced basis of [A,A] in A-coordinates"""

    bracket: MultiMap
    """{,}: Q ⊗ Q → Q of degree 0"""

    differential: MultiMap
    """δ: Q → Q of degree 1"""

    differential_sign: int = 1
    """Sign relating δ to ∂ on representatives"""

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.space.to_dict(),
            "bracket": self.bracket.to_dict(),
            "differential": self.differential.to_dict(),
            "differential_sign": self.differential_sign,
        }


class _Projector:
    """Coordinates of A/[A,A] with respect to the chosen representatives."""

    def __init__(self, A: DgAlgebraData) -> None:
        self.A = A
        space: GradedSpace = A.space
        self.commutators: list[list[Fraction]] = []
        self.representatives: list[int] = []
        # degree -> (indices of that degree, column basis, span size, chosen reps)
        self._blocks: dict[
            int, tuple[list[int], list[list[Fraction]], int, list[int]]
        ] = {}

        by_degree: dict[int, list[list[Fraction]]] = {}
        for p, q in space.tuples(2):
            vec: list[Fraction] = [Fraction(0)] * space.dim
            for (k,), v in A.mul(p, q).items():
                vec[k] += v
            sign: int = parity(space.degree(p) * space.degree(q))
            for (k,), v in A.mul(q, p).items():
                vec[k] -= sign * v
            if any(vec):
                degree: int = space.degree(p) + space.degree(q)
                by_degree.setdefault(degree, []).append(vec)

        for k in space.degrees_present():
            idx: list[int] = space.indices_of_degree(k)
            local: list[list[Fraction]] = [
                [vec[i] for i in idx] for vec in by_degree.get(k, [])
            ]
            span: list[list[Fraction]] = linalg.row_space(local, len(idx))
            chosen: list[int] = [
                idx[j] for j in linalg.complement_indices(span, len(idx))
            ]
            for row in span:
                full: list[Fraction] = [Fraction(0)] * space.dim
                for j, i in enumerate(idx):
                    full[i] = row[j]
                self.commutators.append(full)
            self.representatives.extend(chosen)
            columns: list[list[Fraction]] = span + [
                [Fraction(int(i == c)) for i in idx] for c in chosen
            ]
            self._blocks[k] = (idx, columns, len(span), chosen)
        self.representatives.sort()
        self.position: dict[int, int] = {
            r: n for n, r in enumerate(self.representatives)
        }

    def project(self, coords: dict[Key, Fraction]) -> dict[Key, Fraction]:
        """Class of a vector, as coordinates on the representatives."""
        result: dict[Key, Fraction] = {}
        for k, (idx, columns, n_span, chosen) in self._blocks.items():
            target: list[Fraction] = [coords.get((i,), Fraction(0)) for i in idx]
            if not any(target):
                continue
            solution: Optional[list[Fraction]] = linalg.solve(columns, target)
            if solution is None:
                raise ValueError(f"Projection failed in degree {k}")
            for rep, value in zip(chosen, solution[n_span:]):
                if value:
                    result[(self.position[rep],)] = value
        return result


def _multiply_out(A: DgAlgebraData, tensor: dict[Key, Fraction]) -> dict[Key, Fraction]:
    """μ applied to an element of A ⊗ A."""
    result: dict[Key, Fraction] = {}
    for (k, m), c in tensor.items():
        for out, v in A.mul(k, m).items():
            result[out] = result.get(out, Fraction(0)) + c * v
    return result


def _bracket_rows(
    br: DoubleBracket, a: int, row: list[Fraction], left: bool
) -> dict[Key, Fraction]:
    """⟨e_a, w⟩ (left=True) or ⟨w, e_a⟩ for w given by coordinates."""
    result: dict[Key, Fraction] = {}
    for k, w in enumerate(row):
        if not w:
            continue
        value: dict[Key, Fraction] = br.value(a, k) if left else br.value(k, a)
        for out, v in value.items():
            result[out] = result.get(out, Fraction(0)) + w * v
    return result


def induced_quotient_lie(
    A: DgAlgebraData, br: DoubleBracket
) -> tuple[QuotientLieData, AxiomReport]:
    """
    Bracket {,} = project∘μ∘⟨,⟩ and differential on (A/[A,A])[d].

    Verifies well-definedness, graded antisymmetry, Jacobi, the derivation
    rule for the differential and δ² = 0.

    Raises:
        PreconditionError: If the bracket is not double Poisson
    """
    poisson: AxiomReport = check_double_poisson(A, br)
    if not poisson.passed:
        raise PreconditionError("Bracket is not a double Poisson bracket", poisson)

    space: GradedSpace = A.space
    d: int = br.d
    projector: _Projector = _Projector(A)
    reps: list[int] = projector.representatives
    quotient: GradedSpace = GradedSpace(
        tuple(BasisElement(f"[{space.symbol(i)}]", space.degree(i) - d) for i in reps)
    )
    logger.debug("Quotient by commutators has dimension %d", quotient.dim)

    bracket_entries: dict[Key, dict[Key, Fraction]] = {}
    for a, i in enumerate(reps):
        for b, j in enumerate(reps):
            value: dict[Key, Fraction] = projector.project(
                _multiply_out(A, br.value(i, j))
            )
            if value:
                bracket_entries[(a, b)] = value
    bracket: MultiMap = MultiMap((quotient, quotient), (quotient,), 0, bracket_entries)

    diff_entries: dict[Key, dict[Key, Fraction]] = {}
    for a, i in enumerate(reps):
        value = projector.project(dict(A.diff(i)))
        if value:
            diff_entries[(a,)] = value
    differential: MultiMap = MultiMap((quotient,), (quotient,), 1, diff_entries)

    report: AxiomReport = AxiomReport(subject="quotient dg Lie algebra")
    report.notes.append(DIFFERENTIAL_SIGN_NOTE)

    commutator_space: GradedSpace = GradedSpace(
        tuple(
            BasisElement(
                f"c{n + 1}", space.degree(next(k for k, v in enumerate(row) if v))
            )
            for n, row in enumerate(projector.commutators)
        )
    )
    for name, left in (("well_defined_right", True), ("well_defined_left", False)):
        entries: dict[Key, dict[Key, Fraction]] = {}
        for a in range(space.dim):
            for n, row in enumerate(projector.commutators):
                value = projector.project(
                    _multiply_out(A, _bracket_rows(br, a, row, left))
                )
                if value:
                    entries[(a, n) if left else (n, a)] = value
        domain: tuple[GradedSpace, GradedSpace] = (
            (space, commutator_space) if left else (commutator_space, space)
        )
        report.add(
            CheckResult.from_defect(
                name, MultiMap(domain, (quotient,), -2 * d, entries)
            )
        )
    stable: dict[Key, dict[Key, Fraction]] = {}
    for n, row in enumerate(projector.commutators):
        image: dict[Key, Fraction] = {}
        for k, w in enumerate(row):
            for out, v in A.diff(k).items():
                image[out] = image.get(out, Fraction(0)) + w * v
        value = projector.project(image)
        if value:
            stable[(n,)] = value
    report.add(
        CheckResult.from_defect(
            "differential_preserves_commutators",
            MultiMap((commutator_space,), (quotient,), 1 - d, stable),
        )
    )

    swap2: MultiMap = permutation_map(
        SignedPermutation.transposition(1, 2, 2), (quotient, quotient)
    )
    swap3: MultiMap = permutation_map(
        SignedPermutation.transposition(1, 2, 3), (quotient,) * 3
    )
    report.add(
        CheckResult.from_defect("lie_antisymmetry", bracket + compose(bracket, swap2))
    )
    inner_right: MultiMap = compose(bracket, bracket, 1)
    report.add(
        CheckResult.from_defect(
            "lie_jacobi",
            inner_right - compose(bracket, bracket, 0) - compose(inner_right, swap3),
        )
    )
    report.add(
        CheckResult.from_defect(
            "lie_derivation",
            compose(differential, bracket)
            - compose(bracket, differential, 0)
            - compose(bracket, differential, 1),
        )
    )
    report.add(
        CheckResult.from_defect(
            "lie_differential_squared", compose(differential, differential)
        )
    )

    data: QuotientLieData = QuotientLieData(
        space=quotient,
        representatives=reps,
        commutators=projector.commutators,
        bracket=bracket,
        differential=differential,
    )
    return data, report
