"""Double Poisson axioms checked through their element-level identities."""

import logging
from collections import defaultdict
from fractions import Fraction

from precy_bench.graded.maps import (
    MultiMap,
    compose,
    permutation_map,
    tensor_maps,
    tensor_of_maps,
)
from precy_bench.graded.signs import SignedPermutation, parity, permute_tensor
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key, Tensor
from precy_bench.models.algebra import DgAlgebraData, DoubleBracket
from precy_bench.models.report import AxiomReport, CheckResult
from precy_bench.utils.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)

Coords = dict[Key, Fraction]


def _require_same_space(A: DgAlgebraData, br: DoubleBracket) -> GradedSpace:
    if br.space != A.space:
        raise SpaceMismatchError("Bracket is not defined over the algebra's space")
    return A.space


def _accumulate(target: dict[Key, Fraction], source: Coords, factor: Fraction) -> None:
    for key, value in source.items():
        target[key] = target.get(key, Fraction(0)) + factor * value


def _times_right(A: DgAlgebraData, tensor: Coords, b: int) -> Coords:
    """x' ⊗ x''b."""
    result: dict[Key, Fraction] = defaultdict(Fraction)
    for (i, j), c in tensor.items():
        for (k,), v in A.mul(j, b).items():
            result[(i, k)] += c * v
    return dict(result)


def _times_left(A: DgAlgebraData, a: int, tensor: Coords) -> Coords:
    """a x' ⊗ x''."""
    result: dict[Key, Fraction] = defaultdict(Fraction)
    for (i, j), c in tensor.items():
        for (k,), v in A.mul(a, i).items():
            result[(k, j)] += c * v
    return dict(result)


def _bracket_with_vector(br: DoubleBracket, c: int, vec: Coords) -> Coords:
    """⟨e_c, Σ v_k e_k⟩."""
    result: dict[Key, Fraction] = {}
    for (k,), v in vec.items():
        _accumulate(result, br.value(c, k), v)
    return result


def _vector_with_bracket(br: DoubleBracket, vec: Coords, c: int) -> Coords:
    """⟨Σ v_k e_k, e_c⟩."""
    result: dict[Key, Fraction] = {}
    for (k,), v in vec.items():
        _accumulate(result, br.value(k, c), v)
    return result


def check_dg_algebra(A: DgAlgebraData) -> AxiomReport:
    """Associativity, ∂² = 0 and the Leibniz rule for ∂."""
    mu: MultiMap = A.product
    delta: MultiMap = A.differential
    report: AxiomReport = AxiomReport(subject="dg algebra")
    report.add(
        CheckResult.from_defect(
            "associativity", compose(mu, mu, 0) - compose(mu, mu, 1)
        )
    )
    report.add(CheckResult.from_defect("differential_squared", compose(delta, delta)))
    report.add(
        CheckResult.from_defect(
            "differential_leibniz",
            compose(delta, mu) - compose(mu, delta, 0) - compose(mu, delta, 1),
        )
    )
    return report


def antisymmetry_defect(A: DgAlgebraData, br: DoubleBracket) -> MultiMap:
    """(p, q) ↦ τ(⟨q,p⟩) + (-1)^{(|p|-d)(|q|-d)} ⟨p,q⟩."""
    space: GradedSpace = _require_same_space(A, br)
    swap: SignedPermutation = SignedPermutation.transposition(1, 2, 2)
    d: int = br.d
    entries: dict[Key, Coords] = {}
    for p, q in space.tuples(2):
        flipped: Tensor = permute_tensor(swap, br.table.image((q, p)))
        sign: int = parity((space.degree(p) - d) * (space.degree(q) - d))
        defect: Tensor = flipped + br.table.image((p, q)).scale(sign)
        if not defect.is_zero():
            entries[(p, q)] = defect.coords
    return MultiMap((space, space), (space, space), -d, entries)


def check_antisymmetry(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """τ(⟨b,a⟩) = -(-1)^{(|a|-d)(|b|-d)} ⟨a,b⟩ on all basis pairs."""
    logger.debug("Checking antisymmetry on %d pairs", A.space.dim**2)
    report: AxiomReport = AxiomReport(subject="double bracket")
    report.add(CheckResult.from_defect("antisymmetry", antisymmetry_defect(A, br)))
    return report


def leibniz_defect(A: DgAlgebraData, br: DoubleBracket) -> MultiMap:
    """(c, a, b) ↦ ⟨c,ab⟩ - ⟨c,a⟩b - (-1)^{(|c|-d)|a|} a⟨c,b⟩."""
    space: GradedSpace = _require_same_space(A, br)
    d: int = br.d
    entries: dict[Key, Coords] = {}
    for c, a, b in space.tuples(3):
        total: dict[Key, Fraction] = dict(_bracket_with_vector(br, c, A.mul(a, b)))
        _accumulate(total, _times_right(A, br.value(c, a), b), Fraction(-1))
        sign: int = parity((space.degree(c) - d) * space.degree(a))
        _accumulate(total, _times_left(A, a, br.value(c, b)), Fraction(-sign))
        total = {k: v for k, v in total.items() if v}
        if total:
            entries[(c, a, b)] = total
    return MultiMap((space,) * 3, (space, space), -d, entries)


def check_leibniz(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """Double-derivation rule in the second argument, outer bimodule structure."""
    logger.debug("Checking Leibniz on %d triples", A.space.dim**3)
    report: AxiomReport = AxiomReport(subject="double bracket")
    report.add(CheckResult.from_defect("leibniz", leibniz_defect(A, br)))
    return report


def leibniz_uform_defect(A: DgAlgebraData, br: DoubleBracket) -> MultiMap:
    """
    ⟨,⟩^u∘(id⊗μ) - (id⊗μ)∘(⟨,⟩^u⊗id) - (μ⊗id)∘(id⊗⟨,⟩^u)∘(τ⊗id),
    where ⟨a,b⟩^u = (-1)^{d|a|} ⟨a,b⟩.
    """
    space: GradedSpace = _require_same_space(A, br)
    d: int = br.d
    u_entries: dict[Key, Coords] = {
        (p, q): {k: parity(d * space.degree(p)) * v for k, v in out.items()}
        for (p, q), out in br.table.entries.items()
    }
    u_form: MultiMap = MultiMap((space, space), (space, space), -d, u_entries)
    identity: MultiMap = MultiMap.identity(space)
    mu: MultiMap = A.product
    swap: MultiMap = permutation_map(
        SignedPermutation.transposition(1, 2, 2), (space, space)
    )

    lhs: MultiMap = compose(u_form, mu, 1)
    first: MultiMap = compose(
        tensor_maps([identity, mu]), tensor_maps([u_form, identity])
    )
    second: MultiMap = compose(
        compose(tensor_maps([mu, identity]), tensor_maps([identity, u_form])),
        tensor_maps([swap, identity]),
    )
    return lhs - first - second


def check_leibniz_uform(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """Leibniz rule in its u-form; must agree with `check_leibniz`."""
    report: AxiomReport = AxiomReport(subject="double bracket")
    report.add(CheckResult.from_defect("leibniz_uform", leibniz_uform_defect(A, br)))
    return report


def closed_defect(A: DgAlgebraData, br: DoubleBracket) -> MultiMap:
    """(∂⊗id + id⊗∂)⟨a,b⟩ - ⟨∂a,b⟩ - (-1)^{|a|+d} ⟨a,∂b⟩."""
    space: GradedSpace = _require_same_space(A, br)
    d: int = br.d
    identity: MultiMap = MultiMap.identity(space)
    boundary: MultiMap = tensor_of_maps(A.differential, identity) + tensor_of_maps(
        identity, A.differential
    )
    lhs: MultiMap = compose(boundary, br.table)
    entries: dict[Key, Coords] = {}
    for a, b in space.tuples(2):
        total: dict[Key, Fraction] = dict(lhs.value((a, b)))
        _accumulate(total, _vector_with_bracket(br, A.diff(a), b), Fraction(-1))
        sign: int = parity(space.degree(a) + d)
        _accumulate(total, _bracket_with_vector(br, a, A.diff(b)), Fraction(-sign))
        total = {k: v for k, v in total.items() if v}
        if total:
            entries[(a, b)] = total
    return MultiMap((space, space), (space, space), 1 - d, entries)


def check_closed(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """Compatibility of the bracket with the differential."""
    report: AxiomReport = AxiomReport(subject="double bracket")
    report.add(CheckResult.from_defect("closed", closed_defect(A, br)))
    return report


def nested_left(br: DoubleBracket, x: int, y: int, z: int) -> Tensor:
    """⟨x,⟨y,z⟩⟩_L = Σ ⟨x,⟨y,z⟩'⟩ ⊗ ⟨y,z⟩''."""
    space: GradedSpace = br.space
    result: dict[Key, Fraction] = {}
    for (i, j), c in br.value(y, z).items():
        for (k, m), v in br.value(x, i).items():
            key: Key = (k, m, j)
            result[key] = result.get(key, Fraction(0)) + c * v
    return Tensor((space,) * 3, result)


def jacobi_defect(A: DgAlgebraData, br: DoubleBracket) -> MultiMap:
    """
    (a, b, c) ↦ ⟨c,⟨b,a⟩⟩_L + (-1)^{(|c|+d)(|a|+|b|)} σ⟨b,⟨a,c⟩⟩_L
    + (-1)^{(|a|+d)(|b|+|c|)} σ²⟨a,⟨c,b⟩⟩_L, σ the cyclic permutation 1 → 2 → 3.
    """
    space: GradedSpace = _require_same_space(A, br)
    d: int = br.d
    sigma: SignedPermutation = SignedPermutation.cycle(3)
    sigma_sq: SignedPermutation = sigma * sigma
    entries: dict[Key, Coords] = {}
    for a, b, c in space.tuples(3):
        da, db, dc = space.degree(a), space.degree(b), space.degree(c)
        total: Tensor = nested_left(br, c, b, a)
        total = total + permute_tensor(sigma, nested_left(br, b, a, c)).scale(
            parity((dc + d) * (da + db))
        )
        total = total + permute_tensor(sigma_sq, nested_left(br, a, c, b)).scale(
            parity((da + d) * (db + dc))
        )
        if not total.is_zero():
            entries[(a, b, c)] = total.coords
    return MultiMap((space,) * 3, (space,) * 3, -2 * d, entries)


def check_double_jacobi(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """Three-term cyclic double Jacobi identity on all basis triples."""
    logger.debug("Checking double Jacobi on %d triples", A.space.dim**3)
    report: AxiomReport = AxiomReport(subject="double bracket")
    report.add(CheckResult.from_defect("double_jacobi", jacobi_defect(A, br)))
    return report


def check_double_poisson(A: DgAlgebraData, br: DoubleBracket) -> AxiomReport:
    """Antisymmetry, Leibniz, double Jacobi and closedness together."""
    report: AxiomReport = AxiomReport(subject="double Poisson bracket")
    for check in (check_antisymmetry, check_leibniz, check_double_jacobi, check_closed):
        report.extend(check(A, br))
    logger.info("Double Poisson check: %s", "pass" if report.passed else "fail")
    return report


def antisymmetrize(A: DgAlgebraData, br: DoubleBracket) -> DoubleBracket:
    """
    ½(⟨p,q⟩ - (-1)^{(|p|-d)(|q|-d)} τ⟨q,p⟩): the projector onto brackets
    satisfying antisymmetry.
    """
    space: GradedSpace = _require_same_space(A, br)
    swap: SignedPermutation = SignedPermutation.transposition(1, 2, 2)
    d: int = br.d
    half: Fraction = Fraction(1, 2)
    entries: dict[Key, Coords] = {}
    for p, q in space.tuples(2):
        sign: int = parity((space.degree(p) - d) * (space.degree(q) - d))
        mirrored: Tensor = permute_tensor(swap, br.table.image((q, p))).scale(-sign)
        value: Tensor = (br.table.image((p, q)) + mirrored).scale(half)
        if not value.is_zero():
            entries[(p, q)] = value.coords
    return DoubleBracket(d, MultiMap((space, space), (space, space), -d, entries))
