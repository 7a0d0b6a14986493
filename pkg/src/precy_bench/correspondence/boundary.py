"""Square-zero extensions A ⊕ B#[d-1] and the boundary algebra ∂_{d-1}A."""

import logging
from collections import defaultdict
from fractions import Fraction

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.signs import parity
from precy_bench.graded.space import GradedSpace, dual_shift_space
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, BilinearForm, Part
from precy_bench.models.algebra import DgAlgebraData
from precy_bench.models.boundary import BoundaryAlgebra
from precy_bench.utils.exceptions import (
    MissingFormError,
    SpaceMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Entries = dict[Key, dict[Key, Fraction]]


def _nested() -> defaultdict[Key, defaultdict[Key, Fraction]]:
    return defaultdict(lambda: defaultdict(Fraction))


def _freeze(entries: defaultdict[Key, defaultdict[Key, Fraction]]) -> Entries:
    return {k: dict(v) for k, v in entries.items()}


def mixed_form(
    A: GradedSpace, B: GradedSpace, phi: MultiMap, shift: int
) -> BilinearForm:
    """
    γ_φ on A ⊕ B#[shift]: γ_φ(tf, a) = f(φ(a)),
    γ_φ(a, tf) = (-1)^{|a||tf|} f(φ(a)), zero on each summand squared.
    """
    total: GradedSpace = A.direct_sum(dual_shift_space(B, shift))
    n: int = A.dim
    values: dict[tuple[int, int], Fraction] = {}
    for (k,), out in phi.entries.items():
        for (r,), coeff in out.items():
            dual: int = total.degree(n + r)
            values[(n + r, k)] = coeff
            values[(k, n + r)] = parity(A.degree(k) * dual) * coeff
    return BilinearForm.from_pairs(total, shift, values)


def square_zero_extension(
    A: DgAlgebraData, B: DgAlgebraData, phi: MultiMap, d: int
) -> AInfinityData:
    """
    The dg algebra A ⊕ B#[d-1], with B# an A-bimodule through φ and
    (B#[d-1])² = 0.

    On t e_i* (e_i* dual to the i-th basis vector of B):
      t e_i* · a = Σ_j [φ(a) e_j]_i t e_j*
      a · t e_i* = (-1)^{(d-1)|a|} Σ_j (-1)^{|a|(|e_i*| + |e_j|)} [e_j φ(a)]_i t e_j*
      m_1(t e_h*) = (-1)^{|e_h*| + d} Σ_j ∂_{hj} t e_j*, where ∂e_j = Σ_h ∂_{hj} e_h.
    The form γ_φ is attached.
    """
    if phi.domain != (A.space,) or phi.codomain != (B.space,):
        raise SpaceMismatchError("φ must be a map A → B")
    shift: int = d - 1
    form: BilinearForm = mixed_form(A.space, B.space, phi, shift)
    total: GradedSpace = form.space
    n: int = A.space.dim
    b_space: GradedSpace = B.space

    m2 = _nested()
    for key, out in A.product.entries.items():
        for out_key, value in out.items():
            m2[key][out_key] += value
    for (k,), image in phi.entries.items():
        a_degree: int = A.space.degree(k)
        for (r,), phi_rk in image.items():
            for j in range(b_space.dim):
                for (i,), value in B.mul(r, j).items():
                    m2[(n + i, k)][(n + j,)] += phi_rk * value
                for (i,), value in B.mul(j, r).items():
                    exponent: int = shift * a_degree + a_degree * (
                        -b_space.degree(i) + b_space.degree(j)
                    )
                    m2[(k, n + i)][(n + j,)] += parity(exponent) * phi_rk * value

    m1 = _nested()
    for key, out in A.differential.entries.items():
        for out_key, value in out.items():
            m1[key][out_key] += value
    for (j,), out in B.differential.entries.items():
        for (h,), value in out.items():
            m1[(n + h,)][(n + j,)] += parity(d - b_space.degree(h)) * value

    parts: tuple[Part, ...] = (Part.A,) * n + (Part.D,) * b_space.dim
    ops: dict[int, MultiMap] = {
        1: MultiMap((total,), (total,), 1, _freeze(m1)),
        2: MultiMap((total, total), (total,), 0, _freeze(m2)),
    }
    logger.debug("Built square-zero extension of dimension %d", total.dim)
    return AInfinityData(total, parts, ops, form)


def boundary_algebra(A: DgAlgebraData, d: int) -> BoundaryAlgebra:
    """∂_{d-1}A: the square-zero extension by A#[d-1] with the natural form."""
    identity: MultiMap = MultiMap.identity(A.space)
    structure: AInfinityData = square_zero_extension(A, A, identity, d)
    logger.info("Built boundary algebra on %d generators, d=%d", A.space.dim, d)
    return BoundaryAlgebra(A, d, structure)


def reference_structure(S: BoundaryAlgebra) -> AInfinityData:
    """
    The plain square-zero extension of S.base, on the carrier of S: the
    structure S must match in arity 1 and 2 to be (fully) manageable.
    """
    plain: AInfinityData = boundary_algebra(S.base, S.d).total
    space: GradedSpace = S.space
    ops: dict[int, MultiMap] = {
        n: MultiMap((space,) * n, (space,), op.degree, op.entries)
        for n, op in plain.ops.items()
    }
    return AInfinityData(space, S.total.parts, ops, S.total.form)


def base_algebra_of(S: AInfinityData) -> DgAlgebraData:
    """
    (A, μ, ∂) read off the A-part of a structure whose A-part basis comes
    first.

    Raises:
        ValidationError: If the A-part is not an initial block or is not
            closed under m_1 and m_2
    """
    a_indices: list[int] = S.indices(Part.A)
    n: int = len(a_indices)
    if a_indices != list(range(n)):
        raise ValidationError("A-part basis must precede the D-part")
    space: GradedSpace = GradedSpace(S.space.basis[:n])
    tables: dict[int, Entries] = {}
    for arity in (1, 2):
        entries: Entries = {}
        for key, out in S.op(arity).entries.items():
            if any(i >= n for i in key):
                continue
            if any(k >= n for (k,) in out):
                raise ValidationError(
                    f"m_{arity} does not preserve the A-part at {key}"
                )
            entries[key] = dict(out)
        tables[arity] = entries
    return DgAlgebraData(
        space,
        MultiMap((space, space), (space,), 0, tables[2]),
        MultiMap((space,), (space,), 1, tables[1]),
    )


def boundary_from_structure(S: AInfinityData) -> BoundaryAlgebra:
    """
    Recognise a structure on A ⊕ A#[d-1] with the natural form as a
    boundary algebra; d is read from the form degree.

    Raises:
        MissingFormError: If S carries no form
        ValidationError: If the carrier is not the boundary space of its A-part
    """
    if S.form is None:
        raise MissingFormError("Boundary structures carry the natural form")
    base: DgAlgebraData = base_algebra_of(S)
    d: int = S.form.degree + 1
    expected: GradedSpace = base.space.direct_sum(dual_shift_space(base.space, d - 1))
    if S.space.degrees != expected.degrees:
        raise ValidationError(
            f"Carrier degrees do not match A ⊕ A#[{d - 1}] for the A-part"
        )
    if S.indices(Part.D) != list(range(base.space.dim, S.space.dim)):
        raise ValidationError("D-part must follow the A-part")
    natural: BilinearForm = mixed_form(
        base.space, base.space, MultiMap.identity(base.space), d - 1
    )
    if S.form.table.entries != natural.table.entries:
        raise ValidationError("Form is not the natural evaluation pairing")
    return BoundaryAlgebra(base, d, S)
