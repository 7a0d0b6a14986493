"""Small hand-checked algebras, brackets and structures used across the tests."""

import itertools
from collections.abc import Iterator, Mapping, Sequence
from fractions import Fraction
from typing import Union

from precy_bench.dpa.axioms import antisymmetrize
from precy_bench.graded.maps import MultiMap, sum_maps
from precy_bench.graded.signs import SignedPermutation
from precy_bench.graded.space import GradedSpace, tuple_degree
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, Part
from precy_bench.models.algebra import (
    DgAlgebraData,
    DoubleBracket,
    DpaMorphism,
    PoissonAlgebra,
)
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.pinfty.axioms import conjugate

Coeff = Union[int, Fraction]
Table = Mapping[tuple[str, ...], Mapping[tuple[str, ...], Coeff]]

GRID: tuple[int, ...] = (-1, 0, 1)


def table(
    space: GradedSpace, arity: int, coarity: int, degree: int, values: Table
) -> MultiMap:
    """A map over a single space, written with basis symbols."""
    entries: dict[Key, dict[Key, Fraction]] = {}
    for args, out in values.items():
        key: Key = tuple(space.index(s) for s in args)
        entries[key] = {
            tuple(space.index(s) for s in factors): Fraction(c)
            for factors, c in out.items()
        }
    return MultiMap((space,) * arity, (space,) * coarity, degree, entries)


def algebra(
    space: GradedSpace,
    product: Table | None = None,
    differential: Table | None = None,
) -> DgAlgebraData:
    return DgAlgebraData(
        space,
        table(space, 2, 1, 0, product or {}),
        table(space, 1, 1, 1, differential or {}),
    )


def poisson(A: DgAlgebraData, d: int, bracket: Table | None = None) -> PoissonAlgebra:
    return PoissonAlgebra(A, DoubleBracket(d, table(A.space, 2, 2, -d, bracket or {})))


# ========== Algebras ==========


def line() -> DgAlgebraData:
    """span{x}, |x| = 0, everything zero."""
    return algebra(GradedSpace.from_pairs([("x", 0)]))


def ground_field() -> DgAlgebraData:
    """span{e} with e·e = e."""
    space = GradedSpace.from_pairs([("e", 0)])
    return algebra(space, {("e", "e"): {("e",): 1}})


def dual_numbers() -> DgAlgebraData:
    """k[n]/n² with unit e, in degree 0."""
    space = GradedSpace.from_pairs([("e", 0), ("n", 0)])
    return algebra(
        space,
        {
            ("e", "e"): {("e",): 1},
            ("e", "n"): {("n",): 1},
            ("n", "e"): {("n",): 1},
        },
    )


def nilpotent_pair_algebra() -> DgAlgebraData:
    """span{x, y} in degree 0 with zero product."""
    return algebra(GradedSpace.from_pairs([("x", 0), ("y", 0)]))


def acyclic_pair() -> DgAlgebraData:
    """x → y with |x| = 0, |y| = 1, zero product."""
    space = GradedSpace.from_pairs([("x", 0), ("y", 1)])
    return algebra(space, differential={("x",): {("y",): 1}})


def two_points() -> DgAlgebraData:
    """span{x, w} in degree 0, zero product and differential."""
    return algebra(GradedSpace.from_pairs([("x", 0), ("w", 0)]))


def odd_pair_algebra() -> DgAlgebraData:
    """span{x, y}, |x| = 0, |y| = 1, zero product and differential."""
    return algebra(GradedSpace.from_pairs([("x", 0), ("y", 1)]))


def exterior_algebra() -> DgAlgebraData:
    """Λ(y) with unit e and |y| = 1."""
    space = GradedSpace.from_pairs([("e", 0), ("y", 1)])
    return algebra(
        space,
        {
            ("e", "e"): {("e",): 1},
            ("e", "y"): {("y",): 1},
            ("y", "e"): {("y",): 1},
        },
    )


def left_ideal() -> DgAlgebraData:
    """span{a, c} with a·a = a, a·c = c, as e11 and e12 in 2×2 matrices."""
    space = GradedSpace.from_pairs([("a", 0), ("c", 0)])
    return algebra(space, {("a", "a"): {("a",): 1}, ("a", "c"): {("c",): 1}})


def upper_triangular() -> DgAlgebraData:
    """Upper-triangular 2×2 matrices on e11, e12, e22."""
    space = GradedSpace.from_pairs([("e11", 0), ("e12", 0), ("e22", 0)])
    return algebra(
        space,
        {
            ("e11", "e11"): {("e11",): 1},
            ("e11", "e12"): {("e12",): 1},
            ("e12", "e22"): {("e12",): 1},
            ("e22", "e22"): {("e22",): 1},
        },
    )


def graded_chain() -> DgAlgebraData:
    """|x| = 0, |y| = 1, |z| = 2, ∂y = z, zero product."""
    space = GradedSpace.from_pairs([("x", 0), ("y", 1), ("z", 2)])
    return algebra(space, differential={("y",): {("z",): 1}})


def split_quad() -> DgAlgebraData:
    """x, z in degree 0 and y, w in degree 1, zero product."""
    return algebra(
        GradedSpace.from_pairs([("x", 0), ("y", 1), ("w", 1), ("z", 0)])
    )


def acyclic_plus_point() -> DgAlgebraData:
    """x → y next to a closed w, zero product; cohomology is spanned by w."""
    space = GradedSpace.from_pairs([("x", 0), ("y", 1), ("w", 0)])
    return algebra(space, differential={("x",): {("y",): 1}})


# ========== Brackets ==========


def zero_bracket(d: int = 0) -> PoissonAlgebra:
    return poisson(line(), d)


def nilpotent_pair() -> PoissonAlgebra:
    """⟨x,x⟩ = x⊗y - y⊗x on the zero-product pair; double Poisson, d = 0."""
    return poisson(
        nilpotent_pair_algebra(), 0, {("x", "x"): {("x", "y"): 1, ("y", "x"): -1}}
    )


def odd_pair() -> PoissonAlgebra:
    """|x| = 0, |y| = 1, ⟨y,y⟩ = x⊗y - y⊗x; double Poisson of degree -1."""
    space = GradedSpace.from_pairs([("x", 0), ("y", 1)])
    return poisson(algebra(space), 1, {("y", "y"): {("x", "y"): 1, ("y", "x"): -1}})


def broken_jacobi() -> PoissonAlgebra:
    """⟨x,y⟩ = x⊗y, ⟨y,x⟩ = -y⊗x: antisymmetric and Leibniz, Jacobi fails."""
    return poisson(
        nilpotent_pair_algebra(),
        0,
        {("x", "y"): {("x", "y"): 1}, ("y", "x"): {("y", "x"): -1}},
    )


def self_bracket() -> PoissonAlgebra:
    """⟨x,x⟩ = x⊗x on the line: antisymmetry fails."""
    return poisson(line(), 0, {("x", "x"): {("x", "x"): 1}})


def dual_numbers_bracket() -> PoissonAlgebra:
    """⟨n,n⟩ = e⊗n - n⊗e on k[n]/n²; double Poisson with a unit, d = 0."""
    return poisson(dual_numbers(), 0, {("n", "n"): {("e", "n"): 1, ("n", "e"): -1}})


def upper_triangular_bracket() -> PoissonAlgebra:
    """
    A double Poisson bracket on upper-triangular matrices, d = 0.

    Every class of A/[A,A] is an idempotent, so the induced bracket vanishes
    although the double bracket does not.
    """
    return poisson(
        upper_triangular(),
        0,
        {
            ("e11", "e12"): {("e11", "e22"): 1},
            ("e22", "e12"): {("e11", "e22"): -1},
            ("e12", "e11"): {("e22", "e11"): -1},
            ("e12", "e22"): {("e22", "e11"): 1},
            ("e12", "e12"): {
                ("e12", "e11"): 1,
                ("e11", "e12"): -1,
                ("e12", "e22"): 1,
                ("e22", "e12"): -1,
            },
        },
    )


# ========== Morphisms ==========


def identity_morphism(P: PoissonAlgebra) -> DpaMorphism:
    return DpaMorphism(P, P, MultiMap.identity(P.space))


def scaling_morphism() -> DpaMorphism:
    """x ↦ 2x, y ↦ y on the nilpotent pair; breaks the bracket."""
    P: PoissonAlgebra = nilpotent_pair()
    phi: MultiMap = table(
        P.space, 1, 1, 0, {("x",): {("x",): 2}, ("y",): {("y",): 1}}
    )
    return DpaMorphism(P, P, phi)


def zero_morphism() -> DpaMorphism:
    P: PoissonAlgebra = zero_bracket()
    return DpaMorphism(P, P, MultiMap.zero((P.space,), (P.space,), 0))


def unit_and_augmentation() -> tuple[DpaMorphism, DpaMorphism]:
    """k → k[n]/n² → k: e ↦ e, then e ↦ e and n ↦ 0."""
    k: PoissonAlgebra = poisson(ground_field(), 0)
    D: PoissonAlgebra = dual_numbers_bracket()
    unit = MultiMap((k.space,), (D.space,), 0, {(0,): {(0,): Fraction(1)}})
    augmentation = MultiMap((D.space,), (k.space,), 0, {(0,): {(0,): Fraction(1)}})
    return DpaMorphism(k, D, unit), DpaMorphism(D, k, augmentation)


# ========== A∞ and P∞ ==========


def chain_with_nonzero_square() -> AInfinityData:
    """m_1: x ↦ y ↦ z, so m_1∘m_1 ≠ 0."""
    space = GradedSpace.from_pairs([("x", 0), ("y", 1), ("z", 2)])
    m1: MultiMap = table(space, 1, 1, 1, {("x",): {("y",): 1}, ("y",): {("z",): 1}})
    return AInfinityData(space, (Part.A,) * 3, {1: m1})


def family_of(P: PoissonAlgebra) -> PInfinityFamily:
    return PInfinityFamily.from_double_poisson(P.algebra, P.bracket)


def unit_map(spaces: Sequence[GradedSpace], args: Key, outs: Key) -> MultiMap:
    """The map sending one basis tuple to another and everything else to zero."""
    spaces = tuple(spaces)
    degree: int = tuple_degree(spaces, outs) - tuple_degree(spaces, args)
    return MultiMap(spaces, spaces, degree, {args: {outs: Fraction(1)}})


def antisymmetric_part(bracket: MultiMap) -> MultiMap:
    """Σ_σ sgn(σ) τ(σ)∘⟨…⟩∘τ(σ⁻¹) over S_p."""
    return sum_maps(
        (
            conjugate(perm, bracket).scale(perm.sign())
            for perm in SignedPermutation.all(bracket.arity)
        ),
        bracket.domain,
        bracket.codomain,
        bracket.degree,
    )


def separated_family() -> PInfinityFamily:
    """
    ⟨…⟩_3 from the slot x⊗y⊗y ↦ w⊗z⊗z on a zero-product carrier.

    Outputs never feed back into inputs, so every identity holds.
    """
    A: DgAlgebraData = split_quad()
    space: GradedSpace = A.space
    slot: MultiMap = unit_map(
        (space,) * 3,
        tuple(space.index(s) for s in ("x", "y", "y")),
        tuple(space.index(s) for s in ("w", "z", "z")),
    )
    return PInfinityFamily(A, {3: antisymmetric_part(slot)})


def jacobi_breaking_family() -> PInfinityFamily:
    """⟨…⟩_3 from x⊗y⊗y ↦ y⊗x⊗x on the zero-product pair; DJac(5) fails."""
    A: DgAlgebraData = odd_pair_algebra()
    x, y = A.space.index("x"), A.space.index("y")
    slot: MultiMap = unit_map((A.space,) * 3, (x, y, y), (y, x, x))
    return PInfinityFamily(A, {3: antisymmetric_part(slot)})


def exterior_family() -> PInfinityFamily:
    """⟨…⟩_3 from e⊗y⊗y ↦ y⊗e⊗e on Λ(y); the unit breaks DLeib(3)."""
    A: DgAlgebraData = exterior_algebra()
    e, y = A.space.index("e"), A.space.index("y")
    slot: MultiMap = unit_map((A.space,) * 3, (e, y, y), (y, e, e))
    return PInfinityFamily(A, {3: antisymmetric_part(slot)})


# ========== Grids ==========


def bracket_slots(space: GradedSpace, d: int) -> Iterator[tuple[Key, Key]]:
    """Basis slots p⊗q ↦ e_i⊗e_j of a degree -d double bracket."""
    spaces = (space, space)
    for args in space.tuples(2):
        for outs in space.tuples(2):
            if tuple_degree(spaces, outs) == tuple_degree(spaces, args) - d:
                yield args, outs


def double_bracket_basis(A: DgAlgebraData, d: int) -> list[MultiMap]:
    """
    Antisymmetric brackets spanned by single slots, one per mirror pair.

    Each element is twice the antisymmetrization of a unit slot, so its
    coefficients are integers.
    """
    space: GradedSpace = A.space
    seen: set[tuple[Key, Key]] = set()
    basis: list[MultiMap] = []
    for args, outs in bracket_slots(space, d):
        if (args, outs) in seen:
            continue
        seen.update({(args, outs), (args[::-1], outs[::-1])})
        unit = DoubleBracket(d, unit_map((space, space), args, outs))
        part: MultiMap = antisymmetrize(A, unit).table.scale(2)
        if not part.is_zero():
            basis.append(part)
    return basis


def pinfty_bracket_basis(space: GradedSpace, p: int) -> list[MultiMap]:
    """Antisymmetric parts of unit p-brackets of degree 2 - p, one per S_p orbit."""
    spaces = (space,) * p
    perms: list[SignedPermutation] = SignedPermutation.all(p)
    seen: set[tuple[Key, Key]] = set()
    basis: list[MultiMap] = []
    for args in space.tuples(p):
        for outs in space.tuples(p):
            if (args, outs) in seen:
                continue
            if tuple_degree(spaces, outs) != tuple_degree(spaces, args) + 2 - p:
                continue
            seen.update(
                (
                    tuple(args[j] for j in perm.images),
                    tuple(outs[j] for j in perm.images),
                )
                for perm in perms
            )
            part: MultiMap = antisymmetric_part(unit_map(spaces, args, outs))
            if not part.is_zero():
                basis.append(part)
    return basis


def combinations(
    basis: Sequence[MultiMap], template: MultiMap, coefficients: Sequence[int]
) -> MultiMap:
    """Σ c_i b_i, shaped like `template`."""
    return sum_maps(
        (b.scale(c) for b, c in zip(basis, coefficients) if c),
        template.domain,
        template.codomain,
        template.degree,
    )


def grid(basis: Sequence[MultiMap], template: MultiMap) -> Iterator[MultiMap]:
    """Every combination of the basis with coefficients in GRID."""
    for coefficients in itertools.product(GRID, repeat=len(basis)):
        yield combinations(basis, template, coefficients)


def grid_brackets(A: DgAlgebraData, d: int) -> Iterator[PoissonAlgebra]:
    """Every antisymmetric bracket on A with coefficients in GRID."""
    zero: MultiMap = MultiMap.zero((A.space,) * 2, (A.space,) * 2, -d)
    for table_ in grid(double_bracket_basis(A, d), zero):
        yield PoissonAlgebra(A, DoubleBracket(d, table_))


def grid_families(A: DgAlgebraData) -> Iterator[PInfinityFamily]:
    """Every family ⟨…⟩_2 + ⟨…⟩_3 on A with coefficients in GRID."""
    space: GradedSpace = A.space
    second: list[MultiMap] = pinfty_bracket_basis(space, 2)
    third: list[MultiMap] = pinfty_bracket_basis(space, 3)
    zero2: MultiMap = MultiMap.zero((space,) * 2, (space,) * 2, 0)
    zero3: MultiMap = MultiMap.zero((space,) * 3, (space,) * 3, -1)
    for two in grid(second, zero2):
        for three in grid(third, zero3):
            yield PInfinityFamily(A, {2: two, 3: three})


def mutations(P: PoissonAlgebra) -> Iterator[PoissonAlgebra]:
    """P plus one antisymmetric basis bracket, then P plus one unit slot."""
    A: DgAlgebraData = P.algebra
    d: int = P.bracket.d
    for part in double_bracket_basis(A, d):
        yield PoissonAlgebra(A, DoubleBracket(d, P.bracket.table + part))
    for args, outs in bracket_slots(A.space, d):
        unit: MultiMap = unit_map((A.space, A.space), args, outs)
        yield PoissonAlgebra(A, DoubleBracket(d, P.bracket.table + unit))
