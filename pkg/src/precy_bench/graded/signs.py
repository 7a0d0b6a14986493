"""Permutations and the Koszul sign rule."""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from precy_bench.graded.space import GradedSpace, tuple_degree
from precy_bench.graded.tensor import Key, Tensor, tensor_product
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    SpaceMismatchError,
    ValidationError,
)


def parity(exponent: int) -> int:
    """(-1)^exponent."""
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class SignedPermutation:
    """
    Permutation of n letters stored one-line, 0-based.

    `images[i]` is σ(i). Products compose right to left:
    (σ1 * σ2)(i) = σ1(σ2(i)).
    """

    images: tuple[int, ...]
    """One-line notation, 0-based"""

    def __post_init__(self) -> None:
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValidationError(f"Not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_line(cls, images: Sequence[int]) -> "SignedPermutation":
        """Build from 1-based one-line notation, e.g. (2, 3, 1) for 1→2→3→1."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "SignedPermutation":
        """The transposition (i j), 1-based."""
        images: list[int] = list(range(n))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def cycle(cls, n: int) -> "SignedPermutation":
        """1 → 2 → ... → n → 1."""
        return cls(tuple((i + 1) % n for i in range(n)))

    @classmethod
    def all(cls, n: int) -> list["SignedPermutation"]:
        return [cls(p) for p in itertools.permutations(range(n))]

    @classmethod
    def adjacent_generators(cls, n: int) -> list["SignedPermutation"]:
        return [cls.transposition(i, i + 1, n) for i in range(1, n)]

    @classmethod
    def cyclic_group(cls, n: int) -> list["SignedPermutation"]:
        """The subgroup generated by `cycle(n)`, identity first."""
        if n == 0:
            return [cls.identity(0)]
        result: list[SignedPermutation] = [cls.identity(n)]
        generator: SignedPermutation = cls.cycle(n)
        for _ in range(n - 1):
            result.append(generator * result[-1])
        return result

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.size != other.size:
            raise DimensionError("Permutations of different sizes")
        return SignedPermutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "SignedPermutation":
        inv: list[int] = [0] * self.size
        for i, image in enumerate(self.images):
            inv[image] = i
        return SignedPermutation(tuple(inv))

    def sign(self) -> int:
        """Ordinary sign sgn(σ)."""
        inversions: int = sum(
            1
            for i in range(self.size)
            for j in range(i + 1, self.size)
            if self.images[i] > self.images[j]
        )
        return parity(inversions)

    def interleave(self) -> "SignedPermutation":
        """
        The embedding S_n → S_2n sending ς to the permutation moving the
        pair (2i-1, 2i) to (2ς(i)-1, 2ς(i)).
        """
        images: list[int] = [0] * (2 * self.size)
        for i, image in enumerate(self.images):
            images[2 * i] = 2 * image
            images[2 * i + 1] = 2 * image + 1
        return SignedPermutation(tuple(images))

    def __repr__(self) -> str:
        return f"SignedPermutation({tuple(i + 1 for i in self.images)})"


def koszul_sign(perm: SignedPermutation, degrees: Sequence[int]) -> int:
    """
    Koszul sign of σ acting on homogeneous factors of the given degrees.

    Sums |v_{σ⁻¹(i)}||v_{σ⁻¹(j)}| over i < j with σ⁻¹(i) > σ⁻¹(j).

    Raises:
        DimensionError: If the degree tuple and the permutation differ in size
    """
    if len(degrees) != perm.size:
        raise DimensionError(
            f"Permutation of {perm.size} letters applied to {len(degrees)} degrees"
        )
    inv: tuple[int, ...] = perm.inverse().images
    exponent: int = 0
    for i in range(perm.size):
        for j in range(i + 1, perm.size):
            if inv[i] > inv[j]:
                exponent += degrees[inv[i]] * degrees[inv[j]]
    return parity(exponent)


def evaluation_sign(degrees: Sequence[int]) -> int:
    """
    Sign of (e_1* ⊗ ... ⊗ e_n*)(e_1 ⊗ ... ⊗ e_n) for homogeneous basis
    vectors of the given degrees.
    """
    exponent: int = sum(
        degrees[i] * degrees[j] for j in range(len(degrees)) for i in range(j)
    )
    return parity(exponent)


def _as_tensor(factors: Union[Tensor, Sequence[Tensor]]) -> Tensor:
    if isinstance(factors, Tensor):
        return factors
    for factor in factors:
        if factor.order != 1:
            raise DimensionError("Factors must be vectors")
        if not factor.is_homogeneous():
            raise HomogeneityError(f"Factor {factor!r} is not homogeneous")
    return tensor_product(factors)


def permute_tensor(
    perm: SignedPermutation, factors: Union[Tensor, Sequence[Tensor]]
) -> Tensor:
    """
    τ(σ): v_1 ⊗ ... ⊗ v_n ↦ ±v_{σ⁻¹(1)} ⊗ ... ⊗ v_{σ⁻¹(n)}.

    Accepts a tensor or a tuple of homogeneous vectors; extends linearly
    over basis expansions.
    """
    tensor: Tensor = _as_tensor(factors)
    if tensor.order != perm.size:
        raise DimensionError(
            f"Permutation of {perm.size} letters applied to order {tensor.order}"
        )
    inv: tuple[int, ...] = perm.inverse().images
    spaces: tuple[GradedSpace, ...] = tuple(tensor.spaces[j] for j in inv)
    result: dict[Key, Fraction] = {}
    for key, value in tensor.coords.items():
        degrees: list[int] = [tensor.spaces[k].degrees[i] for k, i in enumerate(key)]
        new_key: Key = tuple(key[j] for j in inv)
        result[new_key] = value * koszul_sign(perm, degrees)
    return Tensor(spaces, result)


def apply_functionals(
    functionals: Union[Tensor, Sequence[Tensor]],
    tensor: Union[Tensor, Sequence[Tensor]],
) -> Fraction:
    """
    (f_1 ⊗ ... ⊗ f_n)(v_1 ⊗ ... ⊗ v_n) = ±f_1(v_1)···f_n(v_n), the sign
    collecting |f_j||v_i| for every i < j.

    Functionals live in duals of the vector spaces, dual basis in the same
    order.
    """
    funcs: Tensor = _as_tensor(functionals)
    vecs: Tensor = _as_tensor(tensor)
    if funcs.order != vecs.order:
        raise DimensionError(
            f"{funcs.order} functionals applied to a tensor of order {vecs.order}"
        )
    for dual, space in zip(funcs.spaces, vecs.spaces):
        if dual.degrees != tuple(-deg for deg in space.degrees):
            raise SpaceMismatchError("Functionals do not live in the dual space")
    total: Fraction = Fraction(0)
    for key, coeff in funcs.coords.items():
        value: Fraction = vecs.coords.get(key, Fraction(0))
        if not value:
            continue
        degrees: list[int] = [s.degrees[i] for s, i in zip(vecs.spaces, key)]
        total += evaluation_sign(degrees) * coeff * value
    return total


def move_suspension(tensor: Tensor, d: int, position: int) -> Tensor:
    """
    Image of s^d x ∈ (V_1 ⊗ ... ⊗ V_n)[d] in V_1 ⊗ ... ⊗ V_i[d] ⊗ ... ⊗ V_n.

    The suspension passes the factors before `position`, giving the sign
    (-1)^{d(|v_1| + ... + |v_{i-1}|)}.
    """
    if not 0 <= position < tensor.order:
        raise DimensionError(f"No factor at position {position}")
    spaces: list[GradedSpace] = list(tensor.spaces)
    spaces[position] = spaces[position].shift(d)
    result: dict[Key, Fraction] = {}
    for key, value in tensor.coords.items():
        before: int = tuple_degree(tensor.spaces[:position], key[:position])
        result[key] = parity(d * before) * value
    return Tensor(tuple(spaces), result)
