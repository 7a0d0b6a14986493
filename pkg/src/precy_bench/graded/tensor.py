"""Sparse exact tensors over ordered graded bases."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from precy_bench.graded.space import GradedSpace, tuple_degree
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    SpaceMismatchError,
)

Key = tuple[int, ...]
Scalar = Union[Fraction, int]


def clean(coords: Mapping[Key, Scalar]) -> dict[Key, Fraction]:
    """Drop zero coefficients and normalize scalars to Fraction."""
    return {key: Fraction(value) for key, value in coords.items() if value != 0}


@dataclass(frozen=True)
class Tensor:
    """
    Element of V_1 ⊗ ... ⊗ V_n stored as basis-tuple → rational.

    A one-factor tensor is a plain vector. Zero coefficients are never stored.
    """

    spaces: tuple[GradedSpace, ...]
    """Tensor factors"""

    coords: dict[Key, Fraction] = field(default_factory=dict)
    """Sparse coordinates"""

    def __post_init__(self) -> None:
        if not isinstance(self.spaces, tuple):
            object.__setattr__(self, "spaces", tuple(self.spaces))
        cleaned: dict[Key, Fraction] = clean(self.coords)
        for key in cleaned:
            if len(key) != len(self.spaces):
                raise DimensionError(
                    f"Key {key} has length {len(key)}, expected {len(self.spaces)}"
                )
            for space, i in zip(self.spaces, key):
                if not 0 <= i < space.dim:
                    raise DimensionError(f"Index {i} out of range in key {key}")
        object.__setattr__(self, "coords", cleaned)

    @classmethod
    def zero(cls, spaces: Iterable[GradedSpace]) -> "Tensor":
        return cls(tuple(spaces), {})

    @classmethod
    def basis_tensor(
        cls, spaces: Iterable[GradedSpace], key: Key, coeff: Scalar = 1
    ) -> "Tensor":
        return cls(tuple(spaces), {tuple(key): Fraction(coeff)})

    @property
    def order(self) -> int:
        return len(self.spaces)

    def is_zero(self) -> bool:
        return not self.coords

    def degrees(self) -> set[int]:
        """Degrees occurring in the support."""
        return {tuple_degree(self.spaces, key) for key in self.coords}

    def degree(self) -> int:
        """
        The degree of a homogeneous nonzero tensor.

        Raises:
            HomogeneityError: If the tensor is zero or mixes degrees
        """
        found: set[int] = self.degrees()
        if len(found) != 1:
            raise HomogeneityError(
                f"Tensor is not homogeneous: degrees {sorted(found)}"
            )
        return found.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, key: Key) -> Fraction:
        return self.coords.get(tuple(key), Fraction(0))

    def items(self) -> list[tuple[Key, Fraction]]:
        """Coordinates in lexicographic key order."""
        return sorted(self.coords.items())

    def _check_same(self, other: "Tensor") -> None:
        if self.spaces != other.spaces:
            raise SpaceMismatchError("Tensors live in different spaces")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same(other)
        result: dict[Key, Fraction] = dict(self.coords)
        for key, value in other.coords.items():
            result[key] = result.get(key, Fraction(0)) + value
        return Tensor(self.spaces, result)

    def __neg__(self) -> "Tensor":
        return Tensor(self.spaces, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, factor: Scalar) -> "Tensor":
        return Tensor(self.spaces, {k: v * factor for k, v in self.coords.items()})

    def tensor(self, other: "Tensor") -> "Tensor":
        """Plain tensor product of elements: keys concatenate, no sign."""
        result: dict[Key, Fraction] = {}
        for k1, v1 in self.coords.items():
            for k2, v2 in other.coords.items():
                result[k1 + k2] = v1 * v2
        return Tensor(self.spaces + other.spaces, result)

    def to_dict(self) -> dict[str, Any]:
        return {
            " ⊗ ".join(s.symbol(i) for s, i in zip(self.spaces, key)): str(value)
            for key, value in self.items()
        }

    def __repr__(self) -> str:
        if not self.coords:
            return "Tensor(0)"
        terms: str = " + ".join(f"{v}·{k}" for k, v in self.to_dict().items())
        return f"Tensor({terms})"


def vector(space: GradedSpace, coords: Mapping[Union[int, str], Scalar]) -> Tensor:
    """A one-factor tensor; coordinates keyed by index or symbol."""
    result: dict[Key, Fraction] = {}
    for key, value in coords.items():
        index: int = space.index(key) if isinstance(key, str) else key
        result[(index,)] = result.get((index,), Fraction(0)) + Fraction(value)
    return Tensor((space,), result)


def tensor_product(factors: Iterable[Tensor]) -> Tensor:
    """Tensor product of several elements, left to right."""
    items: list[Tensor] = list(factors)
    if not items:
        return Tensor((), {(): Fraction(1)})
    result: Tensor = items[0]
    for item in items[1:]:
        result = result.tensor(item)
    return result
