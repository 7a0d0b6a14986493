"""Finite graded vector spaces with an ordered basis."""

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from precy_bench.utils.exceptions import ValidationError
from precy_bench.utils.validators import validate_distinct_symbols


@dataclass(frozen=True)
class BasisElement:
    """A named homogeneous basis vector."""

    symbol: str
    """Name used in files and witnesses"""

    degree: int
    """Cohomological degree"""


@dataclass(frozen=True)
class GradedSpace:
    """
    Graded vector space given by an ordered basis.

    Basis order is authoritative: it fixes the indices stored in every
    tensor and map built over the space. The empty basis is the zero space.
    """

    basis: tuple[BasisElement, ...] = field(default_factory=tuple)
    """Ordered basis"""

    def __post_init__(self) -> None:
        if not isinstance(self.basis, tuple):
            object.__setattr__(self, "basis", tuple(self.basis))
        validate_distinct_symbols(element.symbol for element in self.basis)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> "GradedSpace":
        """Build a space from (symbol, degree) pairs."""
        return cls(tuple(BasisElement(symbol, degree) for symbol, degree in pairs))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def symbols(self) -> tuple[str, ...]:
        return tuple(element.symbol for element in self.basis)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(element.degree for element in self.basis)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {symbol: i for i, symbol in enumerate(self.symbols)}

    def degree(self, index: int) -> int:
        """Degree of the basis element at `index`."""
        return self.basis[index].degree

    def symbol(self, index: int) -> str:
        return self.basis[index].symbol

    def index(self, symbol: str) -> int:
        """
        Position of a basis symbol.

        Raises:
            ValidationError: If the symbol is not part of the basis
        """
        try:
            return self._index[symbol]
        except KeyError:
            raise ValidationError(f"Unknown basis symbol: {symbol!r}") from None

    def has_symbol(self, symbol: str) -> bool:
        return symbol in self._index

    def indices_of_degree(self, degree: int) -> list[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == degree]

    def degrees_present(self) -> list[int]:
        return sorted(set(self.degrees))

    def shift(self, m: int) -> "GradedSpace":
        """V[m]: same symbols, a degree k element of V sits in degree k - m."""
        return GradedSpace(
            tuple(BasisElement(e.symbol, e.degree - m) for e in self.basis)
        )

    def direct_sum(self, other: "GradedSpace") -> "GradedSpace":
        """Concatenate bases; self first."""
        return GradedSpace(self.basis + other.basis)

    def tuples(self, arity: int) -> Iterator[tuple[int, ...]]:
        """All basis index tuples of the given length, lexicographically."""
        return itertools.product(range(self.dim), repeat=arity)

    def to_dict(self) -> dict[str, Any]:
        return {"basis": [{"name": e.symbol, "degree": e.degree} for e in self.basis]}

    def __repr__(self) -> str:
        inner: str = ", ".join(f"{e.symbol}:{e.degree}" for e in self.basis)
        return f"GradedSpace([{inner}])"


def dual_space(V: GradedSpace) -> GradedSpace:
    """V# with dual basis e_i* of degree -deg(e_i), in input order."""
    return GradedSpace(tuple(BasisElement(f"{e.symbol}*", -e.degree) for e in V.basis))


def dual_shift_space(V: GradedSpace, m: int) -> GradedSpace:
    """V#[m] with basis t e_i* of degree -deg(e_i) - m, in input order."""
    return GradedSpace(
        tuple(BasisElement(f"t{e.symbol}*", -e.degree - m) for e in V.basis)
    )


def boundary_space(V: GradedSpace, m: int) -> GradedSpace:
    """V ⊕ V#[m], V-part first."""
    return V.direct_sum(dual_shift_space(V, m))


def tuple_degree(spaces: tuple[GradedSpace, ...], key: tuple[int, ...]) -> int:
    """Total degree of a basis tensor."""
    return sum(space.degrees[i] for space, i in zip(spaces, key))
