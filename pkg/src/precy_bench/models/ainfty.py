"""Data models for A∞-structures with a marked splitting."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Optional

from precy_bench.graded import linalg
from precy_bench.graded.maps import MultiMap, compose, permutation_map
from precy_bench.graded.signs import SignedPermutation
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    MissingReferenceError,
    SpaceMismatchError,
    ValidationError,
)


class Part(str, Enum):
    """Summand tag of a basis element: leading summand or dual-shifted one."""

    A = "A"
    D = "D"


@dataclass(frozen=True)
class BilinearForm:
    """
    Super-symmetric bilinear form γ of a given degree.

    γ(x, y) ≠ 0 only when |x| + |y| + degree = 0. Degenerate forms are
    allowed; nondegeneracy is computed.
    """

    degree: int
    """Degree of γ"""

    table: MultiMap
    """B ⊗ B → k"""

    def __post_init__(self) -> None:
        if self.table.arity != 2 or self.table.coarity != 0:
            raise SpaceMismatchError("Bilinear form must be a map B ⊗ B → k")
        if self.table.domain[0] != self.table.domain[1]:
            raise SpaceMismatchError("Bilinear form must live over a single space")
        if self.table.degree != self.degree and not self.table.is_zero():
            raise HomogeneityError(
                f"Form table has degree {self.table.degree}, expected {self.degree}"
            )
        defect: MultiMap = self.supersymmetry_defect()
        if not defect.is_zero():
            key: Key = min(defect.entries)
            raise ValidationError(
                f"Form is not super-symmetric at "
                f"({self.space.symbol(key[0])}, {self.space.symbol(key[1])})"
            )

    @classmethod
    def from_pairs(
        cls,
        space: GradedSpace,
        degree: int,
        values: Mapping[tuple[int, int], Fraction],
    ) -> "BilinearForm":
        return cls(
            degree,
            MultiMap(
                (space, space), (), degree, {k: {(): v} for k, v in values.items()}
            ),
        )

    @property
    def space(self) -> GradedSpace:
        return self.table.domain[0]

    def pair(self, i: int, j: int) -> Fraction:
        return self.table.value((i, j)).get((), Fraction(0))

    @cached_property
    def _partners(self) -> dict[int, list[tuple[int, Fraction]]]:
        result: dict[int, list[tuple[int, Fraction]]] = {}
        for (i, j), out in sorted(self.table.entries.items()):
            result.setdefault(i, []).append((j, out[()]))
        return result

    def partners(self, i: int) -> list[tuple[int, Fraction]]:
        """Basis elements y with γ(e_i, y) ≠ 0, with the values."""
        return self._partners.get(i, [])

    def supersymmetry_defect(self) -> MultiMap:
        """γ∘τ - γ."""
        swap: MultiMap = permutation_map(
            SignedPermutation.transposition(1, 2, 2), (self.space, self.space)
        )
        return compose(self.table, swap) - self.table

    def is_nondegenerate(self) -> bool:
        """Full-rank pairing matrix between degree k and degree -degree-k."""
        for k in self.space.degrees_present():
            rows: list[int] = self.space.indices_of_degree(k)
            cols: list[int] = self.space.indices_of_degree(-self.degree - k)
            if len(rows) != len(cols):
                return False
            matrix: list[list[Fraction]] = [
                [self.pair(i, j) for j in cols] for i in rows
            ]
            if linalg.rank(matrix, len(cols)) != len(rows):
                return False
        return True

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "table": self.table.to_dict()}

    def __repr__(self) -> str:
        return f"BilinearForm(degree={self.degree}, entries={len(self.table.entries)})"


@dataclass(frozen=True)
class AInfinityData:
    """
    Finite family of operations m_n of degree 2 - n on a split space.

    Zero operations are dropped, so every stored arity is nonzero.
    """

    space: GradedSpace
    """Carrier B = B_0 ⊕ B_1"""

    parts: tuple[Part, ...]
    """Summand tag for each basis element"""

    ops: dict[int, MultiMap] = field(default_factory=dict)
    """Arity → operation"""

    form: Optional[BilinearForm] = None
    """Optional bilinear form γ"""

    def __post_init__(self) -> None:
        if not isinstance(self.parts, tuple):
            object.__setattr__(self, "parts", tuple(Part(p) for p in self.parts))
        if len(self.parts) != self.space.dim:
            raise DimensionError("Every basis element needs a part tag")
        kept: dict[int, MultiMap] = {}
        for n, op in sorted(self.ops.items()):
            if n < 1:
                raise DimensionError(f"Operation arity must be positive, got {n}")
            if op.domain != (self.space,) * n or op.codomain != (self.space,):
                raise SpaceMismatchError(f"m_{n} must be a map B^⊗{n} → B")
            if op.is_zero():
                continue
            if op.degree != 2 - n:
                raise HomogeneityError(
                    f"m_{n} has degree {op.degree}, expected {2 - n}"
                )
            kept[n] = op
        object.__setattr__(self, "ops", kept)
        if self.form is not None and self.form.space != self.space:
            raise SpaceMismatchError("Form is not defined over the carrier")

    @property
    def max_arity(self) -> int:
        return max(self.ops, default=0)

    def op(self, n: int) -> MultiMap:
        """m_n, or the zero map when absent."""
        if n in self.ops:
            return self.ops[n]
        return MultiMap.zero((self.space,) * n, (self.space,), 2 - n)

    def part(self, i: int) -> Part:
        return self.parts[i]

    def pattern(self, key: Key) -> str:
        """Sector of a basis tuple as a string over {A, D}."""
        return "".join(self.parts[i].value for i in key)

    def indices(self, part: Part) -> list[int]:
        return [i for i, p in enumerate(self.parts) if p == part]

    def with_ops(self, ops: Mapping[int, MultiMap]) -> "AInfinityData":
        return AInfinityData(self.space, self.parts, dict(ops), self.form)

    def with_form(self, form: Optional[BilinearForm]) -> "AInfinityData":
        return AInfinityData(self.space, self.parts, dict(self.ops), form)

    def to_dict(self) -> dict[str, Any]:
        return {
            **self.space.to_dict(),
            "parts": [p.value for p in self.parts],
            "ops": {str(n): op.to_dict() for n, op in self.ops.items()},
            "form": self.form.to_dict() if self.form else None,
        }

    def __repr__(self) -> str:
        return (
            f"AInfinityData(dim={self.space.dim}, arities={sorted(self.ops)}, "
            f"form={'yes' if self.form else 'no'})"
        )


@dataclass(frozen=True)
class MorphismData:
    """A family f_n: B^⊗n → B' of degree 1 - n between A∞-structures."""

    source: AInfinityData
    """Source structure"""

    target: AInfinityData
    """Target structure"""

    components: dict[int, MultiMap] = field(default_factory=dict)
    """Arity → component"""

    def __post_init__(self) -> None:
        kept: dict[int, MultiMap] = {}
        for n, f in sorted(self.components.items()):
            if f.domain != (self.source.space,) * n or f.codomain != (
                self.target.space,
            ):
                raise SpaceMismatchError(f"f_{n} must be a map B^⊗{n} → B'")
            if f.is_zero():
                continue
            if f.degree != 1 - n:
                raise HomogeneityError(f"f_{n} has degree {f.degree}, expected {1 - n}")
            kept[n] = f
        object.__setattr__(self, "components", kept)

    @classmethod
    def strict(
        cls, source: AInfinityData, target: AInfinityData, f1: MultiMap
    ) -> "MorphismData":
        return cls(source, target, {1: f1})

    @property
    def is_strict(self) -> bool:
        return all(n == 1 for n in self.components)

    @property
    def max_arity(self) -> int:
        return max(self.components, default=0)

    def component(self, n: int) -> MultiMap:
        if n in self.components:
            return self.components[n]
        return MultiMap.zero((self.source.space,) * n, (self.target.space,), 1 - n)

    def __repr__(self) -> str:
        return f"MorphismData(components={sorted(self.components)})"


@dataclass
class Classification:
    """Structural predicates of an A∞-structure with a marked splitting."""

    fully_manageable_extension: bool
    """(B, m_2, m_1) is a dg algebra"""

    small: bool
    """m_n = 0 for n ≥ 4"""

    essentially_odd: bool
    """m_2i = 0 for i > 1"""

    good: bool
    """Essentially odd and every odd m_n is good"""

    special: bool
    """Essentially odd and ultracyclic"""

    nice: bool
    """Good and small"""

    manageable: Optional[bool] = None
    """m_2 equals the reference product; None without a reference"""

    fully_manageable: Optional[bool] = None
    """Manageable and m_1 equals the reference differential"""

    goodness_witness: Optional[tuple[int, Key]] = None
    """(arity, tuple) where goodness first fails"""

    def predicates(self) -> list[str]:
        """Names of the predicates that hold, sorted."""
        names: list[str] = [
            "fully_manageable_extension",
            "small",
            "essentially_odd",
            "good",
            "special",
            "nice",
            "manageable",
            "fully_manageable",
        ]
        return sorted(name for name in names if getattr(self, name))

    def require(self, *names: str) -> list[str]:
        """
        Names among `names` that do not hold.

        Raises:
            MissingReferenceError: If a requested predicate was not evaluated
        """
        for name in names:
            if getattr(self, name) is None:
                raise MissingReferenceError(
                    f"{name} needs a reference square-zero extension"
                )
        return [name for name in names if not getattr(self, name)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "predicates": self.predicates(),
            "manageability_checked": self.manageable is not None,
        }
