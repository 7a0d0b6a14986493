"""Sparse homogeneous multilinear maps and their Koszul-signed calculus."""

import itertools
from collections import defaultdict
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from precy_bench.graded.signs import SignedPermutation, koszul_sign, parity
from precy_bench.graded.space import GradedSpace, dual_space, tuple_degree
from precy_bench.graded.tensor import Key, Scalar, Tensor, clean
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    SpaceMismatchError,
)

Entries = dict[Key, dict[Key, Fraction]]


def _clean_entries(entries: Mapping[Key, Mapping[Key, Scalar]]) -> Entries:
    result: Entries = {}
    for key, out in entries.items():
        cleaned: dict[Key, Fraction] = clean(out)
        if cleaned:
            result[tuple(key)] = cleaned
    return result


@dataclass(frozen=True)
class MultiMap:
    """
    Homogeneous multilinear map V_1 ⊗ ... ⊗ V_k → W_1 ⊗ ... ⊗ W_l.

    `entries` sends a basis index tuple of the domain to the sparse
    coordinates of its image. An empty codomain means scalar values,
    keyed by the empty tuple.
    """

    domain: tuple[GradedSpace, ...]
    """Input factors"""

    codomain: tuple[GradedSpace, ...]
    """Output factors; empty for scalar-valued maps"""

    degree: int
    """Homogeneous degree"""

    entries: Entries = field(default_factory=dict)
    """Basis tuple → nonzero output coordinates"""

    def __post_init__(self) -> None:
        for name in ("domain", "codomain"):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))
        cleaned: Entries = _clean_entries(self.entries)
        for key, out in cleaned.items():
            if len(key) != len(self.domain):
                raise DimensionError(
                    f"Entry {key} has length {len(key)}, arity is {len(self.domain)}"
                )
            expected: int = tuple_degree(self.domain, key) + self.degree
            for out_key in out:
                if len(out_key) != len(self.codomain):
                    raise DimensionError(f"Output key {out_key} has wrong length")
                if tuple_degree(self.codomain, out_key) != expected:
                    raise HomogeneityError(
                        f"Entry {key} → {out_key} breaks degree {self.degree}"
                    )
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def zero(
        cls,
        domain: Sequence[GradedSpace],
        codomain: Sequence[GradedSpace],
        degree: int,
    ) -> "MultiMap":
        return cls(tuple(domain), tuple(codomain), degree, {})

    @classmethod
    def identity(cls, space: GradedSpace) -> "MultiMap":
        entries: dict[Key, dict[Key, Fraction]] = {
            (i,): {(i,): Fraction(1)} for i in range(space.dim)
        }
        return cls((space,), (space,), 0, entries)

    @property
    def arity(self) -> int:
        return len(self.domain)

    @property
    def coarity(self) -> int:
        return len(self.codomain)

    def is_zero(self) -> bool:
        return not self.entries

    def value(self, key: Key) -> dict[Key, Fraction]:
        """Image of a basis tuple (empty when zero)."""
        return self.entries.get(tuple(key), {})

    def image(self, key: Key) -> Tensor:
        return Tensor(self.codomain, dict(self.value(key)))

    def evaluate(self, tensor: Tensor) -> Tensor:
        """Linear extension to an arbitrary tensor of the domain."""
        if tensor.spaces != self.domain:
            raise SpaceMismatchError("Tensor does not live in the map's domain")
        result: dict[Key, Fraction] = defaultdict(Fraction)
        for key, coeff in tensor.coords.items():
            for out_key, value in self.value(key).items():
                result[out_key] += coeff * value
        return Tensor(self.codomain, dict(result))

    def support(self) -> list[Key]:
        return sorted(self.entries)

    def _check_same(self, other: "MultiMap") -> None:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise SpaceMismatchError("Maps have different domains or codomains")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise HomogeneityError(
                f"Cannot add maps of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "MultiMap") -> "MultiMap":
        self._check_same(other)
        degree: int = self.degree if not self.is_zero() else other.degree
        result: dict[Key, dict[Key, Fraction]] = {
            k: dict(v) for k, v in self.entries.items()
        }
        for key, out in other.entries.items():
            target: dict[Key, Fraction] = result.setdefault(key, {})
            for out_key, value in out.items():
                target[out_key] = target.get(out_key, Fraction(0)) + value
        return MultiMap(self.domain, self.codomain, degree, result)

    def __neg__(self) -> "MultiMap":
        return self.scale(-1)

    def __sub__(self, other: "MultiMap") -> "MultiMap":
        return self + (-other)

    def scale(self, factor: Scalar) -> "MultiMap":
        return MultiMap(
            self.domain,
            self.codomain,
            self.degree,
            {
                k: {o: v * factor for o, v in out.items()}
                for k, out in self.entries.items()
            },
        )

    def restrict(self, keep: Callable[[Key], bool]) -> "MultiMap":
        """Keep only the entries whose input tuple satisfies `keep`."""
        return MultiMap(
            self.domain,
            self.codomain,
            self.degree,
            {k: v for k, v in self.entries.items() if keep(k)},
        )

    def first_entry(self) -> Optional[tuple[Key, dict[Key, Fraction]]]:
        """Lexicographically smallest nonzero entry, if any."""
        if not self.entries:
            return None
        key: Key = min(self.entries)
        return key, self.entries[key]

    def to_dict(self) -> dict[str, Any]:
        return {
            " ⊗ ".join(s.symbol(i) for s, i in zip(self.domain, key)): self.image(
                key
            ).to_dict()
            for key in self.support()
        }

    def __repr__(self) -> str:
        return (
            f"MultiMap(arity={self.arity}, coarity={self.coarity}, "
            f"degree={self.degree}, entries={len(self.entries)})"
        )


def compose(outer: MultiMap, inner: MultiMap, position: int = 0) -> MultiMap:
    """
    outer ∘ (id^{⊗position} ⊗ inner ⊗ id^{⊗rest}).

    The inner map passes the inputs before `position`, contributing
    (-1)^{|inner|·(their total degree)}. The inner map may be
    tensor-valued; its outputs fill outer slots position..position+l-1.
    """
    width: int = inner.coarity
    if outer.domain[position : position + width] != inner.codomain:
        raise SpaceMismatchError(
            f"Inner codomain does not match outer slots at position {position}"
        )
    by_segment: dict[Key, list[tuple[Key, dict[Key, Fraction]]]] = defaultdict(list)
    for key, out in outer.entries.items():
        by_segment[key[position : position + width]].append((key, out))

    prefix_spaces: tuple[GradedSpace, ...] = outer.domain[:position]
    result: dict[Key, dict[Key, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for inner_key, inner_out in inner.entries.items():
        for segment, c_in in inner_out.items():
            for outer_key, outer_out in by_segment.get(segment, ()):
                prefix: Key = outer_key[:position]
                sign: int = parity(inner.degree * tuple_degree(prefix_spaces, prefix))
                new_key: Key = prefix + inner_key + outer_key[position + width :]
                target: dict[Key, Fraction] = result[new_key]
                factor: Fraction = sign * c_in
                for out_key, c_out in outer_out.items():
                    target[out_key] += factor * c_out

    domain: tuple[GradedSpace, ...] = (
        prefix_spaces + inner.domain + outer.domain[position + width :]
    )
    return MultiMap(
        domain,
        outer.codomain,
        outer.degree + inner.degree,
        {k: dict(v) for k, v in result.items()},
    )


def tensor_maps(maps: Sequence[MultiMap]) -> MultiMap:
    """
    f_1 ⊗ ... ⊗ f_q acting blockwise; f_j passes the inputs of the earlier
    blocks with sign (-1)^{|f_j|·(their degree)}.
    """
    domain: tuple[GradedSpace, ...] = tuple(s for f in maps for s in f.domain)
    codomain: tuple[GradedSpace, ...] = tuple(s for f in maps for s in f.codomain)
    degree: int = sum(f.degree for f in maps)
    result: dict[Key, dict[Key, Fraction]] = {}
    for combo in itertools.product(*(list(f.entries.items()) for f in maps)):
        key: Key = ()
        outputs: dict[Key, Fraction] = {(): Fraction(1)}
        exponent: int = 0
        for f, (in_key, out) in zip(maps, combo):
            exponent += f.degree * tuple_degree(domain[: len(key)], key)
            key = key + in_key
            outputs = {
                k1 + k2: v1 * v2 for k1, v1 in outputs.items() for k2, v2 in out.items()
            }
        sign: int = parity(exponent)
        result[key] = {k: sign * v for k, v in outputs.items()}
    return MultiMap(domain, codomain, degree, result)


def tensor_of_maps(f: MultiMap, g: MultiMap) -> MultiMap:
    """Λ(f ⊗ g): v ⊗ w ↦ (-1)^{|g||v|} f(v) ⊗ g(w)."""
    if f.arity != 1 or g.arity != 1:
        raise DimensionError("tensor_of_maps expects unary maps")
    return tensor_maps([f, g])


def extend_identity(
    f: MultiMap,
    left: Sequence[GradedSpace] = (),
    right: Sequence[GradedSpace] = (),
) -> MultiMap:
    """id^{left} ⊗ f ⊗ id^{right} as an explicit map."""
    maps: list[MultiMap] = [MultiMap.identity(s) for s in left]
    maps.append(f)
    maps.extend(MultiMap.identity(s) for s in right)
    return tensor_maps(maps)


def compose_unary(f: MultiMap, g: MultiMap) -> MultiMap:
    """f ∘ g for maps with a single input."""
    return compose(f, g, 0)


def shift_map(f: MultiMap, m: int) -> MultiMap:
    """f[m] between V[m] and W[m]; underlying map (-1)^{m·|f|} f."""
    if f.arity != 1 or f.coarity != 1:
        raise DimensionError("shift_map expects a unary map")
    sign: int = parity(m * f.degree)
    return MultiMap(
        (f.domain[0].shift(m),),
        (f.codomain[0].shift(m),),
        f.degree,
        {k: {o: sign * v for o, v in out.items()} for k, out in f.entries.items()},
    )


def dual_map(f: MultiMap) -> MultiMap:
    """f#: W# → V#, g ↦ (-1)^{|f||g|} g ∘ f."""
    if f.arity != 1 or f.coarity != 1:
        raise DimensionError("dual_map expects a unary map")
    source: GradedSpace = dual_space(f.codomain[0])
    target: GradedSpace = dual_space(f.domain[0])
    result: dict[Key, dict[Key, Fraction]] = defaultdict(dict)
    for (i,), out in f.entries.items():
        for (j,), value in out.items():
            sign: int = parity(f.degree * source.degrees[j])
            result[(j,)][(i,)] = sign * value
    return MultiMap((source,), (target,), f.degree, dict(result))


def hom_precompose(f: MultiMap, g: MultiMap) -> MultiMap:
    """Hom(f, W)(g) = (-1)^{|f||g|} g ∘ f."""
    return compose_unary(g, f).scale(parity(f.degree * g.degree))


def hom_postcompose(f: MultiMap, g: MultiMap) -> MultiMap:
    """Hom(W, f)(g) = f ∘ g."""
    return compose_unary(f, g)


def sum_maps(
    maps: Iterable[MultiMap],
    domain: Sequence[GradedSpace],
    codomain: Sequence[GradedSpace],
    degree: int,
) -> MultiMap:
    """Sum of maps sharing domain and codomain; zero when empty."""
    total: MultiMap = MultiMap.zero(domain, codomain, degree)
    for item in maps:
        total = total + item
    return total


def permutation_map(perm: SignedPermutation, spaces: Sequence[GradedSpace]) -> MultiMap:
    """τ(σ) on V_1 ⊗ ... ⊗ V_n as an explicit degree-0 map."""
    spaces = tuple(spaces)
    if perm.size != len(spaces):
        raise DimensionError(
            f"Permutation of {perm.size} letters on {len(spaces)} factors"
        )
    inv: tuple[int, ...] = perm.inverse().images
    codomain: tuple[GradedSpace, ...] = tuple(spaces[j] for j in inv)
    result: dict[Key, dict[Key, Fraction]] = {}
    for key in itertools.product(*(range(s.dim) for s in spaces)):
        degrees: list[int] = [s.degrees[i] for s, i in zip(spaces, key)]
        new_key: Key = tuple(key[j] for j in inv)
        result[key] = {new_key: Fraction(koszul_sign(perm, degrees))}
    return MultiMap(spaces, codomain, 0, result)
