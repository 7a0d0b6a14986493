"""Conversion between file schemas and domain models."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from precy_bench.graded.maps import MultiMap
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import AInfinityData, BilinearForm, Part
from precy_bench.models.algebra import (
    DgAlgebraData,
    DoubleBracket,
    DpaMorphism,
    PoissonAlgebra,
)
from precy_bench.models.boundary import BoundaryAlgebra, MixedBoundary
from precy_bench.models.pinfty import PInfinityFamily
from precy_bench.storage.schemas import (
    AInfinityFile,
    AlgebraFile,
    BasisEntry,
    BracketFile,
    FileReference,
    FormEntry,
    FormSpec,
    MapEntry,
    MorphismFile,
    PInfinityFile,
    Term,
    WorkbenchFile,
)
from precy_bench.utils.exceptions import (
    DimensionError,
    HomogeneityError,
    SpaceMismatchError,
    ValidationError,
)
from precy_bench.utils.parsers import format_rational, parse_rational

logger = logging.getLogger(__name__)

DocumentValue = Union[PoissonAlgebra, PInfinityFamily, AInfinityData, DpaMorphism]
Resolver = Callable[[FileReference], PoissonAlgebra]


@dataclass
class WorkbenchDocument:
    """A decoded workbench file."""

    kind: str
    """One of algebra, bracket, pinfty, ainfty, morphism"""

    value: DocumentValue
    """Decoded object; algebra files decode to a zero bracket of degree -d"""

    references: dict[str, FileReference] = field(default_factory=dict)
    """Source and target references of a morphism file"""

    def __repr__(self) -> str:
        return f"WorkbenchDocument(kind='{self.kind}', value={self.value!r})"


# ========== Maps ==========


def encode_map(f: MultiMap) -> list[MapEntry]:
    """Entries in basis-index order, terms in basis-index order."""
    result: list[MapEntry] = []
    for key in f.support():
        terms: list[Term] = [
            Term(
                factors=[s.symbol(i) for s, i in zip(f.codomain, out_key)],
                coeff=format_rational(value),
            )
            for out_key, value in sorted(f.value(key).items())
        ]
        result.append(
            MapEntry(args=[s.symbol(i) for s, i in zip(f.domain, key)], value=terms)
        )
    return result


def _resolve(space: GradedSpace, symbols: Sequence[str], where: str) -> Key:
    key: list[int] = []
    for symbol in symbols:
        if not space.has_symbol(symbol):
            raise ValidationError(f"{where}: unknown basis symbol {symbol!r}")
        key.append(space.index(symbol))
    return tuple(key)


def decode_map(
    entries: Sequence[MapEntry],
    domain: Sequence[GradedSpace],
    codomain: Sequence[GradedSpace],
    degree: int,
    section: str,
) -> MultiMap:
    """
    Build a map from file entries; repeated entries add up.

    Raises:
        ValidationError: Naming the section and entry index of an unknown
            symbol, a wrong arity or a degree mismatch
    """
    table: dict[Key, dict[Key, Fraction]] = {}
    for index, entry in enumerate(entries):
        where: str = f"{section} entry {index}"
        if len(entry.args) != len(domain):
            raise ValidationError(
                f"{where}: expected {len(domain)} arguments, got {len(entry.args)}"
            )
        key: Key = _resolve(domain[0], entry.args, where) if domain else ()
        out: dict[Key, Fraction] = table.setdefault(key, {})
        for term in entry.value:
            if len(term.factors) != len(codomain):
                raise ValidationError(
                    f"{where}: expected {len(codomain)} output factors, "
                    f"got {len(term.factors)}"
                )
            out_key: Key = (
                _resolve(codomain[0], term.factors, where) if codomain else ()
            )
            out[out_key] = out.get(out_key, Fraction(0)) + parse_rational(term.coeff)
    try:
        return MultiMap(tuple(domain), tuple(codomain), degree, table)
    except (DimensionError, HomogeneityError) as e:
        raise ValidationError(f"{section}: {e}") from e


# ========== Spaces and forms ==========


def encode_space(space: GradedSpace) -> list[BasisEntry]:
    return [BasisEntry(name=e.symbol, degree=e.degree) for e in space.basis]


def decode_space(basis: Sequence[BasisEntry]) -> GradedSpace:
    return GradedSpace.from_pairs((entry.name, entry.degree) for entry in basis)


def encode_form(form: BilinearForm) -> FormSpec:
    space: GradedSpace = form.space
    return FormSpec(
        degree=form.degree,
        pairs=[
            FormEntry(
                args=[space.symbol(i), space.symbol(j)],
                coeff=format_rational(out[()]),
            )
            for (i, j), out in sorted(form.table.entries.items())
        ],
    )


def decode_form(spec: FormSpec, space: GradedSpace) -> BilinearForm:
    values: dict[tuple[int, int], Fraction] = {}
    for index, entry in enumerate(spec.pairs):
        where: str = f"form entry {index}"
        if len(entry.args) != 2:
            raise ValidationError(f"{where}: a form takes two arguments")
        i, j = _resolve(space, entry.args, where)
        values[(i, j)] = values.get((i, j), Fraction(0)) + parse_rational(entry.coeff)
    try:
        return BilinearForm.from_pairs(space, spec.degree, values)
    except (HomogeneityError, SpaceMismatchError) as e:
        raise ValidationError(f"form: {e}") from e


# ========== Documents ==========


def _algebra(
    space: GradedSpace, product: Sequence[MapEntry], differential: Sequence[MapEntry]
) -> DgAlgebraData:
    return DgAlgebraData(
        space,
        decode_map(product, (space, space), (space,), 0, "product"),
        decode_map(differential, (space,), (space,), 1, "differential"),
    )


def _arity_table(
    entries: dict[int, list[MapEntry]],
    space: GradedSpace,
    output_arity: Callable[[int], int],
    label: str,
) -> dict[int, MultiMap]:
    result: dict[int, MultiMap] = {}
    for n, items in sorted(entries.items()):
        if n < 1:
            raise ValidationError(f"{label}: arity must be positive, got {n}")
        result[n] = decode_map(
            items, (space,) * n, (space,) * output_arity(n), 2 - n, f"{label} {n}"
        )
    return result


def decode(
    file: WorkbenchFile, resolver: Optional[Resolver] = None
) -> WorkbenchDocument:
    """
    Turn a validated file schema into domain objects.

    Raises:
        ValidationError: On unknown symbols, degree mismatches or
            inconsistent structure
    """
    if isinstance(file, MorphismFile):
        if resolver is None:
            raise ValidationError("Morphism files need their source and target files")
        source: PoissonAlgebra = resolver(file.source)
        target: PoissonAlgebra = resolver(file.target)
        phi: MultiMap = decode_map(
            file.map, (source.space,), (target.space,), 0, "map"
        )
        return WorkbenchDocument(
            "morphism",
            DpaMorphism(source, target, phi),
            {"source": file.source, "target": file.target},
        )

    space: GradedSpace = decode_space(file.basis)
    try:
        if isinstance(file, AlgebraFile):
            algebra: DgAlgebraData = _algebra(space, file.product, file.differential)
            return WorkbenchDocument(
                "algebra", PoissonAlgebra(algebra, DoubleBracket.zero(space, file.d))
            )
        if isinstance(file, BracketFile):
            algebra = _algebra(space, file.product, file.differential)
            table: MultiMap = decode_map(
                file.bracket, (space, space), (space, space), -file.d, "bracket"
            )
            return WorkbenchDocument(
                "bracket", PoissonAlgebra(algebra, DoubleBracket(file.d, table))
            )
        if isinstance(file, PInfinityFile):
            base: DgAlgebraData = _algebra(space, file.product, [])
            brackets: dict[int, MultiMap] = _arity_table(
                file.brackets, space, lambda p: p, "bracket"
            )
            return WorkbenchDocument("pinfty", PInfinityFamily(base, brackets))
        parts: tuple[Part, ...] = tuple(
            Part(p) for p in (file.parts or ["A"] * space.dim)
        )
        ops: dict[int, MultiMap] = _arity_table(file.ops, space, lambda n: 1, "m")
        form: Optional[BilinearForm] = (
            decode_form(file.form, space) if file.form is not None else None
        )
        return WorkbenchDocument("ainfty", AInfinityData(space, parts, ops, form))
    except (DimensionError, HomogeneityError, SpaceMismatchError) as e:
        raise ValidationError(str(e)) from e


def _space_fields(A: DgAlgebraData) -> dict[str, Any]:
    return {
        "basis": encode_space(A.space),
        "product": encode_map(A.product),
        "differential": encode_map(A.differential),
    }


def encode(document: WorkbenchDocument) -> WorkbenchFile:
    """
    Canonical file schema of a document.

    Raises:
        ValidationError: If the value does not fit the document kind
    """
    value: DocumentValue = document.value
    if document.kind == "algebra" and isinstance(value, PoissonAlgebra):
        if not value.bracket.table.is_zero():
            raise ValidationError("An algebra file cannot carry a nonzero bracket")
        return AlgebraFile(d=value.d, **_space_fields(value.algebra))
    if document.kind == "bracket" and isinstance(value, PoissonAlgebra):
        return BracketFile(
            kind="bracket",
            d=value.d,
            bracket=encode_map(value.bracket.table),
            **_space_fields(value.algebra),
        )
    if document.kind == "pinfty" and isinstance(value, PInfinityFamily):
        return PInfinityFile(
            kind="pinfty",
            basis=encode_space(value.space),
            product=encode_map(value.base.product),
            brackets={p: encode_map(b) for p, b in sorted(value.brackets.items())},
        )
    if document.kind == "ainfty" and isinstance(value, AInfinityData):
        return AInfinityFile(
            kind="ainfty",
            basis=encode_space(value.space),
            parts=[p.value for p in value.parts],
            ops={n: encode_map(op) for n, op in sorted(value.ops.items())},
            form=encode_form(value.form) if value.form is not None else None,
        )
    if document.kind == "morphism" and isinstance(value, DpaMorphism):
        missing: list[str] = [
            name for name in ("source", "target") if name not in document.references
        ]
        if missing:
            raise ValidationError(f"Morphism document lacks references: {missing}")
        return MorphismFile(
            kind="morphism",
            source=document.references["source"],
            target=document.references["target"],
            map=encode_map(value.map),
        )
    raise ValidationError(
        f"Cannot encode {type(value).__name__} as a {document.kind!r} file"
    )


def document_for(
    value: Union[DocumentValue, BoundaryAlgebra, MixedBoundary, DgAlgebraData],
) -> WorkbenchDocument:
    """Wrap a constructed object with the file kind it serializes to."""
    if isinstance(value, BoundaryAlgebra):
        return WorkbenchDocument("ainfty", value.total)
    if isinstance(value, MixedBoundary):
        return WorkbenchDocument("ainfty", value.carrier)
    if isinstance(value, DgAlgebraData):
        return WorkbenchDocument(
            "algebra", PoissonAlgebra(value, DoubleBracket.zero(value.space, 0))
        )
    if isinstance(value, PoissonAlgebra):
        kind: str = "algebra" if value.bracket.table.is_zero() else "bracket"
        return WorkbenchDocument(kind, value)
    if isinstance(value, PInfinityFamily):
        return WorkbenchDocument("pinfty", value)
    if isinstance(value, AInfinityData):
        return WorkbenchDocument("ainfty", value)
    raise ValidationError(f"No file kind for {type(value).__name__}")
