"""File schemas for workbench documents."""

from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator

from precy_bench.utils.exceptions import ValidationError
from precy_bench.utils.parsers import format_rational, parse_rational

SCHEMA_VERSION: int = 1
KINDS: tuple[str, ...] = ("algebra", "bracket", "pinfty", "ainfty", "morphism")


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _canonical_coeff(value: Any) -> str:
    try:
        return format_rational(parse_rational(value))
    except ValidationError as e:
        raise ValueError(str(e)) from e


class BasisEntry(_Strict):
    """One basis vector: symbol and degree."""

    name: str
    degree: int


class Term(_Strict):
    """coeff · (factor_1 ⊗ ... ⊗ factor_k); no factors for scalars."""

    factors: list[str] = Field(default_factory=list)
    coeff: str

    @field_validator("coeff", mode="before")
    @classmethod
    def normalize_coeff(cls, v: Any) -> str:
        return _canonical_coeff(v)


class MapEntry(_Strict):
    """Value of a multilinear map on one basis tuple."""

    args: list[str]
    value: list[Term] = Field(default_factory=list)


class FormEntry(_Strict):
    """γ(x, y) = coeff."""

    args: list[str]
    coeff: str

    @field_validator("coeff", mode="before")
    @classmethod
    def normalize_coeff(cls, v: Any) -> str:
        return _canonical_coeff(v)


class FormSpec(_Strict):
    degree: int
    pairs: list[FormEntry] = Field(default_factory=list)


class FileReference(_Strict):
    """Relative path of another workbench file plus its content hash."""

    path: str
    sha256: str

    @field_validator("sha256")
    @classmethod
    def validate_digest(cls, v: str) -> str:
        lowered: str = v.lower()
        if len(lowered) != 64 or set(lowered) - set("0123456789abcdef"):
            raise ValueError(f"Not a sha256 hex digest: {v!r}")
        return lowered


class AlgebraFile(_Strict):
    """A dg algebra together with the bracket degree it will be used with."""

    kind: Literal["algebra"] = "algebra"
    schema_version: Literal[1] = SCHEMA_VERSION
    basis: list[BasisEntry]
    product: list[MapEntry] = Field(default_factory=list)
    differential: list[MapEntry] = Field(default_factory=list)
    d: int = 0


class BracketFile(_Strict):
    """A dg algebra with a double bracket of degree -d."""

    kind: Literal["bracket"]
    schema_version: Literal[1] = SCHEMA_VERSION
    basis: list[BasisEntry]
    product: list[MapEntry] = Field(default_factory=list)
    differential: list[MapEntry] = Field(default_factory=list)
    d: int
    bracket: list[MapEntry] = Field(default_factory=list)


class PInfinityFile(_Strict):
    """A graded algebra with brackets of every arity."""

    kind: Literal["pinfty"]
    schema_version: Literal[1] = SCHEMA_VERSION
    basis: list[BasisEntry]
    product: list[MapEntry] = Field(default_factory=list)
    brackets: dict[int, list[MapEntry]] = Field(default_factory=dict)


class AInfinityFile(_Strict):
    """Operations m_n on a split carrier, optionally with a bilinear form."""

    kind: Literal["ainfty"]
    schema_version: Literal[1] = SCHEMA_VERSION
    basis: list[BasisEntry]
    parts: Optional[list[Literal["A", "D"]]] = None
    ops: dict[int, list[MapEntry]] = Field(default_factory=dict)
    form: Optional[FormSpec] = None


class MorphismFile(_Strict):
    """φ: A → B between two algebra or bracket files."""

    kind: Literal["morphism"]
    schema_version: Literal[1] = SCHEMA_VERSION
    source: FileReference
    target: FileReference
    map: list[MapEntry] = Field(default_factory=list)


WorkbenchFile = Annotated[
    Union[AlgebraFile, BracketFile, PInfinityFile, AInfinityFile, MorphismFile],
    Field(discriminator="kind"),
]

workbench_file_adapter: TypeAdapter[WorkbenchFile] = TypeAdapter(WorkbenchFile)
