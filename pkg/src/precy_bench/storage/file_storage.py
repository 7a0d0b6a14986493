"""File-based storage implementation."""

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError as SchemaError

from precy_bench.core.config import Config
from precy_bench.models.algebra import PoissonAlgebra
from precy_bench.storage.base import BaseStorage
from precy_bench.storage.codec import WorkbenchDocument, decode, encode
from precy_bench.storage.schemas import (
    FileReference,
    WorkbenchFile,
    workbench_file_adapter,
)
from precy_bench.utils.exceptions import ParseError, StorageError, ValidationError

logger = logging.getLogger(__name__)


def sha256_file(path: Path) -> str:
    """Hex digest of the raw bytes of a file."""
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _describe(error: SchemaError) -> str:
    first: Any = error.errors()[0]
    location: str = ".".join(str(part) for part in first["loc"])
    return f"schema violation at {location or '<root>'}: {first['msg']}"


class FileStorage(BaseStorage):
    """JSON workbench files on the local filesystem."""

    def __init__(self, config: Config) -> None:
        """
        Initialize file storage.

        Args:
            config: Application configuration
        """
        self.config: Config = config

    def parse(self, text: str, path: Optional[Path] = None) -> WorkbenchDocument:
        """
        Parse JSON text into a document.

        A missing `kind` reads as an algebra file. Morphism references
        resolve against the directory of `path`, or the working directory.

        Raises:
            ParseError: Malformed JSON (with line and column) or a schema
                violation (with its location in the document)
            ValidationError: Unknown symbols, degree mismatches
            StorageError: Missing referenced file or content hash drift
        """
        label: Optional[str] = str(path) if path is not None else None
        try:
            data: Any = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, line=e.lineno, column=e.colno, path=label) from e
        if isinstance(data, dict):
            data.setdefault("kind", "algebra")
        try:
            file: WorkbenchFile = workbench_file_adapter.validate_python(data)
        except SchemaError as e:
            raise ParseError(_describe(e), path=label) from e

        base_dir: Path = path.parent if path is not None else Path.cwd()
        try:
            document: WorkbenchDocument = decode(
                file, resolver=lambda ref: self._resolve(ref, base_dir)
            )
        except ValidationError as e:
            if isinstance(e, ParseError) or label is None:
                raise
            raise ValidationError(f"{label}: {e}") from e
        logger.debug("Parsed %r", document)
        return document

    def _resolve(self, ref: FileReference, base_dir: Path) -> PoissonAlgebra:
        target: Path = base_dir / ref.path
        if not target.exists():
            raise StorageError(f"Referenced file not found: {ref.path}")
        digest: str = sha256_file(target)
        if digest != ref.sha256:
            raise StorageError(
                f"Content hash drift for {ref.path}: "
                f"expected {ref.sha256[:12]}…, found {digest[:12]}…"
            )
        document: WorkbenchDocument = self.load(target)
        if not isinstance(document.value, PoissonAlgebra):
            raise ValidationError(
                f"{ref.path}: morphisms connect algebra or bracket files, "
                f"got {document.kind!r}"
            )
        return document.value

    def dumps(self, document: WorkbenchDocument) -> str:
        data: dict[str, Any] = encode(document).model_dump(
            mode="json", exclude_none=True
        )
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def load(self, path: Path) -> WorkbenchDocument:
        if not path.exists():
            raise StorageError(f"File not found: {path}")
        try:
            text: str = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8 text: {e.reason}", path=str(path)) from e
        except OSError as e:
            raise StorageError(f"Failed to read file: {e}") from e
        return self.parse(text, path)

    def save(self, document: WorkbenchDocument, path: Path) -> Path:
        text: str = self.dumps(document)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise StorageError(f"Failed to save {document.kind} file: {e}") from e
        logger.info("Wrote %s file %s", document.kind, path)
        return path

    def reference(self, path: Path, relative_to: Path) -> FileReference:
        if not path.exists():
            raise StorageError(f"File not found: {path}")
        relative: str = Path(os.path.relpath(path, relative_to)).as_posix()
        return FileReference(path=relative, sha256=sha256_file(path))
