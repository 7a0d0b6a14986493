"""Base storage interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from precy_bench.storage.codec import WorkbenchDocument
from precy_bench.storage.schemas import FileReference


class BaseStorage(ABC):
    """Abstract base class for workbench file backends."""

    @abstractmethod
    def parse(self, text: str, path: Optional[Path] = None) -> WorkbenchDocument:
        """
        Parse and validate workbench text.

        Args:
            text: Document text
            path: Where the text came from; morphism references resolve
                relative to its directory

        Returns:
            WorkbenchDocument instance
        """
        pass

    @abstractmethod
    def dumps(self, document: WorkbenchDocument) -> str:
        """
        Canonical text of a document.

        Args:
            document: Document to serialize

        Returns:
            str: Byte-stable canonical text
        """
        pass

    @abstractmethod
    def load(self, path: Path) -> WorkbenchDocument:
        """
        Load a document from a path.

        Args:
            path: File to read

        Returns:
            WorkbenchDocument instance
        """
        pass

    @abstractmethod
    def save(self, document: WorkbenchDocument, path: Path) -> Path:
        """
        Write the canonical text of a document.

        Args:
            document: Document to save
            path: Destination file

        Returns:
            Path: The written file
        """
        pass

    @abstractmethod
    def reference(self, path: Path, relative_to: Path) -> FileReference:
        """
        Reference to `path` as seen from the directory `relative_to`.

        Args:
            path: Referenced file
            relative_to: Directory of the referring file

        Returns:
            Relative path plus content hash
        """
        pass
