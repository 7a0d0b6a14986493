from .base import BaseStorage
from .codec import WorkbenchDocument, decode, document_for, encode
from .factory import StorageFactory
from .file_storage import FileStorage, sha256_file
from .schemas import SCHEMA_VERSION, FileReference

__all__ = [
    "BaseStorage",
    "FileReference",
    "FileStorage",
    "SCHEMA_VERSION",
    "StorageFactory",
    "WorkbenchDocument",
    "decode",
    "document_for",
    "encode",
    "sha256_file",
]
