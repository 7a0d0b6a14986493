"""Unit tests for factory classes."""

import pytest

from precy_bench.storage.base import BaseStorage
from precy_bench.storage.factory import StorageFactory
from precy_bench.storage.file_storage import FileStorage
from precy_bench.utils.exceptions import ValidationError
from precy_bench.verifiers.ainfty import AInfinityVerifier
from precy_bench.verifiers.base import BaseVerifier
from precy_bench.verifiers.dpa import DpaVerifier
from precy_bench.verifiers.factory import VerifierFactory


class TestVerifierFactory:
    """Tests for VerifierFactory."""

    @pytest.mark.parametrize(
        "target, cls", [("dpa", DpaVerifier), ("ainfty", AInfinityVerifier)]
    )
    def test_create_verifier(self, test_config, target, cls) -> None:
        """Test creating a verifier per check target."""
        verifier: BaseVerifier = VerifierFactory.create(
            target, test_config, max_n=4, mode="FULL"
        )

        assert isinstance(verifier, cls)
        assert verifier.max_n == 4
        assert verifier.mode == "full"

    def test_create_unknown_verifier(self, test_config) -> None:
        """Test creating unknown verifier type."""
        with pytest.raises(ValidationError, match="Unknown verifier type"):
            VerifierFactory.create("lie", test_config)

    def test_list_available_verifiers(self) -> None:
        """Test listing available verifiers."""
        available: list[str] = VerifierFactory.list_available()

        assert available == ["dpa", "pinf", "ainfty"]

    def test_register(self, test_config, monkeypatch) -> None:
        """Test registering an extra target."""
        monkeypatch.setattr(VerifierFactory, "_verifiers", {"dpa": DpaVerifier})

        VerifierFactory.register("dpa-again", DpaVerifier)

        assert VerifierFactory.list_available() == ["dpa", "dpa-again"]
        assert isinstance(VerifierFactory.create("dpa-again", test_config), DpaVerifier)


class TestStorageFactory:
    """Tests for StorageFactory."""

    def test_create_file_storage(self, test_config) -> None:
        """Test creating file storage."""
        storage: BaseStorage = StorageFactory.create("file", test_config)

        assert isinstance(storage, FileStorage)
        assert storage.config is test_config

    def test_create_unknown_storage(self, test_config) -> None:
        """Test unknown backends name the available ones."""
        with pytest.raises(ValueError, match="Unknown storage type.*file"):
            StorageFactory.create("sqlite", test_config)

    def test_list_available_storage(self) -> None:
        """Test listing available storage types."""
        available: list[str] = StorageFactory.list_available()

        assert "file" in available

    def test_register(self, monkeypatch) -> None:
        """Test registering an extra backend."""
        monkeypatch.setattr(StorageFactory, "_storage_types", {"file": FileStorage})

        StorageFactory.register("memory", FileStorage)

        assert StorageFactory.list_available() == ["file", "memory"]
