"""Verifier factory for the `check` targets."""

from typing import Dict, Optional, Type

from precy_bench.core.config import Config
from precy_bench.utils.exceptions import ValidationError
from precy_bench.verifiers.ainfty import AInfinityVerifier
from precy_bench.verifiers.base import BaseVerifier
from precy_bench.verifiers.dpa import DpaVerifier
from precy_bench.verifiers.pinf import PInfinityVerifier


class VerifierFactory:
    """Factory for creating verifier instances."""

    _verifiers: Dict[str, Type[BaseVerifier]] = {
        "dpa": DpaVerifier,
        "pinf": PInfinityVerifier,
        "ainfty": AInfinityVerifier,
    }

    @classmethod
    def create(
        cls,
        target: str,
        config: Config,
        max_n: Optional[int] = None,
        mode: str = "generators",
    ) -> BaseVerifier:
        """Create a verifier instance."""
        verifier_class: Type[BaseVerifier] | None = cls._verifiers.get(target)

        if not verifier_class:
            available: str = ", ".join(cls._verifiers.keys())
            raise ValidationError(
                f"Unknown verifier type: '{target}'. Available verifiers: {available}"
            )

        return verifier_class(config, max_n=max_n, mode=mode)

    @classmethod
    def register(cls, name: str, verifier_class: Type[BaseVerifier]) -> None:
        """Register a new verifier implementation."""
        cls._verifiers[name] = verifier_class

    @classmethod
    def list_available(cls) -> list[str]:
        """List all available verifier types."""
        return list(cls._verifiers.keys())
