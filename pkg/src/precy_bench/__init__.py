"""precy-bench - exact checks for double Poisson and pre-Calabi-Yau structures."""

__version__ = "0.1.0"

# Expose main components at package level
from precy_bench.core.config import Config  # noqa: E402
from precy_bench.core.orchestrator import Workbench  # noqa: E402
from precy_bench.storage.factory import StorageFactory  # noqa: E402
from precy_bench.verifiers.factory import VerifierFactory  # noqa: E402

__all__ = [
    "Config",
    "StorageFactory",
    "VerifierFactory",
    "Workbench",
]
