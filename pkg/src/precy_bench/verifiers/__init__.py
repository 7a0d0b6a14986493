from .ainfty import AInfinityVerifier
from .base import BaseVerifier, Verification
from .dpa import DpaVerifier
from .factory import VerifierFactory
from .pinf import PInfinityVerifier

__all__ = [
    "AInfinityVerifier",
    "BaseVerifier",
    "DpaVerifier",
    "PInfinityVerifier",
    "Verification",
    "VerifierFactory",
]
