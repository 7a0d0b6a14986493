from .check import check_ainfty, check_dpa, check_pinf
from .workflow import cohomology, compose, quasiiso, roundtrip

__all__ = [
    "check_ainfty",
    "check_dpa",
    "check_pinf",
    "cohomology",
    "compose",
    "quasiiso",
    "roundtrip",
]
