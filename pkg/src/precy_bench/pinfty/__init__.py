"""Double P∞ algebras and their pre-Calabi-Yau counterparts."""

from precy_bench.pinfty.axioms import (
    antisymmetry_result,
    check_p_infinity,
    conjugate,
    jacobi_defect,
    leibniz_defect,
    nested_bracket,
)
from precy_bench.pinfty.correspondence import (
    interleaved_key,
    leading_sector,
    pinfty_from_precy,
    pinfty_report,
    precy_from_pinfty,
)
from precy_bench.pinfty.sign import sign_s

__all__ = [
    "antisymmetry_result",
    "check_p_infinity",
    "conjugate",
    "interleaved_key",
    "jacobi_defect",
    "leading_sector",
    "leibniz_defect",
    "nested_bracket",
    "pinfty_from_precy",
    "pinfty_report",
    "precy_from_pinfty",
    "sign_s",
]
