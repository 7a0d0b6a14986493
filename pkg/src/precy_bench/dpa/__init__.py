"""Double Poisson dg algebras."""

from precy_bench.dpa.axioms import (
    antisymmetrize,
    check_antisymmetry,
    check_closed,
    check_dg_algebra,
    check_double_jacobi,
    check_double_poisson,
    check_leibniz,
    check_leibniz_uform,
)
from precy_bench.dpa.quotient import QuotientLieData, induced_quotient_lie

__all__ = [
    "QuotientLieData",
    "antisymmetrize",
    "check_antisymmetry",
    "check_closed",
    "check_dg_algebra",
    "check_double_jacobi",
    "check_double_poisson",
    "check_leibniz",
    "check_leibniz_uform",
    "induced_quotient_lie",
]
