"""Completing a good operation from its A-leading sector by cyclic rotation."""

from collections import defaultdict
from fractions import Fraction

from precy_bench.graded.signs import parity
from precy_bench.graded.space import GradedSpace
from precy_bench.graded.tensor import Key
from precy_bench.models.ainfty import BilinearForm
from precy_bench.utils.exceptions import ValidationError

Entries = dict[Key, dict[Key, Fraction]]


def _left_partners(form: BilinearForm) -> dict[int, tuple[int, Fraction]]:
    """x ↦ (u, γ(u, x)) for the unique u pairing with x from the left."""
    partners: dict[int, tuple[int, Fraction]] = {}
    for (u, x), out in form.table.entries.items():
        if x in partners:
            raise ValidationError("Form pairs a basis vector with several partners")
        partners[x] = (u, out[()])
    return partners


def rotate_leading_sector(form: BilinearForm, n: int, leading: Entries) -> Entries:
    """
    The D-leading sector of m_n determined by its A-leading sector and
    γ(m_n(x_1, ..., x_n), x_0) = (-1)^{n + |x_0|Σ|x_i|} γ(m_n(x_0, ..., x_{n-1}), x_n).

    `leading` holds m_n on tuples (x_0, ..., x_{n-1}) with x_0 in the
    A-part; the result holds m_n on (x_1, ..., x_n).
    """
    space: GradedSpace = form.space
    left: dict[int, tuple[int, Fraction]] = _left_partners(form)
    result: defaultdict[Key, defaultdict[Key, Fraction]] = defaultdict(
        lambda: defaultdict(Fraction)
    )
    for key, out in leading.items():
        x0: int = key[0]
        if x0 not in left:
            continue
        u, pairing = left[x0]
        for (k,), coeff in out.items():
            for last, value in form.partners(k):
                rotated: Key = key[1:] + (last,)
                rest: int = sum(space.degree(i) for i in rotated)
                sign: int = parity(n + space.degree(x0) * rest)
                result[rotated][(u,)] += sign * coeff * value / pairing
    return {k: dict(v) for k, v in result.items()}
