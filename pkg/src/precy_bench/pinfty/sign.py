"""The closed-form sign relating ⟨…⟩_p to γ(m_{2p-1}(...), -)."""

from collections.abc import Sequence

from precy_bench.graded.signs import parity
from precy_bench.utils.exceptions import DimensionError


def sign_s(adegrees: Sequence[int], fdegrees: Sequence[int]) -> int:
    """
    s^{a_1..a_p}_{f_1..f_p} = (-1)^e with
    e = |a_p||f_1| + (p+1)(|a_p| + |f_1|) + Σ_j (p-j)|a_j| + Σ_j (j-1)|f_j|
        + Σ_{1≤i<j<p} |a_i||a_j| + Σ_{1<i<j≤p} |f_i||f_j| + Σ_{1<i≤j<p} |f_i||a_j|.

    Raises:
        DimensionError: If the tuples differ in length or are empty
    """
    if len(adegrees) != len(fdegrees):
        raise DimensionError(
            f"{len(adegrees)} element degrees but {len(fdegrees)} functional degrees"
        )
    p: int = len(adegrees)
    if p < 1:
        raise DimensionError("sign_s needs p ≥ 1")
    a: list[int] = [0, *adegrees]
    f: list[int] = [0, *fdegrees]
    exponent: int = a[p] * f[1] + (p + 1) * (a[p] + f[1])
    exponent += sum((p - j) * a[j] for j in range(1, p + 1))
    exponent += sum((j - 1) * f[j] for j in range(1, p + 1))
    exponent += sum(a[i] * a[j] for j in range(1, p) for i in range(1, j))
    exponent += sum(f[i] * f[j] for j in range(2, p + 1) for i in range(2, j))
    exponent += sum(f[i] * a[j] for j in range(2, p) for i in range(2, j + 1))
    return parity(exponent)
