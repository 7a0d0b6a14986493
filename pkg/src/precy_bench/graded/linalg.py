"""Exact row reduction over the rationals, backed by sympy."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from sympy import Matrix, Rational

Row = Sequence[Fraction]


def to_matrix(rows: Sequence[Row], ncols: int) -> Matrix:
    """Build a sympy Matrix with exact Rational entries."""
    if not rows:
        return Matrix.zeros(0, ncols)
    return Matrix(
        [[Rational(v.numerator, v.denominator) for v in row] for row in rows]
    )


def from_sympy(value: object) -> Fraction:
    rational: Rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def rank(rows: Sequence[Row], ncols: int) -> int:
    """Rank of the matrix whose rows are given."""
    if not rows or ncols == 0:
        return 0
    return int(to_matrix(rows, ncols).rank())


def nullspace(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} for the matrix M with the given rows."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = to_matrix(rows, ncols).nullspace()
    return [[from_sympy(v) for v in vec] for vec in basis]


def row_space(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    """Reduced row echelon basis of the span of `rows`."""
    if not rows or ncols == 0:
        return []
    reduced, pivots = to_matrix(rows, ncols).rref()
    return [[from_sympy(v) for v in reduced.row(i)] for i in range(len(pivots))]


def complement_indices(span: Sequence[Row], ncols: int) -> list[int]:
    """
    Standard basis indices extending `span` to a basis, chosen greedily in
    input order.
    """
    chosen: list[int] = []
    current: list[list[Fraction]] = [list(row) for row in span]
    current_rank: int = rank(current, ncols)
    for i in range(ncols):
        candidate: list[Fraction] = [Fraction(int(i == j)) for j in range(ncols)]
        new_rank: int = rank(current + [candidate], ncols)
        if new_rank > current_rank:
            chosen.append(i)
            current.append(candidate)
            current_rank = new_rank
    return chosen


def solve(columns: Sequence[Row], target: Row) -> Optional[list[Fraction]]:
    """
    Coefficients c with Σ c_i columns[i] = target, or None if target is
    outside the span. Columns are assumed linearly independent.
    """
    size: int = len(target)
    if not columns:
        return [] if all(v == 0 for v in target) else None
    matrix: Matrix = to_matrix(
        [[columns[j][i] for j in range(len(columns))] for i in range(size)],
        len(columns),
    )
    augmented: Matrix = matrix.row_join(to_matrix([[v] for v in target], 1))
    if augmented.rank() != matrix.rank():
        return None
    solution, params = matrix.gauss_jordan_solve(to_matrix([[v] for v in target], 1))
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [from_sympy(v) for v in solution]
