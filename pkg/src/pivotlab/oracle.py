"""Slow reference results for cross-checking the engines.

Cofactor expansion along the first row, and the classical adjugate
inverse.  Exact mode only; both refuse large orders because their cost is
factorial.
"""

from __future__ import annotations

from fractions import Fraction

from .dictionary import Singular
from .matrix import Matrix

MAX_DET_ORDER = 10
MAX_INVERSE_ORDER = 8


class OracleRefusal(ValueError):
    pass


def _minor(rows, i, j):
    return [row[:j] + row[j + 1:] for r, row in enumerate(rows) if r != i]


def _laplace(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        term = a * _laplace(_minor(rows, 0, j))
        total = total - term if j % 2 else total + term
    return total


def _rows(a: Matrix):
    return [[Fraction(v) for v in row] for row in a.rows]


def laplace_det(a: Matrix) -> Fraction:
    if a.n > MAX_DET_ORDER:
        raise OracleRefusal(f"order {a.n} exceeds Laplace guard {MAX_DET_ORDER}")
    return Fraction(_laplace(_rows(a)))


def adjugate_inverse(a: Matrix):
    if a.n > MAX_INVERSE_ORDER:
        raise OracleRefusal(f"order {a.n} exceeds adjugate guard {MAX_INVERSE_ORDER}")
    rows = _rows(a)
    det = Fraction(_laplace(rows))
    if det == 0:
        return Singular()
    n = a.n
    if n == 1:
        return Matrix(((1 / det,),))
    return Matrix(
        tuple(
            tuple(
                (-1) ** (i + j) * Fraction(_laplace(_minor(rows, j, i))) / det
                for j in range(n)
            )
            for i in range(n)
        )
    )
