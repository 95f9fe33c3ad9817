"""Matrix inversion by dictionary pivoting.

The matrix ``A`` is read as the dictionary ``y = A x``: rows are labelled
by the basic variables ``y_1..y_n`` and columns by the non-basic
``x_1..x_n``.  Each pivot at ``(p, k)`` exchanges the basic row label with
the non-basic column label.  Once every ``x`` is basic the tableau
expresses ``x`` in terms of ``y``, and the inverse is read off by label:
entry ``(i, j)`` sits at row ``x_i``, column ``y_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .matrix import Matrix
from .scalar import EXACT
from .strategies import first_nonzero


class VarLabel(NamedTuple):
    kind: str  # "x" or "y"
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


def x(i: int) -> VarLabel:
    return VarLabel("x", i)


def y(i: int) -> VarLabel:
    return VarLabel("y", i)


class ZeroPivotError(ValueError):
    pass


class GatherError(RuntimeError):
    """The dictionary still has a basic ``y`` row; an engine bug if raised."""


@dataclass
class Dictionary:
    tableau: list[list]
    row_labels: list[VarLabel]
    col_labels: list[VarLabel]

    @property
    def n(self) -> int:
        return len(self.tableau)

    def candidate_rows(self) -> list[int]:
        """Positions of rows whose basic variable is still a ``y``."""
        return [p for p, lab in enumerate(self.row_labels, 1) if lab.kind == "y"]

    def candidate_cols(self) -> list[int]:
        """Positions of columns whose non-basic variable is still an ``x``."""
        return [k for k, lab in enumerate(self.col_labels, 1) if lab.kind == "x"]

    def value(self, p: int, k: int):
        return self.tableau[p - 1][k - 1]

    def copy(self) -> "Dictionary":
        return replace(
            self,
            tableau=[list(row) for row in self.tableau],
            row_labels=list(self.row_labels),
            col_labels=list(self.col_labels),
        )

    def basis(self) -> list[str]:
        return [str(lab) for lab in self.row_labels]

    def __eq__(self, other):
        if not isinstance(other, Dictionary):
            return NotImplemented
        return (
            self.tableau == other.tableau
            and self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
        )


def dictionary_of(a: Matrix) -> Dictionary:
    n = a.n
    return Dictionary(a.to_lists(), [y(i) for i in range(1, n + 1)], [x(j) for j in range(1, n + 1)])


def pivot_in_place(d: Dictionary, p: int, k: int, arith=EXACT) -> Dictionary:
    t = d.tableau
    pi, pk = p - 1, k - 1
    a_pk = t[pi][pk]
    if arith.is_zero(a_pk):
        raise ZeroPivotError(f"zero pivot at ({p}, {k})")
    pivot_row = t[pi]
    for i, row in enumerate(t):
        if i == pi:
            continue
        m = -row[pk] / a_pk
        if m != 0:
            for j in range(d.n):
                if j != pk:
                    row[j] = row[j] + pivot_row[j] * m
        row[pk] = m
    for j in range(d.n):
        if j != pk:
            pivot_row[j] = pivot_row[j] / a_pk
    pivot_row[pk] = 1 / a_pk
    d.row_labels[pi], d.col_labels[pk] = d.col_labels[pk], d.row_labels[pi]
    return d


def pivot(d: Dictionary, p: int, k: int, arith=EXACT) -> Dictionary:
    """Return a new dictionary with ``x``/``y`` exchanged at ``(p, k)``."""
    return pivot_in_place(d.copy(), p, k, arith)


def gather(d: Dictionary) -> Matrix:
    if any(lab.kind != "x" for lab in d.row_labels) or any(lab.kind != "y" for lab in d.col_labels):
        raise GatherError("every row must be labelled x_i and every column y_j")
    row_of = {lab.index: pos for pos, lab in enumerate(d.row_labels)}
    col_of = {lab.index: pos for pos, lab in enumerate(d.col_labels)}
    n = d.n
    return Matrix(
        tuple(
            tuple(d.tableau[row_of[i]][col_of[j]] for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
    )


@dataclass(frozen=True)
class Singular:
    """No inverse: the basic row ``row`` has only zeros in non-basic ``x`` columns."""

    row: VarLabel | None = None
    position: int | None = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class InvTraceStep:
    iteration: int
    p: int
    k: int
    entering: VarLabel
    leaving: VarLabel
    pivot: object
    basis: tuple[str, ...]
    snapshot: Dictionary | None = None


def _stuck_row(d: Dictionary, arith) -> int | None:
    cols = d.candidate_cols()
    for p in d.candidate_rows():
        if all(arith.is_zero(d.value(p, k)) for k in cols):
            return p
    return None


def inverse_trace(a: Matrix, strategy=first_nonzero, arith=EXACT, snapshots: bool = True):
    """Return ``(Matrix | Singular, steps)``."""
    d = dictionary_of(a)
    steps: list[InvTraceStep] = []
    while d.candidate_rows():
        stuck = _stuck_row(d, arith)
        choice = None if stuck is not None else strategy(d, arith)
        if choice is None:
            if stuck is None:
                stuck = d.candidate_rows()[0]
            return Singular(d.row_labels[stuck - 1], stuck), steps
        p, k, value = choice
        entering, leaving = d.col_labels[k - 1], d.row_labels[p - 1]
        pivot_in_place(d, p, k, arith)
        steps.append(
            InvTraceStep(
                len(steps) + 1, p, k, entering, leaving, value, tuple(d.basis()),
                d.copy() if snapshots else None,
            )
        )
    return gather(d), steps


def inverse(a: Matrix, strategy=first_nonzero, arith=EXACT):
    """Inverse of ``a``, or a falsy :class:`Singular` when none exists."""
    return inverse_trace(a, strategy, arith, snapshots=False)[0]
