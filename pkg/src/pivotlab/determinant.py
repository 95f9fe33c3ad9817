"""Determinant by repeated single-pivot elimination with order reduction.

Each iteration picks a non-zero pivot at active position ``(p, k)``,
updates every other surviving entry by

    a_ij <- a_ij - a_ik * a_pj / a_pk

then drops row ``p`` and column ``k`` from the view.  The running product
is multiplied by ``(-1)**(p + k) * a_pk``, where ``p`` and ``k`` are
positions inside the *current* view, not original labels.  An active row
with no non-zero entry ends the run with determinant zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import ActiveView, Matrix
from .scalar import EXACT
from .strategies import first_nonzero


class ZeroPivotError(ValueError):
    """A pivot that fails the zero test was handed to an elimination step."""


@dataclass(frozen=True)
class DetTraceStep:
    """One iteration.  ``k``/``pivot``/``sign`` are None for a zero-row stop."""

    iteration: int
    p: int
    k: int | None
    row_label: int
    col_label: int | None
    pivot: object
    sign: int | None
    d_accum: object
    snapshot: tuple | None = None

    @property
    def empty_candidates(self) -> bool:
        return self.k is None


def eliminate(view: ActiveView, p: int, k: int, arith=EXACT) -> ActiveView:
    """Eliminate around active position ``(p, k)`` in place and shrink the view."""
    pivot = view.value(p, k)
    if arith.is_zero(pivot):
        raise ZeroPivotError(f"zero pivot at active position ({p}, {k})")
    order = view.order
    pivot_row = [view.value(p, j) for j in range(1, order + 1)]
    for i in range(1, order + 1):
        if i == p:
            continue
        a_ik = view.value(i, k)
        if a_ik == 0:
            continue
        factor = a_ik / pivot
        for j in range(1, order + 1):
            if j != k:
                view.set_value(i, j, view.value(i, j) - factor * pivot_row[j - 1])
    view.remove(p, k)
    return view


def _zero_row(view: ActiveView, arith) -> int | None:
    cols = view.candidate_cols()
    for p in view.candidate_rows():
        if all(arith.is_zero(view.value(p, k)) for k in cols):
            return p
    return None


def run(view: ActiveView, strategy=first_nonzero, arith=EXACT, snapshots: bool = False):
    """Drive the elimination loop on an existing view.

    Returns ``(d, steps)``.  Split from :func:`determinant` so callers can
    measure the loop separately from the one-time buffer setup.
    """
    d = arith.one
    steps: list[DetTraceStep] = []
    iteration = 0
    while view.order:
        iteration += 1
        zero_p = _zero_row(view, arith)
        choice = None if zero_p is not None else strategy(view, arith)
        if choice is None:
            p = zero_p if zero_p is not None else 1
            steps.append(
                DetTraceStep(iteration, p, None, view.active_rows[p - 1], None, None, None, arith.zero)
            )
            return arith.zero, steps
        p, k, pivot = choice
        row_label, col_label = view.active_rows[p - 1], view.active_cols[k - 1]
        sign = -1 if (p + k) % 2 else 1
        d = d * pivot if sign > 0 else -(d * pivot)
        eliminate(view, p, k, arith)
        snap = tuple(map(tuple, view.snapshot())) if snapshots else None
        steps.append(DetTraceStep(iteration, p, k, row_label, col_label, pivot, sign, d, snap))
    return d, steps


def determinant(a: Matrix, strategy=first_nonzero, arith=EXACT):
    return run(ActiveView.of(a), strategy, arith)[0]


def determinant_trace(a: Matrix, strategy=first_nonzero, arith=EXACT, snapshots: bool = True):
    return run(ActiveView.of(a), strategy, arith, snapshots)
