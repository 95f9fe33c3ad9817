"""Pivot selection rules shared by the determinant and inverse engines.

A strategy is any callable ``strategy(state, arith) -> PivotChoice | None``.
``state`` exposes ``candidate_rows()``, ``candidate_cols()`` (1-based
positions) and ``value(p, k)``; both :class:`~pivotlab.matrix.ActiveView`
and :class:`~pivotlab.dictionary.Dictionary` qualify.  A strategy returns
``None`` only when it finds no non-zero candidate.

Ties always go to the lexicographically smallest ``(p, k)``.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Sequence

from .scalar import EXACT


class PivotChoice(NamedTuple):
    p: int
    k: int
    value: object


class ScriptedPivotError(ValueError):
    def __init__(self, step: int, message: str):
        self.step = step
        super().__init__(f"scripted pivot step {step}: {message}")


def first_nonzero(state, arith=EXACT) -> PivotChoice | None:
    cols = list(state.candidate_cols())
    for p in state.candidate_rows():
        for k in cols:
            v = state.value(p, k)
            if not arith.is_zero(v):
                return PivotChoice(p, k, v)
    return None


def row_max_magnitude(state, arith=EXACT) -> PivotChoice | None:
    """First row with a usable entry; largest magnitude within that row."""
    cols = list(state.candidate_cols())
    for p in state.candidate_rows():
        best = None
        for k in cols:
            v = state.value(p, k)
            if arith.is_zero(v):
                continue
            if best is None or abs(v) > abs(best.value):
                best = PivotChoice(p, k, v)
        if best is not None:
            return best
    return None


def global_max_magnitude(state, arith=EXACT) -> PivotChoice | None:
    cols = list(state.candidate_cols())
    best = None
    for p in state.candidate_rows():
        for k in cols:
            v = state.value(p, k)
            if arith.is_zero(v):
                continue
            if best is None or abs(v) > abs(best.value):
                best = PivotChoice(p, k, v)
    return best


class Scripted:
    """Replays a fixed sequence of ``(p, k)`` positions.

    Carries a cursor, so one instance serves exactly one engine run.
    """

    def __init__(self, sequence: Sequence[tuple[int, int]]):
        self.sequence = [tuple(pair) for pair in sequence]
        self.cursor = 0

    def __call__(self, state, arith=EXACT) -> PivotChoice:
        step = self.cursor + 1
        if self.cursor >= len(self.sequence):
            raise ScriptedPivotError(step, "script exhausted")
        p, k = self.sequence[self.cursor]
        if p not in state.candidate_rows():
            raise ScriptedPivotError(step, f"row position {p} is not a candidate")
        if k not in state.candidate_cols():
            raise ScriptedPivotError(step, f"column position {k} is not a candidate")
        v = state.value(p, k)
        if arith.is_zero(v):
            raise ScriptedPivotError(step, f"zero pivot at ({p}, {k})")
        self.cursor += 1
        return PivotChoice(p, k, v)


def scripted(sequence: Sequence[tuple[int, int]]) -> Scripted:
    return Scripted(sequence)


def parse_script(text: str) -> list[tuple[int, int]]:
    """Read one ``p k`` pair per line; blank and ``#`` lines are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2 or not all(x.isdigit() for x in parts):
            raise ValueError(f"line {lineno}: expected 'p k', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


STRATEGIES: dict[str, Callable] = {
    "first-nonzero": first_nonzero,
    "row-max": row_max_magnitude,
    "global-max": global_max_magnitude,
}


def get_strategy(name: str):
    """Resolve a CLI strategy name; ``scripted:<file>`` loads a pivot script."""
    if name.startswith("scripted:"):
        path = name.split(":", 1)[1]
        with open(path, encoding="utf-8") as fh:
            return Scripted(parse_script(fh.read()))
    try:
        return STRATEGIES[name]
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}") from None
