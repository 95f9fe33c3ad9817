"""Ill-conditioning benchmark.

For each (family, order, strategy, arithmetic) cell the inverse is
computed and checked against an exact-rational reference: the residual is
``max |A @ inv - I|`` evaluated exactly, with the computed inverse lifted
to rationals, so rounding in the check itself never pollutes the number.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .determinant import run as run_det
from .dictionary import Singular, inverse_trace
from .matrix import ActiveView, Matrix, hilbert, multiply, residual_vs_identity
from .scalar import EXACT, arithmetic
from .strategies import STRATEGIES

FAMILIES = ("hilbert", "random-int", "rank-deficient")


def random_int(n: int, seed: int = 0) -> Matrix:
    rng = random.Random(f"random-int/{n}/{seed}")
    while True:
        m = Matrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        if run_det(ActiveView.of(m))[0] != 0:
            return m


def rank_deficient(n: int, seed: int = 0) -> Matrix:
    """Random integer matrix whose last row is the sum of the others."""
    rng = random.Random(f"rank-deficient/{n}/{seed}")
    rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n - 1)]
    rows.append([sum(col) for col in zip(*rows)] if rows else [0])
    return Matrix.from_rows(rows)


def family_matrix(family: str, n: int, seed: int = 0) -> Matrix:
    if family == "hilbert":
        return hilbert(n)
    if family == "random-int":
        return random_int(n, seed)
    if family == "rank-deficient":
        return rank_deficient(n, seed)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def parse_orders(text: str) -> list[int]:
    """``"6"`` or ``"2..6"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"bad order range {text!r}") from None
    if a < 1 or b < a:
        raise ValueError(f"bad order range {text!r}")
    return list(range(a, b + 1))


@dataclass
class BenchRow:
    family: str
    n: int
    strategy: str
    arith: str
    singular: bool
    residual: float | None
    inverse_error: float | None
    pivots: int
    seconds: float
    active_dimensions: list[int]


def exact_residual(a: Matrix, approx_inverse: Matrix) -> Fraction:
    lifted = Matrix.from_rows(approx_inverse.rows, EXACT)
    return residual_vs_identity(multiply(a, lifted)).max_abs_deviation


def bench_cell(exact_a: Matrix, reference, family: str, strategy_name: str, arith) -> BenchRow:
    strategy = STRATEGIES[strategy_name]
    a = exact_a if arith is EXACT else exact_a.convert(arith)
    start = time.perf_counter()
    result, steps = inverse_trace(a, strategy, arith, snapshots=False)
    view = ActiveView.of(a)
    run_det(view, strategy, arith)
    elapsed = time.perf_counter() - start
    if isinstance(result, Singular):
        residual = error = None
    else:
        residual = float(exact_residual(exact_a, result))
        if isinstance(reference, Singular):
            error = None
        else:
            error = float(max(
                abs(Fraction(u) - v)
                for ru, rv in zip(result.rows, reference.rows)
                for u, v in zip(ru, rv)
            ))
    return BenchRow(
        family, exact_a.n, strategy_name, arith.name, isinstance(result, Singular),
        residual, error, len(steps), elapsed, list(view.dimensions),
    )


def run_bench(family: str, orders, strategies=None, modes=("exact", "float"), epsilon=None, seed=0):
    strategies = list(strategies or STRATEGIES)
    rows = []
    for n in orders:
        exact_a = family_matrix(family, n, seed)
        reference = inverse_trace(exact_a, snapshots=False)[0]
        for mode in modes:
            arith = arithmetic(mode, epsilon)
            for name in strategies:
                rows.append(bench_cell(exact_a, reference, family, name, arith))
    return rows


def format_table(rows) -> str:
    header = f"{'family':<15}{'n':>3}  {'strategy':<14}{'arith':<7}{'pivots':>7}  {'residual':>11}  {'inv error':>11}  {'ms':>8}"
    lines = [header, "-" * len(header)]
    for r in rows:
        res = "singular" if r.singular else f"{r.residual:.3e}"
        err = "-" if r.inverse_error is None else f"{r.inverse_error:.3e}"
        lines.append(
            f"{r.family:<15}{r.n:>3}  {r.strategy:<14}{r.arith:<7}{r.pivots:>7}  {res:>11}  {err:>11}  {r.seconds * 1e3:>8.2f}"
        )
    return "\n".join(lines)


def to_records(rows) -> list[dict]:
    return [asdict(r) for r in rows]

