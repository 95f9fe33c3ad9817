import random
from fractions import Fraction
from pathlib import Path

from pivotlab.matrix import Matrix, read_matrix
from pivotlab.scalar import EXACT
from pivotlab.strategies import PivotChoice

FIXTURES = Path(__file__).parent / "fixtures"

WORKED = [[2, 5, 3, 2], [4, 10, 1, 7], [1, 5, 2, 1], [2, 1, 2, 1]]
WORKED_AS_PRINTED = [[2, 5, 3, 2], [4, 10, 1, 7], [1, 5, 2, 2], [2, 1, 2, 1]]
DET_PIVOTS = [(1, 1), (1, 2), (1, 1), (1, 1)]
INV_PIVOTS = [(1, 1), (2, 3), (3, 2), (4, 4)]


def F(text):
    return Fraction(text)


def worked_inverse():
    return read_matrix(FIXTURES / "worked_example_inverse.txt")


def random_rational(rng, n, num=9, den=5):
    return Matrix.from_rows(
        [[Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(n)] for _ in range(n)]
    )


def random_int(rng, n, bound=9):
    return Matrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


class RandomPivots:
    """A valid but arbitrary pivot rule; remembers its picks for replay."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.picks = []

    def __call__(self, state, arith=EXACT):
        cells = [
            (p, k)
            for p in state.candidate_rows()
            for k in state.candidate_cols()
            if not arith.is_zero(state.value(p, k))
        ]
        if not cells:
            return None
        p, k = self.rng.choice(cells)
        self.picks.append((p, k))
        return PivotChoice(p, k, state.value(p, k))
