import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import INV_PIVOTS, WORKED, RandomPivots, random_rational, worked_inverse
from pivotlab.determinant import determinant
from pivotlab.dictionary import (
    Dictionary, GatherError, Singular, ZeroPivotError, dictionary_of, gather, inverse,
    inverse_trace, pivot, x, y,
)
from pivotlab.matrix import Matrix, identity, multiply
from pivotlab.oracle import adjugate_inverse
from pivotlab.scalar import arithmetic
from pivotlab.strategies import first_nonzero, global_max_magnitude, row_max_magnitude, scripted

F = Fraction

ITER1 = [[F(1, 2), F(5, 2), F(3, 2), 1], [-2, 0, -5, 3], [F(-1, 2), F(5, 2), F(1, 2), 0], [-1, -4, -1, -1]]
ITER2 = [
    [F(-1, 10), F(5, 2), F(3, 10), F(19, 10)],
    [F(2, 5), 0, F(-1, 5), F(-3, 5)],
    [F(-7, 10), F(5, 2), F(1, 10), F(3, 10)],
    [F(-3, 5), -4, F(-1, 5), F(-8, 5)],
]
ITER3 = [
    [F(3, 5), -1, F(1, 5), F(8, 5)],
    [F(2, 5), 0, F(-1, 5), F(-3, 5)],
    [F(-7, 25), F(2, 5), F(1, 25), F(3, 25)],
    [F(-43, 25), F(8, 5), F(-1, 25), F(-28, 25)],
]
ITER4 = [
    [F(-13, 7), F(9, 7), F(1, 7), F(10, 7)],
    [F(37, 28), F(-6, 7), F(-5, 28), F(-15, 28)],
    [F(-13, 28), F(4, 7), F(1, 28), F(3, 28)],
    [F(43, 28), F(-10, 7), F(1, 28), F(-25, 28)],
]


def test_dictionary_of():
    d = dictionary_of(Matrix.from_rows(WORKED))
    assert d.tableau == WORKED
    assert d.row_labels == [y(1), y(2), y(3), y(4)]
    assert d.col_labels == [x(1), x(2), x(3), x(4)]
    d = dictionary_of(identity(2))
    assert d.tableau == [[1, 0], [0, 1]] and d.row_labels == [y(1), y(2)]
    d = dictionary_of(Matrix.from_rows([[5]]))
    assert d.tableau == [[5]] and d.row_labels == [y(1)] and d.col_labels == [x(1)]


def test_pivot_worked_iterations():
    d1 = pivot(dictionary_of(Matrix.from_rows(WORKED)), 1, 1)
    assert d1.tableau == ITER1
    assert d1.row_labels[0] == x(1) and d1.col_labels[0] == y(1)
    d2 = pivot(d1, 2, 3)
    assert d2.tableau == ITER2
    assert [str(v) for v in d2.col_labels] == ["y1", "x2", "y2", "x4"]


def test_pivot_one_by_one():
    d = pivot(dictionary_of(Matrix.from_rows([[5]])), 1, 1)
    assert d.tableau == [[F(1, 5)]]
    assert d.row_labels == [x(1)] and d.col_labels == [y(1)]


def test_pivot_is_pure_and_rejects_zero():
    d = dictionary_of(Matrix.from_rows([[0, 1], [1, 0]]))
    before = d.copy()
    pivot(d, 1, 2)
    assert d == before
    with pytest.raises(ZeroPivotError):
        pivot(d, 1, 1)


def test_inverse_worked_example():
    assert inverse(Matrix.from_rows(WORKED)) == worked_inverse()
    inv = inverse(Matrix.from_rows(WORKED))
    assert inv.at(1, 1) == F(-13, 7) and inv.at(4, 4) == F(-25, 28)


def test_inverse_trace_worked_pivots():
    outcome, steps = inverse_trace(Matrix.from_rows(WORKED), scripted(INV_PIVOTS))
    assert outcome == worked_inverse()
    assert [s.snapshot.tableau for s in steps] == [ITER1, ITER2, ITER3, ITER4]
    assert [set(s.basis) for s in steps] == [
        {"x1", "y2", "y3", "y4"},
        {"x1", "x3", "y3", "y4"},
        {"x1", "x3", "x2", "y4"},
        {"x1", "x3", "x2", "x4"},
    ]
    assert [list(s.basis) for s in steps][-1] == ["x1", "x3", "x2", "x4"]
    assert [str(s.snapshot.col_labels[i]) for s in steps[-1:] for i in range(4)] == ["y1", "y3", "y2", "y4"]
    assert all(s.entering.kind == "x" and s.leaving.kind == "y" for s in steps)


def test_inverse_small_cases():
    assert inverse(identity(3)) == identity(3)
    outcome, steps = inverse_trace(identity(1))
    assert outcome == identity(1) and len(steps) == 1
    outcome, steps = inverse_trace(Matrix.from_rows([[1, 2], [2, 4]]))
    assert isinstance(outcome, Singular) and not outcome
    assert outcome.row == y(2) and len(steps) == 1
    outcome, steps = inverse_trace(Matrix.from_rows([[0, 0], [0, 0]]))
    assert isinstance(outcome, Singular) and steps == []


def test_gather_examples():
    d4 = Dictionary([list(r) for r in ITER4], [x(1), x(3), x(2), x(4)], [y(1), y(3), y(2), y(4)])
    g = gather(d4)
    assert g == worked_inverse()
    assert g.at(1, 1) == F(-13, 7) and g.at(1, 3) == F(9, 7)
    t = [[1, 2], [3, 4]]
    assert gather(Dictionary(t, [x(1), x(2)], [y(1), y(2)])).rows == ((1, 2), (3, 4))
    assert gather(Dictionary(t, [x(2), x(1)], [y(2), y(1)])).rows == ((4, 3), (2, 1))
    with pytest.raises(GatherError):
        gather(dictionary_of(identity(2)))


def test_random_5x5_matches_adjugate():
    rng = random.Random(43)
    for _ in range(20):
        m = random_rational(rng, 5)
        ref = adjugate_inverse(m)
        got = inverse(m)
        if isinstance(ref, Singular):
            assert isinstance(got, Singular)
        else:
            assert got == ref


def test_exhaustive_2x2_singularity():
    for vals in itertools.product([-1, 0, 1], repeat=4):
        m = Matrix.from_rows([vals[:2], vals[2:]])
        assert isinstance(inverse(m), Singular) == (vals[0] * vals[3] == vals[1] * vals[2])


entries = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def dictionary_and_cell(draw):
    n = draw(st.integers(1, 5))
    rows = [[draw(entries) for _ in range(n)] for _ in range(n)]
    d = dictionary_of(Matrix.from_rows(rows))
    # scramble labels with a few earlier pivots so both kinds appear
    for _ in range(draw(st.integers(0, n))):
        cells = [(p, k) for p in range(1, n + 1) for k in range(1, n + 1) if d.value(p, k) != 0]
        if not cells:
            break
        d = pivot(d, *draw(st.sampled_from(cells)))
    cells = [(p, k) for p in range(1, n + 1) for k in range(1, n + 1) if d.value(p, k) != 0]
    if not cells:
        d.tableau[0][0] = F(1)
        cells = [(1, 1)]
    return d, draw(st.sampled_from(cells))


@given(dictionary_and_cell())
@settings(max_examples=200)
def test_pivot_involution_and_label_conservation(case):
    d, (p, k) = case
    once = pivot(d, p, k)
    assert sorted(once.row_labels + once.col_labels) == sorted(d.row_labels + d.col_labels)
    changed_rows = [i for i, (a, b) in enumerate(zip(d.row_labels, once.row_labels)) if a != b]
    changed_cols = [i for i, (a, b) in enumerate(zip(d.col_labels, once.col_labels)) if a != b]
    assert changed_rows == [p - 1] and changed_cols == [k - 1]
    assert pivot(once, p, k) == d


def test_left_right_inverse_and_det_consistency():
    rng = random.Random(47)
    for _ in range(40):
        m = random_rational(rng, rng.randint(1, 5))
        inv = inverse(m, global_max_magnitude)
        if isinstance(inv, Singular):
            continue
        n = m.n
        assert multiply(m, inv) == identity(n)
        assert multiply(inv, m) == identity(n)
        assert determinant(inv) == 1 / determinant(m)


def test_strategy_invariance():
    rng = random.Random(53)
    for _ in range(20):
        m = random_rational(rng, rng.randint(2, 5))
        results = [inverse(m, s) for s in (first_nonzero, row_max_magnitude, global_max_magnitude)]
        results += [inverse(m, RandomPivots(rng)) for _ in range(5)]
        if isinstance(results[0], Singular):
            assert all(isinstance(r, Singular) for r in results)
        else:
            assert all(r == results[0] for r in results)


def test_float_mode_inverse():
    arith = arithmetic("float")
    m = Matrix.from_rows(WORKED, arith)
    inv = inverse(m, global_max_magnitude, arith)
    ref = worked_inverse()
    for got_row, ref_row in zip(inv.rows, ref.rows):
        assert got_row == pytest.approx([float(v) for v in ref_row], abs=1e-12)
    assert isinstance(inverse(Matrix(((1.0, 2.0), (2.0, 4.0))), first_nonzero, arith), Singular)
