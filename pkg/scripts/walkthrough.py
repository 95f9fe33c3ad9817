"""Print step-by-step traces for the 4x4 worked example (determinant and inverse)."""

from pathlib import Path

from pivotlab.cli import det_trace_text, inv_trace_text
from pivotlab.determinant import determinant_trace
from pivotlab.dictionary import inverse_trace
from pivotlab.matrix import read_matrix
from pivotlab.strategies import parse_script, scripted

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main():
    a = read_matrix(FIXTURES / "worked_example.txt")
    det_script = parse_script((FIXTURES / "det_pivots.txt").read_text())
    inv_script = parse_script((FIXTURES / "inv_pivots.txt").read_text())

    print("== determinant ==")
    print(det_trace_text(*determinant_trace(a, scripted(det_script))))
    print()
    print("== inverse ==")
    print(inv_trace_text(*inverse_trace(a, scripted(inv_script))))


if __name__ == "__main__":
    main()
