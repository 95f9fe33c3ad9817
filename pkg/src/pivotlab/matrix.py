"""Square matrices, shrinking active views, and the text file format.

File format::

    # comment lines start with '#'
    3
    1 2 3
    4 5/2 6
    0.5 8 9

The first data line is the order ``n``; the next ``n`` lines hold ``n``
whitespace-separated scalar tokens.  If any data line contains a comma the
file is read as CSV; in that case the order line is optional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .scalar import EXACT, ScalarSyntaxError, format_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DimensionError(ValueError):
    pass


class RemovedLabelError(LookupError):
    """An engine tried to read a row or column that was already eliminated."""


@dataclass(frozen=True)
class Matrix:
    """Immutable dense square matrix.

    ``rows`` is stored 0-based; :meth:`at` addresses entries by the
    original 1-based (row, column) labels.
    """

    rows: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise DimensionError("matrix order must be positive")
        for i, row in enumerate(self.rows, 1):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {n}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], arith=EXACT) -> "Matrix":
        return cls(tuple(tuple(arith.convert(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def at(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> list[list]:
        return [list(row) for row in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def convert(self, arith) -> "Matrix":
        return Matrix.from_rows(self.rows, arith)

    def __str__(self):
        return serialize_matrix(self)


def identity(n: int, arith=EXACT) -> Matrix:
    one, zero = arith.one, arith.zero
    return Matrix(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def hilbert(n: int, arith=EXACT) -> Matrix:
    """Hilbert matrix, entry (i, j) = 1/(i + j - 1) with 1-based indices."""
    if n < 1:
        raise DimensionError("Hilbert order must be at least 1")
    return Matrix.from_rows(
        [[arith.convert(f"1/{i + j - 1}") for j in range(1, n + 1)] for i in range(1, n + 1)],
        arith,
    )


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.n != b.n:
        raise DimensionError(f"cannot multiply orders {a.n} and {b.n}")
    cols = list(zip(*b.rows))
    return Matrix(
        tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a.rows)
    )


class ResidualReport(NamedTuple):
    max_abs_deviation: object
    position: tuple[int, int] | None


def residual_vs_identity(product: Matrix) -> ResidualReport:
    """Largest ``|product_ij - I_ij|`` and its 1-based position (None if zero)."""
    worst, where = product.rows[0][0] * 0, None
    for i, row in enumerate(product.rows, 1):
        for j, x in enumerate(row, 1):
            dev = abs(x - 1) if i == j else abs(x)
            if dev > worst:
                worst, where = dev, (i, j)
    return ResidualReport(worst, where)


# -- text format -------------------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _split(raw: str, csv: bool):
    """Yield (column, token) pairs; column is 1-based character offset."""
    if csv:
        pos = 0
        for piece in raw.split(","):
            token = piece.strip()
            yield pos + (len(piece) - len(piece.lstrip())) + 1, token
            pos += len(piece) + 1
    else:
        pos = 0
        for token in raw.split():
            pos = raw.index(token, pos)
            yield pos + 1, token
            pos += len(token)


def parse_matrix(text: str, arith=EXACT) -> Matrix:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("no data lines")
    csv = any("," in raw for _, raw in lines)

    first_no, first_raw = lines[0]
    header = None
    if "," not in first_raw and len(first_raw.split()) == 1:
        token = first_raw.strip()
        if token.isdigit() and (not csv or int(token) == len(lines) - 1):
            header = int(token)
    if header is None and not csv:
        raise ParseError(f"expected matrix order, got {first_raw.strip()!r}", first_no, 1)
    if header is not None:
        lines = lines[1:]
        n = header
    else:
        n = len(lines)
    if n == 0:
        raise ParseError("matrix order must be positive", first_no, 1)
    if len(lines) != n:
        lineno = lines[n][0] if len(lines) > n else (lines[-1][0] if lines else first_no)
        raise ParseError(f"expected {n} rows, found {len(lines)}", lineno)

    rows = []
    for lineno, raw in lines:
        cells = list(_split(raw, csv))
        if len(cells) != n:
            raise ParseError(f"expected {n} entries, found {len(cells)}", lineno)
        row = []
        for col, token in cells:
            try:
                row.append(arith.convert(token))
            except ScalarSyntaxError as exc:
                raise ParseError(str(exc), lineno, col) from None
        rows.append(tuple(row))
    return Matrix(tuple(rows))


def serialize_matrix(m: Matrix) -> str:
    lines = [str(m.n)]
    lines.extend(" ".join(format_scalar(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"


def read_matrix(path, arith=EXACT) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), arith)


# -- active view ---------------------------------------------------------------


@dataclass
class ActiveView:
    """Working copy of a matrix that shrinks one row and column at a time.

    Entries live in a single buffer allocated at construction.  Positions
    ``p``/``k`` are 1-based indices into the *surviving* rows and columns;
    they are translated to original labels on every access, and reading a
    removed label raises :class:`RemovedLabelError`.

    ``buffer_cells`` and ``dimensions`` are the accounting hook: the first
    never changes after setup, the second records the active order after
    setup and after each removal.
    """

    buffer: list[list]
    active_rows: list[int]
    active_cols: list[int]
    buffer_cells: int = 0
    dimensions: list[int] = field(default_factory=list)

    @classmethod
    def of(cls, m: Matrix) -> "ActiveView":
        labels = list(range(1, m.n + 1))
        return cls(m.to_lists(), labels, list(labels), m.n * m.n, [m.n])

    @property
    def order(self) -> int:
        return len(self.active_rows)

    def candidate_rows(self) -> range:
        return range(1, self.order + 1)

    def candidate_cols(self) -> range:
        return range(1, self.order + 1)

    def value(self, p: int, k: int):
        return self.buffer[self.active_rows[p - 1] - 1][self.active_cols[k - 1] - 1]

    def set_value(self, p: int, k: int, x) -> None:
        self.buffer[self.active_rows[p - 1] - 1][self.active_cols[k - 1] - 1] = x

    def entry(self, row_label: int, col_label: int):
        """Read by original labels; removed labels are a hard fault."""
        if row_label not in self.active_rows:
            raise RemovedLabelError(f"row {row_label} is not active")
        if col_label not in self.active_cols:
            raise RemovedLabelError(f"column {col_label} is not active")
        return self.buffer[row_label - 1][col_label - 1]

    def remove(self, p: int, k: int) -> None:
        del self.active_rows[p - 1]
        del self.active_cols[k - 1]
        self.dimensions.append(self.order)

    def snapshot(self) -> list[list]:
        return [[self.value(p, k) for k in self.candidate_cols()] for p in self.candidate_rows()]

    @property
    def area(self) -> int:
        return len(self.active_rows) * len(self.active_cols)
