from dataclasses import dataclass
from itertools import chain

from src.errors import ShapeMismatchError


@dataclass(frozen=True)
class IntMatrix:
    """
    Immutable integer matrix stored row-major. Entries are Python ints, so nothing ever overflows.
    A matrix may have zero rows or zero columns.
    """
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatchError(f'negative shape {self.rows}x{self.cols}')
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatchError(f'{len(self.entries)} entries for a {self.rows}x{self.cols} matrix')

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> 'IntMatrix':
        """
        Build a matrix from a list of rows
        :param rows: iterable of integer rows
        :param cols: int, column count, needed only when there are no rows
        :return: IntMatrix
        """
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ShapeMismatchError(f'ragged row of length {len(row)}, expected {cols}')
        return cls(len(rows), cols, tuple(chain.from_iterable(rows)))

    @classmethod
    def from_columns(cls, columns, rows: int) -> 'IntMatrix':
        columns = [tuple(int(x) for x in col) for col in columns]
        for col in columns:
            if len(col) != rows:
                raise ShapeMismatchError(f'column of length {len(col)}, expected {rows}')
        return cls.from_rows(zip(*columns), len(columns)) if columns else cls.zeros(rows, 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values, rows: int | None = None, cols: int | None = None) -> 'IntMatrix':
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(data, cols)

    @classmethod
    def block_diagonal(cls, *blocks: 'IntMatrix') -> 'IntMatrix':
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(data, cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ShapeMismatchError(f'cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        other_cols = other.columns()
        return IntMatrix.from_rows(
            ([sum(a * b for a, b in zip(self.row(i), col)) for col in other_cols] for i in range(self.rows)),
            other.cols
        )

    def apply(self, vector) -> tuple[int, ...]:
        """
        Multiply the matrix by a column vector
        :param vector: sequence of ints, length == cols
        :return: tuple of ints, length == rows
        """
        vector = tuple(vector)
        if len(vector) != self.cols:
            raise ShapeMismatchError(f'vector of length {len(vector)} for a {self.rows}x{self.cols} matrix')
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def hstack(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.rows != other.rows:
            raise ShapeMismatchError(f'cannot place {other.rows} rows beside {self.rows} rows')
        return IntMatrix.from_rows((self.row(i) + other.row(i) for i in range(self.rows)), self.cols + other.cols)

    def select_rows(self, indices) -> 'IntMatrix':
        return IntMatrix.from_rows((self.row(i) for i in indices), self.cols)

    def select_columns(self, indices) -> 'IntMatrix':
        indices = list(indices)
        return IntMatrix.from_rows(([self[i, j] for j in indices] for i in range(self.rows)), len(indices))

    def __str__(self) -> str:
        return str(self.to_lists())
