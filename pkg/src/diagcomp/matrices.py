"""Matrix containers: the O(n) companion-type form and general dense matrices.

``StructuredMatrix`` stores only what the companion-type pattern needs,
the diagonal and the last column; the unit subdiagonal and the zero fill
are implicit.  ``DenseMatrix`` is a plain immutable n x n array of field
elements used for the similarity factor, companion matrices, products
and minors.  Indices in error messages and docstrings are 1-based to
match the usual mathematical writing; storage is 0-based.
"""

from __future__ import annotations

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, FieldElement

__all__ = ["DiagonalSpec", "StructuredMatrix", "DenseMatrix"]


class DiagonalSpec:
    """A prescribed diagonal d_1..d_n (n >= 1).

    The trace constraint (sum equals minus the subleading coefficient of
    the target polynomial) is a property of the *pairing* with a
    polynomial and is checked by ``construct.validate_diagonal``, not
    here.
    """

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        entries = tuple(field.element(x) for x in entries)
        if not entries:
            raise DimensionMismatch("diagonal needs at least one entry")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DiagonalSpec is immutable")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, DiagonalSpec):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __repr__(self):
        return f"DiagonalSpec({self.field.code}, [{', '.join(str(d) for d in self.entries)}])"


class StructuredMatrix:
    """Companion-type matrix: prescribed diagonal, unit subdiagonal, last column.

    Entry (i, i) is d_i, entry (i+1, i) is 1, entry (i, n) is b_i for
    i < n, and every other entry is 0.  The (n, n) entry is d_n, so only
    n - 1 last-column values are stored.
    """

    __slots__ = ("field", "diag", "last_col")

    def __init__(self, field: Field, diag, last_col):
        diag = tuple(field.element(x) for x in diag)
        last_col = tuple(field.element(x) for x in last_col)
        if not diag:
            raise DimensionMismatch("matrix needs at least one row")
        if len(last_col) != len(diag) - 1:
            raise DimensionMismatch(
                f"last column carries {len(diag) - 1} values for n = {len(diag)}, "
                f"got {len(last_col)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "last_col", last_col)

    def __setattr__(self, name, value):
        raise AttributeError("StructuredMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.diag)

    def entry(self, i: int, j: int) -> FieldElement:
        """Entry at 1-based position (i, j)."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise DimensionMismatch(f"entry ({i}, {j}) outside a {n} x {n} matrix")
        if j == n and i < n:
            return self.last_col[i - 1]
        if i == j:
            return self.diag[i - 1]
        if i == j + 1:
            return self.field.one()
        return self.field.zero()

    def to_dense(self) -> "DenseMatrix":
        n = self.n
        return DenseMatrix(
            self.field,
            [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)],
        )

    def __eq__(self, other):
        if not isinstance(other, StructuredMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.diag == other.diag
            and self.last_col == other.last_col
        )

    def __repr__(self):
        return (
            f"StructuredMatrix({self.field.code}, "
            f"diag=[{', '.join(str(d) for d in self.diag)}], "
            f"last_col=[{', '.join(str(b) for b in self.last_col)}])"
        )


class DenseMatrix:
    """Immutable square matrix of field elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.element(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("dense matrix must be square and nonempty")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("DenseMatrix is immutable")

    @classmethod
    def identity(cls, field: Field, n: int) -> "DenseMatrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> FieldElement:
        """Entry at 1-based position (i, j)."""
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch("multiplying matrices over different fields")
        if self.n != other.n:
            raise DimensionMismatch(f"product of {self.n} x {self.n} with {other.n} x {other.n}")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(
                [_dot(row, col) for col in cols]
            )
        return DenseMatrix(self.field, out)

    def submatrix(self, indices) -> "DenseMatrix":
        """Principal submatrix on the given 1-based row/column indices."""
        idx = [i - 1 for i in indices]
        return DenseMatrix(self.field, [[self.rows[i][j] for j in idx] for i in idx])

    def to_strings(self) -> list:
        return [[str(x) for x in row] for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"DenseMatrix({self.field.code}, [{body}])"


def _dot(xs, ys):
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc
