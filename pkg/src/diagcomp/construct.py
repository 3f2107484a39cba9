"""Construction of the companion-type matrix with a prescribed diagonal.

Given a monic target polynomial f of degree n and diagonal entries
d_1..d_n summing to -c_{n-1}, there is exactly one choice of last-column
entries b_1..b_{n-1} making f the characteristic polynomial of the
companion-type matrix.  This module computes that choice in closed form,

    b_k = -(c_{k-1} h_0 + c_k h_1 + ... + c_{n-1} h_{n-k} + h_{n-k+1}),
    h_r = h_r(d_1..d_k),

assembles the matrix, and certifies it by exhibiting an explicit
similarity to the Frobenius companion matrix: A T = T C for the unit
upper triangular T with entries t_{ij} = h_{j-i}(d_1..d_i).

The independent verification routes (minor systems, back-substitution,
exhaustive search) live in :mod:`diagcomp.oracles`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, InvalidArgument, TraceMismatch
from .matrices import DenseMatrix, DiagonalSpec, StructuredMatrix
from .poly import MonicPoly
from .symfunc import h_table

__all__ = [
    "derive_last_diagonal",
    "validate_diagonal",
    "construct_b",
    "assemble",
    "companion",
    "similarity_T",
    "similarity_defect",
    "check_similarity",
    "ConstructionResult",
    "construct_full",
    "TraceMismatch",
]


def derive_last_diagonal(f: MonicPoly, d_head) -> DiagonalSpec:
    """Complete d_1..d_{n-1} with the forced d_n = -c_{n-1} - d_1 - ... - d_{n-1}."""
    field = f.field
    n = f.degree
    head = tuple(field.element(x) for x in d_head)
    if len(head) != n - 1:
        raise DimensionMismatch(
            f"need {n - 1} leading diagonal entries for degree {n}, got {len(head)}"
        )
    last = -f.coeff(n - 1)
    for x in head:
        last = last - x
    return DiagonalSpec(field, head + (last,))


def validate_diagonal(f: MonicPoly, d: DiagonalSpec) -> None:
    """Check the trace constraint d_1 + ... + d_n = -c_{n-1} exactly.

    Raises :class:`TraceMismatch` carrying the residual
    d_1 + ... + d_n + c_{n-1} when it fails.
    """
    if f.field != d.field:
        raise FieldMismatch("polynomial and diagonal live in different fields")
    if f.degree != d.n:
        raise DimensionMismatch(f"degree {f.degree} polynomial with {d.n} diagonal entries")
    residual = f.coeff(f.degree - 1)
    for x in d.entries:
        residual = residual + x
    if not residual.is_zero():
        raise TraceMismatch(residual)


def construct_b(f: MonicPoly, d: DiagonalSpec, _table=None):
    """The unique last column, by the closed form (empty for n = 1).

    ``_table`` may pass in a precomputed h table covering k <= n - 1 and
    r <= n; one construction shares a single table between the last
    column and the similarity factor.
    """
    validate_diagonal(f, d)
    field = f.field
    n = f.degree
    table = _table if _table is not None else h_table(field, d.entries, max(n - 1, 0), n)
    b = []
    for k in range(1, n):
        acc = field.zero()
        row = table[k]
        for i in range(k - 1, n + 1):
            acc = acc + f.coeff(i) * row[i - k + 1]
        b.append(-acc)
    return tuple(b)


def assemble(d: DiagonalSpec, b) -> StructuredMatrix:
    """Wrap a diagonal and last column in the companion-type pattern."""
    b = tuple(d.field.element(x) for x in b)
    if len(b) != d.n - 1:
        raise DimensionMismatch(f"need {d.n - 1} last-column values, got {len(b)}")
    return StructuredMatrix(d.field, d.entries, b)


def companion(f: MonicPoly) -> DenseMatrix:
    """The Frobenius companion matrix: unit subdiagonal, last column -c_i."""
    field = f.field
    n = f.degree
    zero, one = field.zero(), field.one()
    rows = []
    for i in range(n):
        row = [zero] * n
        if i > 0:
            row[i - 1] = one
        row[n - 1] = -f.coeffs[i]
        rows.append(row)
    return DenseMatrix(field, rows)


def similarity_T(d: DiagonalSpec, _table=None) -> DenseMatrix:
    """Unit upper triangular similarity factor, t_{ij} = h_{j-i}(d_1..d_i)."""
    field = d.field
    n = d.n
    table = _table if _table is not None else h_table(field, d.entries, n, max(n - 1, 0))
    zero = field.zero()
    rows = []
    for i in range(1, n + 1):
        row = [zero] * (i - 1)
        row.extend(table[i][j - i] for j in range(i, n + 1))
        rows.append(row)
    return DenseMatrix(field, rows)


def similarity_defect(A: StructuredMatrix, T: DenseMatrix, C: DenseMatrix):
    """First entry where the two products differ, or None when A T = T C.

    Both products are computed in full (no short-circuit) so the defect
    reported is deterministic.  Returns (i, j, lhs, rhs) with 1-based
    coordinates.
    """
    if not (A.field == T.field == C.field):
        raise FieldMismatch("similarity check needs one common field")
    if not (A.n == T.n == C.n):
        raise DimensionMismatch(
            f"similarity check sizes disagree: {A.n}, {T.n}, {C.n}"
        )
    lhs = A.to_dense() @ T
    rhs = T @ C
    for i in range(1, A.n + 1):
        for j in range(1, A.n + 1):
            if lhs.entry(i, j) != rhs.entry(i, j):
                return (i, j, lhs.entry(i, j), rhs.entry(i, j))
    return None


def check_similarity(A: StructuredMatrix, T: DenseMatrix, C: DenseMatrix) -> bool:
    """True iff A T = T C entrywise."""
    return similarity_defect(A, T, C) is None


@dataclass(frozen=True)
class ConstructionResult:
    """Everything one construction produces, plus its verification flags."""

    f: MonicPoly
    d: DiagonalSpec
    b: tuple
    A: StructuredMatrix
    C: DenseMatrix
    T: DenseMatrix
    charpoly: MonicPoly
    charpoly_roundtrip: bool
    similarity: bool

    @property
    def all_ok(self) -> bool:
        return self.charpoly_roundtrip and self.similarity


def construct_full(f: MonicPoly, diag=None, diag_head=None) -> ConstructionResult:
    """One-call pipeline: diagonal handling, last column, assembly, certificates.

    Exactly one of ``diag`` (all n entries, validated) and ``diag_head``
    (n - 1 entries, last one derived) must be given.  For n = 1,
    ``diag_head`` is the empty sequence.
    """
    # local import: oracles depends on this module for assemble/companion
    from .oracles import charpoly_structured

    if (diag is None) == (diag_head is None):
        raise InvalidArgument("give exactly one of diag and diag_head")
    if diag is not None:
        d = diag if isinstance(diag, DiagonalSpec) else DiagonalSpec(f.field, diag)
        validate_diagonal(f, d)
    else:
        d = derive_last_diagonal(f, diag_head)
    n = f.degree
    table = h_table(f.field, d.entries, n, n)
    b = construct_b(f, d, _table=table)
    A = assemble(d, b)
    C = companion(f)
    T = similarity_T(d, _table=table)
    back = charpoly_structured(A)
    return ConstructionResult(
        f=f,
        d=d,
        b=b,
        A=A,
        C=C,
        T=T,
        charpoly=back,
        charpoly_roundtrip=(back == f),
        similarity=check_similarity(A, T, C),
    )
