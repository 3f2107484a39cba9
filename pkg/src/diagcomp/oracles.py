"""Independent verification machinery for the companion-type construction.

Each oracle takes a route to the characteristic polynomial that shares
nothing with the closed-form constructor:

* ``charpoly_structured`` expands det(tI - A) along the trailing
  principal submatrices of the companion-type pattern (an O(n^2)
  recurrence);
* ``charpoly_generic`` runs a division-free scheme (iterated Toeplitz
  products over leading principal submatrices) valid over any field,
  singular submatrices included;
* ``principal_minor_sum`` and ``check_minor_system`` evaluate the
  minor-sum equations that pin the polynomial coefficients;
* ``solve_b_backsub`` re-derives the last column from those equations
  alone, by back-substitution from b_{n-1} down to b_1;
* ``uniqueness_exhaustive`` enumerates every candidate last column over
  a prime field and counts the matches;
* ``occurrence_pattern`` probes which principal minors are sensitive to
  which last-column entries.

Over prime fields the heavy loops (dense characteristic polynomials,
subset sums of minors, exhaustive enumeration) run on plain-int kernels
with a compiled fast path; see :mod:`diagcomp.kernels`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .construct import assemble, validate_diagonal
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InvalidArgument,
    WrongField,
)
from .fields import FieldElement, PrimeField
from .matrices import DenseMatrix, DiagonalSpec, StructuredMatrix
from .poly import MonicPoly

__all__ = [
    "charpoly_structured",
    "charpoly_generic",
    "principal_minor_sum",
    "MinorEquation",
    "MinorSystemReport",
    "check_minor_system",
    "solve_b_backsub",
    "uniqueness_exhaustive",
    "OccurrencePattern",
    "occurrence_pattern",
]


# --------------------------------------------------------------------------
# characteristic polynomials
# --------------------------------------------------------------------------

def charpoly_structured(A: StructuredMatrix) -> MonicPoly:
    """det(tI - A) of a companion-type matrix via the trailing recurrence.

    q_n = t - d_n and q_j = (t - d_j) q_{j+1} - b_j, where q_j is the
    characteristic polynomial of the trailing submatrix on rows and
    columns j..n.  O(n^2) field operations.
    """
    n = A.n
    q = MonicPoly.unit(A.field).mul_linear(A.diag[n - 1])
    for j in range(n - 2, -1, -1):
        q = q.mul_linear(A.diag[j]).add_constant(-A.last_col[j])
    return q


def _berkowitz_generic(M: DenseMatrix) -> MonicPoly:
    """Division-free characteristic polynomial over any field.

    Grows the answer one leading principal submatrix at a time; the step
    from size k to k+1 multiplies the current coefficient vector by a
    Toeplitz matrix whose first column collects -row A^j col products.
    Only ring operations are used, so singular submatrices are harmless.
    """
    field, n, rows = M.field, M.n, M.rows
    zero, one = field.zero(), field.one()
    vec = [one, -rows[0][0]]  # high-to-low coefficients, leading 1 explicit
    for k in range(1, n):
        lead = rows[k][:k]
        col = [rows[i][k] for i in range(k)]
        q = [one, -rows[k][k]]
        v = col
        for j in range(k):
            q.append(-_dot(lead, v))
            if j < k - 1:
                v = [_dot(rows[i][:k], v) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = zero
            for jj in range(max(0, i - k - 1), min(i, k) + 1):
                acc = acc + q[i - jj] * vec[jj]
            new.append(acc)
        vec = new
    return MonicPoly(field, [vec[n - i] for i in range(n)])


def charpoly_generic(M: DenseMatrix) -> MonicPoly:
    """det(tI - M) for an arbitrary square matrix, exactly, over any field."""
    field = M.field
    if isinstance(field, PrimeField):
        p = field.modulus
        coeffs = kernels.for_modulus(p).berkowitz_charpoly(p, _int_rows(M))
        return MonicPoly(field, coeffs)
    return _berkowitz_generic(M)


def _dot(xs, ys):
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc


def _int_rows(M: DenseMatrix):
    return [[x.value for x in row] for row in M.rows]


# --------------------------------------------------------------------------
# principal minors
# --------------------------------------------------------------------------

def _det_generic(field, rows) -> FieldElement:
    """Exact determinant by Gaussian elimination with pivot search.

    Division only ever happens by a pivot already known to be nonzero,
    so this is safe over every field; a pivotless column means the
    determinant is zero.
    """
    work = [list(r) for r in rows]
    n = len(work)
    det = field.one()
    for col in range(n):
        piv = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if piv is None:
            return field.zero()
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(col + 1, n):
            if work[r][col].is_zero():
                continue
            factor = work[r][col] * inv
            for c in range(col + 1, n):
                work[r][c] = work[r][c] - factor * work[col][c]
    return det


def principal_minor_sum(M: DenseMatrix, m: int) -> FieldElement:
    """Sum of det(M_S) over all principal submatrices on m of the n indices.

    Brute-force subset enumeration, C(n, m) determinants; meant for desk
    sizes (n up to about 12).
    """
    n = M.n
    if not 1 <= m <= n:
        raise InvalidArgument(f"minor size {m} outside 1..{n}")
    field = M.field
    if isinstance(field, PrimeField):
        p = field.modulus
        return field.element(kernels.for_modulus(p).principal_minor_sum(p, _int_rows(M), m))
    total = field.zero()
    for S in combinations(range(n), m):
        total = total + _det_generic(field, [[M.rows[i][j] for j in S] for i in S])
    return total


# --------------------------------------------------------------------------
# the minor-sum equation system
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorEquation:
    """One equation of the system: minors of size n-k+1 against c_{k-1}."""

    k: int
    size: int
    lhs: FieldElement
    rhs: FieldElement

    @property
    def satisfied(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class MinorSystemReport:
    """All n-1 minor-sum equations for one (matrix, polynomial) pair."""

    n: int
    equations: tuple

    @property
    def all_satisfied(self) -> bool:
        return all(eq.satisfied for eq in self.equations)

    def failing(self):
        return [eq for eq in self.equations if not eq.satisfied]


def _signed(x: FieldElement, exponent: int) -> FieldElement:
    return x if exponent % 2 == 0 else -x


def check_minor_system(A: StructuredMatrix, f: MonicPoly) -> MinorSystemReport:
    """Evaluate, for k = 1..n-1, sum of size-(n-k+1) principal minors
    against (-1)^{n-k+1} c_{k-1}.

    All equations hold exactly when the matrix's characteristic
    polynomial agrees with f in coefficients c_0..c_{n-2}; the k-th
    equation pins c_{k-1}.  For n = 1 the report is empty and vacuously
    satisfied.
    """
    if A.field != f.field:
        raise FieldMismatch("matrix and polynomial live in different fields")
    if A.n != f.degree:
        raise DimensionMismatch(f"{A.n} x {A.n} matrix against degree {f.degree}")
    n = A.n
    dense = A.to_dense()
    equations = []
    for k in range(1, n):
        size = n - k + 1
        lhs = principal_minor_sum(dense, size)
        rhs = _signed(f.coeffs[k - 1], size)
        equations.append(MinorEquation(k=k, size=size, lhs=lhs, rhs=rhs))
    return MinorSystemReport(n=n, equations=tuple(equations))


# --------------------------------------------------------------------------
# back-substitution solver
# --------------------------------------------------------------------------

def solve_b_backsub(f: MonicPoly, d: DiagonalSpec):
    """Solve the minor-sum system for the last column, without the closed form.

    Walks k = n-1 down to 1.  With b_{k+1}..b_{n-1} already fixed and
    b_1..b_k still zero, the size-(n-k+1) minor sum evaluates exactly the
    b_k-free part of equation k (entries b_j with j <= k touch no minor
    that small except through b_k itself), so

        b_k = (-1)^{n-k} ((-1)^{n-k+1} c_{k-1} - minor_sum).

    Exponential in n via subset enumeration; meant for n up to about 10.
    Agrees with the closed-form constructor exactly.
    """
    validate_diagonal(f, d)
    field = f.field
    n = f.degree
    b = [field.zero()] * (n - 1)
    for k in range(n - 1, 0, -1):
        partial = assemble(d, b).to_dense()
        g = principal_minor_sum(partial, n - k + 1)
        rhs = _signed(f.coeffs[k - 1], n - k + 1)
        b[k - 1] = _signed(rhs - g, n - k)
    return tuple(b)


# --------------------------------------------------------------------------
# exhaustive uniqueness count
# --------------------------------------------------------------------------

def uniqueness_exhaustive(f: MonicPoly, d: DiagonalSpec, budget: int = 10**6) -> int:
    """Count last columns over GF(p) whose companion-type matrix has
    characteristic polynomial f.

    Enumerates all p^{n-1} candidates; the unique-solution property says
    the count is exactly 1 whenever the diagonal satisfies the trace
    constraint.  Raises :class:`BudgetExceeded` before allocating
    anything when p^{n-1} > budget, and :class:`WrongField` over the
    rationals.
    """
    field = f.field
    if not isinstance(field, PrimeField):
        raise WrongField("exhaustive enumeration needs a finite field")
    if field != d.field:
        raise FieldMismatch("polynomial and diagonal live in different fields")
    if f.degree != d.n:
        raise DimensionMismatch(f"degree {f.degree} polynomial with {d.n} diagonal entries")
    p = field.modulus
    n = f.degree
    required = p ** (n - 1)
    if required > budget:
        raise BudgetExceeded(required, budget)
    diag = [x.value for x in d.entries]
    target = [c.value for c in f.coeffs]
    return kernels.for_modulus(p).count_matching_last_cols(p, diag, target)


# --------------------------------------------------------------------------
# occurrence probing
# --------------------------------------------------------------------------

_PROBE_FIELD = PrimeField(101)


@dataclass(frozen=True)
class OccurrencePattern:
    """Which principal minors (among the small ones) react to which b_k.

    ``table[(k, S)]`` is True when det(A_S) changed under a perturbation
    of b_k, over all probed subsets S with 1 <= |S| <= n-k+1 (S given as
    a sorted tuple of 1-based indices).
    """

    n: int
    table: dict

    def sensitive_sets(self, k: int):
        return sorted(S for (kk, S), hit in self.table.items() if kk == k and hit)

    def matches_claim(self) -> bool:
        """True iff for every k the only sensitive probed subset is {k..n}."""
        expected = {k: [tuple(range(k, self.n + 1))] for k in range(1, self.n)}
        return all(self.sensitive_sets(k) == expected[k] for k in range(1, self.n))


def occurrence_pattern(n: int, rng=None, repetitions: int = 3) -> OccurrencePattern:
    """Probe, over GF(101), which minors of size <= n-k+1 depend on b_k.

    For each k and each repetition, two random companion-type matrices
    differing only in b_k are compared minor by minor.  A differing
    determinant marks (k, S) sensitive.  Within the probed size range
    the genuinely sensitive minor carries b_k with a unit cofactor, so
    repetitions only guard the bookkeeping, not the mathematics.
    """
    if not 1 <= n <= 10:
        raise InvalidArgument(f"occurrence probing is sized for 1 <= n <= 10, got {n}")
    if rng is None:
        rng = random.Random(0x0CC0)
    field = _PROBE_FIELD
    table = {}
    for k in range(1, n):
        subsets = []
        for size in range(1, n - k + 2):
            subsets.extend(combinations(range(1, n + 1), size))
        hits = {S: False for S in subsets}
        for _ in range(repetitions):
            d = [field.random_element(rng) for _ in range(n)]
            b = [field.random_element(rng) for _ in range(n - 1)]
            alt = field.random_element(rng)
            while alt == b[k - 1]:
                alt = field.random_element(rng)
            b_alt = list(b)
            b_alt[k - 1] = alt
            M1 = StructuredMatrix(field, d, b).to_dense()
            M2 = StructuredMatrix(field, d, b_alt).to_dense()
            for S in subsets:
                if hits[S]:
                    continue
                det1 = _det_generic(field, M1.submatrix(S).rows)
                det2 = _det_generic(field, M2.submatrix(S).rows)
                if det1 != det2:
                    hits[S] = True
        for S, hit in hits.items():
            table[(k, S)] = hit
    return OccurrencePattern(n=n, table=table)
