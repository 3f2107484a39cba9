"""Complete homogeneous sums of diagonal prefixes.

``h_eval(field, d, k, r)`` is the sum of all monomials of degree r in the
first k entries of d, with ``h_0 = 1`` for every k (including k = 0) and
``h_r = 0`` for r >= 1 over the empty prefix.

Everything is computed by the recurrence

    h_r(d_1..d_k) = h_r(d_1..d_{k-1}) + d_k * h_{r-1}(d_1..d_k)

which costs O(k*r) field operations, never by enumerating the
binomial(k+r-1, r) monomials.  The enumeration lives in the test suite
as an independent oracle.
"""

from __future__ import annotations

from .errors import InvalidArgument
from .fields import Field

__all__ = ["h_eval", "h_table"]


def h_table(field: Field, d, k_max: int, r_max: int):
    """Table of all h values: ``table[k][r] = h_r(d_1..d_k)``.

    Shape is (k_max + 1) x (r_max + 1); row k = 0 is [1, 0, 0, ...].
    One table serves both the last-column formulas and the triangular
    similarity matrix, which consume identical values.
    """
    d = [field.element(x) for x in d]
    if not 0 <= k_max <= len(d):
        raise InvalidArgument(f"k_max {k_max} out of range for {len(d)} entries")
    if r_max < 0:
        raise InvalidArgument(f"r_max {r_max} must be nonnegative")
    zero, one = field.zero(), field.one()
    table = [[one] + [zero] * r_max]
    for k in range(1, k_max + 1):
        prev = table[k - 1]
        row = [one]
        dk = d[k - 1]
        for r in range(1, r_max + 1):
            row.append(prev[r] + dk * row[r - 1])
        table.append(row)
    return table


def h_eval(field: Field, d, k: int, r: int):
    """``h_r(d_1..d_k)`` for one (k, r) pair."""
    if r < 0:
        raise InvalidArgument(f"degree r {r} must be nonnegative")
    if not 0 <= k <= len(d):
        raise InvalidArgument(f"prefix length k {k} out of range for {len(d)} entries")
    return h_table(field, d[:k], k, r)[k][r]
