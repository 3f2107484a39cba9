"""Brute-force oracles used only by the tests.

These deliberately share nothing with the production algorithms: plain
permutation expansions for determinants and characteristic polynomials,
and explicit multiset enumeration for the homogeneous sums.  Exponential
cost, so callers keep n small.
"""

from itertools import combinations_with_replacement, permutations

from diagcomp import MonicPoly


def random_monic(field, n, rng):
    return MonicPoly(field, [field.random_element(rng) for _ in range(n)])


def random_head(field, n, rng):
    return tuple(field.random_element(rng) for _ in range(n - 1))


def perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def det_leibniz(M):
    """Determinant by full permutation expansion (n <= 6)."""
    field = M.field
    n = M.n
    total = field.zero()
    for perm in permutations(range(n)):
        prod = field.one()
        for i in range(n):
            prod = prod * M.rows[i][perm[i]]
        total = total + prod if perm_sign(perm) == 1 else total - prod
    return total


def _poly_mul(field, a, b):
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def charpoly_leibniz(M):
    """det(tI - M) by permutation expansion over degree-1 entries (n <= 6)."""
    field = M.field
    n = M.n
    zero, one = field.zero(), field.one()
    # entry polynomials of tI - M, coefficients low-to-high
    ent = [
        [[-M.rows[i][j], one] if i == j else [-M.rows[i][j]] for j in range(n)]
        for i in range(n)
    ]
    total = [zero] * (n + 1)
    for perm in permutations(range(n)):
        prod = [one]
        for i in range(n):
            prod = _poly_mul(field, prod, ent[i][perm[i]])
        if perm_sign(perm) == -1:
            prod = [-c for c in prod]
        for k, c in enumerate(prod):
            total[k] = total[k] + c
    assert total[n] == one
    return MonicPoly(field, total[:n])


def h_enumerate(field, d, k, r):
    """Sum of all degree-r monomials in d_1..d_k by multiset enumeration."""
    if r == 0:
        return field.one()
    total = field.zero()
    for combo in combinations_with_replacement(range(k), r):
        prod = field.one()
        for idx in combo:
            prod = prod * d[idx]
        total = total + prod
    return total
