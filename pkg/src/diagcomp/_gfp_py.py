"""Pure-Python GF(p) kernels: the fallback twin of the compiled extension.

Same contracts as ``diagcomp._gfp_cy``: plain ints in [0, p), coefficient
lists low-to-high with the monic leader implicit.  Works for any prime p
(Python ints never overflow); the compiled twin is restricted to p below
2^31 so residue products fit a 64-bit word.
"""

from itertools import combinations

__all__ = [
    "structured_charpoly",
    "berkowitz_charpoly",
    "principal_minor_sum",
    "count_matching_last_cols",
]


def structured_charpoly(p, diag, last_col):
    """Characteristic polynomial of the companion-type matrix, c_0..c_{n-1}."""
    n = len(diag)
    diag = [x % p for x in diag]
    last_col = [x % p for x in last_col]
    q = [(-diag[n - 1]) % p]
    for j in range(n - 2, -1, -1):
        dj = diag[j]
        m = len(q)
        new = [0] * (m + 1)
        prev = 0
        for i in range(m):
            new[i] = (prev - dj * q[i]) % p
            prev = q[i]
        new[m] = (prev - dj) % p
        new[0] = (new[0] - last_col[j]) % p
        q = new
    return q


def berkowitz_charpoly(p, rows):
    """Division-free characteristic polynomial of a dense matrix, c_0..c_{n-1}."""
    n = len(rows)
    rows = [[x % p for x in row] for row in rows]
    vec = [1, (-rows[0][0]) % p]
    for k in range(1, n):
        lead = rows[k][:k]
        v = [rows[i][k] for i in range(k)]
        q = [1, (-rows[k][k]) % p]
        for j in range(k):
            q.append((-sum(x * y for x, y in zip(lead, v))) % p)
            if j < k - 1:
                v = [sum(rows[i][c] * v[c] for c in range(k)) % p for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = 0
            for jj in range(max(0, i - k - 1), min(i, k) + 1):
                acc += q[i - jj] * vec[jj]
            new.append(acc % p)
        vec = new
    return [vec[n - i] for i in range(n)]


def _det_mod(p, work):
    """Determinant of a (destructible) list-of-lists matrix mod p."""
    n = len(work)
    det = 1
    negate = False
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if work[r][col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            negate = not negate
        pivot = work[col][col]
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        top = work[col]
        for r in range(col + 1, n):
            f = work[r][col]
            if f:
                f = f * inv % p
                row = work[r]
                for c in range(col + 1, n):
                    row[c] = (row[c] - f * top[c]) % p
    return (p - det) % p if negate else det


def principal_minor_sum(p, rows, m):
    """Sum of determinants of all principal m x m submatrices, mod p."""
    n = len(rows)
    rows = [[x % p for x in row] for row in rows]
    total = 0
    for S in combinations(range(n), m):
        total += _det_mod(p, [[rows[i][j] for j in S] for i in S])
    return total % p


def count_matching_last_cols(p, diag, target):
    """Count last columns whose companion-type matrix has the target polynomial.

    Enumerates all p^(n-1) candidates in odometer order (least
    significant digit first).  The caller enforces any budget.
    """
    n = len(diag)
    diag = [x % p for x in diag]
    target = [x % p for x in target]
    if n == 1:
        return 1 if structured_charpoly(p, diag, []) == target else 0
    digits = [0] * (n - 1)
    count = 0
    while True:
        if structured_charpoly(p, diag, digits) == target:
            count += 1
        i = 0
        while i < n - 1 and digits[i] == p - 1:
            digits[i] = 0
            i += 1
        if i == n - 1:
            return count
        digits[i] += 1
