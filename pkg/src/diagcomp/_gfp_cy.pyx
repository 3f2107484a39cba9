# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(p) kernels.

Contract-identical to ``diagcomp._gfp_py`` (the pure-Python twin); see
that module for the semantics.  Residues live in unsigned 64-bit words,
so the modulus must stay below 2^31 to keep products overflow-free; the
dispatcher in ``diagcomp.kernels`` enforces that.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

# products of residues must fit in 64 bits
cdef u64 MAX_P = (<u64> 1) << 31


cdef inline u64 _powmod(u64 base, u64 expo, u64 p) noexcept:
    cdef u64 r = 1
    base %= p
    while expo:
        if expo & 1:
            r = r * base % p
        base = base * base % p
        expo >>= 1
    return r


cdef inline u64 _submod(u64 a, u64 b, u64 p) noexcept:
    # a, b < p
    return (a + p - b) % p


cdef void _check_p(u64 p) except *:
    if p >= MAX_P:
        raise ValueError("modulus too large for the compiled kernel")


cdef void _structured_charpoly_c(u64 p, u64 *diag, u64 *last_col, Py_ssize_t n,
                                 u64 *out, u64 *scratch) noexcept:
    # out receives c_0..c_{n-1}; scratch holds n slots
    cdef Py_ssize_t j, i, m
    cdef u64 dj, prev, cur
    out[0] = (p - diag[n - 1]) % p
    m = 1
    for j in range(n - 2, -1, -1):
        dj = diag[j]
        prev = 0
        for i in range(m):
            cur = out[i]
            scratch[i] = _submod(prev, dj * cur % p, p)
            prev = cur
        scratch[m] = _submod(prev, dj, p)
        scratch[0] = _submod(scratch[0], last_col[j], p)
        m += 1
        for i in range(m):
            out[i] = scratch[i]


def structured_charpoly(p_in, diag, last_col):
    """Characteristic polynomial of the companion-type matrix, c_0..c_{n-1}."""
    cdef u64 p = <u64> p_in
    _check_p(p)
    cdef Py_ssize_t n = len(diag)
    cdef u64 *buf = <u64 *> malloc(4 * n * sizeof(u64))
    if buf is NULL:
        raise MemoryError
    cdef u64 *d = buf
    cdef u64 *b = buf + n
    cdef u64 *out = buf + 2 * n
    cdef u64 *scratch = buf + 3 * n
    cdef Py_ssize_t i
    try:
        for i in range(n):
            d[i] = <u64> (diag[i] % p_in)
        for i in range(n - 1):
            b[i] = <u64> (last_col[i] % p_in)
        _structured_charpoly_c(p, d, b, n, out, scratch)
        return [out[i] for i in range(n)]
    finally:
        free(buf)


def berkowitz_charpoly(p_in, rows):
    """Division-free characteristic polynomial of a dense matrix, c_0..c_{n-1}."""
    cdef u64 p = <u64> p_in
    _check_p(p)
    cdef Py_ssize_t n = len(rows)
    # mat n*n, vec/newv/q n+1 each, v/v2 n each
    cdef u64 *buf = <u64 *> malloc((n * n + 3 * (n + 1) + 2 * n) * sizeof(u64))
    if buf is NULL:
        raise MemoryError
    cdef u64 *mat = buf
    cdef u64 *vec = buf + n * n
    cdef u64 *newv = vec + (n + 1)
    cdef u64 *q = newv + (n + 1)
    cdef u64 *v = q + (n + 1)
    cdef u64 *v2 = v + n
    cdef Py_ssize_t i, j, k, jj, lo
    cdef u64 acc
    cdef object row
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                mat[i * n + j] = <u64> (row[j] % p_in)
        vec[0] = 1
        vec[1] = (p - mat[0]) % p
        for k in range(1, n):
            q[0] = 1
            q[1] = (p - mat[k * n + k]) % p
            for i in range(k):
                v[i] = mat[i * n + k]
            for j in range(k):
                acc = 0
                for i in range(k):
                    acc = (acc + mat[k * n + i] * v[i]) % p
                q[j + 2] = (p - acc) % p
                if j < k - 1:
                    for i in range(k):
                        acc = 0
                        for jj in range(k):
                            acc = (acc + mat[i * n + jj] * v[jj]) % p
                        v2[i] = acc
                    for i in range(k):
                        v[i] = v2[i]
            for i in range(k + 2):
                acc = 0
                lo = i - k - 1
                if lo < 0:
                    lo = 0
                jj = lo
                while jj <= (i if i < k else k):
                    acc = (acc + q[i - jj] * vec[jj]) % p
                    jj += 1
                newv[i] = acc
            for i in range(k + 2):
                vec[i] = newv[i]
        return [vec[n - i] for i in range(n)]
    finally:
        free(buf)


cdef u64 _det_mod_c(u64 p, u64 *work, Py_ssize_t m) noexcept:
    # in-place elimination on an m x m row-major buffer
    cdef Py_ssize_t col, r, c, piv
    cdef u64 det = 1, pivot, inv, f, tmp
    cdef bint negate = False
    for col in range(m):
        piv = -1
        for r in range(col, m):
            if work[r * m + col] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            for c in range(m):
                tmp = work[col * m + c]
                work[col * m + c] = work[piv * m + c]
                work[piv * m + c] = tmp
            negate = not negate
        pivot = work[col * m + col]
        det = det * pivot % p
        inv = _powmod(pivot, p - 2, p)
        for r in range(col + 1, m):
            f = work[r * m + col]
            if f != 0:
                f = f * inv % p
                for c in range(col + 1, m):
                    work[r * m + c] = _submod(work[r * m + c],
                                              f * work[col * m + c] % p, p)
    if negate:
        return (p - det) % p
    return det


def principal_minor_sum(p_in, rows, m_in):
    """Sum of determinants of all principal m x m submatrices, mod p."""
    cdef u64 p = <u64> p_in
    _check_p(p)
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t m = <Py_ssize_t> m_in
    cdef u64 *buf = <u64 *> malloc((n * n + m * m) * sizeof(u64))
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    if buf is NULL or idx is NULL:
        free(buf)
        free(idx)
        raise MemoryError
    cdef u64 *mat = buf
    cdef u64 *sub = buf + n * n
    cdef Py_ssize_t i, j, r, c
    cdef u64 total = 0
    cdef object row
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                mat[i * n + j] = <u64> (row[j] % p_in)
        for i in range(m):
            idx[i] = i
        while True:
            for r in range(m):
                for c in range(m):
                    sub[r * m + c] = mat[idx[r] * n + idx[c]]
            total = (total + _det_mod_c(p, sub, m)) % p
            # next m-combination of 0..n-1 in lexicographic order
            i = m - 1
            while i >= 0 and idx[i] == i + n - m:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, m):
                idx[j] = idx[j - 1] + 1
        return total
    finally:
        free(buf)
        free(idx)


def count_matching_last_cols(p_in, diag, target):
    """Count last columns whose companion-type matrix has the target polynomial."""
    cdef u64 p = <u64> p_in
    _check_p(p)
    cdef Py_ssize_t n = len(diag)
    cdef u64 *buf = <u64 *> malloc(5 * n * sizeof(u64))
    if buf is NULL:
        raise MemoryError
    cdef u64 *d = buf
    cdef u64 *t = buf + n
    cdef u64 *digits = buf + 2 * n
    cdef u64 *out = buf + 3 * n
    cdef u64 *scratch = buf + 4 * n
    cdef Py_ssize_t i
    cdef unsigned long long count = 0
    cdef bint match
    try:
        for i in range(n):
            d[i] = <u64> (diag[i] % p_in)
            t[i] = <u64> (target[i] % p_in)
        if n == 1:
            _structured_charpoly_c(p, d, digits, n, out, scratch)
            return 1 if out[0] == t[0] else 0
        for i in range(n - 1):
            digits[i] = 0
        while True:
            _structured_charpoly_c(p, d, digits, n, out, scratch)
            match = True
            for i in range(n):
                if out[i] != t[i]:
                    match = False
                    break
            if match:
                count += 1
            i = 0
            while i < n - 1 and digits[i] == p - 1:
                digits[i] = 0
                i += 1
            if i == n - 1:
                return count
            digits[i] += 1
    finally:
        free(buf)
