# cython: language_level=3
"""Compiled twin of the pure-Python kernels.

Same six entry points, same semantics. Entries stay Python objects in the
exact routines (invariant factors and Bareiss intermediates exceed any
machine word), so the win there is typed loop machinery; gf_rank and
autocorrelations run on C int64 buffers outright.
"""

from libc.stdlib cimport free, malloc


def matmul(a, b):
    """Exact product of an m*k and a k*n matrix (lists of rows)."""
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n, kk, i, j, t
    cdef list bt = [list(tup) for tup in zip(*b)]
    n = len(bt)
    out = []
    cdef list row, col
    for i in range(m):
        row = <list> a[i]
        kk = len(row)
        orow = [None] * n
        for j in range(n):
            col = <list> bt[j]
            s = 0
            for t in range(kk):
                s += row[t] * col[t]
            orow[j] = s
        out.append(orow)
    return out


def bareiss_determinant(a):
    """Fraction-free determinant (first-nonzero pivoting, explicit sign)."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list m = [list(row) for row in a]
    cdef list mk, mi
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        if (<list> m[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list> m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        mk = <list> m[k]
        pivot = mk[k]
        for i in range(k + 1, n):
            mi = <list> m[i]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * (<list> m[n - 1])[n - 1]


def adjugate(a):
    """Adjugate and determinant by fraction-free Gauss-Jordan on [A | I].

    Returns ``(adj, det)``; ``(None, 0)`` when singular.
    """
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t width = 2 * n
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list w = []
    cdef list wk, wi
    for i in range(n):
        row = list(a[i]) + [0] * n
        row[n + i] = 1
        w.append(row)
    prev = 1
    for k in range(n):
        if (<list> w[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list> w[i])[k] != 0:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return None, 0
        wk = <list> w[k]
        pivot = wk[k]
        for i in range(n):
            if i == k:
                continue
            wi = <list> w[i]
            wik = wi[k]
            for j in range(width):
                wi[j] = (wi[j] * pivot - wik * wk[j]) // prev
        prev = pivot
    det = sign * prev
    adj = [[sign * (<list> w[i])[j] for j in range(n, width)] for i in range(n)]
    return adj, det


def smith_reduce(a, want_transforms):
    """Diagonalize by unimodular operations; min-|entry| pivoting with
    divisibility repair. Returns ``(factors, left, right)``."""
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n = len(a[0])
    cdef Py_ssize_t size = m if m < n else n
    cdef Py_ssize_t i, j, k, pi, pj, offender
    cdef bint dirty
    cdef list w = [list(row) for row in a]
    cdef list left = None
    cdef list right = None
    cdef list wk, wi, wo, li, lk, lo, row_
    if want_transforms:
        left = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        right = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(size):
        while True:
            pi = -1
            pj = -1
            best = 0
            for i in range(k, m):
                wi = <list> w[i]
                for j in range(k, n):
                    v = wi[j]
                    if v != 0:
                        if v < 0:
                            v = -v
                        if pi < 0 or v < best:
                            pi = i
                            pj = j
                            best = v
            if pi < 0:
                break
            if pi != k:
                w[k], w[pi] = w[pi], w[k]
                if left is not None:
                    left[k], left[pi] = left[pi], left[k]
            if pj != k:
                for i in range(m):
                    row_ = <list> w[i]
                    row_[k], row_[pj] = row_[pj], row_[k]
                if right is not None:
                    for i in range(n):
                        row_ = <list> right[i]
                        row_[k], row_[pj] = row_[pj], row_[k]
            wk = <list> w[k]
            if wk[k] < 0:
                w[k] = wk = [-v for v in wk]
                if left is not None:
                    left[k] = [-v for v in left[k]]
            pivot = wk[k]
            dirty = False
            for i in range(k + 1, m):
                v = (<list> w[i])[k]
                if v != 0:
                    q = v // pivot
                    if q:
                        wi = <list> w[i]
                        for j in range(k, n):
                            wi[j] -= q * wk[j]
                        if left is not None:
                            li = <list> left[i]
                            lk = <list> left[k]
                            for j in range(m):
                                li[j] -= q * lk[j]
                    if (<list> w[i])[k]:
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                v = wk[j]
                if v != 0:
                    q = v // pivot
                    if q:
                        for i in range(k, m):
                            wi = <list> w[i]
                            wi[j] -= q * wi[k]
                        if right is not None:
                            for i in range(n):
                                wi = <list> right[i]
                                wi[j] -= q * wi[k]
                    if wk[j]:
                        dirty = True
            if dirty:
                continue
            offender = -1
            for i in range(k + 1, m):
                wi = <list> w[i]
                for j in range(k + 1, n):
                    if wi[j] % pivot:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            wo = <list> w[offender]
            for j in range(n):
                wk[j] += wo[j]
            if left is not None:
                lk = <list> left[k]
                lo = <list> left[offender]
                for j in range(m):
                    lk[j] += lo[j]
    factors = [(<list> w[i])[i] for i in range(size)]
    return factors, left, right


cdef long long _minv(long long x, long long p):
    """Modular inverse of x mod prime p by Fermat (x^(p-2))."""
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def gf_rank(a, p):
    """Rank over GF(p); p must be an odd prime fitting a machine word."""
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n = len(a[0])
    cdef long long pp = p
    cdef long long *w = <long long *> malloc(m * n * sizeof(long long))
    cdef Py_ssize_t i, j, col, piv, rank
    cdef long long f, inv, t
    if w == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            row = a[i]
            for j in range(n):
                w[i * n + j] = <long long> (row[j] % p)
        rank = 0
        for col in range(n):
            piv = -1
            for i in range(rank, m):
                if w[i * n + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(n):
                    t = w[rank * n + j]
                    w[rank * n + j] = w[piv * n + j]
                    w[piv * n + j] = t
            inv = _minv(w[rank * n + col], pp)
            for i in range(rank + 1, m):
                f = w[i * n + col]
                if f != 0:
                    f = (f * inv) % pp
                    for j in range(col, n):
                        w[i * n + j] = (w[i * n + j] - f * w[rank * n + j]) % pp
                        if w[i * n + j] < 0:
                            w[i * n + j] += pp
            rank += 1
            if rank == m:
                break
        return rank
    finally:
        free(w)


def autocorrelations(row):
    """Cyclic autocorrelations c_k = sum_i row[i]*row[(i+k) mod n]."""
    cdef Py_ssize_t n = len(row)
    cdef long long *r = <long long *> malloc(n * sizeof(long long))
    cdef Py_ssize_t i, j, k
    cdef long long s
    if r == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r[i] = <long long> row[i]
        out = [0] * n
        for k in range(n):
            s = 0
            for i in range(n):
                j = i + k
                if j >= n:
                    j -= n
                s += r[i] * r[j]
            out[k] = s
        return out
    finally:
        free(r)
