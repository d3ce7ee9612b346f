"""Pure-Python kernels for the exact linear-algebra hot loops.

The compiled twin in ``_speedups.pyx`` implements the same six entry points
with identical semantics; ``doptsnf.kernels`` picks whichever is available.
Matrices are lists of row lists of Python ints, so every result is exact no
matter how large intermediates grow. Callers own all shape validation —
kernels assume well-formed input.
"""

from __future__ import annotations


def matmul(a, b):
    """Exact product of an m*k and a k*n matrix (lists of rows)."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bareiss_determinant(a):
    """Fraction-free determinant.

    Pivoting takes the first nonzero entry in each column, swapping rows and
    tracking the sign explicitly; every intermediate entry is a minor of the
    input, so divisions are exact.
    """
    n = len(a)
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        mk = m[k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def adjugate(a):
    """Adjugate and determinant via fraction-free Gauss-Jordan elimination.

    Runs the Bareiss recurrence on the augmented block [A | I], eliminating
    above and below each pivot in one sweep, which keeps the arithmetic
    integral throughout (O(n^3) big-int operations rather than the O(n^5)
    of cofactor expansion). Returns ``(adj, det)``; ``(None, 0)`` when the
    matrix is singular.
    """
    n = len(a)
    w = [row[:] + [0] * i + [1] + [0] * (n - 1 - i) for i, row in enumerate(a)]
    width = 2 * n
    sign = 1
    prev = 1
    for k in range(n):
        if w[k][k] == 0:
            for i in range(k + 1, n):
                if w[i][k] != 0:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return None, 0
        pivot = w[k][k]
        wk = w[k]
        for i in range(n):
            if i == k:
                continue
            wi = w[i]
            wik = wi[k]
            for j in range(width):
                wi[j] = (wi[j] * pivot - wik * wk[j]) // prev
        prev = pivot
    det = sign * prev
    adj = [[sign * w[i][j] for j in range(n, width)] for i in range(n)]
    return adj, det


def smith_reduce(a, want_transforms):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Strategy: repeatedly move the nonzero entry of minimal absolute value
    into the pivot position, clear its row and column by Euclidean steps
    (any leftover remainder becomes the next, strictly smaller pivot), and
    repair divisibility violations in the trailing block by folding the
    offending row into the pivot row. Each stage therefore ends with the
    pivot equal to the gcd of the trailing block, which makes the diagonal
    a divisibility chain by construction.

    Returns ``(factors, left, right)``: nonnegative invariant factors of
    length min(m, n), plus unimodular transforms with
    ``left @ a @ right == diag(factors)`` when requested (else None, None).
    """
    m = len(a)
    n = len(a[0])
    w = [row[:] for row in a]
    left = [[int(i == j) for j in range(m)] for i in range(m)] if want_transforms else None
    right = [[int(i == j) for j in range(n)] for i in range(n)] if want_transforms else None
    size = m if m < n else n
    for k in range(size):
        while True:
            # Locate the minimal nonzero |entry| of the trailing block.
            pi = pj = -1
            best = 0
            for i in range(k, m):
                wi = w[i]
                for j in range(k, n):
                    v = wi[j]
                    if v != 0:
                        if v < 0:
                            v = -v
                        if pi < 0 or v < best:
                            pi, pj, best = i, j, v
            if pi < 0:
                break  # trailing block is all zero; remaining factors are 0
            if pi != k:
                w[k], w[pi] = w[pi], w[k]
                if left is not None:
                    left[k], left[pi] = left[pi], left[k]
            if pj != k:
                for row in w:
                    row[k], row[pj] = row[pj], row[k]
                if right is not None:
                    for row in right:
                        row[k], row[pj] = row[pj], row[k]
            if w[k][k] < 0:
                w[k] = [-v for v in w[k]]
                if left is not None:
                    left[k] = [-v for v in left[k]]
            pivot = w[k][k]
            dirty = False
            wk = w[k]
            for i in range(k + 1, m):
                v = w[i][k]
                if v != 0:
                    q = v // pivot
                    if q:
                        wi = w[i]
                        for j in range(k, n):
                            wi[j] -= q * wk[j]
                        if left is not None:
                            li = left[i]
                            lk = left[k]
                            for j in range(m):
                                li[j] -= q * lk[j]
                    if w[i][k]:
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, n):
                v = wk[j]
                if v != 0:
                    q = v // pivot
                    if q:
                        for i in range(k, m):
                            w[i][j] -= q * w[i][k]
                        if right is not None:
                            for i in range(n):
                                right[i][j] -= q * right[i][k]
                    if wk[j]:
                        dirty = True
            if dirty:
                continue
            # Row and column k are clear; enforce pivot | trailing block.
            offender = -1
            for i in range(k + 1, m):
                wi = w[i]
                for j in range(k + 1, n):
                    if wi[j] % pivot:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            wo = w[offender]
            for j in range(n):
                wk[j] += wo[j]
            if left is not None:
                lk = left[k]
                lo = left[offender]
                for j in range(m):
                    lk[j] += lo[j]
    factors = [w[i][i] for i in range(size)]
    return factors, left, right


def gf_rank(a, p):
    """Rank over GF(p) by forward elimination; p must be an odd-sized prime
    fitting a machine word (the compiled twin relies on that)."""
    m = len(a)
    n = len(a[0])
    w = [[v % p for v in row] for row in a]
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if w[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        w[rank], w[piv] = w[piv], w[rank]
        wr = w[rank]
        inv = pow(wr[col], -1, p)
        for i in range(rank + 1, m):
            f = w[i][col]
            if f:
                f = (f * inv) % p
                wi = w[i]
                for j in range(col, n):
                    wi[j] = (wi[j] - f * wr[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def autocorrelations(row):
    """Cyclic autocorrelations c_k = sum_i row[i]*row[(i+k) mod n].

    c_k is the (0, k) entry of R*R^T for the circulant R with this first
    row, so a +-1 row generates a Barba Gram iff c_k == 1 for all k != 0.
    """
    n = len(row)
    out = [0] * n
    for k in range(n):
        s = 0
        for i in range(n):
            j = i + k
            if j >= n:
                j -= n
            s += row[i] * row[j]
        out[k] = s
    return out
