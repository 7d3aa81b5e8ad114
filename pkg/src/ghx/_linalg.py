"""Dense exact linear algebra over Q on lists of lists of Fractions.

Matrices are lists of rows.  A matrix with zero rows has no recorded
column count, so functions that need it take ``ncols`` explicitly.
"""

from fractions import Fraction


def zeros(nrows, ncols):
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a, b, inner=None):
    """Product of an (m x k) and a (k x n) matrix."""
    if not a:
        return []
    k = len(a[0]) if inner is None else inner
    n = len(b[0]) if b else 0
    out = zeros(len(a), n)
    for i, row in enumerate(a):
        out_row = out[i]
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(n):
                    if brow[j]:
                        out_row[j] += x * brow[j]
    return out


def transpose(a, ncols):
    return [[a[i][j] for i in range(len(a))] for j in range(ncols)]


def rref(a, ncols):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [list(map(Fraction, row)) for row in a]
    pivots = []
    r = 0
    for j in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][j]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][j]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][j]:
                f = m[i][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(j)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a, ncols=None):
    if not a:
        return 0
    if ncols is None:
        ncols = len(a[0])
    return len(rref(a, ncols)[1])


def nullspace(a, ncols):
    """Basis (list of vectors) of {x : a x = 0}."""
    rows, pivots = rref(a, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a, b, ncols):
    """One solution x of a x = b, or None if inconsistent."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return x


def column_span_rank(cols, dim):
    """Rank of a list of column vectors of length ``dim``."""
    if not cols or dim == 0:
        return 0
    return rank([list(c) for c in cols], dim)
