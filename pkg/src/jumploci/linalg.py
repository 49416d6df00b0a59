"""Exact Gaussian elimination over the rationals.

Vectors are tuples of ``Fraction``; matrices are lists of rows.
"""

from fractions import Fraction


def frac_vector(values):
    return tuple(Fraction(v) for v in values)


def zero_vector(n):
    return (Fraction(0),) * n


def is_zero_vector(v):
    return not any(v)


def add_vectors(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v):
    return tuple(c * a for a in v)


def rref(rows, ncols, column_order=None):
    """Reduced row echelon form of the span of ``rows``.

    ``column_order`` lists the columns in the order pivots are sought
    (default: left to right). Returns ``(basis, pivots)`` with ``basis``
    sorted by pivot position in that order.
    """
    order = list(range(ncols)) if column_order is None else list(column_order)
    work = [[Fraction(a) for a in r] for r in rows if any(r)]
    basis = []
    pivots = []
    for col in order:
        pick = None
        for idx, r in enumerate(work):
            if r[col] != 0:
                pick = idx
                break
        if pick is None:
            continue
        prow = work.pop(pick)
        inv = 1 / prow[col]
        prow = [a * inv for a in prow]
        for r in work:
            c = r[col]
            if c:
                for j in range(ncols):
                    if prow[j]:
                        r[j] -= c * prow[j]
        for r in basis:
            c = r[col]
            if c:
                for j in range(ncols):
                    if prow[j]:
                        r[j] -= c * prow[j]
        basis.append(prow)
        pivots.append(col)
        work = [r for r in work if any(r)]
        if not work:
            break
    return [tuple(r) for r in basis], pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(rref(rows, ncols)[0])


def reduce_against(v, basis, pivots):
    """Remainder of ``v`` after eliminating the pivot columns of an RREF basis."""
    v = list(v)
    for row, col in zip(basis, pivots):
        c = v[col]
        if c:
            for j, a in enumerate(row):
                if a:
                    v[j] -= c * a
    return tuple(v)


def in_span(v, basis, pivots):
    return is_zero_vector(reduce_against(v, basis, pivots))


def mat_mul(a, b, inner=None):
    """Product of rational matrices given as lists of rows."""
    if not a:
        return []
    if inner is None:
        inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for k in range(inner):
            c = row[k]
            if c:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += c * brow[j]
        out.append(acc)
    return out


def transpose(m, nrows=None, ncols=None):
    if nrows is None:
        nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return [[m[i][j] for i in range(nrows)] for j in range(ncols)]


def left_kernel(m, nrows, ncols):
    """Basis of row vectors y with y·m = 0 (m is nrows × ncols)."""
    return kernel(transpose(m, nrows, ncols), ncols, nrows)


def kernel(m, nrows, ncols):
    """Basis of column vectors x with m·x = 0."""
    basis, pivots = rref(m, ncols) if nrows else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(basis, pivots):
            x[p] = -row[f]
        out.append(tuple(x))
    return out


def inverse(m):
    """Inverse of a square rational matrix; raises ValueError if singular."""
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    basis, pivots = rref(aug, 2 * n, column_order=range(n))
    if pivots != list(range(n)) or len(basis) < n:
        raise ValueError("matrix is singular")
    return [list(r[n:]) for r in basis]
