"""Dense exact linear algebra over the scalar backends.

Matrices are lists of row lists; everything uses Gaussian elimination with
deterministic first-nonzero pivoting so witnesses are reproducible.
"""

from __future__ import annotations


def zeros(field, rows, cols):
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(field, n):
    m = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s, a):
    return [[s * x for x in row] for row in a]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        ai = a[i]
        for j in range(cols):
            acc = ai[0] * b[0][j]
            for k in range(1, inner):
                acc = acc + ai[k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    return [_dot(row, v) for row in a]


def _dot(row, v):
    acc = row[0] * v[0]
    for x, y in zip(row[1:], v[1:]):
        acc = acc + x * y
    return acc


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(x.is_zero() for row in a for x in row)


def _forward_eliminate(field, m):
    """In-place row echelon; returns list of pivot columns."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(field, a):
    m = [list(row) for row in a]
    return len(_forward_eliminate(field, m))


def nullspace(field, a):
    """Basis of the right kernel; each vector has a 1 in its free column."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(row) for row in a]
    pivots = _forward_eliminate(field, m)
    pivot_set = set(pivots)
    basis = []
    zero, one = field.zero(), field.one()
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [zero] * cols
        v[free] = one
        for r, c in enumerate(pivots):
            v[c] = -m[r][free]
        basis.append(v)
    return basis


def solve(field, a, b):
    """One solution of A x = b, or None when inconsistent.

    Under-determined systems return the solution with free variables 0.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(row) + [bv] for row, bv in zip(a, b)]
    pivots = _forward_eliminate(field, m)
    # a pivot in the augmented column means inconsistency
    if pivots and pivots[-1] == cols:
        return None
    for r in range(len(pivots), rows):
        if not m[r][cols].is_zero():
            return None
    x = [field.zero()] * cols
    for r, c in enumerate(pivots):
        x[c] = m[r][cols]
    return x


def solve_unique(field, a, b):
    """Solution of A x = b required to be unique; None when inconsistent,
    ValueError when under-determined."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    x = solve(field, a, b)
    if x is None:
        return None
    if rank(field, a) < cols:
        raise ValueError("solution is not unique")
    return x


def inverse(field, a):
    n = len(a)
    m = [list(row) + list(idrow) for row, idrow in zip(a, identity(field, n))]
    pivots = _forward_eliminate(field, m)
    if len(pivots) < n or pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def in_span(field, vectors, target):
    """Coordinates of target in the span of vectors, or None."""
    if not vectors:
        return [] if all(t.is_zero() for t in target) else None
    a = transpose(vectors)
    return solve(field, a, target)
