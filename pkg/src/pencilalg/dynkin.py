"""Admissible multiplicity matrices and their classification by the
simply-laced extended diagrams.

A nonnegative integer r x s matrix is admissible when its bipartite graph is
connected and the doubling equations sum_j a_ij n_j = 2 m_i and
sum_i a_ij m_i = 2 n_j admit a positive solution; the solutions are the
radical vectors of the associated even lattice, which forces one of the
affine A-D-E shapes.  Everything here is plain integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class DiagramID:
    """family in {A1, A2k-1, D4, D2k, D2k-1, E6, E7, E8}; k where it applies;
    transposed marks that the input matched the catalogued matrix only after
    transposition."""

    def __init__(self, family, k=None, transposed=False):
        self.family = family
        self.k = k
        self.transposed = transposed

    def __eq__(self, other):
        return (isinstance(other, DiagramID)
                and (self.family, self.k, self.transposed)
                == (other.family, other.k, other.transposed))

    def __repr__(self):
        bits = [self.family]
        if self.k is not None:
            bits.append("k=%d" % self.k)
        if self.transposed:
            bits.append("transposed")
        return "DiagramID(%s)" % ", ".join(bits)

    def to_dict(self):
        return {"family": self.family, "k": self.k, "transposed": self.transposed}


def _shape(a):
    return len(a), len(a[0]) if a else 0


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_decomposable(a):
    """Disconnectedness of the bipartite row/column graph, with a witness
    partition (row_set, col_set) when decomposable."""
    r, s = _shape(a)
    if r == 0 or s == 0:
        return False, None
    seen_rows = {0}
    seen_cols = set()
    frontier_rows = [0]
    frontier_cols = []
    while frontier_rows or frontier_cols:
        if frontier_rows:
            i = frontier_rows.pop()
            for j in range(s):
                if a[i][j] and j not in seen_cols:
                    seen_cols.add(j)
                    frontier_cols.append(j)
        else:
            j = frontier_cols.pop()
            for i in range(r):
                if a[i][j] and i not in seen_rows:
                    seen_rows.add(i)
                    frontier_rows.append(i)
    if len(seen_rows) == r and len(seen_cols) == s:
        return False, None
    return True, (sorted(seen_rows), sorted(seen_cols))


def _components(a):
    r, s = _shape(a)
    rows_left = set(range(r))
    comps = []
    while rows_left:
        start = min(rows_left)
        rows, cols = {start}, set()
        frontier = [("r", start)]
        while frontier:
            kind, x = frontier.pop()
            if kind == "r":
                for j in range(s):
                    if a[x][j] and j not in cols:
                        cols.add(j)
                        frontier.append(("c", j))
            else:
                for i in range(r):
                    if a[i][x] and i not in rows:
                        rows.add(i)
                        frontier.append(("r", i))
        comps.append((sorted(rows), sorted(cols)))
        rows_left -= rows
    # columns touching no row at all form their own degenerate components
    used_cols = set()
    for _, cols in comps:
        used_cols.update(cols)
    for j in range(s):
        if j not in used_cols:
            comps.append(([], [j]))
    return comps


def _int_nullspace(matrix):
    """Integer basis of the rational kernel of an integer matrix."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    cols = len(rows[0]) if rows else 0
    pivots = []
    rr = 0
    for c in range(cols):
        pr = None
        for i in range(rr, len(rows)):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[rr], rows[pr] = rows[pr], rows[rr]
        inv = rows[rr][c]
        rows[rr] = [x / inv for x in rows[rr]]
        for i in range(len(rows)):
            if i != rr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    basis = []
    pivot_set = set(pivots)
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        basis.append([x // (g or 1) for x in ints])
    return basis


def solve_adm(a):
    """Primitive positive integer solution (m, n) of the doubling equations,
    or None.

    Decomposable matrices are solved component by component (each block
    contributes an independent radical direction)."""
    r, s = _shape(a)
    if r == 0 or s == 0:
        return None
    decomposable, _ = is_decomposable(a)
    if decomposable:
        mvec = [0] * r
        nvec = [0] * s
        for rows, cols in _components(a):
            if not rows or not cols:
                return None
            sub = [[a[i][j] for j in cols] for i in rows]
            got = solve_adm(sub)
            if got is None:
                return None
            for i, v in zip(rows, got[0]):
                mvec[i] = v
            for j, v in zip(cols, got[1]):
                nvec[j] = v
        return mvec, nvec

    # kernel of [[2I, -A], [-A^t, 2I]]
    big = []
    for i in range(r):
        big.append([2 if h == i else 0 for h in range(r)] + [-a[i][j] for j in range(s)])
    for j in range(s):
        big.append([-a[i][j] for i in range(r)] + [2 if h == j else 0 for h in range(s)])
    basis = _int_nullspace(big)
    if len(basis) != 1:
        return None
    v = basis[0]
    if all(x <= 0 for x in v):
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        return None
    return v[:r], v[r:]


def is_admissible(a):
    decomposable, _ = is_decomposable(a)
    return (not decomposable) and solve_adm(a) is not None


def gram_matrix(a):
    """Even symmetric form of the doubled vertex set: 2 on the diagonal,
    -a_ij between the two sides."""
    r, s = _shape(a)
    out = []
    for i in range(r):
        out.append([2 if h == i else 0 for h in range(r)] + [-a[i][j] for j in range(s)])
    for j in range(s):
        out.append([-a[i][j] for i in range(r)] + [2 if h == j else 0 for h in range(s)])
    return out


def gram_psd_rank(g):
    """(is_psd, rank) by exact symmetric elimination with diagonal pivots."""
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    active = list(range(n))
    rank = 0
    while active:
        piv = None
        for i in active:
            if m[i][i] > 0:
                piv = i
                break
        if piv is None:
            for i in active:
                if m[i][i] < 0:
                    return False, rank
                for j in active:
                    if m[i][j] != 0:
                        # zero diagonal with nonzero off-diagonal entry is
                        # indefinite for a symmetric form
                        return False, rank
            return True, rank
        rank += 1
        active.remove(piv)
        d = m[piv][piv]
        for i in active:
            if m[i][piv] != 0:
                f = m[i][piv] / d
                for j in active:
                    m[i][j] -= f * m[piv][j]
                m[i][piv] = Fraction(0)
    return True, rank


FAMILIES = ("A1", "A2k-1", "D4", "D2k", "D2k-1", "E6", "E7", "E8")

_FIXED = {
    "A1": ([[2]], [1], [1]),
    "D4": ([[1, 1, 1, 1]], [2], [1, 1, 1, 1]),
    "E6": ([[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]],
           [2, 2, 2], [3, 1, 1, 1]),
    "E7": ([[1, 1, 0, 0, 0], [0, 1, 1, 1, 0], [0, 0, 0, 1, 1]],
           [2, 4, 2], [1, 3, 2, 3, 1]),
    "E8": ([[1, 0, 0, 0, 0], [1, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]],
           [2, 6, 4, 2], [4, 3, 5, 3, 1]),
}


def catalog(family, k=None):
    """The catalogued matrix and primitive dimension vectors (m, n)."""
    if family in _FIXED:
        if k is not None:
            raise ValueError("%s takes no size parameter" % family)
        a, mv, nv = _FIXED[family]
        return [row[:] for row in a], mv[:], nv[:]
    if family == "A2k-1":
        if k is None or k < 2:
            raise ValueError("A2k-1 needs k >= 2")
        a = [[0] * k for _ in range(k)]
        for i in range(k):
            a[i][i] = 1
            a[i][(i + 1) % k] = 1
        return a, [1] * k, [1] * k
    if family == "D2k":
        if k is None or k < 3:
            raise ValueError("D2k needs k >= 3")
        r, s = k - 1, k + 2
        a = [[0] * s for _ in range(r)]
        a[0][0] = a[0][1] = a[0][2] = 1
        for i in range(1, k - 2):
            a[i][i + 1] = a[i][i + 2] = 1
        a[k - 2][k - 1] = a[k - 2][k] = a[k - 2][k + 1] = 1
        mv = [2] * r
        nv = [1, 1] + [2] * (k - 2) + [1, 1]
        return a, mv, nv
    if family == "D2k-1":
        if k is None or k < 3:
            raise ValueError("D2k-1 needs k >= 3")
        a = [[0] * k for _ in range(k)]
        a[0][0] = a[0][1] = a[0][2] = 1
        for i in range(1, k - 2):
            a[i][i + 1] = a[i][i + 2] = 1
        a[k - 2][k - 1] = 1
        a[k - 1][k - 1] = 1
        mv = [2] * (k - 2) + [1, 1]
        nv = [1, 1] + [2] * (k - 2)
        return a, mv, nv
    raise ValueError("unknown family %r" % (family,))


def catalog_entries(max_k=6):
    for family in ("A1", "D4", "E6", "E7", "E8"):
        yield family, None
    for k in range(2, max_k + 1):
        yield "A2k-1", k
    for k in range(3, max_k + 1):
        yield "D2k", k
        yield "D2k-1", k


def _row_profile(a):
    return sorted(tuple(sorted(row, reverse=True)) for row in a)


def _match_up_to_permutation(a, b):
    """True when row and column permutations take a to b."""
    r, s = _shape(a)
    if (r, s) != _shape(b):
        return False
    if _row_profile(a) != _row_profile(b) or _row_profile(transpose(a)) != _row_profile(transpose(b)):
        return False

    b_rows = [tuple(sorted(row, reverse=True)) for row in b]
    used = [False] * r

    def backtrack(order, taken):
        if len(order) == r:
            cols_a = sorted(tuple(a[i][j] for i in order) for j in range(s))
            cols_b = sorted(tuple(b[i][j] for i in range(r)) for j in range(s))
            return cols_a == cols_b
        i = len(order)
        want = b_rows[0]
        for cand in range(r):
            if used[cand]:
                continue
            if tuple(sorted(a[cand], reverse=True)) != tuple(sorted(b[i], reverse=True)):
                continue
            used[cand] = True
            order.append(cand)
            # prune: the partial column multiset must stay consistent
            cols_a = sorted(tuple(a[x][j] for x in order) for j in range(s))
            cols_b = sorted(tuple(b[x][j] for x in range(i + 1)) for j in range(s))
            if cols_a == cols_b and backtrack(order, taken):
                return True
            order.pop()
            used[cand] = False
        return False

    return backtrack([], set())


def classify(a):
    """Recognize an admissible matrix among the catalogued families, up to
    row/column permutation and transposition; None otherwise."""
    if not is_admissible(a):
        return None
    r, s = _shape(a)
    total = r + s
    for family, k in catalog_entries(max_k=max(2, (total + 1) // 2 + 2)):
        cat, _, _ = catalog(family, k)
        cr, cs = _shape(cat)
        if cr + cs != total:
            continue
        if (r, s) == (cr, cs) and _match_up_to_permutation(a, cat):
            return DiagramID(family, k, transposed=False)
        if (s, r) == (cr, cs) and _match_up_to_permutation(transpose(a), cat):
            return DiagramID(family, k, transposed=True)
    return None
