"""Finite-dimensional algebras given by structure constants.

The product table stores ``table[i][j]`` = coordinate vector of e_i * e_j,
so brute-force scans compose table rows instead of re-contracting the rank-3
tensor.  Indices are 0-based internally; the JSON interchange format is
1-based (see serialize).
"""

from __future__ import annotations

from . import linalg
from .report import CheckReport, Residual


class StructureConstants:
    def __init__(self, field, table, label=None):
        self.field = field
        self.table = table  # table[i][j] = list of d scalars
        self.dim = len(table)
        self.label = label
        self._sp = None

    def sparse_cell(self, i, j):
        """Nonzero (k, coefficient) pairs of e_i e_j; cached."""
        if self._sp is None:
            self._sp = [[None] * self.dim for _ in range(self.dim)]
        cell = self._sp[i][j]
        if cell is None:
            cell = [(k, c) for k, c in enumerate(self.table[i][j]) if not c.is_zero()]
            self._sp[i][j] = cell
        return cell

    def compose_right(self, pairs, j):
        """dict of (element given by sparse pairs) * e_j."""
        out = {}
        for h, c in pairs:
            for k, cc in self.sparse_cell(h, j):
                v = c * cc
                out[k] = out[k] + v if k in out else v
        return out

    def compose_left(self, i, pairs):
        out = {}
        for h, c in pairs:
            for k, cc in self.sparse_cell(i, h):
                v = c * cc
                out[k] = out[k] + v if k in out else v
        return out

    @classmethod
    def from_tensor(cls, field, dim, entries, label=None):
        """entries: mapping (k, i, j) -> scalar with e_i e_j = sum_k c^k_ij e_k."""
        zero = field.zero()
        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (k, i, j), v in entries.items():
            table[i][j][k] = field(v)
        return cls(field, table, label)

    def entry(self, k, i, j):
        return self.table[i][j][k]

    def multiply(self, x, y):
        """Product of coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        zero = self.field.zero()
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                coef = xi * yj
                for k, c in self.sparse_cell(i, j):
                    out[k] = out[k] + coef * c
        return out

    def _compose(self, vec, j):
        """(vec as element) * e_j, with vec a coordinate vector."""
        zero = self.field.zero()
        out = [zero] * self.dim
        for h, c in enumerate(vec):
            if c.is_zero():
                continue
            cell = self.table[h][j]
            for k in range(self.dim):
                if not cell[k].is_zero():
                    out[k] = out[k] + c * cell[k]
        return out

    def _compose_left(self, i, vec):
        """e_i * (vec as element)."""
        zero = self.field.zero()
        out = [zero] * self.dim
        for h, c in enumerate(vec):
            if c.is_zero():
                continue
            cell = self.table[i][h]
            for k in range(self.dim):
                if not cell[k].is_zero():
                    out[k] = out[k] + c * cell[k]
        return out

    def associator_residual(self):
        """Worst (e_i e_j) e_k - e_i (e_j e_k) over all basis triples."""
        res = Residual()
        d = self.dim
        for i in range(d):
            for j in range(d):
                left = self.sparse_cell(i, j)
                for k in range(d):
                    lhs = self.compose_right(left, k)
                    rhs = self.compose_left(i, self.sparse_cell(j, k))
                    for h in set(lhs) | set(rhs):
                        lv = lhs.get(h)
                        rv = rhs.get(h)
                        if lv is None:
                            res.feed((i, j, k, h), -rv)
                        elif rv is None:
                            res.feed((i, j, k, h), lv)
                        else:
                            res.feed((i, j, k, h), lv - rv)
        return res

    def is_associative(self):
        return self.associator_residual().zero

    def find_unity(self):
        """Coordinates of the two-sided unity, or None."""
        d = self.dim
        rows, rhs = [], []
        for i in range(d):
            for k in range(d):
                rows.append([self.table[h][i][k] for h in range(d)])
                rhs.append(self.field.one() if i == k else self.field.zero())
                rows.append([self.table[i][h][k] for h in range(d)])
                rhs.append(self.field.one() if i == k else self.field.zero())
        return linalg.solve(self.field, rows, rhs)

    def left_mult_matrix(self, i):
        """Matrix of v -> e_i * v."""
        return [[self.table[i][j][k] for j in range(self.dim)] for k in range(self.dim)]

    def is_semisimple(self):
        """Trace-form criterion; requires an associative algebra with unity."""
        if not self.is_associative():
            raise ValueError("trace-form criterion needs an associative algebra")
        if self.find_unity() is None:
            raise ValueError("trace-form criterion needs a unity")
        d = self.dim
        mats = [self.left_mult_matrix(i) for i in range(d)]
        gram = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = self.field.zero()
                for a in range(d):
                    for b in range(d):
                        acc = acc + mats[i][a][b] * mats[j][b][a]
                row.append(acc)
            gram.append(row)
        return linalg.rank(self.field, gram) == d

    def center_dimension(self):
        d = self.dim
        rows = []
        for i in range(d):
            for k in range(d):
                rows.append([self.table[h][i][k] - self.table[i][h][k] for h in range(d)])
        return d - linalg.rank(self.field, rows)

    def __repr__(self):
        tag = " %s" % self.label if self.label else ""
        return "<StructureConstants%s dim=%d>" % (tag, self.dim)


class Pencil:
    """A pair of products on one space; see pencil.check_compatibility."""

    def __init__(self, star, circle):
        if star.dim != circle.dim:
            raise ValueError("pencil products must share the dimension")
        if star.field != circle.field:
            raise ValueError("pencil products must share the field")
        self.star = star
        self.circle = circle

    @property
    def dim(self):
        return self.star.dim

    @property
    def field(self):
        return self.star.field


def zero_algebra(field, dim, label=None):
    z = field.zero()
    return StructureConstants(field, [[[z] * dim for _ in range(dim)] for _ in range(dim)],
                              label or "zero")


def matrix_algebra(field, n):
    """Mat_n with basis E_(r,c) flattened row-major: (r, c) -> r*n + c."""
    d = n * n
    zero, one = field.zero(), field.one()
    table = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for r1 in range(n):
        for c1 in range(n):
            for r2 in range(n):
                for c2 in range(n):
                    if c1 == r2:
                        table[r1 * n + c1][r2 * n + c2][r1 * n + c2] = one
    return StructureConstants(field, table, "Mat%d" % n)


def direct_sum(a, b):
    if a.field != b.field:
        raise ValueError("direct sum needs a common field")
    d1, d2 = a.dim, b.dim
    d = d1 + d2
    zero = a.field.zero()
    table = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d1):
        for j in range(d1):
            for k in range(d1):
                table[i][j][k] = a.table[i][j][k]
    for i in range(d2):
        for j in range(d2):
            for k in range(d2):
                table[d1 + i][d1 + j][d1 + k] = b.table[i][j][k]
    return StructureConstants(a.field, table)


def adjoin_unity(sc, scalar_part=None):
    """Extend to dim+1 with a new basis element acting as unity.

    ``scalar_part[i][j]`` is an optional multiple of the new unity appearing
    in e_i e_j, for algebras whose products are only closed modulo 1.
    """
    d = sc.dim
    zero, one = sc.field.zero(), sc.field.one()
    table = [[[zero] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    table[0][0][0] = one
    for i in range(d):
        table[0][i + 1][i + 1] = one
        table[i + 1][0][i + 1] = one
        for j in range(d):
            for k in range(d):
                table[i + 1][j + 1][k + 1] = sc.table[i][j][k]
            if scalar_part is not None:
                table[i + 1][j + 1][0] = sc.field(scalar_part[i][j])
    return StructureConstants(sc.field, table)


def matn_lift(pencil, n):
    """Both products on Mat_n(V): (x ox E_ab)(y ox E_cd) = delta_bc (xy ox E_ad)."""

    def lift(sc):
        d = sc.dim
        dd = d * n * n
        zero = sc.field.zero()

        def idx(h, r, c):
            return h * n * n + r * n + c

        table = [[[zero] * dd for _ in range(dd)] for _ in range(dd)]
        for h1 in range(d):
            for h2 in range(d):
                prod = sc.table[h1][h2]
                for r1 in range(n):
                    for c1 in range(n):
                        for c2 in range(n):
                            src1 = idx(h1, r1, c1)
                            src2 = idx(h2, c1, c2)
                            for k in range(d):
                                if not prod[k].is_zero():
                                    table[src1][src2][idx(k, r1, c2)] = prod[k]
        return StructureConstants(sc.field, table)

    return Pencil(lift(pencil.star), lift(pencil.circle))


def validate_algebra(sc, expect_unity=False):
    report = CheckReport()
    report.add("associator", sc.associator_residual())
    if expect_unity and sc.find_unity() is None:
        missing = Residual()
        missing.feed(("unity",), sc.field.one())
        report.add("unity", missing)
    return report
