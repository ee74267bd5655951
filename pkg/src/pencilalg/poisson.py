"""Linear brackets on the coordinate space of matrix-valued points.

A product with constants p^k_ij on a space of dimension N induces, for every
matrix size n, the bracket

  {f_(i,l1,m1), f_(j,l2,m2)} = d_(m1,l2) p^k_ij f_(k,l1,m2)
                             - d_(m2,l1) p^k_ji f_(k,l2,m1)

on the N n^2 coordinates f_(i,l,m).  Compatible products induce compatible
brackets.  Coordinates are flattened as (i, l, m) -> (i*n + l)*n + m.
"""

from __future__ import annotations

from .report import CheckReport, Residual

_MAX_COORDS = 40


class LinearPoissonBracket:
    """Antisymmetric structure tensor, stored as sparse rows:
    table[a][b] = list of (c, coefficient) meaning {f_a, f_b} = sum c."""

    def __init__(self, field, dim, table):
        self.field = field
        self.dim = dim
        self.table = table

    def bracket_pairs(self, a, b):
        return self.table[a][b]

    def antisymmetry_residual(self):
        res = Residual()
        for a in range(self.dim):
            for b in range(self.dim):
                row = dict(self.table[a][b])
                for c, v in self.table[b][a]:
                    row[c] = row.get(c, self.field.zero()) + v
                for c, v in row.items():
                    res.feed((a, b, c), v)
        return res


def build_bracket(sc, n):
    """The induced linear bracket on the n x n coordinate space."""
    if not sc.is_associative():
        raise ValueError("bracket construction expects an associative product")
    nvec = sc.dim
    dim = nvec * n * n
    if dim > _MAX_COORDS:
        raise ValueError("coordinate space of dimension %d exceeds the scan cap %d"
                         % (dim, _MAX_COORDS))

    def flat(i, l, m):
        return (i * n + l) * n + m

    table = [[[] for _ in range(dim)] for _ in range(dim)]
    for i in range(nvec):
        for j in range(nvec):
            cell_ij = sc.sparse_cell(i, j)
            cell_ji = sc.sparse_cell(j, i)
            for l1 in range(n):
                for m1 in range(n):
                    a = flat(i, l1, m1)
                    for l2 in range(n):
                        for m2 in range(n):
                            b = flat(j, l2, m2)
                            out = {}
                            if m1 == l2:
                                for k, c in cell_ij:
                                    key = flat(k, l1, m2)
                                    out[key] = out.get(key, sc.field.zero()) + c
                            if m2 == l1:
                                for k, c in cell_ji:
                                    key = flat(k, l2, m1)
                                    out[key] = out.get(key, sc.field.zero()) - c
                            pairs = [(c, v) for c, v in out.items() if not v.is_zero()]
                            if pairs:
                                table[a][b].extend(pairs)
    return LinearPoissonBracket(sc.field, dim, table)


def _jacobiator(b1, b2, a, bb, c):
    """sum over the cyclic triple of {{x, y}_1, z}_2 as a dict."""
    out = {}
    zero = b1.field.zero()
    for (x, y, z) in ((a, bb, c), (bb, c, a), (c, a, bb)):
        for d, v in b1.table[x][y]:
            for e, w in b2.table[d][z]:
                out[e] = out.get(e, zero) + v * w
    return out


def jacobi_residual(bracket):
    """Worst violation of the Jacobi identity over all coordinate triples."""
    res = Residual()
    dim = bracket.dim
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                out = _jacobiator(bracket, bracket, a, b, c)
                for e, v in out.items():
                    res.feed((a, b, c, e), v)
    return res


def poisson_compatibility(b1, b2):
    """Residual of the mixed Jacobi form: the Jacobi expression of the sum
    minus both pure parts, scanned over coordinate triples."""
    if b1.dim != b2.dim:
        raise ValueError("brackets live on different spaces")
    res = Residual()
    dim = b1.dim
    zero = b1.field.zero()
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                out = _jacobiator(b1, b2, a, b, c)
                for e, v in _jacobiator(b2, b1, a, b, c).items():
                    out[e] = out.get(e, zero) + v
                for e, v in out.items():
                    res.feed((a, b, c, e), v)
    return res


def check_poisson_pencil(pencil, n):
    """Jacobi for both induced brackets plus their compatibility."""
    b1 = build_bracket(pencil.star, n)
    b2 = build_bracket(pencil.circle, n)
    report = CheckReport()
    report.add("antisymmetry-1", b1.antisymmetry_residual())
    report.add("antisymmetry-2", b2.antisymmetry_residual())
    report.add("jacobi-1", jacobi_residual(b1))
    report.add("jacobi-2", jacobi_residual(b2))
    report.add("mixed", poisson_compatibility(b1, b2))
    return report
