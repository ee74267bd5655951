"""Operators on Mat_n in split form R(x) = sum_i a_i x b^i + c x, their
minimal presentations, the induced second product, and the tensor identities
that make that product associative.
"""

from __future__ import annotations

from . import linalg
from .algebra import StructureConstants
from .report import CheckReport, Residual


class RPresentation:
    def __init__(self, n, a_mats, b_mats, c_mat, field=None):
        self.n = n
        self.a = list(a_mats)
        self.b = list(b_mats)
        self.c = c_mat
        if field is None:
            field = c_mat[0][0].field
        self.field = field
        if len(self.a) != len(self.b):
            raise ValueError("need equally many a and b matrices")

    @property
    def p(self):
        return len(self.a)

    def apply(self, x):
        """R(x) = sum a_i x b^i + c x."""
        if len(x) != self.n:
            raise ValueError("matrix size mismatch")
        out = linalg.mat_mul(self.c, x)
        for am, bm in zip(self.a, self.b):
            out = linalg.mat_add(out, linalg.mat_mul(am, linalg.mat_mul(x, bm)))
        return out

    def dense_operator(self):
        """n^2 x n^2 matrix acting on row-major vectorized x."""
        n = self.n
        d = n * n
        cols = []
        for h in range(d):
            x = [[self.field.zero()] * n for _ in range(n)]
            x[h // n][h % n] = self.field.one()
            img = self.apply(x)
            cols.append([img[r][c] for r in range(n) for c in range(n)])
        return [[cols[h][k] for h in range(d)] for k in range(d)]

    def __repr__(self):
        return "<RPresentation n=%d p=%d>" % (self.n, self.p)


def r_apply(pres, x):
    return pres.apply(x)


def second_product(pres):
    """Structure constants of x o y = a_i x b^i y + x a_i y b^i - a_i x y b^i + x c y.

    Expanded on matrix units: for x = E(r1,c1), y = E(r2,c2) each term is a
    rank-one update, so the table costs O(d^2 p n) instead of d^2 matrix
    products."""
    n = pres.n
    d = n * n
    field = pres.field
    zero = field.zero()
    table = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for r1 in range(n):
        for c1 in range(n):
            i = r1 * n + c1
            for r2 in range(n):
                for c2 in range(n):
                    j = r2 * n + c2
                    vec = table[i][j]
                    # x c y contributes c[c1][r2] at E(r1, c2)
                    vec[r1 * n + c2] = vec[r1 * n + c2] + pres.c[c1][r2]
                    for am, bm in zip(pres.a, pres.b):
                        coef = bm[c1][r2]
                        if not coef.is_zero():
                            for u in range(n):
                                if not am[u][r1].is_zero():
                                    vec[u * n + c2] = (vec[u * n + c2]
                                                       + am[u][r1] * coef)
                        coef = am[c1][r2]
                        if not coef.is_zero():
                            for v in range(n):
                                if not bm[c2][v].is_zero():
                                    vec[r1 * n + v] = (vec[r1 * n + v]
                                                       + coef * bm[c2][v])
                        if c1 == r2:
                            for u in range(n):
                                au = am[u][r1]
                                if au.is_zero():
                                    continue
                                for v in range(n):
                                    if not bm[c2][v].is_zero():
                                        vec[u * n + v] = (vec[u * n + v]
                                                          - au * bm[c2][v])
    return StructureConstants(field, table, "second-product")


def check_independence(mats, include_unity=False, field=None, n=None):
    """Rank test on vectorized matrices; returns (independent, witness).

    The witness is a dependency coefficient vector (unity coefficient last
    when included)."""
    if not mats and not include_unity:
        return True, None
    if field is None:
        field = mats[0][0][0].field
    if n is None and mats:
        n = len(mats[0])
    vecs = [[m[r][c] for r in range(len(m)) for c in range(len(m))] for m in mats]
    if include_unity:
        if n is None:
            raise ValueError("cannot infer the matrix size for the unity")
        eye = linalg.identity(field, n)
        vecs.append([eye[r][c] for r in range(n) for c in range(n)])
    a = linalg.transpose(vecs)
    basis = linalg.nullspace(field, a)
    if not basis:
        return True, None
    return False, basis[0]


class MTensors:
    """Coefficient tensors (phi, mu, psi, lam, t) of a length-p presentation.

    phi[i][j][k]: coefficient of a_k in a_i a_j; mu[i][j] the unity part.
    psi[i][j][k]: coefficient of b^k in b^i b^j; lam[i][j] the unity part.
    t[i][j]: unity part of b^i a_j (the c part being delta_ij).
    """

    def __init__(self, field, phi, mu, psi, lam, t):
        self.field = field
        self.phi = phi
        self.mu = mu
        self.psi = psi
        self.lam = lam
        self.t = t

    @property
    def p(self):
        return len(self.phi)

    @classmethod
    def zeros(cls, field, p):
        z = field.zero()
        phi = [[[z] * p for _ in range(p)] for _ in range(p)]
        psi = [[[z] * p for _ in range(p)] for _ in range(p)]
        mu = [[z] * p for _ in range(p)]
        lam = [[z] * p for _ in range(p)]
        t = [[z] * p for _ in range(p)]
        return cls(field, phi, mu, psi, lam, t)


def _span_solve(field, base_vecs, target):
    coords = linalg.in_span(field, base_vecs, target)
    return coords


def extract_m_tensors(pres, auto_minimize=True):
    """Recover (phi, mu, psi, lam, t) from a presentation; the products
    a_i a_j must close in span{1, a_k} and likewise for b.

    Returns (MTensors, CheckReport); the report carries the closure residual
    of the two c-product identities for the presentation's own c.
    """
    field = pres.field
    n = pres.n
    ind_a, _ = check_independence(pres.a, include_unity=True, field=field, n=n)
    ind_b, _ = check_independence(pres.b, include_unity=True, field=field, n=n)
    if not (ind_a and ind_b):
        if not auto_minimize:
            raise ValueError("presentation is not minimal; pass it through "
                             "minimize_presentation first")
        pres = minimize_presentation(pres.dense_operator(), n, field)
        return extract_m_tensors(pres, auto_minimize=False)

    p = pres.p
    tensors = MTensors.zeros(field, p)
    eye = linalg.identity(field, n)

    def vec(m):
        return [m[r][c] for r in range(n) for c in range(n)]

    a_span = [vec(eye)] + [vec(m) for m in pres.a]
    b_span = [vec(eye)] + [vec(m) for m in pres.b]

    for i in range(p):
        for j in range(p):
            coords = _span_solve(field, a_span, vec(linalg.mat_mul(pres.a[i], pres.a[j])))
            if coords is None:
                raise ValueError(
                    "not a closed presentation: a_%d a_%d leaves span{1, a}" % (i + 1, j + 1))
            tensors.mu[i][j] = coords[0]
            for k in range(p):
                tensors.phi[i][j][k] = coords[k + 1]
            coords = _span_solve(field, b_span, vec(linalg.mat_mul(pres.b[i], pres.b[j])))
            if coords is None:
                raise ValueError(
                    "not a closed presentation: b^%d b^%d leaves span{1, b}" % (i + 1, j + 1))
            tensors.lam[i][j] = coords[0]
            for k in range(p):
                tensors.psi[i][j][k] = coords[k + 1]

    # mixed products b^i a_j = psi_j^{k,i} a_k + phi^i_{j,k} b^k + t 1 + delta c
    report = CheckReport()
    mixed = Residual()
    cvec = vec(pres.c)
    for i in range(p):
        for j in range(p):
            rho = vec(linalg.mat_mul(pres.b[i], pres.a[j]))
            for k in range(p):
                coef_a = tensors.psi[k][i][j]
                coef_b = tensors.phi[j][k][i]
                av, bv = a_span[k + 1], b_span[k + 1]
                rho = [x - coef_a * y - coef_b * z for x, y, z in zip(rho, av, bv)]
            if i == j:
                rho = [x - y for x, y in zip(rho, cvec)]
            # what is left must be a multiple of the unity
            coords = _span_solve(field, [a_span[0]], rho)
            if coords is None:
                mixed.feed(("mixed", i + 1, j + 1), field.one())
                continue
            tensors.t[i][j] = coords[0]
    report.add("mixed-closure", mixed)

    # the two c-product identities determine c up to nothing once t is fixed
    c_res = Residual()
    for i in range(p):
        lhs = vec(linalg.mat_mul(pres.b[i], pres.c))
        want = [field.zero()] * (n * n)
        for k in range(p):
            coef_a = tensors.lam[k][i]
            coef_b = tensors.t[i][k]
            for h in range(n * n):
                want[h] = want[h] + coef_a * a_span[k + 1][h] - coef_b * b_span[k + 1][h]
        for k in range(p):
            for l in range(p):
                phi_ikl = tensors.phi[k][l][i]
                if phi_ikl.is_zero():
                    continue
                for s in range(p):
                    psv = tensors.psi[l][k][s]
                    if not psv.is_zero():
                        for h in range(n * n):
                            want[h] = want[h] - phi_ikl * psv * b_span[s + 1][h]
                lam_lk = tensors.lam[l][k]
                if not lam_lk.is_zero():
                    for h in range(n * n):
                        want[h] = want[h] - phi_ikl * lam_lk * a_span[0][h]
        for h in range(n * n):
            c_res.feed(("b.c", i + 1, h), lhs[h] - want[h])
    for j in range(p):
        lhs = vec(linalg.mat_mul(pres.c, pres.a[j]))
        want = [field.zero()] * (n * n)
        for k in range(p):
            coef_b = tensors.mu[j][k]
            coef_a = tensors.t[k][j]
            for h in range(n * n):
                want[h] = want[h] + coef_b * b_span[k + 1][h] - coef_a * a_span[k + 1][h]
        for k in range(p):
            for l in range(p):
                for s in range(p):
                    phi_skl = tensors.phi[k][l][s]
                    psv = tensors.psi[l][k][j]
                    if not (phi_skl.is_zero() or psv.is_zero()):
                        for h in range(n * n):
                            want[h] = want[h] - phi_skl * psv * a_span[s + 1][h]
                mu_kl = tensors.mu[k][l]
                psv = tensors.psi[l][k][j]
                if not (mu_kl.is_zero() or psv.is_zero()):
                    for h in range(n * n):
                        want[h] = want[h] - mu_kl * psv * a_span[0][h]
        for h in range(n * n):
            c_res.feed(("c.a", j + 1, h), lhs[h] - want[h])
    report.add("c-products", c_res)
    return tensors, report


def minimize_presentation(dense_op, n, field=None):
    """Split a dense operator on Mat_n into the canonical minimal form.

    Reshuffles the n^2 x n^2 matrix into middle form, projects away the
    x -> c x and x -> x d parts (the latter is traded for a c term using the
    inner-derivation freedom), and rank-factorizes the remainder.
    """
    d = n * n
    if field is None:
        field = dense_op[0][0].field
    # middle form M[(u,s)][(t,v)] = dense[(u,v)][(s,t)]
    mid = [[None] * d for _ in range(d)]
    for u in range(n):
        for s in range(n):
            for t in range(n):
                for v in range(n):
                    mid[u * n + s][t * n + v] = dense_op[u * n + v][s * n + t]
    w = [field.one() if h // n == h % n else field.zero() for h in range(d)]
    ninv = field(1) / field(n)

    mw = linalg.mat_vec(mid, w)
    mtw = linalg.mat_vec(linalg.transpose(mid), w)
    gamma = sum((wv * mwv for wv, mwv in zip(w, mw)), field.zero()) * ninv * ninv
    cbar = [mv * ninv - gamma * wv for mv, wv in zip(mw, w)]
    dbar = [mv * ninv - gamma * wv for mv, wv in zip(mtw, w)]
    resid = [[mid[r][c] - cbar[r] * w[c] - w[r] * dbar[c] - gamma * w[r] * w[c]
              for c in range(d)] for r in range(d)]

    # exact rank factorization: pivot columns and their coordinates
    echelon = [list(row) for row in resid]
    pivots = linalg._forward_eliminate(field, echelon)
    p = len(pivots)
    a_mats, b_mats = [], []
    for idx in range(p):
        col = pivots[idx]
        fvec = [resid[r][col] for r in range(d)]
        gvec = echelon[idx]
        a_mats.append([[fvec[r * n + c] for c in range(n)] for r in range(n)])
        b_mats.append([[gvec[r * n + c] for c in range(n)] for r in range(n)])
    cfull = [cb + db + gamma * wv for cb, db, wv in zip(cbar, dbar, w)]
    c_mat = [[cfull[r * n + c] for c in range(n)] for r in range(n)]
    return RPresentation(n, a_mats, b_mats, c_mat, field)


def verify_tensor_identities(tensors):
    """Residuals of the seven tensor identity families equivalent to
    associativity of the induced second product."""
    f = tensors.field
    p = tensors.p
    phi, mu, psi, lam, t = tensors.phi, tensors.mu, tensors.psi, tensors.lam, tensors.t
    report = CheckReport()

    def d(i, j):
        return f.one() if i == j else f.zero()

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                for l in range(p):
                    acc = mu[j][k] * d(i, l) - d(i, j) * mu[k][l]
                    for s in range(p):
                        acc = acc + phi[j][k][s] * phi[s][l][i] - phi[j][s][i] * phi[k][l][s]
                    res.feed((i, j, k, l), acc)
    report.add("aa-assoc", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                acc = f.zero()
                for s in range(p):
                    acc = acc + phi[j][k][s] * mu[i][s] - phi[i][j][s] * mu[s][k]
                res.feed((i, j, k), acc)
    report.add("aa-scalar", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                for l in range(p):
                    acc = d(k, l) * lam[i][j] - d(i, l) * lam[j][k]
                    for s in range(p):
                        acc = acc + psi[i][j][s] * psi[s][k][l] - psi[j][k][s] * psi[i][s][l]
                    res.feed((i, j, k, l), acc)
    report.add("bb-assoc", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                acc = f.zero()
                for s in range(p):
                    acc = acc + psi[i][j][s] * lam[s][k] - psi[j][k][s] * lam[i][s]
                res.feed((i, j, k), acc)
    report.add("bb-scalar", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                for l in range(p):
                    acc = -d(l, k) * t[i][j] + d(i, j) * t[l][k]
                    for s in range(p):
                        acc = (acc + phi[j][k][s] * psi[l][i][s]
                               - phi[s][k][l] * psi[s][i][j]
                               - phi[j][s][i] * psi[l][s][k])
                        if i == j:
                            for r in range(p):
                                acc = acc + phi[s][r][l] * psi[r][s][k]
                    res.feed((i, j, k, l), acc)
    report.add("ba-mixed", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                acc = f.zero()
                for s in range(p):
                    acc = (acc + phi[j][k][s] * t[i][s] - psi[s][i][j] * mu[s][k]
                           - phi[j][s][i] * t[s][k])
                    if i == j:
                        for r in range(p):
                            acc = acc + psi[s][r][k] * mu[r][s]
                res.feed((i, j, k), acc)
    report.add("at-mixed", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                acc = f.zero()
                for s in range(p):
                    acc = (acc + psi[k][i][s] * t[s][j] - phi[j][s][i] * lam[k][s]
                           - psi[s][i][j] * t[k][s])
                    if i == j:
                        for r in range(p):
                            acc = acc + phi[s][r][k] * lam[r][s]
                res.feed((i, j, k), acc)
    report.add("bt-mixed", res)
    return report


def s_operator(pres, tensors):
    """The quadratic correction S(x) = mu_ji (b^i x b^j - psi^{i,j}_k x b^k
    - lam^{ij} x), as a dense operator on Mat_n."""
    n = pres.n
    d = n * n
    field = pres.field

    def op_left(m):
        out = linalg.zeros(field, d, d)
        for r in range(n):
            for s in range(n):
                if m[r][s].is_zero():
                    continue
                for c in range(n):
                    out[r * n + c][s * n + c] = out[r * n + c][s * n + c] + m[r][s]
        return out

    def op_right(m):
        out = linalg.zeros(field, d, d)
        for s in range(n):
            for c in range(n):
                if m[s][c].is_zero():
                    continue
                for r in range(n):
                    out[r * n + c][r * n + s] = out[r * n + c][r * n + s] + m[s][c]
        return out

    acc = linalg.zeros(field, d, d)
    eye_op = linalg.identity(field, d)
    for i in range(pres.p):
        for j in range(pres.p):
            coef = tensors.mu[j][i]
            if coef.is_zero():
                continue
            term = linalg.mat_mul(op_left(pres.b[i]), op_right(pres.b[j]))
            for k in range(pres.p):
                psv = tensors.psi[i][j][k]
                if not psv.is_zero():
                    term = linalg.mat_sub(term, linalg.mat_scale(psv, op_right(pres.b[k])))
            lamv = tensors.lam[i][j]
            if not lamv.is_zero():
                term = linalg.mat_sub(term, linalg.mat_scale(lamv, eye_op))
            acc = linalg.mat_add(acc, linalg.mat_scale(coef, term))
    return acc
