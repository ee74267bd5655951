"""Compatibility of product pairs, R-operator deformations, and the
polynomial extension of a compatible pair to V ox F_m.

Operators on the coordinate space are plain d x d matrices whose columns are
the images of the basis vectors.
"""

from __future__ import annotations

from . import linalg
from .algebra import Pencil, StructureConstants
from .report import CheckReport, Residual


def operator_column(op, i):
    return [row[i] for row in op]


def mixed_associator_residual(a, b):
    """(x *a y) *b z + (x *b y) *a z - x *a (y *b z) - x *b (y *a z) over basis triples."""
    res = Residual()
    d = a.dim
    zero = a.field.zero()
    for i in range(d):
        for j in range(d):
            pa = a.sparse_cell(i, j)
            pb = b.sparse_cell(i, j)
            for k in range(d):
                parts = (b.compose_right(pa, k), a.compose_right(pb, k),
                         a.compose_left(i, b.sparse_cell(j, k)),
                         b.compose_left(i, a.sparse_cell(j, k)))
                keys = set()
                for part in parts:
                    keys.update(part)
                for h in keys:
                    acc = (parts[0].get(h, zero) + parts[1].get(h, zero)
                           - parts[2].get(h, zero) - parts[3].get(h, zero))
                    res.feed((i, j, k, h), acc)
    return res


def check_compatibility(pencil):
    """Both products associative and the mixed associator zero, i.e. the
    whole line of products star + lambda*circle is associative."""
    report = CheckReport()
    report.add("star", pencil.star.associator_residual())
    report.add("circle", pencil.circle.associator_residual())
    report.add("mixed", mixed_associator_residual(pencil.star, pencil.circle))
    return report


def deform_by_R(star, op):
    """Second product X o Y = R(X)*Y + X*R(Y) - R(X*Y); not verified here."""
    d = star.dim
    cols = [operator_column(op, i) for i in range(d)]
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            v1 = star._compose(cols[i], j)
            v2 = star._compose_left(i, cols[j])
            v3 = linalg.mat_vec(op, star.table[i][j])
            row.append([v1[k] + v2[k] - v3[k] for k in range(d)])
        table.append(row)
    return StructureConstants(star.field, table)


def verified_deform(star, op):
    """deform_by_R plus the associativity and compatibility scans."""
    circle = deform_by_R(star, op)
    pencil = Pencil(star, circle)
    return circle, check_compatibility(pencil)


def rs_identity_residual(op_r, op_s, star):
    """Deviation from the quadratic deformation identity tying R and S.

    Zero implies deform_by_R(star, R) is associative and compatible.
    """
    d = star.dim
    res = Residual()
    rcols = [operator_column(op_r, i) for i in range(d)]
    scols = [operator_column(op_s, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            inner = [a + b for a, b in zip(star._compose(rcols[i], j),
                                           star._compose_left(i, rcols[j]))]
            lhs = linalg.mat_vec(op_r, inner)
            cross = star.multiply(rcols[i], rcols[j])
            rr = linalg.mat_vec(op_r, linalg.mat_vec(op_r, star.table[i][j]))
            rhs = [a + b for a, b in zip(star._compose(scols[i], j),
                                         star._compose_left(i, scols[j]))]
            s3 = linalg.mat_vec(op_s, star.table[i][j])
            for k in range(d):
                res.feed((i, j, k), lhs[k] - cross[k] - rr[k] - rhs[k] + s3[k])
    return res


def rr_identity_residual(op_r, star):
    zero_op = linalg.zeros(star.field, star.dim, star.dim)
    return rs_identity_residual(op_r, zero_op, star)


def ad_operator(a_vec, star):
    """Matrix of v -> a*v - v*a."""
    d = star.dim
    cols = []
    for h in range(d):
        e = [star.field.zero()] * d
        e[h] = star.field.one()
        left = star.multiply(a_vec, e)
        right = star.multiply(e, a_vec)
        cols.append([left[k] - right[k] for k in range(d)])
    return [[cols[h][k] for h in range(d)] for k in range(d)]


def equivalent_shift(op, a_vec, star):
    """R + ad_a; leaves deform_by_R unchanged."""
    return linalg.mat_add(op, ad_operator(a_vec, star))


# -- the diagonal-idempotent example ----------------------------------------


def example_1_3(field, p_params, q_params, q0):
    """Compatible pair on the algebra of orthogonal idempotents.

    star: e_i e_j = delta_ij e_i.  circle comes from the deformation matrix
    r_ij = q_i p_j / (p_i - p_j) off the diagonal, rows summing to q0.
    """
    m = len(p_params)
    if len(q_params) != m:
        raise ValueError("p and q must have equal length")
    p = [field(v) for v in p_params]
    q = [field(v) for v in q_params]
    q0 = field(q0)
    for i in range(m):
        for j in range(i + 1, m):
            if (p[i] - p[j]).is_zero():
                raise ValueError("parameters p must be pairwise distinct")
    zero, one = field.zero(), field.one()
    r = [[zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j:
                r[i][j] = q[i] * p[j] / (p[i] - p[j])
    for i in range(m):
        acc = q0
        for k in range(m):
            if k != i:
                acc = acc - r[k][i]
        r[i][i] = acc

    star_table = [[[one if (i == j and k == i) else zero for k in range(m)]
                   for j in range(m)] for i in range(m)]
    star = StructureConstants(field, star_table, "idempotents")

    circle_table = [[[zero] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            vec = [zero] * m
            vec[j] = vec[j] + r[i][j]
            vec[i] = vec[i] + r[j][i]
            if i == j:
                for k in range(m):
                    vec[k] = vec[k] - r[i][k]
            circle_table[i][j] = vec
    circle = StructureConstants(field, circle_table)
    return Pencil(star, circle)


# -- polynomial extension ----------------------------------------------------


def _poly_eval(field, coeffs, x):
    acc = field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _extend_any(pencil, qcoeffs, m):
    """Structure constants on V ox F_m for any polynomial of degree <= m.

    Coefficient extraction goes through evaluation at 2m distinct rational
    nodes and two exact Vandermonde solves, which avoids dividing by (u - v)
    symbolically.
    """
    field = pencil.field
    d = pencil.dim
    q = [field(c) for c in qcoeffs]
    u_nodes = [field(r) for r in range(m)]
    v_nodes = [field(m + s) for s in range(m)]
    vand_u_inv = linalg.inverse(field, [[u ** a for a in range(m)] for u in u_nodes])
    vand_v_inv = linalg.inverse(field, [[v ** b for b in range(m)] for v in v_nodes])
    qu = [_poly_eval(field, q, u) for u in u_nodes]
    qv = [_poly_eval(field, q, v) for v in v_nodes]
    dm = d * m
    zero = field.zero()

    def comp(h, c):
        return h * m + c

    def w_vec(star_ij, circ_ij, x):
        powers = [field.one()]
        for _ in range(m):
            powers.append(powers[-1] * x)
        out = [zero] * dm
        for h in range(d):
            sh, ch = star_ij[h], circ_ij[h]
            for c in range(m):
                out[comp(h, c)] = sh * powers[c] + ch * powers[c + 1]
        return out

    table = [[None] * dm for _ in range(dm)]
    for i in range(d):
        for j in range(d):
            star_ij = pencil.star.table[i][j]
            circ_ij = pencil.circle.table[i][j]
            wu = [w_vec(star_ij, circ_ij, u) for u in u_nodes]
            wv = [w_vec(star_ij, circ_ij, v) for v in v_nodes]
            pvals = [[None] * m for _ in range(m)]
            for r in range(m):
                for s in range(m):
                    den = (u_nodes[r] - v_nodes[s]).inverse()
                    pvals[r][s] = [(qu[r] * wv[s][t] - qv[s] * wu[r][t]) * den
                                   for t in range(dm)]
            # interpolate in u then in v
            dvals = [[None] * m for _ in range(m)]
            for a in range(m):
                for s in range(m):
                    acc = [zero] * dm
                    for r in range(m):
                        coef = vand_u_inv[a][r]
                        if not coef.is_zero():
                            pv = pvals[r][s]
                            acc = [x + coef * y for x, y in zip(acc, pv)]
                    dvals[a][s] = acc
            for a in range(m):
                for b in range(m):
                    acc = [zero] * dm
                    for s in range(m):
                        coef = vand_v_inv[b][s]
                        if not coef.is_zero():
                            dv = dvals[a][s]
                            acc = [x + coef * y for x, y in zip(acc, dv)]
                    table[comp(i, a)][comp(j, b)] = acc
    return StructureConstants(field, table)


def extend_polynomial(pencil, qcoeffs):
    """Product on V ox F_m from a degree-m polynomial (ascending coefficients)."""
    m = len(qcoeffs) - 1
    if m < 1:
        raise ValueError("polynomial must have degree at least 1")
    if pencil.field(qcoeffs[-1]).is_zero():
        raise ValueError("leading coefficient must be nonzero")
    return _extend_any(pencil, qcoeffs, m)


def extension_family_compatible(pencil, m):
    """The m+1 products from monomials u^j, j = 0..m, are pairwise compatible."""
    field = pencil.field
    zero, one = field.zero(), field.one()
    members = []
    for j in range(m + 1):
        coeffs = [zero] * (m + 1)
        coeffs[j] = one
        members.append(_extend_any(pencil, coeffs, m))
    for sc in members:
        if not sc.is_associative():
            return False
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if not mixed_associator_residual(members[a], members[b]).zero:
                return False
    return True


def extension_decompose_check(pencil, roots):
    """Evaluation at the distinct roots of q splits the extension into
    annihilating components, the i-th carrying the product star + b_i circle."""
    field = pencil.field
    d = pencil.dim
    m = len(roots)
    bs = [field(b) for b in roots]
    for i in range(m):
        for j in range(i + 1, m):
            if (bs[i] - bs[j]).is_zero():
                raise ValueError("roots must be pairwise distinct")
    # q(u) = prod (u - b_i), ascending coefficients
    qcoeffs = [field.one()]
    for b in bs:
        qcoeffs = [field.zero()] + qcoeffs
        for t in range(len(qcoeffs) - 1):
            qcoeffs[t] = qcoeffs[t] - b * qcoeffs[t + 1]
    ext = _extend_any(pencil, qcoeffs, m)
    dm = d * m

    def qprime(b):
        acc = field.zero()
        for a in range(1, m + 1):
            acc = acc + field(a) * qcoeffs[a] * b ** (a - 1)
        return acc

    # evaluation images, scaled so the component product is star + b circle
    eval_basis = []
    for b in bs:
        scale = qprime(b).inverse()
        vecs = []
        for h in range(d):
            v = [field.zero()] * dm
            for a in range(m):
                v[h * m + a] = scale * b ** a
            vecs.append(v)
        eval_basis.append(vecs)

    for i in range(m):
        for j in range(m):
            for s in range(d):
                for t in range(d):
                    prod = ext.multiply(eval_basis[i][s], eval_basis[j][t])
                    if i != j:
                        if not all(x.is_zero() for x in prod):
                            return False
                    else:
                        coords = linalg.in_span(field, eval_basis[i], prod)
                        if coords is None:
                            return False
                        star_v = pencil.star.table[s][t]
                        circ_v = pencil.circle.table[s][t]
                        for h in range(d):
                            if not (coords[h] - star_v[h] - bs[i] * circ_v[h]).is_zero():
                                return False
    return True


# -- recognizing Mat_2 deformations ------------------------------------------


def _solve_commutator_factor(field, images, n=2):
    """Find (M, alpha) with images[h] @ M = alpha E_h - E_h alpha for all h,
    M invertible.  Returns (M, alpha) or None."""
    d = n * n
    # unknowns: M (d), alpha (d)
    rows = []
    for h in range(d):
        eh = [[field.zero()] * n for _ in range(n)]
        eh[h // n][h % n] = field.one()
        fmat = [[images[h][r * n + c] for c in range(n)] for r in range(n)]
        for r in range(n):
            for c in range(n):
                row = [field.zero()] * (2 * d)
                # (F M)_{rc} = sum_s F[r][s] M[s][c]
                for s in range(n):
                    row[s * n + c] = fmat[r][s]
                # -(alpha E_h - E_h alpha)_{rc}
                for s in range(n):
                    # (alpha E_h)_{rc} = sum_s alpha[r][s] E_h[s][c]
                    row[d + r * n + s] = row[d + r * n + s] - eh[s][c]
                    # (E_h alpha)_{rc} = sum_s E_h[r][s] alpha[s][c]
                    row[d + s * n + c] = row[d + s * n + c] + eh[r][s]
                rows.append(row)
    basis = linalg.nullspace(field, rows)
    if not basis:
        return None
    # look for a combination with invertible M; single vectors first
    candidates = list(basis)
    if len(basis) > 1:
        acc = basis[0]
        for extra in basis[1:]:
            acc = [x + y for x, y in zip(acc, extra)]
            candidates.append(list(acc))
    for vec in candidates:
        mmat = [[vec[r * n + c] for c in range(n)] for r in range(n)]
        amat = [[vec[d + r * n + c] for c in range(n)] for r in range(n)]
        try:
            linalg.inverse(field, mmat)
        except ZeroDivisionError:
            continue
        return mmat, amat
    return None


def reconstruct_mat2_deformation(circle, star, _allow_shift=True):
    """Try to exhibit a given compatible product on Mat_2 as one of the two
    catalogued deformation families (inner multiplication X a Y, or the
    commutator-factor product (aX-Xa)(bY-Yb)), possibly after subtracting a
    multiple of the first product (a reparametrization of the line of
    products, read off 1 o 1).

    Returns {"family": ..., ...} or None.  Absence of a match is information,
    not an error: the completeness of the two families is a conjecture this
    library probes rather than assumes.
    """
    field = star.field
    n = 2
    d = n * n
    unity = star.find_unity()
    a_vec = circle.multiply(unity, unity)
    # family "inner": X o Y = X a Y
    ok = True
    for i in range(d):
        for j in range(d):
            ei = [field.one() if h == i else field.zero() for h in range(d)]
            ej = [field.one() if h == j else field.zero() for h in range(d)]
            cand = star.multiply(star.multiply(ei, a_vec), ej)
            got = circle.table[i][j]
            if not all((x - y).is_zero() for x, y in zip(cand, got)):
                ok = False
                break
        if not ok:
            break
    if ok:
        return {"family": "inner", "a": a_vec}

    # family "commutator": T(X, Y) = (aX - Xa)(bY - Yb)
    def as_mat(vec):
        return [[vec[r * n + c] for c in range(n)] for r in range(n)]

    def as_vec(mat):
        return [mat[r][c] for r in range(n) for c in range(n)]

    for y0 in range(d):
        ey = [field.one() if h == y0 else field.zero() for h in range(d)]
        images = []
        for h in range(d):
            eh = [field.one() if g == h else field.zero() for g in range(d)]
            images.append(circle.multiply(eh, ey))
        if all(all(x.is_zero() for x in img) for img in images):
            continue
        got = _solve_commutator_factor(field, images)
        if got is None:
            continue
        _, amat = got
        # recover b from G(Y) = F(X0)^-1 T(X0, Y) for an X0 with F(X0) invertible
        for x0 in range(d):
            ex = [field.one() if g == x0 else field.zero() for g in range(d)]
            xm = as_mat(ex)
            fmat = linalg.mat_sub(linalg.mat_mul(amat, xm), linalg.mat_mul(xm, amat))
            try:
                finv = linalg.inverse(field, fmat)
            except ZeroDivisionError:
                continue
            rows, rhs = [], []
            for h in range(d):
                eh = [field.one() if g == h else field.zero() for g in range(d)]
                gmat = linalg.mat_mul(finv, as_mat(circle.multiply(ex, eh)))
                ehm = as_mat(eh)
                for r in range(n):
                    for c in range(n):
                        row = [field.zero()] * d
                        for s in range(n):
                            row[r * n + s] = row[r * n + s] + ehm[s][c]
                            row[s * n + c] = row[s * n + c] - ehm[r][s]
                        rows.append(row)
                        rhs.append(gmat[r][c])
            bsol = linalg.solve(field, rows, rhs)
            if bsol is None:
                continue
            bmat = as_mat(bsol)
            # full verification
            match = True
            for i in range(d):
                im = as_mat([field.one() if g == i else field.zero() for g in range(d)])
                fm = linalg.mat_sub(linalg.mat_mul(amat, im), linalg.mat_mul(im, amat))
                for j in range(d):
                    jm = as_mat([field.one() if g == j else field.zero() for g in range(d)])
                    gm = linalg.mat_sub(linalg.mat_mul(bmat, jm), linalg.mat_mul(jm, bmat))
                    want = as_vec(linalg.mat_mul(fm, gm))
                    gotv = circle.table[i][j]
                    if not all((x - y).is_zero() for x, y in zip(want, gotv)):
                        match = False
                        break
                if not match:
                    break
            if match:
                return {"family": "commutator", "a": as_vec(amat), "b": as_vec(bmat)}

    # 1 o 1 being a scalar matrix signals a star-multiple offset on top of a
    # commutator-family product; strip it and retry once
    if _allow_shift:
        kappa = a_vec[0]
        scalar_unity = all((a_vec[h] - kappa * unity[h]).is_zero() for h in range(d))
        if scalar_unity and not kappa.is_zero():
            table = [[[circle.table[i][j][h] - kappa * star.table[i][j][h]
                       for h in range(d)] for j in range(d)] for i in range(d)]
            shifted = StructureConstants(field, table)
            found = reconstruct_mat2_deformation(shifted, star, _allow_shift=False)
            if found is not None:
                found["star_multiple"] = kappa
                return found
    return None
