"""Presentations of the single-block structures underlying deformations of
Mat_n, and their normal-form algebra.

The algebra is generated by A_1..A_p, B^1..B^p; products reduce onto the
spanning set {1, A_i, B^j, A_i B^j} times powers of the central element K.
The auxiliary generator C is eliminated as C = K - A_i B^i throughout, so
normal forms are elements of a free module over the polynomial ring in K.
"""

from __future__ import annotations

from . import linalg
from .algebra import StructureConstants, adjoin_unity, matrix_algebra
from .matops import MTensors, RPresentation, check_independence, second_product
from .pencil import mixed_associator_residual
from .report import CheckReport, Residual
from .scalars import CyclotomicField, primitive_root

UNIT = "1"
GEN_A = "A"
GEN_B = "B"
GEN_AB = "AB"


class UElement:
    """Normal-form element: finite scalar combination of basis monomials
    (kind, i, j) * K^s."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms=None):
        self.pres = pres
        self.terms = terms or {}

    def _tidy(self):
        dead = [k for k, v in self.terms.items() if v.is_zero()]
        for k in dead:
            del self.terms[k]
        return self

    def add_term(self, key, coef):
        if key in self.terms:
            self.terms[key] = self.terms[key] + coef
        else:
            self.terms[key] = coef

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return UElement(self.pres, out)._tidy()

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] - v if k in out else -v
        return UElement(self.pres, out)._tidy()

    def scale(self, coef):
        return UElement(self.pres, {k: coef * v for k, v in self.terms.items()})._tidy()

    def __mul__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self.pres.u_multiply(self, other)

    def shift_k(self, s):
        return UElement(self.pres, {(kind, i, j, kk + s): v
                                    for (kind, i, j, kk), v in self.terms.items()})

    def is_zero(self):
        return all(v.is_zero() for v in self.terms.values())

    def k_degree(self):
        return max((k[3] for k in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "UElement(0)"
        bits = []
        for (kind, i, j, s), v in sorted(self.terms.items()):
            name = {UNIT: "1", GEN_A: "A%d" % (i + 1), GEN_B: "B%d" % (j + 1),
                    GEN_AB: "A%dB%d" % (i + 1, j + 1)}[kind]
            if s:
                name += "*K^%d" % s
            bits.append("(%s)%s" % (v, name))
        return " + ".join(bits)


class MPresentation:
    """Tensor data (phi, mu, psi, lam, t) with the normal-form machinery."""

    def __init__(self, tensors, label=None):
        self.tensors = tensors
        self.field = tensors.field
        self.p = tensors.p
        self.label = label
        self._cache = {}

    # -- element constructors ------------------------------------------

    def unit(self, s=0):
        return UElement(self, {(UNIT, -1, -1, s): self.field.one()})

    def gen_a(self, i, s=0):
        return UElement(self, {(GEN_A, i, -1, s): self.field.one()})

    def gen_b(self, j, s=0):
        return UElement(self, {(GEN_B, -1, j, s): self.field.one()})

    def gen_ab(self, i, j, s=0):
        return UElement(self, {(GEN_AB, i, j, s): self.field.one()})

    def c_element(self):
        """C = K - A_i B^i."""
        terms = {(UNIT, -1, -1, 1): self.field.one()}
        for s in range(self.p):
            terms[(GEN_AB, s, s, 0)] = -self.field.one()
        return UElement(self, terms)

    def basis_monomials(self):
        yield (UNIT, -1, -1)
        for i in range(self.p):
            yield (GEN_A, i, -1)
        for j in range(self.p):
            yield (GEN_B, -1, j)
        for i in range(self.p):
            for j in range(self.p):
                yield (GEN_AB, i, j)

    def gauge_tensors(self):
        """Derived coefficients of the two eliminated product rules:
        p^i and q_i are the unity parts of B^i C and C A_i, u^j_i the
        B-coefficients; all are forced by centrality of K."""
        t = self.tensors
        p = self.p
        zero = self.field.zero()
        p_vec = [zero] * p
        q_vec = [zero] * p
        u_mat = [[zero] * p for _ in range(p)]
        for i in range(p):
            for k in range(p):
                for l in range(p):
                    p_vec[i] = p_vec[i] - t.phi[k][l][i] * t.lam[l][k]
                    q_vec[i] = q_vec[i] - t.psi[k][l][i] * t.mu[l][k]
        for i in range(p):
            for j in range(p):
                acc = -t.t[j][i]
                for k in range(p):
                    for l in range(p):
                        acc = acc - t.phi[k][l][j] * t.psi[l][k][i]
                u_mat[i][j] = acc
        return p_vec, q_vec, u_mat

    # -- reduction rules -------------------------------------------------

    def _prod_aa(self, i, j):
        t = self.tensors
        out = UElement(self)
        for k in range(self.p):
            c = t.phi[i][j][k]
            if not c.is_zero():
                out.add_term((GEN_A, k, -1, 0), c)
        if not t.mu[i][j].is_zero():
            out.add_term((UNIT, -1, -1, 0), t.mu[i][j])
        return out

    def _prod_bb(self, i, j):
        t = self.tensors
        out = UElement(self)
        for k in range(self.p):
            c = t.psi[i][j][k]
            if not c.is_zero():
                out.add_term((GEN_B, -1, k, 0), c)
        if not t.lam[i][j].is_zero():
            out.add_term((UNIT, -1, -1, 0), t.lam[i][j])
        return out

    def _prod_ba(self, i, j):
        t = self.tensors
        out = UElement(self)
        for k in range(self.p):
            c = t.psi[k][i][j]
            if not c.is_zero():
                out.add_term((GEN_A, k, -1, 0), c)
            c = t.phi[j][k][i]
            if not c.is_zero():
                out.add_term((GEN_B, -1, k, 0), c)
        if not t.t[i][j].is_zero():
            out.add_term((UNIT, -1, -1, 0), t.t[i][j])
        if i == j:
            out.add_term((UNIT, -1, -1, 1), self.field.one())
            for s in range(self.p):
                out.add_term((GEN_AB, s, s, 0), -self.field.one())
        return out

    def _left_a(self, i, elem):
        """A_i * elem for elem in normal form."""
        t = self.tensors
        out = UElement(self)
        for (kind, a, b, s), coef in elem.terms.items():
            if kind == UNIT:
                out.add_term((GEN_A, i, -1, s), coef)
            elif kind == GEN_A:
                inner = self._prod_aa(i, a)
                for (k2, a2, b2, s2), c2 in inner.terms.items():
                    out.add_term((k2, a2, b2, s2 + s), coef * c2)
            elif kind == GEN_B:
                out.add_term((GEN_AB, i, b, s), coef)
            else:  # A_i (A_a B^b) = (A_i A_a) B^b
                for k in range(self.p):
                    c = t.phi[i][a][k]
                    if not c.is_zero():
                        out.add_term((GEN_AB, k, b, s), coef * c)
                if not t.mu[i][a].is_zero():
                    out.add_term((GEN_B, -1, b, s), coef * t.mu[i][a])
        return out._tidy()

    def _right_b(self, elem, j):
        """elem * B^j."""
        t = self.tensors
        out = UElement(self)
        for (kind, a, b, s), coef in elem.terms.items():
            if kind == UNIT:
                out.add_term((GEN_B, -1, j, s), coef)
            elif kind == GEN_A:
                out.add_term((GEN_AB, a, j, s), coef)
            elif kind == GEN_B:
                inner = self._prod_bb(b, j)
                for (k2, a2, b2, s2), c2 in inner.terms.items():
                    out.add_term((k2, a2, b2, s2 + s), coef * c2)
            else:  # (A_a B^b) B^j = A_a (B^b B^j)
                for k in range(self.p):
                    c = t.psi[b][j][k]
                    if not c.is_zero():
                        out.add_term((GEN_AB, a, k, s), coef * c)
                if not t.lam[b][j].is_zero():
                    out.add_term((GEN_A, a, -1, s), coef * t.lam[b][j])
        return out._tidy()

    def _mono_mul(self, m1, m2):
        key = (m1, m2)
        got = self._cache.get(key)
        if got is not None:
            return got
        k1, i1, j1 = m1
        k2, i2, j2 = m2
        if k1 == UNIT:
            out = UElement(self, {(k2, i2, j2, 0): self.field.one()})
        elif k2 == UNIT:
            out = UElement(self, {(k1, i1, j1, 0): self.field.one()})
        elif k1 == GEN_A:
            if k2 == GEN_A:
                out = self._prod_aa(i1, i2)
            elif k2 == GEN_B:
                out = UElement(self, {(GEN_AB, i1, j2, 0): self.field.one()})
            else:
                out = self._left_a(i1, UElement(self, {(GEN_AB, i2, j2, 0): self.field.one()}))
        elif k1 == GEN_B:
            if k2 == GEN_A:
                out = self._prod_ba(j1, i2)
            elif k2 == GEN_B:
                out = self._prod_bb(j1, j2)
            else:
                out = self._right_b(self._prod_ba(j1, i2), j2)
        else:  # GEN_AB: A_{i1} B^{j1} * ...
            if k2 == GEN_A:
                out = self._left_a(i1, self._prod_ba(j1, i2))
            elif k2 == GEN_B:
                out = self._right_b(UElement(self, {(GEN_AB, i1, j1, 0): self.field.one()}), j2)
            else:
                out = self._right_b(self._left_a(i1, self._prod_ba(j1, i2)), j2)
        self._cache[key] = out
        return out

    def u_multiply(self, x, y):
        out = UElement(self)
        for (k1, i1, j1, s1), c1 in x.terms.items():
            for (k2, i2, j2, s2), c2 in y.terms.items():
                coef = c1 * c2
                if coef.is_zero():
                    continue
                base = self._mono_mul((k1, i1, j1), (k2, i2, j2))
                shift = s1 + s2
                for (kk, aa, bb, ss), cc in base.terms.items():
                    out.add_term((kk, aa, bb, ss + shift), coef * cc)
        return out._tidy()

    def __repr__(self):
        tag = " %s" % self.label if self.label else ""
        return "<MPresentation%s p=%d>" % (tag, self.p)


def u_multiply(x, y, pres=None):
    pres = pres or x.pres
    return pres.u_multiply(x, y)


def check_K_central(pres):
    """Residual separating genuine structures from merely weak ones.

    The eliminated-C product rules make the commutators of K with the
    generators vanish formally (they are how the C-products were fixed), so
    the content of centrality sits in the product rules that emit K: the
    normal-form associators of the (B, A, A) and (B, B, A) generator triples.
    Both algebras being associative is assumed, not re-checked here."""
    p = pres.p
    report = CheckReport()

    res = Residual()
    for i in range(p):
        bi = pres.gen_b(i)
        for j in range(p):
            ba = pres.u_multiply(bi, pres.gen_a(j))
            for k in range(p):
                ak = pres.gen_a(k)
                diff = pres.u_multiply(ba, ak) - pres.u_multiply(
                    bi, pres.u_multiply(pres.gen_a(j), ak))
                for key, v in diff.terms.items():
                    res.feed((i + 1, j + 1, k + 1) + key, v)
    report.add("baa-assoc", res)

    res = Residual()
    for i in range(p):
        bi = pres.gen_b(i)
        for j in range(p):
            bb = pres.u_multiply(bi, pres.gen_b(j))
            for k in range(p):
                ak = pres.gen_a(k)
                diff = pres.u_multiply(bb, ak) - pres.u_multiply(
                    bi, pres.u_multiply(pres.gen_b(j), ak))
                for key, v in diff.terms.items():
                    res.feed((i + 1, j + 1, k + 1) + key, v)
    report.add("bba-assoc", res)
    return report


def validate_representation(pres, rep):
    """Check that matrices satisfy every defining relation of the
    presentation, are non-degenerate, and that the induced second product is
    associative and compatible with the matrix product."""
    t = pres.tensors
    field = pres.field
    p = pres.p
    n = rep.n
    report = CheckReport()
    eye = linalg.identity(field, n)

    def vec(m):
        return [m[r][c] for r in range(n) for c in range(n)]

    def feed_mat(res, tag, got, want):
        gv, wv = vec(got), vec(want)
        for h in range(n * n):
            res.feed(tag + (h,), gv[h] - wv[h])

    res = Residual()
    for i in range(p):
        for j in range(p):
            want = linalg.mat_scale(t.mu[i][j], eye)
            for k in range(p):
                want = linalg.mat_add(want, linalg.mat_scale(t.phi[i][j][k], rep.a[k]))
            feed_mat(res, ("aa", i + 1, j + 1), linalg.mat_mul(rep.a[i], rep.a[j]), want)
            want = linalg.mat_scale(t.lam[i][j], eye)
            for k in range(p):
                want = linalg.mat_add(want, linalg.mat_scale(t.psi[i][j][k], rep.b[k]))
            feed_mat(res, ("bb", i + 1, j + 1), linalg.mat_mul(rep.b[i], rep.b[j]), want)
    report.add("products", res)

    res = Residual()
    for i in range(p):
        for j in range(p):
            want = linalg.mat_scale(t.t[i][j], eye)
            if i == j:
                want = linalg.mat_add(want, rep.c)
            for k in range(p):
                want = linalg.mat_add(want, linalg.mat_scale(t.psi[k][i][j], rep.a[k]))
                want = linalg.mat_add(want, linalg.mat_scale(t.phi[j][k][i], rep.b[k]))
            feed_mat(res, ("ba", i + 1, j + 1), linalg.mat_mul(rep.b[i], rep.a[j]), want)
    report.add("mixed", res)

    res = Residual()
    for i in range(p):
        want = linalg.zeros(field, n, n)
        for k in range(p):
            want = linalg.mat_add(want, linalg.mat_scale(t.lam[k][i], rep.a[k]))
            coef = -t.t[i][k]
            for kk in range(p):
                for l in range(p):
                    coef = coef - t.phi[kk][l][i] * t.psi[l][kk][k]
            want = linalg.mat_add(want, linalg.mat_scale(coef, rep.b[k]))
        scal = field.zero()
        for k in range(p):
            for l in range(p):
                scal = scal - t.phi[k][l][i] * t.lam[l][k]
        want = linalg.mat_add(want, linalg.mat_scale(scal, eye))
        feed_mat(res, ("bc", i + 1), linalg.mat_mul(rep.b[i], rep.c), want)
    for j in range(p):
        want = linalg.zeros(field, n, n)
        for k in range(p):
            want = linalg.mat_add(want, linalg.mat_scale(t.mu[j][k], rep.b[k]))
            coef = -t.t[k][j]
            for kk in range(p):
                for l in range(p):
                    coef = coef - t.phi[kk][l][k] * t.psi[l][kk][j]
            want = linalg.mat_add(want, linalg.mat_scale(coef, rep.a[k]))
        scal = field.zero()
        for k in range(p):
            for l in range(p):
                scal = scal - t.mu[k][l] * t.psi[l][k][j]
        want = linalg.mat_add(want, linalg.mat_scale(scal, eye))
        feed_mat(res, ("ca", j + 1), linalg.mat_mul(rep.c, rep.a[j]), want)
    report.add("c-products", res)

    res = Residual()
    ok, _ = check_independence(rep.a, include_unity=True, field=field, n=n)
    if not ok:
        res.feed(("a-set",), field.one())
    ok, _ = check_independence(rep.b, include_unity=True, field=field, n=n)
    if not ok:
        res.feed(("b-set",), field.one())
    report.add("independence", res)

    # the image of K = A_s B^s + C must commute with every generator image
    kmat = rep.c
    for am, bm in zip(rep.a, rep.b):
        kmat = linalg.mat_add(kmat, linalg.mat_mul(am, bm))
    res = Residual()
    for tag, m in ([("a", m) for m in rep.a] + [("b", m) for m in rep.b]
                   + [("c", rep.c)]):
        feed_mat(res, ("k-commutator", tag),
                 linalg.mat_mul(kmat, m), linalg.mat_mul(m, kmat))
    report.add("k-central", res)

    circle = second_product(rep)
    report.add("second-associative", circle.associator_residual())
    report.add("second-mixed", mixed_associator_residual(matrix_algebra(field, n), circle))
    return report


# -- the cyclic-group example ------------------------------------------------


def example_cyclic(p, field=None):
    """Structure with both algebras generated by a single order-(p+1)
    element; the pairing involves a primitive (p+1)-th root of unity."""
    if p < 1:
        raise ValueError("p must be >= 1")
    n = p + 1
    if field is None:
        field = CyclotomicField(n)
    eps = primitive_root(field, n)
    tensors = MTensors.zeros(field, p)
    one = field.one()

    def w(i):  # eps^-i - 1, the rescaling of the i-th dual generator
        return eps ** (-i) - one

    for ii in range(1, p + 1):
        i = ii - 1
        for jj in range(1, p + 1):
            j = jj - 1
            ksum = (ii + jj) % n
            if ksum == 0:
                tensors.mu[i][j] = one
                tensors.lam[i][j] = (w(ii) * w(jj)).inverse()
            else:
                tensors.phi[i][j][ksum - 1] = one
                tensors.psi[i][j][ksum - 1] = w(ii + jj) / (w(ii) * w(jj))
        tensors.t[i][i] = w(ii).inverse()
    return MPresentation(tensors, label="cyclic-p%d" % p)


def cyclic_representation(p, s, field=None):
    """Matrices over n = p+1 dimensional space: a cyclic shift and a scaled
    eigenvalue ladder t with a t = eps t a; requires s eps^r != 1 for all r."""
    n = p + 1
    if field is None:
        field = CyclotomicField(n)
    eps = primitive_root(field, n)
    s = field(s)
    one, zero = field.one(), field.zero()
    for r in range(n):
        if (s * eps ** r - one).is_zero():
            raise ValueError("s eps^%d = 1 makes the ladder operator singular" % r)
    amat = [[one if (r == (c - 1) % n) else zero for c in range(n)] for r in range(n)]
    tdiag = [s * eps ** r for r in range(n)]

    def diag_apply(fvals, mat):
        # diag(fvals) @ mat
        return [[fvals[r] * mat[r][c] for c in range(n)] for r in range(n)]

    apow = [linalg.identity(field, n)]
    for _ in range(n):
        apow.append(linalg.mat_mul(apow[-1], amat))

    a_mats = [apow[i] for i in range(1, p + 1)]
    b_mats = []
    for ii in range(1, p + 1):
        j = n - ii  # natural power whose rescaling is the ii-th dual generator
        scale = (eps ** (-ii) - one).inverse()
        fvals = [scale * (eps ** j * td - one) / (td - one) for td in tdiag]
        b_mats.append(diag_apply(fvals, apow[j]))
    c_mat = [[(tdiag[r] / (tdiag[r] - one)) if r == c else zero for c in range(n)]
             for r in range(n)]
    return RPresentation(n, a_mats, b_mats, c_mat, field)


# -- commutative semi-simple first algebra ------------------------------------


def comm_a_constraints(field, u, v, q):
    """Residuals of the three constraint families on (u_i, v_i, q_ij)."""
    p = len(u)
    report = CheckReport()
    res = Residual()
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            res.feed(("quad", i + 1, j + 1), q[i][j] * q[i][j] - u[i] * q[i][j] - v[i])
    report.add("root-condition", res)
    res = Residual()
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            w = u[i] - q[i][j]
            res.feed(("dual", i + 1, j + 1), w * w - u[j] * w - v[j])
    report.add("dual-root-condition", res)
    res = Residual()
    for i in range(p):
        for j in range(p):
            for k in range(p):
                if len({i, j, k}) < 3:
                    continue
                res.feed(("triple", i + 1, j + 1, k + 1),
                         (q[i][k] - q[j][k]) * (q[i][k] - q[i][j]))
    report.add("triple-condition", res)
    return report


def _lift_comm_a_params(field, u_params, v_params, q_params):
    p = len(u_params)
    u = [field(x) for x in u_params]
    v = [field(x) for x in v_params]
    q = [[field.zero()] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            if i != j:
                q[i][j] = field(q_params[i][j])
    return u, v, q


class CommAResult:
    def __init__(self, presentation, algebra_a, algebra_b):
        self.presentation = presentation
        self.algebra_a = algebra_a
        self.algebra_b = algebra_b


def comm_a_build(field, u_params, v_params, q_params):
    """Presentation with the first algebra a sum of orthogonal idempotents
    and the second determined by constants (u_i, v_i, q_ij)."""
    p = len(u_params)
    u, v, q = _lift_comm_a_params(field, u_params, v_params, q_params)
    constraints = comm_a_constraints(field, u, v, q)
    if not constraints.ok:
        raise ValueError("constraint violation: %s" % constraints.failures())

    tensors = MTensors.zeros(field, p)
    one = field.one()
    for i in range(p):
        tensors.phi[i][i][i] = one
        for j in range(p):
            tensors.lam[i][j] = v[i]
            if i == j:
                tensors.psi[i][i][i] = u[i]
            else:
                tensors.psi[i][j][i] = u[i] - q[i][j]
                tensors.psi[i][j][j] = q[i][j]
    pres = MPresentation(tensors, label="comm-a-p%d" % p)

    lin_a = [[[one if (i == j and k == i) else field.zero() for k in range(p)]
              for j in range(p)] for i in range(p)]
    algebra_a = adjoin_unity(StructureConstants(field, lin_a))
    lin_b = [[[tensors.psi[i][j][k] for k in range(p)] for j in range(p)] for i in range(p)]
    scal_b = [[tensors.lam[i][j] for j in range(p)] for i in range(p)]
    algebra_b = adjoin_unity(StructureConstants(field, lin_b), scal_b)
    return CommAResult(pres, algebra_a, algebra_b)


class CommAClass:
    def __init__(self, tag, **data):
        self.tag = tag
        self.data = data

    def __repr__(self):
        return "CommAClass(%s)" % self.tag


def classify_comm_a(field, u_params, v_params, q_params):
    """Case analysis on the second algebra: the one-parameter shift family,
    the commutative algebra, the single-u family (clusters and a two-valued
    pair function), the two-u branch, or the exceptional p=3 simple algebra."""
    p = len(u_params)
    u, v, q = _lift_comm_a_params(field, u_params, v_params, q_params)
    constraints = comm_a_constraints(field, u, v, q)
    if not constraints.ok:
        raise ValueError("constraint violation: %s" % constraints.failures())

    if p == 1:
        return CommAClass("commutative")

    # shift family: q_ij = u_i + tau, v_i = tau^2 + u_i tau, one tau for all
    tau = q[0][1] - u[0]
    is_shift = all(
        (q[i][j] - u[i] - tau).is_zero()
        for i in range(p) for j in range(p) if i != j
    ) and all((v[i] - tau * tau - u[i] * tau).is_zero() for i in range(p))
    if is_shift:
        return CommAClass("regular", tau=tau)

    commutative = (
        all((u[i] - u[0]).is_zero() for i in range(p))
        and all((v[i] - v[0]).is_zero() for i in range(p))
        and all((q[i][j] + q[j][i] - u[0]).is_zero()
                for i in range(p) for j in range(p) if i != j)
    )
    if commutative:
        return CommAClass("commutative")

    # classes of equal u
    classes = []
    for i in range(p):
        for cls in classes:
            if (u[cls[0]] - u[i]).is_zero():
                cls.append(i)
                break
        else:
            classes.append([i])
    m = len(classes)

    if m == 1:
        # clusters: i ~ j when q_ij = q_ji; q constant on cluster pairs
        clusters = []
        for i in range(p):
            for cl in clusters:
                if (q[i][cl[0]] - q[cl[0]][i]).is_zero():
                    cl.append(i)
                    break
            else:
                clusters.append([i])
        values = {}
        for a, ca in enumerate(clusters):
            for b, cb in enumerate(clusters):
                if a == b and len(ca) < 2:
                    continue
                i = ca[0]
                j = cb[1] if (a == b) else cb[0]
                values[(a, b)] = q[i][j]
                for ii in ca:
                    for jj in cb:
                        if ii != jj and not (q[ii][jj] - values[(a, b)]).is_zero():
                            raise ValueError("pair function not constant on clusters")
        return CommAClass("m1-family", clusters=clusters, pair_value=values)

    if m == 2:
        i0, j0 = classes[0][0], classes[1][0]
        tau = (v[j0] - v[i0]) / (u[j0] - u[i0])
        return CommAClass("m2-family", tau=tau, classes=classes)

    if p == 3 and m == 3:
        pattern = (
            (q[1][0] - q[2][0]).is_zero()
            and (q[0][1] - q[2][1]).is_zero()
            and (q[0][2] - q[1][2]).is_zero()
            and (u[0] - q[0][1] - q[0][2]).is_zero()
            and (u[1] - q[1][0] - q[1][2]).is_zero()
            and (u[2] - q[2][0] - q[2][1]).is_zero()
            and (v[0] + q[0][1] * q[0][2]).is_zero()
            and (v[1] + q[1][0] * q[1][2]).is_zero()
            and (v[2] + q[2][0] * q[2][1]).is_zero()
        )
        if pattern:
            return CommAClass("mat2")
    return CommAClass("unrecognized", distinct_u=m)
