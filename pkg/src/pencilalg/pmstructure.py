"""Block-graded presentations governing deformations of direct sums of
matrix algebras, their normal-form algebra, representations, and the
explicit cyclic-ladder family attached to the two-parameter root data.

Conventions.  Greek block indices run 0..m-1 and are never summed
implicitly.  ``p[a][b]`` is the number of A-generators in block (a, b),
which equals the number of B-generators in block (b, a); the two sets are
dual under the pairing.  Tensors are stored per Greek key:

  phi[(a,b,g)][i][j][k]:  A_{i,a,b} A_{j,b,g} = sum_k phi A_{k,a,g} (+ mu e_a)
  mu[(a,b)][i][j]:        coefficient of e_a in A_{i,a,b} A_{j,b,a}
  psi[(a,b,g)][i][j][k]:  B^i_{a,b} B^j_{b,g} = sum_k psi B^k_{a,g} (+ lam e_a)
  lam[(a,b)][i][j]:       coefficient of e_a in B^i_{a,b} B^j_{b,a}
  t[(a,b)][i][j]:         e_a part of B^i_{a,b} A_{j,b,a}

The auxiliary generators C_a are eliminated via C_a = K e_a - sum over
A_{s,a,n} B^s_{n,a}; K is a single central polynomial variable.
"""

from __future__ import annotations

from . import linalg
from .algebra import StructureConstants
from .matops import check_independence
from .pencil import mixed_associator_residual
from .report import CheckReport, Residual
from .scalars import CyclotomicField, primitive_root

E = "e"
A = "A"
B = "B"
AB = "AB"


class PMElement:
    """Normal-form element over the block-graded monomial basis."""

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
        return PMElement(self.pres, out)._tidy()

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] - v if k in out else -v
        return PMElement(self.pres, out)._tidy()

    def scale(self, coef):
        return PMElement(self.pres, {k: coef * v for k, v in self.terms.items()})._tidy()

    def __mul__(self, other):
        if not isinstance(other, PMElement):
            return NotImplemented
        return self.pres.multiply(self, other)

    def is_zero(self):
        return all(v.is_zero() for v in self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "PMElement(0)"
        bits = []
        for (kind, a, b, n, i, j, s), v in sorted(self.terms.items()):
            if kind == E:
                name = "e%d" % a
            elif kind == A:
                name = "A(%d;%d,%d)" % (i, a, b)
            elif kind == B:
                name = "B(%d;%d,%d)" % (j, a, b)
            else:
                name = "A(%d;%d,%d)B(%d;%d,%d)" % (i, a, n, j, n, b)
            if s:
                name += "K^%d" % s
            bits.append("(%s)%s" % (v, name))
        return " + ".join(bits)


class PMPresentation:
    def __init__(self, field, m, p, phi, mu, psi, lam, t, label=None):
        self.field = field
        self.m = m
        self.p = p
        self.phi = phi
        self.mu = mu
        self.psi = psi
        self.lam = lam
        self.t = t
        self.label = label
        self._cache = {}

    # -- tensor access with zero defaults --------------------------------

    def phi_c(self, a, b, g, i, j, k):
        blk = self.phi.get((a, b, g))
        return blk[i][j][k] if blk is not None else self.field.zero()

    def mu_c(self, a, b, i, j):
        blk = self.mu.get((a, b))
        return blk[i][j] if blk is not None else self.field.zero()

    def psi_c(self, a, b, g, i, j, k):
        blk = self.psi.get((a, b, g))
        return blk[i][j][k] if blk is not None else self.field.zero()

    def lam_c(self, a, b, i, j):
        blk = self.lam.get((a, b))
        return blk[i][j] if blk is not None else self.field.zero()

    def t_c(self, a, b, i, j):
        blk = self.t.get((a, b))
        return blk[i][j] if blk is not None else self.field.zero()

    def adim(self, a, b):
        return self.p[a][b]

    def bdim(self, a, b):
        return self.p[b][a]

    # -- element constructors ---------------------------------------------

    def unit(self):
        out = PMElement(self)
        for a in range(self.m):
            out.add_term((E, a, a, -1, -1, -1, 0), self.field.one())
        return out

    def e(self, a, s=0):
        return PMElement(self, {(E, a, a, -1, -1, -1, s): self.field.one()})

    def gen_a(self, a, b, i, s=0):
        return PMElement(self, {(A, a, b, -1, i, -1, s): self.field.one()})

    def gen_b(self, a, b, j, s=0):
        return PMElement(self, {(B, a, b, -1, -1, j, s): self.field.one()})

    def gen_ab(self, a, nu, i, b, j, s=0):
        return PMElement(self, {(AB, a, b, nu, i, j, s): self.field.one()})

    def c_element(self, a):
        """C_a = K e_a - sum_nu A_{s,a,nu} B^s_{nu,a}."""
        terms = {(E, a, a, -1, -1, -1, 1): self.field.one()}
        for nu in range(self.m):
            for s in range(self.adim(a, nu)):
                terms[(AB, a, a, nu, s, s, 0)] = -self.field.one()
        return PMElement(self, terms)

    def generators(self):
        for a in range(self.m):
            for b in range(self.m):
                for i in range(self.adim(a, b)):
                    yield (A, a, b, i)
                for j in range(self.bdim(a, b)):
                    yield (B, a, b, j)

    def basis_monomials(self):
        for a in range(self.m):
            yield (E, a, a, -1, -1, -1)
            for b in range(self.m):
                for i in range(self.adim(a, b)):
                    yield (A, a, b, -1, i, -1)
                for j in range(self.bdim(a, b)):
                    yield (B, a, b, -1, -1, j)
                for nu in range(self.m):
                    for i in range(self.adim(a, nu)):
                        for j in range(self.bdim(nu, b)):
                            yield (AB, a, b, nu, i, j)

    # -- product rules -----------------------------------------------------

    def _prod_aa(self, a, b, i, g, j):
        out = PMElement(self)
        blk = self.phi.get((a, b, g))
        if blk is not None:
            for k in range(self.adim(a, g)):
                c = blk[i][j][k]
                if not c.is_zero():
                    out.add_term((A, a, g, -1, k, -1, 0), c)
        if a == g:
            c = self.mu_c(a, b, i, j)
            if not c.is_zero():
                out.add_term((E, a, a, -1, -1, -1, 0), c)
        return out

    def _prod_bb(self, a, b, i, g, j):
        out = PMElement(self)
        blk = self.psi.get((a, b, g))
        if blk is not None:
            for k in range(self.bdim(a, g)):
                c = blk[i][j][k]
                if not c.is_zero():
                    out.add_term((B, a, g, -1, -1, k, 0), c)
        if a == g:
            c = self.lam_c(a, b, i, j)
            if not c.is_zero():
                out.add_term((E, a, a, -1, -1, -1, 0), c)
        return out

    def _prod_ba(self, a, b, i, g, j):
        """B^i_{a,b} A_{j,b,g}."""
        out = PMElement(self)
        for k in range(self.adim(a, g)):
            c = self.psi_c(g, a, b, k, i, j)
            if not c.is_zero():
                out.add_term((A, a, g, -1, k, -1, 0), c)
        for k in range(self.bdim(a, g)):
            c = self.phi_c(b, g, a, j, k, i)
            if not c.is_zero():
                out.add_term((B, a, g, -1, -1, k, 0), c)
        if a == g:
            c = self.t_c(a, b, i, j)
            if not c.is_zero():
                out.add_term((E, a, a, -1, -1, -1, 0), c)
            if i == j:
                out.add_term((E, a, a, -1, -1, -1, 1), self.field.one())
                for nu in range(self.m):
                    for s in range(self.adim(a, nu)):
                        out.add_term((AB, a, a, nu, s, s, 0), -self.field.one())
        return out

    def _left_a(self, a, b, i, elem):
        """A_{i,a,b} * elem; elem must live in blocks (b, *)."""
        out = PMElement(self)
        for (kind, a2, b2, nu, i2, j2, s), coef in elem.terms.items():
            if a2 != b:
                continue
            if kind == E:
                out.add_term((A, a, b, -1, i, -1, s), coef)
            elif kind == A:
                inner = self._prod_aa(a, b, i, b2, i2)
                for (k2, x2, y2, n2, u2, v2, s2), c2 in inner.terms.items():
                    out.add_term((k2, x2, y2, n2, u2, v2, s2 + s), coef * c2)
            elif kind == B:
                out.add_term((AB, a, b2, b, i, j2, s), coef)
            else:  # A_{i,a,b} A_{i2,b,nu} B^{j2}_{nu,b2}
                blk = self.phi.get((a, b, nu))
                if blk is not None:
                    for k in range(self.adim(a, nu)):
                        c = blk[i][i2][k]
                        if not c.is_zero():
                            out.add_term((AB, a, b2, nu, k, j2, s), coef * c)
                if a == nu:
                    c = self.mu_c(a, b, i, i2)
                    if not c.is_zero():
                        out.add_term((B, a, b2, -1, -1, j2, s), coef * c)
        return out._tidy()

    def _right_b(self, elem, b, g, j):
        """elem * B^j_{b,g}; elem must live in blocks (*, b)."""
        out = PMElement(self)
        for (kind, a2, b2, nu, i2, j2, s), coef in elem.terms.items():
            if b2 != b:
                continue
            if kind == E:
                out.add_term((B, b, g, -1, -1, j, s), coef)
            elif kind == A:
                out.add_term((AB, a2, g, b, i2, j, s), coef)
            elif kind == B:
                inner = self._prod_bb(a2, b, j2, g, j)
                for (k2, x2, y2, n2, u2, v2, s2), c2 in inner.terms.items():
                    out.add_term((k2, x2, y2, n2, u2, v2, s2 + s), coef * c2)
            else:  # A_{i2,a2,nu} (B^{j2}_{nu,b} B^j_{b,g})
                blk = self.psi.get((nu, b, g))
                if blk is not None:
                    for k in range(self.bdim(nu, g)):
                        c = blk[j2][j][k]
                        if not c.is_zero():
                            out.add_term((AB, a2, g, nu, i2, k, s), coef * c)
                if nu == g:
                    c = self.lam_c(nu, b, j2, j)
                    if not c.is_zero():
                        out.add_term((A, a2, g, -1, i2, -1, s), coef * c)
        return out._tidy()

    def _mono_mul(self, m1, m2):
        key = (m1, m2)
        got = self._cache.get(key)
        if got is not None:
            return got
        k1, a1, b1, n1, i1, j1 = m1
        k2, a2, b2, n2, i2, j2 = m2
        one = self.field.one()
        if b1 != a2:
            out = PMElement(self)
        elif k1 == E:
            out = PMElement(self, {m2 + (0,): one})
        elif k2 == E:
            out = PMElement(self, {m1 + (0,): one})
        elif k1 == A:
            if k2 == A:
                out = self._prod_aa(a1, b1, i1, b2, i2)
            elif k2 == B:
                out = PMElement(self, {(AB, a1, b2, b1, i1, j2, 0): one})
            else:
                out = self._left_a(a1, b1, i1, PMElement(self, {m2 + (0,): one}))
        elif k1 == B:
            if k2 == A:
                out = self._prod_ba(a1, b1, j1, b2, i2)
            elif k2 == B:
                out = self._prod_bb(a1, b1, j1, b2, j2)
            else:  # B^{j1}_{a1,b1} A_{i2,b1,n2} B^{j2}_{n2,b2}
                out = self._right_b(self._prod_ba(a1, b1, j1, n2, i2), n2, b2, j2)
        else:  # AB: A_{i1,a1,n1} B^{j1}_{n1,b1} * ...
            if k2 == A:
                out = self._left_a(a1, n1, i1, self._prod_ba(n1, b1, j1, b2, i2))
            elif k2 == B:
                out = self._right_b(PMElement(self, {m1 + (0,): one}), b1, b2, j2)
            else:
                mid = self._prod_ba(n1, b1, j1, n2, i2)
                out = self._right_b(self._left_a(a1, n1, i1, mid), n2, b2, j2)
        self._cache[key] = out
        return out

    def multiply(self, x, y):
        out = PMElement(self)
        for key1, c1 in x.terms.items():
            m1, s1 = key1[:6], key1[6]
            for key2, c2 in y.terms.items():
                coef = c1 * c2
                if coef.is_zero():
                    continue
                m2, s2 = key2[:6], key2[6]
                base = self._mono_mul(m1, m2)
                shift = s1 + s2
                for kk, cc in base.terms.items():
                    out.add_term(kk[:6] + (kk[6] + shift,), coef * cc)
        return out._tidy()

    def __repr__(self):
        tag = " %s" % self.label if self.label else ""
        return "<PMPresentation%s m=%d>" % (tag, self.m)


def pm_u_multiply(x, y, pres=None):
    pres = pres or x.pres
    return pres.multiply(x, y)


def pm_check_K_central(pres):
    """Normal-form associators of the (B, A, A) and (B, B, A) generator
    triples; the rules emitting K are exactly the ones exercised, so zero
    residual together with associativity of both algebras certifies a
    genuine structure."""
    report = CheckReport()
    gens_a = [(a, b, i) for a in range(pres.m) for b in range(pres.m)
              for i in range(pres.adim(a, b))]
    gens_b = [(a, b, j) for a in range(pres.m) for b in range(pres.m)
              for j in range(pres.bdim(a, b))]

    res = Residual()
    for (a, b, i) in gens_b:
        x = pres.gen_b(a, b, i)
        for (b2, g, j) in gens_a:
            if b2 != b:
                continue
            y = pres.gen_a(b, g, j)
            xy = pres.multiply(x, y)
            for (g2, d, k) in gens_a:
                if g2 != g:
                    continue
                z = pres.gen_a(g, d, k)
                diff = pres.multiply(xy, z) - pres.multiply(x, pres.multiply(y, z))
                for key, v in diff.terms.items():
                    res.feed((a, b, i, g, j, d, k) + key, v)
    report.add("baa-assoc", res)

    res = Residual()
    for (a, b, i) in gens_b:
        x = pres.gen_b(a, b, i)
        for (b2, g, j) in gens_b:
            if b2 != b:
                continue
            y = pres.gen_b(b, g, j)
            xy = pres.multiply(x, y)
            for (g2, d, k) in gens_a:
                if g2 != g:
                    continue
                z = pres.gen_a(g, d, k)
                diff = pres.multiply(xy, z) - pres.multiply(x, pres.multiply(y, z))
                for key, v in diff.terms.items():
                    res.feed((a, b, i, g, j, d, k) + key, v)
    report.add("bba-assoc", res)
    return report


def pm_check_consistency(pres):
    """Residuals of the full family of tensor identities: associativity of
    each algebra (with its unity parts) plus the mixed families through the
    normal form."""
    report = CheckReport()
    f = pres.field
    m = pres.m

    res = Residual()
    for a in range(m):
        for b in range(m):
            for g in range(m):
                for d in range(m):
                    for j in range(pres.adim(a, b)):
                        for k in range(pres.adim(b, g)):
                            for l in range(pres.adim(g, d)):
                                for i in range(pres.adim(a, d)):
                                    acc = f.zero()
                                    for s in range(pres.adim(a, g)):
                                        acc = acc + pres.phi_c(a, b, g, j, k, s) * \
                                            pres.phi_c(a, g, d, s, l, i)
                                    for s in range(pres.adim(b, d)):
                                        acc = acc - pres.phi_c(b, g, d, k, l, s) * \
                                            pres.phi_c(a, b, d, j, s, i)
                                    if a == g and i == l:
                                        acc = acc + pres.mu_c(a, b, j, k)
                                    if b == d and i == j:
                                        acc = acc - pres.mu_c(b, g, k, l)
                                    res.feed((a, b, g, d, j, k, l, i), acc)
                                if a == d:
                                    acc = f.zero()
                                    for s in range(pres.adim(a, g)):
                                        acc = acc + pres.phi_c(a, b, g, j, k, s) * \
                                            pres.mu_c(a, g, s, l)
                                    for s in range(pres.adim(b, a)):
                                        acc = acc - pres.phi_c(b, g, a, k, l, s) * \
                                            pres.mu_c(a, b, j, s)
                                    res.feed((a, b, g, d, j, k, l, "e"), acc)
    report.add("aa-assoc", res)

    res = Residual()
    for a in range(m):
        for b in range(m):
            for g in range(m):
                for d in range(m):
                    for j in range(pres.bdim(a, b)):
                        for k in range(pres.bdim(b, g)):
                            for l in range(pres.bdim(g, d)):
                                for i in range(pres.bdim(a, d)):
                                    acc = f.zero()
                                    for s in range(pres.bdim(a, g)):
                                        acc = acc + pres.psi_c(a, b, g, j, k, s) * \
                                            pres.psi_c(a, g, d, s, l, i)
                                    for s in range(pres.bdim(b, d)):
                                        acc = acc - pres.psi_c(b, g, d, k, l, s) * \
                                            pres.psi_c(a, b, d, j, s, i)
                                    if a == g and i == l:
                                        acc = acc + pres.lam_c(a, b, j, k)
                                    if b == d and i == j:
                                        acc = acc - pres.lam_c(b, g, k, l)
                                    res.feed((a, b, g, d, j, k, l, i), acc)
                                if a == d:
                                    acc = f.zero()
                                    for s in range(pres.bdim(a, g)):
                                        acc = acc + pres.psi_c(a, b, g, j, k, s) * \
                                            pres.lam_c(a, g, s, l)
                                    for s in range(pres.bdim(b, a)):
                                        acc = acc - pres.psi_c(b, g, a, k, l, s) * \
                                            pres.lam_c(a, b, j, s)
                                    res.feed((a, b, g, d, j, k, l, "e"), acc)
    report.add("bb-assoc", res)

    for name, residual in pm_check_K_central(pres).residuals.items():
        report.add(name, residual)
    return report


class PMRepresentation:
    """Matrices for the generators: amats[(a,b)] and bmats[(a,b)] are lists
    of n_a x n_b matrices, cmats[a] is n_a x n_a."""

    def __init__(self, field, dims, amats, bmats, cmats, meta=None):
        self.field = field
        self.dims = list(dims)
        self.amats = amats
        self.bmats = bmats
        self.cmats = cmats
        self.meta = meta or {}

    @property
    def m(self):
        return len(self.dims)

    def offsets(self):
        off, acc = [], 0
        for n in self.dims:
            off.append(acc)
            acc += n * n
        return off, acc

    def __repr__(self):
        return "<PMRepresentation dims=%s>" % (tuple(self.dims),)


def pm_validate_representation(pres, rep):
    field = pres.field
    m = pres.m
    report = CheckReport()

    def mats_a(a, b):
        return rep.amats.get((a, b), [])

    def mats_b(a, b):
        return rep.bmats.get((a, b), [])

    def feed_mat(res, tag, got, want):
        for r, row in enumerate(got):
            for c, x in enumerate(row):
                res.feed(tag + (r, c), x - want[r][c])

    def eye(n):
        return linalg.identity(field, n)

    res = Residual()
    for a in range(m):
        for b in range(m):
            for g in range(m):
                for i in range(pres.adim(a, b)):
                    for j in range(pres.adim(b, g)):
                        got = linalg.mat_mul(mats_a(a, b)[i], mats_a(b, g)[j])
                        want = linalg.zeros(field, rep.dims[a], rep.dims[g])
                        for k in range(pres.adim(a, g)):
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.phi_c(a, b, g, i, j, k), mats_a(a, g)[k]))
                        if a == g:
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.mu_c(a, b, i, j), eye(rep.dims[a])))
                        feed_mat(res, ("aa", a, b, g, i, j), got, want)
                for i in range(pres.bdim(a, b)):
                    for j in range(pres.bdim(b, g)):
                        got = linalg.mat_mul(mats_b(a, b)[i], mats_b(b, g)[j])
                        want = linalg.zeros(field, rep.dims[a], rep.dims[g])
                        for k in range(pres.bdim(a, g)):
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.psi_c(a, b, g, i, j, k), mats_b(a, g)[k]))
                        if a == g:
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.lam_c(a, b, i, j), eye(rep.dims[a])))
                        feed_mat(res, ("bb", a, b, g, i, j), got, want)
    report.add("products", res)

    res = Residual()
    for a in range(m):
        for b in range(m):
            for g in range(m):
                for i in range(pres.bdim(a, b)):
                    for j in range(pres.adim(b, g)):
                        got = linalg.mat_mul(mats_b(a, b)[i], mats_a(b, g)[j])
                        want = linalg.zeros(field, rep.dims[a], rep.dims[g])
                        for k in range(pres.adim(a, g)):
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.psi_c(g, a, b, k, i, j), mats_a(a, g)[k]))
                        for k in range(pres.bdim(a, g)):
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.phi_c(b, g, a, j, k, i), mats_b(a, g)[k]))
                        if a == g:
                            want = linalg.mat_add(want, linalg.mat_scale(
                                pres.t_c(a, b, i, j), eye(rep.dims[a])))
                            if i == j:
                                want = linalg.mat_add(want, rep.cmats[a])
                        feed_mat(res, ("ba", a, b, g, i, j), got, want)
    report.add("mixed", res)

    res = Residual()
    for a in range(m):
        for b in range(m):
            # b^i_{a,b} c_b
            for i in range(pres.bdim(a, b)):
                got = linalg.mat_mul(mats_b(a, b)[i], rep.cmats[b])
                want = linalg.zeros(field, rep.dims[a], rep.dims[b])
                for k in range(pres.adim(a, b)):
                    want = linalg.mat_add(want, linalg.mat_scale(
                        pres.lam_c(b, a, k, i), mats_a(a, b)[k]))
                for k in range(pres.bdim(a, b)):
                    coef = -pres.t_c(a, b, i, k)
                    for nu in range(m):
                        for l in range(pres.adim(b, nu)):
                            for s in range(pres.adim(nu, a)):
                                coef = coef - pres.phi_c(b, nu, a, l, s, i) * \
                                    pres.psi_c(a, nu, b, s, l, k)
                    want = linalg.mat_add(want, linalg.mat_scale(coef, mats_b(a, b)[k]))
                if a == b:
                    scal = field.zero()
                    for nu in range(m):
                        for s in range(pres.adim(a, nu)):
                            for l in range(pres.adim(nu, a)):
                                scal = scal - pres.phi_c(a, nu, a, s, l, i) * \
                                    pres.lam_c(a, nu, l, s)
                    want = linalg.mat_add(want, linalg.mat_scale(scal, eye(rep.dims[a])))
                feed_mat(res, ("bc", a, b, i), got, want)
            # c_a a_{i,a,b}
            for i in range(pres.adim(a, b)):
                got = linalg.mat_mul(rep.cmats[a], mats_a(a, b)[i])
                want = linalg.zeros(field, rep.dims[a], rep.dims[b])
                for k in range(pres.bdim(a, b)):
                    want = linalg.mat_add(want, linalg.mat_scale(
                        pres.mu_c(a, b, i, k), mats_b(a, b)[k]))
                for k in range(pres.adim(a, b)):
                    coef = -pres.t_c(b, a, k, i)
                    for nu in range(m):
                        for l in range(pres.adim(a, nu)):
                            for s in range(pres.adim(nu, b)):
                                coef = coef - pres.phi_c(a, nu, b, l, s, k) * \
                                    pres.psi_c(b, nu, a, s, l, i)
                    want = linalg.mat_add(want, linalg.mat_scale(coef, mats_a(a, b)[k]))
                if a == b:
                    scal = field.zero()
                    for nu in range(m):
                        for l in range(pres.adim(a, nu)):
                            for s in range(pres.adim(nu, a)):
                                scal = scal - pres.mu_c(a, nu, l, s) * \
                                    pres.psi_c(a, nu, a, s, l, i)
                    want = linalg.mat_add(want, linalg.mat_scale(scal, eye(rep.dims[a])))
                feed_mat(res, ("ca", a, b, i), got, want)
    report.add("c-products", res)

    res = Residual()
    for a in range(m):
        ok, _ = check_independence(rep.amats.get((a, a), []), include_unity=True,
                                   field=field, n=rep.dims[a])
        if not ok:
            res.feed(("a-diag", a), field.one())
        ok, _ = check_independence(rep.bmats.get((a, a), []), include_unity=True,
                                   field=field, n=rep.dims[a])
        if not ok:
            res.feed(("b-diag", a), field.one())
        for b in range(m):
            if a == b:
                continue
            ok, _ = check_independence(rep.amats.get((a, b), []), field=field)
            if not ok:
                res.feed(("a-off", a, b), field.one())
            ok, _ = check_independence(rep.bmats.get((a, b), []), field=field)
            if not ok:
                res.feed(("b-off", a, b), field.one())
    report.add("independence", res)

    # images of the central elements intertwine every generator block
    kmats = []
    for a in range(m):
        km = rep.cmats[a]
        for nu in range(m):
            for s in range(pres.adim(a, nu)):
                km = linalg.mat_add(km, linalg.mat_mul(rep.amats[(a, nu)][s],
                                                       rep.bmats[(nu, a)][s]))
        kmats.append(km)
    res = Residual()
    for a in range(m):
        for b in range(m):
            for tag, mat in ([("a", mm) for mm in mats_a(a, b)]
                             + [("b", mm) for mm in mats_b(a, b)]):
                got = linalg.mat_mul(kmats[a], mat)
                want = linalg.mat_mul(mat, kmats[b])
                feed_mat(res, ("k", tag, a, b), got, want)
        got = linalg.mat_mul(kmats[a], rep.cmats[a])
        want = linalg.mat_mul(rep.cmats[a], kmats[a])
        feed_mat(res, ("k", "c", a, a), got, want)
    report.add("k-central", res)

    circle = pm_second_product(rep)
    report.add("second-associative", circle.associator_residual())
    report.add("second-mixed", mixed_associator_residual(direct_sum_algebra(rep), circle))
    return report


def direct_sum_algebra(rep):
    """The plain product on the direct sum of the matrix blocks."""
    field = rep.field
    off, total = rep.offsets()
    zero, one = field.zero(), field.one()
    table = [[[zero] * total for _ in range(total)] for _ in range(total)]
    for a, n in enumerate(rep.dims):
        for r1 in range(n):
            for c1 in range(n):
                for c2 in range(n):
                    i = off[a] + r1 * n + c1
                    for r2 in range(n):
                        if c1 == r2:
                            table[i][off[a] + r2 * n + c2][off[a] + r1 * n + c2] = one
    return StructureConstants(field, table, "block-matrix-product")


def pm_second_product(rep):
    """Structure constants of the deformed product on the block sum,
    expanded over matrix units block pair by block pair."""
    field = rep.field
    off, total = rep.offsets()
    zero = field.zero()
    table = [[[zero] * total for _ in range(total)] for _ in range(total)]
    m = rep.m
    for a in range(m):
        na = rep.dims[a]
        for b in range(m):
            nb = rep.dims[b]
            for r1 in range(na):
                for c1 in range(na):
                    i = off[a] + r1 * na + c1
                    for r2 in range(nb):
                        for c2 in range(nb):
                            j = off[b] + r2 * nb + c2
                            vec = table[i][j]
                            if a != b:
                                for am, bm in zip(rep.amats.get((b, a), []),
                                                  rep.bmats.get((a, b), [])):
                                    coef = bm[c1][r2]
                                    if not coef.is_zero():
                                        for u in range(nb):
                                            if not am[u][r1].is_zero():
                                                idx = off[b] + u * nb + c2
                                                vec[idx] = vec[idx] + am[u][r1] * coef
                                for am, bm in zip(rep.amats.get((a, b), []),
                                                  rep.bmats.get((b, a), [])):
                                    coef = am[c1][r2]
                                    if not coef.is_zero():
                                        for v in range(na):
                                            if not bm[c2][v].is_zero():
                                                idx = off[a] + r1 * na + v
                                                vec[idx] = vec[idx] + coef * bm[c2][v]
                            else:
                                cm = rep.cmats[a]
                                idx = off[a] + r1 * na + c2
                                vec[idx] = vec[idx] + cm[c1][r2]
                                # the deformation of x y also leaves the
                                # block: -R_{g,a}(x y) for every g != a
                                if c1 == r2:
                                    for g in range(m):
                                        if g == a:
                                            continue
                                        ng = rep.dims[g]
                                        for am, bm in zip(rep.amats.get((g, a), []),
                                                          rep.bmats.get((a, g), [])):
                                            for u in range(ng):
                                                au = am[u][r1]
                                                if au.is_zero():
                                                    continue
                                                for v in range(ng):
                                                    if not bm[c2][v].is_zero():
                                                        idx = off[g] + u * ng + v
                                                        vec[idx] = (vec[idx]
                                                                    - au * bm[c2][v])
                                for am, bm in zip(rep.amats.get((a, a), []),
                                                  rep.bmats.get((a, a), [])):
                                    coef = bm[c1][r2]
                                    if not coef.is_zero():
                                        for u in range(na):
                                            if not am[u][r1].is_zero():
                                                idx = off[a] + u * na + c2
                                                vec[idx] = vec[idx] + am[u][r1] * coef
                                    coef = am[c1][r2]
                                    if not coef.is_zero():
                                        for v in range(na):
                                            if not bm[c2][v].is_zero():
                                                idx = off[a] + r1 * na + v
                                                vec[idx] = vec[idx] + coef * bm[c2][v]
                                    if c1 == r2:
                                        for u in range(na):
                                            au = am[u][r1]
                                            if au.is_zero():
                                                continue
                                            for v in range(na):
                                                if not bm[c2][v].is_zero():
                                                    idx = off[a] + u * na + v
                                                    vec[idx] = vec[idx] - au * bm[c2][v]
    return StructureConstants(field, table, "pm-second-product")


def r_operator_from_rep(rep):
    """Dense operator on the block sum built from the split presentation,
    the generic source of the second product."""
    field = rep.field
    off, total = rep.offsets()
    dense = linalg.zeros(field, total, total)
    m = rep.m
    for a in range(m):
        na = rep.dims[a]
        for r in range(na):
            for c in range(na):
                col = off[a] + r * na + c
                x = linalg.zeros(field, na, na)
                x[r][c] = field.one()
                for b in range(m):
                    nb = rep.dims[b]
                    if b == a:
                        img = linalg.mat_mul(rep.cmats[a], x)
                        for am, bm in zip(rep.amats.get((a, a), []),
                                          rep.bmats.get((a, a), [])):
                            img = linalg.mat_add(img, linalg.mat_mul(
                                am, linalg.mat_mul(x, bm)))
                    else:
                        img = linalg.zeros(field, nb, nb)
                        for am, bm in zip(rep.amats.get((b, a), []),
                                          rep.bmats.get((a, b), [])):
                            img = linalg.mat_add(img, linalg.mat_mul(
                                am, linalg.mat_mul(x, bm)))
                    for u in range(nb):
                        for v in range(nb):
                            if not img[u][v].is_zero():
                                dense[off[b] + u * nb + v][col] = img[u][v]
    return dense


# -- the rank-one block family ------------------------------------------------


def example_3_1(field, u_params, t_params):
    """Size-m structure with one generator pair per off-diagonal block."""
    m = len(u_params)
    u = [field(x) for x in u_params]
    tp = [field(x) for x in t_params]
    for a in range(m):
        if tp[a].is_zero():
            raise ValueError("t parameters must be nonzero")
        for b in range(a + 1, m):
            if (u[a] - u[b]).is_zero():
                raise ValueError("u parameters must be pairwise distinct")

    def omega(a, b):
        return (u[a] - u[b]) / tp[b]

    # the central element carries idempotent corrections block by block;
    # folding them into t keeps the eliminated gauge consistent
    shift = [sum((tp[nu] / (u[a] - u[nu]) for nu in range(m) if nu != a),
                 field.zero()) for a in range(m)]
    p = [[0 if a == b else 1 for b in range(m)] for a in range(m)]
    phi, mu, psi, lam, t = {}, {}, {}, {}, {}
    one = field.one()
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            mu[(a, b)] = [[one]]
            lam[(a, b)] = [[(omega(b, a) * omega(a, b)).inverse()]]
            t[(a, b)] = [[tp[a] / (u[b] - u[a]) + shift[a]]]
            for g in range(m):
                if g == b or g == a:
                    continue
                phi[(a, b, g)] = [[[one]]]
                psi[(a, b, g)] = [[[omega(g, a) / (omega(b, a) * omega(g, b))]]]
    return PMPresentation(field, m, p, phi, mu, psi, lam, t,
                          label="rank-one-m%d" % m)


def example_3_1_representation(field, u_params, t_params):
    """The one-dimensional representation (all blocks C)."""
    m = len(u_params)
    u = [field(x) for x in u_params]
    tp = [field(x) for x in t_params]
    for x in u:
        if x.is_zero():
            raise ValueError("one-dimensional representation needs nonzero u")
    amats, bmats, cmats = {}, {}, []

    def omega(a, b):
        return (u[a] - u[b]) / tp[b]

    shift = [sum((tp[nu] / (u[a] - u[nu]) for nu in range(m) if nu != a),
                 field.zero()) for a in range(m)]
    for a in range(m):
        cmats.append([[tp[a] / u[a] - shift[a]]])
        for b in range(m):
            if a == b:
                amats[(a, b)] = []
                bmats[(a, b)] = []
            else:
                amats[(a, b)] = [[[field.one()]]]
                bmats[(a, b)] = [[[(u[b] / u[a]) / omega(b, a)]]]
    return PMRepresentation(field, [1] * m, amats, bmats, cmats,
                            meta={"kind": "rank-one", "u": u, "t": tp})


# -- the cyclic-ladder family --------------------------------------------------


def _a2k1_labels(k, a, b):
    return list(range(k)) if a != b else list(range(1, k))


def a2k1_build(k, m, lam_params, t_params, field=None):
    """Block structure whose generators are indexed by residues mod k, with
    pairing weights (eps^i lam_a - lam_b) / t_a; k = 1 degenerates to the
    rank-one family and m = 1 to the single-block cyclic example."""
    if field is None:
        field = CyclotomicField(k) if k > 1 else CyclotomicField(1)
    eps = primitive_root(field, k) if k > 1 else field.one()
    lamp = [field(x) for x in lam_params]
    tp = [field(x) for x in t_params]
    if len(lamp) != m or len(tp) != m:
        raise ValueError("need m parameters of each kind")
    for a in range(m):
        if tp[a].is_zero():
            raise ValueError("t parameters must be nonzero")
        if k > 1 and lamp[a].is_zero():
            raise ValueError("lam parameters must be nonzero")
        for b in range(a + 1, m):
            if (lamp[a] ** k - lamp[b] ** k).is_zero():
                raise ValueError("lam parameters must have distinct k-th powers")

    def w(i, a, b):
        return (eps ** i * lamp[a] - lamp[b]) / tp[a]

    # idempotent corrections of the central element, folded into t
    shift = []
    for a in range(m):
        acc = field.zero()
        for nu in range(m):
            for i in range(k):
                if nu == a and i % k == 0:
                    continue
                acc = acc + eps ** i * tp[nu] / (eps ** i * lamp[nu] - lamp[a])
        shift.append(acc)

    p = [[len(_a2k1_labels(k, a, b)) for b in range(m)] for a in range(m)]
    phi, mu, psi, lam, t = {}, {}, {}, {}, {}
    one = field.one()
    for a in range(m):
        for b in range(m):
            la_ab = _a2k1_labels(k, a, b)
            lb_ab = _a2k1_labels(k, b, a)  # B labels of block (a, b)
            if lb_ab:
                tblk = [[field.zero()] * len(lb_ab) for _ in lb_ab]
                for pi, li in enumerate(lb_ab):
                    tblk[pi][pi] = eps ** (-li) / w(-li, a, b) + shift[a]
                t[(a, b)] = tblk
            if la_ab and b != a:
                mublk = [[field.zero()] * len(_a2k1_labels(k, b, a)) for _ in la_ab]
                for pi, li in enumerate(la_ab):
                    for pj, lj in enumerate(_a2k1_labels(k, b, a)):
                        if (li + lj) % k == 0:
                            mublk[pi][pj] = one
                mu[(a, b)] = mublk
                lamblk = [[field.zero()] * len(la_ab) for _ in lb_ab]
                for pi, li in enumerate(lb_ab):
                    for pj, lj in enumerate(la_ab):
                        if (li + lj) % k == 0:
                            lamblk[pi][pj] = (w(-li, a, b) * w(-lj, b, a)).inverse()
                lam[(a, b)] = lamblk
            if b == a and la_ab:
                # diagonal blocks: products of nonzero residues may hit zero
                mublk = [[field.zero()] * len(la_ab) for _ in la_ab]
                lamblk = [[field.zero()] * len(la_ab) for _ in la_ab]
                for pi, li in enumerate(la_ab):
                    for pj, lj in enumerate(la_ab):
                        if (li + lj) % k == 0:
                            mublk[pi][pj] = one
                            lamblk[pi][pj] = (w(-li, a, a) * w(-lj, a, a)).inverse()
                mu[(a, b)] = mublk
                lam[(a, b)] = lamblk
            for g in range(m):
                la_bg = _a2k1_labels(k, b, g)
                la_ag = _a2k1_labels(k, a, g)
                if la_ab and la_bg:
                    blk = [[[field.zero()] * len(la_ag) for _ in la_bg] for _ in la_ab]
                    nontrivial = False
                    for pi, li in enumerate(la_ab):
                        for pj, lj in enumerate(la_bg):
                            lk = (li + lj) % k
                            if lk in la_ag:
                                blk[pi][pj][la_ag.index(lk)] = one
                                nontrivial = True
                    if nontrivial:
                        phi[(a, b, g)] = blk
                lb_ba = _a2k1_labels(k, b, a)
                lb_gb = _a2k1_labels(k, g, b)
                lb_ga = _a2k1_labels(k, g, a)
                if lb_ba and lb_gb:
                    blk = [[[field.zero()] * len(lb_ga) for _ in lb_gb] for _ in lb_ba]
                    nontrivial = False
                    for pi, li in enumerate(lb_ba):
                        for pj, lj in enumerate(lb_gb):
                            lk = (li + lj) % k
                            if lk in lb_ga:
                                blk[pi][pj][lb_ga.index(lk)] = \
                                    w(-(li + lj), a, g) / (w(-li, a, b) * w(-lj, b, g))
                                nontrivial = True
                    if nontrivial:
                        psi[(a, b, g)] = blk
    return PMPresentation(field, m, p, phi, mu, psi, lam, t,
                          label="cyclic-ladder-k%d-m%d" % (k, m))


def a2k1_representation(k, m, lam_params, t_params, s, field=None):
    """Blockwise k x k matrices from a cyclic shift and a scaled eigenvalue
    ladder; requires the ladder to avoid every lam parameter."""
    if field is None:
        field = CyclotomicField(k) if k > 1 else CyclotomicField(1)
    eps = primitive_root(field, k) if k > 1 else field.one()
    lamp = [field(x) for x in lam_params]
    tp = [field(x) for x in t_params]
    s = field(s)
    zero, one = field.zero(), field.one()
    tdiag = [s * eps ** r for r in range(k)]
    for a in range(m):
        for r in range(k):
            if (tdiag[r] - lamp[a]).is_zero():
                raise ValueError("ladder eigenvalue s eps^%d equals lam_%d" % (r, a))
    amat = [[one if r == (c - 1) % k else zero for c in range(k)] for r in range(k)]
    apow = [linalg.identity(field, k)]
    for _ in range(k):
        apow.append(linalg.mat_mul(apow[-1], amat))

    def nat_b(i, a, b):
        # representation of the i-th natural generator of the (a, b) block
        mat = apow[i % k]
        return [[(eps ** i * tdiag[r] - lamp[b]) / (tdiag[r] - lamp[a]) * mat[r][c]
                 for c in range(k)] for r in range(k)]

    def w(i, a, b):
        return (eps ** i * lamp[a] - lamp[b]) / tp[a]

    shift = []
    for a in range(m):
        acc = field.zero()
        for nu in range(m):
            for i in range(k):
                if nu == a and i % k == 0:
                    continue
                acc = acc + eps ** i * tp[nu] / (eps ** i * lamp[nu] - lamp[a])
        shift.append(acc)
    amats, bmats, cmats = {}, {}, []
    for a in range(m):
        cmats.append([[(tp[a] / (tdiag[r] - lamp[a]) - shift[a]) if r == c else zero
                       for c in range(k)] for r in range(k)])
        for b in range(m):
            amats[(a, b)] = [apow[li] for li in _a2k1_labels(k, a, b)]
            blist = []
            for lj in _a2k1_labels(k, b, a):
                scale = w(-lj, a, b).inverse()
                mat = nat_b(-lj % k, a, b)
                blist.append([[scale * x for x in row] for row in mat])
            bmats[(a, b)] = blist
    return PMRepresentation(field, [k] * m, amats, bmats, cmats,
                            meta={"kind": "cyclic-ladder", "k": k, "m": m,
                                  "lam": lamp, "t": tp, "s": s, "eps": eps,
                                  "apow": apow, "tdiag": tdiag})


def a2k1_r_operator(rep, t_params=None):
    """The explicit block operator of the cyclic-ladder family, component by
    component; deforming the block matrix product with it reproduces
    pm_second_product(rep).

    The diagonal component is the natural-gauge multiplication operator plus
    the ladder sandwiches of the own block and the scalar ladder corrections
    of every block; cross-block sandwich terms are dimensionally inconsistent
    and break associativity, so only the scalar part of the foreign blocks
    enters.

    The operator is linear in the t parameters, which appear in numerators
    only; ``t_params`` overrides the representation's own values, so
    degenerate members of the family (monomial t vectors) are reachable."""
    meta = rep.meta
    if meta.get("kind") != "cyclic-ladder":
        raise ValueError("representation does not carry cyclic-ladder data")
    field = rep.field
    k, m = meta["k"], meta["m"]
    lamp, eps = meta["lam"], meta["eps"]
    tp = meta["t"] if t_params is None else [field(x) for x in t_params]
    apow, tdiag = meta["apow"], meta["tdiag"]
    off, total = rep.offsets()
    dense = linalg.zeros(field, total, total)

    def nat_b(i, a, b):
        mat = apow[i % k]
        return [[(eps ** i * tdiag[r] - lamp[b]) / (tdiag[r] - lamp[a]) * mat[r][c]
                 for c in range(k)] for r in range(k)]

    cnat = [[[((tdiag[r] - lamp[a]).inverse() if r == c else field.zero())
              for c in range(k)] for r in range(k)] for a in range(m)]

    for a in range(m):
        for r in range(k):
            for c in range(k):
                col = off[a] + r * k + c
                x = linalg.zeros(field, k, k)
                x[r][c] = field.one()
                for b in range(m):
                    if b != a:
                        img = linalg.zeros(field, k, k)
                        for i in range(k):
                            coef = tp[a] / (eps ** i * lamp[a] - lamp[b])
                            term = linalg.mat_mul(apow[(-i) % k],
                                                  linalg.mat_mul(x, nat_b(i, a, b)))
                            img = linalg.mat_add(img, linalg.mat_scale(coef, term))
                    else:
                        img = linalg.mat_scale(tp[a], linalg.mat_mul(cnat[a], x))
                        for b2 in range(m):
                            for i in range(k):
                                if b2 == a and i % k == 0:
                                    continue
                                coef = tp[b2] / (eps ** i * lamp[b2] - lamp[a])
                                img = linalg.mat_sub(
                                    img, linalg.mat_scale(coef * eps ** i, x))
                                if b2 == a:
                                    term = linalg.mat_mul(
                                        apow[(-i) % k],
                                        linalg.mat_mul(x, nat_b(i, a, a)))
                                    img = linalg.mat_add(
                                        img, linalg.mat_scale(coef, term))
                    for u in range(k):
                        for v in range(k):
                            if not img[u][v].is_zero():
                                dense[off[b] + u * k + v][col] = img[u][v]
    return dense


# -- sums, opposites, block reports -------------------------------------------


def pm_direct_sum(l1, l2):
    if l1.field != l2.field:
        raise ValueError("direct sum needs a common field")
    m1, m2 = l1.m, l2.m
    m = m1 + m2
    p = [[0] * m for _ in range(m)]
    for a in range(m1):
        for b in range(m1):
            p[a][b] = l1.p[a][b]
    for a in range(m2):
        for b in range(m2):
            p[m1 + a][m1 + b] = l2.p[a][b]
    phi, mu, psi, lam, t = {}, {}, {}, {}, {}
    for src, offset in ((l1, 0), (l2, m1)):
        for key, blk in src.phi.items():
            phi[tuple(x + offset for x in key)] = blk
        for key, blk in src.psi.items():
            psi[tuple(x + offset for x in key)] = blk
        for key, blk in src.mu.items():
            mu[tuple(x + offset for x in key)] = blk
        for key, blk in src.lam.items():
            lam[tuple(x + offset for x in key)] = blk
        for key, blk in src.t.items():
            t[tuple(x + offset for x in key)] = blk
    return PMPresentation(l1.field, m, p, phi, mu, psi, lam, t, label="direct-sum")


def _transpose2(blk):
    rows, cols = len(blk), len(blk[0]) if blk else 0
    return [[blk[i][j] for i in range(rows)] for j in range(cols)]


def pm_opposite(l):
    """Swap the two algebras, each with its opposite multiplication."""
    m = l.m
    p = [[l.p[a][b] for b in range(m)] for a in range(m)]
    phi, mu, psi, lam, t = {}, {}, {}, {}, {}
    for (g, b, a), blk in l.psi.items():
        # phi'[(a,b,g)][i][j][k] = psi[(g,b,a)][j][i][k]
        ni, nj = len(blk[0]) if blk else 0, len(blk)
        nk = len(blk[0][0]) if (blk and blk[0]) else 0
        phi[(a, b, g)] = [[[blk[j][i][k] for k in range(nk)]
                           for j in range(nj)] for i in range(ni)]
    for (g, b, a), blk in l.phi.items():
        ni, nj = len(blk[0]) if blk else 0, len(blk)
        nk = len(blk[0][0]) if (blk and blk[0]) else 0
        psi[(a, b, g)] = [[[blk[j][i][k] for k in range(nk)]
                           for j in range(nj)] for i in range(ni)]
    for (a, b), blk in l.lam.items():
        mu[(a, b)] = _transpose2(blk)
    for (a, b), blk in l.mu.items():
        lam[(a, b)] = _transpose2(blk)
    for (a, b), blk in l.t.items():
        t[(a, b)] = _transpose2(blk)
    return PMPresentation(l.field, m, p, phi, mu, psi, lam, t, label="opposite")


def pm_weak_decompose(pres):
    """Split the underlying space by the left/right idempotent actions and
    report block dimensions; the kernels are computed by exact elimination,
    not read off the grading."""
    field = pres.field
    m = pres.m
    basis = [("e", a, a, -1) for a in range(m)]
    basis += [("C", a, a, -1) for a in range(m)]
    for a in range(m):
        for b in range(m):
            basis += [("A", a, b, i) for i in range(pres.adim(a, b))]
            basis += [("B", a, b, j) for j in range(pres.bdim(a, b))]
    index = {key: h for h, key in enumerate(basis)}
    dim = len(basis)
    zero, one = field.zero(), field.one()

    def left_action(x):
        matm = linalg.zeros(field, dim, dim)
        for key, h in index.items():
            if key[1] == x:
                matm[h][h] = one
        return matm

    def right_action(y):
        matm = linalg.zeros(field, dim, dim)
        for key, h in index.items():
            if key[2] == y:
                matm[h][h] = one
        return matm

    report = {"m": m, "dim": dim, "blocks": {}, "ok": True}
    total = 0
    for a in range(m):
        la = left_action(a)
        for b in range(m):
            rb = right_action(b)
            rows = []
            for h in range(dim):
                rows.append([la[h][g] - (one if g == h else zero) for g in range(dim)])
            for h in range(dim):
                rows.append([rb[h][g] - (one if g == h else zero) for g in range(dim)])
            block_dim = len(linalg.nullspace(field, rows))
            a_dim = pres.adim(a, b) + (1 if a == b else 0)
            b_dim = pres.bdim(a, b) + (1 if a == b else 0)
            expected = pres.adim(a, b) + pres.bdim(a, b) + (2 if a == b else 0)
            entry = {"dim": block_dim, "a_dim": a_dim, "b_dim": b_dim,
                     "intersection": 1 if a == b else 0}
            if block_dim != expected:
                report["ok"] = False
            report["blocks"][(a, b)] = entry
            total += block_dim
    if total != dim:
        report["ok"] = False
    return report
