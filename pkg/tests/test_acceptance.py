"""Acceptance criteria, one test per criterion.

Every numeric claim is exact (cyclotomic or rational arithmetic); a
criterion passes only when the corresponding residuals are identically
zero.  Each test prints a single summary line.
"""

import time
from fractions import Fraction

import pytest

from pencilalg import Pencil, QQ, matrix_algebra
from pencilalg import linalg
from pencilalg.dynkin import (
    catalog,
    catalog_entries,
    classify,
    gram_matrix,
    gram_psd_rank,
    is_admissible,
    solve_adm,
    transpose,
)
from pencilalg.matops import extract_m_tensors, s_operator, second_product, verify_tensor_identities
from pencilalg.mstructure import (
    UElement,
    check_K_central,
    classify_comm_a,
    comm_a_build,
    comm_a_constraints,
    cyclic_representation,
    example_cyclic,
)
from pencilalg.pencil import (
    check_compatibility,
    deform_by_R,
    example_1_3,
    extend_polynomial,
    extension_decompose_check,
    extension_family_compatible,
    mixed_associator_residual,
    rr_identity_residual,
    rs_identity_residual,
)
from pencilalg.pmstructure import (
    PMElement,
    a2k1_build,
    a2k1_r_operator,
    a2k1_representation,
    direct_sum_algebra,
    example_3_1,
    pm_check_K_central,
    pm_second_product,
    pm_u_multiply,
    pm_validate_representation,
)
from pencilalg.poisson import check_poisson_pencil
from pencilalg.rand import DetRNG
from pencilalg.scalars import CyclotomicField
from pencilalg.algebra import StructureConstants, zero_algebra


def _report(number, label, ok, elapsed, limit=None):
    line = "ACCEPTANCE %d %-28s %s (%.2fs%s)" % (
        number, label, "PASS" if ok else "FAIL", elapsed,
        ", limit %ds" % limit if limit else "")
    print(line)
    assert ok, line


def unit_vec(d, i):
    return [QQ(1) if h == i else QQ(0) for h in range(d)]


def inner_circle(star, a):
    d = star.dim
    table = [[star.multiply(star.multiply(unit_vec(d, i), a), unit_vec(d, j))
              for j in range(d)] for i in range(d)]
    return StructureConstants(star.field, table)


def commutator_circle(star, amat, bmat):
    n = 2
    d = 4

    def mat(v):
        return [[v[r * n + c] for c in range(n)] for r in range(n)]

    def vec(m):
        return [m[r][c] for r in range(n) for c in range(n)]

    table = []
    for i in range(d):
        xm = mat(unit_vec(d, i))
        fx = linalg.mat_sub(linalg.mat_mul(amat, xm), linalg.mat_mul(xm, amat))
        row = []
        for j in range(d):
            ym = mat(unit_vec(d, j))
            gy = linalg.mat_sub(linalg.mat_mul(bmat, ym), linalg.mat_mul(ym, bmat))
            row.append(vec(linalg.mat_mul(fx, gy)))
        table.append(row)
    return StructureConstants(star.field, table)


def commutator_R(star, amat, bmat):
    n, d = 2, 4

    def mat(v):
        return [[v[r * n + c] for c in range(n)] for r in range(n)]

    cols = []
    for h in range(d):
        xm = mat(unit_vec(d, h))
        img = linalg.mat_mul(amat, linalg.mat_sub(linalg.mat_mul(xm, bmat),
                                                  linalg.mat_mul(bmat, xm)))
        cols.append([img[r][c] for r in range(n) for c in range(n)])
    return [[cols[h][k] for h in range(d)] for k in range(d)]


def test_criterion_1_compatibility_suite():
    start = time.perf_counter()
    star = matrix_algebra(QQ, 2)
    rng = DetRNG(101)
    ok = True
    for _ in range(10):
        a = rng.vector(QQ, 4)
        ok = ok and check_compatibility(Pencil(star, inner_circle(star, a))).ok
    for _ in range(10):
        amat = rng.matrix(QQ, 2, 2)
        bmat = rng.matrix(QQ, 2, 2)
        ok = ok and check_compatibility(
            Pencil(star, commutator_circle(star, amat, bmat))).ok
    elapsed = time.perf_counter() - start
    _report(1, "compatibility suite", ok and elapsed < 5.0, elapsed, 5)


def test_criterion_2_quadratic_identity_gate():
    start = time.perf_counter()
    star = matrix_algebra(QQ, 2)
    rng = DetRNG(102)
    ok = True
    # singular a: the plain quadratic identity holds
    for _ in range(3):
        col = rng.vector(QQ, 2)
        scale = QQ(rng.fraction(4, 3))
        amat = [[col[0], scale * col[0]], [col[1], scale * col[1]]]  # det 0
        bmat = rng.matrix(QQ, 2, 2)
        ok = ok and rr_identity_residual(commutator_R(star, amat, bmat), star).zero
    # generic a: it must fail in at least 9 of 10 draws
    failures = 0
    draws = 0
    while draws < 10:
        amat = rng.matrix(QQ, 2, 2)
        det = amat[0][0] * amat[1][1] - amat[0][1] * amat[1][0]
        if det.is_zero():
            continue
        draws += 1
        bmat = rng.matrix(QQ, 2, 2)
        if not rr_identity_residual(commutator_R(star, amat, bmat), star).zero:
            failures += 1
    ok = ok and failures >= 9
    elapsed = time.perf_counter() - start
    _report(2, "quadratic identity gate", ok, elapsed)


def test_criterion_3_tensor_round_trip():
    start = time.perf_counter()
    field = CyclotomicField(3)
    rep = cyclic_representation(2, 2, field)
    tensors, closure = extract_m_tensors(rep)
    ok = closure.ok
    ok = ok and verify_tensor_identities(tensors).ok
    circle = second_product(rep)
    star = matrix_algebra(field, 3)
    ok = ok and circle.associator_residual().zero
    ok = ok and mixed_associator_residual(star, circle).zero
    s_op = s_operator(rep, tensors)
    ok = ok and rs_identity_residual(rep.dense_operator(), s_op, star).zero
    elapsed = time.perf_counter() - start
    _report(3, "tensor extraction round trip", ok and elapsed < 10.0, elapsed, 10)


def _random_m_element(pres, rng, terms=4, kmax=3):
    out = UElement(pres)
    monos = list(pres.basis_monomials())
    for _ in range(terms):
        kind, i, j = monos[rng.randint(0, len(monos) - 1)]
        out.add_term((kind, i, j, rng.randint(0, kmax)), pres.field(rng.fraction(4, 3)))
    return out._tidy()


def _random_pm_element(pres, rng, terms=3, kmax=3):
    out = PMElement(pres)
    monos = list(pres.basis_monomials())
    for _ in range(terms):
        mono = monos[rng.randint(0, len(monos) - 1)]
        out.add_term(mono + (rng.randint(0, kmax),), pres.field(rng.fraction(4, 3)))
    return out._tidy()


def test_criterion_4_normal_form_centrality():
    start = time.perf_counter()
    ok = True
    singles = []
    for p in (1, 2, 3, 4):
        pres = example_cyclic(p)
        ok = ok and check_K_central(pres).ok
        singles.append(pres)
    blocks = []
    for m in (1, 2, 3):
        blocks.append(example_3_1(QQ, [Fraction(i + 1) for i in range(m)],
                                  [Fraction(1)] * m))
    for k in (1, 2, 3):
        for m in (1, 2):
            blocks.append(a2k1_build(k, m, [Fraction(i + 1) for i in range(m)],
                                     [Fraction(1)] * m))
    for pres in blocks:
        ok = ok and pm_check_K_central(pres).ok
    # 100 seeded associativity triples for each normal form
    rng = DetRNG(104)
    per = 100 // len(singles)
    for pres in singles:
        for _ in range(per):
            x, y, z = (_random_m_element(pres, rng) for _ in range(3))
            lhs = pres.u_multiply(pres.u_multiply(x, y), z)
            rhs = pres.u_multiply(x, pres.u_multiply(y, z))
            ok = ok and (lhs - rhs).is_zero()
    rng = DetRNG(105)
    per = 100 // len(blocks) + 1
    for pres in blocks:
        for _ in range(per):
            x, y, z = (_random_pm_element(pres, rng) for _ in range(3))
            lhs = pm_u_multiply(pm_u_multiply(x, y), z)
            rhs = pm_u_multiply(x, pm_u_multiply(y, z))
            ok = ok and (lhs - rhs).is_zero()
    elapsed = time.perf_counter() - start
    _report(4, "central element checks", ok, elapsed)


def test_criterion_5_diagram_golden_table():
    start = time.perf_counter()
    rng = DetRNG(105)
    ok = True
    for family, k in catalog_entries(max_k=6):
        a, mv, nv = catalog(family, k)
        ok = ok and is_admissible(a)
        ok = ok and solve_adm(a) == (mv, nv)
        psd, rank = gram_psd_rank(gram_matrix(a))
        ok = ok and psd and rank == len(a) + len(a[0]) - 1
        got = classify(a)
        ok = ok and got is not None and (got.family, got.k) == (family, k)
        # random row/column shuffle, then transpose
        r, s = len(a), len(a[0])
        rows = list(range(r))
        cols = list(range(s))
        for i in range(r - 1, 0, -1):
            j = rng.randint(0, i)
            rows[i], rows[j] = rows[j], rows[i]
        for i in range(s - 1, 0, -1):
            j = rng.randint(0, i)
            cols[i], cols[j] = cols[j], cols[i]
        shuffled = [[a[rows[i]][cols[j]] for j in range(s)] for i in range(r)]
        got = classify(shuffled)
        ok = ok and got is not None and (got.family, got.k) == (family, k)
        got = classify(transpose(shuffled))
        ok = ok and got is not None and (got.family, got.k) == (family, k)
    elapsed = time.perf_counter() - start
    _report(5, "diagram golden table", ok and elapsed < 5.0, elapsed, 5)


def test_criterion_6_ladder_end_to_end():
    start = time.perf_counter()
    field = CyclotomicField(2)
    k, m = 2, 2
    lam, tvec, s = [1, 2], [1, 1], 3
    pres = a2k1_build(k, m, lam, tvec, field)
    rep = a2k1_representation(k, m, lam, tvec, s, field)
    ok = pm_validate_representation(pres, rep).ok
    circle = pm_second_product(rep)
    star = direct_sum_algebra(rep)
    ok = ok and check_compatibility(Pencil(star, circle)).ok
    via = deform_by_R(star, a2k1_r_operator(rep))
    ok = ok and via.table == circle.table
    # the star plus the m monomial-parameter products: pairwise compatible
    members = [star]
    for alpha in range(m):
        tmono = [1 if i == alpha else 0 for i in range(m)]
        members.append(deform_by_R(star, a2k1_r_operator(rep, tmono)))
    for i in range(len(members)):
        ok = ok and members[i].associator_residual().zero
        for j in range(i + 1, len(members)):
            ok = ok and mixed_associator_residual(members[i], members[j]).zero
    elapsed = time.perf_counter() - start
    _report(6, "ladder family end to end", ok and elapsed < 30.0, elapsed, 30)


def test_criterion_7_commutative_first_algebra():
    start = time.perf_counter()
    ok = True
    # shift family
    u = [Fraction(1), Fraction(2), Fraction(3), Fraction(4)]
    tau = Fraction(1, 2)
    q = [[u[i] + tau if i != j else Fraction(0) for j in range(4)] for i in range(4)]
    v = [tau * tau + ui * tau for ui in u]
    ok = ok and comm_a_constraints(QQ, [QQ(x) for x in u], [QQ(x) for x in v],
                                   [[QQ(x) for x in row] for row in q]).ok
    ok = ok and classify_comm_a(QQ, u, v, q).tag == "regular"
    # commutative family
    u2 = [0, 0, 0]
    v2 = [1, 1, 1]
    q2 = [[0, -1, -1], [1, 0, -1], [1, 1, 0]]
    built = comm_a_build(QQ, u2, v2, q2)
    ok = ok and classify_comm_a(QQ, u2, v2, q2).tag == "commutative"
    ok = ok and built.algebra_b.is_semisimple()
    ok = ok and built.algebra_b.center_dimension() == built.algebra_b.dim
    # exceptional p = 3 algebra
    q21, q12, q13 = Fraction(1), Fraction(2), Fraction(5)
    q3 = [[0, q12, q13], [q21, 0, q13], [q21, q12, 0]]
    u3 = [q12 + q13, q21 + q13, q21 + q12]
    v3 = [-q12 * q13, -q21 * q13, -q21 * q12]
    built = comm_a_build(QQ, u3, v3, q3)
    ok = ok and classify_comm_a(QQ, u3, v3, q3).tag == "mat2"
    bb = built.algebra_b
    ok = ok and bb.dim == 4 and bb.is_semisimple() and bb.center_dimension() == 1
    # 50 seeded random solutions with at least three distinct u values at p=4
    rng = DetRNG(107)
    for _ in range(50):
        us = []
        while len(set(us)) < 4:
            us = [rng.fraction(6, 3) for _ in range(4)]
        tau = rng.fraction(6, 3)
        qq = [[us[i] + tau if i != j else Fraction(0) for j in range(4)]
              for i in range(4)]
        vv = [tau * tau + ui * tau for ui in us]
        ok = ok and comm_a_constraints(
            QQ, [QQ(x) for x in us], [QQ(x) for x in vv],
            [[QQ(x) for x in row] for row in qq]).ok
        ok = ok and classify_comm_a(QQ, us, vv, qq).tag == "regular"
    elapsed = time.perf_counter() - start
    _report(7, "commutative-side classification", ok, elapsed)


def test_criterion_8_polynomial_extension():
    start = time.perf_counter()
    ok = True
    scalar_pair = Pencil(zero_algebra(QQ, 1),
                         StructureConstants.from_tensor(QQ, 1, {(0, 0, 0): 1}))
    idem_pair = example_1_3(QQ, [1, 2], [Fraction(1, 2), -1], 1)
    qs = {1: [1, 1], 2: [2, -3, 1], 3: [1, 0, -2, 1]}
    for base in (scalar_pair, idem_pair):
        for m in (1, 2, 3):
            ext = extend_polynomial(base, qs[m])
            ok = ok and ext.is_associative()
            ok = ok and extension_family_compatible(base, m)
        ok = ok and extension_decompose_check(base, [Fraction(1), Fraction(2)])
        ok = ok and extension_decompose_check(base, [Fraction(1, 2), Fraction(3), Fraction(-2)])
    elapsed = time.perf_counter() - start
    _report(8, "polynomial extension", ok, elapsed)


def test_criterion_9_induced_brackets():
    start = time.perf_counter()
    pencil = example_1_3(QQ, [1, 2], [Fraction(1, 2), -1], 1)
    report = check_poisson_pencil(pencil, 2)  # 2 * 4 = 8 coordinates
    ok = report.ok
    elapsed = time.perf_counter() - start
    _report(9, "induced linear brackets", ok and elapsed < 10.0, elapsed, 10)
