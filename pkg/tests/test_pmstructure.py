from fractions import Fraction

import pytest

from pencilalg import QQ, Pencil
from pencilalg import linalg
from pencilalg.matops import verify_tensor_identities
from pencilalg.mstructure import example_cyclic
from pencilalg.pencil import check_compatibility, deform_by_R, example_1_3
from pencilalg.pmstructure import (
    PMElement,
    a2k1_build,
    a2k1_r_operator,
    a2k1_representation,
    direct_sum_algebra,
    example_3_1,
    example_3_1_representation,
    pm_check_K_central,
    pm_check_consistency,
    pm_direct_sum,
    pm_opposite,
    pm_second_product,
    pm_u_multiply,
    pm_validate_representation,
    pm_weak_decompose,
    r_operator_from_rep,
)
from pencilalg.rand import DetRNG
from pencilalg.scalars import CyclotomicField


def ex31(m=2):
    u = [Fraction(i + 1) for i in range(m)]
    t = [Fraction(1)] * m
    return example_3_1(QQ, u, t)


def random_pm_element(pres, rng, terms=3, kmax=1):
    out = PMElement(pres)
    monos = list(pres.basis_monomials())
    for _ in range(terms):
        mono = monos[rng.randint(0, len(monos) - 1)]
        s = rng.randint(0, kmax)
        out.add_term(mono + (s,), pres.field(rng.fraction(4, 3)))
    return out._tidy()


def test_idempotents_multiply():
    pres = ex31(3)
    for a in range(3):
        for b in range(3):
            got = pm_u_multiply(pres.e(a), pres.e(b))
            if a == b:
                assert (got - pres.e(a)).is_zero()
            else:
                assert got.is_zero()


def test_unit_is_neutral():
    pres = ex31(3)
    rng = DetRNG(50)
    one = pres.unit()
    for _ in range(5):
        x = random_pm_element(pres, rng)
        assert (pm_u_multiply(one, x) - x).is_zero()
        assert (pm_u_multiply(x, one) - x).is_zero()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_example_3_1_consistent(m):
    u = [Fraction(2 * i + 1, 2) for i in range(m)]
    t = [Fraction(i + 1) for i in range(m)]
    pres = example_3_1(QQ, u, t)
    assert pm_check_consistency(pres).ok
    assert pm_check_K_central(pres).ok


def test_example_3_1_rejects_bad_parameters():
    with pytest.raises(ValueError):
        example_3_1(QQ, [1, 1], [1, 1])
    with pytest.raises(ValueError):
        example_3_1(QQ, [1, 2], [1, 0])


def test_example_3_1_natural_action_coefficients():
    # in the unnormalized basis: B_{a,b} A_{b,g} has coefficient
    # (u_b - u_g)/(u_a - u_g) on A_{a,g}
    m = 3
    u = [QQ(1), QQ(2), QQ(4)]
    t = [QQ(1), QQ(3), QQ(5)]
    pres = example_3_1(QQ, u, t)

    def omega(a, b):
        return (u[a] - u[b]) / t[b]

    for a in range(m):
        for b in range(m):
            for g in range(m):
                if len({a, b, g}) < 3:
                    continue
                natural = omega(b, a) * pres.psi_c(g, a, b, 0, 0, 0)
                want = (u[b] - u[g]) / (u[a] - u[g])
                assert (natural - want).is_zero()


def test_example_3_1_pairing_case():
    # B_{a,b} A_{b,a} = e_a + (u_b - u_a) C_a, checked in normalized form
    pres = ex31(2)
    got = pm_u_multiply(pres.gen_b(0, 1, 0), pres.gen_a(1, 0, 0))
    want = pres.e(0).scale(pres.t_c(0, 1, 0, 0)) + pres.c_element(0)
    assert (got - want).is_zero()


@pytest.mark.parametrize("m", [2, 3])
def test_pm_associativity_random(m):
    pres = ex31(m)
    rng = DetRNG(51 + m)
    for _ in range(10):
        x = random_pm_element(pres, rng)
        y = random_pm_element(pres, rng)
        z = random_pm_element(pres, rng)
        lhs = pm_u_multiply(pm_u_multiply(x, y), z)
        rhs = pm_u_multiply(x, pm_u_multiply(y, z))
        assert (lhs - rhs).is_zero()


def test_pm_consistency_detects_perturbation():
    pres = ex31(2)
    pres.t[(0, 1)][0][0] = pres.t[(0, 1)][0][0] + QQ(1)
    pres._cache.clear()
    assert not pm_check_K_central(pres).ok


def test_m1_block_matches_single_block_machinery():
    # a size-1 presentation built from the cyclic ladder agrees with the
    # single-block cyclic example up to a constant diagonal shift in t,
    # which is the remaining gauge freedom of the central element
    k = 3
    field = CyclotomicField(k)
    pm = a2k1_build(k, 1, [1], [1], field)
    single = example_cyclic(k - 1, field)
    t = single.tensors
    p = k - 1
    gauge = pm.t_c(0, 0, 0, 0) - t.t[0][0]
    for i in range(p):
        for j in range(p):
            assert pm.mu_c(0, 0, i, j) == t.mu[i][j]
            assert pm.lam_c(0, 0, i, j) == t.lam[i][j]
            want = t.t[i][j] + (gauge if i == j else field.zero())
            assert pm.t_c(0, 0, i, j) == want
            for kk in range(p):
                assert pm.phi_c(0, 0, 0, i, j, kk) == t.phi[i][j][kk]
                assert pm.psi_c(0, 0, 0, i, j, kk) == t.psi[i][j][kk]
    assert pm_check_consistency(pm).ok
    assert verify_tensor_identities(t).ok


def test_k1_reduces_to_rank_one_family():
    lam = [Fraction(1), Fraction(3)]
    t = [Fraction(2), Fraction(5)]
    pm = a2k1_build(1, 2, lam, t, QQ)
    other = example_3_1(QQ, lam, [-x for x in t])
    assert pm.p == other.p
    for key in set(pm.phi) | set(other.phi):
        assert pm.phi[key] == other.phi[key]
    for key in set(pm.psi) | set(other.psi):
        assert pm.psi[key] == other.psi[key]
    for key in set(pm.mu) | set(other.mu):
        assert pm.mu[key] == other.mu[key]
    for key in set(pm.lam) | set(other.lam):
        assert pm.lam[key] == other.lam[key]
    for key in set(pm.t) | set(other.t):
        assert pm.t[key] == other.t[key]


@pytest.mark.parametrize("k,m", [(1, 2), (2, 1), (2, 2), (3, 2)])
def test_a2k1_consistent(k, m):
    lam = [Fraction(i + 1) for i in range(m)]
    t = [Fraction(1)] * m
    pres = a2k1_build(k, m, lam, t)
    assert pm_check_consistency(pres).ok
    assert pm_check_K_central(pres).ok


def test_a2k1_associativity_random():
    pres = a2k1_build(2, 2, [1, 2], [1, 1])
    rng = DetRNG(60)
    for _ in range(8):
        x = random_pm_element(pres, rng)
        y = random_pm_element(pres, rng)
        z = random_pm_element(pres, rng)
        assert (pm_u_multiply(pm_u_multiply(x, y), z)
                - pm_u_multiply(x, pm_u_multiply(y, z))).is_zero()


def test_a2k1_genericity_errors():
    with pytest.raises(ValueError):
        a2k1_build(2, 2, [1, -1], [1, 1])  # equal squares
    with pytest.raises(ValueError):
        a2k1_build(2, 2, [1, 2], [0, 1])
    with pytest.raises(ValueError):
        a2k1_build(2, 1, [0], [1])


def test_a2k1_representation_m1_validates():
    field = CyclotomicField(2)
    pres = a2k1_build(2, 1, [3], [1], field)
    rep = a2k1_representation(2, 1, [3], [1], 1, field)
    report = pm_validate_representation(pres, rep)
    assert report.ok


def test_a2k1_representation_precondition():
    with pytest.raises(ValueError):
        a2k1_representation(2, 1, [1], [1], 1)  # s = lam_0


def test_a2k1_k2_m2_end_to_end():
    field = CyclotomicField(2)
    lam, t, s = [1, 2], [1, 1], 3
    pres = a2k1_build(2, 2, lam, t, field)
    rep = a2k1_representation(2, 2, lam, t, s, field)
    report = pm_validate_representation(pres, rep)
    assert report.ok
    circle = pm_second_product(rep)
    star = direct_sum_algebra(rep)
    assert check_compatibility(Pencil(star, circle)).ok
    # generic split operator reproduces the product
    via_generic = deform_by_R(star, r_operator_from_rep(rep))
    assert via_generic.table == circle.table
    # the explicit blockwise operator reproduces it as well
    via_explicit = deform_by_R(star, a2k1_r_operator(rep))
    assert via_explicit.table == circle.table


def test_a2k1_r_linear_in_t():
    field = CyclotomicField(2)
    lam, s = [1, 2], 3
    rep = a2k1_representation(2, 2, lam, [1, 1], s, field)
    # operators for monomial t-vectors sum to the full one
    full = a2k1_r_operator(rep)
    mono = [a2k1_r_operator(rep, [1, 0]), a2k1_r_operator(rep, [0, 1])]
    summed = linalg.mat_add(mono[0], mono[1])
    assert all((x - y).is_zero() for rx, ry in zip(full, summed)
               for x, y in zip(rx, ry))


def test_a2k1_monomial_t_products_pairwise_compatible():
    field = CyclotomicField(2)
    lam, s = [1, 2], 3
    rep = a2k1_representation(2, 2, lam, [1, 1], s, field)
    star = direct_sum_algebra(rep)
    members = [star]
    for alpha in range(2):
        tmono = [1 if i == alpha else 0 for i in range(2)]
        members.append(deform_by_R(star, a2k1_r_operator(rep, tmono)))
    from pencilalg.pencil import mixed_associator_residual

    for i in range(len(members)):
        assert members[i].associator_residual().zero
        for j in range(i + 1, len(members)):
            assert mixed_associator_residual(members[i], members[j]).zero


def test_example_3_1_representation_gives_diagonal_family():
    m = 3
    u = [Fraction(1), Fraction(2), Fraction(4)]
    t = [Fraction(1), Fraction(1), Fraction(2)]
    pres = example_3_1(QQ, u, t)
    rep = example_3_1_representation(QQ, u, t)
    assert pm_validate_representation(pres, rep).ok
    # the induced product on the diagonal algebra matches the classical
    # family with p = u, q = -t/u off the diagonal; the diagonal differs by
    # an inner deformation x (sum d_i e_i) y
    rop = r_operator_from_rep(rep)
    p_params = u
    q_params = [-t[i] / u[i] for i in range(m)]
    for a in range(m):
        for b in range(m):
            if a != b:
                want = QQ(q_params[a]) * QQ(p_params[b]) / QQ(p_params[a] - p_params[b])
                assert (rop[b][a] - want).is_zero()
    q0 = sum((rop[0][k] for k in range(1, m)), rop[0][0])
    classical = example_1_3(QQ, p_params, q_params, q0)
    circle = pm_second_product(rep)
    star = direct_sum_algebra(rep)
    assert check_compatibility(Pencil(star, circle)).ok
    d = [sum((rop[a][k] for k in range(1, m)), rop[a][0]) - q0 for a in range(m)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                diff = circle.table[i][j][k] - classical.circle.table[i][j][k]
                want = d[i] if (i == j == k) else QQ(0)
                assert (diff - want).is_zero()


def test_pm_direct_sum():
    l1 = ex31(2)
    l2 = a2k1_build(1, 2, [1, 5], [1, 1], QQ)
    total = pm_direct_sum(l1, l2)
    assert total.m == 4
    assert pm_check_consistency(total).ok
    assert pm_check_K_central(total).ok


def test_pm_opposite_involution():
    pres = a2k1_build(2, 2, [1, 2], [1, 3])
    opp = pm_opposite(pres)
    assert pm_check_consistency(opp).ok
    back = pm_opposite(opp)
    assert back.p == pres.p
    assert back.phi == pres.phi
    assert back.psi == pres.psi
    assert back.mu == pres.mu
    assert back.lam == pres.lam
    assert back.t == pres.t


def test_pm_weak_decompose_dims():
    pres = ex31(3)
    report = pm_weak_decompose(pres)
    assert report["ok"]
    for a in range(3):
        for b in range(3):
            assert report["blocks"][(a, b)]["dim"] == 2
    pres = a2k1_build(3, 2, [1, 2], [1, 1])
    report = pm_weak_decompose(pres)
    assert report["ok"]
    for a in range(2):
        for b in range(2):
            assert report["blocks"][(a, b)]["a_dim"] == 3


def test_pm_m1_trivial_decompose():
    pres = a2k1_build(2, 1, [1], [1])
    report = pm_weak_decompose(pres)
    assert report["ok"]
    assert len(report["blocks"]) == 1


def test_pm_second_product_m1_reduces_to_single_block():
    from pencilalg.matops import RPresentation, second_product

    field = CyclotomicField(2)
    rep = a2k1_representation(2, 1, [3], [1], 1, field)
    circle_pm = pm_second_product(rep)
    single = RPresentation(2, rep.amats[(0, 0)], rep.bmats[(0, 0)], rep.cmats[0], field)
    circle_single = second_product(single)
    assert circle_pm.table == circle_single.table


def test_a2k1_k3_m2_representation_end_to_end():
    field = CyclotomicField(3)
    lam, t, s = [1, 2], [1, 1], 3
    pres = a2k1_build(3, 2, lam, t, field)
    rep = a2k1_representation(3, 2, lam, t, s, field)
    assert pm_validate_representation(pres, rep).ok
    circle = pm_second_product(rep)
    star = direct_sum_algebra(rep)
    assert check_compatibility(Pencil(star, circle)).ok


def test_pm_direct_sum_with_empty_structure():
    from pencilalg.pmstructure import PMPresentation

    pres = ex31(2)
    empty = PMPresentation(QQ, 0, [], {}, {}, {}, {}, {})
    total = pm_direct_sum(pres, empty)
    assert total.m == 2
    assert total.p == pres.p
    assert total.phi == pres.phi and total.t == pres.t
    total2 = pm_direct_sum(empty, pres)
    assert total2.m == 2
    assert total2.p == pres.p


def test_a2k1_random_generic_parameters_end_to_end():
    field = CyclotomicField(2)
    rng = DetRNG(77)
    done = 0
    while done < 3:
        lam = [rng.nonzero_fraction(5, 3) for _ in range(2)]
        t = [rng.nonzero_fraction(5, 3) for _ in range(2)]
        s = rng.nonzero_fraction(5, 3)
        if lam[0] ** 2 == lam[1] ** 2:
            continue
        if any(s * e == l for e in (1, -1) for l in lam):
            continue
        pres = a2k1_build(2, 2, lam, t, field)
        rep = a2k1_representation(2, 2, lam, t, s, field)
        assert pm_check_consistency(pres).ok
        assert pm_validate_representation(pres, rep).ok
        circle = pm_second_product(rep)
        star = direct_sum_algebra(rep)
        assert check_compatibility(Pencil(star, circle)).ok
        done += 1


def test_pm_validate_detects_perturbations():
    field = CyclotomicField(2)
    lam, t, s = [1, 2], [1, 1], 3
    pres = a2k1_build(2, 2, lam, t, field)

    rep = a2k1_representation(2, 2, lam, t, s, field)
    rep.cmats[0][0][0] = rep.cmats[0][0][0] + field.one()
    report = pm_validate_representation(pres, rep)
    assert not report.residuals["c-products"].zero
    assert not report.residuals["k-central"].zero

    rep = a2k1_representation(2, 2, lam, t, s, field)
    rep.bmats[(0, 1)][0][0][0] = rep.bmats[(0, 1)][0][0][0] + field.one()
    report = pm_validate_representation(pres, rep)
    assert not report.ok


def test_pm_opposite_products_are_reversed():
    # products of the swapped generators equal the reversed originals:
    # A'_{i,a,b} *' A'_{j,b,g} corresponds to B^j_{g,b} B^i_{b,a}
    pres = a2k1_build(2, 2, [1, 2], [1, 3])
    opp = pm_opposite(pres)
    m = pres.m
    for a in range(m):
        for b in range(m):
            for g in range(m):
                for i in range(opp.adim(a, b)):
                    for j in range(opp.adim(b, g)):
                        got = pm_u_multiply(opp.gen_a(a, b, i), opp.gen_a(b, g, j))
                        want = pm_u_multiply(pres.gen_b(g, b, j), pres.gen_b(b, a, i))
                        # map the original B-monomials to primed A-monomials
                        mapped = {}
                        for (kind, x, y, nu, ii, jj, ss), v in want.terms.items():
                            assert kind in ("B", "e")
                            if kind == "B":
                                mapped[("A", y, x, -1, jj, -1, ss)] = v
                            else:
                                mapped[(kind, x, y, nu, ii, jj, ss)] = v
                        assert got.terms == mapped
                for i in range(opp.bdim(a, b)):
                    for j in range(opp.bdim(b, g)):
                        got = pm_u_multiply(opp.gen_b(a, b, i), opp.gen_b(b, g, j))
                        want = pm_u_multiply(pres.gen_a(g, b, j), pres.gen_a(b, a, i))
                        mapped = {}
                        for (kind, x, y, nu, ii, jj, ss), v in want.terms.items():
                            assert kind in ("A", "e")
                            if kind == "A":
                                mapped[("B", y, x, -1, -1, ii, ss)] = v
                            else:
                                mapped[(kind, x, y, nu, ii, jj, ss)] = v
                        assert got.terms == mapped
