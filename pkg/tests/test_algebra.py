from fractions import Fraction

import pytest

from pencilalg import (
    QQ,
    Pencil,
    StructureConstants,
    adjoin_unity,
    direct_sum,
    matn_lift,
    matrix_algebra,
    zero_algebra,
)
from pencilalg.pencil import check_compatibility, example_1_3
from pencilalg.rand import DetRNG


def unit_vec(d, i):
    return [QQ(1) if h == i else QQ(0) for h in range(d)]


def test_matrix_units_multiply():
    m2 = matrix_algebra(QQ, 2)
    e12 = unit_vec(4, 0 * 2 + 1)
    e21 = unit_vec(4, 1 * 2 + 0)
    assert m2.multiply(e12, e21) == unit_vec(4, 0)  # E11


def test_multiply_dimension_mismatch():
    m2 = matrix_algebra(QQ, 2)
    with pytest.raises(ValueError):
        m2.multiply([QQ(1)], [QQ(1)] * 4)


def test_multiply_matches_tensor_contraction():
    rng = DetRNG(7)
    d = 3
    table = [[[QQ(rng.fraction(3, 2)) for _ in range(d)] for _ in range(d)]
             for _ in range(d)]
    sc = StructureConstants(QQ, table)
    x = [QQ(rng.fraction()) for _ in range(d)]
    y = [QQ(rng.fraction()) for _ in range(d)]
    got = sc.multiply(x, y)
    # independent triple-loop contraction
    want = [QQ(0)] * d
    for i in range(d):
        for j in range(d):
            for k in range(d):
                want[k] = want[k] + x[i] * y[j] * table[i][j][k]
    assert got == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matrix_algebra_associative(n):
    assert matrix_algebra(QQ, n).associator_residual().zero


def test_perturbed_matrix_algebra_not_associative():
    m2 = matrix_algebra(QQ, 2)
    m2.table[0][1][2] = m2.table[0][1][2] + QQ(1)
    res = m2.associator_residual()
    assert not res.zero
    assert res.witness is not None


def test_idempotent_star_products():
    p = example_1_3(QQ, [1, 2, 3], [Fraction(1, 2), 1, 2], 3)
    star = p.star
    for i in range(3):
        for j in range(3):
            want = unit_vec(3, i) if i == j else [QQ(0)] * 3
            assert star.table[i][j] == want


def test_find_unity():
    m3 = matrix_algebra(QQ, 3)
    u = m3.find_unity()
    assert u == [QQ(1) if r == c else QQ(0) for r in range(3) for c in range(3)]
    star = example_1_3(QQ, [1, 2], [0, 0], 0).star
    assert star.find_unity() == [QQ(1), QQ(1)]
    assert zero_algebra(QQ, 2).find_unity() is None


def test_semisimple():
    assert matrix_algebra(QQ, 2).is_semisimple()
    two_fields = direct_sum(matrix_algebra(QQ, 1), matrix_algebra(QQ, 1))
    assert two_fields.is_semisimple()
    # 2-dim algebra spanned by 1 and x with x^2 = 0 is not semi-simple
    nil = StructureConstants.from_tensor(
        QQ, 2, {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1})
    assert nil.find_unity() is not None
    assert not nil.is_semisimple()


def test_center_dimension():
    assert matrix_algebra(QQ, 2).center_dimension() == 1
    cc = direct_sum(matrix_algebra(QQ, 1), matrix_algebra(QQ, 1))
    assert cc.center_dimension() == 2
    assert direct_sum(matrix_algebra(QQ, 2), matrix_algebra(QQ, 3)).center_dimension() == 2


def test_adjoin_unity():
    nil = zero_algebra(QQ, 1)
    ext = adjoin_unity(nil)
    assert ext.find_unity() == [QQ(1), QQ(0)]
    assert ext.is_associative()


def test_matn_lift_trivial_cases():
    p = example_1_3(QQ, [1, 2], [1, 2], 1)
    lifted = matn_lift(p, 1)
    assert lifted.star.table == p.star.table
    assert lifted.circle.table == p.circle.table

    # dim-1 trivial pair, n = 2: star lifts to the zero algebra, circle to Mat_2
    star = zero_algebra(QQ, 1)
    circle = StructureConstants.from_tensor(QQ, 1, {(0, 0, 0): 1})
    lifted = matn_lift(Pencil(star, circle), 2)
    assert lifted.star.table == zero_algebra(QQ, 4).table
    assert lifted.circle.table == matrix_algebra(QQ, 2).table


def test_matn_lift_preserves_compatibility():
    p = example_1_3(QQ, [1, 2], [Fraction(2, 3), -1], 2)
    assert check_compatibility(p).ok
    lifted = matn_lift(p, 2)
    assert lifted.dim == 8
    assert check_compatibility(lifted).ok


def test_commutative_second_algebra_p2_semisimple():
    # two-generator commutative case of the constraint system
    from pencilalg.mstructure import comm_a_build

    res = comm_a_build(QQ, [0, 0], [1, 1], [[0, -1], [1, 0]])
    bb = res.algebra_b
    assert bb.dim == 3
    assert bb.is_associative()
    assert bb.center_dimension() == bb.dim
    assert bb.is_semisimple()
