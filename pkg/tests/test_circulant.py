import random
from fractions import Fraction

import pytest

from trace_cotrace.circulant import (
    LeftCirculant,
    det_eigen,
    det_exact,
    gauss_det,
    gauss_solve,
    invert_exact,
    mat_mul,
    row_sum_reciprocal_check,
    xy_det,
)
from trace_cotrace.cyclotomic import CycloNum, zeta_pow
from trace_cotrace.errors import SingularMatrixError
from trace_cotrace.kloosterman import kloosterman_prime
from trace_cotrace.prime_field import primitive_root


def rat(v, p=5):
    return CycloNum.from_rational(v, p)


def k_matrix(p):
    """The coefficient circulant: first row K(g^l) + p + 1."""
    g = primitive_root(p).value
    return LeftCirculant(
        tuple(kloosterman_prime(pow(g, l, p), p) + (p + 1) for l in range(p - 1))
    )


def k_prime_matrix(p):
    g = primitive_root(p).value
    return LeftCirculant(tuple(kloosterman_prime(pow(g, l, p), p) for l in range(p - 1)))


def random_cyclo(rng, p=5, height=10):
    return CycloNum(
        p, [Fraction(rng.randint(-height, height), rng.randint(1, 4)) for _ in range(p - 1)]
    )


def test_rows_and_symmetry():
    m = LeftCirculant((rat(1), rat(2), rat(3), rat(4)))
    rows = m.rows()
    assert [c.as_rational() for c in rows[1]] == [2, 3, 4, 1]
    assert [c.as_rational() for c in rows[3]] == [4, 1, 2, 3]
    for i in range(4):
        for j in range(4):
            assert m.entry(i, j) == m.entry(j, i)


def test_det_exact_examples():
    # K' for p=3: first row (K(1), K(2)) = (-1, 2)
    assert det_exact(k_prime_matrix(3)).as_rational() == -3
    # K for p=3: first row (3, 6)
    assert det_exact(k_matrix(3)).as_rational() == -27
    # 1x1 for p=2: K(1) + 3 = 4
    assert det_exact(k_matrix(2)).as_rational() == 4


def test_det_exact_agrees_with_hand_2x2():
    m = LeftCirculant((rat(3), rat(6)))
    # left-circulant ((3,6),(6,3)): det = 9 - 36
    assert det_exact(m).as_rational() == -27


def test_det_eigen_agrees_with_exact():
    rng = random.Random(11)
    for n in (1, 2, 3, 4, 6):
        first_row = tuple(random_cyclo(rng) for _ in range(n))
        m = LeftCirculant(first_row)
        exact = det_exact(m).embed_complex()
        eigen = det_eigen(m)
        scale = max(1.0, abs(exact))
        assert abs(exact - eigen) / scale < 1e-6


def test_det_eigen_sign_example():
    m = k_prime_matrix(3)
    assert det_eigen(m).real == pytest.approx(-3.0, abs=1e-9)


def test_det_singular_is_zero():
    ones = LeftCirculant((rat(1), rat(1), rat(1)))
    assert det_exact(ones).is_zero()
    assert abs(det_eigen(ones)) < 1e-9


def test_invert_exact_examples():
    one_by_one = invert_exact(k_matrix(2))
    assert one_by_one.first_row[0].as_rational() == Fraction(1, 4)

    inv3 = invert_exact(k_matrix(3))
    assert [c.as_rational() for c in inv3.first_row] == [
        Fraction(-1, 9),
        Fraction(2, 9),
    ]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_invert_exact_identity(p):
    m = k_matrix(p)
    inv = invert_exact(m)
    product = mat_mul(m.rows(), inv.rows())
    n = m.n
    for i in range(n):
        for j in range(n):
            expected = CycloNum.one(p) if i == j else CycloNum.zero(p)
            assert product[i][j] == expected


def test_invert_singular_raises():
    with pytest.raises(SingularMatrixError):
        invert_exact(LeftCirculant((rat(1), rat(1), rat(1))))


def test_row_sum_reciprocal_examples():
    rep = row_sum_reciprocal_check(k_matrix(3))
    assert rep.forward_sum.as_rational() == 9
    assert rep.inverse_sum.as_rational() == Fraction(1, 9)
    assert rep.reciprocal

    rep = row_sum_reciprocal_check(k_matrix(2))
    assert rep.forward_sum.as_rational() == 4
    assert rep.inverse_sum.as_rational() == Fraction(1, 4)
    assert rep.reciprocal

    rep = row_sum_reciprocal_check(k_matrix(5))
    assert rep.forward_sum.as_rational() == 25
    assert rep.inverse_sum.as_rational() == Fraction(1, 25)
    assert rep.reciprocal


def test_row_sum_reciprocal_random():
    rng = random.Random(5)
    for _ in range(10):
        m = LeftCirculant(tuple(random_cyclo(rng) for _ in range(3)))
        if det_exact(m).is_zero():
            continue
        assert row_sum_reciprocal_check(m).reciprocal


def test_xy_det_examples():
    assert xy_det(2, rat(3), rat(1)).as_rational() == 8
    for n in (2, 3, 5):
        x = rat(7)
        assert xy_det(n, x, x).is_zero()
    # p = 5 instance of the squared-determinant identity
    p = 5
    value = xy_det(p - 1, rat(p * p - p - 1), rat(-p - 1))
    assert value.as_rational() == p ** (2 * (p - 2))


def xy_matrix(n, x, y):
    return [[x if i == j else y for j in range(n)] for i in range(n)]


def test_xy_det_matches_elimination():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(1, 6)
        x, y = random_cyclo(rng), random_cyclo(rng)
        assert gauss_det(xy_matrix(n, x, y)) == xy_det(n, x, y)


def test_gauss_solve_known_system():
    # ((3,6),(6,3)) t = (15,12) has the unique solution (1, 2)
    p = 3
    rows = [
        [CycloNum.from_rational(3, p), CycloNum.from_rational(6, p)],
        [CycloNum.from_rational(6, p), CycloNum.from_rational(3, p)],
    ]
    rhs = [CycloNum.from_rational(15, p), CycloNum.from_rational(12, p)]
    solution = gauss_solve(rows, rhs)
    assert [s.as_rational() for s in solution] == [1, 2]


def test_gauss_solve_singular_raises():
    p = 5
    row = [CycloNum.one(p), CycloNum.one(p)]
    with pytest.raises(SingularMatrixError):
        gauss_solve([row, row], [CycloNum.one(p), CycloNum.zero(p)])


def test_gauss_det_needs_column_pivot():
    # leading zero in the first column exercises full pivoting
    p = 5
    z = CycloNum.zero(p)
    a = zeta_pow(1, p)
    rows = [[z, a], [a, z]]
    det = gauss_det(rows)
    assert det == -(a * a)
