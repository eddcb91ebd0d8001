from fractions import Fraction as F

import pytest

from reflectice.scalar import sample_param_point
from reflectice import vertex
from reflectice.vertex import (REFLECTION_CONVENTION, calibrate_reflection,
                               check_reflection, check_rll,
                               check_yang_baxter_general,
                               free_fermion_condition,
                               is_free_fermionic_sparse, k_type1, k_type2,
                               l_delta, l_gamma, r_general, r_t)


def rand_scalars(seed, n):
    import random
    rng = random.Random(seed)
    return [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]


def test_r_general_specializes_to_r_t():
    for s in range(10):
        z, p = rand_scalars(s, 2)
        assert r_general(z, p, p) == r_t(z, -p * p)


def test_r_general_vanishes_at_unit_point():
    assert r_general(F(1), F(1), F(1)) == [[F(0)] * 4 for _ in range(4)]


def test_r_t_at_z_one():
    t = F(5, 3)
    m = r_t(F(1), t)
    assert m[0][0] == 1 + t and m[3][3] == 1 + t
    assert m[1][1] == 0 and m[2][2] == 0
    assert m[1][2] == t + 1 and m[2][1] == t + 1


def test_l_gamma_special_limits():
    z, t = F(5, 2), F(7, 3)
    base = l_gamma(z, t, F(0), F(0))
    assert base[0][0] == 1 and base[2][2] == z and base[3][3] == z
    fact = l_gamma(z, t, F(2), F(0))
    assert fact[2][2] == 2 + z and fact[3][3] == -2 * t + z


def test_l_delta_at_z_zero():
    m = l_delta(F(0), F(3), F(5), F(7))
    assert m[0][0] == 5 and m[1][1] == -5
    assert m[1][2] == 1 and m[2][2] == 1 and m[3][3] == 1


def test_free_fermion_structure():
    for s in range(10):
        z, t, a, g = rand_scalars(s + 50, 4)
        for op in (r_t(z, t), l_gamma(z, t, a, g), l_delta(z, t, a, g)):
            assert is_free_fermionic_sparse(op)
            assert free_fermion_condition(op)


def test_k_matrices():
    assert k_type1(F(2), F(3), F(1), F(1)) == [[F(-1), F(0)], [F(0), F(1)]]
    z, t = F(5, 2), F(7, 3)
    assert k_type1(z, t, F(0), F(0)) == [[t * z, F(0)], [F(0), 1 / z]]
    assert k_type2(F(2), F(3)) == [[F(-6), F(0)], [F(0), F(1, 2)]]
    w, u = rand_scalars(3, 2)
    k = k_type2(w, u)
    assert k[0][0] * k[1][1] == -u


def test_k_matrix_zero_argument_rejected():
    with pytest.raises(ZeroDivisionError):
        k_type1(F(0), F(3), F(0), F(0))
    with pytest.raises(ZeroDivisionError):
        k_type2(F(0), F(3))


def test_yang_baxter_general():
    for s in range(20):
        z1, z2, p1, p2 = rand_scalars(s + 100, 4)
        assert check_yang_baxter_general(z1, z2, p1, p2)


def test_rll_relation():
    for s in range(20):
        z1, z2, t, a, g = rand_scalars(s + 200, 5)
        assert check_rll(z1, z2, t, a, g)


def test_rll_scalar_relation():
    # the local identity that makes the exchange relation close
    for s in range(20):
        zi, zk, t, a, g = rand_scalars(s + 300, 5)
        lhs = t * zi + zk
        rhs = (1 - g * zi) * (-t * a + (1 - a * g) * zk) \
            + (a + (1 - a * g) * zi) * (t + g * zk)
        assert lhs == rhs


def test_reflection_both_kinds():
    for s in range(20):
        p1 = sample_param_point(s, 1, 2)
        assert check_reflection("I", p1, p1.z[0], p1.z[1])
        p2 = sample_param_point(s, 1, 2, mode="typeII")
        assert check_reflection("II", p2, p2.w[0], p2.w[1])


def test_reflection_calibration_is_unique():
    points = []
    for s in range(12):
        p1 = sample_param_point(s, 1, 2)
        points.append(("I", p1.t, p1.z[0], p1.z[1],
                       p1.alpha[0], p1.gamma[0]))
        p2 = sample_param_point(s + 40, 1, 2, mode="typeII")
        points.append(("II", p2.u, p2.w[0], p2.w[1], F(0), F(0)))
    survivors = calibrate_reflection(points)
    assert survivors == [REFLECTION_CONVENTION]


def test_corruption_breaks_local_relations():
    z1, z2, p1, p2 = rand_scalars(7, 4)
    vertex.set_corruption(("r_general", 1, 1))
    try:
        assert not check_yang_baxter_general(z1, z2, p1, p2)
    finally:
        vertex.set_corruption(None)
    assert check_yang_baxter_general(z1, z2, p1, p2)
