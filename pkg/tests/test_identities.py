import random
from fractions import Fraction as F

from reflectice.scalar import sample_param_point
from reflectice import formulas, vertex
from reflectice.lattice import dual_wavefunction, wavefunction
from reflectice.identities import (verify_all, verify_b_commutation,
                                   verify_dual_cauchy,
                                   verify_dwbp_factorization,
                                   verify_ik_properties,
                                   verify_local_relations,
                                   verify_main_correspondence,
                                   verify_one_particle,
                                   verify_telescoping_lemma)


def test_telescoping_lemma_verifier():
    for seed in range(3):
        report = verify_telescoping_lemma(seed, max_x1=10)
        assert report.all_passed and report.instances == 10


def test_telescoping_trivial_case():
    rng = random.Random(4)
    z = F(rng.randint(2, 9), rng.randint(1, 9))
    alpha = [F(rng.randint(1, 5)) for _ in range(3)]
    gamma = [F(rng.randint(1, 5)) for _ in range(3)]
    lhs, rhs = formulas.telescoping_sides(z, alpha, gamma, 1)
    assert lhs == 0 and rhs == 0


def test_one_particle_small():
    for kind in ("I", "II"):
        for dual in (False, True):
            report = verify_one_particle(kind, dual, 0, M=4)
            assert report.all_passed, report.first_failure


def test_one_particle_zero_params_specialization():
    # the undeformed boundary case
    point = sample_param_point(6, 3, 1)
    zeroed = type(point)(point.M, point.N, point.t, point.z,
                         [F(0)] * (point.M + 1), [F(0)] * (point.M + 1))
    for x1 in range(1, 4):
        assert wavefunction("I", zeroed, [x1]) == \
            formulas.one_particle_wavefunction("I", zeroed, x1)


def test_ik_properties_small():
    for kind in ("I", "II"):
        for dual in (False, True):
            report = verify_ik_properties(kind, dual, 1, 3, 2)
            assert report.all_passed, report.first_failure


def test_main_correspondence_small():
    for kind in ("I", "II"):
        for dual in (False, True):
            report = verify_main_correspondence(kind, dual, 2, 4, 2)
            assert report.all_passed, report.first_failure


def test_dwbp_factorization_small():
    for kind in ("I", "II"):
        report = verify_dwbp_factorization(kind, 3, 3)
        assert report.all_passed, report.first_failure


def test_dual_cauchy_small():
    for kind in ("I", "II"):
        for (N, M) in ((1, 1), (2, 2), (1, 3)):
            report = verify_dual_cauchy(kind, 4, N, M)
            assert report.all_passed, report.first_failure


def test_b_commutation_small():
    for kind in ("I", "II"):
        report = verify_b_commutation(kind, 5, 4)
        assert report.all_passed, report.first_failure


def test_local_relations():
    report = verify_local_relations(6, count=5)
    assert report.all_passed, report.first_failure


def test_verify_all_smoke():
    reports = verify_all(7, max_M=3, max_N=2)
    assert reports == sorted(reports, key=lambda r: r.identity_id)
    assert all(r.all_passed for r in reports)
    ids = [r.identity_id for r in reports]
    assert "main-correspondence-I" in ids
    assert "dual-cauchy-II" in ids


def test_verify_all_parallel_matches_serial():
    serial = verify_all(7, max_M=3, max_N=2, jobs=1)
    parallel = verify_all(7, max_M=3, max_N=2, jobs=4)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


def test_corruption_is_detected():
    vertex.set_corruption(("l_gamma", 2, 2))
    try:
        reports = verify_all(7, max_M=3, max_N=2)
        assert any(not r.all_passed for r in reports)
    finally:
        vertex.set_corruption(None)


def test_completeness_relation_reconstructs_dwbp():
    # summing dual x primal over all splittings of the site set
    import itertools
    from reflectice.lattice import dwbp
    from reflectice.scalar import ParamPoint
    for kind, mode in (("I", "typeI"), ("II", "typeII")):
        for M in (2, 3, 4):
            point = sample_param_point(50 + M, M, M, mode=mode)
            expect = dwbp(kind, point)
            for n in range(M + 1):
                head = ParamPoint(M, M - n, point.t, point.z[:M - n],
                                  point.alpha, point.gamma, point.u,
                                  None if point.w is None
                                  else point.w[:M - n])
                tail = ParamPoint(M, n, point.t, point.z[M - n:],
                                  point.alpha, point.gamma, point.u,
                                  None if point.w is None
                                  else point.w[M - n:])
                total = F(0)
                for pos in itertools.combinations(range(1, M + 1), n):
                    comp = [j for j in range(1, M + 1) if j not in pos]
                    total += dual_wavefunction(kind, head, comp) \
                        * wavefunction(kind, tail, list(pos))
                assert total == expect
