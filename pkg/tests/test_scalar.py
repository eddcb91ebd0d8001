from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflectice.scalar import (format_scalar, interpolate_univariate,
                               parse_scalar, poly_degree, poly_eval,
                               sample_param_point, SamplingError)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20)


def test_parse_and_format_roundtrip():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-7") == Fraction(-7)
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(5)) == "5"
    assert format_scalar(Fraction(-6, 4)) == "-3/2"


@given(rationals)
def test_format_parse_identity(x):
    assert parse_scalar(format_scalar(x)) == x


@given(rationals, rationals, rationals)
def test_field_axioms_spot_check(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


def test_sampling_is_deterministic():
    p1 = sample_param_point(1, 1, 1)
    p2 = sample_param_point(1, 1, 1)
    assert p1 == p2


def test_sampling_seeds_differ():
    points = {repr(sample_param_point(s, 2, 2)) for s in range(100)}
    assert len(points) == 100


def test_sampling_type2_branches():
    p = sample_param_point(7, 3, 2, mode="typeII")
    assert -p.u * p.u == p.t
    for wj, zj in zip(p.w, p.z):
        assert wj * wj == zj


def test_sampling_avoids_degeneracies():
    for s in range(30):
        p = sample_param_point(s, 2, 2)
        assert p.t not in (0, 1, -1)
        for z in p.z:
            assert z not in (0, 1, -1)
            assert p.t * z not in (1, -1)
        assert p.z[0] != p.z[1]
        assert p.z[0] * p.z[1] != 1


def test_sampling_retry_budget():
    with pytest.raises(SamplingError):
        # bounds of 2 cannot supply five mutually non-reciprocal z's
        sample_param_point(0, 1, 5, bounds=2, max_tries=50)


def test_interpolation_examples():
    assert interpolate_univariate([(0, 1), (1, 2), (2, 3)]) == [1, 1]
    assert interpolate_univariate([(1, 5)]) == [5]
    cubic = interpolate_univariate([(0, 0), (1, 1), (2, 8), (-1, -1)])
    assert cubic == [0, 0, 0, 1]


def test_interpolation_rejects_duplicates():
    with pytest.raises(ValueError):
        interpolate_univariate([(1, 1), (1, 2)])


@settings(max_examples=100)
@given(st.lists(rationals, min_size=1, max_size=9))
def test_interpolation_recovers_polynomials(coeffs):
    deg = len(coeffs) - 1
    xs = [Fraction(k) for k in range(deg + 1)]
    samples = [(x, poly_eval(coeffs, x)) for x in xs]
    recovered = interpolate_univariate(samples)
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    assert recovered == trimmed
    assert poly_degree(recovered) <= deg
