import cmath
import math

import pytest

import hyperq


def test_cf_at_zero_is_one():
    assert abs(hyperq.cf_pure(2, 1.0, 1.5, 1, 0.0) - 1) < 1e-13
    assert abs(hyperq.cf_mixed(0.7, 1.0, 1.5, 1, 0.0) - 1) < 1e-13


def test_ground_level_beta_density():
    R2, b = 2.25, 3.5
    x = 0.3
    want = math.exp(math.lgamma(1 + b) - math.lgamma(b)) * (1 - x) ** (b - 1) / R2
    assert hyperq.density_pure(0, 1.0, 1.5, 0, x * R2) == pytest.approx(want, rel=1e-12)


def test_density_integrates_to_one():
    n = 4000
    R2 = 2.25
    h = R2 / n
    s = sum(hyperq.density_mixed(0.7, 1.0, 1.5, 1, (i + 0.5) * h) for i in range(n)) * h
    assert s == pytest.approx(1.0, abs=1e-5)


def test_mixed_mean_matches_cf_derivative():
    h = 1e-4
    d = (hyperq.cf_mixed(0.7, 1.0, 1.5, 1, h) - hyperq.cf_mixed(0.7, 1.0, 1.5, 1, -h)) / (2 * h)
    assert d.imag == pytest.approx(hyperq.mean_mixed(0.7, 1.0, 1.5, 1), rel=1e-6)


def test_special_functions():
    assert hyperq.hyp_1F1(1.0, 1.0, 0.5) == pytest.approx(cmath.exp(0.5))
    assert hyperq.hyp_2F1(1.0, 1.0, 2.0, 0.5).real == pytest.approx(-math.log(0.5) / 0.5)


def test_bad_params_raise():
    with pytest.raises(ValueError):
        hyperq.q_pure(0, 1.0, 1.5, 5, 0.1)


def test_bound_and_verify():
    sweep = hyperq.berezin_lieb(1.0, 0.5, 1.0, 1.5)
    assert len(sweep["gap_per_m"]) == 2
    assert min(sweep["gap_per_m"]) >= 0.0
    assert all(r["pass"] for r in hyperq.verify())
