"""Rules of the worked scheme: zeros, calibration, weights, guards."""

import math
from fractions import Fraction

import pytest

from rii import (
    ComplexZerosError,
    DegeneracyError,
    Perturbation,
    build_rule,
    calibrate_m0,
    cauchy_scheme,
    estimate,
    exactness_check,
    gen_first_kind,
    real_zeros,
)
from rii.quadrature import MOMENT, RAW, SECOND_KIND, UNIT_MASS


def test_real_zeros_are_cotangents(cauchy):
    for n in (4, 9, 15):
        poly = gen_first_kind(cauchy, None, n)[n]
        zeros = real_zeros(poly)
        expected = sorted(1 / math.tan(j * math.pi / (n + 1)) for j in range(1, n + 1))
        assert len(zeros) == n
        assert max(abs(z - e) for z, e in zip(zeros, expected)) < 1e-12


def test_real_zeros_complex_guard(cauchy):
    # nu_1 = 2.12 keeps every zero real through n = 17; the first conjugate
    # pair appears at n = 18 (checked against 60-digit root finding).
    pert = Perturbation.codil(1, Fraction("2.12"))
    seq = gen_first_kind(cauchy, pert, 18)
    assert len(real_zeros(seq[17])) == 17
    with pytest.raises(ComplexZerosError) as exc:
        real_zeros(seq[18])
    assert exc.value.pairs


def test_calibrated_mass_is_one_half(cauchy):
    assert calibrate_m0(cauchy, 5) == Fraction(1, 2)
    assert calibrate_m0(cauchy, 12) == Fraction(1, 2)
    assert calibrate_m0(cauchy, 8, mass=2) == Fraction(1)


def test_unperturbed_weights_equal_uniform(cauchy):
    for n in (4, 11, 20):
        rule = build_rule(cauchy, None, n, method=MOMENT)
        assert max(abs(w - 1.0 / (n + 1)) for w in rule.weights) < 1e-12
        assert all(x1 < x2 for x1, x2 in zip(rule.nodes, rule.nodes[1:]))


def test_second_kind_raw_vs_unit_mass(cauchy):
    n = 4
    raw = build_rule(cauchy, None, n, method=SECOND_KIND, normalization=RAW)
    unit = build_rule(cauchy, None, n, method=SECOND_KIND, normalization=UNIT_MASS)
    # raw weights are 2/5 each; the calibrated factor 1/2 scales them to 1/5
    assert max(abs(w - 0.4) for w in raw.weights) < 1e-12
    assert max(abs(w - 0.2) for w in unit.weights) < 1e-12
    # the calibration factor rides along as metadata either way
    assert raw.m0 == unit.m0 == Fraction(1, 2)


def test_moment_and_second_kind_weights_coincide(cauchy):
    # Casorati identity: Q*_n P*_{n-1} = prod lambda*W at the zeros of P*_n,
    # so the two pipelines give the same rule even under perturbation
    pert = Perturbation.both(2, Fraction(1, 100), 6, Fraction(251, 250))
    a = build_rule(cauchy, pert, 10, method=MOMENT)
    b = build_rule(cauchy, pert, 10, method=SECOND_KIND, normalization=UNIT_MASS)
    assert max(abs(x - y) for x, y in zip(a.weights, b.weights)) < 1e-13
    assert max(abs(x - y) for x, y in zip(a.nodes, b.nodes)) < 1e-14


def test_build_rule_complex_flag_and_errors(cauchy):
    with pytest.raises(ComplexZerosError):
        build_rule(cauchy, Perturbation.codil(1, Fraction("2.12")), 18)
    for nu in ("0.94", "0.98", "1.004", "1.036", "1.1"):
        rule = build_rule(cauchy, Perturbation.codil(1, Fraction(nu)), 15)
        assert len(rule.nodes) == 15


def test_estimate_applies_the_rule(cauchy):
    rule = build_rule(cauchy, None, 6, method=MOMENT)
    assert abs(estimate(rule, lambda x: 1.0) - 6.0 / 7.0) < 1e-12
    with pytest.raises(ValueError):
        estimate(rule, lambda x: float("nan"))


def test_estimate_accepts_integrand_objects(cauchy):
    from rii import parse_integrand

    rule = build_rule(cauchy, None, 4, method=MOMENT)
    expr = parse_integrand("x*x")
    direct = estimate(rule, lambda x: x * x)
    assert abs(estimate(rule, expr) - direct) < 1e-15


def test_exactness_sweep_small(cauchy):
    assert exactness_check(cauchy, 4, 7) < 1e-11
    assert exactness_check(cauchy, 4, 8) > 1e-3


def test_calibration_degeneracy():
    from rii import CoefficientScheme

    # rho_1 = 0 makes Q_2 vanish, so its leading-coefficient ratio is undefined
    degenerate = CoefficientScheme.special([1, 0, 1, 1], 0, Fraction(1, 4), omega=1)
    with pytest.raises(DegeneracyError):
        calibrate_m0(degenerate, 1)
