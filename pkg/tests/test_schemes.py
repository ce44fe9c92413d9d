"""Coefficient schemes, their weight factors, and perturbation bookkeeping."""

from fractions import Fraction

import pytest

from rii import (
    CoefficientScheme,
    Perturbation,
    PerturbationError,
    Poly,
    SchemeIndexError,
    cauchy_scheme,
)


def test_cauchy_scheme_coefficients(cauchy):
    assert cauchy.rho(0) == 1 and cauchy.rho(7) == 1
    assert cauchy.c(3) == 0
    assert cauchy.lam(1) == Fraction(1, 4)
    assert cauchy.weight_poly(2) == Poly((1, 0, 1))       # x^2 + 1
    assert cauchy.weight_at(2, Fraction(2)) == 5


def test_special_vs_general_vs_oprl_weights():
    special = CoefficientScheme.special(1, 0, Fraction(1, 4), omega=2)
    assert special.weight_poly(1) == Poly((4, 0, 1))
    general = CoefficientScheme.general(1, 0, 1, nodes=[(3, -3), (1, -2)])
    assert general.weight_poly(1) == Poly((-1, 1)) * Poly((2, 1))
    assert general.nodes(1) == (1, -2)
    oprl = CoefficientScheme.oprl(1, 2, 1)
    assert oprl.weight_poly(5) == Poly.one()


def test_sequence_coefficients_by_index():
    scheme = CoefficientScheme.special([1, 2, 3], [5, 6, 7], [0, Fraction(1, 2), 9],
                                       omega=1)
    assert scheme.rho(1) == 2
    assert scheme.c(2) == 7
    assert scheme.lam(1) == Fraction(1, 2)
    with pytest.raises(SchemeIndexError):
        scheme.rho(3)


def test_scheme_json_round_trip(cauchy):
    again = CoefficientScheme.from_json(cauchy.to_json())
    assert again.kind == cauchy.kind
    for n in range(5):
        assert again.rho(n) == cauchy.rho(n)
        assert again.c(n) == cauchy.c(n)
        assert again.weight_poly(n) == cauchy.weight_poly(n)
    assert again.lam(3) == cauchy.lam(3)


def test_perturbation_constructors_and_validation():
    p = Perturbation.corec(2, Fraction(1, 10))
    assert p.max_level() == 2 and p.kp is None
    b = Perturbation.both(1, Fraction(1, 2), 4, Fraction(2))
    assert b.max_level() == 4
    assert b.corec_only() == Perturbation.corec(1, Fraction(1, 2))
    assert b.codil_only() == Perturbation.codil(4, Fraction(2))
    assert Perturbation.none().is_identity()
    assert Perturbation.corec(3, 0).is_identity()
    with pytest.raises(PerturbationError):
        Perturbation.codil(0, Fraction(2))      # lambda_0 does not exist
    with pytest.raises(PerturbationError):
        Perturbation.corec(-1, Fraction(1, 2))
    with pytest.raises(PerturbationError):
        Perturbation.codil(2, Fraction(0))      # nu must stay positive
    with pytest.raises(PerturbationError):
        Perturbation(k=1)                       # mu missing


def test_perturbed_accessors(cauchy):
    p = Perturbation.both(1, Fraction(1, 10), 2, Fraction(3, 2))
    assert p.center(cauchy, 1) == Fraction(1, 10)          # c_1 + mu
    assert p.center(cauchy, 0) == 0
    assert p.coefficient(cauchy, 2) == Fraction(3, 8)      # nu * lambda_2
    assert p.coefficient(cauchy, 1) == Fraction(1, 4)


def test_perturbation_json_round_trip():
    p = Perturbation.both(1, Fraction(1, 10), 2, Fraction(3, 2))
    q = Perturbation.from_dict(p.to_dict())
    assert q == p
    assert p.to_dict() == {"corec": {"k": 1, "mu": "1/10"},
                           "codil": {"kp": 2, "nu": "3/2"}}
    assert Perturbation.from_dict({}) == Perturbation.none()
