"""Polynomial families of the recurrence: values pinned by hand."""

from fractions import Fraction

import pytest

from rii import (
    Perturbation,
    Poly,
    cauchy_scheme,
    eval_recurrence_at,
    eval_sequence_at,
    example_closed_form,
    gen_associated,
    gen_first_kind,
    gen_second_kind,
)


def test_first_kind_worked_values(cauchy):
    seq = gen_first_kind(cauchy, None, 10)
    # P_2 = (3x^2 - 1)/4
    assert seq[2] == Poly((Fraction(-1, 4), 0, Fraction(3, 4)))
    assert seq[10](Fraction(0)) == Fraction(-1, 1024)
    assert seq[2](Fraction(1)) == Fraction(1, 2)
    # leading coefficient (n+1)/2^n
    for n in range(11):
        assert seq[n].leading() == Fraction(n + 1, 2 ** n)
        assert seq[n].degree == n


def test_second_kind_equals_shifted_first_kind(cauchy):
    p = gen_first_kind(cauchy, None, 11)
    q = gen_second_kind(cauchy, None, 12)
    assert q[0].is_zero() and q[1] == Poly.one()
    for n in range(1, 13):
        assert q[n] == p[n - 1]
        assert q[n].degree == n - 1


def test_closed_form_matches_recurrence(cauchy):
    seq = gen_first_kind(cauchy, None, 12)
    for n in range(13):
        assert example_closed_form(n) == seq[n]
    with pytest.raises(ValueError):
        example_closed_form(-1)


def test_pinned_perturbed_first_step(cauchy):
    # co-recursion at k = 0 with mu = 1/10 shifts P_1 to x - 1/10
    pert = Perturbation.corec(0, Fraction(1, 10))
    seq = gen_first_kind(cauchy, pert, 3)
    assert seq[1] == Poly((Fraction(-1, 10), 1))


def test_corec_at_zero_never_touches_second_kind(cauchy):
    pert = Perturbation.corec(0, Fraction(3, 7))
    plain = gen_second_kind(cauchy, None, 9)
    moved = gen_second_kind(cauchy, pert, 9)
    for n in range(10):
        assert plain[n] == moved[n]


def test_codil_changes_exactly_the_tail(cauchy):
    pert = Perturbation.codil(2, Fraction(3, 2))
    plain = gen_first_kind(cauchy, None, 6)
    moved = gen_first_kind(cauchy, pert, 6)
    for n in range(3):                # steps before kp are untouched
        assert plain[n] == moved[n]
    for n in range(3, 7):
        assert plain[n] != moved[n]


def test_associated_families(cauchy):
    g = gen_associated(cauchy, 1, 4, kind="first")
    assert g[0] == Poly.one()
    # order-2 shift: G_1 = rho_2 (x - c_2) = x for this scheme
    assert g[1] == Poly.x()
    h = gen_associated(cauchy, 1, 4, kind="second")
    assert h[0].is_zero() and h[1] == Poly.one()
    with pytest.raises(ValueError):
        gen_associated(cauchy, -1, 3)


def test_eval_matches_coefficient_path(cauchy):
    pert = Perturbation.both(1, Fraction(1, 3), 2, Fraction(5, 4))
    seq = gen_first_kind(cauchy, pert, 8)
    z = Fraction(2, 3)
    assert eval_recurrence_at(cauchy, pert, "first", 8, z) == seq[8](z)
    values = eval_sequence_at(cauchy, pert, "first", 8, z)
    assert [p(z) for p in seq] == list(values)


def test_eval_in_floating_point(cauchy):
    exact = eval_recurrence_at(cauchy, None, "first", 9, Fraction(1, 3))
    approx = eval_recurrence_at(cauchy, None, "first", 9, 1.0 / 3.0)
    assert abs(float(exact) - approx) < 1e-12
