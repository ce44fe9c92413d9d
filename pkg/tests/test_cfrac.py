"""Continued-fraction convergents and the spectral transformation chain."""

from fractions import Fraction

import pytest

from rii import (
    CFracSpec,
    Homography,
    PoleError,
    PolyMatrix2,
    Poly,
    cauchy_scheme,
    convergent,
    eval_sequence_at,
    lemma1_matrix,
    lemma2_residual,
    spectral_gap,
    spectral_residual,
    tail_convergent,
)


def test_convergent_equals_qn_over_pn(cauchy):
    z = Fraction(3, 2)
    p = eval_sequence_at(cauchy, None, "first", 8, z)
    q = eval_sequence_at(cauchy, None, "second", 8, z)
    for depth in range(1, 9):
        assert convergent(CFracSpec(cauchy), depth, z) == q[depth] / p[depth]
    assert convergent(CFracSpec(cauchy), 0, z) == 0


def test_convergent_pole_is_detected(cauchy):
    # P_2 = (3z^2-1)/4 vanishes at z = 1/sqrt(3); rational z with P_1(z) = 0
    # is z = 0 (P_1 = z), a pole of the depth-1 convergent's denominator
    with pytest.raises(PoleError):
        convergent(CFracSpec(cauchy), 1, Fraction(0))
    # float path returns a signed infinity instead
    import math

    assert math.isinf(convergent(CFracSpec(cauchy), 1, 0.0))


def test_zero_partial_numerator_truncates(cauchy):
    # at z = +-i the special weight z^2+1 vanishes: exercised via the float
    # path of a general scheme whose node equals the evaluation point
    from rii import CoefficientScheme

    scheme = CoefficientScheme.general(1, 0, 1, nodes=[(2, -1)] * 8)
    z = Fraction(2)  # W_n(2) = 0 for every n
    value = convergent(CFracSpec(scheme), 5, z)
    assert value == convergent(CFracSpec(scheme), 1, z)


def test_tail_convergent_shifts_indices(cauchy):
    z = Fraction(5, 3)
    assert tail_convergent(cauchy, -1, 4, z) == convergent(CFracSpec(cauchy), 4, z)
    assert tail_convergent(cauchy, 2, 0, z) == 0
    with pytest.raises(ValueError):
        tail_convergent(cauchy, -2, 1, z)


def test_homography_compose_and_inverse():
    h = Homography(PolyMatrix2(Poly((1, 1)), Poly.one(), Poly.zero(), Poly.one()))
    g = Homography(PolyMatrix2(Poly.x(), Poly.zero(), Poly.one(), Poly.one()))
    z = Fraction(2, 7)
    u = Fraction(3, 5)
    assert h.compose(g).apply(u, z) == h.apply(g.apply(u, z), z)
    assert h.inverse().apply(h.apply(u, z), z) == u
    assert Homography.identity().apply(u, z) == u


def test_lemma1_maps_tail_to_perturbed_fraction(cauchy):
    k, kp = 1, 3
    mu, nu = Fraction(1, 5), Fraction(7, 6)
    h = lemma1_matrix(cauchy, k=k, kp=kp, mu=mu, nu=nu)
    from rii import Perturbation

    pert = Perturbation.both(k, mu, kp, nu)
    z = Fraction(4, 3)
    for n in range(kp + 1, kp + 5):
        lhs = convergent(CFracSpec(cauchy, pert), n, z)
        tail = tail_convergent(cauchy, kp, n - kp - 1, z)
        assert lhs == h.apply(tail, z)
    with pytest.raises(ValueError):
        lemma1_matrix(cauchy, k=4, kp=2, mu=mu, nu=nu)
    with pytest.raises(ValueError):
        lemma1_matrix(cauchy)


def test_lemma2_residual_vanishes(cauchy):
    z = Fraction(7, 4)
    for kp in (0, 1, 3):
        for n in range(kp + 1, kp + 4):
            assert lemma2_residual(cauchy, kp, n, z) == 0
    with pytest.raises(ValueError):
        lemma2_residual(cauchy, 3, 2, z)


def test_spectral_residual_matched_truncation(cauchy):
    cases = (
        {"k": 0, "mu": Fraction(1, 10)},
        {"kp": 2, "nu": Fraction(5, 4)},
        {"k": 1, "mu": Fraction(-1, 3), "kp": 3, "nu": Fraction(2, 3)},
    )
    for kwargs in cases:
        level = max(v for key, v in kwargs.items() if key in ("k", "kp"))
        for depth in (level + 1, level + 3):
            r = spectral_residual(cauchy, z=Fraction(5, 2), depth=depth, **kwargs)
            assert r == 0
    with pytest.raises(ValueError):
        spectral_residual(cauchy, k=2, mu=Fraction(1, 2), z=Fraction(1), depth=1)


def test_spectral_gap_shrinks_with_depth(cauchy):
    # off the real axis the convergents actually converge; on the axis
    # (inside the support) they oscillate and the gap is meaningless
    gaps = [spectral_gap(cauchy, k=1, mu=Fraction(1, 4), z=0.7 + 0.6j,
                         depth_perturbed=d, depth_plain=25)
            for d in (4, 10, 18)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-4
