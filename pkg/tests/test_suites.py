"""Smoke runs of the randomized identity suites (full runs live in acceptance)."""

import pytest

from rii import run_suite
from rii.suites import (
    SUITES,
    random_perturbation,
    random_rational,
    random_scheme,
    suite_oprl,
)


def test_registry_names():
    assert set(SUITES) == {"structural", "transfer", "spectral", "oprl"}
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_small_runs_are_clean():
    for name in ("structural", "transfer"):
        result = run_suite(name, seed=123, instances=8)
        assert result.ok(), result.failures[:2]
        assert result.instances == 8
        assert "8 instances, 0 failures" in result.summary()


def test_spectral_small_run():
    result = run_suite("spectral", seed=5, instances=4)
    assert result.ok(), result.failures[:2]


def test_oprl_small_run():
    result = suite_oprl(seed=11, instances=6)
    assert result.ok(), result.failures[:2]


def test_generators_respect_constraints():
    import random

    rng = random.Random(0)
    for _ in range(50):
        q = random_rational(rng, nonzero=True)
        assert q != 0
        q = random_rational(rng, positive=True)
        assert q > 0
    for i in range(12):
        scheme = random_scheme(rng, 10)
        assert scheme.kind in ("general", "special", "oprl")
        assert scheme.lam(3) > 0
        pert = random_perturbation(rng, 8)
        assert pert.max_level() <= 8
        if pert.kp is not None:
            assert pert.kp >= 1 and pert.nu > 0
        if pert.k is not None and pert.kp is not None:
            assert pert.k <= pert.kp


def test_deterministic_given_seed():
    a = run_suite("structural", seed=42, instances=5)
    b = run_suite("structural", seed=42, instances=5)
    assert a.instances == b.instances
    assert a.failures == b.failures == []
