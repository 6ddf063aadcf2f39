import pytest

from convexdim.properties import DETERMINISTIC_SUITES, SUITES, run_suite, suite_rng


@pytest.mark.parametrize("name", sorted(SUITES))
def test_randomized_suite_passes(name):
    r = run_suite(name, seed=5, trials=8)
    assert r.trials == 8
    assert r.passed, r.failures[:1]


@pytest.mark.parametrize("name", sorted(DETERMINISTIC_SUITES))
def test_deterministic_suite_passes(name):
    r = run_suite(name, seed=0, trials=0)
    assert r.trials > 0 and r.passed, r.failures[:1]


def test_injected_fault_is_caught():
    r = run_suite("characterization", seed=3, trials=4, fault=True)
    assert len(r.failures) == 4
    assert "config" in r.failures[0]


def test_seeded_streams_are_reproducible():
    assert suite_rng(42, "a").random() == suite_rng(42, "a").random()
    assert suite_rng(42, "a").random() != suite_rng(42, "b").random()
    a = run_suite("gale-duality", seed=9, trials=3)
    b = run_suite("gale-duality", seed=9, trials=3)
    assert a == b
