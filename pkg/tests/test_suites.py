import pytest

from src.core.config import Config, OracleConfig, SuiteConfig
from src.core.exceptions import InstanceTooLargeError
from src.metrics.prometheus import PrometheusMetricsCollector
from src.toolkit import suites


def test_theorem_instances_cover_the_grid():
    params = suites.theorem_instances(12, 50, seed=1)
    assert len(params) == 12
    assert {(p.chord_keep_probability, p.hull_delete_probability) for p in params} == {
        (keep, delete) for keep in suites.CHORD_KEEP_GRID for delete in suites.HULL_DELETE_GRID
    }
    assert all(3 <= p.n <= 50 for p in params)
    assert suites.theorem_instances(12, 50, seed=1) == params


def test_theorem_property_small():
    result = suites.run_theorem_property(30, 120, seed=2)
    assert result.passed, result.failures
    assert result.checked == 30


def test_lemma_check_small():
    result = suites.run_lemma_check(5)
    assert result.passed, result.failures
    assert result.checked > 0


def test_theorem_check_small():
    result = suites.run_theorem_check(5)
    assert result.passed, result.failures
    assert result.checked > 0


def test_exhaustive_checks_respect_oracle_limits():
    # K2,3 has no configuration, so it reaches the 5-vertex minor test
    with pytest.raises(InstanceTooLargeError):
        suites.run_lemma_check(5, OracleConfig(max_minor_vertices=4))
    assert suites.run_lemma_check(4, OracleConfig(max_minor_vertices=4)).passed

    with pytest.raises(InstanceTooLargeError):
        suites.run_theorem_check(3, OracleConfig(max_minor_vertices=2))
    # The diamond has 10 incidences
    with pytest.raises(InstanceTooLargeError):
        suites.run_theorem_check(4, OracleConfig(max_incidences=8))
    with pytest.raises(InstanceTooLargeError):
        suites.run_pinned_values(OracleConfig(max_incidences=4))


def test_fixed_suites():
    """Test the suites that need no scale settings."""
    for result in (suites.run_pinned_values(), suites.run_negative_check(),
                   suites.run_base_case_check(60), suites.run_determinism_check(seed=3)):
        assert result.passed, result.failures
        assert result.checked > 0
        assert result.duration >= 0


def test_mutation_suite_small():
    result = suites.run_mutation_suite(4, 15, seed=5)
    assert result.passed, result.failures
    assert result.checked > 0


def test_suite_summary():
    result = suites.SuiteResult("demo", checked=3, failures=["boom"], duration=0.5)
    assert not result.passed
    assert result.summary() == "demo: 3 checked, 1 failures (0.50s)"


def test_run_all_records_metrics():
    metrics = PrometheusMetricsCollector()
    settings = SuiteConfig(theorem_instances=6, theorem_max_n=30, lemma_max_n=4,
                           exhaustive_theorem_max_n=4, mutation_colorings=2, mutation_max_n=10,
                           base_max_n=20)
    results = suites.run_all(settings, metrics=metrics)
    assert [r.name for r in results] == [
        "theorem-property", "lemma-exhaustive", "theorem-exhaustive", "pinned-values",
        "negative", "mutation", "base-case", "determinism",
    ]
    assert all(r.passed for r in results)
    assert metrics.registry.get_sample_value(
        "incidence_suite_total", {"suite": "negative", "status": "passed"}) == 1


@pytest.mark.slow
def test_full_acceptance_scale():
    """Full-scale run of every suite."""
    results = suites.run_all(Config().suites)
    assert all(r.passed for r in results), [r.summary() for r in results]
