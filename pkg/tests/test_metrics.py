import logging

from src.core.config import Config
from src.core.exceptions import NotOuterplanarError
from src.core.extension import IncidenceSolver
from src.core.logging import setup_logging
from src.metrics import BaseMetricsCollector, get_metrics_collector
from src.metrics.prometheus import PrometheusMetricsCollector
from src.toolkit.families import family


def test_factory():
    assert get_metrics_collector(Config()) is None
    enabled = Config.from_toml("[metrics]\nenabled = true\n")
    assert isinstance(get_metrics_collector(enabled), PrometheusMetricsCollector)
    unknown = Config.from_toml('[metrics]\nenabled = true\ntype = "statsd"\n')
    assert get_metrics_collector(unknown) is None


def test_base_collector_is_a_no_op():
    collector = BaseMetricsCollector()
    collector.record_solve("success", 0.1)
    collector.record_configuration("case1")
    collector.record_violations("Uncolored", 2)
    collector.record_suite("demo", "passed", 1.0)
    collector.close()


def test_solver_records_metrics(fan5, k4):
    """Test solve counters and configuration counts."""
    metrics = PrometheusMetricsCollector()
    solver = IncidenceSolver(metrics=metrics)
    result = solver.solve(fan5)
    try:
        solver.solve(k4)
    except NotOuterplanarError:
        pass

    registry = metrics.registry
    assert registry.get_sample_value("incidence_solve_total", {"status": "success"}) == 1
    assert registry.get_sample_value("incidence_solve_total", {"status": "rejected"}) == 1
    reductions = sum(
        registry.get_sample_value("incidence_configurations_total", {"case": case}) or 0
        for case in ("case1", "case2", "case3", "case4")
    )
    assert reductions == len(result.configurations)


def test_write_textfile_on_close(tmp_path):
    path = tmp_path / "metrics" / "incidence.prom"
    metrics = PrometheusMetricsCollector(textfile=path)
    metrics.record_violations("AdjacencyConflict", 3)
    metrics.close()
    text = path.read_text()
    assert 'incidence_violations_total{kind="AdjacencyConflict"} 3.0' in text


def test_setup_logging_writes_component_files(tmp_path):
    setup_logging(tmp_path, "DEBUG")
    try:
        IncidenceSolver().solve(family("fan", 6))
        for handler in logging.getLogger().handlers + logging.getLogger("src.core.extension").handlers:
            handler.flush()
        assert (tmp_path / "incidence-coloring.log").read_text()
        assert (tmp_path / "extension.log").exists()
        assert (tmp_path / "reduction.log").exists()
    finally:
        setup_logging(None, "WARNING")
    assert logging.getLogger("src.core.extension").handlers == []
