from pathlib import Path
from typing import Optional
import logging

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

from . import BaseMetricsCollector

logger = logging.getLogger(__name__)

class PrometheusMetricsCollector(BaseMetricsCollector):
    """Collects Prometheus metrics for solver runs and acceptance suites.

    Metrics live in a private registry so several collectors can coexist in
    one process. They are exported to a text file rather than served.
    """

    def __init__(self, textfile: Optional[Path] = None):
        """Initialize Prometheus metrics.

        Args:
            textfile: File written by :meth:`close`, if any.
        """
        self.textfile = textfile
        self.registry = CollectorRegistry()

        self.solve_total = Counter(
            'incidence_solve_total',
            'Total number of solver runs',
            ['status'],
            registry=self.registry
        )
        self.solve_duration = Histogram(
            'incidence_solve_duration_seconds',
            'Duration of solver runs in seconds',
            buckets=[0.001, 0.01, 0.05, 0.1, 0.5, 1, 5],
            registry=self.registry
        )
        self.configurations = Counter(
            'incidence_configurations_total',
            'Reducible configurations applied by the solver',
            ['case'],
            registry=self.registry
        )
        self.violations = Counter(
            'incidence_violations_total',
            'Violations reported by the verifier',
            ['kind'],
            registry=self.registry
        )
        self.suite_total = Counter(
            'incidence_suite_total',
            'Acceptance suite runs',
            ['suite', 'status'],
            registry=self.registry
        )
        self.suite_duration = Histogram(
            'incidence_suite_duration_seconds',
            'Duration of acceptance suites in seconds',
            ['suite'],
            buckets=[0.1, 1, 5, 30, 60, 300],
            registry=self.registry
        )

        logger.debug("Prometheus metrics collector initialized")

    def record_solve(self, status: str, duration: float) -> None:
        """Record one solver run.

        Args:
            status: Run status (success, rejected, error)
            duration: Run duration in seconds
        """
        self.solve_total.labels(status=status).inc()
        self.solve_duration.observe(duration)

    def record_configuration(self, case: str) -> None:
        self.configurations.labels(case=case).inc()

    def record_violations(self, kind: str, count: int) -> None:
        self.violations.labels(kind=kind).inc(count)

    def record_suite(self, name: str, status: str, duration: float) -> None:
        """Record an acceptance suite outcome.

        Args:
            name: Suite name
            status: passed or failed
            duration: Suite duration in seconds
        """
        self.suite_total.labels(suite=name, status=status).inc()
        self.suite_duration.labels(suite=name).observe(duration)
        logger.debug(f"Recorded suite {name}: {status} in {duration:.2f}s")

    def write_textfile(self, path: Path) -> None:
        """Write all metrics in the Prometheus text format."""
        path.parent.mkdir(parents=True, exist_ok=True)
        write_to_textfile(str(path), self.registry)
        logger.info(f"Wrote metrics to {path}")

    def close(self) -> None:
        """Flush metrics to the configured text file."""
        if self.textfile:
            self.write_textfile(Path(self.textfile))
