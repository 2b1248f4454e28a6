# src/metrics/__init__.py
from typing import Optional
import logging

logger = logging.getLogger(__name__)

class BaseMetricsCollector:
    """Base interface for metrics collection."""

    def record_solve(self, status: str, duration: float) -> None:
        """Record one solver run (success, rejected, error)."""
        pass

    def record_configuration(self, case: str) -> None:
        """Record a reducible configuration applied by the solver."""
        pass

    def record_violations(self, kind: str, count: int) -> None:
        """Record violations reported by the verifier."""
        pass

    def record_suite(self, name: str, status: str, duration: float) -> None:
        """Record the outcome of an acceptance suite."""
        pass

    def close(self) -> None:
        """Clean up resources."""
        pass

def get_metrics_collector(config) -> Optional[BaseMetricsCollector]:
    """Factory function to get the appropriate metrics collector based on configuration."""
    if not config.metrics.enabled:
        logger.debug("Metrics collection is disabled")
        return None

    if config.metrics.type != "prometheus":
        logger.error(f"Unsupported metrics type {config.metrics.type!r}")
        return None

    try:
        from .prometheus import PrometheusMetricsCollector
        logger.info("Using Prometheus metrics collector")
        return PrometheusMetricsCollector(textfile=config.metrics.textfile)
    except ImportError:
        logger.error("Failed to import Prometheus metrics collector. "
                     "Is prometheus-client installed?")
        return None
