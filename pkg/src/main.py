import logging
import os
from pathlib import Path
from typing import Optional, Tuple

from src.core.config import Config
from src.core.logging import setup_logging
from src.metrics import BaseMetricsCollector, get_metrics_collector

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "INCIDENCE_COLORING_CONFIG"


def get_default_paths():
    """Get default paths for configuration."""
    home_dir = Path.home()
    return {
        'config_file': home_dir / ".config/incidence-coloring/config.toml",
    }


def load_config(config_path: Optional[Path] = None) -> Config:
    """Load configuration, falling back to defaults when no file exists.

    The file is taken from ``config_path``, then the ``INCIDENCE_COLORING_CONFIG``
    environment variable, then the default location.

    Raises:
        ValueError: If the file exists but cannot be parsed.
    """
    if config_path is None:
        env_path = os.environ.get(CONFIG_ENV_VAR)
        config_path = Path(env_path) if env_path else get_default_paths()['config_file']

    if not config_path.exists():
        logger.debug(f"Configuration file not found: {config_path}, using defaults")
        return Config()

    logger.debug(f"Loading configuration from {config_path}")
    return Config.from_file(config_path).expand_paths()


def initialize(config_path: Optional[Path] = None,
               log_level: Optional[str] = None) -> Tuple[Config, Optional[BaseMetricsCollector]]:
    """Load configuration, set up logging and build the metrics collector.

    Args:
        config_path: Path to the configuration file (optional)
        log_level: Overrides the configured log level

    Returns:
        Tuple of (config, metrics collector or None)
    """
    setup_logging(None, log_level or "WARNING")
    config = load_config(config_path)
    setup_logging(config.system.log_dir, log_level or config.system.log_level)
    return config, get_metrics_collector(config)


def main() -> None:
    """Console entry point."""
    from src.cli import app
    app()


if __name__ == "__main__":
    main()
