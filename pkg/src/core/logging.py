import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

COMPONENTS = {
    "reduction": "src.core.reduction",
    "extension": "src.core.extension",
    "oracle": "src.oracle",
    "generators": "src.toolkit.generators",
}


def setup_logging(
    log_dir: Optional[Path] = None,
    log_level: str = "WARNING",
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5
) -> None:
    """Set up logging.

    The console handler writes to stderr; stdout is reserved for colorings
    and graphs. Rotating files are only written when ``log_dir`` is given.
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_formatter = logging.Formatter(
        '%(asctime)s - %(levelname)s: %(message)s'
    )

    for logger_name in COMPONENTS.values():
        component_logger = logging.getLogger(logger_name)
        for handler in component_logger.handlers[:]:
            component_logger.removeHandler(handler)
            handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    if log_dir is None:
        return

    log_dir.mkdir(parents=True, exist_ok=True)
    file_handler = logging.handlers.RotatingFileHandler(
        log_dir / "incidence-coloring.log",
        maxBytes=max_bytes,
        backupCount=backup_count
    )
    file_handler.setFormatter(file_formatter)
    root_logger.addHandler(file_handler)

    for component, logger_name in COMPONENTS.items():
        logger = logging.getLogger(logger_name)
        logger.setLevel(log_level)

        component_handler = logging.handlers.RotatingFileHandler(
            log_dir / f"{component}.log",
            maxBytes=max_bytes,
            backupCount=backup_count
        )
        component_handler.setFormatter(file_formatter)
        logger.addHandler(component_handler)


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a specific component."""
    return logging.getLogger(name)
