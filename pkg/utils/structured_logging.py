"""
Structured logging with run context
"""

import logging
import sys
from typing import Any, Optional

import structlog


def setup_structured_logging(level: str = "INFO", fmt: str = "json") -> None:
    """Setup structured logging for the application

    Log lines go to stderr so CLI output on stdout stays machine readable.
    """
    renderer = (
        structlog.processors.JSONRenderer()
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(level.upper())
        ),
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))

    root_logger = logging.getLogger()
    root_logger.setLevel(level.upper())
    root_logger.handlers.clear()
    root_logger.addHandler(handler)

    # Suppress noisy third-party loggers
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)
    logging.getLogger("httpx").setLevel(logging.WARNING)


def get_structured_logger(name: str) -> Any:
    """Get structured logger instance"""
    return structlog.get_logger(name)


def bind_run_context(run_id: str, theorem: Optional[str] = None) -> None:
    """Attach run identifiers to every log line emitted in this context"""
    values = {"run_id": run_id}
    if theorem is not None:
        values["theorem"] = theorem
    structlog.contextvars.bind_contextvars(**values)


def clear_run_context() -> None:
    """Drop the run identifiers bound by bind_run_context"""
    structlog.contextvars.clear_contextvars()
