"""
Fail-fast configuration validation
"""

import sys

from utils.config import get_config
from utils.exceptions import ConfigurationError
from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)


class ConfigBootstrap:
    """Fail-fast configuration validator"""

    def validate_startup_config(self) -> None:
        """Validate all required configuration on startup"""
        try:
            config = get_config()

            self._validate_caps(config)
            self._validate_report_dir(config)

            logger.info("All configuration validation passed",
                        exhaustive_degree_cap=config.exhaustive_degree_cap,
                        slow_degree_cap=config.slow_degree_cap,
                        workers=config.workers)

        except Exception as e:
            self._abort_startup(f"Configuration validation failed: {str(e)}")

    def _validate_caps(self, config) -> None:
        """Validate enumeration caps and worker count"""
        if config.exhaustive_degree_cap > config.slow_degree_cap:
            raise ConfigurationError("EXHAUSTIVE_DEGREE_CAP must not exceed SLOW_DEGREE_CAP")

        # Slices are cut by first letter, so more workers than letters idle.
        if config.workers > config.slow_degree_cap:
            raise ConfigurationError("WORKERS exceeds the number of population slices")

    def _validate_report_dir(self, config) -> None:
        """Report directory, when set, must be a directory or creatable"""
        report_dir = config.report_dir
        if report_dir is None:
            return
        if report_dir.exists() and not report_dir.is_dir():
            raise ConfigurationError(f"REPORT_DIR {report_dir} is not a directory")

    def _abort_startup(self, message: str) -> None:
        """Abort startup with error message"""
        logger.error("Startup aborted", reason=message)
        sys.exit(1)


def validate_config_on_startup() -> None:
    """Entry point for startup config validation"""
    bootstrap = ConfigBootstrap()
    bootstrap.validate_startup_config()
