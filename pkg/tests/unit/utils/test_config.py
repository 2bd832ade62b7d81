"""
Unit tests for settings loading
"""

import pytest

from utils.config import Config, get_config
from utils.error_codes import ErrorCode, error_code_for
from utils.exceptions import ConfigurationError


class TestConfig:
    """PERMSTATS_ environment settings"""

    def test_defaults(self):
        config = get_config()

        assert config.environment == "test"
        assert config.exhaustive_degree_cap == 8
        assert config.slow_degree_cap == 9
        assert config.avoider_degree_cap == 9
        assert config.workers == 1
        assert config.report_dir is None

    def test_environment_overrides(self, monkeypatch, tmp_path):
        monkeypatch.setenv("PERMSTATS_WORKERS", "4")
        monkeypatch.setenv("PERMSTATS_LOG_LEVEL", "debug")
        monkeypatch.setenv("PERMSTATS_REPORT_DIR", str(tmp_path))
        get_config.cache_clear()

        config = get_config()

        assert config.workers == 4
        assert config.log_level == "DEBUG"
        assert config.report_dir == tmp_path

    def test_config_is_cached(self):
        assert get_config() is get_config()

    def test_resolve_degree_cap(self):
        config = Config(exhaustive_degree_cap=6, slow_degree_cap=8)

        assert config.resolve_degree_cap() == 6
        assert config.resolve_degree_cap(slow=True) == 8

    @pytest.mark.parametrize("env,value", [
        ("PERMSTATS_ENVIRONMENT", "staging"),
        ("PERMSTATS_LOG_LEVEL", "chatty"),
        ("PERMSTATS_LOG_FORMAT", "xml"),
        ("PERMSTATS_EXHAUSTIVE_DEGREE_CAP", "11"),
        ("PERMSTATS_WORKERS", "0"),
    ])
    def test_invalid_values_rejected(self, monkeypatch, env, value):
        """
        Core: invalid settings fail on load, not at first use
        """
        monkeypatch.setenv(env, value)
        get_config.cache_clear()

        with pytest.raises(ConfigurationError):
            get_config()

    def test_exhaustive_cap_cannot_exceed_slow_cap(self, monkeypatch):
        monkeypatch.setenv("PERMSTATS_EXHAUSTIVE_DEGREE_CAP", "9")
        monkeypatch.setenv("PERMSTATS_SLOW_DEGREE_CAP", "7")
        get_config.cache_clear()

        with pytest.raises(ConfigurationError):
            get_config()

    def test_load_failure_is_a_configuration_error(self, monkeypatch):
        """
        Core: a bad environment surfaces as the coded configuration error
        """
        monkeypatch.setenv("PERMSTATS_WORKERS", "many")
        get_config.cache_clear()

        with pytest.raises(ConfigurationError) as exc_info:
            get_config()

        assert error_code_for(exc_info.value) is ErrorCode.SYSTEM_CONFIGURATION_ERROR
        assert exc_info.value.details == {"exception_type": "ValidationError"}
