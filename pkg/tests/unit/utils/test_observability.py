"""
Unit tests for structured logging and Prometheus metrics
"""

import json
import logging

import structlog

from utils.metrics_collector import MetricsCollector, get_metrics_collector, metrics
from utils.structured_logging import (
    bind_run_context,
    clear_run_context,
    get_structured_logger,
    setup_structured_logging,
)


class TestStructuredLogging:
    """structlog configuration and run context"""

    def test_json_lines_carry_run_context(self, capsys):
        """
        Core: run identifiers bound once appear on every log line, on stderr
        """
        setup_structured_logging("INFO", "json")
        bind_run_context("run-123", theorem="psi")
        try:
            get_structured_logger("tests").info("Verification started", degree=5)
        finally:
            clear_run_context()

        captured = capsys.readouterr()
        line = json.loads(captured.err.strip().splitlines()[-1])

        assert captured.out == ""
        assert line["event"] == "Verification started"
        assert line["run_id"] == "run-123"
        assert line["theorem"] == "psi"
        assert line["degree"] == 5
        assert line["level"] == "info"

    def test_level_filters_lower_records(self, capsys):
        setup_structured_logging("WARNING", "console")
        get_structured_logger("tests").info("hidden")
        get_structured_logger("tests").warning("shown")

        err = capsys.readouterr().err

        assert "shown" in err
        assert "hidden" not in err
        assert logging.getLogger().level == logging.WARNING

    def test_clear_run_context(self):
        bind_run_context("run-1")
        clear_run_context()

        assert structlog.contextvars.get_contextvars() == {}


class TestMetricsCollector:
    """Private registry per collector"""

    def test_verification_metrics(self):
        """
        Core: runs are counted per theorem and status, last failure flagged
        """
        collector = MetricsCollector()

        collector.record_verification("psi", "pass", 0.2)
        collector.record_verification("psi", "fail", 0.1)

        registry = collector.registry
        assert registry.get_sample_value(
            "permstats_verifications_total", {"theorem": "psi", "status": "pass"}) == 1.0
        assert registry.get_sample_value(
            "permstats_verifications_total", {"theorem": "psi", "status": "fail"}) == 1.0
        assert registry.get_sample_value(
            "permstats_last_verification_failed", {"theorem": "psi"}) == 1.0

    def test_enumeration_and_request_metrics(self):
        collector = MetricsCollector()

        collector.record_enumeration("a", 7, 2520)
        collector.track_request("POST", "/api/v1/permutations/psi", 200, 0.01)

        registry = collector.registry
        assert registry.get_sample_value(
            "permstats_elements_enumerated_total", {"group": "a", "degree": "7"}) == 2520.0
        assert registry.get_sample_value(
            "permstats_requests_total",
            {"method": "POST", "endpoint": "/api/v1/permutations/psi", "status_code": "200"}) == 1.0

    def test_render_exposition_format(self):
        collector = MetricsCollector()
        collector.record_verification("macmahon", "pass", 0.5)

        body = collector.render().decode()

        assert "permstats_verifications_total" in body
        assert collector.content_type.startswith("text/plain")

    def test_global_collector(self):
        assert get_metrics_collector() is metrics
