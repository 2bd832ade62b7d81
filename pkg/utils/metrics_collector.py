"""
Prometheus metrics collection for monitoring
"""

from prometheus_client import CONTENT_TYPE_LATEST, CollectorRegistry, Counter, Gauge, Histogram, generate_latest

from utils.structured_logging import get_structured_logger

logger = get_structured_logger(__name__)


class MetricsCollector:
    """Prometheus metrics collector for permstats"""

    content_type = CONTENT_TYPE_LATEST

    def __init__(self):
        """Initialize metrics collector with Prometheus metrics"""
        self.registry = CollectorRegistry()

        # API Request metrics
        self.request_count = Counter(
            'permstats_requests_total',
            'Total number of API requests',
            ['method', 'endpoint', 'status_code'],
            registry=self.registry
        )

        self.request_duration = Histogram(
            'permstats_request_duration_seconds',
            'Request duration in seconds',
            ['method', 'endpoint'],
            registry=self.registry
        )

        # Verification metrics
        self.verifications = Counter(
            'permstats_verifications_total',
            'Verification runs by theorem and outcome',
            ['theorem', 'status'],
            registry=self.registry
        )

        self.verification_duration = Histogram(
            'permstats_verification_duration_seconds',
            'Verification wall-clock time',
            ['theorem'],
            buckets=(0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 15.0, 60.0, 300.0),
            registry=self.registry
        )

        self.elements_enumerated = Counter(
            'permstats_elements_enumerated_total',
            'Group elements visited by exhaustive scans',
            ['group', 'degree'],
            registry=self.registry
        )

        self.last_failure = Gauge(
            'permstats_last_verification_failed',
            'Whether the most recent run of a theorem failed',
            ['theorem'],
            registry=self.registry
        )

    def track_request(self, method: str, endpoint: str, status_code: int, duration: float) -> None:
        """
        Track API request metrics

        Args:
            method: HTTP method
            endpoint: API endpoint
            status_code: Response status code
            duration: Request duration in seconds
        """
        self.request_count.labels(
            method=method,
            endpoint=endpoint,
            status_code=str(status_code)
        ).inc()

        self.request_duration.labels(
            method=method,
            endpoint=endpoint
        ).observe(duration)

    def record_verification(self, theorem: str, status: str, duration: float) -> None:
        """
        Track one finished verification run

        Args:
            theorem: Theorem, lemma or oracle identifier
            status: pass or fail
            duration: Wall-clock time in seconds
        """
        self.verifications.labels(theorem=theorem, status=status).inc()
        self.verification_duration.labels(theorem=theorem).observe(duration)
        self.last_failure.labels(theorem=theorem).set(1 if status == "fail" else 0)

    def record_enumeration(self, group: str, degree: int, count: int) -> None:
        self.elements_enumerated.labels(group=group, degree=str(degree)).inc(count)

    def render(self) -> bytes:
        """Exposition-format snapshot of this collector's registry"""
        return generate_latest(self.registry)


# Global metrics collector
metrics = MetricsCollector()


def get_metrics_collector() -> MetricsCollector:
    return metrics
