"""
Unit tests for the exhaustive checkers and counterexample replay
"""

import math
from unittest.mock import ANY, MagicMock

import pytest

from schemas.reports import Counterexample, ReportStatus, VerifyReport
from services.verification import checkers
from services.verification.base import PropertySpec
from utils.config import get_config
from utils.exceptions import DomainError, ResourceCapError


def _summary(reports):
    return [(r.theorem, r.status, r.population, r.counterexample) for r in reports]


@pytest.fixture
def broken_property(monkeypatch):
    """A registered-looking property that fails whenever w(1) = 3"""
    prop = PropertySpec(
        "broken", "s", "fails on a leading 3",
        lambda w, q: {"first": w(1)} if w(1) == 3 else None,
    )
    monkeypatch.setattr(checkers, "get_property", lambda name: prop)
    return prop


class TestCaps:
    """Degree caps and worker resolution"""

    def test_default_caps(self):
        checkers.require_cap(8, slow=False)
        with pytest.raises(ResourceCapError):
            checkers.require_cap(9, slow=False)
        checkers.require_cap(9, slow=True)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("PERMSTATS_EXHAUSTIVE_DEGREE_CAP", "4")
        get_config.cache_clear()

        with pytest.raises(ResourceCapError):
            checkers.check_macmahon(5)

    def test_workers_default_to_config(self, monkeypatch):
        monkeypatch.setenv("PERMSTATS_WORKERS", "3")
        get_config.cache_clear()

        assert checkers.resolve_workers(None) == 3
        assert checkers.resolve_workers(2) == 2


class TestPropertySuites:
    """Element-wise suites with bijectivity"""

    def test_single_property(self):
        report = checkers.check_property("phi-maj-length", 5)

        assert report.passed
        assert report.theorem == "property:phi-maj-length"
        assert report.population == 120

    def test_property_below_min_degree(self):
        with pytest.raises(DomainError):
            checkers.check_property("psi-theorem", 2)

    def test_foata_suite(self):
        reports = checkers.check_foata(5)
        theorems = [r.theorem for r in reports]

        assert all(r.passed for r in reports)
        assert "foata:phi-bijection" in theorems
        assert "foata:rtl-phi-bijection" in theorems
        assert len(reports) == 11

    def test_lemma_suite(self):
        reports = checkers.check_lemma_suite(5, q_cap=2)

        assert reports
        assert all(r.passed for r in reports), [r.theorem for r in reports if not r.passed]

    def test_oracles(self):
        reports = checkers.check_oracles(5)
        theorems = {r.theorem for r in reports}

        assert all(r.passed for r in reports)
        assert {"oracle:s-factor-tuples", "oracle:a-factor-tuples"} <= theorems

    def test_worker_count_does_not_change_reports(self):
        """
        Core: slices merge in key order, so fan-out is invisible in the reports
        """
        assert _summary(checkers.check_foata(5, workers=2)) == _summary(checkers.check_foata(5, workers=1))

    def test_failure_is_first_lexicographic_counterexample(self, broken_property):
        report = checkers.check_property("broken", 4)

        assert report.status is ReportStatus.FAIL
        assert report.counterexample.permutation == [3, 1, 2, 4]
        assert report.counterexample.property == "broken"
        assert report.counterexample.observed == {"first": 3}
        assert report.population == 24
        assert checkers.replay(report)

    def test_engine_error_recorded_as_observation(self, monkeypatch):
        def explode(w, q):
            raise DomainError("not here")

        prop = PropertySpec("explodes", "s", "always raises", explode)
        monkeypatch.setattr(checkers, "get_property", lambda name: prop)

        report = checkers.check_property("explodes", 3)

        assert report.counterexample.observed == {
            "error": "not here", "code": "VALIDATION_OUT_OF_DOMAIN",
        }


class TestTheorems:
    """Distribution theorems"""

    def test_psi_theorem(self):
        report = checkers.check_psi_theorem(4)

        assert report.passed
        assert report.theorem == "psi"
        assert report.population == 60

    def test_psi_theorem_needs_degree_three(self):
        with pytest.raises(DomainError):
            checkers.check_psi_theorem(1)

    @pytest.mark.parametrize("n,q", [(3, 1), (3, 2), (2, 3)])
    def test_psi_q_theorem(self, n, q):
        report = checkers.check_psi_q_theorem(n, q)

        assert report.passed
        assert report.params == {"n": n, "q": q}

    def test_macmahon(self):
        report = checkers.check_macmahon(5)

        assert report.passed
        assert report.population == 120

    def test_a_eq_full_sets(self):
        report = checkers.check_a_eq(4, {1, 2, 3}, {1, 2, 3, 4, 5})

        assert report.passed
        assert report.population == 60

    def test_a_eq_restricted_sets(self):
        report = checkers.check_a_eq(4, {1}, {3, 4})

        assert report.passed
        assert report.population < 60

    @pytest.mark.parametrize("regime", checkers.A_EQ_REGIMES)
    def test_a_eq_all(self, regime):
        report = checkers.check_a_eq_all(4, regime)

        assert report.passed
        assert report.params == {"n": 4, "regime": regime}
        assert report.notes

    def test_a_eq_unknown_regime(self):
        with pytest.raises(DomainError):
            checkers.check_a_eq_all(4, "generous")

    def test_qst1(self):
        assert checkers.check_qst1(3, 2, {2, 3}, {3}).passed
        report = checkers.check_qst1_all(3, 2)
        assert report.passed
        assert report.population == 24

    def test_qst2(self):
        assert checkers.check_qst2(3, 2, {2}).passed
        report = checkers.check_qst2_all(3, 2)
        assert report.passed
        assert 0 < report.population < 24

    def test_f_fibers(self):
        report = checkers.check_f_fibers(4)

        assert report.passed
        assert report.population == 60

    def test_f_fibers_are_not_uniform(self, monkeypatch):
        """
        Core: fibers have size 2^del_S(w), so an equal-size expectation fails
        """
        monkeypatch.setattr(checkers.stats, "del_s", lambda w: 0)

        report = checkers.check_f_fibers(3)

        assert report.status == ReportStatus.FAIL
        assert report.counterexample.observed["expected"] == 1
        assert report.counterexample.observed["fiber_size"] > 1

    @pytest.mark.slow
    def test_psi_theorem_degree_eight(self):
        assert checkers.check_psi_theorem(7, slow=True).passed

    def test_metrics_recorded(self, monkeypatch):
        collector = MagicMock()
        monkeypatch.setattr(checkers, "get_metrics_collector", lambda: collector)

        checkers.check_macmahon(4)

        collector.record_verification.assert_called_once_with("macmahon", "pass", ANY)


_Q_PAIRS_UP_TO_7 = [(m - q + 1, q) for q in (1, 2, 3) for m in range(q + 1, 8)]
_Q_PAIRS_UP_TO_6 = [(m - q + 1, q) for q in (1, 2, 3) for m in range(q + 1, 7)]


@pytest.mark.slow
class TestFullScaleRuns:
    """Every theorem, lemma and oracle at the largest routinely checked degrees"""

    def test_foata_suite_through_s8(self):
        reports = checkers.check_foata(8)

        assert reports
        assert all(r.status == "pass" for r in reports), [r.theorem for r in reports if not r.passed]

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_psi_theorem_through_a7(self, n):
        """
        Core: all parts of the psi theorem, A_3 through A_7
        """
        report = checkers.check_psi_theorem(n)

        assert report.status == "pass"
        assert report.population == math.factorial(n + 1) // 2

    @pytest.mark.parametrize("n,q", _Q_PAIRS_UP_TO_7)
    def test_psi_q_theorem_through_degree_seven(self, n, q):
        report = checkers.check_psi_q_theorem(n, q)

        assert report.status == "pass"
        assert report.population == math.factorial(n + q - 1)

    @pytest.mark.parametrize("regime", ["literal", "extended"])
    def test_a_eq_all_subsets_on_a6(self, regime):
        report = checkers.check_a_eq_all(5, regime)

        assert report.status == "pass"
        assert report.population == 360

    @pytest.mark.parametrize("n,q", _Q_PAIRS_UP_TO_6)
    def test_qst1_all_classes(self, n, q):
        assert checkers.check_qst1_all(n, q).status == "pass"

    @pytest.mark.parametrize("n,q", _Q_PAIRS_UP_TO_6)
    def test_qst2_all_classes(self, n, q):
        assert checkers.check_qst2_all(n, q).status == "pass"

    def test_lemma_suite_degree_seven(self):
        reports = checkers.check_lemma_suite(7, 3)

        assert all(r.status == "pass" for r in reports), [r.theorem for r in reports if not r.passed]

    def test_oracles_degree_seven(self):
        reports = checkers.check_oracles(7, 3)

        assert all(r.status == "pass" for r in reports), [r.theorem for r in reports if not r.passed]


class TestReplay:
    """Re-checking stored counterexamples"""

    def test_passing_report_does_not_replay(self):
        assert not checkers.replay(checkers.check_macmahon(3))

    def test_spurious_collision_does_not_reproduce(self):
        report = VerifyReport(
            theorem="foata:phi-bijection", status=ReportStatus.FAIL, population=6, elapsed_ms=0.0,
            counterexample=Counterexample(
                permutation=[2, 1, 3], degree=3, q=1,
                observed={"image_map": "phi", "image": [2, 1, 3], "other_preimage": [1, 2, 3]},
            ),
        )

        assert not checkers.replay(report)

    def test_spurious_distribution_failure_does_not_reproduce(self):
        report = VerifyReport(
            theorem="macmahon", params={"n": 4}, status=ReportStatus.FAIL, population=24,
            elapsed_ms=0.0, counterexample=Counterexample(degree=4, observed={}),
        )

        assert not checkers.replay(report)

    def test_unknown_theorem(self):
        report = VerifyReport(
            theorem="folklore", status=ReportStatus.FAIL, population=0, elapsed_ms=0.0,
            counterexample=Counterexample(observed={"claim": "x"}),
        )

        with pytest.raises(DomainError):
            checkers.replay(report)
