"""
Unit tests for the HTTP surface - envelopes, status codes and engine wiring
"""

import pytest
from fastapi.testclient import TestClient
from unittest.mock import patch

from main import app

GOLDEN_V = [6, 4, 3, 7, 5, 2, 1]


@pytest.fixture
def client():
    with TestClient(app, raise_server_exceptions=False) as test_client:
        yield test_client


def _data(response):
    body = response.json()
    assert body["success"] is True, body
    return body["data"]


class TestHealth:
    """Health and metrics endpoints"""

    def test_health_reports_limits(self, client):
        response = client.get("/health")

        assert response.status_code == 200
        data = _data(response)
        assert data["status"] == "healthy"
        assert data["environment"] == "test"
        assert data["limits"]["exhaustive_degree_cap"] == 8

    def test_root(self, client):
        assert _data(client.get("/"))["api_base"] == "/api/v1"

    def test_metrics_exposition(self, client):
        client.get("/health")
        response = client.get("/metrics")

        assert response.status_code == 200
        assert "permstats_requests_total" in response.text


class TestPermutationEndpoints:
    """Engine operations over HTTP"""

    def test_stats(self, client):
        data = _data(client.post("/api/v1/permutations/stats", json={"images": [5, 3, 6, 4, 2, 1]}))

        assert data["s"]["des"] == [1, 3, 4, 5]
        assert data["s"]["rmaj"] == 11
        assert data["s"]["del_set"] == [2, 5, 6]
        assert data["q"] is None

    def test_stats_of_odd_permutation_has_no_alternating_record(self, client):
        data = _data(client.post("/api/v1/permutations/stats", json={"images": [2, 1, 3], "q": 2}))

        assert data["a"] is None
        assert data["q"]["q"] == 2
        assert data["q"]["m"] == 3

    def test_alternating_canonical(self, client):
        """
        Core: the worked seven-letter presentation over HTTP
        """
        data = _data(client.post("/api/v1/permutations/canonical",
                                 json={"images": GOLDEN_V, "group": "a"}))

        assert data["text"] == "(a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)"
        assert data["length"] == 12
        assert [f["kind"] for f in data["factors"]] == ["tail", "tail", "run", "tail", "run"]

    def test_phi_with_trace(self, client):
        data = _data(client.post("/api/v1/permutations/foata/phi",
                                 json={"images": [6, 5, 3, 1, 4, 2], "trace": True}))

        assert data["output"] == [3, 6, 5, 4, 1, 2]
        assert data["trace"][-1] == [3, 6, 5, 4, 1, 2]
        assert len(data["trace"]) == 6

    def test_rtl_phi_inverse(self, client):
        data = _data(client.post("/api/v1/permutations/foata/rtl-phi-inverse",
                                 json={"images": [5, 6, 3, 2, 1, 4]}))

        assert data["output"] == [5, 3, 6, 4, 2, 1]
        assert data["trace"] is None

    def test_cover(self, client):
        data = _data(client.post("/api/v1/permutations/cover", json={"images": GOLDEN_V}))

        assert data["output"] == [5, 3, 6, 4, 2, 1]
        assert data["image_presentation"]["text"] == "(s_1)(s_2 s_1)(s_3 s_2)(s_4 s_3 s_2 s_1)(s_5 s_4 s_3)"

    def test_psi_with_trace(self, client):
        data = _data(client.post("/api/v1/permutations/psi", json={"images": GOLDEN_V, "trace": True}))

        assert data["output"] == [4, 6, 7, 3, 2, 1, 5]
        assert data["trace"]["f_image"] == [5, 3, 6, 4, 2, 1]
        assert data["trace"]["rtl_phi_image"] == [5, 6, 3, 2, 1, 4]

    def test_psi_inverse(self, client):
        data = _data(client.post("/api/v1/permutations/psi",
                                 json={"images": [4, 6, 7, 3, 2, 1, 5], "inverse": True}))

        assert data["output"] == GOLDEN_V

    def test_psi_q_one_is_rtl_phi(self, client):
        data = _data(client.post("/api/v1/permutations/psiq",
                                 json={"images": [5, 3, 6, 4, 2, 1], "q": 1}))

        assert data["output"] == [5, 6, 3, 2, 1, 4]

    def test_avoid_witness(self, client):
        data = _data(client.post("/api/v1/permutations/avoid", json={"q": 2, "images": [2, 1, 4, 3]}))

        assert data["avoids"] is False
        assert data["occurrence"] == {"pattern": "(2-1-4,3)", "positions": [1, 2, 3, 4]}
        assert data["patterns"] == ["(1-2-4,3)", "(2-1-4,3)"]

    def test_avoid_enumeration(self, client):
        data = _data(client.post("/api/v1/permutations/avoid", json={"q": 1, "enumerate_degree": 3}))

        assert data["count"] == 5
        assert [1, 3, 2] not in data["avoiders"]
        assert "avoids" not in data


class TestErrorEnvelopes:
    """Engine and schema errors map to coded envelopes"""

    def test_odd_permutation(self, client):
        response = client.post("/api/v1/permutations/canonical", json={"images": [2, 1, 3], "group": "a"})

        assert response.status_code == 422
        assert response.json()["error"]["code"] == "VALIDATION_ODD_PERMUTATION"

    def test_not_a_permutation(self, client):
        response = client.post("/api/v1/permutations/stats", json={"images": [1, 1]})

        assert response.status_code == 422
        assert response.json()["error"]["code"] == "VALIDATION_INVALID_PERMUTATION"

    def test_unknown_foata_operation(self, client):
        response = client.post("/api/v1/permutations/foata/omega", json={"images": [1, 2]})

        assert response.status_code == 422
        assert response.json()["error"]["details"]["operation"] == "omega"

    def test_schema_violation(self, client):
        """
        Core: body validation failures share the envelope with a list of field errors
        """
        response = client.post("/api/v1/permutations/avoid",
                               json={"q": 1, "images": [1, 2], "enumerate_degree": 3})
        body = response.json()

        assert response.status_code == 422
        assert body["success"] is False
        assert body["error"]["code"] == "VALIDATION_OUT_OF_DOMAIN"
        assert body["error"]["details"]["errors"]

    def test_unhandled_exception_is_enveloped(self, client):
        with patch("services.operations.stats_of", side_effect=RuntimeError("boom")):
            response = client.post("/api/v1/permutations/stats", json={"images": [1, 2]})

        assert response.status_code == 500
        assert response.json()["error"]["code"] == "SYSTEM_INTERNAL_ERROR"
        assert response.json()["error"]["details"] == {"exception_type": "RuntimeError"}


class TestVerificationEndpoints:
    """Verification runs and tables"""

    def test_verify_macmahon(self, client):
        body = client.post("/api/v1/verify", json={"theorem": "MacMahon", "n": 5}).json()

        assert body["meta"] == {"all_passed": True, "reports": 1}
        assert body["data"][0]["theorem"] == "macmahon"
        assert body["data"][0]["status"] == "pass"

    def test_verify_a_eq_sweeps_both_regimes(self, client):
        body = client.post("/api/v1/verify", json={"theorem": "a-eq", "n": 3}).json()

        assert body["meta"]["reports"] == 2
        assert [r["params"]["regime"] for r in body["data"]] == ["literal", "extended"]

    def test_verify_above_cap(self, client):
        """
        Core: the HTTP surface never raises the degree cap
        """
        response = client.post("/api/v1/verify", json={"theorem": "psi", "n": 8})

        assert response.status_code == 413
        assert response.json()["error"]["code"] == "RESOURCE_CAP_EXCEEDED"

    def test_verify_unknown_theorem(self, client):
        response = client.post("/api/v1/verify", json={"theorem": "fermat", "n": 3})

        assert response.status_code == 422
        assert "known" in response.json()["error"]["details"]

    def test_table(self, client):
        data = _data(client.post("/api/v1/tables", json={"group": "s", "statistic": "ell", "n": 3}))

        assert data["coefficients"] == {"0": 1, "1": 2, "2": 2, "3": 1}
        assert data["population"] == 6
        assert data["q"] is None
        assert data["set_match"] is None

    def test_table_with_set_filters(self, client):
        data = _data(client.post("/api/v1/tables", json={
            "group": "a", "statistic": "ell", "n": 5, "des": [1, 3], "del_set": [3, 4]}))

        assert data["set_match"] == "within"
        assert data["des"] == [1, 3]
        assert 0 < data["population"] < 60
