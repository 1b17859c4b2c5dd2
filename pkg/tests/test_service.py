"""HTTP API: status codes, payload shapes, statelessness."""

import json
import threading
from http.client import HTTPConnection

import pytest

from owagen import orness
from owagen.service import create_server


@pytest.fixture(scope="module")
def server():
    srv = create_server(host="127.0.0.1", port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv
    srv.shutdown()
    srv.server_close()
    thread.join(timeout=5)


def request(server, method, path, body=None):
    host, port = server.server_address
    conn = HTTPConnection(host, port, timeout=10)
    payload = json.dumps(body) if body is not None else None
    headers = {"Content-Type": "application/json"} if payload else {}
    conn.request(method, path, body=payload, headers=headers)
    response = conn.getresponse()
    doc = json.loads(response.read().decode("utf-8"))
    conn.close()
    return response.status, doc


class TestWeightsEndpoint:
    def test_corner_vector(self, server):
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": 0, "delta": 0, "n": 3})
        assert status == 200
        assert doc["weights"] == [1.0, 0.0, 0.0]
        assert (doc["alpha"], doc["delta"], doc["n"]) == (0, 0, 3)

    def test_infeasible_carries_delta_max(self, server):
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": 0.1, "delta": 0.9, "n": 5})
        assert status == 422
        assert doc["code"] == "infeasible"
        assert doc["delta_max"] == pytest.approx(0.36, abs=1e-12)
        assert doc["alpha"] == 0.1 and doc["delta"] == 0.9 and doc["n"] == 5

    def test_malformed_alpha(self, server):
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": "x", "delta": 0.5, "n": 3})
        assert status == 400
        assert doc["code"] == "bad_request"

    def test_missing_field(self, server):
        status, doc = request(server, "POST", "/api/weights", {"alpha": 0.5, "n": 3})
        assert status == 400

    def test_invalid_json_body(self, server):
        host, port = server.server_address
        conn = HTTPConnection(host, port, timeout=10)
        conn.request("POST", "/api/weights", body="{not json",
                     headers={"Content-Type": "application/json"})
        response = conn.getresponse()
        assert response.status == 400
        conn.close()

    def test_metrics_match_recomputation(self, server):
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": 0.4, "delta": 0.6, "n": 6})
        assert status == 200
        assert doc["feasible"] is True
        assert orness(doc["weights"]) == doc["orness"]

    def test_single_criterion_metrics_are_null(self, server):
        # undefined metrics must arrive as JSON null, not bare NaN
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": 0.4, "delta": 0.2, "n": 1})
        assert status == 200
        assert doc["weights"] == [1.0]
        assert doc["orness"] is None
        assert doc["dispersion"] is None
        assert doc["method"] == "single"

    def test_zero_epsilon_rejected(self, server):
        status, doc = request(server, "POST", "/api/weights",
                              {"alpha": 0.4, "delta": 0.2, "n": 3, "epsilon": 0})
        assert status == 400
        assert doc["code"] == "bad_request"


class TestAggregateEndpoint:
    def test_near_uniform_two_criteria(self, server):
        status, doc = request(server, "POST", "/api/aggregate",
                              {"alpha": 0.5, "delta": 0.999, "n": 2, "criteria": [0, 10]})
        assert status == 200
        assert doc["value"] == pytest.approx(5.0, abs=0.05)
        assert doc["sorted_criteria"] == [0.0, 10.0]
        assert len(doc["weights"]) == 2

    def test_length_mismatch(self, server):
        status, doc = request(server, "POST", "/api/aggregate",
                              {"alpha": 0.5, "delta": 0.5, "n": 3, "criteria": [1, 2]})
        assert status == 400

    def test_max_operator(self, server):
        status, doc = request(server, "POST", "/api/aggregate",
                              {"alpha": 1, "delta": 0, "n": 4, "criteria": [4, 1, 3, 2]})
        assert status == 200
        assert doc["value"] == 4.0

    def test_infeasible(self, server):
        status, doc = request(server, "POST", "/api/aggregate",
                              {"alpha": 0.05, "delta": 0.9, "n": 2, "criteria": [1, 2]})
        assert status == 422
        assert doc["code"] == "infeasible"


class TestFrontierEndpoint:
    def test_three_points(self, server):
        status, doc = request(server, "GET", "/api/frontier?points=3")
        assert status == 200
        assert doc["delta_max"] == [0.0, 1.0, 0.0]

    def test_five_points(self, server):
        status, doc = request(server, "GET", "/api/frontier?points=5")
        assert status == 200
        assert doc["delta_max"] == [0.0, 0.75, 1.0, 0.75, 0.0]
        assert doc["alphas"] == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_single_point_rejected(self, server):
        status, doc = request(server, "GET", "/api/frontier?points=1")
        assert status == 400

    def test_out_of_range_high(self, server):
        status, _ = request(server, "GET", "/api/frontier?points=2000")
        assert status == 400

    def test_non_numeric(self, server):
        status, _ = request(server, "GET", "/api/frontier?points=abc")
        assert status == 400


class TestServiceBehaviour:
    def test_stateless_under_permutation(self, server):
        requests = [
            ("POST", "/api/weights", {"alpha": 0.3, "delta": 0.4, "n": 4}),
            ("POST", "/api/aggregate", {"alpha": 0.5, "delta": 0.5, "n": 2, "criteria": [1, 9]}),
            ("GET", "/api/frontier?points=4", None),
        ]
        first = [request(server, *req) for req in requests]
        second = [request(server, *req) for req in reversed(requests)]
        assert first == list(reversed(second))

    def test_unknown_api_path(self, server):
        status, _ = request(server, "POST", "/api/unknown", {})
        assert status == 404

    def test_root_without_static_dir(self, server):
        status, doc = request(server, "GET", "/")
        assert status == 200
        assert "/api/weights" in doc["endpoints"]

    def test_concurrent_requests(self, server):
        results = []
        def worker():
            results.append(request(server, "POST", "/api/weights",
                                   {"alpha": 0.5, "delta": 0.8, "n": 5}))
        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(status == 200 for status, _ in results)
        docs = [doc for _, doc in results]
        assert all(doc == docs[0] for doc in docs)


class TestStaticServing:
    def test_serves_files_from_static_dir(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>explorer</html>")
        srv = create_server(host="127.0.0.1", port=0, static_dir=tmp_path)
        thread = threading.Thread(target=srv.serve_forever, daemon=True)
        thread.start()
        try:
            host, port = srv.server_address
            conn = HTTPConnection(host, port, timeout=10)
            conn.request("GET", "/")
            response = conn.getresponse()
            body = response.read().decode()
            assert response.status == 200
            assert "explorer" in body
            conn.close()
        finally:
            srv.shutdown()
            srv.server_close()
            thread.join(timeout=5)

    def test_path_traversal_blocked(self, tmp_path):
        (tmp_path / "index.html").write_text("ok")
        srv = create_server(host="127.0.0.1", port=0, static_dir=tmp_path)
        thread = threading.Thread(target=srv.serve_forever, daemon=True)
        thread.start()
        try:
            host, port = srv.server_address
            conn = HTTPConnection(host, port, timeout=10)
            conn.request("GET", "/../../etc/passwd")
            response = conn.getresponse()
            assert response.status in (400, 404)
            response.read()
            conn.close()
        finally:
            srv.shutdown()
            srv.server_close()
            thread.join(timeout=5)
