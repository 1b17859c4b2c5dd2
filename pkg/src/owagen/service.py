"""Minimal HTTP/JSON API for the interactive explorer.

Stateless request/response over the core library; no persistence, no
authentication.  Handlers call pure thread-safe functions, so the
threading server needs no locking.

Endpoints
---------
POST /api/weights    {alpha, delta, n, epsilon?}        -> generation outcome
POST /api/aggregate  {alpha, delta, n, criteria: [...]} -> aggregate + weights
GET  /api/frontier?points=K                             -> feasibility parabola samples

Every response echoes the request's (alpha, delta, n) so the client can
reconcile stale responses with its current state.  Static files (the
built explorer bundle) are served from ``static_dir`` under ``/``.
"""

from __future__ import annotations

import json
import math
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .calibrate import DEFAULT_EPSILON, DecisionPoint
from .cli import outcome_doc
from .errors import DomainError, InfeasiblePointError
from .generate import generate_weights
from .metrics import owa_aggregate

__all__ = ["create_server", "serve"]


class _BadRequest(Exception):
    pass


def _number(body: dict, key: str, required: bool = True):
    if key not in body:
        if required:
            raise _BadRequest(f"missing field {key!r}")
        return None
    value = body[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _BadRequest(f"field {key!r} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise _BadRequest(f"field {key!r} must be finite")
    return float(value)


def _count(body: dict, key: str) -> int:
    value = body.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise _BadRequest(f"field {key!r} must be an integer, got {value!r}")
    return value


def _point(body: dict) -> DecisionPoint:
    alpha = _number(body, "alpha")
    delta = _number(body, "delta")
    try:
        return DecisionPoint(alpha, delta)
    except DomainError as exc:
        raise _BadRequest(str(exc)) from None


def _echo(body: dict) -> dict:
    return {k: body.get(k) for k in ("alpha", "delta", "n")}


def _epsilon(body: dict) -> float:
    value = _number(body, "epsilon", required=False)
    if value is None:
        return DEFAULT_EPSILON
    if value <= 0:
        raise _BadRequest("epsilon must be > 0")
    return value


def handle_weights(body: dict) -> tuple[int, dict]:
    point = _point(body)
    n = _count(body, "n")
    if n < 1:
        raise _BadRequest(f"n must be >= 1, got {n}")
    epsilon = _epsilon(body)
    try:
        outcome = generate_weights(point, n, epsilon)
    except InfeasiblePointError as exc:
        return 422, {
            "code": "infeasible",
            "message": str(exc),
            "delta_max": exc.delta_max,
            **_echo(body),
        }
    return 200, outcome_doc(outcome, epsilon)


def handle_aggregate(body: dict) -> tuple[int, dict]:
    point = _point(body)
    n = _count(body, "n")
    criteria = body.get("criteria")
    if not isinstance(criteria, list) or not criteria:
        raise _BadRequest("field 'criteria' must be a non-empty list of numbers")
    if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in criteria):
        raise _BadRequest("field 'criteria' must contain numbers only")
    if len(criteria) != n:
        raise _BadRequest(f"criteria length {len(criteria)} does not match n = {n}")
    epsilon = _epsilon(body)
    try:
        outcome = generate_weights(point, n, epsilon)
    except InfeasiblePointError as exc:
        return 422, {
            "code": "infeasible",
            "message": str(exc),
            "delta_max": exc.delta_max,
            **_echo(body),
        }
    values = [float(v) for v in criteria]
    return 200, {
        "value": owa_aggregate(outcome.weights, values),
        "weights": list(outcome.weights),
        "sorted_criteria": sorted(values),
        **_echo(body),
    }


def handle_frontier(query: dict) -> tuple[int, dict]:
    raw = query.get("points", ["201"])[-1]
    try:
        k = int(raw)
    except ValueError:
        raise _BadRequest(f"points must be an integer, got {raw!r}") from None
    if not 2 <= k <= 1001:
        raise _BadRequest(f"points must be in [2, 1001], got {k}")
    alphas = [i / (k - 1) for i in range(k)]
    return 200, {
        "alphas": alphas,
        "delta_max": [4.0 * a * (1.0 - a) for a in alphas],
    }


def _make_handler(static_dir: Path | None):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"
        server_version = "owagen"

        def log_message(self, fmt, *args):  # keep test output quiet
            pass

        def _send_json(self, status: int, doc: dict) -> None:
            payload = json.dumps(doc).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def _read_body(self) -> dict:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            try:
                body = json.loads(raw.decode("utf-8") or "null")
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                raise _BadRequest(f"body is not valid JSON: {exc}") from None
            if not isinstance(body, dict):
                raise _BadRequest("body must be a JSON object")
            return body

        def do_POST(self):
            path = urlparse(self.path).path
            try:
                body = self._read_body()
                if path == "/api/weights":
                    status, doc = handle_weights(body)
                elif path == "/api/aggregate":
                    status, doc = handle_aggregate(body)
                else:
                    self._send_json(404, {"code": "not_found", "message": path})
                    return
            except _BadRequest as exc:
                self._send_json(400, {"code": "bad_request", "message": str(exc)})
                return
            except (DomainError, ValueError, ArithmeticError) as exc:
                self._send_json(400, {"code": "bad_request", "message": str(exc)})
                return
            self._send_json(status, doc)

        def do_GET(self):
            url = urlparse(self.path)
            if url.path == "/api/frontier":
                try:
                    status, doc = handle_frontier(parse_qs(url.query))
                except _BadRequest as exc:
                    self._send_json(400, {"code": "bad_request", "message": str(exc)})
                    return
                self._send_json(status, doc)
                return
            self._serve_static(url.path)

        def _serve_static(self, path: str) -> None:
            if static_dir is None:
                if path == "/":
                    self._send_json(200, {
                        "service": "owagen",
                        "endpoints": ["/api/weights", "/api/aggregate", "/api/frontier"],
                    })
                else:
                    self._send_json(404, {"code": "not_found", "message": path})
                return
            name = path.lstrip("/") or "index.html"
            root = static_dir.resolve()
            target = (root / name).resolve()
            if root not in target.parents and target != root:
                self._send_json(404, {"code": "not_found", "message": path})
                return
            if target.is_dir():
                target = target / "index.html"
            if not target.is_file():
                self._send_json(404, {"code": "not_found", "message": path})
                return
            payload = target.read_bytes()
            ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

    return Handler


class _Server(ThreadingHTTPServer):
    daemon_threads = True

    def handle_error(self, request, client_address):
        # clients dropping the connection mid-request are not our problem
        import sys

        exc = sys.exc_info()[1]
        if isinstance(exc, (ConnectionResetError, BrokenPipeError, TimeoutError)):
            return
        super().handle_error(request, client_address)


def create_server(
    host: str = "127.0.0.1",
    port: int = 8080,
    static_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    """Build the threading HTTP server (call ``serve_forever`` to run it)."""
    directory = Path(static_dir) if static_dir else None
    if directory is not None and not directory.is_dir():
        raise DomainError(f"static dir {directory} does not exist")
    return _Server((host, port), _make_handler(directory))


def serve(host: str = "127.0.0.1", port: int = 8080, static_dir=None) -> None:
    """Run the API server until interrupted."""
    server = create_server(host, port, static_dir)
    address = f"http://{server.server_address[0]}:{server.server_address[1]}/"
    print(f"owagen service listening on {address}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
