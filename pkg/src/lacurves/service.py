"""Loopback HTTP service backing the interactive designer.

Endpoints (JSON request/response):
  POST /solve-step   solve one segment; optionally start a session chain
  POST /append-step  continue a session chain (G2 by default)
  POST /limits       attainable first-tangent lengths for a geometry
  POST /sample       polyline or SVG of a session chain

Sessions are in-memory chains keyed by a caller-chosen id, mutated under a
per-session lock and expired after SESSION_TTL seconds of inactivity.
The port comes from the LACURVES_PORT environment variable.
"""

import json
import math
import os
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .alphasolve import alpha_bisection, first_tangent_length
from .chain import Chain, append_fixed_alpha, append_g2, end_tangent, \
    verify_continuity
from .core import Vec2
from .documents import continuity_to_obj, segment_to_obj
from .errors import CurveError, SchemaError
from .hermite import DEFAULT_CONFIG, HermiteProblem, solve_g1
from .runner import attainable_interval
from .sampling import sample_polyline
from .svgout import SvgStyle, export_svg

PORT_ENV = "LACURVES_PORT"
SESSION_TTL = 3600.0


class SessionStore:
    """In-memory chains with per-session serialization and expiry."""

    def __init__(self, ttl=SESSION_TTL):
        self._ttl = ttl
        self._lock = threading.Lock()
        self._sessions = {}        # id -> [chain, last_used, lock]

    def lock_for(self, sid):
        with self._lock:
            entry = self._sessions.get(sid)
            if entry is None:
                entry = [None, time.monotonic(), threading.Lock()]
                self._sessions[sid] = entry
            self._expire_locked()
            return entry

    def get(self, sid):
        with self._lock:
            entry = self._sessions.get(sid)
            return None if entry is None else entry[0]

    def _expire_locked(self):
        now = time.monotonic()
        dead = [k for k, v in self._sessions.items()
                if now - v[1] > self._ttl]
        for k in dead:
            del self._sessions[k]


def _vec(obj, name):
    if (not isinstance(obj, (list, tuple)) or len(obj) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                       and math.isfinite(v) for v in obj)):
        raise SchemaError(f"{name} must be a finite [x, y] pair")
    return Vec2(float(obj[0]), float(obj[1]))


def _problem_from(payload):
    return HermiteProblem(
        _vec(payload.get("A"), "A"), _vec(payload.get("C"), "C"),
        _vec(payload.get("v_A"), "v_A"),
        _vec(payload.get("v_C_dir"), "v_C_dir"))


def _segment_payload(segment, joints=None):
    points = sample_polyline(segment, n=96)
    if segment.contains_cusp:
        kind = "cusp"
    elif segment.contains_inflection:
        kind = "inflection"
    else:
        kind = "plain"
    p1 = segment.point(1.0)
    out = {
        "segment": segment_to_obj(segment, extras={"instance": kind}),
        "polyline": [[p.x, p.y] for p in points],
        "first_tangent_length": first_tangent_length(segment),
        "end_point": [p1.x, p1.y],
    }
    try:
        v = end_tangent(segment)
        out["end_tangent"] = [v.x, v.y]
    except CurveError:
        out["end_tangent"] = None
    t_feature = segment.interior_feature_t()
    if t_feature is not None:
        p = segment.point(t_feature)
        out["feature_point"] = [p.x, p.y]
    return out


class Api:
    """Request handlers shared by the HTTP layer and in-process tests."""

    def __init__(self, cfg=DEFAULT_CONFIG):
        self.cfg = cfg
        self.sessions = SessionStore()

    def solve_step(self, payload):
        problem = _problem_from(payload)
        alpha = payload.get("alpha")
        target = payload.get("target_length")
        if (alpha is None) == (target is None):
            raise SchemaError("give exactly one of alpha or target_length")
        if alpha is not None:
            segment = solve_g1(problem, float(alpha), self.cfg)
        else:
            segment = alpha_bisection(problem, float(target), self.cfg).segment
        out = _segment_payload(segment)
        sid = payload.get("session")
        if sid is not None:
            entry = self.sessions.lock_for(str(sid))
            with entry[2]:
                entry[0] = Chain.start(segment)
                entry[1] = time.monotonic()
        return out

    def append_step(self, payload):
        sid = payload.get("session")
        if sid is None:
            raise SchemaError("append-step needs a session id")
        entry = self.sessions.lock_for(str(sid))
        with entry[2]:
            chain = entry[0]
            if chain is None or len(chain) == 0:
                raise SchemaError(f"session {sid!r} has no chain; "
                                  "solve-step first")
            C = _vec(payload.get("C"), "C")
            v_C = _vec(payload.get("v_C_dir"), "v_C_dir")
            alpha = payload.get("alpha")
            if alpha is not None:
                chain = append_fixed_alpha(chain, C, v_C, float(alpha),
                                           self.cfg)
            else:
                chain = append_g2(chain, C, v_C, self.cfg)
            entry[0] = chain
            entry[1] = time.monotonic()
            out = _segment_payload(chain.last)
            out["continuity"] = continuity_to_obj(verify_continuity(chain))
            out["segment_count"] = len(chain)
            return out

    def limits(self, payload):
        problem = _problem_from(payload)
        return attainable_interval(problem, self.cfg)

    def sample(self, payload):
        sid = payload.get("session")
        if sid is None:
            raise SchemaError("sample needs a session id")
        chain = self.sessions.get(str(sid))
        if chain is None:
            raise SchemaError(f"session {sid!r} has no chain")
        fmt = payload.get("format", "points")
        if fmt == "svg":
            overlays = bool(payload.get("overlays", False))
            style = SvgStyle(show_control_points=overlays,
                             show_tangents=overlays, show_joints=overlays)
            return {"svg": export_svg(chain, style)}
        n = int(payload.get("n", 64))
        points = sample_polyline(chain, n=n)
        return {"points": [[p.x, p.y] for p in points]}


ROUTES = {
    "/solve-step": "solve_step",
    "/append-step": "append_step",
    "/limits": "limits",
    "/sample": "sample",
}


def _error_payload(exc):
    out = {"type": type(exc).__name__, "message": str(exc)}
    attainable = getattr(exc, "attainable", None)
    if attainable is not None:
        out["attainable"] = [None if v is None or math.isinf(v) else v
                             for v in attainable]
    return {"error": out}


class Handler(BaseHTTPRequestHandler):
    api = None
    protocol_version = "HTTP/1.1"

    def log_message(self, *args):
        pass

    def _send(self, status, payload):
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self._send(204, {})

    def do_GET(self):
        if self.path == "/health":
            self._send(200, {"ok": True})
        else:
            self._send(404, {"error": {"type": "NotFoundRoute",
                                       "message": self.path}})

    def do_POST(self):
        route = ROUTES.get(self.path)
        if route is None:
            self._send(404, {"error": {"type": "NotFoundRoute",
                                       "message": self.path}})
            return
        try:
            length = int(self.headers.get("Content-Length", 0))
            payload = json.loads(self.rfile.read(length) or b"{}")
            if not isinstance(payload, dict):
                raise SchemaError("request body must be a JSON object")
            result = getattr(self.api, route)(payload)
            self._send(200, result)
        except SchemaError as exc:
            self._send(400, _error_payload(exc))
        except CurveError as exc:
            self._send(422, _error_payload(exc))
        except json.JSONDecodeError as exc:
            self._send(400, {"error": {"type": "SchemaError",
                                       "message": f"invalid JSON: {exc}"}})
        except Exception as exc:  # pragma: no cover - last resort
            self._send(500, _error_payload(exc))


def make_server(port=0, cfg=DEFAULT_CONFIG):
    """ThreadingHTTPServer bound to loopback; port 0 picks a free port."""
    api = Api(cfg)
    handler = type("BoundHandler", (Handler,), {"api": api})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    server.api = api
    return server


def main():
    port = int(os.environ.get(PORT_ENV, "8765"))
    server = make_server(port)
    print(f"lacurves service on http://127.0.0.1:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


if __name__ == "__main__":
    main()
