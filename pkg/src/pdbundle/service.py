"""Read-only HTTP query service over a built bundle.

Endpoints:
  GET /meta                     basic size statistics and the base bbox
  GET /geometry                 arrangement dump for rendering
  GET /diagram?x=&y=&q=         diagram at a point (404 outside the base)

Rationals render as exact decimals where the denominator allows, p/q
otherwise. The bundle and locator are immutable, so responses for the
same URL are byte-identical and requests may be served concurrently.
"""
from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .bundle import PDBundle
from .query import Locator, OutsideBaseError, build_locator, query_diagram
from .rational import parse_rational, render_extended, render_rational

log = logging.getLogger("pdbundle.service")


def _meta_doc(bundle: PDBundle) -> dict:
    s = bundle.stats
    x0, y0, x1, y1 = bundle.geometry.surface.bbox()
    return {
        "N": s.n_simplices,
        "m": s.n_triangles,
        "kappa": s.kappa,
        "mu": s.mu,
        "faces": len(bundle.templates),
        "bbox": [render_rational(v) for v in (x0, y0, x1, y1)],
    }


def _geometry_doc(bundle: PDBundle) -> dict:
    geo = bundle.geometry
    verts = []
    for vid, anchor in enumerate(geo.vertex_anchors):
        x, y = geo.global_coords(vid)
        verts.append({"id": vid, "x": render_rational(x), "y": render_rational(y)})
    edges = [
        {"a": a, "b": b, "swaps": len(labels)} for a, b, labels in geo.edges
    ]
    faces = [
        {"id": f.id, "root": geo.root(f.id), "tri": f.tri, "loop": list(f.loop)}
        for f in geo.fine_faces
    ]
    triangles = [list(t) for t in geo.surface.triangles]
    base_vertices = [
        [render_rational(x), render_rational(y)] for x, y in geo.surface.bverts
    ]
    return {
        "base": {"vertices": base_vertices, "triangles": triangles},
        "vertices": verts,
        "edges": edges,
        "faces": faces,
    }


class _Handler(BaseHTTPRequestHandler):
    bundle: PDBundle
    locator: Locator
    meta_body: bytes
    geometry_body: bytes

    def log_message(self, fmt, *args):
        log.debug("%s - %s", self.address_string(), fmt % args)

    def _send(self, code: int, body: bytes, content_type="application/json") -> None:
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, code: int, doc) -> None:
        self._send(code, json.dumps(doc, sort_keys=True, separators=(",", ":")).encode())

    def do_GET(self):  # noqa: N802 (http.server API)
        url = urlparse(self.path)
        if url.path == "/meta":
            self._send(200, self.meta_body)
        elif url.path == "/geometry":
            self._send(200, self.geometry_body)
        elif url.path == "/diagram":
            self._diagram(parse_qs(url.query))
        elif url.path in ("/", "/index.html") and getattr(self, "index_body", None):
            self._send(200, self.index_body, "text/html; charset=utf-8")
        elif url.path.endswith(".js") and getattr(self, "static_dir", None):
            self._static(url.path)
        else:
            self._send_json(404, {"error": "not found"})

    def _static(self, path: str) -> None:
        import os

        name = os.path.basename(path)
        full = os.path.join(self.static_dir, name)
        if os.path.isfile(full):
            with open(full, "rb") as fh:
                self._send(200, fh.read(), "text/javascript; charset=utf-8")
        else:
            self._send_json(404, {"error": "not found"})

    def _diagram(self, params) -> None:
        try:
            x = parse_rational(params["x"][0])
            y = parse_rational(params["y"][0])
            q = int(params["q"][0])
            if q < 0:
                raise ValueError("q must be non-negative")
        except (KeyError, IndexError, ValueError) as exc:
            self._send_json(400, {"error": f"malformed query: {exc}"})
            return
        try:
            root = self.locator.locate((x, y))
            diagram = query_diagram(self.bundle, self.locator, (x, y), q)
        except OutsideBaseError:
            self._send_json(404, {"error": "point outside the base surface"})
            return
        points = [
            [render_rational(b), render_extended(d)] for b, d in diagram.points
        ]
        self._send_json(200, {"face_id": root, "points": points})


def make_server(
    bundle: PDBundle,
    host: str = "127.0.0.1",
    port: int = 8037,
    static_dir=None,
    index_html=None,
) -> ThreadingHTTPServer:
    """A configured (but not yet running) HTTP server; port 0 picks a free
    port. Optionally serves a static explorer page at /."""
    handler = type(
        "BoundHandler",
        (_Handler,),
        {
            "bundle": bundle,
            "locator": build_locator(bundle),
            "meta_body": json.dumps(
                _meta_doc(bundle), sort_keys=True, separators=(",", ":")
            ).encode(),
            "geometry_body": json.dumps(
                _geometry_doc(bundle), sort_keys=True, separators=(",", ":")
            ).encode(),
            "static_dir": static_dir,
            "index_body": (
                index_html.encode() if isinstance(index_html, str) else index_html
            ),
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def serve(bundle: PDBundle, host: str = "127.0.0.1", port: int = 8037,
          static_dir=None, index_html=None) -> None:
    server = make_server(bundle, host, port, static_dir, index_html)
    log.info("serving on http://%s:%d", *server.server_address[:2])
    print(f"pdbundle: serving on http://{server.server_address[0]}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
