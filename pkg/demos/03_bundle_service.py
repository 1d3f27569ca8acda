"""Archive a bundle, serve it over HTTP, and query it like the explorer.

The service exposes three read-only endpoints: /meta, /geometry, and
/diagram?x=&y=&q=. The browser explorer in frontend/ consumes exactly
these. Here we exercise them programmatically against a throwaway server.
"""
import json
import tempfile
import threading
import urllib.request

from pdbundle import (
    build,
    grid_surface,
    drifting_clouds,
    vietoris_rips_fibered,
    save_bundle,
    load_bundle,
)
from pdbundle.service import make_server

base = grid_surface(3, 3)
K, F = vietoris_rips_fibered(base, drifting_clouds(base, 5, seed=4), maxdim=2)
bundle = build(K, F)

# bundles round-trip through a single JSON archive, so building and
# serving can run in separate processes
with tempfile.NamedTemporaryFile(suffix=".json", delete=False) as fh:
    path = fh.name
save_bundle(bundle, path)
loaded = load_bundle(path)
print(f"archived bundle: {len(open(path).read())} bytes, "
      f"{len(loaded.templates)} templates")

server = make_server(loaded, port=0)  # port 0: pick any free port
host, port = server.server_address[:2]
threading.Thread(target=server.serve_forever, daemon=True).start()
print(f"serving on http://{host}:{port}")


def get(path):
    with urllib.request.urlopen(f"http://{host}:{port}{path}") as resp:
        return json.loads(resp.read())


meta = get("/meta")
print("meta:", meta)

geometry = get("/geometry")
print(f"geometry: {len(geometry['vertices'])} vertices, "
      f"{len(geometry['edges'])} edges, {len(geometry['faces'])} polygons")

for (x, y) in [("0", "0"), ("1", "1"), ("1.5", "0.5")]:
    doc = get(f"/diagram?x={x}&y={y}&q=1")
    print(f"PD_1 at ({x}, {y}): face {doc['face_id']}, points {doc['points']}")

server.shutdown()
print("\nfor the interactive explorer, build the frontend once")
print("(cd frontend && npm install && npm run build), then:")
print("  pdbundle build <input> -o bundle.json")
print("  pdbundle serve bundle.json --port 8037 --explorer frontend/")
print("and open http://127.0.0.1:8037/")
