import json
import threading
import urllib.error
import urllib.request

import pytest

from pdbundle.bundle import build
from pdbundle.service import make_server


@pytest.fixture(scope="module")
def ff1_server():
    from conftest import make_ff1

    complex_, filt = make_ff1()
    bundle = build(complex_, filt)
    server = make_server(bundle, port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()


def get(base, path):
    try:
        with urllib.request.urlopen(base + path) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def test_meta(ff1_server):
    status, body = get(ff1_server, "/meta")
    assert status == 200
    doc = json.loads(body)
    assert doc["N"] == 3 and doc["m"] == 2
    assert doc["kappa"] == 1 and doc["mu"] == 6
    assert doc["bbox"] == ["0", "0", "1", "1"]


def test_diagram_at_origin(ff1_server):
    status, body = get(ff1_server, "/diagram?x=0&y=0&q=0")
    assert status == 200
    doc = json.loads(body)
    assert doc["points"] == [["-1", "inf"], ["0", "2"]]
    assert isinstance(doc["face_id"], int)


def test_diagram_outside_is_404(ff1_server):
    status, body = get(ff1_server, "/diagram?x=5&y=5&q=0")
    assert status == 404


def test_malformed_queries_are_400(ff1_server):
    for query in ("/diagram?x=0&y=0", "/diagram?x=a&y=0&q=0", "/diagram?x=0&y=0&q=-1",
                  "/diagram?x=0&y=0&q=zero"):
        status, _ = get(ff1_server, query)
        assert status == 400, query


def test_geometry(ff1_server):
    status, body = get(ff1_server, "/geometry")
    assert status == 200
    doc = json.loads(body)
    assert len(doc["base"]["triangles"]) == 2
    assert len(doc["vertices"]) == 6
    assert len(doc["faces"]) == 3  # fine faces, each tagged with its root
    roots = {f["root"] for f in doc["faces"]}
    assert len(roots) == 2
    swap_counts = sorted(e["swaps"] for e in doc["edges"])
    assert swap_counts.count(1) == 1  # exactly the swap chord is labelled


def test_responses_are_byte_identical(ff1_server):
    a = get(ff1_server, "/diagram?x=0.125&y=0.25&q=0")
    b = get(ff1_server, "/diagram?x=0.125&y=0.25&q=0")
    assert a == b
    assert get(ff1_server, "/meta") == get(ff1_server, "/meta")


def test_unknown_path_404(ff1_server):
    status, _ = get(ff1_server, "/nope")
    assert status == 404


def test_diagram_matches_cli_rendering(ff1_server, tmp_path):
    """The explorer displays service points verbatim, so service points
    joined by spaces/newlines must equal the CLI `query` output exactly."""
    import contextlib
    import io

    from pdbundle.cli import main
    from test_formats import FF1_TEXT

    inp = tmp_path / "ff1.txt"
    inp.write_text(FF1_TEXT)
    out = tmp_path / "ff1.bundle.json"
    assert main(["build", str(inp), "-o", str(out)]) == 0
    for x, y in (("0", "0"), ("1", "0")):
        status, body = get(ff1_server, f"/diagram?x={x}&y={y}&q=0")
        assert status == 200
        doc = json.loads(body)
        via_service = "".join(f"{b} {d}\n" for b, d in doc["points"])
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(["query", str(out), "--point", f"{x},{y}", "--dim", "0"]) == 0
        assert via_service == buf.getvalue()


def test_geometry_matches_frontend_fixture(ff1_server):
    """The FF1 geometry hardcoded in the explorer's tests must be exactly
    what the live service returns."""
    status, body = get(ff1_server, "/geometry")
    doc = json.loads(body)
    assert doc["base"] == {
        "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
        "triangles": [[0, 1, 2], [1, 3, 2]],
    }
    assert doc["vertices"] == [
        {"id": 0, "x": "0", "y": "0"},
        {"id": 1, "x": "1", "y": "0"},
        {"id": 2, "x": "0", "y": "1"},
        {"id": 3, "x": "1", "y": "1"},
        {"id": 4, "x": "0.5", "y": "0"},
        {"id": 5, "x": "0", "y": "0.5"},
    ]
    assert sorted(doc["faces"], key=lambda f: f["id"]) == [
        {"id": 0, "root": 0, "tri": 0, "loop": [4, 5, 0]},
        {"id": 1, "root": 1, "tri": 1, "loop": [1, 3, 2]},
        {"id": 2, "root": 1, "tri": 0, "loop": [5, 4, 1, 2]},
    ]
    # the shared base edge merged away: P+ and the T2 face are one polygon
    assert {(e["a"], e["b"], e["swaps"]) for e in doc["edges"]} == {
        (0, 4, 0),
        (1, 4, 0),
        (0, 5, 0),
        (2, 5, 0),
        (1, 3, 0),
        (2, 3, 0),
        (4, 5, 1),
    }
