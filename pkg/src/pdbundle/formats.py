"""Plain-text input format and the self-describing bundle archive.

Input files have three sections in order: `simplices:` (one simplex per
line, space-separated sorted vertex labels, file order = simplex id),
`base:` (`v <x> <y>` vertex lines, then `t <i> <j> <k>` triangle lines
with 0-based vertex indices), and `values:` (`<simplex id> <base vertex>
<value>` for every pair). Numbers are integers, exact decimals, or p/q.

The archive is a single JSON document with every rational stored as a
`p/q` string; parsing it back reproduces an equivalent bundle without
rebuilding anything.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from .bundle import BundleGeometry, BundleStats, PDBundle, Template
from .arrangement import FineFace
from .complexes import SimplicialComplex
from .filtration import FiberedFiltration, FiltrationError, TriangulatedSurface
from .rational import parse_rational

ARCHIVE_FORMAT = "pdbundle-archive"
ARCHIVE_VERSION = 1


class ParseError(ValueError):
    def __init__(self, line_no: Optional[int], message: str):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def parse_input_text(text: str) -> Tuple[SimplicialComplex, FiberedFiltration]:
    section = None
    simplices: List[List[int]] = []
    bverts: List[Tuple[object, object]] = []
    triangles: List[Tuple[int, int, int]] = []
    values: Dict[Tuple[int, int], object] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("simplices:", "base:", "values:"):
            order = ["simplices:", "base:", "values:"]
            if section is not None and order.index(line) <= order.index(section):
                raise ParseError(line_no, f"section {line} out of order")
            section = line
            continue
        if section == "simplices:":
            try:
                verts = [int(tok) for tok in line.split()]
            except ValueError:
                raise ParseError(line_no, f"bad simplex line {line!r}") from None
            if any(v < 0 for v in verts):
                raise ParseError(line_no, "vertex labels must be non-negative")
            if any(b <= a for a, b in zip(verts, verts[1:])):
                raise ParseError(line_no, f"simplex vertices {verts} not strictly sorted")
            simplices.append(verts)
        elif section == "base:":
            toks = line.split()
            if toks[0] == "v" and len(toks) == 3:
                try:
                    bverts.append((parse_rational(toks[1]), parse_rational(toks[2])))
                except ValueError as exc:
                    raise ParseError(line_no, str(exc)) from None
            elif toks[0] == "t" and len(toks) == 4:
                try:
                    tri = tuple(int(t) for t in toks[1:])
                except ValueError:
                    raise ParseError(line_no, f"bad triangle line {line!r}") from None
                triangles.append(tri)
            else:
                raise ParseError(line_no, f"expected 'v x y' or 't i j k', got {line!r}")
        elif section == "values:":
            toks = line.split()
            if len(toks) != 3:
                raise ParseError(line_no, f"expected '<simplex> <vertex> <value>', got {line!r}")
            try:
                sid, v = int(toks[0]), int(toks[1])
                val = parse_rational(toks[2])
            except ValueError as exc:
                raise ParseError(line_no, str(exc)) from None
            if not (1 <= sid <= len(simplices)):
                raise ParseError(line_no, f"simplex id {sid} out of range 1..{len(simplices)}")
            if not (0 <= v < len(bverts)):
                raise ParseError(line_no, f"base vertex {v} out of range 0..{len(bverts) - 1}")
            if (sid, v) in values:
                raise ParseError(line_no, f"duplicate value for simplex {sid}, vertex {v}")
            values[(sid, v)] = val
        else:
            raise ParseError(line_no, f"content before the simplices: section: {line!r}")
    if not simplices:
        raise ParseError(None, "no simplices")
    complex_ = SimplicialComplex(simplices)
    surface = TriangulatedSurface(bverts, triangles)
    filtration = FiberedFiltration(complex_, surface, values)
    violation = filtration.validate_monotone()
    if violation is not None:
        raise FiltrationError(violation)
    return complex_, filtration


def parse_input(path: str) -> Tuple[SimplicialComplex, FiberedFiltration]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_input_text(fh.read())


def write_input_text(filtration: FiberedFiltration) -> str:
    lines = ["simplices:"]
    for s in filtration.complex.simplices:
        lines.append(" ".join(str(v) for v in s.vertices))
    lines.append("base:")
    for x, y in filtration.base.bverts:
        lines.append(f"v {_rq(x)} {_rq(y)}")
    for a, b, c in filtration.base.triangles:
        lines.append(f"t {a} {b} {c}")
    lines.append("values:")
    for sid in range(1, len(filtration.complex) + 1):
        for v in range(len(filtration.base.bverts)):
            lines.append(f"{sid} {v} {_rq(filtration.values[sid - 1][v])}")
    return "\n".join(lines) + "\n"


def _rq(value) -> str:
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _anchor_to_json(anchor) -> list:
    if anchor[0] == "bvert":
        return ["b", anchor[1]]
    if anchor[0] == "edge":
        return ["e", anchor[1], _rq(anchor[2])]
    return ["i", anchor[1], _rq(anchor[2]), _rq(anchor[3])]


def _anchor_from_json(row) -> tuple:
    if row[0] == "b":
        return ("bvert", row[1])
    if row[0] == "e":
        return ("edge", row[1], parse_rational(row[2]))
    return ("interior", row[1], parse_rational(row[2]), parse_rational(row[3]))


def serialize_bundle(bundle: PDBundle) -> str:
    geo = bundle.geometry
    stats = bundle.stats
    doc = {
        "header": {
            "format": ARCHIVE_FORMAT,
            "version": ARCHIVE_VERSION,
            "N": stats.n_simplices,
            "m": stats.n_triangles,
            "stats": {
                "kappa": stats.kappa,
                "kappa_per_triangle": [
                    stats.kappa_per_triangle[t] for t in range(stats.n_triangles)
                ],
                "mu": stats.mu,
                "mu_per_triangle": [
                    stats.mu_per_triangle[t] for t in range(stats.n_triangles)
                ],
                "crossings_applied": stats.crossings_applied,
                "pairing_changes": stats.pairing_changes,
            },
        },
        "complex": [list(s.vertices) for s in bundle.complex.simplices],
        "base": {
            "vertices": [[_rq(x), _rq(y)] for x, y in geo.surface.bverts],
            "triangles": [list(t) for t in geo.surface.triangles],
        },
        "values": [
            [_rq(v) for v in row] for row in bundle.filtration.values
        ],
        "arrangement": {
            "vertices": [_anchor_to_json(a) for a in geo.vertex_anchors],
            "fine_faces": [[f.id, f.tri, list(f.loop)] for f in geo.fine_faces],
            "face_root": sorted(geo.face_root.items()),
            "edges": [
                [a, b, [list(p) for p in labels]] for a, b, labels in geo.edges
            ],
        },
        "templates": [
            [
                root,
                sorted(map(list, tpl.pairs)),
                sorted(tpl.unpaired),
            ]
            for root, tpl in sorted(bundle.templates.items())
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse_bundle_text(text: str) -> PDBundle:
    doc = json.loads(text)
    header = doc["header"]
    if header.get("format") != ARCHIVE_FORMAT:
        raise ParseError(None, "not a bundle archive")
    if header.get("version") != ARCHIVE_VERSION:
        raise ParseError(None, f"unsupported archive version {header.get('version')}")
    complex_ = SimplicialComplex([tuple(v) for v in doc["complex"]])
    base = TriangulatedSurface(
        [(parse_rational(x), parse_rational(y)) for x, y in doc["base"]["vertices"]],
        [tuple(t) for t in doc["base"]["triangles"]],
    )
    values = {}
    for sid, row in enumerate(doc["values"], start=1):
        for v, entry in enumerate(row):
            values[(sid, v)] = parse_rational(entry)
    filtration = FiberedFiltration(complex_, base, values)
    arr = doc["arrangement"]
    geometry = BundleGeometry(
        base,
        [_anchor_from_json(a) for a in arr["vertices"]],
        [FineFace(fid, tri, tuple(loop)) for fid, tri, loop in arr["fine_faces"]],
        {fid: root for fid, root in arr["face_root"]},
        [(a, b, tuple(tuple(p) for p in labels)) for a, b, labels in arr["edges"]],
    )
    templates = {
        root: Template(root, frozenset(map(tuple, pairs)), frozenset(unpaired))
        for root, pairs, unpaired in doc["templates"]
    }
    s = header["stats"]
    stats = BundleStats(
        n_simplices=header["N"],
        n_triangles=header["m"],
        kappa_per_triangle=dict(enumerate(s["kappa_per_triangle"])),
        kappa=s["kappa"],
        mu_per_triangle=dict(enumerate(s["mu_per_triangle"])),
        mu=s["mu"],
        crossings_applied=s["crossings_applied"],
        pairing_changes=s["pairing_changes"],
    )
    return PDBundle(complex_, filtration, geometry, templates, stats, None)


def save_bundle(bundle: PDBundle, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_bundle(bundle))


def load_bundle(path: str) -> PDBundle:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_bundle_text(fh.read())
