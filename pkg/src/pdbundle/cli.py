"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 validation or input error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from .bundle import BundleError, build
from .complexes import ComplexError
from .filtration import FiltrationError, SurfaceError
from .formats import ParseError, load_bundle, parse_input, save_bundle
from .query import LocateError, build_locator, oracle_diagram, query_diagram
from .rational import parse_rational, render_extended, render_rational

log = logging.getLogger("pdbundle")

USAGE_EXIT = 1
VALIDATION_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_point(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return (parse_rational(parts[0]), parse_rational(parts[1]))


def _print_diagram(diagram) -> None:
    for birth, death in diagram.points:
        print(f"{render_rational(birth)} {render_extended(death)}")


def make_parser() -> _Parser:
    parser = _Parser(prog="pdbundle", description=__doc__)
    parser.add_argument(
        "--log-level",
        default="warning",
        choices=["debug", "info", "warning", "error"],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build")
    p_build.add_argument("input")
    p_build.add_argument("-o", "--output", required=True)
    p_build.add_argument("--no-merge", action="store_true",
                         help="keep every constant-indexing polygon unmerged")
    p_build.add_argument("--sweep", default="auto",
                         choices=["auto", "bruteforce", "bentley-ottmann"])

    p_query = sub.add_parser("query")
    p_query.add_argument("bundle")
    p_query.add_argument("--point", required=True, help="x,y")
    p_query.add_argument("--dim", type=int, required=True)

    p_info = sub.add_parser("info")
    p_info.add_argument("bundle")

    p_serve = sub.add_parser("serve")
    p_serve.add_argument("bundle")
    p_serve.add_argument("--port", type=int, default=8037)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--explorer",
        metavar="DIR",
        help="also serve the built browser explorer from this directory "
        "(expects index.html and dist/*.js)",
    )

    p_oracle = sub.add_parser("oracle")
    p_oracle.add_argument("input")
    p_oracle.add_argument("--point", required=True, help="x,y")
    p_oracle.add_argument("--dim", type=int, required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper())
    try:
        if args.command == "build":
            complex_, filtration = parse_input(args.input)
            log.info("building bundle: N=%d, m=%d", len(complex_),
                     filtration.base.n_triangles)
            bundle = build(
                complex_,
                filtration,
                merge=not args.no_merge,
                sweep_method=args.sweep,
            )
            save_bundle(bundle, args.output)
            s = bundle.stats
            log.info("built: kappa=%d mu=%d templates=%d", s.kappa, s.mu,
                     len(bundle.templates))
            return 0
        if args.command == "query":
            bundle = load_bundle(args.bundle)
            loc = build_locator(bundle)
            point = _parse_point(args.point)
            if args.dim < 0:
                raise LocateError("dimension must be non-negative")
            _print_diagram(query_diagram(bundle, loc, point, args.dim))
            return 0
        if args.command == "info":
            bundle = load_bundle(args.bundle)
            s = bundle.stats
            print(f"simplices (N): {s.n_simplices}")
            print(f"base triangles (m): {s.n_triangles}")
            print(f"swap segments (kappa): {s.kappa}")
            print(f"arrangement vertices (mu): {s.mu}")
            print(f"faces (pre-merge): {len(bundle.geometry.fine_faces)}")
            print(f"faces (merged): {len(bundle.templates)}")
            print(f"crossings applied: {s.crossings_applied}")
            print(f"pairing changes: {s.pairing_changes}")
            return 0
        if args.command == "serve":
            import os

            from .service import serve

            bundle = load_bundle(args.bundle)
            static_dir = index_html = None
            if args.explorer:
                index_path = os.path.join(args.explorer, "index.html")
                static_dir = os.path.join(args.explorer, "dist")
                if not (os.path.isfile(index_path) and os.path.isdir(static_dir)):
                    raise FileNotFoundError(
                        f"{args.explorer} has no built explorer (run `npm run "
                        f"build` in frontend/ first)"
                    )
                with open(index_path, "r", encoding="utf-8") as fh:
                    index_html = fh.read()
            serve(
                bundle,
                host=args.host,
                port=args.port,
                static_dir=static_dir,
                index_html=index_html,
            )
            return 0
        if args.command == "oracle":
            complex_, filtration = parse_input(args.input)
            point = _parse_point(args.point)
            _print_diagram(oracle_diagram(complex_, filtration, point, args.dim))
            return 0
    except (ParseError, ComplexError, SurfaceError, FiltrationError,
            BundleError, LocateError, FileNotFoundError, ValueError) as exc:
        print(f"pdbundle: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
