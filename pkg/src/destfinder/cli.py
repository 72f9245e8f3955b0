"""Command-line entry point: validate, recommend, export-choropleth, serve.

Exit codes follow one convention across subcommands: 0 success, 1 domain
failure (validation), 2 environment failure (I/O, ports, usage).
"""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys
from pathlib import Path

from .choropleth import build_choropleth, write_choropleth
from .regions import (
    IdMismatch,
    MalformedDocument,
    SchemaViolation,
    link_atlas,
    parse_geometry,
    parse_region_dataset,
)
from .schemas import InvalidPreferences, build_recommend_response, parse_preferences
from .scoring import DEFAULT_TOP_K
from .service import build_app

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_ENV = 2

_DOMAIN_ERRORS = (MalformedDocument, SchemaViolation, IdMismatch, InvalidPreferences)


def _fail_env(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ENV


def _violation_lines(exc: Exception) -> list[str]:
    if isinstance(exc, SchemaViolation):
        return exc.violations
    if isinstance(exc, InvalidPreferences):
        return [f"{v['field']}: {v['message']}" for v in exc.violations]
    return [str(exc)]


def _fail_domain(*excs: Exception) -> int:
    for exc in excs:
        for line in _violation_lines(exc):
            print(f"invalid: {line}", file=sys.stderr)
    return EXIT_DOMAIN


def _load_atlas_parts(regions_path: str, geometry_path: str):
    """Parse both inputs, collecting domain errors from each before giving up."""
    regions_bytes = Path(regions_path).read_bytes()
    geometry_bytes = Path(geometry_path).read_bytes()
    errors = []
    dataset = geometry = None
    try:
        dataset = parse_region_dataset(regions_bytes)
    except _DOMAIN_ERRORS as exc:
        errors.append(exc)
    try:
        geometry = parse_geometry(geometry_bytes)
    except _DOMAIN_ERRORS as exc:
        errors.append(exc)
    if not errors:
        atlas = link_atlas(dataset, geometry)
        return atlas, geometry_bytes, []
    return None, geometry_bytes, errors


def cmd_validate(args) -> int:
    try:
        atlas, _, errors = _load_atlas_parts(args.regions, args.geometry)
    except OSError as exc:
        return _fail_env(str(exc))
    except IdMismatch as exc:
        return _fail_domain(exc)
    if errors:
        return _fail_domain(*errors)
    print(f"OK: {len(atlas.dataset.regions)} regions")
    return EXIT_OK


def _load_for_run(args):
    atlas, geometry_bytes, errors = _load_atlas_parts(args.regions, args.geometry)
    prefs = None
    try:
        prefs = parse_preferences(Path(args.prefs).read_bytes())
    except _DOMAIN_ERRORS as exc:
        errors.append(exc)
    if errors:
        return None, None, None, errors
    return atlas, geometry_bytes, prefs, []


def cmd_recommend(args) -> int:
    try:
        atlas, _, prefs, errors = _load_for_run(args)
    except OSError as exc:
        return _fail_env(str(exc))
    except IdMismatch as exc:
        return _fail_domain(exc)
    if errors:
        return _fail_domain(*errors)

    response = build_recommend_response(atlas, prefs, args.top)
    if args.format == "json":
        print(response.model_dump_json(indent=2))
        return EXIT_OK

    budget_status = {
        row.regionId: "within budget" if row.budgetFulfilled else "over budget"
        for row in response.scores
    }
    print(f"{'rank':>4}  {'name':<32}  {'score':>7}  {'band':<10}  budget")
    for entry in response.topK:
        print(
            f"{entry.rank:>4}  {entry.name:<32}  {entry.score:>7.2f}"
            f"  {entry.band:<10}  {budget_status[entry.regionId]}"
        )
    return EXIT_OK


def cmd_export_choropleth(args) -> int:
    try:
        atlas, geometry_bytes, prefs, errors = _load_for_run(args)
    except OSError as exc:
        return _fail_env(str(exc))
    except IdMismatch as exc:
        return _fail_domain(exc)
    if errors:
        return _fail_domain(*errors)

    doc = build_choropleth(atlas, json.loads(geometry_bytes), prefs, args.top)
    try:
        write_choropleth(doc, Path(args.out))
    except OSError as exc:
        return _fail_env(str(exc))
    return EXIT_OK


def _env(name: str, cast, fallback):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return fallback
    return cast(raw)


def cmd_serve(args) -> int:
    try:
        regions = args.regions if args.regions is not None else _env("DF_REGIONS", str, None)
        geometry = args.geometry if args.geometry is not None else _env("DF_GEOMETRY", str, None)
        port = args.port if args.port is not None else _env("DF_PORT", int, 8080)
        static = args.static if args.static is not None else _env("DF_STATIC", str, None)
        top_k = args.top_k if args.top_k is not None else _env("DF_TOPK", int, DEFAULT_TOP_K)
    except ValueError as exc:
        return _fail_env(f"bad environment value: {exc}")
    if regions is None or geometry is None:
        return _fail_env("--regions and --geometry are required (or DF_REGIONS/DF_GEOMETRY)")

    try:
        atlas, geometry_bytes, errors = _load_atlas_parts(regions, geometry)
    except OSError as exc:
        return _fail_env(str(exc))
    except IdMismatch as exc:
        return _fail_domain(exc)
    if errors:
        return _fail_domain(*errors)

    static_dir = Path(static) if static else None
    if static_dir is not None and not static_dir.is_dir():
        return _fail_env(f"static directory not found: {static_dir}")

    app = build_app(
        atlas,
        geometry_bytes,
        top_k=top_k,
        static_dir=static_dir,
        cors_origins=tuple(args.cors_origin or ()),
    )

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, port))
    except OSError as exc:
        sock.close()
        return _fail_env(f"cannot bind {args.host}:{port}: {exc}")
    bound_port = sock.getsockname()[1]
    print(f"listening on http://{args.host}:{bound_port}", flush=True)

    import uvicorn

    config = uvicorn.Config(app, log_level="warning")
    uvicorn.Server(config).run(sockets=[sock])
    return EXIT_OK


def _add_atlas_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--regions", required=required, help="region dataset JSON file")
    parser.add_argument("--geometry", required=required, help="geometry feature-collection file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="destfinder",
        description="Travel-region recommender: validate data, rank regions, export maps, serve the API.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dataset/geometry pair")
    _add_atlas_flags(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("recommend", help="rank regions for a preferences file")
    _add_atlas_flags(p)
    p.add_argument("--prefs", required=True, help="preferences JSON file")
    p.add_argument("--top", type=int, default=DEFAULT_TOP_K, help="how many ranked regions")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("export-choropleth", help="write geometry with scores, bands and colors")
    _add_atlas_flags(p)
    p.add_argument("--prefs", required=True, help="preferences JSON file")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--top", type=int, default=DEFAULT_TOP_K, help="how many regions get rank labels")
    p.set_defaults(func=cmd_export_choropleth)

    p = sub.add_parser("serve", help="run the HTTP service")
    _add_atlas_flags(p, required=False)
    p.add_argument("--port", type=int, default=None, help="listen port (0 = ephemeral)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory of UI assets to serve at /")
    p.add_argument("--top-k", type=int, default=None, dest="top_k")
    p.add_argument("--cors-origin", action="append", dest="cors_origin", help="allowed CORS origin (repeatable)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
