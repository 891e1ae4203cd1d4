"""Command-line entry point.

Subcommands: check, flip, quiver, hom, ext, render, oracle-verify, serve.
Exit codes: 0 on success, 1 on a domain error (JSON diagnostics on
stderr), 2 on usage errors.  STRIP_LOG sets the logging verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .arcs import ArcParseError, parse_arc
from .cluster import NoQuadrilateralError, NotMemberError, flip, quiver
from .codec import canonical_json, load_desc, report_to_json, save_desc
from .render import RenderSpec, render_svg
from .triangulation import (
    InvalidDescription,
    NotCompactError,
    TriangulationDesc,
    UncertifiedError,
    component_count,
    fountains,
    is_compact,
    validate,
)

log = logging.getLogger("stripcluster")

DOMAIN_ERRORS = (
    ArcParseError,
    InvalidDescription,
    UncertifiedError,
    NotCompactError,
    NotMemberError,
    NoQuadrilateralError,
    FileNotFoundError,
    ValueError,
    KeyError,
)


def _window_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"), default=None)


def _resolve_window(desc: TriangulationDesc, window) -> tuple[int, int]:
    if window is not None:
        return (window[0], window[1])
    lo, hi = desc.window
    return (lo - 3, hi + 3)


def cmd_check(args) -> int:
    desc = load_desc(args.desc)
    report = validate(desc, [_resolve_window(desc, args.window)])
    out = report_to_json(report)
    if report.certified_maximal:
        compact, witness = is_compact(desc, report)
        out["compact"] = compact
        if compact:
            fs = fountains(desc, report)
            out["fountains"] = [{"base": str(f.base), "kind": f.kind} for f in fs]
            out["components"] = component_count(desc, report)[2]
        else:
            out["compact_witness"] = witness
    print(canonical_json(out), end="")
    return 0 if report.pairwise_noncrossing else 1


def cmd_flip(args) -> int:
    desc = load_desc(args.desc)
    arc = parse_arc(args.arc)
    new_desc, replacement = flip(desc, arc)
    out_path = args.out or (str(Path(args.desc).with_suffix("")) + ".flipped.json")
    save_desc(new_desc, out_path)
    print(canonical_json({"removed": str(arc), "added": str(replacement), "out": out_path}), end="")
    return 0


def cmd_quiver(args) -> int:
    desc = load_desc(args.desc)
    q = quiver(desc, _resolve_window(desc, args.window))
    if args.format == "dot":
        sys.stdout.write(q.to_dot())
    else:
        print(canonical_json(q.to_json()), end="")
    return 0


def cmd_hom(args, ext: bool = False) -> int:
    from .cluster import ext_dim, hom_dim

    a = parse_arc(getattr(args, "from"))
    b = parse_arc(args.to)
    print(ext_dim(a, b) if ext else hom_dim(a, b))
    return 0


def cmd_render(args) -> int:
    desc = load_desc(args.desc)
    spec = RenderSpec(
        window=_resolve_window(desc, args.window),
        unit=args.unit,
        highlights=tuple(parse_arc(s) for s in args.highlight),
        labels=not args.no_labels,
    )
    svg = render_svg(desc, spec)
    Path(args.out).write_text(svg)
    log.info("wrote %s", args.out)
    return 0


def cmd_oracle_verify(args) -> int:
    from .oracle.orientation import Orientation
    from .verify import dictionary_check, projectives_check

    o = Orientation.from_json(json.loads(Path(args.orientation).read_text()))
    window = tuple(args.window) if args.window else (-10, 10)
    rep = dictionary_check(o, window)
    out = rep.to_json()
    out["projectives"] = projectives_check(o)
    print(canonical_json(out), end="")
    return 0 if rep.ok and out["projectives"]["quiver_matches_opposite"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(persist_dir=args.persist_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="strip", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a triangulation file")
    p.add_argument("desc")
    _window_args(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("flip", help="flip one arc and write the new triangulation")
    p.add_argument("desc")
    p.add_argument("--arc", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=cmd_flip)

    p = sub.add_parser("quiver", help="windowed quiver of a compact triangulation")
    p.add_argument("desc")
    _window_args(p)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(fn=cmd_quiver)

    p = sub.add_parser("hom", help="Hom dimension between two arcs")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("ext", help="Ext dimension between two arcs")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(fn=lambda a: cmd_hom(a, ext=True))

    p = sub.add_parser("render", help="render a window to SVG")
    p.add_argument("desc")
    p.add_argument("-o", "--out", required=True)
    _window_args(p)
    p.add_argument("--unit", type=int, default=40)
    p.add_argument("--highlight", action="append", default=[])
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("oracle-verify", help="cross-validate the arc dictionary against the oracle")
    p.add_argument("--orientation", required=True)
    _window_args(p)
    p.set_defaults(fn=cmd_oracle_verify)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--persist-dir")
    p.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("STRIP_LOG", "WARNING").upper())
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DOMAIN_ERRORS as exc:
        sys.stderr.write(
            canonical_json({"error": type(exc).__name__, "message": str(exc)})
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
