"""Command-line interface.

Exit codes: 0 success / verified, 1 verified false or a check failed,
2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .bounds import best_known_bound
from .coverage import infer_k, monte_carlo_multiplicity, verify_k_fold
from .errors import AreaMismatch, DegenerateBasis, EmptySearchSpace, InvariantViolation, ParseError, PolygonError
from .geometry import polygon_area, rat
from .instance import fixture_names, load_instance
from .lattice import BBox, lattice_det
from .report import ReportDocument, add_bounds, add_coverage, add_instance, add_vertex
from .search import SearchGrid, SearchSpec, count_candidates, search_lattice_k_tilings
from .svg import STYLES, render_svg
from .vertex import analyze_vertices

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(doc: ReportDocument, args) -> None:
    sys.stdout.write(doc.render(getattr(args, "json", False)))


def _load(ref: str, check: bool = True):
    try:
        return load_instance(ref, check=check)
    except FileNotFoundError as exc:
        raise InputError(str(exc)) from exc
    except ParseError as exc:
        raise InputError(f"{ref}: {exc}") from exc


def _resolve_k(args, cfg, P, X) -> int | None:
    if getattr(args, "k", None) is not None:
        return args.k
    if cfg.k is not None:
        return cfg.k
    return infer_k(P, X)


def cmd_validate(args) -> int:
    cfg = _load(args.file, check=False)
    doc = ReportDocument("validate")
    add_instance(doc, cfg)
    ok = True
    P = X = None
    try:
        P = cfg.build_polygon()
        doc.add("polygon.valid", True)
        doc.add("polygon.m", P.m)
        doc.add("polygon.center", P.center)
        doc.add("polygon.area", polygon_area(P))
    except PolygonError as exc:
        ok = False
        doc.add("polygon.valid", False)
        doc.add("polygon.error", f"{type(exc).__name__}: {exc}")
    try:
        X = cfg.build_multiset()
        doc.add("lattice.valid", True)
        doc.add("lattice.det", lattice_det(X.lattice))
        doc.add("lattice.r", X.r)
    except DegenerateBasis as exc:
        ok = False
        doc.add("lattice.valid", False)
        doc.add("lattice.error", f"DegenerateBasis: {exc}")
    if P is not None and X is not None:
        doc.add("average_multiplicity", X.r * polygon_area(P) / lattice_det(X.lattice))
    doc.add("valid", ok)
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_verify(args) -> int:
    cfg = _load(args.file)
    P, X = cfg.build()
    doc = ReportDocument("verify")
    add_instance(doc, cfg)
    k = _resolve_k(args, cfg, P, X)
    start = time.perf_counter()
    if k is None:
        doc.add("coverage.average_multiplicity", X.r * polygon_area(P) / lattice_det(X.lattice))
        doc.add("coverage.verdict", "AreaMismatch(no integer k)")
        _emit(doc, args)
        return EXIT_FALSE
    doc.add("coverage.k", k)
    try:
        rep = verify_k_fold(P, X, k)
    except AreaMismatch as exc:
        doc.add("coverage.verdict", f"AreaMismatch(expected={exc.expected}, got={exc.got})")
        _emit(doc, args)
        return EXIT_FALSE
    add_coverage(doc, rep)
    if args.timing:
        doc.add("timing.seconds", f"{time.perf_counter() - start:.3f}")
    _emit(doc, args)
    return EXIT_OK if rep.is_tiling else EXIT_FALSE


def cmd_vertices(args) -> int:
    cfg = _load(args.file)
    P, X = cfg.build()
    k = _resolve_k(args, cfg, P, X)
    if k is None:
        raise InputError("no k given and the area condition admits no integer k")
    doc = ReportDocument("vertices")
    add_instance(doc, cfg)
    doc.add("vertices.k", k)
    doc.add("vertices.m", P.m)
    reports = analyze_vertices(P, X, k)
    doc.add("vertices.orbit_size", len(reports))
    for i, rep in enumerate(reports):
        add_vertex(doc, i, rep)
    ok = all(r.passed for r in reports)
    doc.add("vertices.all_pass", ok)
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_bound(args) -> int:
    doc = ReportDocument("bound")
    if args.file is not None:
        cfg = _load(args.file)
        P = cfg.build_polygon()
        add_bounds(doc, P.m, P)
    elif args.m is not None:
        if args.m < 2:
            raise InputError("--m must be at least 2")
        add_bounds(doc, args.m)
    else:
        raise InputError("bound needs --m M or an instance file")
    _emit(doc, args)
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = _load(args.file)
    P = cfg.build_polygon()
    try:
        grid = SearchGrid.parse(args.grid) if args.grid else SearchGrid()
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --grid: {exc}") from exc
    spec = SearchSpec(P, args.k, grid, r=args.r, offset_denominator=args.offset_denominator)
    doc = ReportDocument("search")
    add_instance(doc, cfg)
    doc.add("search.k", args.k)
    doc.add("search.r", args.r)
    doc.add("search.grid", str(grid))
    doc.add("search.target_det", args.r * polygon_area(P) / args.k)
    doc.add("search.candidates", count_candidates(spec))

    progress = None
    if args.progress:
        def progress(done, total):
            if done % 100 == 0 or done == total:
                print(f"searched {done}/{total}", file=sys.stderr)

    try:
        hits = search_lattice_k_tilings(spec, progress)
    except EmptySearchSpace as exc:
        raise InputError(str(exc)) from exc
    doc.add("search.hits", len(hits))
    for i, h in enumerate(hits):
        doc.add(f"hit.{i}.basis", [h.lattice.u1, h.lattice.u2])
        doc.add(f"hit.{i}.offsets", list(h.offsets))
        doc.add(f"hit.{i}.verdict", str(h.report.verdict))
    # tau stays an interval: a lower bound from the table, an upper bound only from a hit
    doc.add("tau.lower", str(best_known_bound(P.m)))
    doc.add("tau.upper", args.k if hits else "none")
    _emit(doc, args)
    return EXIT_OK


def _parse_window(text: str) -> BBox:
    try:
        parts = [rat(p.strip()) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError("need xmin,xmax,ymin,ymax")
        box = BBox.of(*parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --window {text!r}: {exc}") from exc
    if box.xmin == box.xmax or box.ymin == box.ymax:
        raise InputError("window must have positive area")
    return box


def cmd_render(args) -> int:
    cfg = _load(args.file)
    P, X = cfg.build()
    if args.window:
        window = _parse_window(args.window)
    else:
        pb = P.bbox()
        window = X.lattice.fundamental_domain().bbox().expanded(max(pb.xmax - pb.xmin, pb.ymax - pb.ymin))
    svg = render_svg(P, X, window, args.mode)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_oracle(args) -> int:
    cfg = _load(args.file)
    P, X = cfg.build()
    if args.samples < 1:
        raise InputError("--samples must be positive")
    hist = monte_carlo_multiplicity(P, X, args.samples, args.seed)
    doc = ReportDocument("oracle")
    add_instance(doc, cfg)
    doc.add("oracle.samples", args.samples)
    doc.add("oracle.seed", args.seed)
    doc.add("oracle.support", sorted(hist))
    for mult, count in hist.items():
        doc.add(f"oracle.multiplicity.{mult}", count)
    _emit(doc, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fixtures = ", ".join(fixture_names())
    parser = argparse.ArgumentParser(
        prog="ktiling",
        description="Exact checks of multiple translative tilings by centrally symmetric polygons.",
        epilog=f"FILE is a path or a shipped fixture name ({fixtures}).",
    )
    parser.add_argument("--version", action="version", version=f"ktiling {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", metavar="FILE")
        p.add_argument("--json", action="store_true", help="emit JSON instead of key: value text")
        return p

    p = with_file("validate", "check the polygon and lattice")
    p.set_defaults(func=cmd_validate)

    p = with_file("verify", "certify or refute a k-fold tiling")
    p.add_argument("--k", type=int)
    p.add_argument("--timing", action="store_true", help="append wall-clock time (breaks byte-stability)")
    p.set_defaults(func=cmd_verify)

    p = with_file("vertices", "local wheel analysis at every vertex orbit")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("bound", help="lower bounds on the tiling multiplicity")
    p.add_argument("file", metavar="FILE", nargs="?")
    p.add_argument("--m", type=int, help="half the number of polygon edges")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = with_file("search", "grid search for k-fold lattice tilings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--grid", help="a=START:STOP:STEP,b=...,c=... (default %s)" % SearchGrid())
    p.add_argument("--r", type=int, default=1, help="number of cosets (default 1)")
    p.add_argument("--offset-denominator", type=int, default=2)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="SVG picture of the tiling")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--window", help="xmin,xmax,ymin,ymax (write as --window=-4,4,-4,4)")
    p.add_argument("--mode", choices=STYLES, default="outlines")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = with_file("oracle", "Monte-Carlo multiplicity histogram")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
