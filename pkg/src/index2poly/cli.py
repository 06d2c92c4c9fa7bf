"""Command line: enumerate, build, verify, reject-scan, catalogue.

Family ids are ``<configuration>-<shape>``: the configuration is tetA
(aligned tetrahedra), tetO (opposed tetrahedra), oct, or dod/ico followed by
the combinatorial edge length; the shape is the two turn symbols run
together, e.g. ``ico1-hrsr`` or ``dod4-rl``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    from .enumerator import enumerate_all
    from .export import EMITTERS

    families, _ = enumerate_all()
    _write(EMITTERS[args.format]([f.row() for f in families]), args.out)
    if args.figures:
        from .figures import render_all

        paths = render_all(families, Path(args.figures))
        print(f"wrote {len(paths)} figures to {args.figures}", file=sys.stderr)
    return EXIT_OK


def _lookup(fid: str):
    from .enumerator import family, family_ids

    try:
        return family(fid)
    except KeyError:
        raise UsageError(f"unknown family id {fid!r}; known: {', '.join(family_ids())}") from None


def cmd_build(args) -> int:
    from .export import mesh_document, parse_lambda
    from .flagmap import PolyhedronRejected
    from .tracer import assemble

    rec = _lookup(args.family)
    try:
        lam = parse_lambda(args.lam)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(str(e)) from None
    cfg = rec.configuration
    if lam.sign() <= 0:
        raise UsageError(f"lambda must be positive, got {lam}")
    if lam == 1:
        if not cfg.opposed:
            raise UsageError("lambda = 1 makes the two aligned orbits coincide (S = S'), which is degenerate")
        print("warning: lambda = 1 for opposed tetrahedra lies outside the two-orbit families", file=sys.stderr)
    poly = rec.polyhedron
    if args.swap:
        shape = rec.face_shape[::-1]
        try:
            poly = assemble(cfg, shape)
        except PolyhedronRejected as e:
            print(f"swapped shape {list(shape)} rejected: {e}", file=sys.stderr)
            return EXIT_FAIL
        poly.name = f"{rec.family_id} (orbits swapped)"
        poly.shape = shape
    doc = mesh_document(poly, lam)
    text = doc.to_obj(args.mode)
    _write(text, args.out)
    f0, f1, f2 = rec.face_vector
    if doc.counts != (f0, f2):
        print(f"mesh counts {doc.counts} differ from face vector {rec.face_vector}", file=sys.stderr)
        return EXIT_FAIL
    print(f"{rec.family_id}: {f0} vertices, {f2} faces, planar {sum(doc.planar)}/{f2}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .enumerator import enumerate_all, verify_record

    if args.family == "all":
        records, _ = enumerate_all()
    else:
        records = [_lookup(args.family)]
    failed = 0
    reports = []
    for rec in records:
        checks = verify_record(rec)
        ok = all(checks.values())
        failed += not ok
        bad = [k for k, v in checks.items() if not v]
        reports.append({"family_id": rec.family_id, "type": rec.schlafli_type, "pass": ok, "checks": checks,
                        "symmetry": rec.report.to_json()})
        if not args.json:
            status = "PASS" if ok else "FAIL " + ",".join(bad)
            print(f"{rec.family_id:12s} {rec.schlafli_type:10s} |G|={rec.report.sym_group_order:<4d} "
                  f"index={rec.report.index} {status}")
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(f"{len(records) - failed}/{len(records)} pass")
    if args.figures:
        from .figures import render_all

        render_all(records, Path(args.figures))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_reject_scan(args) -> int:
    from .enumerator import enumerate_all

    _, rejections = enumerate_all()
    if args.format == "json":
        rows = [{"configuration": r.configuration, "shape": r.shape_text, "reason": r.reason, "detail": r.detail}
                for r in rejections]
        print(json.dumps(rows, indent=2, ensure_ascii=False))
    else:
        import csv

        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["configuration", "shape", "reason", "detail"])
        for r in rejections:
            w.writerow([r.configuration, r.shape_text, r.reason, r.detail])
    return EXIT_OK


def cmd_catalogue(args) -> int:
    from .doubling import catalogue

    for q in catalogue():
        s = q.schlafli
        print(f"{q.name:45s} {s.type_symbol:10s} {s.face_vector} vertices: {q.solid.value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="index2poly", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="table of all families")
    e.add_argument("--format", choices=("json", "csv", "markdown"), default="markdown")
    e.add_argument("--out", help="write the table here instead of stdout")
    e.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("build", help="mesh of one family member")
    b.add_argument("family")
    b.add_argument("--lambda", dest="lam", required=True,
                   help="orbit ratio, e.g. 1/2, 0.75, 1/2+1/2√5, 2tau+1")
    b.add_argument("--out", help="mesh path (stdout if omitted)")
    b.add_argument("--mode", choices=("fan", "polyline"), default="fan")
    b.add_argument("--swap", action="store_true", help="use the orbit-swapped shape [b,a] of the class")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("family", help="family id or 'all'")
    v.add_argument("--json", action="store_true")
    v.add_argument("--figures", metavar="DIR")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reject-scan", help="every scanned and rejected candidate")
    r.add_argument("--format", choices=("csv", "json"), default="csv")
    r.set_defaults(func=cmd_reject_scan)

    c = sub.add_parser("catalogue", help="the 18 regular polyhedra of index 1")
    c.set_defaults(func=cmd_catalogue)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"index2poly: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
