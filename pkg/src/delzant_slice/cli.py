"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 negative verdict (not Delzant, not
good, not smooth), 3 equivalence violated under ``--strict`` or an internal
cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report
from .analysis import equivalence_verdict, image_is_delzant, image_polytope
from .chart import smoothness_report
from .classify import good_polytope
from .errors import ConsistencyError, DegenerateImage, InputError
from .polytope import DelzantPolytope, parse_builtin, validate_delzant
from .subspace import enumerate_saturated_bases, new_subspace

log = logging.getLogger("delzant_slice")

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_VIOLATED = 0, 1, 2, 3


def _read_json(text_or_path: str):
    path = Path(text_or_path)
    try:
        if not text_or_path.lstrip().startswith("{") and path.exists():
            text_or_path = path.read_text()
        return json.loads(text_or_path)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {text_or_path[:60]!r}: {exc}") from None


def _halfspaces(args):
    if args.builtin:
        poly = parse_builtin(args.builtin)
        return poly.dim, poly.halfspaces
    return report.load_halfspaces(_read_json(args.polytope))


def _polytope(args) -> DelzantPolytope:
    if args.builtin:
        return parse_builtin(args.builtin)
    dim, hs = report.load_halfspaces(_read_json(args.polytope))
    return DelzantPolytope.from_halfspaces(hs, dim)


def _subspace(args):
    if not args.subspace:
        raise InputError("--subspace is required for this command")
    return report.load_subspace(_read_json(args.subspace))


def cmd_validate(args):
    dim, hs = _halfspaces(args)
    rep = validate_delzant(hs, dim)
    return report.validation_dict(rep), EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_classify(args):
    poly, sub = _polytope(args), _subspace(args)
    good, per_vertex = good_polytope(poly, sub)
    out = {
        "good": good,
        "subspace": report.subspace_dict(sub),
        "vertices": [report.classification_dict(v) for v in per_vertex],
    }
    return out, EXIT_OK if good else EXIT_NEGATIVE


def cmd_smooth(args):
    poly, sub = _polytope(args), _subspace(args)
    charts = smoothness_report(poly, sub)
    smooth = all(c.verdict.smooth for c in charts)
    out = {
        "smooth": smooth,
        "subspace": report.subspace_dict(sub),
        "charts": [report.chart_dict(c) for c in charts],
    }
    return out, EXIT_OK if smooth else EXIT_NEGATIVE


def cmd_image(args):
    poly, sub = _polytope(args), _subspace(args)
    try:
        img = image_polytope(poly, sub)
    except DegenerateImage as exc:
        return {"image": {"degenerate": True, "message": str(exc)}}, EXIT_NEGATIVE
    ok = image_is_delzant(img)
    smooth = all(c.verdict.smooth for c in smoothness_report(poly, sub))
    label = "moment image" if smooth else "formal image"
    out = {"image": report.image_dict(img, ok, label), "subspace": report.subspace_dict(sub)}
    return out, EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verdict(args):
    poly, sub = _polytope(args), _subspace(args)
    rep = equivalence_verdict(poly, sub, strict=args.strict)
    code = EXIT_OK if rep.good_polytope and rep.all_charts_smooth else EXIT_NEGATIVE
    return report.equivalence_dict(rep, sub), code


def _sweep_row(job):
    poly, basis = job
    sub = new_subspace(basis)
    rep = equivalence_verdict(poly, sub)
    return {
        "basis": [list(p) for p in sub.basis],
        "q": list(sub.q),
        "good": rep.good_polytope,
        "smooth": rep.all_charts_smooth,
        "holds": rep.equivalence_holds,
        "readings_agree": rep.readings_agree,
        "failures": report.vertex_failures(rep),
    }


def sweep(poly: DelzantPolytope, height: int, jobs: int = 1) -> list[dict]:
    """One catalog row per saturated hyperplane of the given height, in enumeration order."""
    work = [(poly, b) for b in enumerate_saturated_bases(poly.dim, height)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_row, work, chunksize=8))
    return [_sweep_row(w) for w in work]


def cmd_sweep(args):
    if args.height is None or args.height < 0:
        raise InputError("--height N (N >= 0) is required for sweep")
    poly = _polytope(args)
    rows = sweep(poly, args.height, args.jobs)
    violated = [r for r in rows if not r["holds"]]
    out = {
        "dim": poly.dim,
        "height": args.height,
        "rows": rows,
        "count": len(rows),
        "violations": len(violated),
    }
    code = EXIT_VIOLATED if args.strict and violated else EXIT_OK
    return out, code


def catalog_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    fields = ["basis", "q", "good", "smooth", "holds", "readings_agree", "failures"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(r[k]) if isinstance(r[k], list) else r[k] for k in fields})
    return buf.getvalue()


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "smooth": cmd_smooth,
    "image": cmd_image,
    "verdict": cmd_verdict,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="delzant-slice",
        description="Decide smoothness of toric hypersurfaces cut by rational hyperplanes.",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--polytope", metavar="FILE", help="polytope JSON file")
    src.add_argument("--builtin", metavar="NAME:ARGS", help="e.g. simplex:2:1, cube:3:1, hirzebruch:1:1:1, A*B")
    p.add_argument("--subspace", metavar="FILE|JSON", help='e.g. \'{"basis": [[1,1]], "offset": ["0","0"]}\'')
    p.add_argument("--height", type=int, help="entry bound for sweep")
    p.add_argument("--strict", action="store_true", help="exit 3 if good and smooth verdicts disagree")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweep")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        out, code = COMMANDS[args.command](args)
    except InputError as exc:
        out, code = {"error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_INPUT
    except ConsistencyError as exc:
        out, code = {"error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_VIOLATED
    out["exit_code"] = code
    if args.out and args.out.endswith(".csv") and "rows" in out:
        text = catalog_csv(out["rows"])
    else:
        text = report.dumps(out)
    if args.out:
        Path(args.out).write_text(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
