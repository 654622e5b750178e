"""Command-line front end.

    altrank bounds   --q 2 --n 6 --d 3 [--best] [--json] [--dump-lp PATH]
    altrank spectrum --q 2 --n 5 [--json]
    altrank table    --q 2 3 --n 4-10 [--d all] [--bounds all] [--format csv|json] [--out PATH]
    altrank verify   --q 2 --n 4 [--alpha-k 1] [--budget N] [--seed N]
    altrank lp       --kind delsarte|minor --q 2 --n 6 (--d 3 | --k 2)

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.
JSON output renders every big integer as a decimal string and every
rational as {"num": "...", "den": "..."}.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds as B
from .gf import prime_power
from .ratlp import solve
from .spectra import delta_walks, intersection_array, spectrum

log = logging.getLogger("altrank")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


# --- rendering ---------------------------------------------------------------

def rational_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def entry_json(e) -> dict:
    if isinstance(e, B.NotApplicable):
        return {"na": e.reason}
    if isinstance(e, B.BoundValue):
        return {"value": str(e.value), "exact": rational_json(e.exact), "clamped": e.clamped}
    return {"value": str(e)}


def entry_cell(e) -> str:
    if isinstance(e, B.NotApplicable):
        return str(e)
    if isinstance(e, B.BoundValue):
        return str(e.value)
    return str(e)


def report_json(rep: B.BoundReport, names=None) -> dict:
    names = names or B.BOUND_NAMES
    return {
        "q": rep.q,
        "n": rep.n,
        "d": rep.d,
        "bounds": {k: entry_json(rep.entries[k]) for k in names},
        "dimensions": {k: entry_json(v) for k, v in rep.dimensions.items()},
        "best": str(rep.best),
        "best_by": rep.best_names(),
        "perfectness": rep.perfectness,
        "equivalences": rep.equivalences,
    }


def render_report(rep: B.BoundReport) -> str:
    lines = [f"A_{rep.q}({rep.n}, {2 * rep.d}) upper bounds"]
    width = max(len(k) for k in list(B.BOUND_NAMES) + list(B.DIMENSION_NAMES))
    for k in B.BOUND_NAMES:
        e = rep.entries[k]
        if isinstance(e, B.BoundValue):
            extra = "" if e.exact == e.value else f"  (exact {e.exact})"
            if e.clamped:
                extra += "  [clamped to whole space]"
            lines.append(f"  {k:<{width}}  {e.value}{extra}")
        else:
            lines.append(f"  {k:<{width}}  {e}")
    for k, v in rep.dimensions.items():
        lines.append(f"  {k:<{width}}  {entry_cell(v)}")
    lines.append(f"  {'perfectness':<{width}}  {rep.perfectness}")
    for k, v in rep.equivalences.items():
        lines.append(f"  {k:<{width}}  {'NA' if v is None else str(v).lower()}")
    lines.append(f"  {'best':<{width}}  {rep.best}  ({', '.join(rep.best_names())})")
    return "\n".join(lines)


# --- argument helpers ---------------------------------------------------------

def parse_range(text: str) -> list[int]:
    """'4-10' -> [4..10], '4,6,8' -> [4, 6, 8], '5' -> [5]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"cannot parse range {text!r}") from exc
    return out


def check_q(q: int) -> None:
    if prime_power(q) is None:
        raise UsageError(f"q = {q} is not a prime power > 1")


def check_qnd(q: int, n: int, d: int | None = None) -> None:
    check_q(q)
    if n < 2:
        raise UsageError(f"n must be at least 2, got {n}")
    if d is not None:
        if d < 1:
            raise UsageError(f"d must be >= 1, got {d}")
        if d > n // 2:
            raise UsageError(f"d exceeds floor(n/2) = {n // 2}")


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


# --- commands -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    check_qnd(args.q, args.n, args.d)
    rep = B.full_report(args.q, args.n, args.d)
    if args.dump_lp:
        text = "# Delsarte LP\n" + B.delsarte_program(args.q, args.n, args.d).dump() + "\n"
        text += "# minor-polynomial LP\n" + B.minor_polynomial_program(args.q, args.n, args.d - 1).dump() + "\n"
        _write(text, args.dump_lp)
    if args.best:
        out = json.dumps({"best": str(rep.best)}) if args.json else str(rep.best)
    elif args.json:
        out = json.dumps(report_json(rep), indent=2)
    else:
        out = render_report(rep)
    print(out)
    return EXIT_OK


def spectrum_json(n: int, q: int) -> dict:
    st, ia = spectrum(n, q), intersection_array(n, q)
    strs = lambda xs: [str(x) for x in xs]  # noqa: E731
    return {
        "n": n,
        "q": q,
        "vertices": str(st.size),
        "diameter": st.D,
        "theta": strs(st.theta),
        "mult": strs(st.mult),
        "b": strs(ia.b),
        "c": strs(ia.c),
        "a": strs(ia.a),
        "k": strs(ia.k),
        "delta_walks": str(delta_walks(n, q)),
    }


def cmd_spectrum(args) -> int:
    check_qnd(args.q, args.n)
    data = spectrum_json(args.n, args.q)
    if args.json:
        print(json.dumps(data, indent=2))
        return EXIT_OK
    print(f"Gamma(Alt_{args.n}(F_{args.q})): {data['vertices']} vertices, diameter {data['diameter']}")
    print("theta: " + ", ".join(data["theta"]))
    print("m:     " + ", ".join(data["mult"]))
    for key in ("b", "c", "a", "k"):
        print(f"{key}:     " + ", ".join(data[key]))
    print(f"Delta: {data['delta_walks']}")
    return EXIT_OK


def _cell(qnd):
    return B.full_report(*qnd)


def table_cells(qs, ns, ds):
    cells = []
    for q in qs:
        for n in ns:
            for d in (range(1, n // 2 + 1) if ds is None else ds):
                if n < 2 or not 1 <= d <= n // 2:
                    log.info("skipping q=%d n=%d d=%d: d outside [1, floor(n/2)]", q, n, d)
                    continue
                cells.append((q, n, d))
    return cells


def render_table(reports, names, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": [report_json(r, names) for r in reports]}, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["q", "n", "d", *names, "best", "perfectness", *B.EQUIVALENCES])
    for r in reports:
        flags = ["NA" if r.equivalences[k] is None else str(r.equivalences[k]).lower() for k in B.EQUIVALENCES]
        w.writerow([r.q, r.n, r.d, *(entry_cell(r.entries[k]) for k in names), r.best, r.perfectness, *flags])
    return buf.getvalue()


def cmd_table(args) -> int:
    qs = [int(x) for x in args.q]
    for q in qs:
        check_q(q)
    ns = parse_range(args.n)
    ds = None if args.d == "all" else parse_range(args.d)
    if args.bounds == "all":
        names = list(B.BOUND_NAMES)
    else:
        names = [x.strip() for x in args.bounds.split(",") if x.strip()]
        unknown = [x for x in names if x not in B.BOUND_NAMES]
        if unknown:
            raise UsageError(f"unknown bound names {unknown}; choose from {list(B.BOUND_NAMES)}")
    cells = table_cells(qs, ns, ds)
    if args.jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            reports = list(ex.map(_cell, cells))
    else:
        reports = [_cell(c) for c in cells]
    _write(render_table(reports, names, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import oracle

    check_qnd(args.q, args.n)
    try:
        g = oracle.build_graph(args.n, args.q)
    except oracle.GraphTooLarge as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    checks = oracle.structural_suite(g, spectrum(args.n, args.q))
    checks.append(oracle.verify_walk_regular(g, 3, seed=args.seed))
    ok = all(checks)
    for c in checks:
        print(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    if args.alpha_k is not None:
        res = oracle.exact_alpha_k(g, args.alpha_k, budget=args.budget)
        valid = oracle.validate_witness(g, res.witness, args.alpha_k)
        status = "proven" if res.proven else "not-proven-optimal"
        print(f"[{'PASS' if valid else 'FAIL'}] alpha_{args.alpha_k} = {res.size} ({status}, {res.nodes} nodes)")
        ok = ok and valid
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lp(args) -> int:
    if args.kind == "delsarte":
        if args.d is None:
            raise UsageError("--d is required for the Delsarte LP")
        check_qnd(args.q, args.n, args.d)
        lp = B.delsarte_program(args.q, args.n, args.d)
    else:
        if args.k is None:
            raise UsageError("--k is required for the minor-polynomial LP")
        check_qnd(args.q, args.n)
        if not 0 <= args.k <= args.n // 2:
            raise UsageError(f"k must lie in [0, {args.n // 2}]")
        lp = B.minor_polynomial_program(args.q, args.n, args.k)
    print(lp.dump())
    sol = solve(lp)
    print(f"status: {sol.status}")
    if sol.optimal:
        print(f"optimum: {sol.value}")
        print("solution: " + ", ".join(f"{v}={x}" for v, x in zip(lp.names, sol.x)))
        print("basis: " + ", ".join(sol.basis))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="altrank", description="Exact upper bounds for alternating rank-metric codes.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="all bounds for one (q, n, d)")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--best", action="store_true", help="print only the smallest applicable bound")
    b.add_argument("--json", action="store_true")
    b.add_argument("--dump-lp", metavar="PATH", help="write both LP instances ('-' for stdout)")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("spectrum", help="eigenvalues, multiplicities and intersection array")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    t = sub.add_parser("table", help="grid of bound values")
    t.add_argument("--q", nargs="+", required=True)
    t.add_argument("--n", required=True, help="range such as 4-10 or 4,6,8")
    t.add_argument("--d", default="all", help="'all' (every valid d) or a range")
    t.add_argument("--bounds", default="all", help="'all' or comma-separated names")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", help="output path (default stdout)")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="brute-force oracle checks")
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--alpha-k", type=int, dest="alpha_k")
    v.add_argument("--budget", type=int, default=10**8, help="branch-and-bound node budget")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    lp = sub.add_parser("lp", help="print and solve one LP instance")
    lp.add_argument("--kind", choices=("delsarte", "minor"), required=True)
    lp.add_argument("--q", type=int, required=True)
    lp.add_argument("--n", type=int, required=True)
    lp.add_argument("--d", type=int)
    lp.add_argument("--k", type=int)
    lp.set_defaults(func=cmd_lp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"altrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"altrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
