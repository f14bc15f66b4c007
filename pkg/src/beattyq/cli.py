"""Command-line front end.

Exit codes: 0 success / verified, 1 verified false (e.g. not a cover, a scan
with violations), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import conjectures, covering, figures, identities, search
from .beatty import BeattyParams, closed_form_matches, dft_direct, ft_magnitude, transform_numeric
from .cyclotomic import CycloElt, embed_complex


class CommandFailed(Exception):
    """A computation finished and its answer is 'no'."""


def _poly_str(e: CycloElt) -> str:
    parts = []
    for k, c in enumerate(e.coeffs):
        if not c:
            continue
        mono = "1" if k == 0 else ("w" if k == 1 else f"w^{k}")
        if k == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _emit_table(header, rows, fmt_name, out):
    if fmt_name == "json":
        out.write(json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([figures.fmt(x) for x in r])


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_transform(args, out):
    b = BeattyParams(args.p, args.q, args.r)
    if args.j is not None:
        js = [args.j % b.q]
    elif args.figure:
        js = list(range(1, b.q))
    else:
        js = list(range(b.q))
    if args.numeric or args.figure:
        header = ["j", "re", "im", "abs", "abs_formula"]
        rows = []
        for j in js:
            z = transform_numeric(b, j)
            rows.append([j, z.real, z.imag, abs(z), float(b.p) if j == 0 else ft_magnitude(b, j)])
        if args.figure:
            header, rows = header[:3], [r[:3] for r in rows]
    else:
        header = ["j", "value", "re", "im", "closed_form"]
        rows = []
        for j in js:
            e = dft_direct(b, j)
            z = embed_complex(e)
            status = "n/a" if j == 0 else ("verified" if closed_form_matches(b, j) else "MISMATCH")
            rows.append([j, _poly_str(e), z.real, z.imag, status])
        if any(r[4] == "MISMATCH" for r in rows):
            _emit_table(header, rows, args.format, out)
            raise CommandFailed("closed form mismatch")
    _emit_table(header, rows, args.format, out)


def _load_instance(path: str) -> covering.CoveringInstance:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return covering.CoveringInstance.from_json(text)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"bad instance file: {exc}") from exc


def cmd_verify(args, out):
    inst = _load_instance(args.instance)
    prof = covering.is_perfect_cover(inst)
    spec = covering.covering_criterion(inst)
    if prof.is_perfect != spec.is_perfect:
        raise AssertionError("profile and criterion routes disagree")
    _emit_json({"instance": json.loads(inst.to_json()), "profile_route": prof.to_dict(),
                "criterion_route": spec.to_dict()}, out)
    if not prof.is_perfect:
        raise CommandFailed("not a perfect cover")


def cmd_construct(args, out):
    inst = covering.construct_cfc(args.q, args.delta, args.gamma)
    verdict = covering.is_perfect_cover(inst)
    _emit_json({
        **json.loads(inst.to_json()),
        "c_measured": verdict.c,
        "c_predicted": covering.predicted_multiplicity(args.q, args.delta),
    }, out)


def cmd_search(args, out):
    report = search.run_full_search(args.m_max, args.q_max, args.threads)
    out.write(report.to_json() + "\n")


def cmd_identities(args, out):
    records = identities.identity_report(args.q, args.t)
    if args.format == "json":
        _emit_json(records, out)
    else:
        for rec in records:
            line = rec.get("latex") or json.dumps({k: rec[k] for k in ("q", "t", "kind", "rhs")})
            out.write(f"{rec['kind']}\t{line}\n")
    if not records[0]["exact"]:
        raise CommandFailed("csc identity failed")


def cmd_conjectures(args, out):
    if args.which == "strong-martin":
        rep = conjectures.strong_martin_scan(args.n, args.q_min, args.q_max)
        bad = rep["violations"]
    else:
        scan = conjectures.scan_rational_function if args.which == "rf" else conjectures.strengthened_scan
        per_q = [scan(q, args.n_max) for q in range(max(args.q_min, 2), args.q_max + 1)]
        bad = [v for r in per_q for v in r["violations"]]
        rep = {"which": args.which, "q_range": [args.q_min, args.q_max], "n_max": args.n_max,
               "u_sets_scanned": sum(r["u_sets_scanned"] for r in per_q), "violations": bad}
    rep["note"] = "finite scan; evidence only, not a proof"
    _emit_json(rep, out)
    if bad:
        raise CommandFailed(f"{len(bad)} violation(s)")


def cmd_figures(args, out):
    out_dir = Path(args.out or ".")
    for fig in args.fig:
        for path in figures.write_figure(fig, out_dir, plot=not args.no_plot):
            out.write(f"{path}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="beattyq", description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="output file (directory for 'figures')")
    ap.add_argument("--format", choices=["csv", "json"], default="csv")
    ap.add_argument("--threads", type=int, default=1)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("transform", help="Fourier coefficients of B(p, q, r)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)
    p.add_argument("j", type=int, nargs="?")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact values (default)")
    mode.add_argument("--numeric", action="store_true")
    p.add_argument("--figure", action="store_true", help="rows j, re, im for 1 <= j < q")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="is an instance JSON a perfect cover?")
    p.add_argument("instance", help="path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="doubling construction for (q, delta, gamma)")
    p.add_argument("q", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("gamma", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="classify covers by at most m_max sets")
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--q-max", type=int, default=search.q_bound(5))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("identities", help="csc and ratio-sum identities for odd q")
    p.add_argument("q", type=int)
    p.add_argument("t", type=int, nargs="?")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("conjectures", help="desk-scale conjecture scans")
    p.add_argument("--which", choices=["rf", "rf-strong", "strong-martin"], required=True)
    p.add_argument("--q-min", type=int, default=2)
    p.add_argument("--q-max", type=int, default=40)
    p.add_argument("--n-max", type=int, default=4, help="max number of terms (rf scans)")
    p.add_argument("--n", type=int, default=3, help="tuple size (strong-martin)")
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("figures", help="figure data as CSV plus PNG renderings")
    p.add_argument("fig", type=int, nargs="+", choices=figures.FIGURES)
    p.add_argument("--no-plot", action="store_true", help="CSV only")
    p.set_defaults(func=cmd_figures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    code = 0
    try:
        args.func(args, buf)
    except CommandFailed as exc:
        print(f"beattyq: {exc}", file=sys.stderr)
        code = 1
    except (ValueError, ZeroDivisionError, FileNotFoundError) as exc:
        print(f"beattyq: error: {exc}", file=sys.stderr)
        return 2
    text = buf.getvalue()
    if args.out and args.cmd != "figures":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
