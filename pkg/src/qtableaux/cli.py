"""Command line surface.

Subcommands:

* ``enumerate`` — print every tableau of a family, one per line;
* ``count``     — enumerated count against the closed-form dimension;
* ``char``      — a character specialisation from one route or all of them;
* ``classify``  — even orthogonal tableaux with their positive/negative class;
* ``verify``    — the full identity sweep as a pass/fail table.

Exit codes: 0 success, 1 usage error, 2 a mathematical disagreement was
detected (which means a bug in the formulas, so it is loud).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .characters import (
    CharResult,
    NonIntegerDimension,
    UnsupportedRoute,
    char,
    d_so,
    dimension,
    routes_for,
    so_char_alternate,
    split_counts,
)
from .qring import InexactDivision, LaurentPoly
from .shapes import NotAnInteger, NotWeaklyDecreasing, Partition, TooFewRows, parse_partition
from .tableaux import BOTH, NEGATIVE, NEITHER, POSITIVE, Family, ShapeNotFull, classify_even, enumerate_tableaux
from .verify import DEFAULT_MAX_N, DEFAULT_MAX_SIZE, run_sweep

USAGE_ERROR = 1
DISAGREEMENT = 2

_FAMILIES = {f.value: f for f in Family}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; 2 is reserved for detected
    # mathematical disagreement here, so usage errors become exit 1.
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def group_label(family: Family, n: int) -> str:
    if family is Family.GL:
        return f"GL({n})"
    if family is Family.SP:
        return f"Sp({2 * n})"
    if family is Family.ODD_O:
        return f"O({2 * n + 1})"
    if family is Family.EVEN_O:
        return f"O({2 * n})"
    return f"SO({2 * n})"


def latex_poly(p: LaurentPoly) -> str:
    """Render with q^{e} exponents, terms ascending, paste-ready."""
    if p.is_zero():
        return "0"
    out = ""
    for e, c in p.terms():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{{{e}}}"
            body = var if mag == 1 else f"{mag}{var}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


def emit_latex(result: CharResult) -> str:
    return latex_poly(result.poly)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qtableaux", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, families):
        p.add_argument("--family", required=True, choices=families)
        p.add_argument("--shape", required=True, help="comma-separated partition, e.g. 7,5,4,1 (empty for the empty shape)")
        p.add_argument("--n", required=True, type=int, help="alphabet parameter (letters 1..n, barred and unbarred)")

    p_enum = sub.add_parser("enumerate", help="list all tableaux of the family")
    add_common(p_enum, ["gl", "sp", "odd-o", "even-o"])
    p_enum.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p_enum.set_defaults(handler=cmd_enumerate)

    p_count = sub.add_parser("count", help="enumerated count against the closed-form dimension")
    add_common(p_count, sorted(_FAMILIES))
    p_count.add_argument("--format", default="text", choices=["text", "json"])
    p_count.set_defaults(handler=cmd_count)

    p_char = sub.add_parser("char", help="character specialisation as a Laurent polynomial in q")
    add_common(p_char, sorted(_FAMILIES))
    p_char.add_argument("--route", default="product", choices=["enumeration", "determinant", "product", "mu"])
    p_char.add_argument("--all-routes", action="store_true", help="compute every route and compare")
    p_char.add_argument("--format", default="text", choices=["text", "json", "csv", "latex"])
    p_char.set_defaults(handler=cmd_char)

    p_cls = sub.add_parser("classify", help="positive/negative classes of even orthogonal tableaux")
    add_common(p_cls, ["even-o"])
    p_cls.add_argument("--class", dest="wanted", default="all",
                       choices=[POSITIVE, NEGATIVE, BOTH, NEITHER, "all"])
    p_cls.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p_cls.set_defaults(handler=cmd_classify)

    p_ver = sub.add_parser("verify", help="run the identity sweep and print a pass/fail table")
    p_ver.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    p_ver.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p_ver.set_defaults(handler=cmd_verify)

    return parser


def _parse_shape_args(args) -> tuple[Family, Partition, int]:
    family = _FAMILIES[args.family]
    lam = parse_partition(args.shape)
    if args.n < 1:
        raise TooFewRows(f"n must be at least 1, got {args.n}")
    if family is not Family.GL and args.n < lam.length:
        raise TooFewRows(f"family {family} needs n >= {lam.length} for shape {lam}, got {args.n}")
    return family, lam, args.n


def _csv_out(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_enumerate(args) -> int:
    family, lam, n = _parse_shape_args(args)
    rendered = [t.render() for t in enumerate_tableaux(family, lam, n)]
    if args.format == "json":
        print(json.dumps({"family": family.value, "shape": list(lam.parts), "n": n,
                          "count": len(rendered), "tableaux": rendered}))
    elif args.format == "csv":
        print(_csv_out(["family", "shape", "n", "tableau"],
                       [[family.value, str(lam), str(n), r] for r in rendered]), end="")
    else:
        for r in rendered:
            print(r)
    return 0


def cmd_count(args) -> int:
    family, lam, n = _parse_shape_args(args)
    if family is Family.SO_EVEN:
        if lam.length != n:
            raise ShapeNotFull(f"the SO split needs exactly n={n} parts, got {lam.length}")
        pos, neg = split_counts(lam, n)
        formula = d_so(lam, n)
        ok = pos == neg == formula
        enumerated = pos if pos == neg else f"{pos}/{neg}"
    else:
        enumerated = sum(1 for _ in enumerate_tableaux(family, lam, n))
        formula = dimension(family, lam, n)
        ok = enumerated == formula
    verdict = "OK" if ok else "MISMATCH"
    if args.format == "json":
        print(json.dumps({"family": family.value, "shape": list(lam.parts), "n": n,
                          "enumerated": str(enumerated), "formula": str(formula), "ok": ok}))
    else:
        print(f"enumerated={enumerated} formula={formula} {verdict}")
    return 0 if ok else DISAGREEMENT


def _print_char(args, family: Family, lam: Partition, n: int, results: list[CharResult], agree: bool) -> None:
    if args.format == "json":
        if len(results) == 1:
            print(json.dumps(results[0].to_json()))
        else:
            print(json.dumps({"results": [r.to_json() for r in results],
                              "verdict": "AGREE" if agree else "DISAGREE"}))
    elif args.format == "csv":
        rows = [[r.family.value, str(r.shape), str(r.n), r.route, str(r.dimension),
                 json.dumps(r.poly.to_pairs(), separators=(",", ":"))] for r in results]
        print(_csv_out(["family", "shape", "n", "route", "dimension", "poly"], rows), end="")
    elif args.format == "latex":
        for r in results:
            print(emit_latex(r))
        if len(results) > 1:
            print(f"% verdict: {'AGREE' if agree else 'DISAGREE'}")
    else:
        print(f"family={family.value} shape={lam if lam.parts else '-'} n={n} group={group_label(family, n)}")
        for r in results:
            print(f"{r.route}: {r.poly}")
        print(f"dimension = {results[0].dimension}")
        if len(results) > 1:
            print(f"verdict: {'AGREE' if agree else 'DISAGREE'}")


def cmd_char(args) -> int:
    family, lam, n = _parse_shape_args(args)
    if args.all_routes:
        results = [char(family, lam, n, route) for route in routes_for(family)]
        if family is Family.SO_EVEN:
            # The one independent cross-check this family has: the same
            # specialisation assembled from the even orthogonal
            # hook-content product.
            alt = so_char_alternate(lam, n)
            results.append(CharResult(family, lam, n, "product-alt", alt))
    else:
        results = [char(family, lam, n, args.route)]
    agree = all(r.poly == results[0].poly for r in results)
    _print_char(args, family, lam, n, results, agree)
    return 0 if agree else DISAGREEMENT


def cmd_classify(args) -> int:
    family, lam, n = _parse_shape_args(args)
    if lam.length != n:
        raise ShapeNotFull(f"classification needs exactly n={n} parts, got {lam.length}")
    labelled = [(t.render(), classify_even(t)) for t in enumerate_tableaux(Family.EVEN_O, lam, n)]
    wanted = args.wanted
    if wanted != "all":
        member = {POSITIVE: (POSITIVE, BOTH), NEGATIVE: (NEGATIVE, BOTH),
                  BOTH: (BOTH,), NEITHER: (NEITHER,)}[wanted]
        labelled = [(r, c) for r, c in labelled if c in member]
    if args.format == "json":
        print(json.dumps({"family": family.value, "shape": list(lam.parts), "n": n,
                          "class": wanted,
                          "tableaux": [{"tableau": r, "class": c} for r, c in labelled]}))
    elif args.format == "csv":
        print(_csv_out(["family", "shape", "n", "tableau", "class"],
                       [[family.value, str(lam), str(n), r, c] for r, c in labelled]), end="")
    elif wanted == "all":
        for r, c in labelled:
            print(f"{r} {c}")
    else:
        for r, _ in labelled:
            print(r)
    return 0


def cmd_verify(args) -> int:
    report = run_sweep(args.max_size, args.max_n)
    for row in report.rows:
        status = "PASS" if row.ok else "FAIL"
        print(f"{row.family:<7} {row.shape:<13} n={row.n} {row.check:<14} {status}")
        if not row.ok:
            print(f"        {row.detail}")
    passed = sum(1 for r in report.rows if r.ok)
    print(f"verify: {len(report.rows)} checks, {passed} passed, {len(report.rows) - passed} failed "
          f"(max-size={report.max_size}, max-n={report.max_n})")
    return 0 if report.ok else DISAGREEMENT


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (NotAnInteger, NotWeaklyDecreasing, TooFewRows, ShapeNotFull, UnsupportedRoute, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (InexactDivision, NonIntegerDimension) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return DISAGREEMENT


def main() -> None:
    try:
        code = run(sys.argv[1:])
        sys.stdout.flush()
    except BrokenPipeError:
        # Downstream consumer (head, less) closed the pipe; not an error.
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        sys.exit(0)
    sys.exit(code)


if __name__ == "__main__":
    main()
