"""Command-line interface.

Subcommands:

    count        exact count of a family (optionally with its main term)
    parametrize  list the fixed-j family curves up to a height bound
    twist        write a curve as the twist of its representative
    tables       emit the CM reference tables (table, csv, or json)
    verify       brute-force census vs. every exact formula

Exit codes: 0 success, 2 malformed flags, 3 a j of 0 or 1728 was forced
down the generic fixed-j path, 4 singular curve input, 5 verify mismatch,
6 scan budget exceeded.  Bounds accept integers, scientific notation
(parsed exactly: 1e25 is the integer 10^25), and rationals "p/q".
j-invariants accept rationals or CM aliases "cm:<disc>[:<conductor>]".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath

from . import asymptotics, cm, families, oracle
from .cuspidal import count_points
from .exactarith import is_kfree
from .families import SingularCurveError, SpecialJError, WeierstrassCurve
from .heights import HeightSpec, height, parse_height_spec


def _parse_bound(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad bound {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("bound must be positive")
    return value


def _parse_height(text: str) -> HeightSpec:
    try:
        return parse_height_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_j(text: str) -> Fraction:
    if text.startswith("cm:"):
        parts = text[3:].split(":")
        try:
            disc = int(parts[0])
            conductor = int(parts[1]) if len(parts) > 1 else 1
            return Fraction(cm.cm_order(disc, conductor).j)
        except (ValueError, KeyError) as exc:
            raise argparse.ArgumentTypeError(f"bad CM alias {text!r}") from exc
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad j-invariant {text!r}") from exc


def _parse_j_list(text: str) -> list[Fraction]:
    if text.strip().lower() == "cm":
        return [Fraction(o.j) for o in cm.CM_ORDERS]
    return [_parse_j(tok) for tok in text.split(",") if tok.strip()]


def _fmt(value) -> str:
    """One cell as text (rationals as p/q, high-precision floats trimmed)."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, 12)
    return str(value)


def _json_cell(value, as_string: bool):
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    if isinstance(value, int):
        # arbitrary-precision integers above float precision become strings
        return str(value) if as_string or abs(value) > 2**53 else value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, mpmath.mpf):
        return float(value)
    if isinstance(value, float):
        return value
    return str(value)


def _emit(args, headers: list[str], rows: list[dict], string_cols=frozenset()) -> None:
    fmt = getattr(args, "format", "table")
    out = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        if fmt == "json":
            payload = [
                {h: _json_cell(row[h], h in string_cols) for h in headers} for row in rows
            ]
            print(json.dumps(payload, indent=2), file=out)
        elif fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(headers)
            for row in rows:
                writer.writerow([_fmt(row[h]) for h in headers])
            out.write(buf.getvalue())
        else:
            cells = [[_fmt(row[h]) for h in headers] for row in rows]
            widths = [
                max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
                for i, h in enumerate(headers)
            ]
            print("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(), file=out)
            for r in cells:
                print("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip(), file=out)
    finally:
        if out is not sys.stdout:
            out.close()


# ---------------------------------------------------------------- count --


def cmd_count(args) -> int:
    if args.family == "j" and args.j is None:
        print("error: --j is required for --family j", file=sys.stderr)
        return 2
    spec, x = args.height, args.bound
    if args.family == "all":
        exact = families.count_curves(spec, x)
        approx = asymptotics.main_term_curves(spec, x)
    elif args.family == "rep":
        exact = families.count_representatives(spec, x)
        approx = asymptotics.main_term_representatives(spec, x)
    elif args.family == "j":
        exact = families.count_curves_with_j(args.j, spec, x)
        approx = asymptotics.main_term_curves_with_j(args.j, spec, x)
    elif args.family == "cm":
        exact = cm.count_cm_curves(spec, x)
        approx = asymptotics.cm_curves_asymptotic(spec, x)
    else:  # cm-rep
        exact = cm.count_cm_representatives(spec, x)
        approx = asymptotics.cm_asymptotic(spec, x)
    print(exact)
    if args.asymptotic:
        rep = asymptotics.report(exact, float(approx))
        print(f"main term: {mpmath.nstr(approx, 12)}")
        print(f"relative error: {rep.percent()}")
    return 0


# ---------------------------------------------------------- parametrize --


def cmd_parametrize(args) -> int:
    spec, x, j = args.height, args.bound, args.j
    if args.squarefree_only and (j == 0 or j == 1728):
        raise SpecialJError(
            "the square-free parameter rule belongs to the generic fixed-j "
            "family; j = 0 and j = 1728 representatives are 6-free/4-free "
            "instead (use `count --family rep`)"
        )
    bound = families.param_bound(j, spec, x)
    rows = []
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        if args.squarefree_only and not is_kfree(m, 2):
            continue
        curve = families.curve_from_parameter(j, m)
        rows.append({"m": m, "A": curve.A, "B": curve.B, "height": height(spec, curve)})
    _emit(args, ["m", "A", "B", "height"], rows, string_cols={"A", "B"})
    return 0


# ---------------------------------------------------------------- twist --


def cmd_twist(args) -> int:
    dec = families.twist_decompose(WeierstrassCurve(args.A, args.B))
    print(dec.d, dec.representative.A, dec.representative.B)
    return 0


# --------------------------------------------------------------- tables --


def _table_cm_minimal(spec: HeightSpec):
    rows = [
        {
            "d_K": r.disc,
            "f": r.conductor,
            "j": r.j,
            "A": r.curves[0].A,
            "B_abs": abs(r.curves[0].B),
            "min_height": r.min_height,
        }
        for r in cm.cm_minimal_table(spec)
    ]
    return ["d_K", "f", "j", "A", "B_abs", "min_height"], rows, {"A", "B_abs", "j"}


def _table_cm_counts(spec: HeightSpec, bounds):
    table = cm.cm_count_table(spec, bounds or cm.DEFAULT_COUNT_BOUNDS)
    headers = ["d_K", "f", "j"] + [f"X={_fmt(b)}" for b in table.bounds]
    rows = []
    for r in table.rows:
        row = {"d_K": r.disc, "f": r.conductor, "j": r.j}
        row.update({f"X={_fmt(b)}": c for b, c in zip(table.bounds, r.counts)})
        rows.append(row)
    total = {"d_K": "total", "f": "", "j": ""}
    total.update({f"X={_fmt(b)}": c for b, c in zip(table.bounds, table.totals)})
    rows.append(total)
    return headers, rows, {"j"}


def _table_coefficients(spec: HeightSpec):
    rows = [
        {
            "d_K": r.disc,
            "f": r.conductor,
            "j": r.j,
            "coefficient": mpmath.nstr(r.coefficient, 10),
        }
        for r in asymptotics.coefficient_table(spec)
    ]
    return ["d_K", "f", "j", "coefficient"], rows, {"j"}


def _table_relative_error(spec: HeightSpec):
    rows = [
        {
            "X": r.bound,
            "exact": r.exact,
            "approximation": f"{r.approximation:.2f}",
            "relative_error": asymptotics.format_percent(r.relative_error),
        }
        for r in asymptotics.error_table(spec)
    ]
    return ["X", "exact", "approximation", "relative_error"], rows, set()


def cmd_tables(args) -> int:
    spec = args.height
    if args.name == "cm-minimal":
        headers, rows, strcols = _table_cm_minimal(spec)
    elif args.name == "cm-counts":
        headers, rows, strcols = _table_cm_counts(spec, args.bounds)
    elif args.name == "coefficients":
        headers, rows, strcols = _table_coefficients(spec)
    else:  # relative-error
        headers, rows, strcols = _table_relative_error(spec)
    _emit(args, headers, rows, strcols)
    return 0


# --------------------------------------------------------------- verify --


def cmd_verify(args) -> int:
    spec, x = args.height, args.bound
    tracked = args.j or []
    census = oracle.brute_census(
        spec, x, tracked_j=tracked, stripes=args.workers, workers=args.workers
    )
    b = census.box
    if b.x_bound == 0 or b.y_bound == 0:
        singular_formula = 1  # only the origin fits such a box
    else:
        singular_formula = count_points(Fraction(-4, 27), b.x_bound, b.y_bound)
    checks = [
        ("curves", families.count_curves(spec, x), census.total_elliptic),
        ("representatives", families.count_representatives(spec, x), census.total_representatives),
        ("singular-locus", singular_formula, census.singular_points),
    ]
    for j in tracked:
        tilde, rep = census.per_j[Fraction(j)]
        checks.append((f"curves j={_fmt(Fraction(j))}", families.count_curves_with_j(j, spec, x), tilde))
        checks.append(
            (
                f"representatives j={_fmt(Fraction(j))}",
                families.count_representatives_with_j(j, spec, x),
                rep,
            )
        )
    failed = None
    for name, formula, scanned in checks:
        ok = formula == scanned
        print(f"{'PASS' if ok else 'FAIL'}  {name}: formula={formula} census={scanned}")
        if not ok and failed is None:
            failed = name
    if failed is not None:
        print(f"mismatch in family: {failed}", file=sys.stderr)
        return 5
    print(f"PASS  all formulas agree with the census of {b} at bound {_fmt(x)}")
    return 0


# ----------------------------------------------------------------- main --


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nhc",
        description="Exact counts of integer Weierstrass elliptic curves ordered by naive height.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, bound=True):
        p.add_argument("--height", type=_parse_height, default="cal",
                       help="cal, ncal, or alpha/<num>:<den>,beta/<num>:<den>")
        if bound:
            p.add_argument("--bound", type=_parse_bound, required=True,
                           help="height cutoff X (integer, 1e-notation, or p/q)")

    p = sub.add_parser("count", help="exact count of a curve family")
    p.add_argument("--family", choices=["all", "rep", "j", "cm", "cm-rep"], required=True)
    add_common(p)
    p.add_argument("--j", type=_parse_j, help="j-invariant (required for --family j)")
    p.add_argument("--asymptotic", action="store_true",
                   help="also print the main term and the relative error")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("parametrize", help="list the fixed-j family up to a bound")
    p.add_argument("--j", type=_parse_j, required=True)
    add_common(p)
    p.add_argument("--squarefree-only", action="store_true",
                   help="keep only Q-isomorphism class representatives (generic j)")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_parametrize)

    p = sub.add_parser("twist", help="decompose a curve as d * representative")
    p.add_argument("A", type=int)
    p.add_argument("B", type=int)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("tables", help="emit a reference table")
    p.add_argument("--name", choices=["cm-minimal", "cm-counts", "coefficients", "relative-error"],
                   required=True)
    add_common(p, bound=False)
    p.add_argument("--bounds", type=lambda s: [_parse_bound(t) for t in s.split(",")],
                   help="comma-separated cutoffs for cm-counts")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="brute-force census vs the exact formulas")
    add_common(p)
    p.add_argument("--j", type=_parse_j_list,
                   help="comma-separated j-invariants to track ('cm' = all thirteen)")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel scan processes (default: all cores)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and args.command == "verify":
        import os

        args.workers = os.cpu_count() or 1
    try:
        return args.func(args)
    except SpecialJError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SingularCurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except oracle.ScanBudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 6


if __name__ == "__main__":
    sys.exit(main())
