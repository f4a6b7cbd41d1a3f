"""Command-line surface: generate, analyze, patterns, czcheck, tables, scan.

Output formats: human text (no stability guarantee), json-lines (one
object per row; integers above 2^53 serialized as decimal strings) and
csv (fixed header, ratios as 6-place decimals plus an exact num/den
column).

Exit codes: 0 success, 1 usage error, 2 table discrepancy, 3 internal
inconsistency.
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from itertools import product

from . import bounds, complexity, search, sequence
from .numtheory import is_prime

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISCREPANCY = 2
EXIT_INCONSISTENT = 3

_JSON_INT_MAX = 2 ** 53


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _json_int(n):
    return str(n) if abs(n) > _JSON_INT_MAX else n


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _bits_str(seq: sequence.BitSequence) -> str:
    # index-ascending; bit n carries weight 2^n in S(2)
    return "".join(map(str, seq.bits))


def row_to_json(row: search.SearchRow) -> dict:
    return {
        "T": row.T,
        "p": row.p,
        "ord": row.ord_T_2,
        "q": _json_int(row.q) if row.q is not None else None,
        "log2q": row.log2q,
        "ratio": _frac_str(row.ratio),
        "mersenne": row.mersenne,
        "flags": sorted(row.flags),
        "q_source": row.q_source,
    }


def row_from_json(doc: dict) -> search.SearchRow:
    q = doc["q"]
    return search.SearchRow(
        T=doc["T"],
        p=doc["p"],
        ord_T_2=doc["ord"],
        q=int(q) if q is not None else None,
        log2q=doc["log2q"],
        ratio=Fraction(doc["ratio"]),
        mersenne=doc["mersenne"],
        flags=frozenset(doc["flags"]),
        q_source=doc["q_source"],
    )


ROW_CSV_HEADER = [
    "T", "p", "ord", "q", "log2q", "ratio", "ratio_frac",
    "mersenne", "flags", "q_source",
]


def _row_csv(row: search.SearchRow) -> list:
    return [
        row.T,
        row.p,
        "" if row.ord_T_2 is None else row.ord_T_2,
        "" if row.q is None else row.q,
        "" if row.log2q is None else row.log2q,
        f"{float(row.ratio):.6f}",
        _frac_str(row.ratio),
        int(row.mersenne),
        "|".join(sorted(row.flags)),
        row.q_source or "",
    ]


def _emit_rows(rows, fmt, out):
    if fmt == "json-lines":
        for row in rows:
            print(json.dumps(row_to_json(row)), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(ROW_CSV_HEADER)
        for row in rows:
            writer.writerow(_row_csv(row))
    else:
        for row in rows:
            flags = ",".join(sorted(row.flags)) or "-"
            q = "-" if row.mersenne else row.q if row.q is not None else "?"
            log2q = "-" if row.mersenne else row.log2q if row.log2q is not None else "?"
            print(
                f"T={row.T} p={row.p} ord={row.ord_T_2} q={q} "
                f"log2q={log2q} ratio={_frac_str(row.ratio)} "
                f"(~{float(row.ratio):.3f}) mersenne={row.mersenne} "
                f"flags={flags}",
                file=out,
            )


def _cmd_generate(args, out):
    ctx = sequence.build_context(args.p)
    build = sequence.build_t_sequence if args.variant == "t" else sequence.build_s_sequence
    seq = build(ctx)
    regime = bounds.classify_eta(ctx.eta).regime
    doc = {
        "p": ctx.p,
        "T": ctx.T,
        "eta": _frac_str(ctx.eta),
        "regime": regime,
        "variant": args.variant,
        "bits": _bits_str(seq),
    }
    if args.format == "json-lines":
        print(json.dumps(doc), file=out)
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(doc.keys())
        writer.writerow(doc.values())
    else:
        for k, v in doc.items():
            print(f"{k} = {v}", file=out)
    return EXIT_OK


def _analyze_doc(p: int, factor_k_max: int) -> dict:
    ctx = sequence.build_context(p)
    seq = sequence.build_s_sequence(ctx)
    bal = sequence.balance(seq, ctx)
    rep = complexity.full_report(ctx, factor_budget=factor_k_max)
    return {
        "p": ctx.p,
        "T": ctx.T,
        "eta": _frac_str(ctx.eta),
        "regime": bounds.classify_eta(ctx.eta).regime,
        "n0": bal.n0,
        "n1": bal.n1,
        "predicted_frac1": _frac_str(bal.predicted_frac1),
        "predicted_frac0": _frac_str(bal.predicted_frac0),
        "L": rep.L,
        "L_lower": rep.L_lower,
        "s1": rep.s1,
        "epsilon": rep.epsilon,
        "S2": _json_int(rep.S2),
        "C": rep.C,
        "C_lower": rep.C_lower,
    }


ANALYZE_CSV_HEADER = [
    "p", "T", "eta", "eta_frac", "regime", "n0", "n1",
    "predicted_frac1", "predicted_frac0", "L", "L_lower", "s1", "epsilon",
    "S2", "C", "C_lower",
]


def _cmd_analyze(args, out):
    if args.p is not None:
        primes = [args.p]
    else:
        lo, hi = args.p_range
        primes = [p for p in range(max(lo, 11), hi + 1) if is_prime(p)]
    docs = (_analyze_doc(p, args.factor_k_max) for p in primes)
    if args.format == "json-lines":
        for doc in docs:
            print(json.dumps(doc), file=out)
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(ANALYZE_CSV_HEADER)
        for doc in docs:
            eta = Fraction(doc["eta"])
            writer.writerow([
                doc["p"], doc["T"], f"{float(eta):.6f}", doc["eta"],
                doc["regime"], doc["n0"], doc["n1"],
                doc["predicted_frac1"], doc["predicted_frac0"],
                doc["L"], doc["L_lower"], doc["s1"], doc["epsilon"],
                doc["S2"], doc["C"],
                "" if doc["C_lower"] is None else doc["C_lower"],
            ])
    else:
        for doc in docs:
            for k, v in doc.items():
                print(f"{k} = {v}", file=out)
            print(file=out)
    return EXIT_OK


def _cmd_patterns(args, out):
    ctx = sequence.build_context(args.p)
    seq = sequence.build_s_sequence(ctx)
    rep = sequence.pattern_stats(seq, ctx, args.ell)
    windows = seq.period - args.ell + 1
    doc = {
        "p": ctx.p,
        "T": ctx.T,
        "ell": rep.ell,
        "windows": windows,
        "counts": rep.counts,
        "weight_counts": {str(w): c for w, c in rep.weight_counts.items()},
        "predicted_per_pattern": {
            str(w): _frac_str(f) for w, f in rep.predicted.items()
        },
    }
    if args.format == "json-lines":
        print(json.dumps(doc), file=out)
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["pattern", "weight", "count", "predicted_per_pattern"])
        for pat in sorted(rep.counts):
            w = pat.count("1")
            writer.writerow([pat, w, rep.counts[pat], _frac_str(rep.predicted[w])])
    else:
        print(f"p = {ctx.p}, T = {ctx.T}, ell = {args.ell}, windows = {windows}",
              file=out)
        for pat in sorted(rep.counts):
            w = pat.count("1")
            print(f"  {pat}  count={rep.counts[pat]}  "
                  f"predicted~{float(rep.predicted[w]):.4f}", file=out)
    return EXIT_OK


def _cmd_czcheck(args, out):
    violations = 0
    for s in range(1, args.s_max + 1):
        for eps in product((1, -1), repeat=s):
            chk = sequence.cz_bound_check(args.p, list(eps))
            if not chk.holds:
                violations += 1
            doc = {
                "p": args.p,
                "epsilons": list(eps),
                "m": chk.m,
                "main_term": chk.main_term,
                "bound": chk.bound,
                "holds": chk.holds,
            }
            if args.format == "json-lines":
                print(json.dumps(doc), file=out)
            else:
                sign = "".join("+" if e == 1 else "-" for e in eps)
                print(f"p={args.p} eps={sign} M={chk.m} "
                      f"main={chk.main_term:.2f} bound={chk.bound:.2f} "
                      f"holds={chk.holds}", file=out)
    return EXIT_INCONSISTENT if violations else EXIT_OK


def _cmd_tables(args, out):
    if args.which == 1:
        rows, issues = search.reproduce_table1()
    else:
        rows, issues = search.reproduce_table2(factor_k_max=args.factor_k_max)
    _emit_rows(rows, args.format, out)
    for d in issues:
        print(
            f"DISCREPANCY T={d.T} field={d.field} "
            f"expected={d.expected} actual={d.actual}",
            file=sys.stderr,
        )
    return EXIT_DISCREPANCY if issues else EXIT_OK


def _cmd_scan(args, out):
    criteria = search.ScanCriteria(
        require_t_prime=args.t_prime,
        require_no_flags=args.no_flags,
        require_two_primitive_root_mod_t=args.two_primitive_root,
        factor_k_max=args.factor_k_max,
        workers=args.workers,
    )
    _emit_rows(search.scan(args.p_min, args.p_max, criteria), args.format, out)
    return EXIT_OK


def _p_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like 11..100")
    lo, hi = int(lo), int(hi)
    if hi < lo:
        raise argparse.ArgumentTypeError("empty range")
    return lo, hi


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else fallback


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootparity")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json-lines", "csv"],
                       default="text")

    default_k_max = _env_int("ROOTPARITY_FACTOR_K_MAX", 10 ** 6)
    default_workers = _env_int("ROOTPARITY_WORKERS", 1)

    gen = sub.add_parser("generate", help="emit one period of the sequence")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--variant", choices=["s", "t"], default="s")
    add_format(gen)
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", help="balance + complexity report")
    grp = ana.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", type=int)
    grp.add_argument("--p-range", type=_p_range)
    ana.add_argument("--factor-k-max", type=int, default=default_k_max)
    add_format(ana)
    ana.set_defaults(func=_cmd_analyze)

    pat = sub.add_parser("patterns", help="pattern distribution for one p")
    pat.add_argument("--p", type=int, required=True)
    pat.add_argument("--ell", type=int, required=True)
    add_format(pat)
    pat.set_defaults(func=_cmd_patterns)

    cz = sub.add_parser("czcheck", help="block-statistic bound check")
    cz.add_argument("--p", type=int, required=True)
    cz.add_argument("--s-max", type=int, default=3)
    add_format(cz)
    cz.set_defaults(func=_cmd_czcheck)

    tab = sub.add_parser("tables", help="regenerate the reference tables")
    tab.add_argument("--which", type=int, choices=[1, 2], required=True)
    tab.add_argument("--factor-k-max", type=int, default=default_k_max)
    add_format(tab)
    tab.set_defaults(func=_cmd_tables)

    sc = sub.add_parser("scan", help="scan a prime range for candidates")
    sc.add_argument("--p-min", type=int, required=True)
    sc.add_argument("--p-max", type=int, required=True)
    sc.add_argument("--t-prime", action="store_true")
    sc.add_argument("--no-flags", action="store_true")
    sc.add_argument("--two-primitive-root", action="store_true")
    sc.add_argument("--factor-k-max", type=int,
                    default=search.DEFAULT_SCAN_FACTOR_K_MAX)
    sc.add_argument("--workers", type=int, default=default_workers)
    add_format(sc)
    sc.set_defaults(func=_cmd_scan)

    return parser


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except complexity.InconsistencyError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
