"""Command-line front end.

Exit codes: 0 success, 1 domain error (the error class name is printed),
2 usage error, 3 fast/oracle mismatch or scan violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalInconsistency, MismatchError, QuotsemiError
from .exactmath import (
    ceil_cfe,
    convergent_table,
    floor_cfe,
    fmt_rat,
    frac_part,
    parse_rat,
    semiconvergents,
)
from .invariants import CASE_TAGS, fast_report, full_report
from .lattice import QuotientSpec
from .oracle import InvariantReport, invariants as oracle_invariants, member_ab, quotient_ab
from .ostrowski import ctx_new, floor_part, lam, psi, psi_inv
from .reverse import solve_case1, solve_case2, solve_case3


def report_dict(rep: InvariantReport) -> dict:
    return {
        "multiplicity": rep.multiplicity,
        "embedding_dim": rep.e,
        "type": rep.t,
        "frobenius": rep.frobenius,
        "genus": rep.genus,
        "irr": sorted(rep.irr),
        "pf": sorted(rep.pf),
        "symmetric": rep.symmetric,
        "wilf_margin": fmt_rat(rep.wilf_margin),
        "method": rep.method,
        "case_tag": rep.case_tag,
    }


def _fmt_set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def cmd_invariants(args, out) -> int:
    rep = full_report(args.a, args.b, args.d, args.mode)
    if args.json:
        print(json.dumps(report_dict(rep)), file=out)
        return 0
    print(
        f"m={rep.multiplicity} e={rep.e} t={rep.t} f={rep.frobenius} g={rep.genus}",
        file=out,
    )
    print(f"Irr {_fmt_set(rep.irr)}", file=out)
    print(f"PF {_fmt_set(rep.pf)}", file=out)
    print(f"symmetric={rep.symmetric} wilf_margin={fmt_rat(rep.wilf_margin)}", file=out)
    print(f"method={rep.method} case={rep.case_tag}", file=out)
    return 0


def _verify_triple(t, I) -> bool:
    return set(quotient_ab(*t).irr()) == set(I)


def cmd_reverse(args, out) -> int:
    I = sorted(set(args.gens))
    cases = ["1", "2", "3"] if args.case == "all" else [args.case]
    result = {}
    bad = []
    for c in cases:
        if c == "1":
            triples, fams = solve_case1(I), []
        elif c == "2":
            triples, fams = solve_case2(I, args.limit)
        else:
            triples, fams = solve_case3(I, args.limit)
        entry = {
            "triples": [list(t) for t in triples],
            "families": [
                {
                    "order": list(f.order),
                    "formula": f.formula,
                    "params": list(f.params),
                    "bounds": list(f.bounds),
                    "exclusions": [{"mod": p, "residue": r} for p, r in f.exclusions],
                    "constraints": f.constraints,
                }
                for f in fams
            ],
        }
        if args.verify:
            entry["verified"] = [_verify_triple(t, I) for t in triples]
            bad.extend(t for t, ok in zip(triples, entry["verified"]) if not ok)
        result[f"case{c}"] = entry
    if args.json:
        print(json.dumps(result), file=out)
    else:
        for name, entry in result.items():
            print(f"{name}:", file=out)
            for f in entry["families"]:
                excl = "".join(f" k!={x['residue']} mod {x['mod']}" for x in f["exclusions"])
                print(f"  family {f['formula']}  {', '.join(f['constraints'])}{excl}", file=out)
            for i, t in enumerate(entry["triples"]):
                tag = ""
                if args.verify:
                    tag = "  ok" if entry["verified"][i] else "  FAIL"
                print(f"  ({t[0]},{t[1]},{t[2]}){tag}", file=out)
    return 3 if bad else 0


def cmd_cf(args, out) -> int:
    x = parse_rat(args.x)
    c = ceil_cfe(x) if args.ceiling else floor_cfe(x)
    print(f"{fmt_rat(x)} = {c}", file=out)
    if args.convergents:
        tab = convergent_table(c)
        for i, (p, q) in enumerate(zip(tab.ps, tab.qs)):
            print(f"  {i} {p}/{q}", file=out)
    if args.semiconvergents:
        print("semiconvergents: " + " ".join(fmt_rat(f) for f in semiconvergents(x)), file=out)
    return 0


def cmd_ostrowski(args, out) -> int:
    alpha = parse_rat(args.alpha)
    ctx = ctx_new(alpha)
    n = args.n
    d = psi_inv(ctx, n)
    fr = frac_part(n * alpha)
    checks = [
        ("n = sum d_j q_{j-1}", psi(ctx, d), n),
        ("floor(n alpha) = sum d_j p_{j-1}", floor_part(ctx, d), math.floor(n * alpha)),
        ("{n alpha} = sum (-1)^(j-1) d_j delta_{j-1}", lam(ctx, d), fr),
    ]
    print(f"alpha={fmt_rat(alpha)} n={n}", file=out)
    print("digits (" + ",".join(map(str, d)) + ")", file=out)
    print(f"{{n alpha}} = {fmt_rat(fr)}", file=out)
    ok = True
    for label, lhs, rhs in checks:
        good = lhs == rhs
        ok &= good
        print(f"  {label}: {fmt_rat(Fraction(lhs))} {'ok' if good else 'FAIL'}", file=out)
    return 0 if ok else 3


@dataclass(frozen=True)
class ScanConfig:
    max_a: int
    max_b: int
    max_d: int
    check: str = "oracle"
    jobs: int = 1


def scan_specs(cfg: ScanConfig) -> list[tuple[int, int, int]]:
    out = []
    for a in range(2, cfg.max_a + 1):
        for b in range(a + 1, cfg.max_b + 1):
            if math.gcd(a, b) != 1:
                continue
            for d in range(2, cfg.max_d + 1):
                if math.gcd(a, d) == 1 and math.gcd(b, d) == 1 and not member_ab(d, a, b):
                    out.append((a, b, d))
    return out


def check_spec(t: tuple[int, int, int], check: str) -> list[tuple]:
    """Violations for one spec as (a, b, d, field, fast value, oracle value)."""
    a, b, d = t
    try:
        fast = fast_report(QuotientSpec(a, b, d))
    except (QuotsemiError, AssertionError) as exc:
        return [(a, b, d, "error", type(exc).__name__, "-")]
    v = []
    if check in ("cases", "oracle") and fast.case_tag not in CASE_TAGS:
        v.append((a, b, d, "case_tag", fast.case_tag, "-"))
    if check in ("wilf", "oracle"):
        if fast.wilf_margin > 0:
            v.append((a, b, d, "wilf", fmt_rat(fast.wilf_margin), "<=0"))
        if fast.e - fast.t < 1:
            v.append((a, b, d, "e_minus_t", fast.e - fast.t, ">=1"))
    if check == "oracle":
        orc = oracle_invariants(quotient_ab(a, b, d))
        fa, oa = fast.core(), orc.core()
        for k in fa:
            if fa[k] != oa[k]:
                v.append((a, b, d, k, fa[k], oa[k]))
    return v


def _check_chunk(args):
    specs, check = args
    return [x for t in specs for x in check_spec(t, check)]


def run_scan(cfg: ScanConfig) -> tuple[int, list[tuple]]:
    specs = scan_specs(cfg)
    if cfg.jobs > 1:
        size = max(1, len(specs) // (cfg.jobs * 8))
        chunks = [(specs[i : i + size], cfg.check) for i in range(0, len(specs), size)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            parts = list(ex.map(_check_chunk, chunks))
        viol = [x for p in parts for x in p]
    else:
        viol = _check_chunk((specs, cfg.check))
    viol.sort(key=lambda x: (x[0], x[1], x[2], x[3]))
    return len(specs), viol


def _fmt_val(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    if isinstance(v, Fraction):
        return fmt_rat(v)
    return str(v)


def cmd_scan(args, out) -> int:
    cfg = ScanConfig(args.max_a, args.max_b, args.max_d, args.check, args.jobs)
    n, viol = run_scan(cfg)
    for a, b, d, fld, fv, ov in viol:
        print(f"{a} {b} {d} {fld} {_fmt_val(fv)} {_fmt_val(ov)}", file=out)
    print(f"checked {n} specs, {len(viol)} violations", file=sys.stderr)
    return 3 if viol else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quotsemi", description="Invariants of quotients <a,b>/d")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariants", help="invariants of <a,b>/d")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--mode", choices=["fast", "oracle", "both"], default="fast")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("reverse", help="all (a,b,d) with a given minimal generating set")
    p.add_argument("gens", type=int, nargs="+")
    p.add_argument("--case", choices=["1", "2", "3", "all"], default="all")
    p.add_argument("--limit", type=int, default=5)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_reverse)

    p = sub.add_parser("cf", help="floor or ceiling continued fraction of P/Q")
    p.add_argument("x")
    p.add_argument("--ceiling", action="store_true")
    p.add_argument("--convergents", action="store_true")
    p.add_argument("--semiconvergents", action="store_true")
    p.set_defaults(fn=cmd_cf)

    p = sub.add_parser("ostrowski", help="alpha-numeration digits of N")
    p.add_argument("alpha")
    p.add_argument("n", type=int)
    p.set_defaults(fn=cmd_ostrowski)

    p = sub.add_parser("scan", help="exhaustive check over a grid of specs")
    p.add_argument("--max-a", type=int, required=True)
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--max-d", type=int, required=True)
    p.add_argument("--check", choices=["wilf", "oracle", "cases"], default="oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_scan)
    return ap


def run(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except (MismatchError, InternalInconsistency) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except QuotsemiError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main(argv: Optional[list[str]] = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
