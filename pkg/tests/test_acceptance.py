"""Acceptance suite: one check per criterion, one PASS/FAIL line each.

Run through pytest (the lines are repeated in the terminal summary) or
directly with `python3 tests/test_acceptance.py`.
"""

from __future__ import annotations

import math
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bruteforce import count_naive_int, valid_triples  # noqa: E402
from quotsemi.cli import ScanConfig, run_scan  # noqa: E402
from quotsemi.exactmath import (  # noqa: E402
    alo_cmp,
    best_rational,
    ceil_cfe,
    ceil_to_floor,
    eval_ceil,
    eval_floor,
    floor_agreement_length,
    floor_cfe,
    floor_to_ceil,
    rho_formula,
    rlo_cmp,
)
from quotsemi.invariants import fast_report, irr_fast, quotient_ctx  # noqa: E402
from quotsemi.lattice import QuotientSpec, x0_bf  # noqa: E402
from quotsemi.oracle import from_generators, invariants, quotient_ab  # noqa: E402
from quotsemi.ostrowski import (  # noqa: E402
    count_c,
    count_c_as_printed,
    ctx_new,
    enumerate_digits,
    floor_part,
    lam,
    lam_inv,
    min_points,
    min_points_capped,
    min_points_shifted,
    psi,
    psi_inv,
)
from quotsemi.reverse import (  # noqa: E402
    arithmetic_identity,
    solve_case1,
    solve_case2,
    solve_case3,
)

RESULTS: list[str] = []
JOBS = max(1, os.cpu_count() or 1)


def _fracs(qmax, qmin=2):
    for q in range(qmin, qmax + 1):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                yield p, q


# 1. worked examples ---------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    fails = []

    def irr(a, b, d):
        return list(fast_report(QuotientSpec(a, b, d)).irr)

    expect = {
        (7, 59, 6): [7, 11, 59],
        (11, 59, 10): [7, 11, 59],
        (10, 31, 3): [10, 17, 24, 31],
        (10, 79, 7): [10, 17, 24, 79],
        (10, 103, 9): [10, 17, 24, 103],
        (151, 503, 6): [109, 151, 503],
        (151, 503, 218): [3, 151],
        (151, 503, 32): list(range(151, 504, 11)),
        (151, 503, 176): list(range(151, 452, 2)),
    }
    for t, want in expect.items():
        if irr(*t) != want:
            fails.append(f"Irr{t}")
    if invariants(quotient_ab(11, 89, 20)).core() != invariants(from_generators([5, 11])).core():
        fails.append("<11,89>/20 vs <5,11>")

    # reverse families: formula, parameter bounds, exclusions
    want2 = {
        (7, 11, 59): ("<7, 59k-11>/(6k-1)", (2,), [(7, 6)]),
        (11, 7, 59): ("<11, 59k-7>/(10k-1)", (2,), [(11, 10)]),
        (10, 17, 24): ("<10, 24k-17>/(2k-1)", (6,), [(5, 3)]),
    }
    want3 = {
        (7, 11, 59): ("<7j-11, 59k-11>/(6kj-j-k)", (10, 2)),
        (11, 7, 59): ("<11j-7, 59k-7>/(10kj-j-k)", (6, 2)),
        (10, 17, 24): ("<10j-17, 24k-17>/(2kj-j-k)", (13, 6)),
    }
    fams2 = {f.order: f for I in ({7, 11, 59}, {10, 17, 24}) for f in solve_case2(I, 1)[1]}
    fams3 = {f.order: f for I in ({7, 11, 59}, {10, 17, 24}) for f in solve_case3(I, 1)[1]}
    for order, (formula, bounds, excl) in want2.items():
        f = fams2.get(order)
        if f is None or (f.formula, f.bounds, f.exclusions) != (formula, bounds, excl):
            fails.append(f"case2 family {order}")
            continue
        I = set(order)
        for k in range(bounds[0], bounds[0] + 8):
            excluded = any(k % p == r for p, r in excl)
            t = f.make(k)
            if excluded == (math.gcd(t[0], t[1]) == 1):
                fails.append(f"case2 exclusion {order} k={k}")
            if not excluded and set(quotient_ab(*t).irr()) != I:
                fails.append(f"case2 instance {t}")
    for order, (formula, bounds) in want3.items():
        f = fams3.get(order)
        if f is None or (f.formula, f.bounds) != (formula, bounds):
            fails.append(f"case3 family {order}")
    el = time.perf_counter() - t0
    if el >= 1.0:
        fails.append(f"took {el:.2f}s")
    return not fails, f"{len(expect) + 7} fixtures in {el:.2f}s" + (f"; failures: {fails}" if fails else "")


# 2. exhaustive oracle equivalence ------------------------------------------


def _case_predicates(spec):
    a, b, d = spec.a, spec.b, spec.d
    if d < a:
        return ["D_LT_A"]
    if d < b:
        return ["A_LT_D_LT_B"]
    x0 = x0_bf(spec)
    m = quotient_ctx(spec).m
    tags = []
    if x0 + b > d:
        tags.append("D_GT_B_WIDE")
    if x0 + b <= d and x0 + b > m:
        tags.append("D_GT_B_MID")
    if x0 + b <= d and x0 + b <= m:
        tags.append("D_GT_B_TIGHT")
    return tags


def criterion_2():
    t0 = time.perf_counter()
    n, viol = run_scan(ScanConfig(39, 40, 120, "oracle", JOBS))
    tag_fail = 0
    for t in valid_triples(39, 40, 120):
        spec = QuotientSpec(*t)
        tags = _case_predicates(spec)
        if len(tags) != 1 or tags[0] != irr_fast(spec).case_tag:
            tag_fail += 1
    el = time.perf_counter() - t0
    ok = not viol and tag_fail == 0
    detail = f"{n} specs, {len(viol)} field mismatches, {tag_fail} case-tag failures, {el:.1f}s"
    if viol:
        detail += f"; first: {viol[0]}"
    return ok, detail


# 3. numeration properties ---------------------------------------------------


def _numeration_ok(p, q):
    ctx = ctx_new(Fraction(p, q))
    E = enumerate_digits(ctx)
    if len(E) != q:
        return False
    by_n = [None] * q
    for d in E:
        n = psi(ctx, d)
        if not 0 <= n < q or by_n[n] is not None:
            return False
        by_n[n] = d
    by_f = [None] * q
    for n, d in enumerate(by_n):
        if n and rlo_cmp(by_n[n - 1], d) != -1:
            return False
        v = lam(ctx, d)
        if v != Fraction(n * p % q, q):
            return False
        by_f[n * p % q] = d
        if psi_inv(ctx, n) != d or floor_part(ctx, d) != n * p // q or lam_inv(ctx, v) != d:
            return False
    return all(alo_cmp(by_f[i - 1], by_f[i]) == -1 for i in range(1, q))


def criterion_3():
    t0 = time.perf_counter()
    bad = [(p, q) for p, q in _fracs(200) if not _numeration_ok(p, q)]
    n = sum(1 for _ in _fracs(200))
    el = time.perf_counter() - t0
    return not bad, f"{n} alphas with q<=200, {len(bad)} failures, {el:.1f}s" + (f"; first {bad[0]}" if bad else "")


# 4. minimal points ----------------------------------------------------------


def _sweep(vals):
    """Indices whose value is below every earlier value (minimal points in n order)."""
    out, best = [], None
    for n, v in vals:
        if best is None or v < best:
            out.append(n)
            best = v
    return out


def _min_bf(p, q, N, cap=None):
    return _sweep((n, n * p % q) for n in range(1, N + 1) if cap is None or n * p % q <= cap)


def _shift_bf(p, q, bq, include_zero):
    if include_zero:
        return _sweep((n, (n * p - bq) % q) for n in range(0, q) if n == 0 or n * p % q >= bq)
    return _sweep((n, (n * p - bq) % q) for n in range(1, q))


def _minpoint_case(p, q, N, bq):
    ctx = ctx_new(Fraction(p, q))
    beta = Fraction(bq, q)
    if [x.n for x in min_points(ctx, N)] != _min_bf(p, q, N):
        return "min_points"
    if [x.n for x in min_points_capped(ctx, N, beta)] != _min_bf(p, q, N, bq):
        return "capped"
    return None


def criterion_4():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for p, q in _fracs(40):
        ctx = ctx_new(Fraction(p, q))
        for N in range(1, q):
            cases += 1
            if [x.n for x in min_points(ctx, N)] != _min_bf(p, q, N):
                bad.append(("min_points", p, q, N))
            for bq in range(1, q):
                cases += 1
                got = [x.n for x in min_points_capped(ctx, N, Fraction(bq, q))]
                if got != _min_bf(p, q, N, bq):
                    bad.append(("capped", p, q, N, bq))
        for bq in range(1, q):
            for z in (False, True):
                cases += 1
                got = [x.n for x in min_points_shifted(ctx, Fraction(bq, q), z)]
                if got != _shift_bf(p, q, bq, z):
                    bad.append(("shifted", p, q, bq, z))
    rng = random.Random(20261019)
    for _ in range(1000):
        q = rng.randint(41, 120)
        p = rng.randint(1, q - 1)
        while math.gcd(p, q) != 1:
            p = rng.randint(1, q - 1)
        N, bq = rng.randint(1, q - 1), rng.randint(1, q - 1)
        cases += 1
        err = _minpoint_case(p, q, N, bq)
        ctx = ctx_new(Fraction(p, q))
        for z in (False, True):
            if [x.n for x in min_points_shifted(ctx, Fraction(bq, q), z)] != _shift_bf(p, q, bq, z):
                err = err or "shifted"
        if err:
            bad.append((err, p, q, N, bq))
    el = time.perf_counter() - t0
    return not bad, f"{cases} cases, {len(bad)} failures, {el:.1f}s" + (f"; first {bad[0]}" if bad else "")


# 5. counting formula --------------------------------------------------------


def criterion_5():
    t0 = time.perf_counter()
    bad, cases, printed_bad = [], 0, 0
    for p, q in _fracs(60):
        ctx = ctx_new(Fraction(p, q))
        for bq in range(1, q):
            beta = Fraction(bq, q)
            run = 1  # k = 0 always counts
            for nu in range(1, q):
                run += 1 if nu * p % q <= bq else 0
                cases += 1
                if count_c(ctx, beta, nu) != run:
                    bad.append((p, q, bq, nu))
                if q <= 20 and count_c_as_printed(ctx, beta, nu) != run:
                    printed_bad += 1
    rng = random.Random(500)
    for _ in range(10000):
        q = rng.randint(2, 500)
        p = rng.randint(1, q - 1)
        while math.gcd(p, q) != 1:
            p = rng.randint(1, q - 1)
        bq, nu = rng.randint(1, q - 1), rng.randint(1, q - 1)
        cases += 1
        if count_c(ctx_new(Fraction(p, q)), Fraction(bq, q), nu) != count_naive_int(p, q, bq, nu):
            bad.append((p, q, bq, nu))
    el = time.perf_counter() - t0
    detail = f"{cases} cases, {len(bad)} failures, {el:.1f}s (index-k reading: {printed_bad} failures for q<=20)"
    return not bad, detail + (f"; first {bad[0]}" if bad else "")


# 6. continued fractions ----------------------------------------------------


def _scan_best(lo, hi, lo_open=False):
    """Least denominator with a fraction in the interval, and all such fractions."""
    q = 1
    while True:
        p_lo = math.floor(lo * q) + 1 if lo_open else math.ceil(lo * q)
        p_hi = math.floor(hi * q)
        if p_lo <= p_hi:
            return [Fraction(p, q) for p in range(p_lo, p_hi + 1)]
        q += 1


def criterion_6():
    t0 = time.perf_counter()
    bad, n_cfe, n_best = [], 0, 0
    for q in range(1, 501):
        for p in range(0, q):
            if math.gcd(p, q) != 1:
                continue
            for x in (Fraction(p, q), Fraction(p, q) + (q % 7) - 3):
                n_cfe += 1
                fc, cc = floor_cfe(x), ceil_cfe(x)
                if eval_floor(fc) != x or eval_ceil(cc) != x:
                    bad.append(("round trip", x))
                if floor_to_ceil(fc) != cc or ceil_to_floor(cc) != fc:
                    bad.append(("substitution", x))
                if rho_formula(fc) != cc.rho:
                    bad.append(("rho", x))
    small = sorted({Fraction(p, q) for q in range(1, 26) for p in range(0, q + 1)})
    rng = random.Random(100)
    pairs = [(x, y) for i, x in enumerate(small) for y in small[i + 1 :]]
    for _ in range(20000):
        qa, qb = rng.randint(1, 100), rng.randint(1, 100)
        x, y = Fraction(rng.randint(-300, 300), qa), Fraction(rng.randint(-300, 300), qb)
        if x != y:
            pairs.append((min(x, y), max(x, y)))
    for lo, hi in pairs:
        n_best += 1
        for lo_open in (False, True):
            got = best_rational(lo, hi, lo_open=lo_open)
            cands = _scan_best(lo, hi, lo_open)
            if got.denominator != cands[0].denominator or got not in cands:
                bad.append(("best_rational", lo, hi, lo_open))
            elif len(cands) > 1 and got != min(cands, key=lambda c: abs(c - lo)):
                bad.append(("tie", lo, hi, lo_open))
        if floor_agreement_length(lo, hi) != _scan_best(lo, hi, True)[0].denominator:
            bad.append(("floor agreement", lo, hi))
    el = time.perf_counter() - t0
    detail = f"{n_cfe} expansions (den<=500), {n_best} interval pairs (den<=100), {len(bad)} failures, {el:.1f}s"
    return not bad, detail + (f"; first {bad[0]}" if bad else "")


# 7. reverse problem ---------------------------------------------------------

REVERSE_SETS = [
    {7, 11, 59},
    {10, 17, 24},
    {5, 7, 9, 11},
    {4, 7},
    {9, 13, 17},
    {4, 11, 13},
    {3, 151},
    {10, 17, 24, 31},
    {5, 11},
    {109, 151, 503},
]


def criterion_7():
    t0 = time.perf_counter()
    bad, checked = [], 0
    for I in REVERSE_SETS:
        triples = list(solve_case1(I))
        for f in solve_case2(I, 1)[1]:
            triples += f.instances(25)
        for f in solve_case3(I, 1)[1]:
            triples += f.instances(25, start=f.bounds)
        for t in triples:
            checked += 1
            if set(quotient_ab(*t).irr()) != I:
                bad.append((sorted(I), t))
    # completeness of the d < a < b solutions
    by_irr: dict[tuple, list] = {}
    for a in range(2, 71):
        for b in range(a + 1, 71):
            if math.gcd(a, b) != 1:
                continue
            for d in range(1, a):
                if math.gcd(a, d) != 1 or math.gcd(b, d) != 1:
                    continue
                irr = (a, b) if d == 1 else tuple(irr_fast(QuotientSpec(a, b, d)).irr)
                by_irr.setdefault(irr, []).append((a, b, d))
    missing = 0
    for I, ts in by_irr.items():
        sol = set(solve_case1(I))
        missing += sum(1 for t in ts if t not in sol)
        missing += len(sol - set(ts))
    el = time.perf_counter() - t0
    ok = not bad and missing == 0
    detail = (
        f"{checked} family/case-1 triples verified ({len(bad)} bad); "
        f"{sum(len(v) for v in by_irr.values())} triples d<a<b<=70 in {len(by_irr)} sets, "
        f"{missing} completeness gaps, {el:.1f}s"
    )
    return ok, detail + (f"; first {bad[0]}" if bad else "")


# 8. arithmetic progressions -------------------------------------------------


def criterion_8():
    t0 = time.perf_counter()
    bad, n = [], 0
    for a in range(2, 13):
        for k in range(2, 13):
            if math.gcd(a, k) != 1:
                continue
            for r in range(1, a):
                gens, general, simple = arithmetic_identity(a, k, r)
                target = from_generators(gens)
                n += 1
                if quotient_ab(*general) != target:
                    bad.append(("general", a, k, r))
                if simple is not None and quotient_ab(*simple) != target:
                    bad.append(("simple", a, k, r))
    el = time.perf_counter() - t0
    return not bad, f"{n} (a,k,r) triples, {len(bad)} failures, {el:.2f}s"


# benchmark ------------------------------------------------------------------


def criterion_benchmark():
    spec = QuotientSpec(999983, 1999993, 757575)
    t0 = time.perf_counter()
    rep = fast_report(spec)
    el = time.perf_counter() - t0
    return el < 0.05, f"fast path {el * 1000:.2f} ms (m={rep.multiplicity} e={rep.e} f={rep.frobenius})"


CRITERIA = [
    ("1 worked examples", criterion_1),
    ("2 exhaustive oracle equivalence", criterion_2),
    ("3 numeration properties", criterion_3),
    ("4 minimal points", criterion_4),
    ("5 counting formula", criterion_5),
    ("6 continued fractions", criterion_6),
    ("7 reverse problem", criterion_7),
    ("8 arithmetic progressions", criterion_8),
    ("benchmark <50ms", criterion_benchmark),
]


def run_one(name, fn) -> bool:
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}"
    RESULTS.append(line)
    print(line, flush=True)
    return ok


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn):
    assert run_one(name, fn)


if __name__ == "__main__":
    results = [run_one(name, fn) for name, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
