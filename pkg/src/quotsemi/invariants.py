"""Closed-form invariants of <a,b>/d from continued fractions and alpha-numeration.

Every quantity is computed from the partial quotients of alpha = m/d, where
a m + b = 0 mod d, and from digit strings in the matching numeration. The oracle
module provides the brute-force counterparts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import DomainError, InternalInconsistency, MismatchError, NotCoprime
from .exactmath import best_rational, frac_part
from .lattice import QuotientSpec
from .oracle import InvariantReport, invariants as oracle_invariants, member_ab, quotient_ab
from .ostrowski import AlphaCtx, count_c, ctx_new, lam_inv, psi_inv, stripped_len

Mode = Literal["fast", "oracle", "both"]

CASE_TAGS = ("D_LT_A", "A_LT_D_LT_B", "D_GT_B_WIDE", "D_GT_B_MID", "D_GT_B_TIGHT")


@dataclass(frozen=True)
class NormalizedInput:
    spec: Optional[QuotientSpec]  # None when the quotient is N
    trace: tuple[str, ...]
    trivial: bool


def normalize(a: int, b: int, d: int) -> NormalizedInput:
    """Strip common factors of d with a or b and orient a < b.

    <d'a, b>/(d d') = <a, b>/d whenever gcd(d'a, b) = 1, so dividing a and d
    by gcd(a, d) (and likewise for b) leaves the quotient unchanged.
    """
    if a < 1 or b < 1 or d < 1:
        raise DomainError(f"({a},{b},{d}) must be positive")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) = {math.gcd(a, b)}")
    trace = []
    while True:
        g = math.gcd(a, d)
        if g > 1:
            trace.append(f"divide a and d by {g}")
            a, d = a // g, d // g
            continue
        g = math.gcd(b, d)
        if g > 1:
            trace.append(f"divide b and d by {g}")
            b, d = b // g, d // g
            continue
        break
    if a > b:
        trace.append("swap a and b")
        a, b = b, a
    if a == 1 or member_ab(d, a, b):
        trace.append(f"d={d} lies in <{a},{b}>: quotient is N")
        return NormalizedInput(None, tuple(trace), True)
    return NormalizedInput(QuotientSpec(a, b, d), tuple(trace), False)


def _require(spec: QuotientSpec):
    if spec.a > spec.b:
        raise DomainError("orient a < b first")
    if spec.d < 2:
        raise DomainError("d must be >= 2 on the fast path")
    if member_ab(spec.d, spec.a, spec.b):
        raise DomainError(f"d={spec.d} lies in <{spec.a},{spec.b}>")


@dataclass(frozen=True)
class QuotientCtx:
    spec: QuotientSpec
    m: int
    actx: AlphaCtx
    tau: int
    mu: tuple[int, ...]  # mu_{-1} .. mu_{r+1}

    def mu_(self, i: int) -> int:
        return self.mu[i + 1]


def quotient_ctx(spec: QuotientSpec) -> QuotientCtx:
    _require(spec)
    a, b, d = spec.a, spec.b, spec.d
    m = (-b * pow(a, -1, d)) % d
    actx = ctx_new(Fraction(m, d))
    tau = (a * m + b) // d
    mu = tuple(tau * actx.q(i) - a * actx.p(i) for i in range(-1, actx.r + 2))
    return QuotientCtx(spec, m, actx, tau, mu)


def multiplicity_fast(spec: QuotientSpec) -> int:
    """Denominator of the simplest rational in [y/a, x/b] where d = a x - b y."""
    _require(spec)
    a, b, d = spec.a, spec.b, spec.d
    x = d * pow(a, -1, b) % b
    y = (a * x - d) // b
    return best_rational(Fraction(y, a), Fraction(x, b)).denominator


@dataclass(frozen=True)
class IrrResult:
    irr: list[int]
    case_tag: str
    e_closed: int
    x0: Optional[int]


def _pair_family(qc: QuotientCtx, k: int, j_lo: int, j_hi: int) -> list[int]:
    return [qc.mu_(2 * k - 2) + j * qc.mu_(2 * k - 1) for j in range(j_lo, j_hi + 1)]


def irr_fast(spec: QuotientSpec) -> IrrResult:
    """Minimal generators from the alpha-numeration of a-1."""
    qc = quotient_ctx(spec)
    a, b, d = spec.a, spec.b, spec.d
    ctx = qc.actx
    r = ctx.r
    if d < a:
        out = [a, b, qc.tau]
        for k in range(1, r // 2 + 1):
            out += _pair_family(qc, k, 1, ctx.a_(2 * k))
        e_closed = 3 + sum(ctx.a_(2 * k) for k in range(1, r // 2 + 1))
        return IrrResult(sorted(out), "D_LT_A", e_closed, None)

    N = psi_inv(ctx, a - 1)
    s = stripped_len(N)
    Ns = N[s - 1]
    if s % 2 == 0:
        x0 = d * (ctx.delta(s - 2) - Ns * ctx.delta(s - 1))
        nu = Ns
    else:
        x0 = d * ctx.delta(s - 1)
        nu = 0
    if x0.denominator != 1:
        raise InternalInconsistency(f"x0 = {x0} is not an integer")
    x0 = int(x0)

    def body() -> list[int]:
        out = [qc.tau]
        for k in range(1, (s - 1) // 2 + 1):
            out += _pair_family(qc, k, 1, ctx.a_(2 * k))
        if s % 2 == 0:
            out += _pair_family(qc, s // 2, 1, Ns)
        return out

    base_e = sum(ctx.a_(2 * k) for k in range(1, (s - 1) // 2 + 1)) + nu
    if d < b or x0 + b > d:
        tag = "A_LT_D_LT_B" if d < b else "D_GT_B_WIDE"
        return IrrResult(sorted([a] + body()), tag, 2 + base_e, x0)
    if x0 + b > qc.m:
        return IrrResult(sorted(body()), "D_GT_B_MID", 1 + base_e, x0)

    beta = Fraction(x0 + b - 1, d)
    bd = lam_inv(ctx, beta)
    s2 = stripped_len(bd)
    odd = [i for i in range(1, (s2 - 1) // 2 + 1) if bd[2 * i] > 0]
    t = odd[0] if odd else s2 // 2

    def a_prime(k: int) -> int:
        return Ns if 2 * k == s else ctx.a_(2 * k)

    out = []
    for k in range(t, s // 2 + 1):
        c = bd[2 * k - 1] if k == t else 1
        out += _pair_family(qc, k, c, a_prime(k))
    e_closed = (
        1
        + ctx.a_(2 * t)
        - bd[2 * t - 1]
        + sum(ctx.a_(2 * k) for k in range(t + 1, (s - 1) // 2 + 1))
        + nu
    )
    return IrrResult(sorted(out), "D_GT_B_TIGHT", e_closed, x0)


@dataclass(frozen=True)
class ExtremalE:
    tag: str
    irr: list[int]


def extremal_e(spec: QuotientSpec) -> Optional[ExtremalE]:
    """Detect the extreme embedding dimensions and return the closed-form Irr."""
    qc = quotient_ctx(spec)
    a, b, d = spec.a, spec.b, spec.d
    alpha = Fraction(qc.m, d)
    tau = qc.tau
    if d < a:
        if (a + b) % d == 0:
            return ExtremalE("e=3", sorted([a, b, (a + b) // d]))
        if (b - a) % d == 0:
            return ExtremalE("e=d+1", [a + n * (b - a) // d for n in range(d + 1)])
        return None
    tag = irr_fast(spec).case_tag
    if a == 2:
        return None
    if tag in ("A_LT_D_LT_B", "D_GT_B_WIDE"):
        if alpha < Fraction(1, a - 1):
            return ExtremalE("e=2", sorted([a, tau]))
        if alpha > 1 - Fraction(1, a - 1):
            return ExtremalE("e=a", sorted(a + n * (tau - a) for n in range(a)))
        return None
    if tag == "D_GT_B_MID":
        if alpha > 1 - Fraction(1, a - 1):
            return ExtremalE("e=a-1", sorted(a + n * (tau - a) for n in range(1, a)))
        return None
    if a > 3:
        x0 = irr_fast(spec).x0
        beta = Fraction(x0 + b - 1, d)
        f2 = frac_part(2 * alpha)
        if f2 <= beta and alpha >= 1 - f2 / (a - 3):
            return ExtremalE("e=a-2", sorted(a + n * (tau - a) for n in range(2, a)))
    return None


def _prefix(qc: QuotientCtx, bd, upto: int) -> int:
    """sum_{i=1}^{upto} b_i mu_{i-1}."""
    return sum(bd[i - 1] * qc.mu_(i - 1) for i in range(1, upto + 1) if i <= len(bd))


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InternalInconsistency(f"expected an integer, got {x}")
    return int(x)


def pf_fast(spec: QuotientSpec, irr: Optional[list[int]] = None) -> list[int]:
    """Pseudo-Frobenius numbers by the easy reflections or the digit families."""
    _require(spec)
    a, b, d = spec.a, spec.b, spec.d
    f = a * b - a - b
    if f % d == 0:
        return [f // d]
    if a % d == 1 or b % d == 1:
        if irr is None:
            irr = irr_fast(spec).irr
        if a % d == 1:
            top, drop = (a - 1) * b // d, b
        else:
            top, drop = (b - 1) * a // d, a
        return sorted(top - x for x in irr if x != drop)
    qc = quotient_ctx(spec)
    ctx = qc.actx
    if d < a:
        beta = 1 - frac_part(Fraction(b - 1 + qc.m, d))
        bd = lam_inv(ctx, beta)
        r = ctx.r
        fd = Fraction(f, d)
        out = {
            _as_int(fd - a * (1 - beta)),
            _as_int(fd - Fraction(b, d) * sum(bd[i - 1] * ctx.q(i - 1) for i in range(1, r + 1))),
        }
        for k in range(1, r // 2 + 1):
            for j in range(bd[2 * k - 1]):
                out.add(_as_int(fd + a * beta - j * qc.mu_(2 * k - 1) - _prefix(qc, bd, 2 * k - 1)))
        return sorted(out)
    alpha = ctx.alpha
    beta = 1 - frac_part(Fraction(b, d))
    bd = lam_inv(ctx, beta)
    s = stripped_len(bd)
    B = [k for k in range(1, s // 2 + 1) if bd[2 * k - 1] != 0]
    k0 = B[0] if B else (s + 1) // 2
    base = a * (b // d)
    F2 = {
        base + a - j * qc.mu_(2 * k - 1) - _prefix(qc, bd, 2 * k - 1)
        for k in B
        for j in range(bd[2 * k - 1])
    }
    if d > b:
        return sorted(F2)
    F0 = {base - qc.tau} if alpha < beta else set()
    F1 = {
        base - qc.mu_(2 * k - 2) - j * qc.mu_(2 * k - 1)
        for k in range(1, k0)
        for j in range(1, ctx.a_(2 * k) + 1)
    }
    return sorted(F0 | F1 | F2)


def frobenius_case_formula(spec: QuotientSpec) -> int:
    """Frobenius number from the sign pattern of the mu_{2i-1}.

    Kept as an independent cross-check of max(PF); see frobenius_fast.
    """
    _require(spec)
    a, b, d = spec.a, spec.b, spec.d
    f = a * b - a - b
    if f % d == 0:
        return f // d
    qc = quotient_ctx(spec)
    ctx = qc.actx
    if d < a:
        beta = 1 - frac_part(Fraction(b - 1 + qc.m, d))
        bd = lam_inv(ctx, beta)
        half = ctx.r // 2
        lead = Fraction(f, d) + a * beta
    else:
        beta = 1 - frac_part(Fraction(b, d))
        bd = lam_inv(ctx, beta)
        half = stripped_len(bd) // 2
        lead = Fraction(a * (b // d) + a)
    Bk = [i for i in range(1, half + 1) if bd[2 * i - 1] != 0]
    a_minus = [i for i in Bk if qc.mu_(2 * i - 1) < 0]
    a_plus = [i for i in Bk if qc.mu_(2 * i - 1) > 0]
    cands = []
    if a_minus:
        k1 = max(a_minus)
        cands.append(-qc.mu_(2 * k1 - 1) + _prefix(qc, bd, 2 * k1))
    if a_plus:
        k2 = min(a_plus)
        cands.append(_prefix(qc, bd, 2 * k2 - 1))
    if d < a:
        # The two end points f_1, f_2 compete with the best member of each
        # sign class; taking only one of them by the sign pattern is not enough.
        f1 = lead - a
        f2 = Fraction(f, d) - Fraction(b, d) * sum(bd[i - 1] * ctx.q(i - 1) for i in range(1, ctx.r + 1))
        return _as_int(max([f1, f2] + [lead - c for c in cands]))
    base = a * (b // d)
    if d > b:
        return _as_int(lead - min(cands))
    s = stripped_len(bd)
    k0 = Bk[0] if Bk else (s + 1) // 2
    gammas = [i for i in range(1, (ctx.r + 1) // 2 + 1) if qc.mu_(2 * i - 1) > 0]
    gamma = gammas[0] if gammas else math.inf
    if gamma < k0:
        return base - qc.mu_(2 * gamma - 2)
    if gamma > k0:
        return _as_int(lead - min(cands))
    return base - min(qc.mu_(2 * k0 - 2), -a + _prefix(qc, bd, 2 * k0 - 1))


def frobenius_fast(spec: QuotientSpec, pf: Optional[list[int]] = None) -> int:
    """max(PF); the case formula is evaluated alongside and must agree."""
    if pf is None:
        pf = pf_fast(spec)
    f = max(pf)
    g = frobenius_case_formula(spec)
    if g != f:
        raise InternalInconsistency(f"Frobenius case formula gives {g}, max(PF) gives {f} for {spec}")
    return f


def genus_fast(spec: QuotientSpec) -> int:
    """g(<a,b>)/d plus half the deviation of a lattice count from its mean.

    Here alpha = m'/d with b = a m' mod d (the opposite sign of the m used
    elsewhere), beta = {(b-1)/d}, nu = (a-1) mod d.
    """
    _require(spec)
    a, b, d = spec.a, spec.b, spec.d
    g2 = Fraction((a - 1) * (b - 1), d)
    nu = (a - 1) % d
    bnum = (b - 1) % d
    if nu == 0 or bnum == 0:
        return _as_int(g2 / 2)
    mg = b * pow(a, -1, d) % d
    actx = ctx_new(Fraction(mg, d))
    beta = Fraction(bnum, d)
    c = count_c(actx, beta, nu)
    return _as_int((g2 + c - 1 - beta * nu) / 2)


def _sylvester(a: int, b: int) -> InvariantReport:
    f = a * b - a - b
    g = (a - 1) * (b - 1) // 2
    c = f + 1
    return InvariantReport(
        multiplicity=a,
        frobenius=f,
        conductor=c,
        genus=g,
        e=2,
        t=1,
        irr=(a, b),
        pf=(f,),
        symmetric=True,
        wilf_margin=Fraction(g, c) - Fraction(1, 2),
        method="fast",
        case_tag=None,
    )


def _natural(method: str) -> InvariantReport:
    return InvariantReport(1, -1, 0, 0, 1, 1, (1,), (-1,), True, Fraction(0), method, None)


def fast_report(spec: QuotientSpec) -> InvariantReport:
    a, b, d = spec.a, spec.b, spec.d
    if d == 1:
        return _sylvester(a, b)
    ir = irr_fast(spec)
    irr = ir.irr
    if len(irr) != ir.e_closed:
        raise InternalInconsistency(f"closed-form e={ir.e_closed} but |Irr|={len(irr)} for {spec}")
    pf = pf_fast(spec, irr)
    f = frobenius_fast(spec, pf)
    g = genus_fast(spec)
    m = multiplicity_fast(spec)
    if m != irr[0]:
        raise InternalInconsistency(f"multiplicity {m} != min Irr {irr[0]} for {spec}")
    c = f + 1
    e, t = len(irr), len(pf)
    return InvariantReport(
        multiplicity=m,
        frobenius=f,
        conductor=c,
        genus=g,
        e=e,
        t=t,
        irr=tuple(irr),
        pf=tuple(pf),
        symmetric=2 * g == c,
        wilf_margin=Fraction(g, c) - (1 - Fraction(1, e)),
        method="fast",
        case_tag=ir.case_tag,
    )


def diff_reports(fast: InvariantReport, orc: InvariantReport) -> dict:
    fa, oa = fast.core(), orc.core()
    return {k: (fa[k], oa[k]) for k in fa if fa[k] != oa[k]}


def full_report(a: int, b: int, d: int, mode: Mode = "fast") -> InvariantReport:
    if mode not in ("fast", "oracle", "both"):
        raise DomainError(f"unknown mode {mode!r}")
    norm = normalize(a, b, d)
    if norm.trivial:
        return _natural(mode)
    spec = norm.spec
    if mode == "oracle":
        return oracle_invariants(quotient_ab(spec.a, spec.b, spec.d))
    fast = fast_report(spec)
    if mode == "fast":
        return fast
    orc = oracle_invariants(quotient_ab(spec.a, spec.b, spec.d))
    diff = diff_reports(fast, orc)
    if diff:
        raise MismatchError(f"fast and oracle disagree for ({spec.a},{spec.b},{spec.d}): {diff}", diff)
    return InvariantReport(**{**fast.__dict__, "method": "both"})
