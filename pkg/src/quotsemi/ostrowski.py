"""alpha-numeration of integers and of fractional parts {n alpha} for rational alpha.

For alpha = [0, a_1, ..., a_r, 1] in [0,1) every n in [0, q_{r+1}) has a unique
admissible digit string (d_1..d_r) with
    n = sum d_j q_{j-1}
    {n alpha} = sum (-1)^(j-1) d_j delta_{j-1}
where delta_i = (-1)^i (q_i alpha - p_i). Digit strings are stored with fixed
length r (explicit zero tail).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, RangeError
from .exactmath import alo_cmp, floor_cfe, frac_part, rat, rlo_cmp

Digits = tuple[int, ...]


@dataclass(frozen=True)
class MinPoint:
    n: int
    frac: Fraction
    digits: Digits


@dataclass(frozen=True)
class AlphaCtx:
    alpha: Fraction
    a: tuple[int, ...]
    qs: tuple[int, ...]  # q_{-2} .. q_{r+1}
    ps: tuple[int, ...]  # p_{-2} .. p_{r+1}
    deltas: tuple[Fraction, ...]  # delta_{-2} .. delta_{r+1}
    qdeltas: tuple[int, ...] = ()  # den * delta_i, same indexing
    orbit: tuple[tuple[int, int], ...] = ()  # Gauss map iterates alpha_0..alpha_r as (num, den)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def den(self) -> int:
        return self.alpha.denominator

    def q(self, i: int) -> int:
        return self.qs[i + 2]

    def p(self, i: int) -> int:
        return self.ps[i + 2]

    def delta(self, i: int) -> Fraction:
        return self.deltas[i + 2]

    def a_(self, i: int) -> int:
        """a_i with 1-based index, 0 outside [1, r]."""
        return self.a[i - 1] if 1 <= i <= self.r else 0


def ctx_new(alpha) -> AlphaCtx:
    alpha = rat(alpha)
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0,1), got {alpha}")
    if alpha == 0:
        a: tuple[int, ...] = ()
        terms = [0]
    else:
        terms = list(floor_cfe(alpha).terms)
        a = tuple(terms[1:-1])
    qs, ps = [1, 0], [0, 1]
    for t in terms:
        qs.append(t * qs[-1] + qs[-2])
        ps.append(t * ps[-1] + ps[-2])
    if alpha == 0:
        # q_0 = 1 doubles as the denominator; no digits exist
        qs.append(qs[-1])
        ps.append(ps[-1])
    deltas = [(1 if i % 2 == 0 else -1) * (q * alpha - p) for i, (q, p) in enumerate(zip(qs, ps))]
    den = alpha.denominator
    qdeltas = tuple(int(dl * den) for dl in deltas)
    orbit = [(alpha.numerator, den)]
    for _ in range(len(a)):
        n, d = orbit[-1]
        orbit.append((d % n, n) if n else (0, 1))
    return AlphaCtx(alpha, a, tuple(qs), tuple(ps), tuple(deltas), qdeltas, tuple(orbit))


def _require_digits(ctx: AlphaCtx):
    if ctx.alpha == 0:
        raise DomainError("alpha = 0 has no digit space")


def pad(ctx: AlphaCtx, d: Sequence[int]) -> Digits:
    if len(d) > ctx.r:
        if any(d[ctx.r:]):
            raise DomainError(f"digit string {tuple(d)} longer than r={ctx.r}")
        d = d[: ctx.r]
    return tuple(d) + (0,) * (ctx.r - len(d))


def stripped_len(d: Sequence[int]) -> int:
    n = len(d)
    while n and d[n - 1] == 0:
        n -= 1
    return n


def is_admissible(ctx: AlphaCtx, d: Sequence[int]) -> bool:
    if len(d) > ctx.r and any(d[ctx.r:]):
        return False
    d = tuple(d[: ctx.r]) + (0,) * max(0, ctx.r - len(d))
    for j in range(1, ctx.r + 1):
        v = d[j - 1]
        if v < 0 or v > ctx.a_(j):
            return False
        if v == 0 and any(d[j:]):
            if j == 1 or d[j - 2] != ctx.a_(j - 1):
                return False
    return True


def enumerate_digits(ctx: AlphaCtx) -> list[Digits]:
    """All admissible strings of E_alpha (depth-first)."""
    if ctx.alpha == 0:
        return [()]
    out: list[Digits] = []
    r = ctx.r

    def rec(prefix: list[int]):
        j = len(prefix) + 1
        if j > r:
            out.append(tuple(prefix))
            return
        for v in range(0, ctx.a_(j) + 1):
            if v == 0 and not (j > 1 and prefix[-1] == ctx.a_(j - 1)):
                out.append(tuple(prefix) + (0,) * (r - len(prefix)))
                continue
            rec(prefix + [v])

    rec([])
    return out


def psi(ctx: AlphaCtx, d: Sequence[int]) -> int:
    return sum(v * ctx.q(j - 1) for j, v in enumerate(d, start=1))


def psi_inv(ctx: AlphaCtx, n: int) -> Digits:
    """Greedy descent from the most significant digit."""
    if not 0 <= n < ctx.den:
        raise RangeError(f"n={n} outside [0, {ctx.den - 1}]")
    d = [0] * ctx.r
    for k in range(ctx.r, 0, -1):
        dk = max(0, (n - ctx.q(k - 2)) // ctx.q(k - 1))
        d[k - 1] = dk
        n -= dk * ctx.q(k - 1)
    return tuple(d)


def floor_part(ctx: AlphaCtx, d: Sequence[int]) -> int:
    """floor(n alpha) = sum d_j p_{j-1}."""
    return sum(v * ctx.p(j - 1) for j, v in enumerate(d, start=1))


def lam(ctx: AlphaCtx, d: Sequence[int]) -> Fraction:
    """sum (-1)^(j-1) d_j delta_{j-1}, summed in units of 1/den."""
    qd = ctx.qdeltas
    total = sum(v * qd[j + 1] if j % 2 == 1 else -v * qd[j + 1] for j, v in enumerate(d, start=1))
    return Fraction(total, ctx.den)


def lam_inv(ctx: AlphaCtx, beta) -> Digits:
    """Digits of the n with {n alpha} = beta, computed from beta alone."""
    beta = rat(beta)
    if not 0 <= beta < 1 or (beta * ctx.den).denominator != 1:
        raise DomainError(f"beta={beta} is not a multiple of 1/{ctx.den} in [0,1)")
    # work in units of 1/den so every step is integer arithmetic
    bint = int(beta * ctx.den)
    d = []
    for k in range(1, ctx.r + 1):
        dl = ctx.qdeltas[k + 1]
        bk = max(0, min(ctx.a_(k), -(-bint // dl)))
        d.append(bk)
        bint = bk * dl - bint
    return tuple(d)


def _point(ctx: AlphaCtx, d: Sequence[int]) -> MinPoint:
    d = pad(ctx, d)
    n = psi(ctx, d)
    return MinPoint(n, frac_part(n * ctx.alpha), d)


def _staircase(ctx: AlphaCtx, k: int, j: int) -> Digits:
    """(1, a_2, 0, a_4, 0, ..., a_{2k-2}, 0, j)."""
    d = [1]
    for i in range(1, k):
        d += [ctx.a_(2 * i), 0]
    d.append(j)
    return tuple(d)


def _check_N(ctx: AlphaCtx, N: int):
    _require_digits(ctx)
    if not 1 <= N <= ctx.den - 1:
        raise RangeError(f"N={N} outside [1, {ctx.den - 1}]")


def _a_prime(ctx: AlphaCtx, Nd: Digits, s: int, i: int) -> int:
    return Nd[s - 1] if i == s else ctx.a_(i)


def min_points(ctx: AlphaCtx, N: int) -> list[MinPoint]:
    """Pareto-minimal points of ({n alpha}, n) for 1 <= n <= N."""
    _check_N(ctx, N)
    Nd = psi_inv(ctx, N)
    s = stripped_len(Nd)
    pts = [(1,)]
    for k in range(1, s // 2 + 1):
        for j in range(1, _a_prime(ctx, Nd, s, 2 * k) + 1):
            pts.append(_staircase(ctx, k, j))
    return sorted((_point(ctx, d) for d in pts), key=lambda p: p.n)


def min_points_capped(ctx: AlphaCtx, N: int, beta) -> list[MinPoint]:
    """Pareto-minimal points of ({n alpha}, n), 1 <= n <= N, {n alpha} <= beta."""
    _check_N(ctx, N)
    beta = rat(beta)
    if beta == 0:
        raise DomainError("beta must be nonzero")
    b = lam_inv(ctx, beta)
    if b[0] >= 2 or (len(b) < 2 or b[1] == 0):
        return min_points(ctx, N)
    Nd = psi_inv(ctx, N)
    s = stripped_len(Nd)
    s2 = stripped_len(b)
    odd = [i for i in range(1, (s2 - 1) // 2 + 1) if b[2 * i] > 0]
    t = odd[0] if odd else s2 // 2
    pts = []
    for k in range(t, s // 2 + 1):
        c = b[2 * t - 1] if k == t else 1
        for j in range(c, _a_prime(ctx, Nd, s, 2 * k) + 1):
            pts.append(_staircase(ctx, k, j))
    return sorted((_point(ctx, d) for d in pts), key=lambda p: p.n)


def min_points_shifted(ctx: AlphaCtx, beta, include_zero: bool = False) -> list[MinPoint]:
    """Pareto-minimal points of ({n alpha - beta}, n) for n in [1, q-1] or [0, q-1].

    The returned frac is {n alpha - beta}.
    """
    _require_digits(ctx)
    beta = rat(beta)
    if not 0 < beta < 1 or (beta * ctx.den).denominator != 1:
        raise DomainError(f"beta={beta} not on the grid of 1/{ctx.den}")
    b = lam_inv(ctx, beta)
    s = stripped_len(b)
    even = [i for i in range(1, s // 2 + 1) if b[2 * i - 1] != 0]
    t = even[0] if even else (s + 1) // 2
    pts: list[Digits] = []
    if not include_zero:
        pts.append((1,))
        for k in range(1, t):
            for j in range(1, ctx.a_(2 * k) + 1):
                pts.append(_staircase(ctx, k, j))
    for k in range(t, s // 2 + 1):
        for j in range(0, b[2 * k - 1]):
            pts.append(tuple(b[: 2 * k - 1]) + (j,))
    pts.append(b)
    out = {}
    for d in pts:
        p = _point(ctx, d)
        if include_zero and p.frac < beta:
            continue
        out[p.n] = MinPoint(p.n, frac_part(p.frac - beta), p.digits)
    if include_zero:
        out[0] = MinPoint(0, 1 - beta, pad(ctx, ()))
    return sorted(out.values(), key=lambda p: p.n)


def pareto_min(points) -> list[tuple]:
    """Brute-force minimal elements of a finite set of pairs (product order)."""
    pts = sorted(set(points))
    out = []
    best_y = None
    for x, y in pts:
        if best_y is None or y < best_y:
            out.append((x, y))
            best_y = y
    return out


def count_c_naive(alpha, beta, nu: int) -> int:
    """#{k in [0, nu] : {k alpha} <= beta}."""
    alpha, beta = rat(alpha), rat(beta)
    return sum(1 for k in range(nu + 1) if frac_part(k * alpha) <= beta)


def count_c(ctx: AlphaCtx, beta, nu: int) -> int:
    """The alternating digit-sum formula for #{k in [0, nu] : {k alpha} <= beta}.

    The "+1" correction in the nu_k recursion is triggered by the digits
    n_{k+1}, n_{k+2} of nu; reading it off n_k, n_{k+1} instead disagrees with
    the direct count (see count_c_as_printed).
    """
    return _count_c(ctx, beta, nu, shifted=True)


def count_c_as_printed(ctx: AlphaCtx, beta, nu: int) -> int:
    """Same formula with the nu_k correction read off n_k, n_{k+1}."""
    return _count_c(ctx, beta, nu, shifted=False)


def _count_c(ctx: AlphaCtx, beta, nu: int, shifted: bool) -> int:
    _require_digits(ctx)
    beta = rat(beta)
    q = ctx.den
    if not 0 < nu < q:
        raise RangeError(f"nu={nu} outside [1, {q - 1}]")
    if not 0 < beta < 1 or (beta * q).denominator != 1:
        raise RangeError(f"beta={beta} not in the open grid of 1/{q}")
    n = psi_inv(ctx, nu)
    b = lam_inv(ctx, beta)
    r = ctx.r
    s = min(stripped_len(n), stripped_len(b))

    nd = n + (0, 0, 0)
    off = 1 if shifted else 0
    nus = [nu]
    for k in range(1, r + 1):
        an, ad = ctx.orbit[k - 1]
        v = nus[-1] * an // ad
        if not (nd[k - 1 + off] != 0 or nd[k + off] == 0):
            v += 1
        nus.append(v)

    D = (1 if alo_cmp(n, b) <= 0 else 0) + (1 if rlo_cmp(b, n) <= 0 else 0) - (1 if n == b else 0)
    total = D
    for i in range(1, s + 1):
        ni, ni1 = nd[i - 1], nd[i]
        bi = b[i - 1]
        sn, sb = n[i:], b[i:]
        tau = 1 if (ni * ni1 == 0 and any(sn)) else min(bi, ni)
        eps2 = 1 if rlo_cmp(sb, sn) < 0 else 0
        eps = 1 if (bi < ni and alo_cmp(sb, sn) < 0) else 0
        sign = 1 if i % 2 == 1 else -1
        total += sign * (bi * nus[i] + tau + eps - eps2)
    return total
