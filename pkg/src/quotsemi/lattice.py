"""The plane picture of <a,b>/d.

L = {(x,y) : ax + by = 0 mod d} and psi(x,y) = (ax+by)/d. Members of the
quotient, its minimal generators and its pseudo-Frobenius numbers are images
of minimal / maximal lattice points in suitable rectangles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DomainError, NotCoprime, RangeError
from .exactmath import ceil_cfe
from .oracle import member_ab

MAX_CELLS = 10**7


class Pt(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class QuotientSpec:
    a: int
    b: int
    d: int

    def __post_init__(self):
        a, b, d = self.a, self.b, self.d
        if a < 1 or b < 1 or d < 1:
            raise DomainError(f"({a},{b},{d}) must be positive")
        if math.gcd(a, b) != 1 or math.gcd(a, d) != 1 or math.gcd(b, d) != 1:
            raise NotCoprime(f"({a},{b},{d}) is not pairwise coprime")

    @property
    def w(self) -> Pt:
        return Pt(self.b, -self.a)


def psi_map(spec: QuotientSpec, p) -> Fraction:
    return Fraction(spec.a * p[0] + spec.b * p[1], spec.d)


def psi_int(spec: QuotientSpec, p) -> int:
    v, r = divmod(spec.a * p[0] + spec.b * p[1], spec.d)
    if r:
        raise DomainError(f"{tuple(p)} is not a lattice point")
    return v


def in_lattice(spec: QuotientSpec, p) -> bool:
    return (spec.a * p[0] + spec.b * p[1]) % spec.d == 0


def points_in_rect(spec: QuotientSpec, x0: int, x1: int, y0: int, y1: int) -> list[Pt]:
    """All lattice points of [x0,x1] x [y0,y1] (one residue class per row)."""
    if x1 < x0 or y1 < y0:
        return []
    if (x1 - x0 + 1) * (y1 - y0 + 1) > MAX_CELLS:
        raise RangeError("rectangle exceeds the scan cap")
    a, b, d = spec.a, spec.b, spec.d
    ainv = pow(a, -1, d) if d > 1 else 0
    out = []
    for y in range(y0, y1 + 1):
        r = (-b * y * ainv) % d
        x = x0 + ((r - x0) % d)
        while x <= x1:
            out.append(Pt(x, y))
            x += d
    return out


def pareto_min_pts(pts) -> list[Pt]:
    best: dict[int, int] = {}
    for x, y in pts:
        if x not in best or y < best[x]:
            best[x] = y
    out = []
    low = None
    for x in sorted(best):
        y = best[x]
        if low is None or y < low:
            out.append(Pt(x, y))
            low = y
    return out


def pareto_max_pts(pts) -> list[Pt]:
    return [Pt(-x, -y) for x, y in pareto_min_pts((-x, -y) for x, y in pts)]


def min_points_rect_bf(
    spec: QuotientSpec,
    x_max: int,
    y_max: int,
    exclude_origin: bool = True,
    x_min: int = 0,
    y_min: int = 0,
) -> list[Pt]:
    if x_max < 0 or y_max < 0:
        raise DomainError("bounds must be >= 0")
    pts = points_in_rect(spec, x_min, x_max, y_min, y_max)
    if exclude_origin:
        pts = [p for p in pts if p != (0, 0)]
    return pareto_min_pts(pts)


def quadrant_min_bf(d: int, m: int) -> list[Pt]:
    """Brute-force minimal points of Span((d,0),(m,1)) in [0,d]^2 minus the origin."""
    if (d + 1) ** 2 > MAX_CELLS:
        raise RangeError("rectangle exceeds the scan cap")
    pts = [Pt(x, y) for y in range(d + 1) for x in range(d + 1) if (x - m * y) % d == 0]
    return pareto_min_pts(p for p in pts if p != (0, 0))


def modular_chain(u0, u1, ds) -> list[tuple]:
    """u_{i+1} = d_i u_i - u_{i-1} on tuples (or integers)."""
    if isinstance(u0, int):
        seq = [u0, u1]
        for k in ds:
            seq.append(k * seq[-1] - seq[-2])
        return seq
    seq = [tuple(u0), tuple(u1)]
    for k in ds:
        seq.append(tuple(k * s - t for s, t in zip(seq[-1], seq[-2])))
    return seq


def min_points_quadrant(d: int, m: int) -> list[Pt]:
    """Minimal points of Span((d,0),(m,1)) in N^2 minus the origin."""
    if not 0 < m < d or math.gcd(m, d) != 1:
        raise DomainError(f"need 0 < m < d and gcd(m,d)=1, got m={m}, d={d}")
    ds = ceil_cfe(Fraction(d, m)).terms
    return [Pt(*u) for u in modular_chain((d, 0), (m, 1), ds)]


def _require_nontrivial(spec: QuotientSpec):
    if member_ab(spec.d, spec.a, spec.b):
        raise DomainError(f"d={spec.d} lies in <{spec.a},{spec.b}>: the quotient is N")


def gaps_points(spec: QuotientSpec) -> list[Pt]:
    """L meets the triangle {x in [1,b-1], y in [-(a-1),-1], ax+by > 0}."""
    _require_nontrivial(spec)
    a, b = spec.a, spec.b
    pts = points_in_rect(spec, 1, b - 1, -(a - 1), -1)
    return sorted((p for p in pts if a * p.x + b * p.y > 0), key=lambda p: psi_map(spec, p))


def genus_by_rectangle(spec: QuotientSpec) -> int:
    _require_nontrivial(spec)
    n = len(points_in_rect(spec, 1, spec.b - 1, -(spec.a - 1), -1))
    if n % 2:
        raise AssertionError("odd lattice count in the gap rectangle")
    return n // 2


def x0_bf(spec: QuotientSpec) -> int:
    """min x over L meets [0,d-1] x [1,a-1]."""
    pts = points_in_rect(spec, 0, spec.d - 1, 1, spec.a - 1)
    return min(p.x for p in pts)


def irr_points(spec: QuotientSpec, x0: Optional[int] = None) -> list[Pt]:
    """Lattice representatives of the minimal generators, by rectangle scan."""
    _require_nontrivial(spec)
    a, b, d = spec.a, spec.b, spec.d
    if a > b:
        raise DomainError("orient a < b first")
    if d < a:
        pts = [Pt(d, 0), Pt(0, d)] + min_points_rect_bf(spec, d - 1, d - 1, x_min=1, y_min=1)
    elif d < b:
        pts = [Pt(d, 0)] + min_points_rect_bf(spec, d - 1, a - 1, x_min=1, y_min=1)
    else:
        if x0 is None:
            x0 = x0_bf(spec)
        x1 = min(d, x0 + b - 1)
        pts = min_points_rect_bf(spec, x1, a - 1, x_min=1, y_min=0)
    return sorted(pts, key=lambda p: psi_map(spec, p))


def pf_points(spec: QuotientSpec) -> list[Pt]:
    _require_nontrivial(spec)
    a, b, d = spec.a, spec.b, spec.d
    dl, dl2 = min(d, b - 1), min(d, a - 1)
    pts = points_in_rect(spec, b - dl, b - 1, -dl2, -1)
    return sorted(pareto_max_pts(pts), key=lambda p: psi_map(spec, p))


def chain_irr(spec: QuotientSpec) -> list[int]:
    """Minimal generators read off the modular-convex chain u_0=(d,0), u_1=(m,1).

    n_i = psi(u_i) with n_0 = a, n_r = b; the window kept depends on where d
    sits relative to a and b. The chain has one term per ceiling quotient of
    d/m, so this is linear in d in the worst case.
    """
    _require_nontrivial(spec)
    a, b, d = spec.a, spec.b, spec.d
    if a > b:
        raise DomainError("orient a < b first")
    if d == 1:
        return [1]
    m = (-b * pow(a, -1, d)) % d
    chain = min_points_quadrant(d, m)
    ns = [psi_int(spec, u) for u in chain]
    r = len(chain) - 1
    if d < a:
        return sorted(set(ns))
    ys = [u.y for u in chain] + [math.inf]
    s = max(i for i in range(r + 1) if ys[i] < a)
    if d < b:
        return sorted(ns[: s + 1])
    xs = [u.x for u in chain]
    xm = [math.inf] + xs  # xm[i+1] = x_i, xm[0] = x_{-1}
    sigma = next(i for i in range(r + 1) if xs[i] < xs[s] + b <= xm[i])
    return sorted(ns[sigma : s + 1])
