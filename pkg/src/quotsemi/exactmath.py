"""Exact rationals and the floor / ceiling continued fraction expansions.

Rationals are `fractions.Fraction`. A floor expansion is always stored in the
form ending with a 1, so an integer x becomes [x-1, 1]. A ceiling expansion
⌈d0, d1, ...⌉ = d0 - 1/⌈d1, ...⌉ has every d_i >= 2 for i >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from .errors import DomainError, LengthExceeded

Rat = Fraction


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rat(x)
    return Fraction(x)


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def fmt_rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class FloorCfe:
    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(v) for v in self.terms)
        object.__setattr__(self, "terms", t)
        if not t or t[-1] != 1 or any(v < 1 for v in t[1:]):
            raise DomainError(f"malformed floor expansion {list(t)}")

    @property
    def depth(self) -> int:
        """mu(x): number of partial quotients a_1..a_r strictly inside."""
        return len(self.terms) - 2

    @property
    def partial(self) -> tuple[int, ...]:
        """a_1..a_r (the terms between a_0 and the trailing 1)."""
        return self.terms[1:-1]

    def __str__(self):
        return "[" + ",".join(map(str, self.terms)) + "]"


@dataclass(frozen=True)
class CeilCfe:
    terms: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(v) for v in self.terms)
        object.__setattr__(self, "terms", t)
        if not t or any(v < 2 for v in t[1:]):
            raise DomainError(f"malformed ceiling expansion {list(t)}")

    @property
    def rho(self) -> int:
        return len(self.terms) - 1

    def __str__(self):
        return "⌈" + ",".join(map(str, self.terms)) + "⌉"

    def ascii(self) -> str:
        return "c[" + ",".join(map(str, self.terms)) + "]"


@dataclass(frozen=True)
class ConvergentTable:
    ps: tuple[int, ...]
    qs: tuple[int, ...]
    kind: Literal["floor", "ceiling"]

    def values(self) -> list[Fraction]:
        return [Fraction(p, q) for p, q in zip(self.ps, self.qs)]


def floor_cfe(x) -> FloorCfe:
    x = rat(x)
    n, d = x.numerator, x.denominator
    terms = []
    while True:
        q, r = divmod(n, d)
        terms.append(q)
        if r == 0:
            break
        n, d = d, r
    terms[-1] -= 1
    terms.append(1)
    return FloorCfe(tuple(terms))


def ceil_cfe(x, max_len: int = 10**6) -> CeilCfe:
    if max_len < 1:
        raise DomainError("max_len must be >= 1")
    x = rat(x)
    n, d = x.numerator, x.denominator
    terms = []
    while True:
        if len(terms) >= max_len:
            raise LengthExceeded(f"ceiling expansion of {fmt_rat(x)} exceeds {max_len} terms")
        c = ceil_div(n, d)
        terms.append(c)
        r = c * d - n
        if r == 0:
            break
        n, d = d, r
    return CeilCfe(tuple(terms))


def eval_floor(c: FloorCfe | Sequence[int]) -> Fraction:
    terms = c.terms if isinstance(c, FloorCfe) else tuple(c)
    val: Optional[Fraction] = None
    for t in reversed(terms):
        val = Fraction(t) if val is None else t + 1 / val
    return val


def eval_ceil(c: CeilCfe | Sequence[int]) -> Fraction:
    terms = c.terms if isinstance(c, CeilCfe) else tuple(c)
    val: Optional[Fraction] = None
    for t in reversed(terms):
        val = Fraction(t) if val is None else t - 1 / val
    return val


def convergent_table(c: FloorCfe | CeilCfe) -> ConvergentTable:
    """Convergents of either expansion, indexed from the first term.

    floor: p_i = a_i p_{i-1} + p_{i-2} with p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1.
    ceiling: p_i = d_i p_{i-1} - p_{i-2} with p_{-1}=1, p_{-2}=0, q_{-1}=0,
    q_{-2}=-1, so that p_i/q_i = ⌈d_0..d_i⌉.
    """
    if isinstance(c, FloorCfe):
        p2, p1, q2, q1, sign, kind = 0, 1, 1, 0, 1, "floor"
    else:
        p2, p1, q2, q1, sign, kind = 0, 1, -1, 0, -1, "ceiling"
    ps, qs = [], []
    for t in c.terms:
        p2, p1 = p1, t * p1 + sign * p2
        q2, q1 = q1, t * q1 + sign * q2
        ps.append(p1)
        qs.append(q1)
    return ConvergentTable(tuple(ps), tuple(qs), kind)


def ceil_chain_table(ds: Sequence[int]) -> tuple[list[int], list[int]]:
    """Ceiling convergents q_i/p_i = ⌈d_1..d_i⌉ in the chain convention.

    Returns lists P, Q indexed so that P[i+1] = p_i for i = -1..len(ds):
    p_{-1} = -1, p_0 = 0, q_{-1} = 0, q_0 = 1, x_i = d_i x_{i-1} - x_{i-2}.
    """
    P, Q = [-1, 0], [0, 1]
    for d in ds:
        P.append(d * P[-1] - P[-2])
        Q.append(d * Q[-1] - Q[-2])
    return P, Q


def floor_to_ceil(c: FloorCfe) -> CeilCfe:
    """Pattern substitution (a_{2i-1}, a_{2i}) -> (2,)*(a_{2i-1}-1), a_{2i}+2."""
    a0, a = c.terms[0], c.partial
    out = [a0 + 1]
    r = len(a)
    for i in range(0, r - 1, 2):
        out.extend([2] * (a[i] - 1))
        out.append(a[i + 1] + 2)
    if r % 2 == 1:
        out.extend([2] * (a[-1] - 1))
        out.append(2)
    return CeilCfe(tuple(out))


def ceil_to_floor(c: CeilCfe) -> FloorCfe:
    d = c.terms
    rho = len(d) - 1
    a0 = d[0] - 1
    if rho == 0:
        return FloorCfe((a0, 1))
    ks = [0] + [k for k in range(1, rho) if d[k] != 2] + [rho]
    a = []
    for i in range(1, len(ks)):
        a.append(ks[i] - ks[i - 1])
        a.append(d[ks[i]] - 2)
    if a[-1] == 0:
        a.pop()
    return FloorCfe((a0, *a, 1))


def rho_formula(c: FloorCfe) -> int:
    """Length rho of the ceiling expansion: sum of the odd-indexed a_i."""
    return sum(c.partial[0::2])


def semiconvergents(x) -> list[Fraction]:
    """(m p_k + p_{k-1}) / (m q_k + q_{k-1}) for 0 <= m <= a_{k+1}, sorted by denominator."""
    x = rat(x)
    terms = floor_cfe(x).terms
    out = set()
    p2, p1, q2, q1 = 0, 1, 1, 0
    for k, t in enumerate(terms):
        lo = 1 if k == 0 else 0
        for m in range(lo, t + 1):
            num, den = m * p1 + p2, m * q1 + q2
            if den > 0:
                out.add(Fraction(num, den))
        p2, p1 = p1, t * p1 + p2
        q2, q1 = q1, t * q1 + q2
    return sorted(out, key=lambda f: (f.denominator, f))


def best_approximations(x, side: Literal["left", "right"]) -> list[Fraction]:
    x = rat(x)
    sc = semiconvergents(x)
    return [f for f in sc if (f <= x if side == "left" else f >= x)]


def _best(lo: Fraction, hi: Optional[Fraction], lo_open: bool, hi_open: bool) -> Fraction:
    # lo < hi; hi None means +infinity
    n = math.floor(lo) + 1 if lo_open else math.ceil(lo)
    if hi is None or n < hi or (n == hi and not hi_open):
        return Fraction(n)
    f = math.floor(lo)
    lo_f, hi_f = lo - f, hi - f
    new_lo, new_hi = 1 / hi_f, (None if lo_f == 0 else 1 / lo_f)
    y = _best(new_lo, new_hi, hi_open, lo_open)
    return f + 1 / y


def best_rational(lo, hi, lo_open: bool = False, hi_open: bool = False) -> Fraction:
    """Rational of least denominator between lo and hi (closed unless flagged).

    Endpoint order does not matter. When the interval holds integers the one
    nearest lo is returned.
    """
    lo, hi = rat(lo), rat(hi)
    if lo == hi:
        if lo_open or hi_open:
            raise DomainError("empty interval")
        return lo
    if lo < hi:
        return _best(lo, hi, lo_open, hi_open)
    return -_best(-lo, -hi, lo_open, hi_open)


def floor_agreement_length(alpha, alpha2) -> int:
    """max{N : floor(n alpha) = floor(n alpha2) for all n < N} (alpha < alpha2)."""
    alpha, alpha2 = rat(alpha), rat(alpha2)
    n = 1
    while math.floor(n * alpha) == math.floor(n * alpha2):
        n += 1
    return n


def _pad(u: Sequence[int], v: Sequence[int]):
    n = max(len(u), len(v))
    return list(u) + [0] * (n - len(u)), list(v) + [0] * (n - len(v))


def alo_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    """Alternate lexicographic order on digit strings d_1, d_2, ...

    At the first differing 1-based position j the comparison is of
    (-1)^(j-1) d_j. Returns -1, 0 or 1.
    """
    u, v = _pad(u, v)
    for j, (x, y) in enumerate(zip(u, v), start=1):
        if x != y:
            s = 1 if j % 2 == 1 else -1
            return -1 if s * x < s * y else 1
    return 0


def rlo_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    """Reversed lexicographic order: compare at the last differing index."""
    u, v = _pad(u, v)
    for x, y in zip(reversed(u), reversed(v)):
        if x != y:
            return -1 if x < y else 1
    return 0


def F_map(x) -> Optional[Fraction]:
    """1/{x}, or None (infinity) for integers and infinity."""
    if x is None:
        return None
    x = rat(x)
    f = frac_part(x)
    return None if f == 0 else 1 / f


def C_map(x) -> Optional[Fraction]:
    """1/(1-{x}), or None (infinity) for integers and infinity."""
    if x is None:
        return None
    x = rat(x)
    f = frac_part(x)
    return None if f == 0 else 1 / (1 - f)


def iterate(fn, x, k: int):
    for _ in range(k):
        x = fn(x)
    return x


def fmt_digits(d: Iterable[int]) -> str:
    return "(" + ",".join(map(str, d)) + ")"
