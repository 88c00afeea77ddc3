"""Reverse problem: every (a,b,d) whose quotient <a,b>/d has a given minimal generating set.

A sequence n_0..n_r is modular-convex when n_{i-1} + n_{i+1} = d_i n_i with
integers d_i >= 2. Minimal generating sets of quotients are exactly the
modular-convex, N-independent sets, and the triples split into three shapes:
d < a < b (finitely many), a < d < b and a < b < d (infinite families).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from .errors import DomainError, NoChain, NotModularConvex
from .exactmath import ceil_chain_table, ceil_cfe

# the pruned search is cheap (an ordering is fixed by its first two terms),
# so it runs on sets far larger than the exhaustive-permutation range
MAX_PERMUTE = 400


def is_modular_convex(seq: Sequence[int]) -> Optional[list[int]]:
    """The coefficients d_i >= 2 with n_{i-1} + n_{i+1} = d_i n_i, or None."""
    seq = list(seq)
    if len(seq) < 2:
        raise DomainError("need at least two terms")
    ds = []
    for i in range(1, len(seq) - 1):
        s, n = seq[i - 1] + seq[i + 1], seq[i]
        if n == 0 or s % n or s // n < 2:
            return None
        ds.append(s // n)
    return ds


def _require_chain(seq: Sequence[int]) -> list[int]:
    ds = is_modular_convex(seq)
    if ds is None:
        raise NotModularConvex(f"{tuple(seq)} is not modular-convex")
    return ds


def complete_chain(u0, u1, w):
    """The unique modular-convex chain from u0, u1 ending at w = -p u0 + q u1.

    Works on integers (then u0, u1 coprime and p, q read off w) or on 2-vectors.
    Returns (chain, d_i) where d_i is the ceiling expansion of q/p.
    """
    if isinstance(u0, int):
        raise DomainError("integer endpoints do not determine p, q; pass vectors")
    u0, u1, w = tuple(u0), tuple(u1), tuple(w)
    det = u0[0] * u1[1] - u0[1] * u1[0]
    if det == 0:
        raise DomainError("u0, u1 are dependent")
    # w = -p u0 + q u1 by Cramer's rule
    mp = Fraction(w[0] * u1[1] - w[1] * u1[0], det)
    q = Fraction(u0[0] * w[1] - u0[1] * w[0], det)
    p = -mp
    if p.denominator != 1 or q.denominator != 1:
        raise NoChain(f"{w} is not an integer combination of {u0}, {u1}")
    p, q = int(p), int(q)
    if not 0 < p < q or math.gcd(p, q) != 1:
        raise NoChain(f"need 0 < p < q coprime, got p={p}, q={q}")
    ds = list(ceil_cfe(Fraction(q, p)).terms)
    chain = [u0, u1]
    for k in ds:
        chain.append(tuple(k * s - t for s, t in zip(chain[-1], chain[-2])))
    return chain, ds


def _coprime_chain(seq: Sequence[int]) -> list[int]:
    ds = _require_chain(seq)
    if math.gcd(seq[0], seq[1]) != 1:
        raise DomainError("need gcd(n_0, n_1) = 1")
    return ds


def n_independent(seq: Sequence[int]) -> bool:
    """No term lies in the monoid generated by the others (q_{r-1} test)."""
    seq = list(seq)
    ds = _coprime_chain(seq)
    _, Q = ceil_chain_table(ds)
    return Q[-1] < min(seq[0], seq[-1])


def irr_of_span(seq: Sequence[int]) -> list[int]:
    """Minimal generators of <n_0..n_r> for a modular-convex seq: a window n_sigma..n_s."""
    seq = list(seq)
    ds = _coprime_chain(seq)
    r = len(seq) - 1
    P, Q = ceil_chain_table(ds)
    # P[i+1] = p_i, Q[i+1] = q_i for i = -1..r-1
    p_last, q_last = P[r], Q[r]
    ys = [Q[i] for i in range(r + 1)] + [math.inf]  # y_i = q_{i-1}
    xs = [p_last * Q[i] - q_last * P[i] for i in range(r + 1)]
    n0, nr = seq[0], seq[-1]
    s = max(i for i in range(r + 1) if ys[i] < n0)
    xm = [math.inf] + xs  # xm[i+1] = x_i
    sigma = next(i for i in range(r + 1) if xs[i] < xs[s] + nr <= xm[i])
    return sorted(seq[sigma : s + 1])


def find_coprime_shift(a: int, b: int, c: int, start: int) -> int:
    """Least k >= start with gcd(a, k c - b) = 1."""
    if a == 0 or b == 0 or c == 0 or math.gcd(b, c) != 1:
        raise DomainError("need non-zero a, b, c with gcd(b, c) = 1")
    k = start
    while math.gcd(a, k * c - b) != 1:
        k += 1
    return k


def coprime_exclusions(a: int, b: int, c: int) -> list[tuple[int, int]]:
    """(p, r): gcd(a, k c - b) = 1 iff k != r mod p for every listed prime p."""
    from sympy import primefactors

    out = []
    for p in primefactors(abs(a)):
        if c % p:
            out.append((p, b * pow(c, -1, p) % p))
    return out


def valid_orderings(I, require_coprime_ends: bool = False) -> list[tuple[int, ...]]:
    """Modular-convex, N-independent orderings of I with gcd(n_0, n_1) = 1.

    Up to MAX_PERMUTE elements every ordering is searched, pruning on the
    convexity condition; larger sets only try increasing order and its reverse.
    """
    items = sorted(set(int(v) for v in I))
    if len(items) < 2 or items[0] < 2:
        raise DomainError("need at least two integers >= 2")
    if len(items) > MAX_PERMUTE:
        cands = [tuple(items), tuple(reversed(items))]
    else:
        cands = list(_convex_perms(items))
    out = []
    for seq in cands:
        if is_modular_convex(seq) is None or math.gcd(seq[0], seq[1]) != 1:
            continue
        if require_coprime_ends and math.gcd(seq[0], seq[-1]) != 1:
            continue
        if n_independent(seq):
            out.append(seq)
    return out


def _convex_perms(items: list[int]) -> Iterator[tuple[int, ...]]:
    n = len(items)
    for first, second in itertools.permutations(range(n), 2):
        yield from _extend([first, second], n, items)


def _extend(idx: list[int], n: int, items: list[int]):
    if len(idx) == n:
        yield tuple(items[i] for i in idx)
        return
    used = set(idx)
    prev, cur = items[idx[-2]], items[idx[-1]]
    for j in range(n):
        if j in used:
            continue
        s = prev + items[j]
        if s % cur == 0 and s // cur >= 2:
            yield from _extend(idx + [j], n, items)


def _lin(terms) -> str:
    """Render sum c*v, e.g. [(6, 'kj'), (-1, 'k')] -> '6kj-k'."""
    out = ""
    for c, v in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 and v else str(abs(c))
        out += sign + mag + v
    return out or "0"


@dataclass
class SolutionFamily:
    """A parametrized set of triples with a given minimal generating set.

    `make(*params)` returns the candidate (a, b, d); `check(a, b, d, *params)`
    is the exact sufficient condition. `bounds` are lower bounds on the
    parameters beyond which only `exclusions` (k != r mod p on the first
    parameter) or coprimality can fail.
    """

    kind: str
    order: tuple[int, ...]
    params: tuple[str, ...]
    bounds: tuple[int, ...]
    formula: str
    exclusions: list[tuple[int, int]] = field(default_factory=list)
    constraints: list[str] = field(default_factory=list)
    make: Callable = field(default=None, repr=False)
    check: Callable = field(default=None, repr=False)

    def instance(self, *params) -> Optional[tuple[int, int, int]]:
        a, b, d = self.make(*params)
        if self.check(a, b, d, *params):
            return (a, b, d)
        return None

    def instances(
        self, limit: int, start: Optional[Sequence[int]] = None, max_tries: int = 10**6
    ) -> list[tuple[int, int, int]]:
        """The first `limit` valid triples, by increasing parameter sum then lexicographically."""
        out = []
        for ps in itertools.islice(self._param_points(start), max_tries):
            t = self.instance(*ps)
            if t is not None:
                out.append(t)
                if len(out) >= limit:
                    break
        return out

    def _param_points(self, start):
        lo = tuple(start) if start is not None else tuple(2 for _ in self.params)
        if len(lo) == 1:
            k = lo[0]
            while True:
                yield (k,)
                k += 1
        total = sum(lo)
        while True:
            for k in range(lo[0], total - lo[1] + 1):
                yield (k, total - k)
            total += 1


def solve_case1(I) -> list[tuple[int, int, int]]:
    """All (a, b, d) with d < a < b and Irr(<a,b>/d) = I."""
    out = []
    for seq in valid_orderings(I, require_coprime_ends=True):
        a, b = seq[0], seq[-1]
        if a >= b:
            continue
        d = b * pow(seq[1], -1, a) % a if a > 1 else 0
        if d == 0:
            continue
        out.append((a, b, d))
    return sorted(out)


def _case2_family(seq: tuple[int, ...]) -> SolutionFamily:
    ds = is_modular_convex(seq)
    r = len(seq) - 1
    _, Q = ceil_chain_table(ds)
    q1, q2 = Q[r], Q[r - 1]  # q_{r-1}, q_{r-2}
    a, nr, nr1 = seq[0], seq[-1], seq[-2]

    def make(k):
        return a, k * nr - nr1, k * q1 - q2

    def check(a_, b_, d_, k):
        return k >= 2 and math.gcd(a_, b_) == 1 and a_ <= d_ < b_

    k0 = max(2, -((-(a + q2)) // q1))
    if nr > q1:
        k0 = max(k0, (nr1 - q2) // (nr - q1) + 1)
    return SolutionFamily(
        kind="case2",
        order=seq,
        params=("k",),
        bounds=(k0,),
        formula=f"<{a}, {_lin([(nr, 'k'), (-nr1, '')])}>/({_lin([(q1, 'k'), (-q2, '')])})",
        exclusions=coprime_exclusions(a, nr1, nr),
        constraints=[f"k >= {k0}", f"gcd({a}, {nr}k-{nr1}) = 1"],
        make=make,
        check=check,
    )


def solve_case2(I, limit: int = 10) -> tuple[list[tuple[int, int, int]], list[SolutionFamily]]:
    """Triples with a < d < b, one family per valid ordering (last coefficient d_r = k)."""
    fams = [_case2_family(seq) for seq in valid_orderings(I)]
    triples = []
    for f in fams:
        triples.extend(f.instances(limit))
    return triples, fams


def _case3_family(seq: tuple[int, ...]) -> SolutionFamily:
    ds = is_modular_convex(seq)
    r = len(seq) - 1
    P, Q = ceil_chain_table(ds)
    P1, P2, Q1, Q2 = P[r], P[r - 1], Q[r], Q[r - 1]  # P_{r-1}, P_{r-2}, Q_{r-1}, Q_{r-2}
    n0, n1, nr, nr1 = seq[0], seq[1], seq[-1], seq[-2]

    def parts(j, k):
        m = k * Q1 - Q2
        return j * n0 - n1, k * nr - nr1, j * m - (k * P1 - P2), m

    def make(j, k):
        a, b, d, _ = parts(j, k)
        return a, b, d

    def check(a, b, d, j, k):
        m = k * Q1 - Q2
        return (
            j >= 2 and k >= 2 and a > 0 and b > 0 and m > 0
            and math.gcd(a, b) == 1 and d > max(a, b) and m <= b
        )

    # k first: n_{r+1} > 0, m > n_0, n_{r+1} >= m; these are linear and increasing in k
    k0 = 2
    while not (k0 * nr - nr1 > 0 and k0 * Q1 - Q2 > n0 and k0 * nr - nr1 >= k0 * Q1 - Q2):
        k0 += 1
    # j: the k-slopes of d - b and d - a must be >= 0 and every condition must hold at k0
    j0 = 2
    while True:
        a, b, d, m = parts(j0, k0)
        slope_db = j0 * Q1 - P1 - nr
        slope_da = j0 * Q1 - P1
        if a > 0 and d > max(a, b) and m <= b and slope_db >= 0 and slope_da >= 0:
            break
        j0 += 1
    return SolutionFamily(
        kind="case3",
        order=seq,
        params=("j", "k"),
        bounds=(j0, k0),
        formula=(
            f"<{_lin([(n0, 'j'), (-n1, '')])}, {_lin([(nr, 'k'), (-nr1, '')])}>"
            f"/({_lin([(Q1, 'kj'), (-Q2, 'j'), (-P1, 'k'), (P2, '')])})"
        ),
        constraints=[f"j >= {j0}", f"k >= {k0}", f"gcd({n0}j-{n1}, {nr}k-{nr1}) = 1"],
        make=make,
        check=check,
    )


def _canonical_orderings(I) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for seq in valid_orderings(I):
        key = min(seq, tuple(reversed(seq)))
        if key in seen:
            continue
        seen.add(key)
        out.append(seq)
    return out


def solve_case3(I, limit: int = 10) -> tuple[list[tuple[int, int, int]], list[SolutionFamily]]:
    """Triples with max(a, b) < d, one family per valid ordering up to reversal.

    Triples are reported with a < b.
    """
    fams = [_case3_family(seq) for seq in _canonical_orderings(I)]
    triples = []
    for f in fams:
        triples.extend(tuple(sorted(t[:2])) + (t[2],) for t in f.instances(limit, start=f.bounds))
    return triples, fams


def arithmetic_identity(a: int, k: int, r: int):
    """<a + jk, 0 <= j <= r> as a quotient: (gens, (a, a^2 + (ar+1)k, ar+1), simple or None).

    The simple form (a, a + rk, r) is given when gcd(a, r) = 1.
    """
    if a < 2 or k < 2 or math.gcd(a, k) != 1 or not 1 <= r <= a - 1:
        raise DomainError(f"need gcd(a,k)=1, a,k >= 2, 1 <= r <= a-1; got {a},{k},{r}")
    gens = [a + j * k for j in range(r + 1)]
    d = a * r + 1
    general = (a, a * a + d * k, d)
    simple = (a, a + r * k, r) if math.gcd(a, r) == 1 else None
    return gens, general, simple
