"""Brute-force numerical semigroups: explicit membership tables up to the conductor.

Everything here is read off the definitions and serves as ground truth for the
closed-form fast paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from .errors import DomainError, NotCoprime


@dataclass(frozen=True)
class InvariantReport:
    multiplicity: int
    frobenius: int
    conductor: int
    genus: int
    e: int
    t: int
    irr: tuple[int, ...]
    pf: tuple[int, ...]
    symmetric: bool
    wilf_margin: Fraction
    method: str = "oracle"
    case_tag: Optional[str] = None

    def core(self) -> dict:
        """The fields that must agree between the fast path and the oracle."""
        return {
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "e": self.e,
            "t": self.t,
            "irr": list(self.irr),
            "pf": list(self.pf),
            "symmetric": self.symmetric,
            "wilf_margin": self.wilf_margin,
        }


@dataclass(frozen=True)
class SemigroupOracle:
    """member[x] for 0 <= x < len(member); every x >= conductor is a member."""

    member: bytes
    conductor: int
    gens: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self.member[n])

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        for x in range(1, self.conductor + 1):
            if x in self:
                return x
        return 1

    def gaps(self) -> list[int]:
        return [x for x in range(self.conductor) if not self.member[x]]

    def small_members(self) -> list[int]:
        return [x for x in range(self.conductor) if self.member[x]]

    @property
    def genus(self) -> int:
        return len(self.gaps())

    def irr(self) -> list[int]:
        """Members that are not a sum of two positive members.

        Scans x in increasing order keeping the monoid generated by the
        generators found so far; a member that is not yet reachable is new.
        Minimal generators never exceed conductor + multiplicity.
        """
        m = self.multiplicity
        top = self.conductor + m
        reach = bytearray(top + 1)
        reach[0] = 1
        gens: list[int] = []
        for x in range(1, top + 1):
            if any(reach[x - g] for g in gens):
                reach[x] = 1
            elif x in self:
                gens.append(x)
                reach[x] = 1
        return gens

    def pf(self) -> list[int]:
        gens = self.irr()
        gaps = self.gaps()
        if not gaps:
            return [-1]
        return [g for g in gaps if all((g + s) in self for s in gens)]


def _sieve(gens: Sequence[int], stop_run: int) -> tuple[bytearray, int]:
    member = bytearray([1])
    run, x = 1 if stop_run <= 1 else 0, 0
    if stop_run <= 1:
        return member, 0
    while True:
        x += 1
        v = 1 if any(x >= g and member[x - g] for g in gens) else 0
        member.append(v)
        run = run + 1 if v else 0
        if run >= stop_run:
            return member, x - stop_run + 1


def from_generators(gens: Sequence[int]) -> SemigroupOracle:
    gens = sorted({int(g) for g in gens if g != 0})
    if not gens or any(g < 0 for g in gens):
        raise DomainError("generators must be positive integers")
    if reduce(math.gcd, gens) != 1:
        raise NotCoprime(f"gcd of generators {gens} is not 1")
    member, cond = _sieve(gens, gens[0])
    return SemigroupOracle(bytes(member[:cond]), cond, tuple(gens))


def _from_predicate(pred, bound: int) -> SemigroupOracle:
    """Table of pred on [0, bound]; bound must be at least the conductor."""
    member = bytearray(1 if pred(x) else 0 for x in range(bound + 1))
    cond = bound + 1
    while cond > 0 and member[cond - 1]:
        cond -= 1
    return SemigroupOracle(bytes(member[:cond]), cond)


def quotient(s: SemigroupOracle, d: int) -> SemigroupOracle:
    """S/d = {x : d x in S}."""
    if d < 1:
        raise DomainError("d must be >= 1")
    bound = s.conductor // d + 1
    return _from_predicate(lambda x: (d * x) in s, bound)


def member_ab(n: int, a: int, b: int) -> bool:
    """Membership in <a,b> via the floor criterion on any n = xa - yb."""
    if n < 0:
        return False
    if n == 0:
        return True
    if n % a == 0 and n // a < b:
        return True
    x = n * pow(a, -1, b)
    y = (x * a - n) // b
    return x // b != y // a


def quotient_ab(a: int, b: int, d: int) -> SemigroupOracle:
    """<a,b>/d with coprime a, b, built without a generator sieve."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) != 1")
    if d < 1:
        raise DomainError("d must be >= 1")
    f = a * b - a - b
    bound = max(f // d + 1, 1)
    return _from_predicate(lambda x: member_ab(d * x, a, b), bound)


def wilf_check(s: SemigroupOracle) -> tuple[bool, Fraction]:
    e = len(s.irr())
    c = s.conductor
    if c == 0:
        return True, Fraction(0) - (1 - Fraction(1, e))
    margin = Fraction(s.genus, c) - (1 - Fraction(1, e))
    return margin <= 0, margin


def invariants(s: SemigroupOracle) -> InvariantReport:
    irr = s.irr()
    pf = s.pf()
    g = s.genus
    c = s.conductor
    _, margin = wilf_check(s)
    return InvariantReport(
        multiplicity=s.multiplicity,
        frobenius=c - 1,
        conductor=c,
        genus=g,
        e=len(irr),
        t=len(pf),
        irr=tuple(irr),
        pf=tuple(pf),
        symmetric=2 * g == c,
        wilf_margin=margin,
        method="oracle",
    )
