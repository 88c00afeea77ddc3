"""Invariants of quotient numerical semigroups <a,b>/d and the reverse problem."""

from .errors import (
    DomainError,
    InternalInconsistency,
    LengthExceeded,
    MismatchError,
    NoChain,
    NotCoprime,
    NotModularConvex,
    QuotsemiError,
    RangeError,
)
from .invariants import fast_report, full_report, normalize
from .lattice import QuotientSpec
from .oracle import InvariantReport, from_generators, quotient, quotient_ab
from .reverse import arithmetic_identity, solve_case1, solve_case2, solve_case3

__all__ = [
    "DomainError",
    "InternalInconsistency",
    "InvariantReport",
    "LengthExceeded",
    "MismatchError",
    "NoChain",
    "NotCoprime",
    "NotModularConvex",
    "QuotientSpec",
    "QuotsemiError",
    "RangeError",
    "arithmetic_identity",
    "fast_report",
    "from_generators",
    "full_report",
    "normalize",
    "quotient",
    "quotient_ab",
    "solve_case1",
    "solve_case2",
    "solve_case3",
]
