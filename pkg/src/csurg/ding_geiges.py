"""Ding-Geiges presentations of positive rational contact surgeries.

A contact p/q-surgery on L becomes +1-surgeries on k push-offs of L followed by
Legendrian surgeries on a chain L_0, ..., L_l, where L_i carries chain[i]
stabilisations. The chain comes from the negative continued fraction of
1 + p/(kp - q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .arith import INF, Rational, as_rational, format_rational, ncf_eval, ncf_expand, ncf_is_prefix, parse_rational
from .errors import DomainError
from .legendrian import MINUS, PLUS, check_sign


class AllNegative:
    """Sign plan choosing every stabilisation negative."""

    def __repr__(self):
        return "AllNegative()"


ALL_NEGATIVE = AllNegative()


@dataclass(frozen=True)
class Explicit:
    signs: tuple

    def __init__(self, signs: Sequence[Sequence[str]]):
        object.__setattr__(self, "signs", tuple(tuple(check_sign(s) for s in row) for row in signs))


SignPlan = Union[AllNegative, Explicit]


@dataclass(frozen=True)
class DgPresentation:
    coefficient: Fraction
    k: int
    chain: tuple
    signs: tuple = field(default=())

    def ncf(self) -> list[int]:
        return [a + 2 for a in self.chain]

    def first_sign(self):
        """Sign of the first stabilisation (chain position 0, slot 0), or None."""
        for row in self.signs:
            if row:
                return row[0]
        return None

    def all_negative(self) -> bool:
        return all(s == MINUS for row in self.signs for s in row)

    def to_json(self) -> dict:
        return {
            "pq": format_rational(self.coefficient),
            "k": self.k,
            "chain": list(self.chain),
            "signs": [[1 if s == PLUS else -1 for s in row] for row in self.signs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DgPresentation":
        signs = tuple(tuple(PLUS if s in (1, "+") else MINUS for s in row) for row in obj["signs"])
        return cls(parse_rational(obj["pq"]), int(obj["k"]), tuple(obj["chain"]), signs)


def push_off_count(pq: Fraction) -> int:
    """Smallest k >= 1 with q - k p <= 0."""
    p, q = pq.numerator, pq.denominator
    return max(1, -((-q) // p))


def dg_expand(pq, sign_plan: SignPlan = ALL_NEGATIVE) -> DgPresentation:
    pq = as_rational(pq)
    if pq is INF:
        raise DomainError("the infinite slope has no Ding-Geiges presentation")
    if pq <= 0:
        raise DomainError(f"Ding-Geiges needs a positive coefficient, got {format_rational(pq)}")
    p, q = pq.numerator, pq.denominator
    k = push_off_count(pq)
    if k * p == q:
        chain: tuple = ()
    else:
        r = 1 + Fraction(p, k * p - q)
        chain = tuple(a - 2 for a in ncf_expand(r))
    if isinstance(sign_plan, AllNegative):
        signs = tuple(tuple(MINUS for _ in range(a)) for a in chain)
    elif isinstance(sign_plan, Explicit):
        signs = sign_plan.signs
        if len(signs) != len(chain) or any(len(row) != a for row, a in zip(signs, chain)):
            raise DomainError(f"sign plan shape {[len(r) for r in signs]} does not match chain {list(chain)}")
    else:
        raise DomainError(f"unknown sign plan {sign_plan!r}")
    return DgPresentation(pq, k, chain, signs)


def reconstruct(d: DgPresentation) -> Rational:
    """Value 1 + p/(kp - q) recovered from the chain (INF when the chain is empty)."""
    if not d.chain:
        return INF
    return ncf_eval(d.ncf())


def dg_total_stabilizations(d: DgPresentation) -> int:
    return sum(d.chain)


def bracket(n: int, m: int) -> tuple[Fraction, Rational]:
    """Half-open interval [n + 1/m, n + 1/(m-1)), with 1/0 read as infinity."""
    if m < 1 or n < 0:
        raise DomainError("bracket needs n >= 0 and m >= 1")
    lo = n + Fraction(1, m)
    hi = INF if m == 1 else n + Fraction(1, m - 1)
    return lo, hi


def dg_prefix_check(n: int, m: int, pq) -> bool:
    """Does the presentation of pq extend the one of n + 1/m?"""
    pq = as_rational(pq)
    lo, hi = bracket(n, m)
    if pq is INF or not (lo <= pq < hi):
        raise DomainError(f"{format_rational(pq)} is outside [{format_rational(lo)}, {format_rational(hi)})")
    base = dg_expand(lo)
    target = dg_expand(pq)
    return base.k == target.k and ncf_is_prefix(base.chain, target.chain)
