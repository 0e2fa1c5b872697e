"""Exact rationals with an infinite slope, and negative continued fractions.

Everything here is integer arithmetic on top of :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union

import numpy as np

from .errors import DomainError


@total_ordering
class _Infinity:
    """The slope 1/0. Compares above every finite rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    num = 1
    den = 0

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("csurg-infinity")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Rational = Union[Fraction, _Infinity]


def is_infinite(r) -> bool:
    return r is INF


def as_rational(value) -> Rational:
    """Coerce ints, Fractions, "p/q" strings and INF to a Rational."""
    if value is INF:
        return INF
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise DomainError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    s = text.strip()
    if s.lower() in ("inf", "infinity", "1/0"):
        return INF
    try:
        if "/" in s:
            p, q = s.split("/")
            p, q = int(p), int(q)
            if q == 0:
                raise DomainError(f"zero denominator in {text!r}")
            return Fraction(p, q)
        return Fraction(int(s))
    except ValueError as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(r: Rational) -> str:
    if r is INF:
        return "inf"
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def ceil_fraction(r: Fraction) -> int:
    return -((-r.numerator) // r.denominator)


def ncf_expand(r) -> list[int]:
    """Negative continued fraction [a0, a1, ...] of r >= 2.

    a0 = ceil(r), then r <- 1/(a0 - r) until the remainder vanishes.
    """
    r = as_rational(r)
    if r is INF:
        raise DomainError("the infinite slope has no continued fraction expansion")
    if r < 2:
        raise DomainError(f"expansion needs r >= 2, got {format_rational(r)}")
    # work on (p, q) with r = p/q: a = ceil(p/q), next r = q/(a q - p).
    # a q - p lies in [0, q), so the denominator strictly drops and the
    # length is bounded by q; every later ceiling is >= 2
    p, q = r.numerator, r.denominator
    entries = []
    while True:
        a = -((-p) // q)
        entries.append(a)
        rest = a * q - p
        if rest == 0:
            return entries
        p, q = q, rest


def ncf_eval(entries: Sequence[int]) -> Fraction:
    """Evaluate a0 - 1/(a1 - 1/(...)) by a right fold."""
    if len(entries) == 0:
        raise DomainError("the empty expansion has no value")
    num, den = int(entries[-1]), 1
    for a in reversed(entries[:-1]):
        if num == 0:
            raise DomainError("expansion hits a zero denominator")
        num, den = a * num - den, num
    if den == 0:
        raise DomainError("expansion hits a zero denominator")
    return Fraction(num, den)


def ncf_is_prefix(a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = list(a), list(b)
    return len(a) <= len(b) and b[: len(a)] == a


def is_valid_ncf(entries: Sequence[int]) -> bool:
    return all(isinstance(e, int) and e >= 2 for e in entries)


def ncf_expand_batch(p, q):
    """Vectorised ncf_expand over arrays of reduced p/q >= 2.

    Returns (flat, offsets): the expansion of p[k]/q[k] is
    flat[offsets[k]:offsets[k + 1]].
    """
    p = np.asarray(p, dtype=np.int64)
    q = np.asarray(q, dtype=np.int64)
    if p.shape != q.shape or p.ndim != 1:
        raise DomainError("p and q must be 1-d arrays of equal length")
    if (q <= 0).any() or (p < 2 * q).any():
        raise DomainError("batch expansion needs q > 0 and p/q >= 2")
    steps = []
    lengths = np.zeros(p.size, dtype=np.int64)
    rows = np.arange(p.size)
    while rows.size:
        a = -((-p) // q)
        steps.append((rows, a))
        lengths[rows] += 1
        rest = a * q - p
        keep = rest != 0
        rows, p, q = rows[keep], q[keep], rest[keep]
    offsets = np.zeros(lengths.size + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    flat = np.empty(int(offsets[-1]), dtype=np.int64)
    for col, (rows, a) in enumerate(steps):
        flat[offsets[rows] + col] = a
    return flat, offsets


def ncf_eval_batch(flat, offsets):
    """Vectorised ncf_eval on (flat, offsets): returns (numerators, denominators)."""
    flat = np.asarray(flat, dtype=np.int64)
    offsets = np.asarray(offsets, dtype=np.int64)
    lengths = np.diff(offsets)
    if (lengths < 1).any():
        raise DomainError("the empty expansion has no value")
    # longest rows first, so the rows still folding at column c form a prefix
    order = np.argsort(-lengths, kind="stable")
    lens, starts = lengths[order], offsets[:-1][order]
    num = np.zeros(lens.size, dtype=np.int64)
    den = np.ones(lens.size, dtype=np.int64)
    for col in range(int(lens.max(initial=0)) - 1, -1, -1):
        live = int(np.searchsorted(-lens, -col, side="left"))
        a = flat[starts[:live] + col]
        first = lens[:live] == col + 1
        n, d = num[:live], den[:live]
        num[:live], den[:live] = np.where(first, a, a * n - d), np.where(first, 1, n)
    out_num = np.empty_like(num)
    out_den = np.empty_like(den)
    out_num[order], out_den[order] = num, den
    return out_num, out_den
