"""Classical invariants of Legendrian knots: stabilisation, push-off, cabling, slots."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .concordance import KnotInvariants, cable_record
from .errors import DomainError

PLUS = "+"
MINUS = "-"


def check_sign(sign: str) -> str:
    if sign in ("+", 1, "plus", "Plus"):
        return PLUS
    if sign in ("-", -1, "minus", "Minus"):
        return MINUS
    raise DomainError(f"sign must be '+' or '-', got {sign!r}")


class Stable:
    """Marker for an EH class with no unstable component."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "STABLE"

    def __str__(self):
        return "stable"


STABLE = Stable()

Slot = Union[int, Stable]


@dataclass(frozen=True)
class LegendrianClass:
    knot: KnotInvariants
    tb: int
    r: int

    def __post_init__(self):
        if (self.tb + self.r) % 2 == 0:
            raise DomainError(f"tb + r must be odd, got tb={self.tb}, r={self.r}")
        if self.knot.tb_max is not None and self.tb > self.knot.tb_max:
            raise DomainError(f"tb={self.tb} exceeds tb_max={self.knot.tb_max} of {self.knot.name}")

    def to_json(self) -> dict:
        return {"knot": self.knot.name, "tb": self.tb, "r": self.r}

    def reversed(self) -> "LegendrianClass":
        """Orientation reversal flips the rotation number."""
        return LegendrianClass(self.knot, self.tb, -self.r)

    def satisfies_bennequin(self) -> bool:
        bound = 2 * self.knot.tau - 1
        return self.tb + self.r <= bound and self.tb - self.r <= bound


def stabilize(L: LegendrianClass, sign: str, k: int = 1) -> LegendrianClass:
    sign = check_sign(sign)
    if k < 0:
        raise DomainError("number of stabilisations must be nonnegative")
    dr = k if sign == PLUS else -k
    return LegendrianClass(L.knot, L.tb - k, L.r + dr)


def transverse_sl(L: LegendrianClass) -> int:
    return L.tb - L.r


def cable(L: LegendrianClass, m: int, n: int) -> LegendrianClass:
    """Legendrian (m, n)-cable: m push-offs joined with n twist insertions."""
    if m < 1:
        raise DomainError(f"cable needs m >= 1, got {m}")
    if n < 0:
        raise DomainError(f"cable needs n >= 0, got {n}")
    if gcd(m, n) != 1:
        raise DomainError(f"cable needs gcd(m, n) = 1, got ({m}, {n})")
    if m == 1:
        return L
    tb = m * m * L.tb + (m - 1) * n
    r = m * L.r
    knot = cable_record(L.knot, m, m * L.tb + n)
    return LegendrianClass(knot, tb, r)


def eh_slot(L: LegendrianClass, sign: str = MINUS) -> Slot:
    """Index of the unstable generator carrying EH(L), or STABLE.

    The index is fixed by: slot 1 exactly when tb - r = 2 tau - 1, negative
    stabilisation keeps the slot, positive stabilisation moves it up by one.
    The '+' version uses the reversed orientation.
    """
    sign = check_sign(sign)
    tau = L.knot.tau
    if L.tb >= 2 * tau:
        raise DomainError(f"tb={L.tb} is at or above 2 tau = {2 * tau}")
    r = L.r if sign == MINUS else -L.r
    ell = (2 * tau + 1 - L.tb + r) // 2
    if 1 <= ell <= 2 * tau - L.tb:
        return ell
    return STABLE
