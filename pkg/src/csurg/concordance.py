"""Concordance invariants (tau, nu, epsilon, genera) and their consistency rules."""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd
from typing import Optional

from .errors import DomainError


@dataclass(frozen=True)
class KnotInvariants:
    name: str
    tau: int
    nu: int
    epsilon: int
    genus: Optional[int] = None
    slice_genus: Optional[int] = None
    tb_max: Optional[int] = None
    sl_max: Optional[int] = None
    hf_d: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "tau": self.tau,
            "nu": self.nu,
            "epsilon": self.epsilon,
            "genus": self.genus,
            "slice_genus": self.slice_genus,
            "tb_max": self.tb_max,
            "sl_max": self.sl_max,
            "hf_d": self.hf_d,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KnotInvariants":
        return cls(
            name=str(obj["name"]),
            tau=int(obj["tau"]),
            nu=int(obj["nu"]),
            epsilon=int(obj["epsilon"]),
            genus=obj.get("genus"),
            slice_genus=obj.get("slice_genus"),
            tb_max=obj.get("tb_max"),
            sl_max=obj.get("sl_max"),
            hf_d=obj.get("hf_d"),
        )


def nu_from_epsilon(tau: int, epsilon: int) -> int:
    """nu is tau unless epsilon = -1, in which case it is tau + 1."""
    if epsilon not in (-1, 0, 1):
        raise DomainError(f"epsilon must be -1, 0 or 1, got {epsilon}")
    if epsilon == 0 and tau != 0:
        raise DomainError("epsilon = 0 forces tau = 0")
    return tau + 1 if epsilon == -1 else tau


def validate(k: KnotInvariants) -> list[str]:
    """Return the list of broken constraints; empty means the record is consistent."""
    out = []
    if not (k.tau <= k.nu <= k.tau + 1):
        out.append(f"nu-range: need tau <= nu <= tau + 1, got tau={k.tau}, nu={k.nu}")
    if k.epsilon not in (-1, 0, 1):
        out.append(f"epsilon-range: epsilon={k.epsilon} not in {{-1, 0, 1}}")
    elif k.epsilon == 0:
        if k.tau != 0 or k.nu != 0:
            out.append("epsilon-zero: epsilon = 0 needs tau = nu = 0")
    elif k.epsilon == 1 and k.nu != k.tau:
        out.append("epsilon-plus: epsilon = 1 needs nu = tau")
    elif k.epsilon == -1 and k.nu != k.tau + 1:
        out.append("epsilon-minus: epsilon = -1 needs nu = tau + 1")
    for field in ("genus", "slice_genus", "hf_d"):
        v = getattr(k, field)
        if v is not None and v < 0:
            out.append(f"{field}-sign: {field} must be nonnegative")
    if k.slice_genus is not None and abs(k.tau) > k.slice_genus:
        out.append("slice-genus-bound: |tau| <= slice genus fails")
    if k.genus is not None and k.slice_genus is not None and k.slice_genus > k.genus:
        out.append("genus-order: slice genus exceeds genus")
    if k.genus is not None and k.slice_genus is None and abs(k.tau) > k.genus:
        out.append("genus-bound: |tau| <= genus fails")
    if k.sl_max is not None and k.sl_max > 2 * k.tau - 1:
        out.append("sl-bound: sl_max <= 2 tau - 1 fails")
    return out


def mirror(k: KnotInvariants) -> KnotInvariants:
    """Invariants of the mirror. Contact data does not survive mirroring and is dropped."""
    tau, eps = -k.tau, -k.epsilon
    name = k.name[2:-1] if k.name.startswith("m(") and k.name.endswith(")") else f"m({k.name})"
    return KnotInvariants(
        name=name,
        tau=tau,
        nu=nu_from_epsilon(tau, eps),
        epsilon=eps,
        genus=k.genus,
        slice_genus=k.slice_genus,
    )


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def cable_invariants(k: KnotInvariants, p: int, q: int) -> tuple[int, int, int]:
    """(tau, epsilon, nu) of the (p, q)-cable, following Hom's cabling formula."""
    if p < 1:
        raise DomainError(f"cabling needs p >= 1, got {p}")
    if gcd(p, q) != 1:
        raise DomainError(f"cabling needs gcd(p, q) = 1, got ({p}, {q})")
    if p == 1:
        # the (1, q)-cable is the companion itself
        return k.tau, k.epsilon, k.nu
    if k.epsilon != 0:
        tau = p * k.tau + (p - 1) * (q - k.epsilon) // 2
        eps = k.epsilon
    else:
        tau = (p - 1) * (q - _sgn(q)) // 2
        eps = 0 if abs(q) <= 1 else _sgn(q)
    return tau, eps, nu_from_epsilon(tau, eps)


def cable_record(k: KnotInvariants, p: int, q: int) -> KnotInvariants:
    """Package the cable invariants as a derived record (contact data unknown)."""
    if p == 1:
        return k
    tau, eps, nu = cable_invariants(k, p, q)
    return KnotInvariants(name=f"{k.name}_({p},{q})", tau=tau, nu=nu, epsilon=eps)


def with_name(k: KnotInvariants, name: str) -> KnotInvariants:
    return replace(k, name=name)
