"""Generator model for the knot Floer group of the dual knot in S^3_m(K).

All Alexander gradings are stored doubled so they stay integral.

The model is checked against a brute-force staircase complex: m' = -m stacked
copies of the CFK basis with a shifted grading, whose homology is computed
level by level over GF(2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import gf2
from .errors import DomainError, InternalAssertionError


@dataclass(frozen=True)
class CfkData:
    """Reduced CFK data: tau, genus and the arrows eta_{2i-1} -> eta_{2i} (doubled gradings)."""

    tau: int
    genus: int
    arrows: tuple = ()

    def __init__(self, tau: int, genus: int, arrows=()):
        object.__setattr__(self, "tau", int(tau))
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "arrows", tuple((int(a), int(b)) for a, b in arrows))

    def deltas(self) -> list[int]:
        return [abs(b - a) // 2 for a, b in self.arrows]

    def normalized_arrows(self) -> list[tuple[int, int]]:
        """Arrows oriented from the lower to the higher grading."""
        return [(min(a, b), max(a, b)) for a, b in self.arrows]

    def gradings(self) -> list[int]:
        out = [2 * self.tau]
        for a, b in self.arrows:
            out += [a, b]
        return out

    def to_json(self) -> dict:
        return {"tau": self.tau, "genus": self.genus, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, obj: dict) -> "CfkData":
        return cls(obj["tau"], obj["genus"], [tuple(a) for a in obj.get("arrows", [])])


def validate_cfk(c: CfkData) -> list[str]:
    out = []
    if c.genus < 0:
        out.append("genus-sign: genus must be nonnegative")
    grads = c.gradings()
    if any(g % 2 for g in grads):
        out.append("parity: doubled gradings must be even")
    if any(abs(g) > 2 * c.genus for g in grads):
        out.append("genus-range: some |grading| exceeds 2 g")
    if len(grads) % 2 == 0:
        out.append("odd-dimension: total dimension must be odd")
    if Counter(grads) != Counter(-g for g in grads):
        out.append("symmetry: grading multiset is not symmetric under negation")
    for i, (a, b) in enumerate(c.arrows, start=1):
        if abs(b - a) < 2:
            out.append(f"arrow-length: arrow {i} has length < 1")
    return out


def check_cfk(c: CfkData) -> None:
    problems = validate_cfk(c)
    if problems:
        raise DomainError("invalid CFK data: " + "; ".join(problems))


@dataclass(frozen=True, order=True)
class SPlus:
    i: int
    j: int

    def __str__(self):
        return f"d[{self.i},{self.j}]"


@dataclass(frozen=True, order=True)
class SMinus:
    i: int
    j: int

    def __str__(self):
        return f"d*[{self.i},{self.j}]"


@dataclass(frozen=True, order=True)
class Unstable:
    l: int

    def __str__(self):
        return f"u[{self.l}]"


Generator = Union[SPlus, SMinus, Unstable]


def stable_grading(top: int, j: int, m: int) -> int:
    """Doubled grading of d_{i,j} when eta_{2i} sits in doubled grading `top`."""
    return top - 2 * (j - 1) - (m + 1)


def unstable_grading(tau: int, l: int, m: int) -> int:
    """Doubled grading of u_l: a string symmetric about 0.

    Below the threshold 2 tau the string descends from its top element;
    above it the string ascends, so the stabilisation maps stay homogeneous.
    """
    n = abs(2 * tau - m)
    if m < 2 * tau:
        return (n - 1) - 2 * (l - 1)
    return -(n - 1) + 2 * (l - 1)


@dataclass(frozen=True)
class SurgeryModel:
    framing: int
    basis: tuple
    grading2: dict

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self) -> dict:
        return {g: k for k, g in enumerate(self.basis)}

    def graded_dims(self) -> Counter:
        return Counter(self.grading2[g] for g in self.basis)

    def stable_plus(self) -> list:
        return [g for g in self.basis if isinstance(g, SPlus)]

    def stable_minus(self) -> list:
        return [g for g in self.basis if isinstance(g, SMinus)]

    def unstable(self) -> list:
        return [g for g in self.basis if isinstance(g, Unstable)]

    def to_json(self) -> dict:
        return {
            "framing": self.framing,
            "dim": self.dim,
            "basis": [{"label": str(g), "g2": self.grading2[g]} for g in self.basis],
        }


def build_surgery_model(c: CfkData, m: int) -> SurgeryModel:
    if m == 0:
        raise DomainError("framing 0 is excluded (infinitely many Spin^c structures)")
    return sutured_model(c, m)


def sutured_model(c: CfkData, m: int) -> SurgeryModel:
    """Same labelled basis, read as the sutured group of the complement; any framing, 0 included."""
    check_cfk(c)
    basis = []
    grading = {}
    arrows = c.normalized_arrows()
    for i, (lo, hi) in enumerate(arrows, start=1):
        for j in range(1, (hi - lo) // 2 + 1):
            g = SPlus(i, j)
            basis.append(g)
            grading[g] = stable_grading(hi, j, m)
    for l in range(1, abs(2 * c.tau - m) + 1):
        g = Unstable(l)
        basis.append(g)
        grading[g] = unstable_grading(c.tau, l, m)
    for i, (lo, hi) in enumerate(arrows, start=1):
        for j in range(1, (hi - lo) // 2 + 1):
            g = SMinus(i, j)
            basis.append(g)
            grading[g] = -stable_grading(hi, j, m)
    return SurgeryModel(m, tuple(basis), grading)


def spinc_partition(model: SurgeryModel) -> list[list]:
    """Group generators whose (undoubled) gradings agree modulo |m|."""
    if model.framing == 0:
        raise DomainError("framing 0 is excluded")
    mod = 2 * abs(model.framing)
    classes: dict[int, list] = {}
    for g in model.basis:
        classes.setdefault(model.grading2[g] % mod, []).append(g)
    return [classes[k] for k in sorted(classes)]


@dataclass
class GradedComplexF2:
    """Generators with doubled gradings and a differential (columns = sources)."""

    labels: list
    grading2: list
    differential: np.ndarray

    def is_square_zero(self) -> bool:
        d = self.differential
        return not gf2.matmul(d, d).any()

    def is_homogeneous(self) -> bool:
        rows, cols = np.nonzero(self.differential)
        return all(self.grading2[r] == self.grading2[c] for r, c in zip(rows, cols))

    def homology_by_grading(self) -> Counter:
        out = Counter()
        for level in sorted(set(self.grading2), reverse=True):
            idx = [k for k, g in enumerate(self.grading2) if g == level]
            block = self.differential[np.ix_(idx, idx)]
            h = len(idx) - 2 * gf2.rank(block)
            if h:
                out[level] = h
        return out


def _staircase_generators(c: CfkData, m_prime: int):
    """Copies (i, eta-index, doubled A) of the CFK basis, plus shifted gradings."""
    m = -m_prime
    base = [(0, 2 * c.tau)]
    for j, (lo, hi) in enumerate(c.normalized_arrows(), start=1):
        base += [(2 * j - 1, lo), (2 * j, hi)]
    labels, grads = [], []
    for i in range(1, m_prime + 1):
        flip = 1 if 2 * i <= m_prime else -1
        for eta, a2 in base:
            labels.append((i, eta))
            grads.append(flip * a2 - 2 * (i - 1) - (m + 1))
    return labels, grads


def staircase_complex(c: CfkData, m: int) -> GradedComplexF2:
    check_cfk(c)
    if m >= 0 or m > -(4 * c.genus + 2):
        raise DomainError(f"staircase oracle needs m <= -(4g + 2) = {-(4 * c.genus + 2)}, got {m}")
    m_prime = -m
    g = c.genus
    labels, grads = _staircase_generators(c, m_prime)
    where = {lab: k for k, lab in enumerate(labels)}
    deltas = c.deltas()

    def zone(i: int) -> str:
        if 2 * i <= m_prime - 2 * g:
            return "small"
        if 2 * i >= m_prime + 2 * g + 2:
            return "large"
        return "middle"

    n = len(labels)
    d = gf2.zeros(n, n)
    levels: dict[int, list[int]] = {}
    for k, gr in enumerate(grads):
        levels.setdefault(gr, []).append(k)
    for level, idx in levels.items():
        if all(zone(labels[k][0]) != "middle" for k in idx):
            for k in idx:
                i, eta = labels[k]
                if eta == 0 or eta % 2 == 0:
                    continue
                delta = deltas[(eta + 1) // 2 - 1]
                step = delta if zone(i) == "small" else -delta
                target = where.get((i + step, eta + 1))
                if target is None:
                    continue
                if grads[target] != level:
                    raise InternalAssertionError(f"boundary arrow from copy {i} leaves its level")
                d[target, k] = 1
        else:
            order = sorted(idx, key=lambda k: labels[k])
            if len(order) % 2 == 0:
                raise InternalAssertionError(f"middle row at level {level} has even size {len(order)}")
            for a, b in zip(order[1::2], order[2::2]):
                d[b, a] = 1
    cx = GradedComplexF2(labels, grads, d)
    if not cx.is_square_zero():
        raise InternalAssertionError("staircase differential does not square to zero")
    if not cx.is_homogeneous():
        raise InternalAssertionError("staircase differential mixes levels")
    for level, idx in levels.items():
        if any(zone(labels[k][0]) == "middle" for k in idx):
            block = d[np.ix_(idx, idx)]
            if len(idx) - 2 * gf2.rank(block) != 1:
                raise InternalAssertionError(f"middle row at level {level} has homology != 1")
    return cx


def staircase_oracle(c: CfkData, m: int) -> Counter:
    """Graded homology dimensions of the staircase complex at framing m < 0."""
    return staircase_complex(c, m).homology_by_grading()
