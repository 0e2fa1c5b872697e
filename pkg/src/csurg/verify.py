"""Sweeps used by `csurg verify`: slot calculus vs closed form, bordered vs closed form, model vs staircase."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bordered import closed_form_sigma, derive_sigma
from .concordance import KnotInvariants
from .floer_model import CfkData, build_surgery_model, staircase_oracle
from .legendrian import MINUS, LegendrianClass, eh_slot
from .surgery_calculus import Value, integer_conditions, psi_eval


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": [str(f) for f in self.failures[:20]]}


def grid_knots(tau_range=range(-3, 4)):
    """Synthetic records covering every consistent (tau, nu, epsilon)."""
    for tau in tau_range:
        combos = [(tau, 1), (tau + 1, -1)] if tau != 0 else [(0, 0), (0, 1), (1, -1)]
        for nu, eps in combos:
            yield KnotInvariants(f"grid(tau={tau},nu={nu},eps={eps})", tau, nu, eps)


def grid_classes(k: KnotInvariants, depth: int = 9):
    """Legendrian classes with tb in [2 tau - depth, 2 tau - 1] inside both Bennequin bounds."""
    for tb in range(2 * k.tau - depth, 2 * k.tau):
        for r in range(-depth - 1, depth + 2):
            if (tb + r) % 2 and tb + abs(r) <= 2 * k.tau - 1:
                yield LegendrianClass(k, tb, r)


def grid_equivalence(n_max: int = 12) -> SweepResult:
    res = SweepResult("slot calculus vs (SL)&(SC)&(TN)")
    for k in grid_knots():
        for L in grid_classes(k):
            for n in range(1, n_max + 1):
                res.cases += 1
                v = psi_eval(eh_slot(L, MINUS), L.tb, n, k.tau, k.nu, k.epsilon)
                closed = integer_conditions(L, n).all
                if (v.value is Value.NONZERO) != closed:
                    res.failures.append((k.name, L.tb, L.r, n))
    return res


def bordered_comparison(cfks: dict, lo: int = -10, extra: int = 5) -> SweepResult:
    res = SweepResult("bordered oracle vs closed-form sigma")
    for name, c in cfks.items():
        for n in range(lo, 2 * c.tau + extra + 1):
            res.cases += 1
            derived = derive_sigma(c, n)
            closed = closed_form_sigma(c, n)
            if any(not np.array_equal(a, b) for a, b in zip(derived, closed)):
                res.failures.append((name, n))
    return res


def staircase_comparison(cfks: dict, lo: int = -20) -> SweepResult:
    res = SweepResult("surgery model vs staircase oracle")
    for name, c in cfks.items():
        for m in range(lo, -(4 * c.genus + 2) + 1):
            res.cases += 1
            if staircase_oracle(c, m) != build_surgery_model(c, m).graded_dims():
                res.failures.append((name, m))
    return res


def run_all(cfks: dict[str, CfkData]) -> list[SweepResult]:
    return [grid_equivalence(), bordered_comparison(cfks), staircase_comparison(cfks)]
