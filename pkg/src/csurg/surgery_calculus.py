"""Vanishing of contact invariants of surgeries along Legendrian knots.

psi_eval rewrites psi^-_n(EH(L)) with the gluing-map relations until it
reaches a cobordism map whose rank is known. decide_integer is the closed form
(SL) & (SC) & (TN); decide_rational extends it to rational coefficients through
Ding-Geiges presentations, stabilisation/surgery isotopies and cable surgeries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Optional

from .arith import INF, Rational, as_rational, format_rational, ncf_is_prefix
from .concordance import KnotInvariants, cable_invariants
from .ding_geiges import ALL_NEGATIVE, AllNegative, SignPlan, dg_expand
from .errors import DomainError, InternalAssertionError
from .legendrian import MINUS, PLUS, LegendrianClass, Slot, Stable, cable, eh_slot


class Value(enum.Enum):
    NONZERO = "nonzero"
    ZERO = "zero"
    UNKNOWN = "unknown"


class Variant(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"

    @classmethod
    def parse(cls, s) -> "Variant":
        if isinstance(s, Variant):
            return s
        if s in ("-", "minus", "Minus", MINUS):
            return cls.MINUS
        if s in ("+", "plus", "Plus", PLUS):
            return cls.PLUS
        raise DomainError(f"variant must be minus or plus, got {s!r}")

    @property
    def sign(self) -> str:
        return MINUS if self is Variant.MINUS else PLUS


class Rank(enum.Enum):
    INJECTIVE = "injective"
    ZERO = "zero"


class Existence(enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    value: Value
    trace: tuple = ()

    def __post_init__(self):
        if self.value is not Value.UNKNOWN and not self.trace:
            raise InternalAssertionError("a definite verdict needs a nonempty trace")

    def to_json(self) -> dict:
        return {"verdict": self.value.value, "trace": [{"rule": r, "cite": c} for r, c in self.trace]}


class _Trace:
    def __init__(self):
        self.steps: list[tuple[str, str]] = []

    def add(self, rule: str, cite: str) -> "_Trace":
        self.steps.append((rule, cite))
        return self

    def done(self, value: Value) -> Verdict:
        return Verdict(value, tuple(self.steps))


@dataclass(frozen=True)
class SurgerySpec:
    L: LegendrianClass
    coefficient: Rational
    sign_plan: SignPlan = ALL_NEGATIVE
    variant: Variant = Variant.MINUS

    def __post_init__(self):
        q = as_rational(self.coefficient)
        if q is not INF and q <= 0:
            raise DomainError("surgery coefficient must be positive or infinite")
        object.__setattr__(self, "coefficient", q)

    def to_json(self) -> dict:
        plan = "all-negative" if isinstance(self.sign_plan, AllNegative) else [list(r) for r in self.sign_plan.signs]
        return {
            "L": self.L.to_json(),
            "coefficient": format_rational(self.coefficient),
            "sign_plan": plan,
            "variant": self.variant.value,
        }


def cobordism_rank_rule(nu: int, f: int) -> Rank:
    """Map on HF-hat induced by the surgery cobordism at framing f: injective iff f >= 2 nu.

    f = 0 is allowed here (only the dimension formula needs f != 0).
    """
    return Rank.INJECTIVE if f >= 2 * nu else Rank.ZERO


def hf_hat_dim(nu: int, D: int, f: int) -> int:
    """dim HF-hat of f-surgery: |f| + 2 max(0, 2 nu - 1 - f) + D (tau >= 0 normalisation)."""
    if f == 0:
        raise DomainError("framing 0 is excluded")
    if D < 0:
        raise DomainError("D must be nonnegative")
    return abs(f) + 2 * max(0, 2 * nu - 1 - f) + D


def _check_concordance(tau: int, nu: int, epsilon: int) -> None:
    if not (tau <= nu <= tau + 1):
        raise DomainError(f"need tau <= nu <= tau + 1, got tau={tau}, nu={nu}")
    if epsilon not in (-1, 0, 1):
        raise DomainError(f"epsilon must be -1, 0 or 1, got {epsilon}")
    if epsilon == 0 and not (tau == nu == 0):
        raise DomainError("epsilon = 0 needs tau = nu = 0")
    if epsilon == 1 and nu != tau:
        raise DomainError("epsilon = 1 needs nu = tau")
    if epsilon == -1 and nu != tau + 1:
        raise DomainError("epsilon = -1 needs nu = tau + 1")


def psi_eval(slot: Slot, t: int, n: int, tau: int, nu: int, epsilon: int) -> Verdict:
    """Evaluate psi^-_n on the unstable slot of an EH class sitting in column t."""
    if t > 2 * tau - 1:
        raise DomainError(f"column t={t} must be at most 2 tau - 1 = {2 * tau - 1}")
    if n < 1:
        raise DomainError("surgery coefficient must be a positive integer")
    _check_concordance(tau, nu, epsilon)
    tr = _Trace()
    if isinstance(slot, Stable):
        tr.add("stable-kill", "psi^-_n vanishes on stable classes for every n >= 1")
        return tr.done(Value.ZERO)
    if not isinstance(slot, int) or slot < 1 or slot > 2 * tau - t:
        raise DomainError(f"slot {slot!r} is outside 1..{2 * tau - t}")
    if slot >= 2:
        tr.add("sigma-plus-rewrite", f"u_{slot} = sigma_+(u_{slot - 1}) from column {t + 1}")
        tr.add("opposite-stabilisation-kill", "psi^-_n o sigma_+ = 0")
        return tr.done(Value.ZERO)
    f = t + n
    if f < 2 * tau:
        tr.add("sigma-minus-rewrite", f"psi^-_{n} o sigma_-^{n - 1} = psi^-_1, moving u_1 to column {f - 1}")
        tr.add("trivial-filling-factorisation", f"psi_1 = F_(-W_{f}) o psi_inf")
        tr.add("cobordism-rank", f"F_(-W_{f}) is zero since {f} < 2 tau <= 2 nu = {2 * nu}")
        return tr.done(Value.ZERO)
    if f == 2 * tau:
        if n > 1:
            tr.add("sigma-minus-rewrite", f"psi^-_{n} o sigma_-^{n - 1} = psi^-_1, moving u_1 to column {f - 1}")
        tr.add("trivial-filling-factorisation", f"psi_1 = F_(-W_{f}) o psi_inf, psi_inf(u_1) != 0")
        rank = cobordism_rank_rule(nu, f)
        tr.add("cobordism-rank", f"F_(-W_{f}) is {rank.value} at f = 2 tau, nu = {nu}")
        return tr.done(Value.NONZERO if rank is Rank.INJECTIVE else Value.ZERO)
    base = 2 * tau - t
    if nu == tau:
        tr.add("threshold-case", f"psi^-_{base} is nonzero at column {t} (f = 2 tau, tau = nu)")
        tr.add("legendrian-surgery-monotonicity", f"nonvanishing at coefficient {base} propagates to {n} > {base}")
        return tr.done(Value.NONZERO)
    tr.add("threshold-case", f"psi^-_{base} vanishes at column {t} (tau != nu)")
    tr.add("cabling-rule", "(SL) and (SC) without (TN): the (2, 2n+1)-cable fails (SL), so c vanishes")
    return tr.done(Value.ZERO)


@dataclass(frozen=True)
class Conditions:
    sl: bool
    sc: bool
    tn: bool

    @property
    def all(self) -> bool:
        return self.sl and self.sc and self.tn

    def to_json(self) -> dict:
        return {"SL": self.sl, "SC": self.sc, "TN": self.tn}


def _check_bennequin(L: LegendrianClass) -> None:
    if not L.satisfies_bennequin():
        raise DomainError(
            f"tb={L.tb}, r={L.r} violates tb + |r| <= 2 tau - 1 = {2 * L.knot.tau - 1}: ambient structure is overtwisted"
        )


def integer_conditions(L: LegendrianClass, n: int, variant=Variant.MINUS) -> Conditions:
    variant = Variant.parse(variant)
    k = L.knot
    r = L.r if variant is Variant.MINUS else -L.r
    return Conditions(
        sl=L.tb - r == 2 * k.tau - 1,
        sc=n + L.tb >= 2 * k.tau,
        tn=k.tau == k.nu,
    )


def decide_integer(L: LegendrianClass, n: int, variant=Variant.MINUS) -> Verdict:
    """Contact n-surgery with all-`variant` stabilisations: nonzero iff (SL), (SC), (TN)."""
    variant = Variant.parse(variant)
    if n < 1:
        raise DomainError("integer surgery coefficient must be >= 1")
    _check_bennequin(L)
    k = L.knot
    cond = integer_conditions(L, n, variant)
    tr = _Trace()
    sl_form = "tb - r" if variant is Variant.MINUS else "tb + r"
    tr.add("SL", f"{sl_form} = 2 tau - 1: {cond.sl}")
    tr.add("SC", f"n + tb >= 2 tau: {cond.sc}")
    tr.add("TN", f"tau = nu: {cond.tn}")
    value = Value.NONZERO if cond.all else Value.ZERO
    check = psi_eval(eh_slot(L, variant.sign), L.tb, n, k.tau, k.nu, k.epsilon)
    if check.value is not value:
        raise InternalAssertionError(f"closed form {value.value} disagrees with slot calculus {check.value.value}")
    for step in check.trace:
        tr.add(*step)
    return tr.done(value)


def cable_surgery_nonzero(L: LegendrianClass, m: int, n: int) -> Verdict:
    return decide_integer(cable(L, m, n), n, Variant.MINUS)


def decide_rational(L: LegendrianClass, pq, sign_plan: SignPlan = ALL_NEGATIVE) -> Verdict:
    pq = as_rational(pq)
    tr = _Trace()
    if pq is INF:
        tr.add("trivial-filling", "contact inf-surgery gives back the standard structure")
        return tr.done(Value.NONZERO)
    if pq <= 0:
        raise DomainError("decide_rational needs a positive coefficient")
    _check_bennequin(L)
    d = dg_expand(pq, sign_plan)
    first = d.first_sign()
    if pq.denominator == 1:
        n = pq.numerator
        variant = Variant.PLUS if first == PLUS else Variant.MINUS
        tr.add("integer-coefficient", f"xi^{variant.sign}_{n} with first stabilisation {first or 'none'}")
        v = decide_integer(L, n, variant)
        for step in v.trace:
            tr.add(*step)
        return tr.done(v.value)

    n0 = floor(pq)
    if first == MINUS and n0 >= 1:
        v = decide_integer(L, n0, Variant.MINUS)
        if v.value is Value.NONZERO:
            tr.add("integer-below", f"c(xi^-_{n0}) != 0 and {n0} <= {format_rational(pq)}")
            tr.add("negative-first-monotonicity", "nonvanishing persists above n when the first stabilisation is negative")
            return tr.done(Value.NONZERO)

    frac = pq - n0
    if frac.numerator == 1 and d.all_negative():
        m = frac.denominator
        top = n0 * m + 1
        tr.add("cable-surgery-decomposition", f"xi^-_{top}(L_({m},{top})) = xi^-_{format_rational(pq)}(L) # eta_{m}")
        tr.add("lens-factor", f"c(eta_{m}) != 0, Legendrian surgery on the standard sphere")
        v = cable_surgery_nonzero(L, m, top)
        for step in v.trace:
            tr.add(*step)
        return tr.done(v.value)

    m = _bracket_index(pq, n0)
    lo = n0 + Fraction(1, m)
    base = dg_expand(lo)
    if base.k == d.k and ncf_is_prefix(base.chain, d.chain):
        prefix = d.signs[: len(base.chain)]
        if all(s == MINUS for row, a in zip(prefix, base.chain) for s in row[:a]):
            v = decide_rational(L, lo, ALL_NEGATIVE)
            if v.value is Value.NONZERO:
                tr.add("bracket-prefix", f"presentation of {format_rational(pq)} extends that of {format_rational(lo)}")
                tr.add("legendrian-surgery-extension", f"further Legendrian surgeries keep c(xi^-_{format_rational(lo)}) nonzero")
                for step in v.trace:
                    tr.add(*step)
                return tr.done(Value.NONZERO)

    if pq >= 1:
        minus = integer_conditions(L, 1, Variant.MINUS)
        plus = integer_conditions(L, 1, Variant.PLUS)
        if not minus.sl and not plus.sl:
            tr.add("SL-both-orientations", "tb - r != 2 tau - 1 and tb + r != 2 tau - 1")
            tr.add("representative-independence", "the verdict depends only on (K, tb, r); every sign choice vanishes")
            return tr.done(Value.ZERO)
    tr.add("one-sided", "no rule decides this sign plan")
    return tr.done(Value.UNKNOWN)


def _bracket_index(pq: Fraction, n: int) -> int:
    """Least m >= 1 with n + 1/m <= pq."""
    frac = pq - n
    m = -((-1 * frac.denominator) // frac.numerator)
    while n + Fraction(1, m) > pq:
        m += 1
    return m


def decide(spec: SurgerySpec) -> Verdict:
    q = spec.coefficient
    if q is not INF and q.denominator == 1 and isinstance(spec.sign_plan, AllNegative):
        return decide_integer(spec.L, q.numerator, spec.variant)
    return decide_rational(spec.L, q, spec.sign_plan)


@dataclass(frozen=True)
class CableReport:
    table: Conditions
    direct: Conditions
    branch: str

    @property
    def agrees(self) -> bool:
        if self.table.sl != self.direct.sl or self.table.tn != self.direct.tn:
            return False
        if self.direct.sl and self.table.sc != self.direct.sc:
            return False
        return self.table.all == self.direct.all

    def to_json(self) -> dict:
        return {"branch": self.branch, "table": self.table.to_json(), "direct": self.direct.to_json(), "agrees": self.agrees}


def cable_conditions(L: LegendrianClass, m: int, n: int, p: int) -> CableReport:
    """(SL)/(SC)/(TN) for the cable L_(m,n) at coefficient p: case table vs direct evaluation."""
    k = L.knot
    base = integer_conditions(L, p)
    sc = p >= 1 - m * L.r
    if k.epsilon != 0:
        table = Conditions(sl=base.sl and base.tn, sc=sc, tn=base.tn)
        branch = "epsilon-nonzero"
    else:
        table = Conditions(sl=base.sl and n >= 1 - m * L.tb, sc=sc, tn=n >= -1 - m * L.tb)
        branch = "epsilon-zero"
    direct = integer_conditions(cable(L, m, n), p)
    return CableReport(table, direct, branch)


def plamenevskaya_consistent(k: KnotInvariants, t: int, r: int, m: int, n: int) -> bool:
    """If t + r <= 2 tau - 1 then m^2 t + (m - 1) n + m r <= 2 tau' - 1 for the (m, m t + n)-cable."""
    if t + r > 2 * k.tau - 1:
        return True
    tau_c = cable_invariants(k, m, m * t + n)[0]
    return m * m * t + (m - 1) * n + m * r <= 2 * tau_c - 1


@dataclass(frozen=True)
class CableSurgeryDecomposition:
    surgered: SurgerySpec
    lens: Optional[dict]
    topological: str
    notes: tuple = field(default=())

    def to_json(self) -> dict:
        return {"surgered": self.surgered.to_json(), "lens": self.lens, "topological": self.topological}


def cable_surgery_decompose(L: LegendrianClass, m: int, n: int) -> CableSurgeryDecomposition:
    """Contact n-surgery on L_(m,n) as xi^-_(n/m)(L) # eta_m, for n = 1 mod m."""
    if m < 1 or n < 1:
        raise DomainError("need m >= 1 and n >= 1")
    if gcd(m, n) != 1 or n % m != 1 % m:
        raise DomainError(f"need gcd(m, n) = 1 and n = 1 mod m, got ({m}, {n})")
    coeff = Fraction(n, m)
    spec = SurgerySpec(L, coeff, ALL_NEGATIVE, Variant.MINUS)
    smooth = coeff + L.tb
    if m == 1:
        return CableSurgeryDecomposition(spec, None, f"S^3_{format_rational(smooth)}({L.knot.name})")
    lens = {
        "name": f"eta_{m}",
        "description": f"(-1)-surgery on the Legendrian unknot with (tb, r) = ({1 - m}, {2 - m})",
        "tb": 1 - m,
        "r": 2 - m,
        "nonzero": True,
    }
    topo = f"S^3_{format_rational(smooth)}({L.knot.name}) # L({m},{n})"
    return CableSurgeryDecomposition(spec, lens, topo)


def tight_exists(K: KnotInvariants, q) -> Existence:
    """Existence of a tight structure on S^3_q(K) from an (SL) representative."""
    q = as_rational(q)
    if q is INF:
        raise DomainError("q must be finite")
    if K.sl_max is None:
        return Existence.UNKNOWN
    if K.epsilon == 1 and K.sl_max == 2 * K.tau - 1 and q > 2 * K.tau - 1:
        return Existence.YES
    if K.epsilon == 0 and K.sl_max == -1 and q >= 0:
        return Existence.YES
    return Existence.UNKNOWN


def transverse_nonzero(K: KnotInvariants, sl: int, ambient_tight: bool = True) -> Value:
    if sl % 2 == 0:
        raise DomainError(f"self-linking number must be odd, got {sl}")
    if ambient_tight and sl == 2 * K.tau - 1 and K.tau == K.nu:
        return Value.NONZERO
    return Value.ZERO
