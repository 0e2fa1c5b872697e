"""Command-line interface: `csurg <subcommand> ...`, human text by default, JSON with --json."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .arith import format_rational, parse_rational
from .bordered import closed_form_sigma, derive_sigma
from .catalog import load_catalog
from .ding_geiges import ALL_NEGATIVE, Explicit, dg_expand
from .errors import CatalogLookupError, DomainError, InternalAssertionError
from .floer_model import build_surgery_model, spinc_partition
from .legendrian import LegendrianClass, cable, eh_slot, transverse_sl
from .surgery_calculus import (
    Variant,
    cobordism_rank_rule,
    decide_integer,
    decide_rational,
    hf_hat_dim,
    tight_exists,
    transverse_nonzero,
)
from .verify import run_all

EXIT_DOMAIN, EXIT_LOOKUP, EXIT_INTERNAL = 2, 3, 4


def parse_plan(text):
    """'-,+-,' -> one row of signs per chain entry; None means all negative."""
    if text is None:
        return ALL_NEGATIVE
    rows = text.split(",") if text else []
    return Explicit([list(r) for r in rows])


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _legendrian(args, cat) -> LegendrianClass:
    return LegendrianClass(cat.knot(args.knot), args.tb, args.r)


def cmd_expand(args, cat) -> int:
    d = dg_expand(parse_rational(args.pq), parse_plan(args.signs))
    _emit(args, d.to_json(), f"pq={format_rational(d.coefficient)} k={d.k} chain={list(d.chain)}")
    return 0


def cmd_cable(args, cat) -> int:
    L = cable(_legendrian(args, cat), args.m, args.n)
    k = L.knot
    out = {"knot": k.name, "tb": L.tb, "r": L.r, "sl": transverse_sl(L), "tau": k.tau, "nu": k.nu, "epsilon": k.epsilon}
    _emit(args, out, " ".join(f"{a}={b}" for a, b in out.items()))
    return 0


def cmd_slot(args, cat) -> int:
    s = eh_slot(_legendrian(args, cat), Variant.parse(args.variant).sign)
    _emit(args, {"slot": s if isinstance(s, int) else "stable"}, f"slot={s}")
    return 0


def cmd_model(args, cat) -> int:
    model = build_surgery_model(cat.cfk_data(args.knot), args.framing)
    classes = spinc_partition(model)
    payload = model.to_json()
    payload["spinc_classes"] = [[str(g) for g in cls] for cls in classes]
    lines = [f"framing {model.framing}: {model.dim} generators"]
    lines += [f"  {g}  g2={model.grading2[g]}" for g in model.basis]
    lines.append(f"Spin^c class sizes: {[len(c) for c in classes]}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_sigma(args, cat) -> int:
    c = cat.cfk_data(args.knot)
    s_minus, s_plus = closed_form_sigma(c, args.framing)
    payload = {"framing": args.framing, "sigma_minus": s_minus.tolist(), "sigma_plus": s_plus.tolist()}
    lines = [f"sigma_- (framing {args.framing} -> {args.framing - 1}):", str(s_minus), "sigma_+:", str(s_plus)]
    status = 0
    if args.compare:
        derived = derive_sigma(c, args.framing)
        match = all(np.array_equal(a, b) for a, b in zip(derived, (s_minus, s_plus)))
        payload["compare"] = "MATCH" if match else "MISMATCH"
        lines.append(payload["compare"])
        status = 0 if match else EXIT_INTERNAL
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_decide(args, cat) -> int:
    L = _legendrian(args, cat)
    q = parse_rational(args.coefficient)
    if args.signs is None and getattr(q, "denominator", 0) == 1:
        v = decide_integer(L, q.numerator, Variant.parse(args.variant))
    else:
        v = decide_rational(L, q, parse_plan(args.signs))
    text = [v.value.value] + [f"  {r}: {c}" for r, c in v.trace]
    _emit(args, v.to_json(), "\n".join(text))
    return 0


def cmd_tight(args, cat) -> int:
    e = tight_exists(cat.knot(args.knot), parse_rational(args.q))
    _emit(args, {"tight": e.value}, e.value)
    return 0


def cmd_transverse(args, cat) -> int:
    v = transverse_nonzero(cat.knot(args.knot), args.sl, not args.overtwisted)
    _emit(args, {"verdict": v.value}, v.value)
    return 0


def cmd_dims(args, cat) -> int:
    d = hf_hat_dim(args.nu, args.D, args.f)
    rank = cobordism_rank_rule(args.nu, args.f)
    _emit(args, {"dim": d, "rank": rank.value}, f"dim={d} rank={rank.value}")
    return 0


def cmd_verify(args, cat) -> int:
    results = run_all(cat.cfk)
    failures = sum(len(r.failures) for r in results)
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.cases} cases, {len(r.failures)} failures" for r in results]
    lines.append(f"{failures} failures")
    _emit(args, {"grid": args.grid, "results": [r.to_json() for r in results], "failures": failures}, "\n".join(lines))
    return 0 if failures == 0 else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csurg", description=__doc__)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--catalog", help="catalog JSON path (default: $CSURG_CATALOG or bundled)")
    sub = p.add_subparsers(dest="command", required=True)

    def legendrian_args(sp):
        sp.add_argument("knot")
        sp.add_argument("tb", type=int)
        sp.add_argument("r", type=int)

    sp = sub.add_parser("expand", help="Ding-Geiges presentation of a contact p/q-surgery")
    sp.add_argument("pq")
    sp.add_argument("--signs", help="rows of +/- per chain entry, comma separated")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("cable", help="classical invariants of a Legendrian (m, n)-cable")
    legendrian_args(sp)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_cable)

    sp = sub.add_parser("slot", help="unstable slot of EH(L)")
    legendrian_args(sp)
    sp.add_argument("--variant", default="minus")
    sp.set_defaults(func=cmd_slot)

    sp = sub.add_parser("model", help="generator model at framing m")
    sp.add_argument("knot")
    sp.add_argument("framing", type=int)
    sp.set_defaults(func=cmd_model)

    sp = sub.add_parser("sigma", help="stabilisation maps from framing n to n - 1")
    sp.add_argument("knot")
    sp.add_argument("framing", type=int)
    sp.add_argument("--compare", action="store_true", help="check against the bordered oracle")
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("decide", help="vanishing of the contact invariant after surgery")
    legendrian_args(sp)
    sp.add_argument("coefficient")
    sp.add_argument("variant", nargs="?", default="minus")
    sp.add_argument("--signs", help="explicit sign plan, rows comma separated")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("tight", help="existence of tight structures on S^3_q(K)")
    sp.add_argument("knot")
    sp.add_argument("q")
    sp.set_defaults(func=cmd_tight)

    sp = sub.add_parser("transverse", help="nonvanishing of the transverse invariant")
    sp.add_argument("knot")
    sp.add_argument("sl", type=int)
    sp.add_argument("--overtwisted", action="store_true")
    sp.set_defaults(func=cmd_transverse)

    sp = sub.add_parser("dims", help="dim HF-hat of f-surgery and the cobordism rank rule")
    sp.add_argument("nu", type=int)
    sp.add_argument("D", type=int)
    sp.add_argument("f", type=int)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("verify", help="run the consistency sweeps")
    sp.add_argument("--grid", default="default")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cat = load_catalog(args.catalog)
        return args.func(args, cat)
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except CatalogLookupError as e:
        print(f"lookup error: {e.args[0] if e.args else e}", file=sys.stderr)
        return EXIT_LOOKUP
    except InternalAssertionError as e:
        print(f"internal assertion: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
