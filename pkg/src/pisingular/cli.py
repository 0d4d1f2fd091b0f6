"""Command-line front end.

Every subcommand takes --json for machine-readable output; with a fixed
seed the bytes on stdout are identical across runs.  Diagnostics go to
stderr.  Exit codes: 0 success, 1 a verified claim failed, 2 usage or
format error, 3 invalid witness data.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .context import is_prime, new_context
from .eigen import canonical_eigenvector
from .padic import digits
from .ring import RingElement
from .units import eigen_project_unit, verify_unit_relation
from .verifier import (
    BundleError,
    PreconditionError,
    VerdictReport,
    WitnessInvalidError,
    check_ppower_congruence,
    load_bundle,
    verify_b_prime,
    verify_negative_candidate,
    verify_positive_candidate,
)

_DEFAULT_K = 2


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _resolve_seed(arg_seed: int | None) -> int:
    if arg_seed is not None:
        return arg_seed
    env = os.environ.get("PI_SINGULAR_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(
                f"PI_SINGULAR_SEED must be an integer, got {env!r}"
            ) from None
    return 1


def _cmd_ctx(args) -> int:
    ctx = new_context(args.p, args.u)
    uindex = [None if i < 0 else i for i in ctx.uindex]
    payload = {
        "p": ctx.p,
        "u": ctx.u,
        "half": ctx.half,
        "upow": list(ctx.upow),
        "uindex": uindex,
        "irregular_pairs": ctx.irregular_pairs(),
    }
    lines = [
        f"p = {ctx.p}",
        f"u = {ctx.u}  (smallest primitive root)" if args.u is None else f"u = {ctx.u}",
        f"half = {ctx.half}",
        "upow:   " + " ".join(str(x) for x in ctx.upow),
        "uindex: " + " ".join("." if i < 0 else str(i) for i in ctx.uindex),
        "irregular pairs: "
        + (" ".join(str(m) for m in payload["irregular_pairs"]) or "(none)"),
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_irregular(args) -> int:
    pairs = []
    scanned = []
    for p in range(3, args.max + 1, 2):
        if not is_prime(p):
            continue
        scanned.append(p)
        ctx = new_context(p)
        for m in ctx.irregular_pairs():
            pairs.append([p, m])
    payload = {"max": args.max, "primes_scanned": scanned, "pairs": pairs}
    lines = [f"odd primes scanned up to {args.max}: {len(scanned)}"]
    if pairs:
        lines += [f"p={p} 2m={m}" for p, m in pairs]
    else:
        lines.append("no irregular pairs found")
    _emit(payload, args.json, lines)
    return 0


def _cmd_eigen(args) -> int:
    ctx = new_context(args.p)
    mus = list(range(2, ctx.p)) if args.all else [args.mu]
    reports = [canonical_eigenvector(ctx, mu) for mu in mus]
    ok = all(r.dimension == 1 and r.matches_closed_form for r in reports)
    payload = {"p": ctx.p, "u": ctx.u, "reports": [r.to_json_dict() for r in reports]}
    lines = []
    for r in reports:
        lines.append(
            f"mu={r.mu} (u^{r.index_s}): dim={r.dimension} "
            f"valuation={r.valuation} closed_form={'ok' if r.matches_closed_form else 'MISMATCH'}"
        )
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def _cmd_expand(args) -> int:
    ctx = new_context(args.p)
    parts = [s.strip() for s in args.coeffs.split(",")]
    if len(parts) != ctx.p - 1:
        raise PreconditionError(
            f"--coeffs needs {ctx.p - 1} comma-separated integers, got {len(parts)}"
        )
    try:
        vals = [int(s) for s in parts]
    except ValueError:
        raise PreconditionError(
            f"--coeffs entries must be decimal integers: {args.coeffs!r}"
        ) from None
    elem = RingElement(ctx, args.K, vals)
    N = args.precision if args.precision is not None else ctx.p + 1
    exp = digits(elem, N)
    payload = exp.to_json_dict()
    lines = [
        f"valuation: {payload['valuation']}",
        "digits: " + " ".join(str(d) for d in exp.digits),
        f"precision: {exp.precision}",
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_ppower(args) -> int:
    ctx = new_context(args.p)
    seed = _resolve_seed(args.seed)
    report = check_ppower_congruence(ctx, K=args.K, trials=args.trials, seed=seed)
    payload = report.to_json_dict()
    claim = report.claims[0]
    lines = [
        f"trials: {claim.data['trials']}  seed: {claim.data['seed']}",
        f"congruence claim: {'PASS' if report.overall else 'FAIL'}",
    ]
    if claim.data["failures"]:
        lines.append(f"failures: {claim.data['failures']}")
    _emit(payload, args.json, lines)
    return 0 if report.overall else 1


def _cmd_units(args) -> int:
    ctx = new_context(args.p)
    if args.all:
        two_ms = list(range(2, ctx.p - 2, 2))
    else:
        two_ms = [args.two_m]
    reports = []
    for two_m in two_ms:
        eta, vec = eigen_project_unit(ctx, args.K, args.a, two_m)
        rep = verify_unit_relation(eta, two_m)
        doc = rep.to_json_dict()
        doc["exponents"] = list(vec.exponents)
        reports.append((rep, doc))
    ok = all(r.relation_holds and r.dichotomy_holds for r, _ in reports)
    payload = {
        "p": ctx.p,
        "a": args.a,
        "K": args.K,
        "reports": [doc for _, doc in reports],
    }
    lines = []
    for r, doc in reports:
        lines.append(
            f"2m={r.two_m} mu={r.mu}: relation={'ok' if r.relation_holds else 'FAIL'} "
            f"local_pth_power={r.local_pth_power} "
            f"v(eta^(p-1)-1)={doc['valuation_of_eta_pm1']} "
            f"delta={r.expansion_delta} "
            f"dichotomy={'ok' if r.dichotomy_holds else 'FAIL'}"
        )
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    bundle = load_bundle(args.file)
    if bundle.parity == "negative":
        report = verify_negative_candidate(bundle)
        if bundle.eta is not None:
            extra = verify_b_prime(bundle)
            report = VerdictReport(
                overall=report.overall and extra.overall,
                claims=report.claims + extra.claims,
            )
    else:
        report = verify_positive_candidate(bundle)
    payload = report.to_json_dict()
    lines = [f"bundle: {bundle.label or args.file} (parity={bundle.parity}, mu={bundle.mu})"]
    for c in report.claims:
        if c.holds is None:
            lines.append(f"  {c.claim_id}: SKIP ({c.data.get('skipped', '')})")
        else:
            lines.append(f"  {c.claim_id}: {'PASS' if c.holds else 'FAIL'}")
    lines.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
    _emit(payload, args.json, lines)
    return 0 if report.overall else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisingular",
        description="pi-adic expansions, Galois eigenvectors, circular-unit "
        "projections, and candidate verification in prime cyclotomic rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON on stdout")

    sp = sub.add_parser("ctx", help="primitive-root tables and irregular pairs")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--u", type=int, default=None, help="primitive root (default: smallest)")
    add_json(sp)
    sp.set_defaults(func=_cmd_ctx)

    sp = sub.add_parser("irregular", help="scan primes for vanishing Bernoulli indices")
    sp.add_argument("--max", type=int, required=True)
    add_json(sp)
    sp.set_defaults(func=_cmd_irregular)

    sp = sub.add_parser("eigen", help="canonical sigma-eigenvectors over F_p")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--mu", type=int)
    group.add_argument("--all", action="store_true")
    add_json(sp)
    sp.set_defaults(func=_cmd_eigen)

    sp = sub.add_parser("expand", help="digit expansion along the uniformizer")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--coeffs", type=str, required=True, help='"c0,c1,...,c_(p-2)"')
    sp.add_argument("--K", type=int, default=_DEFAULT_K)
    sp.add_argument("--precision", type=int, default=None, help="digits to extract (default p+1)")
    add_json(sp)
    sp.set_defaults(func=_cmd_expand)

    sp = sub.add_parser("ppower", help="randomized p-th power congruence campaign")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--K", type=int, default=_DEFAULT_K)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=None, help="default: $PI_SINGULAR_SEED or 1")
    add_json(sp)
    sp.set_defaults(func=_cmd_ppower)

    sp = sub.add_parser("units", help="project circular units and verify the twisted relation")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=int, default=2)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--two-m", dest="two_m", type=int)
    group.add_argument("--all", action="store_true")
    sp.add_argument("--K", type=int, default=_DEFAULT_K)
    add_json(sp)
    sp.set_defaults(func=_cmd_units)

    sp = sub.add_parser("verify", help="run all claims against a candidate bundle")
    sp.add_argument("--file", type=str, required=True, help="bundle JSON file")
    add_json(sp)
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WitnessInvalidError as e:
        print(f"witness invalid: {e}", file=sys.stderr)
        return 3
    except (BundleError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
