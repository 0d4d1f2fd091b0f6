"""Claim-by-claim verification of singular-candidate bundles.

A bundle carries an exact element B of Z[z]/(Phi_p) proposed as a singular
candidate for the eigenvalue mu = u^s, together with optional exact
witnesses (eta, beta) for the real-product decomposition.  Verification
checks only necessary consequences: norm shape, semi-primarity, the
twisted local p-th power condition, the valuation dichotomy, and the
leading eigen-expansion.  A bundle that passes is "not refuted"; no
class-group membership is ever decided here.

Three failure modes are kept distinct:

  * theorem violation  -- a claim evaluates false; reported in the verdict.
  * witness invalid    -- an exact witness identity fails; raises
                          WitnessInvalidError.
  * precondition       -- malformed input or unusable truncation level;
                          raises BundleError / PreconditionError.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .context import PrimeContext, new_context
from .eigen import expansion_matches
from .padic import (
    CAP,
    is_locally_pth_power,
    is_primary,
    is_semi_primary,
    valuation,
)
from .ring import ExactElement, RingElement, from_integer, lam, norm_exact
from .units import eigen_project_unit_exact

__all__ = [
    "BundleError",
    "PreconditionError",
    "WitnessInvalidError",
    "ClaimResult",
    "VerdictReport",
    "CandidateBundle",
    "load_bundle",
    "bundle_to_json",
    "synthetic_unit_bundle",
    "check_ppower_congruence",
    "verify_negative_candidate",
    "verify_b_prime",
    "verify_positive_candidate",
]


class BundleError(ValueError):
    """Bundle cannot be parsed or violates a structural invariant."""


class PreconditionError(ValueError):
    """Inputs are well-formed but outside an operation's contract."""


class WitnessInvalidError(Exception):
    """An exact witness identity failed; the bundle is self-inconsistent."""


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    ref: str
    holds: bool | None  # None = skipped
    data: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "ref": self.ref,
            "holds": self.holds,
            "data": self.data,
        }


@dataclass(frozen=True)
class VerdictReport:
    overall: bool
    claims: tuple[ClaimResult, ...]

    def to_json_dict(self) -> dict:
        return {
            "overall": self.overall,
            "claims": [c.to_json_dict() for c in self.claims],
        }


def _verdict(claims: list[ClaimResult]) -> VerdictReport:
    executed = [c.holds for c in claims if c.holds is not None]
    return VerdictReport(overall=all(executed), claims=tuple(claims))


def _skip(claim_id: str, ref: str, reason: str) -> ClaimResult:
    return ClaimResult(claim_id, ref, None, {"skipped": reason})


def _val_json(v) -> int | str:
    return "cap" if v is CAP else int(v)


@dataclass(frozen=True)
class CandidateBundle:
    """One candidate: exact element, eigenvalue, parity, optional witnesses."""

    ctx: PrimeContext
    K: int
    parity: str
    mu: int
    B: ExactElement
    eta: ExactElement | None = None
    beta: ExactElement | None = None
    label: str = ""

    @property
    def index_s(self) -> int:
        return self.ctx.index_of(self.mu)


def _parse_coeffs(p: int, name: str, raw) -> ExactElement:
    if not isinstance(raw, list):
        raise BundleError(f"bundle field '{name}': expected a list of decimal strings")
    if len(raw) != p - 1:
        raise BundleError(
            f"bundle field '{name}': expected {p - 1} coefficients, got {len(raw)}"
        )
    vals = []
    for i, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise BundleError(
                f"bundle field '{name}': entry {i} must be an integer or "
                f"decimal string, got {type(v).__name__}"
            )
        try:
            vals.append(int(v))
        except ValueError:
            raise BundleError(
                f"bundle field '{name}': entry {i} is not a decimal integer: {v!r}"
            ) from None
    return ExactElement(p, vals)


def load_bundle(source) -> CandidateBundle:
    """Parse and structurally validate a bundle (dict, JSON text, or path)."""
    if isinstance(source, CandidateBundle):
        return source
    if isinstance(source, (str, Path)):
        text = None
        if isinstance(source, Path) or not source.lstrip().startswith("{"):
            path = Path(source)
            try:
                text = path.read_text()
            except OSError as e:
                raise BundleError(f"cannot read bundle file {path}: {e}") from None
        else:
            text = source
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise BundleError(f"bundle is not valid JSON: {e}") from None
    elif isinstance(source, dict):
        doc = source
    else:
        raise BundleError(f"cannot load a bundle from {type(source).__name__}")

    if not isinstance(doc, dict):
        raise BundleError("bundle JSON must be an object")
    for key in ("p", "K", "parity", "mu", "B"):
        if key not in doc:
            raise BundleError(f"bundle field '{key}': missing")

    p = doc["p"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise BundleError("bundle field 'p': must be an integer")
    try:
        ctx = new_context(p)
    except ValueError as e:
        raise BundleError(f"bundle field 'p': {e}") from None

    K = doc["K"]
    if not isinstance(K, int) or isinstance(K, bool) or K < 1:
        raise BundleError("bundle field 'K': must be an integer >= 1")

    parity = doc["parity"]
    if parity not in ("negative", "positive"):
        raise BundleError(
            f"bundle field 'parity': must be 'negative' or 'positive', got {parity!r}"
        )

    mu = doc["mu"]
    if not isinstance(mu, int) or isinstance(mu, bool) or not (0 <= mu < p):
        raise BundleError(f"bundle field 'mu': must be an integer in [0, {p})")
    if mu % p in (0, 1):
        raise BundleError(
            "bundle field 'mu': the trivial eigenvalue 1 (and 0) is excluded"
        )
    s = ctx.index_of(mu)
    if s == 1:
        raise BundleError(
            "bundle field 'mu': the eigenvalue u itself is excluded; no "
            "candidate survives the standard annihilator constraint at index 1"
        )
    if parity == "negative" and s % 2 == 0:
        raise BundleError(
            f"bundle field 'parity': negative parity needs an odd power of u, "
            f"but mu={mu} = u^{s}"
        )
    if parity == "positive" and s % 2 == 1:
        raise BundleError(
            f"bundle field 'parity': positive parity needs an even power of u, "
            f"but mu={mu} = u^{s}"
        )

    B = _parse_coeffs(p, "B", doc["B"])
    eta = beta = None
    if ("eta" in doc) != ("beta" in doc):
        raise BundleError("bundle fields 'eta'/'beta': must be supplied together")
    if "eta" in doc:
        eta = _parse_coeffs(p, "eta", doc["eta"])
        beta = _parse_coeffs(p, "beta", doc["beta"])
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise BundleError("bundle field 'label': must be a string")
    return CandidateBundle(
        ctx=ctx, K=K, parity=parity, mu=mu, B=B, eta=eta, beta=beta, label=label
    )


def bundle_to_json(bundle: CandidateBundle) -> dict:
    """JSON-ready dict using decimal strings for all coefficients."""
    doc = {
        "p": bundle.ctx.p,
        "K": bundle.K,
        "parity": bundle.parity,
        "mu": bundle.mu,
        "B": [str(c) for c in bundle.B.coeffs],
        "label": bundle.label,
    }
    if bundle.eta is not None:
        doc["eta"] = [str(c) for c in bundle.eta.coeffs]
        doc["beta"] = [str(c) for c in bundle.beta.coeffs]
    return doc


def synthetic_unit_bundle(
    ctx: PrimeContext,
    a: int,
    two_m: int,
    k: int = 1,
    c: int = 1,
    K: int = 2,
    label: str = "",
) -> CandidateBundle:
    """Positive-parity bundle built from a projected unit: B = eta^k * c^p.

    Multiplying by a rational p-th power preserves every verified claim, so
    these bundles exercise the full checker surface and must pass.
    """
    if k % ctx.p == 0 or c % ctx.p == 0:
        raise ValueError("k and c must be coprime to p")
    eta = eigen_project_unit_exact(ctx, a, two_m)
    B = (eta**k) * (c**ctx.p)
    return CandidateBundle(
        ctx=ctx,
        K=K,
        parity="positive",
        mu=ctx.upow[two_m],
        B=B,
        label=label or f"unit p={ctx.p} a={a} 2m={two_m} k={k} c={c}",
    )


def _integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def _random_unit(ctx: PrimeContext, K: int, rng: random.Random) -> RingElement:
    modulus = ctx.p**K
    while True:
        coeffs = [rng.randrange(modulus) for _ in range(ctx.p - 1)]
        if sum(coeffs) % ctx.p != 0:
            return RingElement(ctx, K, coeffs)


def check_ppower_congruence(
    ctx: PrimeContext, K: int = 2, trials: int = 1000, seed: int = 1
) -> VerdictReport:
    """Randomized check that congruent units get congruent p-th powers.

    Samples units x and perturbations y = x + lam*g, then requires
    v(x^p - y^p) >= p+1.  Fixed seed makes the run bit-reproducible.
    """
    p = ctx.p
    if K * (p - 1) < p + 1:
        raise PreconditionError(
            f"check needs depth {p + 1}; K={K} caps at {K * (p - 1)}"
        )
    rng = random.Random(seed)
    modulus = ctx.p**K
    failures = []
    for t in range(trials):
        x = _random_unit(ctx, K, rng)
        g = RingElement(ctx, K, [rng.randrange(modulus) for _ in range(p - 1)])
        y = x + lam(ctx, K) * g
        v = valuation(x**p - y**p)
        if not v >= p + 1:
            failures.append({"trial": t, "valuation": _val_json(v)})
    claim = ClaimResult(
        "pth-power-congruence",
        "v(x) = 0 and x = y mod lam imply v(x^p - y^p) >= p+1",
        holds=not failures,
        data={
            "p": p,
            "K": K,
            "trials": trials,
            "seed": seed,
            "failures": failures,
        },
    )
    return _verdict([claim])


def _semi_primary_claim(Bq: RingElement) -> ClaimResult:
    return ClaimResult(
        "semi-primary",
        "B is semi-primary in the truncated ring",
        holds=is_semi_primary(Bq),
        data={"valuation": _val_json(valuation(Bq))},
    )


def _norm_claim(bundle: CandidateBundle) -> ClaimResult:
    p = bundle.ctx.p
    N = norm_exact(bundle.B)
    ref = "abs(norm(B)) = p^t * n^p for integers t >= 0, n >= 1"
    if N == 0:
        return ClaimResult("norm-shape", ref, False, {"norm": "0"})
    t = 0
    rest = abs(N)
    while rest % p == 0:
        rest //= p
        t += 1
    root = _integer_root(rest, p)
    data = {
        "sign": 1 if N > 0 else -1,
        "p_exponent": t,
        "p_free_part_digits": len(str(rest)),
        "root": str(root) if root is not None else None,
    }
    return ClaimResult("norm-shape", ref, root is not None, data)


def _check_verify_preconditions(bundle: CandidateBundle, parity: str, op: str):
    if bundle.parity != parity:
        raise PreconditionError(
            f"{op}: bundle has parity {bundle.parity!r}, needs {parity!r}"
        )
    if bundle.K < 2:
        raise PreconditionError(
            f"{op}: verification needs K >= 2 (congruence depth p+1), got K={bundle.K}"
        )


def verify_negative_candidate(bundle: CandidateBundle) -> VerdictReport:
    """Necessary-condition checks for an odd-index candidate.

    Works on the conjugate ratio C = B / conj(B), whose expansion carries
    the odd eigencomponent directly.
    """
    _check_verify_preconditions(bundle, "negative", "verify_negative_candidate")
    ctx, K, p = bundle.ctx, bundle.K, bundle.ctx.p
    s = bundle.index_s
    mu = bundle.mu
    Bq = bundle.B.reduce(ctx, K)
    claims = [_semi_primary_claim(Bq), _norm_claim(bundle)]

    ref3 = "sigma(C) * C^(-mu) is a local p-th power to depth p+1, C = B/conj(B)"
    ref4 = "v(C - 1) = 2m+1 when C is not primary"
    ref5 = "C = 1 - delta*e_mu mod lam^(p-1), delta nonzero when C is not primary"
    if valuation(Bq) != 0:
        reason = "B is not a unit at the ramified prime; quotient checks undefined"
        claims += [
            _skip("twist-local-pth-power", ref3, reason),
            _skip("twist-valuation", ref4, reason),
            _skip("eigen-expansion", ref5, reason),
        ]
        return _verdict(claims)

    C = Bq * Bq.conjugate().invert()
    twisted = C.galois_apply(ctx.u) * (C**mu).invert()
    claims.append(
        ClaimResult(
            "twist-local-pth-power",
            ref3,
            holds=is_locally_pth_power(twisted, p + 1),
            data={},
        )
    )
    prim = is_primary(C)
    if prim:
        claims.append(_skip("twist-valuation", ref4, "C is primary"))
    else:
        v = valuation(C - from_integer(ctx, K, 1))
        claims.append(
            ClaimResult(
                "twist-valuation",
                ref4,
                holds=v == s,
                data={"expected": s, "measured": _val_json(v)},
            )
        )
    if s > (p - 1) // 2:
        matched, delta = expansion_matches(C, mu, p - 1)
        holds = matched and (prim or (delta is not None and delta % p != 0))
        claims.append(
            ClaimResult(
                "eigen-expansion",
                ref5,
                holds=holds,
                data={"matched": matched, "delta": delta, "primary": prim},
            )
        )
    else:
        claims.append(
            _skip("eigen-expansion", ref5, "index within the low range; expansion form not asserted")
        )
    return _verdict(claims)


def verify_b_prime(bundle: CandidateBundle) -> VerdictReport:
    """Witness-backed checks for the adjusted element B' = B^2 / eta.

    The witness identities are exact; their failure means the bundle is
    self-inconsistent (WitnessInvalidError), which is a different event
    from a theorem claim evaluating false.
    """
    _check_verify_preconditions(bundle, "negative", "verify_b_prime")
    if bundle.eta is None or bundle.beta is None:
        raise PreconditionError("verify_b_prime: bundle has no eta/beta witnesses")
    ctx, K, p = bundle.ctx, bundle.K, bundle.ctx.p
    s = bundle.index_s
    mu = bundle.mu

    lhs = bundle.B * bundle.B.conjugate()
    rhs = bundle.eta * bundle.beta**p
    if lhs != rhs:
        raise WitnessInvalidError(
            "witness identity B * conj(B) = eta * beta^p fails exactly"
        )
    if bundle.eta.conjugate() != bundle.eta:
        raise WitnessInvalidError("witness identity conj(eta) = eta fails exactly")
    claims = [
        ClaimResult(
            "witness-product",
            "B * conj(B) = eta * beta^p exactly",
            holds=True,
            data={},
        ),
        ClaimResult(
            "witness-real", "conj(eta) = eta exactly", holds=True, data={}
        ),
    ]

    ref3 = "sigma(B') * B'^(-mu) is a local p-th power to depth p+1, B' = B^2/eta"
    ref4 = "v(B'^(p-1) - 1) = 2m+1 when B' is not primary"
    Bq = bundle.B.reduce(ctx, K)
    etaq = bundle.eta.reduce(ctx, K)
    if valuation(Bq) != 0 or valuation(etaq) != 0:
        raise WitnessInvalidError(
            "adjusted element undefined: B or eta is not a unit at the ramified prime"
        )
    Bp = Bq * Bq * etaq.invert()
    twisted = Bp.galois_apply(ctx.u) * (Bp**mu).invert()
    claims.append(
        ClaimResult(
            "adjusted-local-pth-power",
            ref3,
            holds=is_locally_pth_power(twisted, p + 1),
            data={},
        )
    )
    prim = is_primary(Bp)
    if prim:
        claims.append(_skip("adjusted-valuation", ref4, "B' is primary"))
    else:
        v = valuation(Bp ** (p - 1) - from_integer(ctx, K, 1))
        claims.append(
            ClaimResult(
                "adjusted-valuation",
                ref4,
                holds=v == s,
                data={"expected": s, "measured": _val_json(v)},
            )
        )
    return _verdict(claims)


def verify_positive_candidate(bundle: CandidateBundle) -> VerdictReport:
    """Necessary-condition checks for an even-index candidate."""
    _check_verify_preconditions(bundle, "positive", "verify_positive_candidate")
    ctx, K, p = bundle.ctx, bundle.K, bundle.ctx.p
    s = bundle.index_s
    mu = bundle.mu
    Bq = bundle.B.reduce(ctx, K)
    claims = [_semi_primary_claim(Bq), _norm_claim(bundle)]

    ref3 = "sigma(B) * B^(-mu) is a local p-th power to depth p+1"
    ref4 = "v(B^(p-1) - 1) = 2m when B is not primary"
    ref5 = "B^(p-1) = 1 - delta*e_mu mod lam^(p-1), delta nonzero when B is not primary"
    if valuation(Bq) != 0:
        reason = "B is not a unit at the ramified prime; quotient checks undefined"
        claims += [
            _skip("twist-local-pth-power", ref3, reason),
            _skip("power-valuation", ref4, reason),
            _skip("eigen-expansion", ref5, reason),
        ]
        return _verdict(claims)

    twisted = Bq.galois_apply(ctx.u) * (Bq**mu).invert()
    claims.append(
        ClaimResult(
            "twist-local-pth-power",
            ref3,
            holds=is_locally_pth_power(twisted, p + 1),
            data={},
        )
    )
    prim = is_primary(Bq)
    power = Bq ** (p - 1)
    if prim:
        claims.append(_skip("power-valuation", ref4, "B is primary"))
    else:
        v = valuation(power - from_integer(ctx, K, 1))
        claims.append(
            ClaimResult(
                "power-valuation",
                ref4,
                holds=v == s,
                data={"expected": s, "measured": _val_json(v)},
            )
        )
    if s > (p - 1) // 2:
        matched, delta = expansion_matches(power, mu, p - 1)
        holds = matched and (prim or (delta is not None and delta % p != 0))
        claims.append(
            ClaimResult(
                "eigen-expansion",
                ref5,
                holds=holds,
                data={"matched": matched, "delta": delta, "primary": prim},
            )
        )
    else:
        claims.append(
            _skip("eigen-expansion", ref5, "index within the low range; expansion form not asserted")
        )
    return _verdict(claims)
