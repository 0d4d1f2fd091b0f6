"""Circular units, their eigen-projections, and the twisted power relation.

The unit attached to an index a (2 <= a <= (p-1)/2) is

    xi_a = z^((1-a)/2) * (z^a - 1)/(z - 1)
         = z^((1-a)/2) * (1 + z + ... + z^(a-1)),

a real unit of the cyclotomic integers.  Raising its Galois orbit to the
exponent pattern c_j = u^(-2m*j) mod p produces a projected unit eta with

    sigma(eta) = eta^mu * eps^p,      mu = u^(2m),

an exact identity in the ring (eps a unit), which is the entry point for
all the congruence verification downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import PrimeContext
from .eigen import expansion_matches
from .padic import CAP, is_locally_pth_power, valuation
from .ring import ExactElement, RingElement, from_integer, zeta

__all__ = [
    "UnitExponentVector",
    "UnitReport",
    "cyclotomic_unit",
    "cyclotomic_unit_exact",
    "eigen_project_unit",
    "eigen_project_unit_exact",
    "verify_unit_relation",
    "solve_unit_adjustment",
]


def _check_unit_index(p: int, a: int) -> None:
    if not (2 <= a <= (p - 1) // 2):
        raise ValueError(f"unit index must lie in [2, {(p - 1) // 2}], got {a}")


def _check_even_index(p: int, two_m: int) -> None:
    if two_m % 2 != 0 or not (2 <= two_m <= p - 3):
        raise ValueError(
            f"projection index must be even in [2, {p - 3}], got {two_m}"
        )


def cyclotomic_unit(ctx: PrimeContext, K: int, a: int) -> RingElement:
    """The real unit xi_a, truncated mod p^K."""
    _check_unit_index(ctx.p, a)
    e = (1 - a) * pow(2, -1, ctx.p) % ctx.p
    geom = [1] * a + [0] * (ctx.p - 1 - a)
    return zeta(ctx, K, e) * RingElement(ctx, K, geom)


def cyclotomic_unit_exact(p: int, a: int) -> ExactElement:
    """xi_a with exact integer coefficients."""
    _check_unit_index(p, a)
    e = (1 - a) * pow(2, -1, p) % p
    geom = ExactElement(p, [1] * a + [0] * (p - 1 - a))
    if e <= p - 2:
        coeffs = [0] * (p - 1)
        coeffs[e] = 1
        zpow = ExactElement(p, coeffs)
    else:
        zpow = ExactElement(p, [-1] * (p - 1))
    return zpow * geom


@dataclass(frozen=True)
class UnitExponentVector:
    """Galois-orbit exponent pattern c_j = mu^(-j) used by the projection."""

    base_index: int
    exponents: tuple[int, ...]


def _projection_exponents(ctx: PrimeContext, two_m: int) -> list[int]:
    p = ctx.p
    mu = ctx.upow[two_m]
    minv = pow(mu, -1, p)
    exps = [1]
    for _ in range(1, p - 1):
        exps.append(exps[-1] * minv % p)
    return exps


def eigen_project_unit(
    ctx: PrimeContext, K: int, a: int, two_m: int
) -> tuple[RingElement, UnitExponentVector]:
    """Project xi_a onto the mu = u^(2m) eigencomponent of the units.

    Returns (eta, exponent vector); eta satisfies the twisted relation
    sigma(eta) = eta^mu * (unit)^p exactly.
    """
    _check_unit_index(ctx.p, a)
    _check_even_index(ctx.p, two_m)
    xi = cyclotomic_unit(ctx, K, a)
    exps = _projection_exponents(ctx, two_m)
    eta = from_integer(ctx, K, 1)
    for j, c in enumerate(exps):
        eta = eta * xi.galois_apply(ctx.upow[j]) ** c
    return eta, UnitExponentVector(base_index=a, exponents=tuple(exps))


def eigen_project_unit_exact(
    ctx: PrimeContext, a: int, two_m: int
) -> ExactElement:
    """Exact-coefficient version of eigen_project_unit (no truncation)."""
    _check_unit_index(ctx.p, a)
    _check_even_index(ctx.p, two_m)
    xi = cyclotomic_unit_exact(ctx.p, a)
    exps = _projection_exponents(ctx, two_m)
    eta = ExactElement.from_integer(ctx.p, 1)
    for j, c in enumerate(exps):
        eta = eta * xi.galois_apply(ctx.upow[j]) ** c
    return eta


@dataclass(frozen=True)
class UnitReport:
    """Measured facts about one projected unit.

    valuation_of_eta_pm1 is the valuation of eta^(p-1) - 1 (CAP when it
    vanishes to the truncation depth).  expansion_delta is the matched
    digit-expansion coefficient when the index is in the high range and
    the expansion matches; None otherwise.
    """

    two_m: int
    mu: int
    relation_holds: bool
    local_pth_power: bool
    valuation_of_eta_pm1: int | float
    expansion_delta: int | None

    @property
    def dichotomy_holds(self) -> bool:
        """Either eta is a local p-th power or the valuation equals 2m."""
        return self.local_pth_power or self.valuation_of_eta_pm1 == self.two_m

    def to_json_dict(self) -> dict:
        v = self.valuation_of_eta_pm1
        return {
            "two_m": self.two_m,
            "mu": self.mu,
            "relation_holds": self.relation_holds,
            "local_pth_power": self.local_pth_power,
            "valuation_of_eta_pm1": "cap" if v is CAP else int(v),
            "expansion_delta": self.expansion_delta,
            "dichotomy_holds": self.dichotomy_holds,
        }


def verify_unit_relation(eta: RingElement, two_m: int) -> UnitReport:
    """Check the twisted relation and measure the unit's local behavior.

    The relation claim is that sigma(eta) * eta^(-mu) is a p-th power
    locally to depth p+1.  Failure of the valuation dichotomy is data,
    not an error: the report records what was measured.
    """
    ctx, p = eta.ctx, eta.ctx.p
    _check_even_index(p, two_m)
    if eta.K * (p - 1) < p + 1:
        raise ValueError(
            f"verification needs depth {p + 1}; K={eta.K} caps at {eta.K * (p - 1)}"
        )
    mu = ctx.upow[two_m]
    twisted = eta.galois_apply(ctx.u) * (eta**mu).invert()
    relation_holds = is_locally_pth_power(twisted, p + 1)
    local = is_locally_pth_power(eta, p + 1)
    power = eta ** (p - 1)
    val = valuation(power - from_integer(ctx, eta.K, 1))
    delta = None
    if two_m > (p - 1) // 2:
        matched, d = expansion_matches(power, mu, p - 1)
        if matched:
            delta = d
    return UnitReport(
        two_m=two_m,
        mu=mu,
        relation_holds=relation_holds,
        local_pth_power=local,
        valuation_of_eta_pm1=val,
        expansion_delta=delta,
    )


def solve_unit_adjustment(
    ctx: PrimeContext, mu: int, components: list[tuple[int, int]]
) -> list[int]:
    """Exponents rho_j with rho_j * (nu_j - mu) = l_j mod p, one per component.

    Combining W_j^rho_j for units with twist eigenvalues nu_j != mu absorbs
    the leftover eigencomponents l_j; a component with nu_j = mu cannot be
    adjusted and is rejected by index.
    """
    p = ctx.p
    mu = mu % p
    if mu == 0:
        raise ValueError("mu must be invertible mod p")
    out = []
    for idx, (nu, ell) in enumerate(components):
        nu = nu % p
        if nu == mu:
            raise ValueError(
                f"component {idx}: twist eigenvalue {nu} equals mu; "
                "no adjustment exponent exists"
            )
        out.append(ell * pow(nu - mu, -1, p) % p)
    return out
