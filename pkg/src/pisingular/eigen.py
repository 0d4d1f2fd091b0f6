"""Eigentheory of the Galois generator on the mod-p root-of-unity span.

Over F_p the span of z^1, ..., z^(p-1) carries the generator sigma
(z -> z^u) as the (p-1)-cycle permutation of exponents j -> u*j mod p.  A
permutation matrix of a full cycle has one eigenvalue for each (p-1)-th
root of unity in F_p, i.e. every nonzero residue mu, each with a
one-dimensional eigenspace spanned by the closed-form vector

    e_mu = sum_i mu^(-i) z^(u^i)      (i = 0..p-2).

This module computes those eigenvectors three ways (closed form, nullspace
of the permutation matrix, and a first-order recurrence in the coefficient
list) and exposes the digit-expansion matcher that recognizes elements
congruent to 1 - delta * e_mu to a requested depth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .context import PrimeContext
from .padic import valuation
from .ring import RingElement, from_integer, zeta

__all__ = [
    "EigenReport",
    "RecurrenceSolution",
    "sigma_matrix",
    "eigenvector_span_coords",
    "eigenvector_element",
    "span_coords",
    "canonical_eigenvector",
    "recurrence_solve",
    "expansion_matches",
]


def sigma_matrix(ctx: PrimeContext) -> np.ndarray:
    """Matrix of z -> z^u on the span basis z^1, ..., z^(p-1) over F_p."""
    p, u = ctx.p, ctx.u
    M = np.zeros((p - 1, p - 1), dtype=np.int64)
    for j in range(1, p):
        M[u * j % p - 1, j - 1] = 1
    return M


def span_coords(a: RingElement) -> list[int]:
    """Rewrite a power-basis element over z^1, ..., z^(p-1), mod p.

    Uses 1 = -(z + z^2 + ... + z^(p-1)); the rewrite is unique because the
    nonconstant powers also form a basis.
    """
    p = a.ctx.p
    c = [int(x) for x in a.coeffs]
    c0 = c[0]
    out = [(c[j] - c0) % p for j in range(1, p - 1)]
    out.append((-c0) % p)
    return out


def _span_to_element(ctx: PrimeContext, K: int, coords) -> RingElement:
    p = ctx.p
    coords = [int(x) for x in coords]
    top = coords[p - 2]  # coefficient of z^(p-1)
    coeffs = [-top] + [coords[j - 1] - top for j in range(1, p - 1)]
    return RingElement(ctx, K, coeffs)


def eigenvector_span_coords(ctx: PrimeContext, mu: int) -> tuple[int, ...]:
    """Coordinates of e_mu on z^1, ..., z^(p-1), normalized so z^1 has 1."""
    p = ctx.p
    mu = mu % p
    if mu in (0, 1):
        raise ValueError(f"eigenvalue must lie in 2..p-1, got {mu}")
    minv = pow(mu, -1, p)
    coords = [0] * (p - 1)
    cur = 1
    for i in range(p - 1):
        coords[ctx.upow[i] - 1] = cur
        cur = cur * minv % p
    return tuple(coords)


def eigenvector_element(ctx: PrimeContext, K: int, mu: int) -> RingElement:
    """e_mu as a ring element (its coefficients are only meaningful mod p)."""
    return _span_to_element(ctx, K, eigenvector_span_coords(ctx, mu))


@dataclass(frozen=True)
class EigenReport:
    p: int
    mu: int
    index_s: int
    dimension: int
    vector: tuple[int, ...]
    valuation: int
    matches_closed_form: bool

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "mu": self.mu,
            "index_s": self.index_s,
            "dimension": self.dimension,
            "vector": list(self.vector),
            "valuation": self.valuation,
            "matches_closed_form": self.matches_closed_form,
        }


def _nullspace_mod_p(M: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of the kernel of M over F_p (row-reduction, unit pivots)."""
    A = M % p
    rows, cols = A.shape
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c] % p), None)
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        mask = np.arange(rows) != r
        A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        pivot_of_col[c] = r
        r += 1
    basis = []
    for c in range(cols):
        if c in pivot_of_col:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[c] = 1
        for pc, pr in pivot_of_col.items():
            v[pc] = (-A[pr, c]) % p
        basis.append(v)
    return basis


def canonical_eigenvector(ctx: PrimeContext, mu: int) -> EigenReport:
    """Closed-form eigenvector cross-checked against the nullspace route.

    matches_closed_form records two independent confirmations: the
    permutation-matrix nullspace equals the closed form after scaling, and
    applying the automorphism in the ring reproduces mu times the vector.
    """
    p = ctx.p
    mu = mu % p
    if mu in (0, 1):
        raise ValueError(f"eigenvalue must lie in 2..p-1, got {mu}")
    coords = eigenvector_span_coords(ctx, mu)
    elem = _span_to_element(ctx, 1, coords)
    sigma_ok = elem.galois_apply(ctx.u) == elem * mu
    A = (sigma_matrix(ctx) - mu * np.eye(p - 1, dtype=np.int64)) % p
    basis = _nullspace_mod_p(A, p)
    matches = False
    if len(basis) == 1 and basis[0][0] % p != 0:
        scaled = basis[0] * pow(int(basis[0][0]), -1, p) % p
        matches = tuple(int(x) for x in scaled) == coords
    val = valuation(elem)  # < p-1 always: some coordinate is a unit
    return EigenReport(
        p=p,
        mu=mu,
        index_s=ctx.index_of(mu),
        dimension=len(basis),
        vector=coords,
        valuation=int(val),
        matches_closed_form=bool(matches and sigma_ok),
    )


@dataclass(frozen=True)
class RecurrenceSolution:
    """Coefficient solution of the eigen equation in the affine picture.

    The element gamma + sum_i gammas[i] * z^(u^i) (i = 0..p-3) satisfies
    sigma(V) = mu * V; gammas[p-3] equals the free parameter and the
    constant term is gamma = -free / (mu - 1) mod p.
    """

    p: int
    mu: int
    free: int
    gamma: int
    gammas: tuple[int, ...]

    def to_ring_element(self, ctx: PrimeContext) -> RingElement:
        if ctx.p != self.p:
            raise ValueError(f"context prime {ctx.p} != solution prime {self.p}")
        acc = from_integer(ctx, 1, self.gamma)
        for i, g in enumerate(self.gammas):
            acc = acc + zeta(ctx, 1, ctx.upow[i]) * g
        return acc


def recurrence_solve(ctx: PrimeContext, mu: int, free: int) -> RecurrenceSolution:
    """Solve the linear recurrence the eigen equation imposes coefficientwise.

    Closing the loop forces gammas[p-3] back to the free parameter; that
    consistency is asserted rather than assumed.
    """
    p = ctx.p
    mu = mu % p
    if mu in (0, 1):
        raise ValueError(f"eigenvalue must lie in 2..p-1, got {mu}")
    free = free % p
    minv = pow(mu, -1, p)
    gammas = [(-free) * minv % p]
    for _ in range(1, p - 2):
        gammas.append((gammas[-1] - free) * minv % p)
    assert gammas[p - 3] == free, "recurrence failed to close"
    gamma = (-free) * pow(mu - 1, -1, p) % p
    return RecurrenceSolution(
        p=p, mu=mu, free=free, gamma=gamma, gammas=tuple(gammas)
    )


def expansion_matches(
    a: RingElement, mu: int, depth: int | None = None
) -> tuple[bool, int | None]:
    """Test a = 1 - delta * e_mu mod lam^depth; return (matched, delta).

    delta is solved from the z^1 coordinate of a - 1 (the e_mu coordinate
    there is 1), then certified by a valuation probe.  At full depth p-1
    that candidate is the only possible one; at smaller depths the
    remaining residues are scanned before reporting a mismatch.
    """
    ctx, p = a.ctx, a.ctx.p
    v = valuation(a)
    if v != 0:
        raise ValueError(f"expansion_matches: element must be a unit, valuation is {v}")
    if depth is None:
        depth = p - 1
    if not (1 <= depth <= p - 1):
        raise ValueError(f"depth must lie in [1, {p - 1}], got {depth}")
    a1 = a.truncate(1)
    e1 = eigenvector_element(ctx, 1, mu % p)
    w = a1 - from_integer(ctx, 1, 1)
    delta0 = (-span_coords(w)[0]) % p
    cands = [delta0]
    if depth < p - 1:
        cands += [d for d in range(p) if d != delta0]
    for d in cands:
        if valuation(w + e1 * d) >= depth:
            return True, d
    return False, None
