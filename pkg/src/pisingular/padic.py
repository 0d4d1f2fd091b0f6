"""Valuations and digit expansions at the ramified prime of Z[z]/(Phi_p).

The prime p is totally ramified: (p) = (z - 1)^(p-1) up to units, so the
element lam = z - 1 is a uniformizer.  Writing an element over the basis
lam^0, ..., lam^(p-2) (an invertible binomial change of basis from the
power basis in z) makes the valuation computable by a minimum formula:

    v(a) = min_i ( i + (p-1) * v_p(l_i) )

over the nonzero lam-coefficients l_i.  The candidate values are pairwise
distinct mod p-1 across the lam-degrees, so the minimum is attained once
and the formula is exact below the truncation cap K*(p-1).

Valuations at or beyond the cap are reported as the sentinel CAP
(math.inf), which is exactly the "element is 0 mod p^K" case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .context import PrimeContext
from .ring import RingElement, _dtype_for, from_integer, lam, zeta

__all__ = [
    "CAP",
    "LambdaExpansion",
    "to_lambda_basis",
    "from_lambda_basis",
    "valuation",
    "digits",
    "is_semi_primary",
    "is_primary",
    "is_locally_pth_power",
    "semi_primary_normalize",
]

# Sentinel for "at or beyond the representable precision K*(p-1)".
CAP = math.inf


@lru_cache(maxsize=None)
def _pascal_pair(p: int, modulus: int):
    """Change-of-basis matrices between z-powers and lam-powers mod modulus.

    T[i, j] = C(j, i): lam-coefficients = T @ z-coefficients, from the
    expansion z^j = (1 + lam)^j.  U is the inverse, from
    lam^i = (z - 1)^i; both are unit triangular, so the pair is exact.
    """
    n = p - 1
    dtype = _dtype_for(modulus, p)
    T = np.zeros((n, n), dtype=dtype)
    U = np.zeros((n, n), dtype=dtype)
    comb = [1]  # row C(j, .) built additively
    for j in range(n):
        for i in range(j + 1):
            T[i, j] = comb[i]
            # U[i, j] = (-1)^(j-i) C(j, i): z-coeffs = U @ lam-coeffs
            U[i, j] = comb[i] if (j - i) % 2 == 0 else (-comb[i]) % modulus
        comb = [1] + [(comb[k] + comb[k + 1]) % modulus for k in range(j)] + [1]
    T.setflags(write=False)
    U.setflags(write=False)
    return T, U


def to_lambda_basis(a: RingElement) -> list[int]:
    """Coefficients of a over lam^0, ..., lam^(p-2), reduced mod p^K."""
    T, _ = _pascal_pair(a.ctx.p, a.modulus)
    out = (T @ a.coeffs) % a.modulus
    return [int(x) for x in out]


def from_lambda_basis(ctx: PrimeContext, K: int, values) -> RingElement:
    """Inverse of to_lambda_basis."""
    modulus = ctx.p**K
    _, U = _pascal_pair(ctx.p, modulus)
    vals = np.array([int(v) % modulus for v in values], dtype=U.dtype)
    if vals.shape != (ctx.p - 1,):
        raise ValueError(f"expected {ctx.p - 1} coefficients, got {vals.size}")
    return RingElement(ctx, K, [int(x) for x in (U @ vals) % modulus])


def valuation(a: RingElement) -> int | float:
    """Order of vanishing at the ramified prime; CAP when a == 0 mod p^K."""
    p = a.ctx.p
    best = CAP
    for i, li in enumerate(to_lambda_basis(a)):
        if li == 0:
            continue
        vp = 0
        while li % p == 0:
            li //= p
            vp += 1
        cand = i + (p - 1) * vp
        if cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class LambdaExpansion:
    """Truncated digit expansion along powers of the uniformizer.

    digits[i] in [0, p) is the coefficient of lam^i; valuation is the index
    of the first nonzero digit, or CAP when every digit below the requested
    precision vanishes.
    """

    digits: tuple[int, ...]
    valuation: int | float
    precision: int

    def to_json_dict(self) -> dict:
        v = "cap" if self.valuation is CAP else int(self.valuation)
        return {
            "valuation": v,
            "digits": list(self.digits),
            "precision": self.precision,
        }


def digits(a: RingElement, N: int) -> LambdaExpansion:
    """Greedy digit extraction: N digits, each certified by a valuation probe.

    For positions below p-1 the lam-coefficient mod p predicts the digit,
    so its probe succeeds immediately; deeper positions scan the p residues.
    """
    ctx, K, p = a.ctx, a.K, a.ctx.p
    nmax = K * (p - 1)
    if not (1 <= N <= nmax):
        raise ValueError(f"precision must lie in [1, {nmax}], got {N}")
    v0 = valuation(a)
    r = a
    lam1 = lam(ctx, K)
    lam_pow = from_integer(ctx, K, 1)
    out = []
    vcur = v0
    for i in range(N):
        if vcur >= i + 1:
            out.append(0)
        else:
            # vcur == i exactly; exactly one digit in 1..p-1 clears it
            if i <= p - 2:
                first = to_lambda_basis(r)[i] % p
                cands = [first] + [d for d in range(1, p) if d != first]
            else:
                cands = list(range(1, p))
            for d in cands:
                t = r - lam_pow * d
                vt = valuation(t)
                if vt >= i + 1:
                    r = t
                    vcur = vt
                    out.append(d)
                    break
            else:
                raise AssertionError("no digit cleared the current term")
        lam_pow = lam_pow * lam1
    return LambdaExpansion(
        digits=tuple(out),
        valuation=v0 if v0 < N else CAP,
        precision=N,
    )


def _first_two_digits(a: RingElement) -> tuple[int, int]:
    # valid read-off for v(a) = 0: subtracting the constant digit does not
    # disturb the lam^1 coefficient
    l = to_lambda_basis(a)
    return l[0] % a.ctx.p, l[1] % a.ctx.p


def is_semi_primary(a: RingElement) -> bool:
    """True iff a is a unit congruent to a rational integer mod lam^2."""
    if valuation(a) != 0:
        return False
    _, d1 = _first_two_digits(a)
    return d1 == 0


def _require_unit(a: RingElement, opname: str) -> None:
    v = valuation(a)
    if v != 0:
        raise ValueError(f"{opname}: element must be a unit, valuation is {v}")


def _pth_power_to_depth(a: RingElement, depth: int) -> bool:
    """Whether a is congruent to c^p for some rational integer c mod lam^depth.

    c mod p^j determines c^p mod p^(j+1), so lifting the forced residue
    c = d0 mod p through j levels covers every candidate.
    """
    ctx, K, p = a.ctx, a.K, a.ctx.p
    d0, _ = _first_two_digits(a)
    j = max(0, -(-(depth - (p - 1)) // (p - 1)))
    for t in range(p**j):
        c = d0 + t * p
        w = a - from_integer(ctx, K, pow(c, p, a.modulus))
        if valuation(w) >= depth:
            return True
    return False


def is_primary(a: RingElement) -> bool:
    """True iff a is a unit and a = c^p mod lam^p for some rational c."""
    _require_unit(a, "is_primary")
    p, K = a.ctx.p, a.K
    if K * (p - 1) < p:
        raise ValueError(f"is_primary needs depth {p}; K={K} caps at {K * (p - 1)}")
    return _pth_power_to_depth(a, p)


def is_locally_pth_power(a: RingElement, depth: int | None = None) -> bool:
    """Whether a = c^p mod lam^depth has a rational solution c.

    Default depth p+1 is the level at which congruent units acquire
    congruent p-th powers, so the answer stabilizes there.
    """
    _require_unit(a, "is_locally_pth_power")
    p, K = a.ctx.p, a.K
    if depth is None:
        depth = p + 1
    nmax = K * (p - 1)
    if not (1 <= depth <= nmax):
        raise ValueError(f"depth must lie in [1, {nmax}], got {depth}")
    return _pth_power_to_depth(a, depth)


def semi_primary_normalize(a: RingElement) -> tuple[int, RingElement]:
    """Return (w, a * z^w) with the product semi-primary.

    The twist exponent solves d1 + w*d0 = 0 mod p on the leading digits,
    and is the unique such w mod p.
    """
    _require_unit(a, "semi_primary_normalize")
    p = a.ctx.p
    d0, d1 = _first_two_digits(a)
    w = (-d1 * pow(d0, -1, p)) % p
    b = a * zeta(a.ctx, a.K, w)
    assert is_semi_primary(b)
    return w, b
