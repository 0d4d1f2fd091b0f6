"""Digit expansions at the ramified prime of a cyclotomic ring.

Every element of Z[z]/(p^K) has a unique expansion sum d_i * lam^i with
digits in [0, p), where lam = z - 1 generates the prime over p.  The
script expands a few elements, reconstructs them from their digits, and
shows the valuation bookkeeping (p itself has valuation p-1; elements
that vanish mod p^K report the cap).
"""

import argparse

from pisingular import CAP, digits, from_integer, lam, new_context, zeta


def show(label, elem, N):
    exp = digits(elem, N)
    v = "cap" if exp.valuation is CAP else exp.valuation
    print(f"{label:<22s} digits={list(exp.digits)} valuation={v}")
    return exp


def reconstruct(ctx, K, digit_seq):
    acc = from_integer(ctx, K, 0)
    power = from_integer(ctx, K, 1)
    for d in digit_seq:
        acc = acc + power * d
        power = power * lam(ctx, K)
    return acc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=5, help="odd prime (default 5)")
    ap.add_argument("--K", type=int, default=2, help="work modulo p^K (default 2)")
    args = ap.parse_args()

    ctx = new_context(args.p)
    p, K = ctx.p, args.K
    N = K * (p - 1)
    print(f"p = {p}, K = {K}: expansions carry {N} digits\n")

    show("z", zeta(ctx, K), N)
    show("z^2", zeta(ctx, K, 2), N)
    show("p", from_integer(ctx, K, p), N)
    show("lam^3 * 2", lam(ctx, K) ** 3 * 2, N)
    show("0", from_integer(ctx, K, 0), N)

    elem = zeta(ctx, K) * 3 + from_integer(ctx, K, p + 1)
    exp = show("3z + p + 1", elem, N)

    back = reconstruct(ctx, K, exp.digits)
    print(f"\nreconstruction from digits equals the element: {back == elem}")

    prefix = digits(elem, 3)
    print(f"first three digits only: {list(prefix.digits)} (a prefix of the full run)")


if __name__ == "__main__":
    main()
