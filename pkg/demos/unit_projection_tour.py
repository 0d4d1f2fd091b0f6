"""Project a circular unit onto Galois eigencomponents and test it.

The real unit built from index a is pushed through the Galois orbit with
exponents mu^(-j); the product eta then transforms by mu = u^(2m) up to
p-th powers.  For each even index the script reports whether the twisted
relation holds, whether eta is itself a local p-th power, and where
eta^(p-1) - 1 sits in the valuation filtration (the dichotomy says: local
p-th power, or exactly at 2m).
"""

import argparse

from pisingular import CAP, eigen_project_unit, new_context, verify_unit_relation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=13, help="odd prime (default 13)")
    ap.add_argument("--a", type=int, default=2, help="unit index (default 2)")
    ap.add_argument("--K", type=int, default=2, help="work modulo p^K (default 2)")
    args = ap.parse_args()

    ctx = new_context(args.p)
    p = ctx.p
    print(f"p = {p}, u = {ctx.u}, unit index a = {args.a}\n")

    print("2m  mu  exponent pattern                relation  local_pth  v(eta^(p-1)-1)  delta")
    for two_m in range(2, p - 2, 2):
        eta, vec = eigen_project_unit(ctx, args.K, args.a, two_m)
        rep = verify_unit_relation(eta, two_m)
        pattern = ",".join(str(c) for c in vec.exponents)
        v = rep.valuation_of_eta_pm1
        v_str = "cap" if v is CAP else str(v)
        print(
            f"{two_m:2d}  {rep.mu:2d}  [{pattern:<30s}]  "
            f"{'ok' if rep.relation_holds else 'FAIL':<8s}  "
            f"{str(rep.local_pth_power):<9s}  {v_str:<14s}  {rep.expansion_delta}"
        )

    print(
        "\ndichotomy: every row is either a local p-th power or has "
        "v(eta^(p-1)-1) equal to its index 2m"
    )
    if p == 37:
        print("note: at p=37 the row 2m=32 is the classical exception where")
        print("the projected unit really is a local p-th power")


if __name__ == "__main__":
    main()
