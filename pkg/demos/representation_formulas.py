#!/usr/bin/env python3
"""Closed product formulas for representation counts.

The theta coefficients of the forms of discriminant -36, -75 and -180 have
multiplicative closed forms built from prime exponent statistics.  This
script evaluates them against brute-force lattice enumeration and shows the
Lambert series decompositions behind them.
"""

from qgenus import rep_formula, theta_series
from qgenus.lambert import named_series_expand


def check(delta, form, upto=60):
    theta = theta_series(form, upto)
    rows = []
    for n in range(1, upto + 1):
        f_val = rep_formula(delta, form, n)
        rows.append((n, f_val, theta[n]))
    bad = [r for r in rows if r[1] != r[2]]
    print(f"\n(a,b,c) = {form}, discriminant {delta}: "
          f"{'all agree' if not bad else f'MISMATCH {bad[0]}'}")
    print("   n:      " + " ".join(f"{n:3d}" for n, _, _ in rows[:15]))
    print("   formula:" + " ".join(f"{v:3d}" for _, v, _ in rows[:15]))
    print("   count:  " + " ".join(f"{v:3d}" for _, _, v in rows[:15]))


def main():
    for delta, forms in ((-36, [(1, 0, 9), (2, 2, 5)]),
                         (-75, [(1, 1, 19), (3, 3, 7)]),
                         (-180, [(1, 0, 45), (5, 0, 9), (7, 4, 7), (2, 2, 23)])):
        for form in forms:
            check(delta, form)

    print("\nA pair of forms in one class group can never represent the same")
    print("integer unless the dissection prime divides it:")
    t1 = theta_series((1, 0, 9), 30)
    t2 = theta_series((2, 2, 5), 30)
    for n in range(1, 31):
        tag = "3 | n" if n % 3 == 0 else "    "
        if t1[n] or t2[n]:
            print(f"  n={n:2d} {tag}  (1,0,9;n)={t1[n]}  (2,2,5;n)={t2[n]}")

    print("\nThe Lambert series behind the -36 formulas (first 12 coefficients):")
    print("  A:", named_series_expand("A_36", 12).coeffs)
    print("  D:", named_series_expand("D_36", 12).coeffs)


if __name__ == "__main__":
    main()
