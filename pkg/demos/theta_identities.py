#!/usr/bin/env python3
"""The connecting identity between theta series of discriminants d and d*p^2.

For idoneal pairs, the theta series of a form upstairs equals the theta
series of the corresponding form downstairs at q^(p^2) plus a block of
projections.  Everything is exact: integer coefficients, compared term by
term.
"""

from qgenus import kronecker, theta_series, unit_count, verify_theorem1
from qgenus.genus import phi_correspondence, smallest_coprime_values


def demonstrate(delta, p, n=48):
    part_lo, part_hi, mapping = phi_correspondence(delta, p)
    w = unit_count(delta)
    print(f"\ndelta = {delta}, p = {p}  (w = {w})")
    for i, G in enumerate(part_hi.genera):
        lifted = G.forms[0]
        base = part_lo.genera[mapping[i]].forms[0]
        r = smallest_coprime_values(lifted, 2 * delta * p * p)[0]
        keep = [i_ for i_ in range(1, p) if kronecker(r * i_, p) == 1]
        lhs = theta_series(lifted, n) * w
        rhs = theta_series(base, n).subst_power(p * p) * w
        basis = theta_series(base, n)
        for k in keep:
            rhs = rhs + basis.project(p, k)
        ok = "equal" if lhs == rhs else "DIFFER"
        proj = " + ".join(f"P_{{{p},{k}}}" for k in keep)
        print(f"  {w}*theta{lifted} = {w}*theta{base}(q^{p*p}) + {proj} theta{base}   [{ok}]")
        print(f"    lhs coefficients: {lhs.coeffs[:13]}")
        print(f"    rhs coefficients: {rhs.coeffs[:13]}")


def main():
    demonstrate(-20, 3)
    demonstrate(-4, 5)

    print("\nFull verification at N = 1000, every genus, two residue choices each:")
    for delta, p in ((-20, 3), (-4, 5), (-3, 7), (-112, 2)):
        for rep in verify_theorem1(delta, p):
            print(f"  {rep.case_id}: {rep.status} (N={rep.n})")


if __name__ == "__main__":
    main()
