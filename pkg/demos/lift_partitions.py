#!/usr/bin/env python3
"""Lifting forms from discriminant d to d*p^2 and the induced genus partition.

Each primitive class downstairs spawns a small set of classes upstairs; the
classes that land in a fixed genus G partition it into equal slices, one per
source class.  That partition powers the generalized connecting identity and,
as a payoff, a new eta quotient evaluation for discriminant -252.
"""

from qgenus import buell_lift, genus_partition, psi_lift, reduce_form, theta_series
from qgenus.series import EtaFactor, EtaQuotientSpec, eta_quotient


def main():
    print("Raw lift of (1,0,23) by p = 5 (discriminant -92 -> -2300):")
    for g in buell_lift((1, 0, 23), 5):
        print(f"  {g}  ->  {reduce_form(g)}")

    part = genus_partition(-2300)
    print("\nGenera of -2300 and their lift-set slices:")
    for i, G in enumerate(part.genera, 1):
        print(f"  G{i}: " + "  ".join(str(f) for f in G.forms))
        for src in ((1, 0, 23), (3, 2, 8), (3, -2, 8)):
            members = psi_lift(src, G, 5).members
            print(f"    from {src}: " + ("  ".join(str(f) for f in members) or "(empty)"))

    print("\nSlices are disjoint, equal sized, and cover each genus: 9 = 3 * 3.")

    print("\nTwo-step lift for -252 = -7 * 4 * 9 ends at an eta quotient:")
    n = 32
    lhs = theta_series((1, 0, 63), n) - theta_series((7, 0, 9), n)
    spec = EtaQuotientSpec(1, (EtaFactor(3, 1, -1), EtaFactor(21, 1, -1)))
    rhs = eta_quotient(spec, n) * 2
    print(f"  theta(1,0,63) - theta(7,0,9)  = {lhs.coeffs[:16]}")
    print(f"  2 q E(-q^3) E(-q^21)          = {rhs.coeffs[:16]}")
    print(f"  equal through q^{n}: {lhs == rhs}")


if __name__ == "__main__":
    main()
