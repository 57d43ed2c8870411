#!/usr/bin/env python3
"""Tour of class groups and genus structure.

Walks through reduction, enumeration, Gauss composition, and the partition
of a class group into genera by assigned characters, ending with the list
of discriminants where every genus holds a single class.
"""

from qgenus import (
    class_number,
    compose,
    discriminant_info,
    enumerate_reduced_forms,
    form_inverse,
    genus_partition,
    idoneal_discriminants,
    reduce_form,
)


def show_partition(delta):
    part = genus_partition(delta)
    info = discriminant_info(delta)
    print(f"\ndiscriminant {delta}:  h = {info.class_number}, genera = {info.num_genera}, "
          f"idoneal = {info.is_idoneal}")
    print("  characters: " + "  ".join(c.label for c in part.characters))
    for i, g in enumerate(part.genera, 1):
        vec = " ".join(f"{v:+d}" for v in g.vector)
        print(f"  G{i} <{vec}>  " + "  ".join(str(f) for f in g.forms))


def main():
    print("Reduction finds the canonical representative of an SL(2,Z) class:")
    for f in [(25, 30, 32), (25, 40, 39), (196, 398, 203)]:
        print(f"  {f} -> {reduce_form(f)}")

    print("\nAll reduced primitive forms of discriminant -2300 "
          f"(class number {class_number(-2300)}):")
    for f in enumerate_reduced_forms(-2300):
        print(f"  {f}")

    print("\nThe class group is abelian under composition; CL(-92) is cyclic of order 3:")
    f = (3, 2, 8)
    g = compose(f, f)
    print(f"  {f} * {f} = {g}")
    print(f"  {f} * {g} = {compose(f, g)}   (the principal form)")
    print(f"  inverse of {f} is {form_inverse(f)}")

    for delta in (-20, -180, -63, -252):
        show_partition(delta)

    print("\nIdoneal discriminants up to 200 (one class per genus):")
    print(" ", idoneal_discriminants(200))


if __name__ == "__main__":
    main()
