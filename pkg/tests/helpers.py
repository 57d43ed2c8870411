"""Shared test utilities: random forms and SL(2,Z) scrambling."""

import random

from qgenus.forms import QuadForm, enumerate_reduced_forms


def random_discriminant(rng: random.Random, bound: int) -> int:
    while True:
        d = -rng.randrange(3, bound + 1)
        if d % 4 in (0, 1):
            return d


def random_reduced_form(rng: random.Random, bound: int) -> QuadForm:
    while True:
        d = random_discriminant(rng, bound)
        forms = enumerate_reduced_forms(d, primitive_only=False)
        if forms:
            return rng.choice(forms)


def apply_sl2(f: QuadForm, p: int, q: int, r: int, s: int) -> QuadForm:
    """f(px + qy, rx + sy) for a matrix of determinant 1."""
    assert p * s - q * r == 1
    a, b, c = f
    return QuadForm(
        f(p, r),
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        f(q, s),
    )


def scramble(f: QuadForm, rng: random.Random, steps: int = 6) -> QuadForm:
    """Apply a short random word in the standard SL(2,Z) generators."""
    g = f
    for _ in range(steps):
        if rng.random() < 0.5:
            t = rng.randrange(-3, 4)
            g = apply_sl2(g, 1, t, 0, 1)
        else:
            g = apply_sl2(g, 0, -1, 1, 0)
    return g
