"""Positive definite binary quadratic forms and their class groups.

A form (a, b, c) stands for a*x^2 + b*x*y + c*y^2 with a > 0 and negative
discriminant b^2 - 4ac.  Classes are taken under SL(2,Z) equivalence; the
reduced representative satisfies |b| <= a <= c with b >= 0 whenever |b| = a
or a = c.  Opposite forms (a, b, c) and (a, -b, c) are distinct classes
unless a boundary condition identifies them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, NamedTuple

from .arith import factorize, is_prime, is_squarefree, kronecker, xgcd

__all__ = [
    "QuadForm",
    "Validation",
    "DiscriminantInfo",
    "check_discriminant",
    "discriminant",
    "validate",
    "is_reduced",
    "reduce_form",
    "principal_form",
    "enumerate_reduced_forms",
    "class_number",
    "class_number_lift",
    "compose",
    "form_inverse",
    "unit_count",
    "is_fundamental",
    "discriminant_info",
    "idoneal_discriminants",
    "both_idoneal_pairs",
]


class QuadForm(NamedTuple):
    """A binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def _as_form(f) -> QuadForm:
    if isinstance(f, QuadForm):
        return f
    return QuadForm(*f)


class Validation(NamedTuple):
    positive_definite: bool
    primitive: bool


def discriminant(f) -> int:
    """b^2 - 4ac."""
    return _as_form(f).disc


def validate(f) -> Validation:
    """Positive definiteness (a > 0, disc < 0) and primitivity (gcd(a,b,c) = 1)."""
    f = _as_form(f)
    pos = f.a > 0 and f.disc < 0
    return Validation(pos, f.content() == 1)


def check_discriminant(delta: int) -> int:
    """Validate a negative discriminant: delta < 0 and delta = 0 or 1 (mod 4)."""
    if delta >= 0 or delta % 4 not in (0, 1):
        raise ValueError(f"{delta} is not a negative discriminant")
    return delta


def _check_posdef(f: QuadForm) -> None:
    if f.a <= 0 or f.disc >= 0:
        raise ValueError(f"{f} is not positive definite")


def is_reduced(f) -> bool:
    f = _as_form(f)
    a, b, c = f
    if not (-a < b <= a <= c):
        return False
    if a == c and b < 0:
        return False
    return True


def reduce_form(f) -> QuadForm:
    """The unique reduced form SL(2,Z)-equivalent to f.  Idempotent."""
    f = _as_form(f)
    _check_posdef(f)
    a, b, c = f
    d = f.disc
    while True:
        # translate b into (-a, a]
        if not (-a < b <= a):
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            c = (r * r - d) // (4 * a)
            b = r
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if a == c and b < 0:
        b = -b
    return QuadForm(a, b, c)


def principal_form(delta: int) -> QuadForm:
    """The identity class: (1, 0, -delta/4) or (1, 1, (1-delta)/4)."""
    check_discriminant(delta)
    b = delta % 2
    return QuadForm(1, b, (b * b - delta) // 4)


def enumerate_reduced_forms(delta: int, primitive_only: bool = True) -> list[QuadForm]:
    """All reduced forms of the given discriminant, sorted lexicographically.

    With primitive_only the count is the class number h(delta).
    """
    check_discriminant(delta)
    out = []
    b = abs(delta) % 2
    while 3 * b * b <= -delta:
        m = (b * b - delta) // 4  # = a*c
        for a in range(max(b, 1), isqrt(m) + 1):
            if m % a:
                continue
            c = m // a
            if primitive_only and gcd(gcd(a, b), c) != 1:
                continue
            out.append(QuadForm(a, b, c))
            if 0 < b < a < c:
                out.append(QuadForm(a, -b, c))
        b += 2
    out.sort()
    return out


def class_number(delta: int) -> int:
    """h(delta) = number of primitive reduced forms."""
    return len(enumerate_reduced_forms(delta, primitive_only=True))


def unit_count(delta: int) -> int:
    """w = 3 for delta = -3, 2 for delta = -4, 1 otherwise."""
    check_discriminant(delta)
    if delta == -3:
        return 3
    if delta == -4:
        return 2
    return 1


def class_number_lift(delta: int, p: int) -> int:
    """h(delta) * (p - (delta|p)) / w, which equals h(delta * p^2)."""
    check_discriminant(delta)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    num = class_number(delta) * (p - kronecker(delta, p))
    w = unit_count(delta)
    if num % w:
        raise ArithmeticError(f"lift of {delta} by {p} not divisible by w={w}")
    return num // w


def form_inverse(f) -> QuadForm:
    """The inverse class of f, represented by (a, -b, c)."""
    f = _as_form(f)
    return reduce_form(QuadForm(f.a, -f.b, f.c))


def _coprime_representation(f: QuadForm, m: int) -> tuple[int, int]:
    """A coprime pair (x, y) with gcd(f(x, y), m) = 1, built prime by prime.

    Exists for every primitive form: modulo each prime p | m at least one of
    a, c, a+b+c is a unit, realized at (1,0), (0,1), (1,1).
    """
    if m == 1 or m == -1:
        return 1, 0
    x, y, mod = 0, 0, 1
    for p, _ in factorize(abs(m)):
        if f.a % p:
            xp, yp = 1, 0
        elif f.c % p:
            xp, yp = 0, 1
        else:
            xp, yp = 1, 1  # f(1,1) = a+b+c = b (mod p), a unit by primitivity
        # CRT-combine with the pair built so far
        g, inv, _ = xgcd(mod, p)
        x = x + mod * ((xp - x) * inv % p)
        y = y + mod * ((yp - y) * inv % p)
        mod *= p
    x %= mod
    y %= mod
    if x == 0 and y == 0:  # cannot happen for m > 1, kept as a guard
        x = 1
    d = gcd(x, y)
    if d > 1:
        # d is coprime to m, so (x/d, y/d) still represents a unit mod m
        x //= d
        y //= d
    return x, y


def _transform_to_leading(f: QuadForm, x: int, y: int) -> QuadForm:
    """Equivalent form with leading coefficient f(x, y); gcd(x, y) must be 1."""
    g, u, v = xgcd(x, y)
    if g != 1:
        raise ValueError("transformation pair is not coprime")
    # columns (x, y) and (-v, u) give determinant x*u + y*v = 1
    p, q = -v, u
    a, b, c = f
    a2 = f(x, y)
    b2 = 2 * a * x * p + b * (x * q + y * p) + 2 * c * y * q
    c2 = f(p, q)
    return QuadForm(a2, b2, c2)


def compose(f, g) -> QuadForm:
    """Gauss composition of primitive classes, returned reduced.

    Dirichlet composition after replacing g by an equivalent form whose
    leading coefficient is coprime to that of f.
    """
    f = _as_form(f)
    g = _as_form(g)
    _check_posdef(f)
    _check_posdef(g)
    d = f.disc
    if g.disc != d:
        raise ValueError(f"discriminant mismatch: {d} vs {g.disc}")
    if f.content() != 1 or g.content() != 1:
        raise ValueError("composition requires primitive forms")
    if gcd(f.a, g.a) != 1:
        x, y = _coprime_representation(g, f.a)
        g = _transform_to_leading(g, x, y)
    a1, b1, _ = f
    a2, b2, _ = g
    # B = b1 (mod 2 a1), B = b2 (mod 2 a2); both are = d (mod 2)
    _, inv, _ = xgcd(a1, a2)
    k = (b2 - b1) // 2 * inv % a2
    B = b1 + 2 * a1 * k
    A = a1 * a2
    C = (B * B - d) // (4 * A)
    return reduce_form(QuadForm(A, B, C))


def is_fundamental(delta: int) -> bool:
    """delta = 1 (mod 4) squarefree, or delta = 4m with m = 2,3 (mod 4) squarefree."""
    check_discriminant(delta)
    if delta % 4 == 1:
        return is_squarefree(-delta)
    m = delta // 4
    return m % 4 in (2, 3) and is_squarefree(-m)


@dataclass(frozen=True)
class DiscriminantInfo:
    delta: int
    w: int
    is_fundamental: bool
    is_idoneal: bool
    class_number: int
    num_genera: int


def discriminant_info(delta: int) -> DiscriminantInfo:
    """Aggregate metadata: w, fundamentality, h, v, idoneality (h = v)."""
    from .genus import num_genera  # local import to avoid a module cycle

    check_discriminant(delta)
    h = class_number(delta)
    v = num_genera(delta)
    return DiscriminantInfo(
        delta=delta,
        w=unit_count(delta),
        is_fundamental=is_fundamental(delta),
        is_idoneal=h == v,
        class_number=h,
        num_genera=v,
    )


def idoneal_discriminants(bound: int) -> list[int]:
    """All idoneal discriminants with |delta| <= bound (one class per genus)."""
    out = []
    for delta in range(-3, -bound - 1, -1):
        if delta % 4 in (0, 1):
            info = discriminant_info(delta)
            if info.is_idoneal:
                out.append(delta)
    return out


def both_idoneal_pairs(bound: int, primes: Iterable[int] = (2, 3, 5, 7)) -> list[tuple[int, int]]:
    """Pairs (delta, p) with |delta| <= bound and delta, delta*p^2 both idoneal."""
    pairs = []
    for delta in idoneal_discriminants(bound):
        for p in primes:
            lifted = discriminant_info(delta * p * p)
            if lifted.is_idoneal:
                pairs.append((delta, p))
    return pairs
