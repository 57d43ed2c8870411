"""Genus theory: assigned characters, genus partitions, and the prime lift.

The 2-adic part of the assigned character table follows the classical
Gauss/Buell rules keyed on |delta|/4 mod 8; its correctness is not taken on
faith but enforced by the represented-residue oracle (see
residue_partition), which rebuilds the genus partition from congruence data
alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import factorize, is_prime, kronecker
from .forms import (
    QuadForm,
    _as_form,
    check_discriminant,
    enumerate_reduced_forms,
    reduce_form,
)

__all__ = [
    "AssignedCharacter",
    "assigned_characters",
    "num_genera",
    "smallest_coprime_value",
    "smallest_coprime_values",
    "represented_coprime_residues",
    "character_vector",
    "Genus",
    "GenusPartition",
    "genus_partition",
    "genus_count_ratio",
    "phi_correspondence",
    "buell_lift",
    "LiftSet",
    "psi_lift",
    "residue_partition",
    "theorem1_parameters",
]


@dataclass(frozen=True)
class AssignedCharacter:
    """One assigned character of a discriminant, evaluable on r coprime to 2*delta.

    kind is "odd_prime" (the Legendre symbol (r/p)), or one of "minus_one",
    "two", "minus_two" for the 2-adic characters (-1/r), (2/r), (-2/r).
    """

    kind: str
    prime: int = 0

    def __call__(self, r: int) -> int:
        if self.kind == "odd_prime":
            return kronecker(r, self.prime)
        if self.kind == "minus_one":
            return kronecker(-1, r)
        if self.kind == "two":
            return kronecker(2, r)
        if self.kind == "minus_two":
            return kronecker(-2, r)
        raise ValueError(f"unknown character kind {self.kind}")

    @property
    def label(self) -> str:
        if self.kind == "odd_prime":
            return f"(r/{self.prime})"
        return {"minus_one": "(-1/r)", "two": "(2/r)", "minus_two": "(-2/r)"}[self.kind]


def assigned_characters(delta: int) -> list[AssignedCharacter]:
    """The assigned characters of delta: (r/p) for odd p | delta, plus 2-adic ones.

    Odd primes come in ascending order, then the 2-adic characters in the
    order (-1/r), (2/r), (-2/r).
    """
    check_discriminant(delta)
    chars = [
        AssignedCharacter("odd_prime", p)
        for p, _ in factorize(-delta)
        if p != 2
    ]
    if delta % 4 == 0:
        n = -delta // 4
        if n % 4 == 1:
            chars.append(AssignedCharacter("minus_one"))
        elif n % 8 == 2:
            chars.append(AssignedCharacter("minus_two"))
        elif n % 8 == 6:
            chars.append(AssignedCharacter("two"))
        elif n % 8 == 4:
            chars.append(AssignedCharacter("minus_one"))
        elif n % 8 == 0:
            chars.append(AssignedCharacter("minus_one"))
            chars.append(AssignedCharacter("two"))
        # n = 3 (mod 4): no 2-adic character
    return chars


def num_genera(delta: int) -> int:
    """v(delta) = 2^(#assigned characters - 1)."""
    return 1 << (len(assigned_characters(delta)) - 1)


def smallest_coprime_values(f, modulus: int, count: int = 1, cap: int = 1 << 40) -> list[int]:
    """The count smallest positive values of f coprime to the modulus, ascending.

    Grows the search box until the ellipse f <= candidate fits inside it, so
    the returned minima are global, not artifacts of the box size.
    """
    f = _as_form(f)
    a, b, c = f
    d = 4 * a * c - b * b
    modulus = abs(modulus)
    bound = 4
    while bound <= cap:
        vals: set[int] = set()
        for x in range(-bound, bound + 1):
            for y in range(0, bound + 1):  # f(-x,-y) = f(x,y)
                v = f(x, y)
                if v > 0 and gcd(v, modulus) == 1:
                    vals.add(v)
        if len(vals) >= count:
            best = sorted(vals)[:count]
            # the ellipse f <= v lies in |x| <= sqrt(4c*v/d), |y| <= sqrt(4a*v/d)
            fit = max(isqrt(4 * c * best[-1] // d), isqrt(4 * a * best[-1] // d))
            if fit <= bound:
                return best
            bound = fit + 1
        else:
            bound *= 2
    raise ValueError(f"no represented value of {f} coprime to {modulus} below cap")


def smallest_coprime_value(f, modulus: int, cap: int = 1 << 40) -> int:
    """Smallest positive value of f coprime to the modulus."""
    return smallest_coprime_values(f, modulus, 1, cap)[0]


def represented_coprime_residues(f, modulus: int, search_bound: int) -> set[int]:
    """{f(x,y) mod modulus : |x|,|y| <= search_bound, gcd(f(x,y), modulus) = 1}.

    Monotone nondecreasing in the bound; a bound >= modulus makes the set
    complete since f(x, y) mod m has period m in each variable.
    """
    f = _as_form(f)
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    out = set()
    for x in range(-search_bound, search_bound + 1):
        for y in range(-search_bound, search_bound + 1):
            v = f(x, y)
            if gcd(v, modulus) == 1:
                out.add(v % modulus)
    return out


def character_vector(f, chars=None) -> tuple[int, ...]:
    """Values of the assigned characters of disc(f) at a represented value.

    Evaluates at the smallest represented value coprime to 2*delta; by genus
    theory the result does not depend on that choice.
    """
    f = _as_form(f)
    if chars is None:
        chars = assigned_characters(f.disc)
    r = smallest_coprime_value(f, 2 * f.disc)
    return tuple(chi(r) for chi in chars)


@dataclass(frozen=True)
class Genus:
    vector: tuple[int, ...]
    forms: tuple[QuadForm, ...]


@dataclass(frozen=True)
class GenusPartition:
    delta: int
    characters: tuple[AssignedCharacter, ...]
    genera: tuple[Genus, ...]

    @property
    def num_genera(self) -> int:
        return len(self.genera)

    @property
    def class_number(self) -> int:
        return sum(len(g.forms) for g in self.genera)

    def genus_of(self, f) -> Genus:
        f = reduce_form(f)
        for g in self.genera:
            if f in g.forms:
                return g
        raise ValueError(f"{f} is not a primitive reduced form of {self.delta}")


@lru_cache(maxsize=4096)
def genus_partition(delta: int) -> GenusPartition:
    """Primitive classes grouped by character vector, principal genus first.

    Checks the classical structure on the way: 2^(#chars - 1) equally sized
    cells.  A violation would mean the character table is wrong and raises.
    """
    chars = tuple(assigned_characters(delta))
    cells: dict[tuple[int, ...], list[QuadForm]] = {}
    for f in enumerate_reduced_forms(delta, primitive_only=True):
        cells.setdefault(character_vector(f, chars), []).append(f)
    expected = 1 << (len(chars) - 1)
    sizes = {len(v) for v in cells.values()}
    if len(cells) != expected or len(sizes) != 1:
        raise ArithmeticError(
            f"genus structure broken for {delta}: "
            f"{len(cells)} cells of sizes {sorted(sizes)}, expected {expected} equal cells"
        )
    genera = tuple(
        Genus(vec, tuple(sorted(cells[vec])))
        for vec in sorted(cells, key=lambda v: [0 if x == 1 else 1 for x in v])
    )
    return GenusPartition(delta, chars, genera)


def genus_count_ratio(delta: int, p: int) -> int:
    """v(delta p^2) / v(delta), by the classical case table."""
    check_discriminant(delta)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > 2:
        return 1 if delta % p == 0 else 2
    if delta % 2:
        return 1
    if delta == -4:
        return 1
    r16 = delta % 16
    if r16 in (4, 8):
        return 2
    if r16 == 12:
        return 1
    return 1 if delta % 32 == 0 else 2


def phi_correspondence(delta: int, p: int):
    """The map sending a genus of delta*p^2 to the genus of delta that agrees
    with it on every assigned character of delta.

    Returns (partition of delta, partition of delta*p^2, mapping) where
    mapping[i] = j says genus i upstairs corresponds to genus j downstairs.
    Representatives are taken coprime to 2*delta*p^2 so every character is
    defined at them.
    """
    check_discriminant(delta)
    part_lo = genus_partition(delta)
    part_hi = genus_partition(delta * p * p)
    chars_lo = part_lo.characters
    modulus = 2 * delta * p * p
    lo_vectors = []
    for g in part_lo.genera:
        r = smallest_coprime_value(g.forms[0], modulus)
        lo_vectors.append(tuple(chi(r) for chi in chars_lo))
    mapping = {}
    for i, G in enumerate(part_hi.genera):
        r = smallest_coprime_value(G.forms[0], modulus)
        vec = tuple(chi(r) for chi in chars_lo)
        matches = [j for j, lv in enumerate(lo_vectors) if lv == vec]
        if len(matches) != 1:
            raise ArithmeticError(
                f"correspondence for ({delta}, {p}) is not well defined: "
                f"genus {i} matches {matches}"
            )
        mapping[i] = matches[0]
    return part_lo, part_hi, mapping


def buell_lift(f, p: int) -> list[QuadForm]:
    """Raw lift of f to discriminant disc(f)*p^2:
    (a, bp, cp^2) together with (ap^2, p(b + 2ah), ah^2 + bh + c) for 0 <= h < p.
    """
    f = _as_form(f)
    if f.content() != 1:
        raise ValueError("lift requires a primitive form")
    a, b, c = f
    out = [QuadForm(a, b * p, c * p * p)]
    for h in range(p):
        out.append(QuadForm(a * p * p, p * (b + 2 * a * h), a * h * h + b * h + c))
    return out


@dataclass(frozen=True)
class LiftSet:
    source: QuadForm
    p: int
    members: tuple[QuadForm, ...]


def psi_lift(f, genus: Genus, p: int) -> LiftSet:
    """Primitive members of the lift of f that land in the given genus of
    disc(f)*p^2, reduced and deduplicated as classes.  May be empty.
    """
    f = _as_form(f)
    seen = []
    for g in buell_lift(f, p):
        if g.content() != 1:
            continue
        g = reduce_form(g)
        if g not in seen and g in genus.forms:
            seen.append(g)
    return LiftSet(f, p, tuple(sorted(seen)))


def theorem1_parameters(delta: int) -> int:
    """The 2-adic depth t for the p = 2 identity: projection modulus is 2^(t+1)."""
    check_discriminant(delta)
    if delta % 16 == 0:
        return 2
    return 0 if delta % 2 else 1


def _residues_mod_prime_power(f: QuadForm, q: int):
    """All residues of f mod q (a prime power), as a sorted tuple.

    Exact: f(x, y) mod q is periodic in x and y with period q, so the grid
    [0,q)^2 realizes every attained residue.
    """
    import numpy as np

    a, b, c = (v % q for v in f)
    x = np.arange(q, dtype=np.int64)
    vals = (a * x * x)[:, None] + (b * x)[:, None] * x[None, :] + (c * x * x)[None, :]
    return np.unique(vals % q)


def residue_partition(delta: int) -> list[tuple[QuadForm, ...]]:
    """Partition of the primitive classes of delta by their coprime residue
    sets mod 8|delta|, computed from congruence data alone.

    This is the oracle for the genus partition: it never evaluates an
    assigned character.  Residue sets mod M = 8|delta| factor through the
    prime power parts of M, which keeps the enumeration exact and small.
    """
    check_discriminant(delta)
    m = -8 * delta
    pieces = [p**e for p, e in factorize(m)]
    keys: dict[tuple, list[QuadForm]] = {}
    for f in enumerate_reduced_forms(delta, primitive_only=True):
        key = []
        for q in pieces:
            res = _residues_mod_prime_power(f, q)
            p = factorize(q)[0][0]
            key.append(tuple(int(r) for r in res if r % p))
        keys.setdefault(tuple(key), []).append(f)
    return [tuple(sorted(v)) for v in keys.values()]
