"""Exact truncated integer power series in q.

A PowerSeries holds coefficients [q^0], ..., [q^N] as Python ints; all
operations stay in exact integer arithmetic.  Binary operations truncate to
the smaller bound; equality likewise compares through min(N1, N2).
Instances are treated as immutable: no method mutates coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

__all__ = [
    "PowerSeries",
    "zero_series",
    "one_series",
    "monomial",
    "project",
    "theta_series",
    "euler_series",
    "EtaFactor",
    "EtaQuotientSpec",
    "eta_quotient",
    "phi_series",
    "psi_series",
]


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def coeff(self, n: int) -> int:
        return self[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def first_mismatch(self, other: "PowerSeries"):
        """First (n, self[n], other[n]) disagreement through the common bound, else None."""
        n = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        for i in range(n + 1):
            if a[i] != b[i]:
                return (i, a[i], b[i])
        return None

    def __add__(self, other):
        if isinstance(other, int):
            out = self.coeffs.copy()
            out[0] += other
            return PowerSeries(out)
        n = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        return PowerSeries([a[i] + b[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-v for v in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries([v * other for v in self.coeffs])
        n = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        fa = [(i, v) for i, v in enumerate(a[: n + 1]) if v]
        fb = [(j, w) for j, w in enumerate(b[: n + 1]) if w]
        if len(fb) < len(fa):
            fa, fb, a, b = fb, fa, b, a
        out = [0] * (n + 1)
        for i, v in fa:
            lim = n - i
            for j, w in fb:
                if j > lim:
                    break
                out[i + j] += v * w
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            return (self ** (-m)).recip()
        result = one_series(self.truncation)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def recip(self) -> "PowerSeries":
        """Multiplicative inverse; requires constant term 1."""
        n = self.truncation
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("reciprocal requires constant term 1")
        support = [(j, a[j]) for j in range(1, n + 1) if a[j]]
        b = [0] * (n + 1)
        b[0] = 1
        for m in range(1, n + 1):
            s = 0
            for j, aj in support:
                if j > m:
                    break
                s += aj * b[m - j]
            b[m] = -s
        return PowerSeries(b)

    def subst_power(self, k: int) -> "PowerSeries":
        """q -> q^k: coefficient of q^n moves to q^{k n}, same truncation."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        n = self.truncation
        out = [0] * (n + 1)
        for i, v in enumerate(self.coeffs):
            if i * k > n:
                break
            out[i * k] = v
        return PowerSeries(out)

    def shift(self, e: int) -> "PowerSeries":
        """Multiply by q^e (e >= 0), same truncation."""
        if e < 0:
            raise ValueError("shift must be >= 0")
        n = self.truncation
        if e > n:
            return PowerSeries([0] * (n + 1))
        return PowerSeries([0] * e + self.coeffs[: n + 1 - e])

    def project(self, m: int, r: int) -> "PowerSeries":
        """Keep coefficients at exponents = r (mod m), zero the rest."""
        if m < 1:
            raise ValueError("projection modulus must be >= 1")
        r %= m
        out = [0] * (self.truncation + 1)
        for i in range(r, self.truncation + 1, m):
            out[i] = self.coeffs[i]
        return PowerSeries(out)

    def truncate(self, n: int) -> "PowerSeries":
        if n >= self.truncation:
            return self
        return PowerSeries(self.coeffs[: n + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json_obj(self) -> dict:
        return {"truncation": self.truncation, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PowerSeries":
        coeffs = [int(v) for v in obj["coeffs"]]
        if len(coeffs) != int(obj["truncation"]) + 1:
            raise ValueError("truncation does not match coefficient count")
        return cls(coeffs)

    def __repr__(self) -> str:
        shown = self.coeffs[:8]
        tail = ", ..." if self.truncation >= 8 else ""
        return f"PowerSeries(N={self.truncation}, [{', '.join(map(str, shown))}{tail}])"


def zero_series(n: int) -> PowerSeries:
    return PowerSeries([0] * (n + 1))


def one_series(n: int) -> PowerSeries:
    return PowerSeries([1] + [0] * n)


def monomial(e: int, n: int, coeff: int = 1) -> PowerSeries:
    out = [0] * (n + 1)
    if e <= n:
        out[e] = coeff
    return PowerSeries(out)


def project(s: PowerSeries, m: int, r: int) -> PowerSeries:
    return s.project(m, r)


@lru_cache(maxsize=4096)
def _theta_coeffs(a: int, b: int, c: int, n: int) -> tuple[int, ...]:
    d = 4 * a * c - b * b  # |discriminant|
    coeffs = [0] * (n + 1)
    lim = 4 * a * n
    ymax = isqrt(lim // d)
    for y in range(-ymax, ymax + 1):
        disc4 = lim - d * y * y
        s = isqrt(disc4)
        by = b * y
        cy = c * y * y
        # integer x-range is exactly |2 a x + b y| <= isqrt(disc4)
        xlo = -((by + s) // (2 * a))
        xhi = (s - by) // (2 * a)
        for x in range(xlo, xhi + 1):
            coeffs[(a * x + by) * x + cy] += 1
    return tuple(coeffs)


def theta_series(f, n: int) -> PowerSeries:
    """Theta series of a positive definite form: [q^k] counts f(x, y) = k."""
    a, b, c = f
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise ValueError(f"({a},{b},{c}) is not positive definite")
    return PowerSeries(_theta_coeffs(a, b, c, n))


@lru_cache(maxsize=512)
def _euler_coeffs(n: int, scale: int, sign: int) -> tuple[int, ...]:
    # E(q) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k (pentagonal numbers)
    coeffs = [0] * (n + 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if scale * e <= n:
                hit = True
                v = -1 if kk % 2 else 1
                if sign < 0 and e % 2:
                    v = -v
                coeffs[scale * e] += v
        if not hit:
            break
        k += 1
    return tuple(coeffs)


def euler_series(n: int, scale: int = 1, sign: int = 1) -> PowerSeries:
    """E(q^scale) for sign=+1, E(-(q^scale)) for sign=-1, through q^n."""
    if scale < 1 or sign not in (1, -1):
        raise ValueError("bad Euler product parameters")
    return PowerSeries(_euler_coeffs(n, scale, sign))


@dataclass(frozen=True)
class EtaFactor:
    scale: int
    exponent: int
    sign: int = 1  # +1 for E(q^scale), -1 for E(-q^scale)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """q^leading_power * prod E(sign * q^scale)^exponent."""

    leading_power: int
    factors: tuple[EtaFactor, ...]

    def __post_init__(self):
        if self.leading_power < 0:
            raise ValueError("leading power must be >= 0")
        for f in self.factors:
            if f.scale < 1 or f.sign not in (1, -1):
                raise ValueError(f"invalid eta factor {f}")


def eta_quotient(spec: EtaQuotientSpec, n: int) -> PowerSeries:
    """Exact expansion of an eta quotient through q^n.

    Denominator factors are expanded by power series reciprocal, which is
    exact since every E-series has constant term 1.
    """
    num = monomial(spec.leading_power, n)
    den = one_series(n)
    for f in spec.factors:
        base = euler_series(n, f.scale, f.sign)
        if f.exponent > 0:
            num = num * base ** f.exponent
        elif f.exponent < 0:
            den = den * base ** (-f.exponent)
    if den.is_zero() or den.coeffs[0] != 1:
        raise ValueError("eta denominator must have constant term 1")
    return num * den.recip()


def phi_series(n: int) -> PowerSeries:
    """phi(q) = sum over all integers of q^{k^2}."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    k = 1
    while k * k <= n:
        coeffs[k * k] = 2
        k += 1
    return PowerSeries(coeffs)


def psi_series(n: int) -> PowerSeries:
    """psi(q) = sum over all integers of q^{2k^2 - k}; support is the triangular numbers."""
    coeffs = [0] * (n + 1)
    k = 0
    while k * (k + 1) // 2 <= n:
        coeffs[k * (k + 1) // 2] = 1
        k += 1
    return PowerSeries(coeffs)
