import random
from math import gcd

import pytest

from qgenus.arith import (
    factorize,
    is_prime,
    is_squarefree,
    kronecker,
    primes_up_to,
    smallest_prime_factor_sieve,
    xgcd,
)


def test_xgcd():
    rng = random.Random(7)
    for _ in range(500):
        a = rng.randrange(-10**6, 10**6)
        b = rng.randrange(-10**6, 10**6)
        g, x, y = xgcd(a, b)
        assert g == gcd(a, b)
        assert a * x + b * y == g


def test_kronecker_specific_values():
    assert kronecker(5, 11) == 1
    assert kronecker(-15, 2) == 1  # -15 = 1 (mod 8)
    assert kronecker(-20, 5) == 0
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(2, 0) == 0
    assert kronecker(7, 1) == 1
    assert kronecker(4, 2) == 0
    # (a|2) by residue mod 8
    for a, want in ((1, 1), (7, 1), (3, -1), (5, -1)):
        assert kronecker(a, 2) == want
        assert kronecker(a + 8, 2) == want


def test_kronecker_euler_criterion():
    # Legendre symbol via a^((p-1)/2) mod p for every odd prime p < 200
    for p in primes_up_to(199)[1:]:
        for a in range(p):
            e = pow(a, (p - 1) // 2, p)
            want = 0 if e == 0 else (1 if e == 1 else -1)
            assert kronecker(a, p) == want, (a, p)


def test_kronecker_completely_multiplicative():
    rng = random.Random(11)
    for _ in range(10_000):
        a = rng.randrange(-200, 201)
        m = rng.randrange(-60, 61)
        n = rng.randrange(-60, 61)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)
    for _ in range(10_000):
        a = rng.randrange(-60, 61)
        b = rng.randrange(-60, 61)
        n = rng.randrange(-200, 201)
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


def test_kronecker_negative_bottom():
    for a in range(-30, 31):
        if a == 0:
            continue
        sign = -1 if a < 0 else 1
        assert kronecker(a, -1) == sign
        for n in range(1, 30):
            assert kronecker(a, -n) == sign * kronecker(a, n)


def test_is_prime_against_sieve():
    primes = set(primes_up_to(10_000))
    for n in range(10_000):
        assert is_prime(n) == (n in primes)


def test_factorize():
    assert factorize(1) == []
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    spf = smallest_prime_factor_sieve(5000)
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randrange(1, 5000)
        fac = factorize(n, spf)
        assert fac == factorize(n)
        prod = 1
        for p, e in fac:
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(15)
    assert not is_squarefree(12)
    assert not is_squarefree(49)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
