"""Elementary number theory: factorization, totient, Moebius, remainders.

Everything is trial-division based; inputs live at desk scale (<= ~10^7).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes increasing."""

    prime_powers: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = 1
        for p, e in self.prime_powers:
            n *= p**e
        return n


def factor(n: int) -> Factorization:
    """Factor n >= 1 by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def euler_phi(n: int) -> int:
    """Euler's totient."""
    phi = 1
    for p, e in factor(n).prime_powers:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def moebius(n: int) -> int:
    """Moebius function: 0 on a square factor, else (-1)^#primes."""
    pairs = factor(n).prime_powers
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_odd_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return n % 2 == 1 and all(e == 1 for _, e in factor(n).prime_powers)


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rem_quo(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b >= 1 with 0 <= r < b.

    The remainder is non-negative even for negative a (floor division), so
    a = q*b + r always holds with r in range(b).
    """
    if b < 1:
        raise ValueError("modulus must be positive")
    q, r = divmod(a, b)
    return q, r


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo < p < hi (both bounds exclusive)."""
    return [p for p in range(max(lo + 1, 2), hi) if is_prime(p)]


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
