"""Brute-force oracles for cyclotomic and inverse cyclotomic polynomials.

These are the ground truth the block machinery is checked against.  Two
deliberately independent routes are kept: the Moebius product for Phi_n, and
substitution-and-divide for Phi_{mp}, so a bug in one cannot mask a bug in
the other.
"""

from __future__ import annotations

import functools
import math

from .numtheory import divisors, euler_phi, is_odd_squarefree, is_prime, moebius
from .polyring import ONE, IntPoly, compose_power, div_exact, x_pow_minus_one


class InvalidInstance(Exception):
    """The pair (m, p) does not satisfy the instance preconditions."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def validate_pair(m: int, p: int) -> None:
    """Require m odd squarefree >= 3, p prime, gcd(m, p) = 1."""
    if m < 3:
        raise InvalidInstance("m must be >= 3")
    if not is_odd_squarefree(m):
        raise InvalidInstance("m must be odd and squarefree")
    if not is_prime(p):
        raise InvalidInstance("p must be prime")
    if math.gcd(m, p) != 1:
        raise InvalidInstance("p divides m")


@functools.lru_cache(maxsize=None)
def phi_oracle(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, monic of degree euler_phi(n).

    Computed as the exact quotient of prod_{moebius(n/d)=1} (x^d - 1) by
    prod_{moebius(n/d)=-1} (x^d - 1) over the divisors d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num, den = ONE, ONE
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            num = num * x_pow_minus_one(d)
        elif mu == -1:
            den = den * x_pow_minus_one(d)
    result = div_exact(num, den)
    assert result.degree == euler_phi(n)
    return result


@functools.lru_cache(maxsize=None)
def psi_oracle(m: int) -> IntPoly:
    """The m-th inverse cyclotomic polynomial (x^m - 1) / Phi_m."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return ONE
    return div_exact(x_pow_minus_one(m), phi_oracle(m))


def expand_phi_mp(m: int, p: int) -> IntPoly:
    """Phi_{mp} by substitution-and-divide: Phi_m(x^p) / Phi_m.

    Uncached worker for phi_mp_oracle; benchmarks time this directly so a
    cache hit cannot fake a fast expansion.
    """
    validate_pair(m, p)
    phi_m = phi_oracle(m)
    return div_exact(compose_power(phi_m, p), phi_m)


@functools.lru_cache(maxsize=None)
def phi_mp_oracle(m: int, p: int) -> IntPoly:
    """Phi_{mp} for m odd squarefree >= 3 and p prime coprime to m."""
    return expand_phi_mp(m, p)
