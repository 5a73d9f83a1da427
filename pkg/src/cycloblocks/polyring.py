"""Exact dense univariate polynomial arithmetic over the integers.

A polynomial is a tuple of arbitrary-precision coefficients starting with the
constant term, so 1 - 2x + x^3 is IntPoly([1, -2, 0, 1]).  Values are
immutable and always normalized: the stored coefficient sequence never ends
in a zero, and the zero polynomial stores nothing at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

#: Degree of the zero polynomial.  A true sentinel (compares below every
#: integer) rather than -1, so off-by-one degree arithmetic cannot silently
#: absorb it.
NEG_INF = float("-inf")


class NonZeroRemainder(Exception):
    """Exact polynomial division left a remainder."""


@dataclass(frozen=True, init=False)
class IntPoly:
    """A polynomial over Z with dense coefficients, constant term first.

    >>> IntPoly([1, 1]) * IntPoly([-1, 1])
    IntPoly('x^2 - 1')
    >>> IntPoly([1, 2, 0, 0]).coeffs   # trailing zeros are trimmed
    (1, 2)
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = tuple(coeffs)
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        """Coefficient of x^k; zero beyond the stored degree."""
        if k < 0:
            raise IndexError("exponents are non-negative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return ZERO
        # Schoolbook convolution, skipping zero terms of the sparser operand.
        a, b = self.coeffs, other.coeffs
        if _nonzero_count(a) > _nonzero_count(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def pretty(self) -> str:
        """Render like '1 - x + x^3', omitting unit coefficients and x^0."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = ("-" if c < 0 else "") if not parts else (" - " if c < 0 else " + ")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly('{self.pretty()}')"


ZERO = IntPoly()
ONE = IntPoly([1])


def _nonzero_count(cs: tuple[int, ...]) -> int:
    return sum(1 for c in cs if c)


def monomial(k: int, c: int = 1) -> IntPoly:
    """The polynomial c * x^k."""
    return IntPoly([0] * k + [c])


def x_pow_minus_one(n: int) -> IntPoly:
    """x^n - 1."""
    return IntPoly([-1] + [0] * (n - 1) + [1])


def shift_mul(f: IntPoly, k: int) -> IntPoly:
    """Multiply by x^k, k >= 0."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    if f.is_zero():
        return ZERO
    return IntPoly((0,) * k + f.coeffs)


def rem_pow(f: IntPoly, s: int) -> IntPoly:
    """Remainder of f modulo x^s: keep the coefficients of x^0 .. x^{s-1}."""
    if s < 0:
        raise ValueError("truncation point must be non-negative")
    return IntPoly(f.coeffs[:s])


def rem_cyclic(f: IntPoly, m: int) -> IntPoly:
    """Remainder of f modulo x^m - 1: fold coefficient k onto k mod m."""
    if m < 1:
        raise ValueError("modulus degree must be positive")
    out = [0] * m
    for k, c in enumerate(f.coeffs):
        out[k % m] += c
    return IntPoly(out)


def div_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient of an exact division over Z.

    Raises NonZeroRemainder if den does not divide num exactly; a remainder
    here always means a caller bug, so nothing is ever truncated.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return ZERO
    dn, dd = len(num.coeffs) - 1, len(den.coeffs) - 1
    if dn < dd:
        raise NonZeroRemainder(f"degree {dn} < divisor degree {dd}")
    lead = den.coeffs[-1]
    # Terms of the divisor below the leading one, skipping zeros: division by
    # a sparse divisor (e.g. x^d - 1) then costs O(deg) per nonzero term.
    lower = [(j, d) for j, d in enumerate(den.coeffs[:-1]) if d]
    rem = list(num.coeffs)
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = rem[k + dd]
        if c == 0:
            continue
        q, leftover = divmod(c, lead)
        if leftover:
            raise NonZeroRemainder(f"coefficient {c} not divisible by {lead}")
        quot[k] = q
        rem[k + dd] = 0
        for j, d in lower:
            rem[k + j] -= q * d
    if any(rem):
        raise NonZeroRemainder("division left a non-zero remainder")
    return IntPoly(quot)


def compose_power(f: IntPoly, k: int) -> IntPoly:
    """Substitute x -> x^k, k >= 1: coefficient of x^i moves to x^{i*k}."""
    if k < 1:
        raise ValueError("exponent must be positive")
    if f.is_zero():
        return ZERO
    out = [0] * ((len(f.coeffs) - 1) * k + 1)
    for i, c in enumerate(f.coeffs):
        out[i * k] = c
    return IntPoly(out)
