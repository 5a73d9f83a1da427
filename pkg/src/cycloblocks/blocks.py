"""Block decomposition of Phi_{mp}.

Write p = q*m + r with 0 <= r < m.  Phi_{mp} splits into phi(m) windows of
width p (radix x^p), and each window splits into q windows of width m plus a
final window of width r (radix x^m).  Every width-m window of window i equals
a single base block

    base(i) = -rotate(rem_cyclic(Psi_m * expand(truncate(Phi_m, i+1), r, m), m), i*r, m)

and the final width-r window is its truncation.  So phi(m) blocks of length m
determine the whole polynomial of degree phi(m)*(p-1), and any coefficient is
an O(1) table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import InvalidInstance, phi_mp_oracle, phi_oracle, psi_oracle, validate_pair
from .numtheory import euler_phi, rem_quo
from .polyring import IntPoly, rem_cyclic, rem_pow


# The four operators on polynomials of degree < m.  Rotation and expansion
# amounts may be negative; they are reduced with the non-negative remainder.

def truncate(f: IntPoly, s: int) -> IntPoly:
    """Keep the coefficients of x^0 .. x^{s-1}."""
    return rem_pow(f, s)


def flip(f: IntPoly, m: int) -> IntPoly:
    """Reverse the coefficient window of width m: x^{m-1} * f(1/x)."""
    _require_block(f, m)
    return IntPoly(f[m - 1 - t] for t in range(m))


def rotate(f: IntPoly, s: int, m: int) -> IntPoly:
    """Cyclically shift coefficient positions down by s within width m.

    Equals the remainder of x^{m - (s mod m)} * f modulo x^m - 1, so
    rotate(f, s, m)[t] == f[(t + s) mod m].
    """
    _require_block(f, m)
    s %= m
    return IntPoly(f[(t + s) % m] for t in range(m))


def expand(f: IntPoly, s: int, m: int) -> IntPoly:
    """Substitute x -> x^{s mod m}; s mod m == 0 collapses to f(1)."""
    _require_block(f, m)
    s %= m
    if s == 0:
        return IntPoly([sum(f.coeffs)])
    out = [0] * (m * s)
    for k, c in enumerate(f.coeffs):
        out[k * s] = c
    return IntPoly(out)


def _require_block(f: IntPoly, m: int) -> None:
    if m < 1:
        raise ValueError("block width must be positive")
    if f.degree >= m:
        raise ValueError(f"operand degree {f.degree} not below block width {m}")


@dataclass(frozen=True)
class BlockContext:
    """One decomposition instance: m, p, and everything derived from them."""

    m: int
    p: int
    q: int  # quo(p, m)
    r: int  # rem(p, m), non-negative
    phi_m: int  # euler_phi(m) = number of base blocks
    cyclo_m: IntPoly  # Phi_m
    inv_cyclo_m: IntPoly  # Psi_m = (x^m - 1) / Phi_m

    @property
    def psi_deg(self) -> int:
        """Degree of the inverse cyclotomic polynomial, m - phi(m)."""
        return self.m - self.phi_m


def validate_instance(m: int, p: int) -> None:
    """Preconditions for the block machinery; stricter than the oracles.

    p must exceed euler_phi(m) so that the top radix-p window carries block
    index phi(m) - 1; smaller primes are rejected rather than answered
    undefined.
    """
    validate_pair(m, p)
    phi_m = euler_phi(m)
    if p <= phi_m:
        raise InvalidInstance(f"p must exceed euler_phi(m) = {phi_m}")


def make_context(m: int, p: int) -> BlockContext:
    validate_instance(m, p)
    q, r = rem_quo(p, m)
    return BlockContext(
        m=m,
        p=p,
        q=q,
        r=r,
        phi_m=euler_phi(m),
        cyclo_m=phi_oracle(m),
        inv_cyclo_m=psi_oracle(m),
    )


def block_formula(ctx: BlockContext, i: int) -> IntPoly:
    """The base block for window i, directly from the closed formula.

    Computes Psi_m * expand(truncate(Phi_m, i+1), r), reduces modulo x^m - 1
    before rotating (keeps intermediates below degree 2m), rotates by i*r and
    negates.  For i >= phi(m) the truncation is all of Phi_m and the result
    cancels to the zero block.
    """
    if i < 0:
        raise ValueError("block index must be non-negative")
    head = expand(truncate(ctx.cyclo_m, i + 1), ctx.r, ctx.m)
    reduced = rem_cyclic(ctx.inv_cyclo_m * head, ctx.m)
    return -rotate(reduced, i * ctx.r, ctx.m)


def final_block(ctx: BlockContext, i: int) -> IntPoly:
    """The width-r final window of window i: the base block truncated at r."""
    return truncate(block_formula(ctx, i), ctx.r)


def g_block(ctx: BlockContext, i: int, j: int) -> IntPoly:
    """Window (i, j) of the reciprocal-series product Psi_m / (1 - x^m).

    That series has coefficient e_t = psi_m[t mod m], so the window is read
    off by index folding; it must equal rotate(Psi_m, i*r, m) for j < q and
    its r-truncation for j = q.
    """
    if not 0 <= j <= ctx.q:
        raise ValueError(f"j must lie in 0..{ctx.q}")
    width = ctx.m if j < ctx.q else ctx.r
    psi = ctx.inv_cyclo_m
    return IntPoly(psi[(i * ctx.p + j * ctx.m + k) % ctx.m] for k in range(width))


@dataclass(frozen=True)
class BlockTable:
    """The phi(m) base blocks, padded to length m for direct indexing.

    Padded rows deliberately relax the trailing-zero normalization of
    IntPoly: coeff_at needs base[i][t] to be a plain tuple lookup.
    """

    ctx: BlockContext
    base: tuple[tuple[int, ...], ...]

    def block(self, i: int) -> IntPoly:
        """Base block i as a normalized polynomial."""
        return IntPoly(self.base[i])

    @property
    def footprint(self) -> int:
        """Number of stored coefficients: phi(m) * m."""
        return sum(len(row) for row in self.base)


def _pad(f: IntPoly, width: int) -> tuple[int, ...]:
    return f.coeffs + (0,) * (width - len(f.coeffs))


def build_table(ctx: BlockContext) -> BlockTable:
    """All base blocks via the closed formula."""
    rows = tuple(_pad(block_formula(ctx, i), ctx.m) for i in range(ctx.phi_m))
    return BlockTable(ctx=ctx, base=rows)


def symmetric_table(ctx: BlockContext) -> BlockTable:
    """Base blocks computing only the lower half through the formula.

    The upper half comes from the symmetry law: block(phi(m)-1-i) is
    rotate(flip(block(i))) by phi(m)-1-r.  phi(m) is even for m >= 3, so the
    pairing is a perfect matching.  Must equal build_table entrywise.
    """
    n = ctx.phi_m
    rows: list[tuple[int, ...] | None] = [None] * n
    for i in range((n + 1) // 2):
        low = block_formula(ctx, i)
        rows[i] = _pad(low, ctx.m)
        rows[n - 1 - i] = _pad(rotate(flip(low, ctx.m), n - 1 - ctx.r, ctx.m), ctx.m)
    return BlockTable(ctx=ctx, base=tuple(rows))


def partition_from_oracle(m: int, p: int) -> list[list[IntPoly]]:
    """Slice the brute-force Phi_{mp} into its (i, j) windows.

    Row i (0 .. phi(m)-1) is the radix-x^p window starting at i*p; within it,
    entry j (0 .. q) is the radix-x^m window of width m, except width r for
    j = q.  Entirely oracle-driven: no block formula involved.
    """
    validate_instance(m, p)
    q, r = rem_quo(p, m)
    phi_m = euler_phi(m)
    coeffs = phi_mp_oracle(m, p)
    table = []
    for i in range(phi_m):
        row = []
        for j in range(q + 1):
            width = m if j < q else r
            start = i * p + j * m
            row.append(IntPoly(coeffs[start + k] for k in range(width)))
        table.append(row)
    return table


def assemble_phi_mp(table: BlockTable) -> IntPoly:
    """Reconstruct Phi_{mp} from the base blocks.

    Window i gets q copies of base block i at offsets i*p + j*m, then the
    r-truncated copy at i*p + q*m; windows abut exactly since q*m + r = p.
    """
    ctx = table.ctx
    out = [0] * (ctx.phi_m * ctx.p)
    for i, row in enumerate(table.base):
        start = i * ctx.p
        for j in range(ctx.q):
            off = start + j * ctx.m
            out[off : off + ctx.m] = row
        off = start + ctx.q * ctx.m
        out[off : off + ctx.r] = row[: ctx.r]
    return IntPoly(out)


def coeff_at(table: BlockTable, k: int) -> int:
    """Coefficient of x^k in Phi_{mp}, in O(1) from the base blocks."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    ctx = table.ctx
    i, offset = rem_quo(k, ctx.p)
    if i >= ctx.phi_m:
        return 0
    j, t = rem_quo(offset, ctx.m)
    if j == ctx.q and t >= ctx.r:  # unreachable when 0 < r, kept as a guard
        return 0
    return table.base[i][t]
