"""Executable checks for the block-structure laws, plus a sweep engine.

Each checker compares oracle-sliced data against the law it verifies and
returns a CheckReport; a failure carries the first counterexample location.
The data a checker consumes can be injected through keyword arguments, which
is how the mutation tests prove the checkers are not vacuously true.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import combinations

from .blocks import (
    BlockContext,
    BlockTable,
    block_formula,
    build_table,
    assemble_phi_mp,
    flip,
    g_block,
    make_context,
    partition_from_oracle,
    rotate,
    truncate,
    validate_instance,
)
from .cyclotomic import InvalidInstance, phi_mp_oracle
from .numtheory import euler_phi, is_odd_squarefree, primes_in_range
from .polyring import IntPoly, rem_cyclic

CHECK_NAMES = (
    "repetition",
    "truncation",
    "symmetry",
    "invariance",
    "semi_invariance",
    "cancel",
    "lemma_g",
    "lemma_fg",
    "assembly",
    "vanish_tail",
)

CSV_COLUMNS = ("m", "p", "p_tilde", "check", "pass", "detail")


@dataclass(frozen=True)
class CheckReport:
    """Pass/fail record of one structural identity on one instance."""

    m: int
    p: int
    p_tilde: int | None
    check: str
    passed: bool
    detail: str | None  # first counterexample; present iff the check failed

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "p": self.p,
                "p_tilde": self.p_tilde,
                "check": self.check,
                "pass": self.passed,
                "detail": self.detail,
            }
        )

    def to_csv_row(self) -> list[str]:
        return [
            str(self.m),
            str(self.p),
            "" if self.p_tilde is None else str(self.p_tilde),
            self.check,
            "true" if self.passed else "false",
            self.detail or "",
        ]


def _report(m, p, check, detail, p_tilde=None) -> CheckReport:
    return CheckReport(m=m, p=p, p_tilde=p_tilde, check=check, passed=detail is None, detail=detail)


def _first_mismatch(a: IntPoly, b: IntPoly) -> int | None:
    """Lowest exponent where a and b differ, or None if equal."""
    if a == b:
        return None
    top = max(len(a.coeffs), len(b.coeffs))
    return next(k for k in range(top) if a[k] != b[k])


def check_repetition(m: int, p: int, *, partition=None) -> CheckReport:
    """All width-m windows of one radix-p window agree: slice (i,j) == (i,0)."""
    validate_instance(m, p)
    if partition is None:
        partition = partition_from_oracle(m, p)
    q = p // m
    for i, row in enumerate(partition):
        for j in range(1, q):
            e = _first_mismatch(row[j], row[0])
            if e is not None:
                return _report(m, p, "repetition", f"i={i}, j={j}, exponent={e}")
    return _report(m, p, "repetition", None)


def check_truncation(m: int, p: int, *, partition=None) -> CheckReport:
    """The final width-r window is the r-truncation of the base window."""
    validate_instance(m, p)
    if partition is None:
        partition = partition_from_oracle(m, p)
    q, r = divmod(p, m)
    for i, row in enumerate(partition):
        e = _first_mismatch(row[q], truncate(row[0], r))
        if e is not None:
            return _report(m, p, "truncation", f"i={i}, j={q}, exponent={e}")
    return _report(m, p, "truncation", None)


def check_symmetry(m: int, p: int, *, partition=None) -> CheckReport:
    """Base blocks i and phi(m)-1-i are rotate-flip images of each other.

    For p > m the oracle windows are full base blocks and both sides come
    straight from the partition.  For p < m (q = 0) the oracle only exposes
    r-truncations, so each full block is taken from the closed formula,
    anchored to its oracle window by truncation, and the law is checked on
    the anchored blocks.
    """
    validate_instance(m, p)
    if partition is None:
        partition = partition_from_oracle(m, p)
    q, r = divmod(p, m)
    phi_m = euler_phi(m)
    amount = phi_m - 1 - r
    if q >= 1:
        full = [row[0] for row in partition]
    else:
        ctx = make_context(m, p)
        full = [block_formula(ctx, i) for i in range(phi_m)]
        for i, row in enumerate(partition):
            e = _first_mismatch(row[0], truncate(full[i], r))
            if e is not None:
                return _report(m, p, "symmetry", f"i={i}, j=0, exponent={e}")
    for i in range(phi_m):
        ii = phi_m - 1 - i
        e = _first_mismatch(full[ii], rotate(flip(full[i], m), amount, m))
        if e is not None:
            return _report(m, p, "symmetry", f"i={i}, i'={ii}, exponent={e}")
    return _report(m, p, "symmetry", None)


def _base_blocks(m: int, p: int, partition) -> list[IntPoly]:
    if partition is None:
        partition = partition_from_oracle(m, p)
    return [row[0] for row in partition]


def check_invariance(m: int, p: int, p_tilde: int, *, partition=None, partition_tilde=None) -> CheckReport:
    """Base blocks agree across primes in the same residue class mod m.

    When the smaller prime is below m its windows are r-truncated, so the
    other instance's full blocks are truncated to match.
    """
    validate_instance(m, p)
    validate_instance(m, p_tilde)
    if (p_tilde - p) % m != 0:
        raise InvalidInstance("p_tilde is not congruent to p modulo m")
    base = _base_blocks(m, p, partition)
    base_t = _base_blocks(m, p_tilde, partition_tilde)
    # A prime below m exposes only the first rem(p, m) = p coefficients of
    # its blocks, so compare on the widest window both instances observe.
    width = min(m, p, p_tilde)
    for i in range(euler_phi(m)):
        e = _first_mismatch(truncate(base[i], width), truncate(base_t[i], width))
        if e is not None:
            return _report(m, p, "invariance", f"i={i}, exponent={e}", p_tilde=p_tilde)
    return _report(m, p, "invariance", None, p_tilde=p_tilde)


def check_semi_invariance(m: int, p: int, p_tilde: int, *, partition=None, partition_tilde=None) -> CheckReport:
    """Across primes with p + p_tilde divisible by m, base blocks invert:
    block_tilde(i) == -rotate(flip(block(i)), phi(m)-1).

    The relation is an involution, so when one side is only observable as an
    r-truncation (its prime below m) the other side's full oracle block is
    transformed and truncated instead.
    """
    validate_instance(m, p)
    validate_instance(m, p_tilde)
    if (p_tilde + p) % m != 0:
        raise InvalidInstance("p_tilde + p is not divisible by m")
    phi_m = euler_phi(m)
    base = _base_blocks(m, p, partition)
    base_t = _base_blocks(m, p_tilde, partition_tilde)

    def transformed(f: IntPoly) -> IntPoly:
        return -rotate(flip(f, m), phi_m - 1, m)

    for i in range(phi_m):
        if p > m:  # base[i] is a full block
            lhs, rhs = base_t[i], transformed(base[i])
            if p_tilde < m:
                lhs, rhs = lhs, truncate(rhs, p_tilde % m)
        else:  # p < m: transform the full block of the other side
            lhs, rhs = base[i], truncate(transformed(base_t[i]), p % m)
        e = _first_mismatch(lhs, rhs)
        if e is not None:
            return _report(m, p, "semi_invariance", f"i={i}, exponent={e}", p_tilde=p_tilde)
    return _report(m, p, "semi_invariance", None, p_tilde=p_tilde)


def check_cancel(m: int, p: int, *, ctx: BlockContext | None = None) -> CheckReport:
    """Psi_m * expand(Phi_m, r) vanishes modulo x^m - 1, under any rotation."""
    validate_instance(m, p)
    if ctx is None:
        ctx = make_context(m, p)
    from .blocks import expand  # local import keeps module top uncluttered

    reduced = rem_cyclic(ctx.inv_cyclo_m * expand(ctx.cyclo_m, ctx.r, ctx.m), ctx.m)
    for s in (0, 1, m - 1, -1):
        rotated = rotate(reduced, s, m)
        if not rotated.is_zero():
            e = next(k for k, c in enumerate(rotated.coeffs) if c)
            return _report(m, p, "cancel", f"s={s}, exponent={e}")
    return _report(m, p, "cancel", None)


def check_lemma_g(m: int, p: int, *, ctx: BlockContext | None = None, g_table=None) -> CheckReport:
    """Index-folded series windows equal rotations of Psi_m (truncated at j=q)."""
    validate_instance(m, p)
    if ctx is None:
        ctx = make_context(m, p)
    if g_table is None:
        g_table = [[g_block(ctx, i, j) for j in range(ctx.q + 1)] for i in range(ctx.phi_m)]
    for i in range(ctx.phi_m):
        expected = rotate(ctx.inv_cyclo_m, i * ctx.r, ctx.m)
        for j in range(ctx.q + 1):
            want = expected if j < ctx.q else truncate(expected, ctx.r)
            e = _first_mismatch(g_table[i][j], want)
            if e is not None:
                return _report(m, p, "lemma_g", f"i={i}, j={j}, exponent={e}")
    return _report(m, p, "lemma_g", None)


def check_lemma_fg(m: int, p: int, *, partition=None, ctx: BlockContext | None = None) -> CheckReport:
    """Every oracle window (i,j) equals -sum_{s<=i} a_s * g(i-s, j), a_s from Phi_m."""
    validate_instance(m, p)
    if partition is None:
        partition = partition_from_oracle(m, p)
    if ctx is None:
        ctx = make_context(m, p)
    for i, row in enumerate(partition):
        for j in range(ctx.q + 1):
            acc = IntPoly()
            for s in range(i + 1):
                a_s = ctx.cyclo_m[s]
                if a_s:
                    acc = acc + g_block(ctx, i - s, j) * a_s
            e = _first_mismatch(row[j], -acc)
            if e is not None:
                return _report(m, p, "lemma_fg", f"i={i}, j={j}, exponent={e}")
    return _report(m, p, "lemma_fg", None)


def check_assembly(m: int, p: int, *, table: BlockTable | None = None) -> CheckReport:
    """Block reassembly reproduces the brute-force Phi_{mp} exactly."""
    validate_instance(m, p)
    if table is None:
        table = build_table(make_context(m, p))
    e = _first_mismatch(assemble_phi_mp(table), phi_mp_oracle(m, p))
    if e is not None:
        return _report(m, p, "assembly", f"exponent={e}")
    return _report(m, p, "assembly", None)


def check_vanish_tail(m: int, p: int, *, ctx: BlockContext | None = None) -> CheckReport:
    """The closed formula yields the zero block for indices past phi(m)-1."""
    validate_instance(m, p)
    if ctx is None:
        ctx = make_context(m, p)
    for i in range(ctx.phi_m, ctx.phi_m + 4):
        blk = block_formula(ctx, i)
        if not blk.is_zero():
            e = next(k for k, c in enumerate(blk.coeffs) if c)
            return _report(m, p, "vanish_tail", f"i={i}, exponent={e}")
    return _report(m, p, "vanish_tail", None)


INTRA_CHECKS = {
    "repetition": check_repetition,
    "truncation": check_truncation,
    "symmetry": check_symmetry,
    "cancel": check_cancel,
    "lemma_g": check_lemma_g,
    "lemma_fg": check_lemma_fg,
    "assembly": check_assembly,
    "vanish_tail": check_vanish_tail,
}


@dataclass(frozen=True)
class SkippedInstance:
    """An instance the sweep could not run, with the rejection reason."""

    m: int
    p: int
    reason: str


@dataclass
class SweepResult:
    reports: list[CheckReport]
    skipped: list[SkippedInstance]

    @property
    def failures(self) -> list[CheckReport]:
        return [rep for rep in self.reports if not rep.passed]


def sweep(m_list: list[int], p_limit: int) -> SweepResult:
    """Run every check on every admissible instance below p_limit.

    For each m and each prime euler_phi(m) < p < p_limit coprime to m, all
    single-instance checks run; invariance runs on every prime pair in the
    same residue class mod m, semi-invariance on every pair summing to 0 mod
    m.  Invalid m values are recorded as skipped rather than failed.  Reports
    come back sorted by (m, p, check, p_tilde) no matter how they ran.
    """
    reports: list[CheckReport] = []
    skipped: list[SkippedInstance] = []
    for m in sorted(set(m_list)):
        phi_m = euler_phi(m)
        primes = [p for p in primes_in_range(phi_m, p_limit) if m % p != 0]
        if m < 3 or not is_odd_squarefree(m):
            reason = "m must be >= 3" if m < 3 else "m must be odd and squarefree"
            skipped.extend(SkippedInstance(m, p, reason) for p in primes)
            continue
        partitions = {p: partition_from_oracle(m, p) for p in primes}
        for p in primes:
            part = partitions[p]
            reports.append(check_repetition(m, p, partition=part))
            reports.append(check_truncation(m, p, partition=part))
            reports.append(check_symmetry(m, p, partition=part))
            reports.append(check_cancel(m, p))
            reports.append(check_lemma_g(m, p))
            reports.append(check_lemma_fg(m, p, partition=part))
            reports.append(check_assembly(m, p))
            reports.append(check_vanish_tail(m, p))
        for p, pt in combinations(primes, 2):
            if (pt - p) % m == 0:
                reports.append(
                    check_invariance(m, p, pt, partition=partitions[p], partition_tilde=partitions[pt])
                )
            if (pt + p) % m == 0:
                reports.append(
                    check_semi_invariance(m, p, pt, partition=partitions[p], partition_tilde=partitions[pt])
                )
    reports.sort(key=lambda rep: (rep.m, rep.p, rep.check, rep.p_tilde or 0))
    return SweepResult(reports=reports, skipped=skipped)


def reports_to_jsonl(reports: list[CheckReport]) -> str:
    return "".join(rep.to_json_line() + "\n" for rep in reports)


def reports_to_csv(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(rep.to_csv_row())
    return buf.getvalue()
