"""Separated partitions on the abacus and the Mullineux splitting theorems.

Fix a union I of residue classes mod e with complement Ibar, c = |I| and
cbar = e - c, and an n-bead display (e | n).  Reading only the I-positions
(in order, renumbered from 0) gives a c-runner display for a partition
la_I, and likewise la_Ibar on the complement.  A partition is I-separated
when its first empty I-position comes after its last occupied
Ibar-position.  The splitting theorem computes m_e(la') for separated
partitions from m_c and m_cbar on the two halves; iterating it over
runners gives the quotient-separated description of the Mullineux map.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .abacus import (
    Abacus,
    decode,
    default_beads,
    e_core,
    e_quotient,
    encode,
    from_core_and_quotient,
    restrict_to_classes,
    runner_profile,
)
from .mullineux import mullineux
from .partitions import Partition


@dataclass(frozen=True)
class SplitContext:
    """Runner split data: modulus e, residue set I, bead count n and the
    number u of beads on I-positions (None when not yet pinned)."""

    e: int
    residues: frozenset[int]
    n: int
    u: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(int(i) for i in self.residues))
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if not self.residues or any(i < 0 or i >= self.e for i in self.residues):
            raise ValueError(f"I must be a nonempty subset of [0, {self.e})")
        if len(self.residues) >= self.e:
            raise ValueError("I must be a proper subset of the residue classes")
        if self.n <= 0 or self.n % self.e:
            raise ValueError(f"bead count {self.n} must be a positive multiple of {self.e}")
        if self.u is not None and not 0 <= self.u <= self.n:
            raise ValueError(f"u = {self.u} outside [0, {self.n}]")

    @property
    def c(self) -> int:
        return len(self.residues)

    @property
    def c_bar(self) -> int:
        return self.e - len(self.residues)

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.e)) - self.residues

    def with_u(self, u: int) -> "SplitContext":
        return replace(self, u=u)


class SplitResult(NamedTuple):
    lambda_I: Partition
    lambda_Ibar: Partition
    u: int


def _position_of(residues: frozenset[int], e: int, k: int) -> int:
    """The k-th (0-indexed) abacus position whose residue lies in the set."""
    res = sorted(residues)
    c = len(res)
    return (k // c) * e + res[k % c]


def _local_betas(la: Partition, beads: int) -> set[int]:
    if beads < len(la.parts):
        raise ValueError(f"need at least {len(la.parts)} beads, got {beads}")
    return {la.part(r) + beads - r for r in range(1, beads + 1)}


def _combine_positions(beta: Partition, gamma: Partition, ctx: SplitContext) -> frozenset[int]:
    if ctx.u is None:
        raise ValueError("the context must fix u to combine")
    occ = {_position_of(ctx.residues, ctx.e, k) for k in _local_betas(beta, ctx.u)}
    occ |= {_position_of(ctx.complement, ctx.e, k) for k in _local_betas(gamma, ctx.n - ctx.u)}
    return frozenset(occ)


def _separated_positions(occupied: frozenset[int], ctx: SplitContext) -> bool:
    res = ctx.residues
    e = ctx.e
    last_bar = max((p for p in occupied if p % e not in res), default=-1)
    k = 0
    while True:
        p = _position_of(res, e, k)
        if p not in occupied:
            return p > last_bar
        k += 1


def is_separated(la: Partition, ctx: SplitContext) -> bool:
    """True if the first empty I-position comes after the last occupied
    complement position (read as -1 when no complement position is occupied)."""
    return _separated_positions(encode(la, ctx.n, ctx.e).occupied, ctx)


def split(la: Partition, ctx: SplitContext) -> SplitResult:
    """Read off (la_I, la_Ibar, u) from the n-bead display."""
    ab = encode(la, ctx.n, ctx.e)
    la_i = decode(restrict_to_classes(ab, ctx.residues))
    la_ibar = decode(restrict_to_classes(ab, ctx.complement))
    u = sum(1 for p in ab.occupied if p % ctx.e in ctx.residues)
    return SplitResult(la_i, la_ibar, u)


def combine(beta: Partition, gamma: Partition, ctx: SplitContext) -> Partition:
    """The unique partition with exactly u beads on I-positions whose halves
    are beta (on I) and gamma (on the complement)."""
    return decode(Abacus(ctx.e, _combine_positions(beta, gamma, ctx)))


def box_row(alpha: Partition, beta: Partition, c_bar: int) -> Partition:
    """Row-wise combination: r-th part = c_bar * alpha_r + beta_r."""
    rows = max(len(alpha), len(beta))
    return Partition(
        c_bar * alpha.part(r) + beta.part(r) for r in range(1, rows + 1)
    )


def box_col(alpha: Partition, beta: Partition, c: int) -> Partition:
    """Column-wise combination: the parts of beta together with c copies of
    each part of alpha, sorted decreasing."""
    parts = list(beta.parts)
    for p in alpha.parts:
        parts.extend([p] * c)
    return Partition(sorted(parts, reverse=True))


def build_split_pair(
    alpha: Partition, beta: Partition, gamma: Partition, ctx: SplitContext
) -> tuple[Partition, Partition]:
    """The pair (la, mu) of the splitting theorem.

    la has la_I = beta and la_Ibar = cbar*alpha + gamma row-wise; mu has
    mu_I = the parts of m_c(beta') with c copies of each part of alpha',
    and mu_Ibar = m_cbar(gamma').  beta must be c-restricted and gamma
    cbar-restricted (forced empty when c or cbar is 1).
    """
    c, cb = ctx.c, ctx.c_bar
    if not beta.is_e_restricted(c):
        raise ValueError(f"beta = {beta.parts} is not {c}-restricted")
    if not gamma.is_e_restricted(cb):
        raise ValueError(f"gamma = {gamma.parts} is not {cb}-restricted")
    la = combine(beta, box_row(alpha, gamma, cb), ctx)
    mu = combine(
        box_col(alpha.conjugate(), mullineux(beta.conjugate(), c), c),
        mullineux(gamma.conjugate(), cb),
        ctx,
    )
    return la, mu


@dataclass(frozen=True)
class SplitReport:
    """Outcome of one splitting-theorem instance."""

    verdict: str  # "holds" | "hypothesis-not-met" | "falsified"
    la: Partition
    mu: Partition
    la_separated: bool
    mu_separated: bool
    mullineux_image: Partition | None


def verify_split(
    alpha: Partition, beta: Partition, gamma: Partition, ctx: SplitContext
) -> SplitReport:
    """Check one instance: when both la and mu are I-separated, assert that
    m_e(la') = mu; otherwise report that the hypothesis is not met."""
    la, mu = build_split_pair(alpha, beta, gamma, ctx)
    occ_la = encode(la, ctx.n, ctx.e).occupied
    occ_mu = encode(mu, ctx.n, ctx.e).occupied
    la_sep = _separated_positions(occ_la, ctx)
    mu_sep = _separated_positions(occ_mu, ctx)
    if not (la_sep and mu_sep):
        return SplitReport("hypothesis-not-met", la, mu, la_sep, mu_sep, None)
    image = mullineux(la.conjugate(), ctx.e)
    verdict = "holds" if image == mu else "falsified"
    return SplitReport(verdict, la, mu, la_sep, mu_sep, image)


def _box_step(nu: Partition, ctx: SplitContext) -> Partition:
    """One column-box move towards the (e, cbar)-regularisation of an
    I-separated partition nu whose complement half is not cbar-restricted.

    Internal diagnostic for the single-step equivalence test.
    """
    cb = ctx.c_bar
    nu_i, nu_ibar, u = split(nu, ctx)
    s = next(
        (r for r in range(1, len(nu_ibar) + 1) if nu_ibar.part(r) - nu_ibar.part(r + 1) >= cb),
        None,
    )
    if s is None:
        raise ValueError(f"{nu_ibar.parts} is already {cb}-restricted")
    reduced = [p - cb if r < s else p for r, p in enumerate(nu_ibar.parts)]
    tau = Partition(p for p in reduced if p > 0)
    xi_i = box_col(Partition([s]), nu_i, ctx.c)
    return combine(xi_i, tau, ctx.with_u(u))


def quotient_sigma(la: Partition, e: int, n: int | None = None) -> tuple[int, ...]:
    """Runners ordered by (bead count, left-to-right position)."""
    if n is None:
        n = default_beads(la, e)
    if n % e or n < len(la.parts):
        raise ValueError(f"bead count {n} must be a multiple of {e} covering the parts")
    counts = runner_profile(encode(la, n, e))
    return tuple(sorted(range(e), key=lambda i: (counts[i], i)))


def is_quotient_separated(la: Partition, e: int, n: int | None = None) -> bool:
    """True if, for every pair of runners in sigma order, the last bead of
    the earlier runner precedes the first gap of the later one."""
    if n is None:
        n = default_beads(la, e)
    sigma = quotient_sigma(la, e, n)
    occ = encode(la, n, e).occupied
    last_occ = {}
    first_empty = {}
    for i in range(e):
        beads = [p for p in occ if p % e == i]
        last_occ[i] = max(beads, default=-1)
        p = i
        while p in occ:
            p += e
        first_empty[i] = p
    for k in range(e):
        for l in range(k + 1, e):
            if last_occ[sigma[k]] >= first_empty[sigma[l]]:
                return False
    return True


def paget_mu(la: Partition, e: int, n: int | None = None) -> Partition:
    """The quotient-shifted partner of an e-restricted, e-quotient-separated
    partition: same e-core, empty first quotient component in sigma order,
    and each later component the conjugate of its predecessor in la."""
    if n is None:
        n = default_beads(la, e)
    if not la.is_e_restricted(e):
        raise ValueError(f"{la.parts} is not {e}-restricted")
    if not is_quotient_separated(la, e, n):
        raise ValueError(f"{la.parts} is not {e}-quotient separated")
    sigma = quotient_sigma(la, e, n)
    quot = e_quotient(la, e, n)
    new_quot: list[Partition] = [Partition()] * e
    for k in range(2, e + 1):
        new_quot[sigma[k - 1]] = quot[sigma[k - 2]].conjugate()
    return from_core_and_quotient(e_core(la, e, n), new_quot, e)
