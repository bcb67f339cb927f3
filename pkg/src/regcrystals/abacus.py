"""Abacus displays: bead configurations encoding partitions on e runners.

Positions 0, 1, 2, ... run left to right along successive rows of an
e-runner abacus, so position p sits on runner p mod e.  The n-bead display
of a partition puts beads at the beta-numbers lambda_r + n - r for
r = 1..n; conjugation truncates at a multiple m of e and places beads at
m - 1 - t for every empty position t < m.
"""

from __future__ import annotations

from collections.abc import Iterable

from .partitions import Partition, from_beta_numbers


class Abacus:
    """A finite set of occupied positions on an e-runner abacus."""

    __slots__ = ("e", "occupied")

    e: int
    occupied: frozenset[int]

    def __init__(self, e: int, occupied: Iterable[int]):
        e = int(e)
        if e < 1:
            raise ValueError("an abacus needs at least one runner")
        occ = frozenset(int(p) for p in occupied)
        if any(p < 0 for p in occ):
            raise ValueError("positions must be non-negative")
        self.e = e
        self.occupied = occ

    @property
    def n(self) -> int:
        """Number of beads."""
        return len(self.occupied)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Abacus)
            and self.e == other.e
            and self.occupied == other.occupied
        )

    def __hash__(self) -> int:
        return hash((self.e, self.occupied))

    def __repr__(self) -> str:
        return f"Abacus(e={self.e}, occupied={sorted(self.occupied)})"


def default_beads(la: Partition, e: int) -> int:
    """Smallest multiple of e that is >= len(la) + e."""
    rows = len(la.parts)
    return -(-(rows + e) // e) * e


def encode(la: Partition, n: int, e: int) -> Abacus:
    """The n-bead display for la: beads at lambda_r + n - r."""
    if n < len(la.parts):
        raise ValueError(f"need at least {len(la.parts)} beads, got {n}")
    return Abacus(e, {la.part(r) + n - r for r in range(1, n + 1)})


def decode(ab: Abacus) -> Partition:
    """The partition encoded by the display."""
    return from_beta_numbers(ab.occupied)


def conjugate_display(ab: Abacus, m: int) -> Abacus:
    """Truncate at position m and swap beads with gaps, rotated through 180 degrees.

    Decodes to the conjugate of decode(ab).  Requires m to be a multiple of
    the runner count and larger than every occupied position.
    """
    if m % ab.e:
        raise ValueError(f"m = {m} is not a multiple of e = {ab.e}")
    if ab.occupied and m <= max(ab.occupied):
        raise ValueError(f"m = {m} does not exceed the last bead")
    return Abacus(ab.e, {m - 1 - t for t in range(m) if t not in ab.occupied})


def runner_profile(ab: Abacus) -> dict[int, int]:
    """Bead count on each runner, keyed by runner label 0..e-1."""
    counts = {i: 0 for i in range(ab.e)}
    for p in ab.occupied:
        counts[p % ab.e] += 1
    return counts


def e_core(la: Partition, e: int, n: int | None = None) -> Partition:
    """The partition left after sliding every bead fully up its runner."""
    if n is None:
        n = default_beads(la, e)
    counts = runner_profile(encode(la, n, e))
    occ = {i + e * k for i, u in counts.items() for k in range(u)}
    return decode(Abacus(e, occ))


def e_quotient(la: Partition, e: int, n: int | None = None) -> list[Partition]:
    """Each runner read as a 1-runner display; component i comes from runner i.

    n must be a multiple of e so that runner labels agree with position
    residues; the components are then independent of the choice of n.
    """
    if n is None:
        n = default_beads(la, e)
    if n % e:
        raise ValueError(f"bead count {n} must be a multiple of e = {e}")
    ab = encode(la, n, e)
    out = []
    for i in range(e):
        local = {(p - i) // e for p in ab.occupied if p % e == i}
        out.append(decode(Abacus(1, local)))
    return out


def from_core_and_quotient(core: Partition, quotient: list[Partition], e: int) -> Partition:
    """The unique partition with the given e-core and e-quotient."""
    if len(quotient) != e:
        raise ValueError(f"need {e} quotient components, got {len(quotient)}")
    if e_core(core, e) != core:
        raise ValueError(f"{core.parts} is not an {e}-core")
    n = default_beads(core, e)
    while True:
        counts = runner_profile(encode(core, n, e))
        if all(counts[i] >= len(quotient[i].parts) for i in range(e)):
            break
        n += e
    occ = set()
    for i in range(e):
        u = counts[i]
        occ.update(i + e * (quotient[i].part(r) + u - r) for r in range(1, u + 1))
    return decode(Abacus(e, occ))


def grow_first_columns(la: Partition, m: int, e: int) -> Partition:
    """Lengthen each of the first m columns of la by e.

    Realised on the abacus by moving the bead at t - e up to t for the
    first m empty positions t, taken in increasing order; the display is
    sized so every such move is valid.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return la
    n = len(la.parts) + m * e
    occ = set(encode(la, n, e).occupied)
    targets = []
    p = 0
    while len(targets) < m:
        if p not in occ:
            targets.append(p)
        p += 1
    for t in targets:
        assert t - e in occ and t not in occ
        occ.remove(t - e)
        occ.add(t)
    return decode(Abacus(e, occ))


def restrict_to_classes(ab: Abacus, residues: Iterable[int]) -> Abacus:
    """Keep only the positions on the given runners, renumbered 0, 1, 2, ...

    The result is a display with one runner per kept residue class.
    """
    res = sorted(set(int(i) for i in residues))
    if not res:
        raise ValueError("need at least one residue class")
    if any(i < 0 or i >= ab.e for i in res):
        raise ValueError(f"residues must lie in [0, {ab.e})")
    rank = {r: k for k, r in enumerate(res)}
    c = len(res)
    occ = {
        (p // ab.e) * c + rank[p % ab.e] for p in ab.occupied if p % ab.e in rank
    }
    return Abacus(c, occ)


def render(ab: Abacus) -> str:
    """Text grid with runner headers: 'b' marks a bead, '.' a gap."""
    width = len(str(ab.e - 1))
    rows = (max(ab.occupied) // ab.e + 1) if ab.occupied else 1
    lines = [" ".join(str(i).rjust(width) for i in range(ab.e))]
    for row in range(rows):
        lines.append(
            " ".join(
                ("b" if row * ab.e + i in ab.occupied else ".").rjust(width)
                for i in range(ab.e)
            )
        )
    return "\n".join(lines)
