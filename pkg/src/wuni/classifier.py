"""Closed-form predicates for embeddability and weak uniseriality over Z.

These are the fast paths; :mod:`wuni.oracle` checks them by brute force.

A finitely generated Z-module is weakly uniserial exactly when it is free,
elementary abelian for one prime, or cyclic of prime-power order.  A
Z-module with nonzero socle is weakly uniserial exactly when it is cyclic
of prime-power order, a Prufer group, or a direct sum of copies of one
``Z/p``.
"""

from __future__ import annotations

from typing import Sequence

from .abelian import ElementaryPower, FgZModule, Partition, Prufer, SymbolicModule
from .verdict import Verdict

__all__ = [
    "CLAUSES",
    "DomainError",
    "pgroup_embeds",
    "fg_embeds",
    "is_weakly_uniserial_fg",
    "is_homogeneous_semisimple",
    "classify_socle_nonzero",
    "classify",
]

MIXED_PRIMES = "mixed-primes"
TORSION_AND_FREE = "torsion-and-free"
BAD_P_SHAPE = "bad-p-shape"

CLAUSES = {
    "free": "M ≅ R^n",
    "elementary": "M ≅ ⊕_n(R/pR)",
    "cyclic": "M ≅ R/p^nR",
    "prufer": "M ≅ Z_{p^∞}",
    "elementary-infinite": "M ≅ ⊕_I Z_p",
    "cyclic-socle": "M ≅ Z_{p^n}",
    MIXED_PRIMES: "Z/p ↣ M and Z/q ↣ M with p ≠ q",
    TORSION_AND_FREE: "Z/p ↣ M and Z ↣ M",
    BAD_P_SHAPE: "M₁ ↛ M₂ and M₂ ↛ M₁",
}


class DomainError(ValueError):
    """The input lies outside the class the predicate is stated for."""


def pgroup_embeds(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Does ``⊕ Z/p^lam_i`` embed in ``⊕ Z/p^mu_j``?

    Both partitions are sorted decreasingly and padded with zeros; the
    answer is yes iff ``lam[i] <= mu[i]`` for every ``i``.
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def fg_embeds(m: FgZModule, n: FgZModule) -> bool:
    """Does ``m`` embed in ``n``?  Free ranks must not increase and each
    primary component of ``m`` must embed in that of ``n``."""
    if m.free_rank > n.free_rank:
        return False
    return all(pgroup_embeds(part, n.partition(p)) for p, part in m.torsion)


def is_weakly_uniserial_fg(m: FgZModule) -> Verdict:
    if m.free_rank and m.torsion:
        return Verdict(False, TORSION_AND_FREE, clause=CLAUSES[TORSION_AND_FREE])
    if len(m.torsion) > 1:
        return Verdict(False, MIXED_PRIMES, clause=CLAUSES[MIXED_PRIMES])
    if not m.torsion:
        return Verdict(True, "free", clause=CLAUSES["free"])
    (_, part), = m.torsion
    if len(part) == 1:
        return Verdict(True, "cyclic", clause=CLAUSES["cyclic"])
    if part[0] == 1:
        return Verdict(True, "elementary", clause=CLAUSES["elementary"])
    return Verdict(False, BAD_P_SHAPE, clause=CLAUSES[BAD_P_SHAPE])


def is_homogeneous_semisimple(m: FgZModule) -> bool:
    if m.is_trivial:
        return True
    return m.free_rank == 0 and len(m.torsion) == 1 and m.torsion[0][1][0] == 1


def classify_socle_nonzero(m: SymbolicModule) -> Verdict:
    """Weak uniseriality for Z-modules with nonzero socle.

    Raises :class:`DomainError` when the socle is zero (free or trivial
    modules), where the characterization says nothing.
    """
    if isinstance(m, Prufer):
        return Verdict(True, "prufer", clause=CLAUSES["prufer"])
    if isinstance(m, ElementaryPower):
        if m.count is None:
            return Verdict(True, "elementary-infinite", clause=CLAUSES["elementary-infinite"])
        m = m.as_fg()
    if not m.torsion:
        raise DomainError(f"socle of {m!r} is zero")
    if m.free_rank:
        return Verdict(False, TORSION_AND_FREE, clause=CLAUSES[TORSION_AND_FREE])
    if len(m.torsion) > 1:
        return Verdict(False, MIXED_PRIMES, clause=CLAUSES[MIXED_PRIMES])
    part = m.torsion[0][1]
    if len(part) == 1:
        return Verdict(True, "cyclic-socle", clause=CLAUSES["cyclic-socle"])
    if part[0] == 1:
        return Verdict(True, "elementary-infinite", clause=CLAUSES["elementary-infinite"])
    return Verdict(False, BAD_P_SHAPE, clause=CLAUSES[BAD_P_SHAPE])


def classify(m: SymbolicModule) -> Verdict:
    """Dispatch: finitely generated shapes use the PID classification, the
    infinite torsion shapes the nonzero-socle one."""
    if isinstance(m, ElementaryPower) and m.count is not None:
        m = m.as_fg()
    if isinstance(m, FgZModule):
        return is_weakly_uniserial_fg(m)
    return classify_socle_nonzero(m)
