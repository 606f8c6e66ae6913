"""Canonical forms for finitely generated Z-modules.

A finitely generated Z-module is stored as a free rank together with one
partition per prime (the exponents of its primary cyclic summands), so
``Z^2 + Z/4 + Z/2`` becomes ``FgZModule(2, {2: (2, 1)})``.  Two modules are
isomorphic exactly when their canonical forms compare equal.

>>> parse_module("Z/6")
FgZModule(free_rank=0, torsion={2: (1,), 3: (1,)})
>>> render(parse_module("Z + Z/2 + Z/4"))
'Z + Z/4 + Z/2'
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

from sympy import Matrix, ZZ, factorint, isprime
from sympy.matrices.normalforms import invariant_factors
from sympy.utilities.iterables import partitions as _sympy_partitions

__all__ = [
    "Partition",
    "FgZModule",
    "Prufer",
    "ElementaryPower",
    "SymbolicModule",
    "ModuleSyntaxError",
    "TRIVIAL",
    "parse_module",
    "render",
    "from_relations",
    "socle_fg",
    "order_of",
    "partitions_of",
    "abelian_groups_of_order",
]


class ModuleSyntaxError(ValueError):
    """Raised when a module expression does not match the grammar."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Parts are sorted on construction, so ``Partition([1, 2]) == (2, 1)``.
    The empty partition stands for the trivial p-group.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    def __repr__(self) -> str:
        return tuple.__repr__(self)

    @property
    def total(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        return tuple(self) + (0,) * (length - len(self))


@dataclass(frozen=True)
class FgZModule:
    """``Z^free_rank`` plus the primary torsion summands, one partition per prime.

    ``torsion`` may be given as any mapping (or iterable of pairs); it is
    stored as a sorted tuple of ``(prime, Partition)`` pairs with empty
    partitions dropped, which makes equality an isomorphism test.
    """

    free_rank: int = 0
    torsion: tuple = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        items = self.torsion.items() if isinstance(self.torsion, Mapping) else self.torsion
        canon = {}
        for p, parts in items:
            p = int(p)
            if not isprime(p):
                raise ValueError(f"torsion key {p} is not prime")
            part = Partition(tuple(canon.get(p, ())) + tuple(parts))
            if part:
                canon[p] = part
        object.__setattr__(self, "torsion", tuple(sorted(canon.items())))

    def __repr__(self) -> str:
        tors = ", ".join(f"{p}: {part!r}" for p, part in self.torsion)
        return f"FgZModule(free_rank={self.free_rank}, torsion={{{tors}}})"

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.torsion)

    def partition(self, p: int) -> Partition:
        return dict(self.torsion).get(p, Partition())

    def torsion_dict(self) -> dict[int, Partition]:
        return dict(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def cyclic_orders(self) -> list[int]:
        """Orders of the primary cyclic factors (free part excluded)."""
        return [p**e for p, part in self.torsion for e in part]

    def direct_sum(self, other: "FgZModule") -> "FgZModule":
        merged = list(self.torsion) + list(other.torsion)
        return FgZModule(self.free_rank + other.free_rank, merged)


TRIVIAL = FgZModule()


@dataclass(frozen=True)
class Prufer:
    """The Prufer p-group ``Z/p^inf``."""

    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"Prufer group needs a prime, got {self.p}")


@dataclass(frozen=True)
class ElementaryPower:
    """Direct sum of copies of ``Z/p``; ``count=None`` means countably many."""

    p: int
    count: int | None = None

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"elementary power needs a prime, got {self.p}")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be non-negative")

    def as_fg(self) -> FgZModule:
        if self.count is None:
            raise ValueError("countably infinite power is not finitely generated")
        return FgZModule(0, {self.p: (1,) * self.count})


SymbolicModule = Union[FgZModule, Prufer, ElementaryPower]


# -- parsing ---------------------------------------------------------------

_NUM = r"(\d+)"
_TERM_PATTERNS = [
    ("free1", re.compile(r"Z")),
    ("free", re.compile(rf"Z\^{_NUM}")),
    ("prufer", re.compile(rf"Z/{_NUM}\^inf")),
    ("cyclic_pow", re.compile(rf"Z/{_NUM}\^{_NUM}")),
    ("cyclic", re.compile(rf"Z/{_NUM}")),
    ("elem_inf", re.compile(rf"\(Z/{_NUM}\)\^inf")),
    ("elem_pow", re.compile(rf"\(Z/{_NUM}\)\^{_NUM}")),
    ("zero", re.compile(r"0")),
]


def _torsion_of(n: int) -> dict[int, tuple[int, ...]]:
    if n <= 0:
        raise ModuleSyntaxError(f"modulus must be positive, got {n}")
    return {p: (e,) for p, e in factorint(n).items()}


def _need_prime(p: int, term: str) -> int:
    if not isprime(p):
        raise ModuleSyntaxError(f"{term!r}: base {p} is not prime")
    return p


def _parse_term(term: str) -> SymbolicModule:
    for kind, pat in _TERM_PATTERNS:
        m = pat.fullmatch(term)
        if not m:
            continue
        g = [int(x) for x in m.groups()]
        if kind == "zero":
            return TRIVIAL
        if kind == "free1":
            return FgZModule(1)
        if kind == "free":
            return FgZModule(g[0])
        if kind == "cyclic":
            return FgZModule(0, _torsion_of(g[0]))
        if kind == "cyclic_pow":
            if g[0] <= 0:
                raise ModuleSyntaxError(f"modulus must be positive in {term!r}")
            return FgZModule(0, _torsion_of(g[0] ** g[1]))
        if kind == "prufer":
            return Prufer(_need_prime(g[0], term))
        if kind == "elem_inf":
            return ElementaryPower(_need_prime(g[0], term), None)
        if kind == "elem_pow":
            if g[0] <= 0:
                raise ModuleSyntaxError(f"modulus must be positive in {term!r}")
            tors: dict[int, tuple[int, ...]] = {}
            for p, e in _torsion_of(g[0]).items():
                tors[p] = e * g[1]
            return FgZModule(0, tors)
    raise ModuleSyntaxError(f"cannot parse term {term!r}")


def parse_module(text: str) -> SymbolicModule:
    """Parse a module expression such as ``"Z^2 + Z/4 + Z/2"``.

    Infinite summands (``Z/p^inf``, ``(Z/p)^inf``) must stand alone.
    """
    if not text or not text.strip():
        raise ModuleSyntaxError("empty module expression")
    terms = [t.strip() for t in text.split("+")]
    if any(not t for t in terms):
        raise ModuleSyntaxError(f"dangling '+' in {text!r}")
    parsed = [_parse_term(t.replace(" ", "")) for t in terms]
    if len(parsed) == 1:
        return parsed[0]
    if not all(isinstance(m, FgZModule) for m in parsed):
        raise ModuleSyntaxError("infinite summands cannot be combined with other terms")
    out = TRIVIAL
    for m in parsed:
        out = out.direct_sum(m)
    return out


def render(module: SymbolicModule) -> str:
    """Inverse of :func:`parse_module` on canonical forms."""
    if isinstance(module, Prufer):
        return f"Z/{module.p}^inf"
    if isinstance(module, ElementaryPower):
        if module.count is None:
            return f"(Z/{module.p})^inf"
        return render(module.as_fg())
    if module.is_trivial:
        return "0"
    terms = []
    if module.free_rank == 1:
        terms.append("Z")
    elif module.free_rank > 1:
        terms.append(f"Z^{module.free_rank}")
    for p, part in module.torsion:
        terms.extend(f"Z/{p**e}" for e in part)
    return " + ".join(terms)


# -- constructions ---------------------------------------------------------

def _fg_from_invariant_factors(factors: Iterable[int], k: int) -> FgZModule:
    nonzero = [abs(int(d)) for d in factors if d != 0]
    torsion: dict[int, list[int]] = {}
    for d in nonzero:
        for p, e in factorint(d).items():
            torsion.setdefault(p, []).append(e)
    return FgZModule(k - len(nonzero), torsion)


def from_relations(relation_matrix: Sequence[Sequence[int]], k: int) -> FgZModule:
    """Canonical form of ``Z^k / (row span of relation_matrix)``.

    Uses the Smith normal form's invariant factors.
    """
    rows = [list(r) for r in relation_matrix]
    if any(len(r) != k for r in rows):
        raise ValueError(f"every relation row must have {k} entries")
    if not rows or k == 0:
        return FgZModule(k)
    factors = invariant_factors(Matrix(rows), domain=ZZ)
    return _fg_from_invariant_factors(factors, k)


def socle_fg(module: FgZModule) -> FgZModule:
    """Socle: one ``Z/p`` for every cyclic p-primary factor; free part contributes nothing."""
    return FgZModule(0, {p: (1,) * len(part) for p, part in module.torsion})


def order_of(module: FgZModule) -> float | int:
    if module.free_rank > 0:
        return math.inf
    return math.prod(p ** part.total for p, part in module.torsion)


# -- enumeration helpers ---------------------------------------------------

def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first part first."""
    if n == 0:
        return [Partition()]
    out = []
    for d in _sympy_partitions(n):
        out.append(Partition(itertools.chain.from_iterable([k] * m for k, m in d.items())))
    return sorted(out, reverse=True)


def abelian_groups_of_order(n: int) -> Iterator[FgZModule]:
    """Every abelian group of order ``n``, each once."""
    fac = sorted(factorint(n).items())
    choices = [[(p, lam) for lam in partitions_of(e)] for p, e in fac]
    for combo in itertools.product(*choices):
        yield FgZModule(0, dict(combo))
