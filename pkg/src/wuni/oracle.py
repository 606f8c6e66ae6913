"""Exhaustive ground truth on explicit finite abelian groups.

Groups are given by their cyclic factor orders; elements are residue tuples.
Every answer here comes from enumerating subgroups and searching for maps
element by element, so it can be used to check the fast predicates in
:mod:`wuni.classifier`.

>>> G = ConcreteGroup((2, 4))
>>> len(enumerate_subgroups(G))
8
>>> bool(is_weakly_uniserial_oracle(G))
False
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from ._modules import CapExceeded, FiniteModule, cap_from_env, extend_to_map, find_monomorphism
from .abelian import FgZModule
from .verdict import Verdict

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "ConcreteGroup",
    "Subgroup",
    "enumerate_subgroups",
    "find_monomorphism_between",
    "exists_monomorphism",
    "is_weakly_uniserial_oracle",
    "associated_primes",
    "socle",
    "is_essential",
    "socle_is_essential",
    "iso_signature",
]

DEFAULT_CAP = 256


@dataclass(frozen=True)
class ConcreteGroup:
    """``Z/n1 + Z/n2 + ...`` with explicit elements.

    Elements are indexed in lexicographic order of their residue tuples, so
    sorting indices sorts tuples.
    """

    cyclic_orders: tuple[int, ...]
    cap: int = field(default=None, compare=False)

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders if int(n) != 1)
        if any(n < 2 for n in orders):
            raise ValueError(f"cyclic orders must be >= 2, got {self.cyclic_orders}")
        object.__setattr__(self, "cyclic_orders", orders)
        cap = cap_from_env(DEFAULT_CAP) if self.cap is None else self.cap
        object.__setattr__(self, "cap", cap)
        if self.order > cap:
            raise CapExceeded(f"group of order {self.order} exceeds cap {cap}")

    @classmethod
    def from_module(cls, module: FgZModule, cap: int | None = None) -> "ConcreteGroup":
        if module.free_rank:
            raise ValueError("only finite modules have a concrete model")
        return cls(tuple(module.cyclic_orders()), cap=cap)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def module(self) -> FiniteModule:
        return _build_module(self.cyclic_orders)

    def element(self, index: int) -> tuple[int, ...]:
        return self.module.labels[index]

    def index(self, element) -> int:
        idx = 0
        for c, n in zip(element, self.cyclic_orders):
            idx = idx * n + (c % n)
        return idx

    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)))

    def subgroup(self, generators) -> "Subgroup":
        """Subgroup generated by residue tuples."""
        gens = [self.index(g) for g in generators]
        return Subgroup(self, self.module.span(gens))


@lru_cache(maxsize=None)
def _build_module(orders: tuple[int, ...]) -> FiniteModule:
    labels = list(itertools.product(*(range(n) for n in orders)))
    index = {t: i for i, t in enumerate(labels)}
    add = [
        [index[tuple((a + b) % n for a, b, n in zip(s, t, orders))] for t in labels]
        for s in labels
    ]
    elem_order = []
    for s in labels:
        o = 1
        for a, n in zip(s, orders):
            o = math.lcm(o, n // math.gcd(a, n))
        elem_order.append(o)
    multiples = []
    for x in range(len(labels)):
        row = [0]
        for _ in range(elem_order[x] - 1):
            row.append(add[row[-1]][x])
        multiples.append(row)
    return FiniteModule(
        add=add,
        act=lambda x, k: multiples[x][k % elem_order[x]],
        scalars=lambda x: range(elem_order[x]),
        ann_key=elem_order.__getitem__,
        scalar_ring="Z",
        labels=labels,
    )


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a :class:`ConcreteGroup`, identified by its element set."""

    parent: ConcreteGroup
    ids: frozenset

    @property
    def order(self) -> int:
        return len(self.ids)

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.parent.element(i) for i in sorted(self.ids))

    def sort_key(self):
        return (len(self.ids), sorted(self.ids))

    def __le__(self, other: "Subgroup") -> bool:
        return self.ids <= other.ids

    def __repr__(self) -> str:
        shown = ", ".join(str(e) for e in self.elements[:6])
        more = ", ..." if self.order > 6 else ""
        return f"Subgroup(order={self.order}, {{{shown}{more}}})"


Group = Union[ConcreteGroup, Subgroup]


def _as_subgroup(g: Group) -> Subgroup:
    return g.whole() if isinstance(g, ConcreteGroup) else g


def enumerate_subgroups(group: Group) -> list[Subgroup]:
    """Every subgroup exactly once, sorted by order then element set."""
    h = _as_subgroup(group)
    mod = h.parent.module
    within = None if h.order == h.parent.order else h.ids
    subs = [Subgroup(h.parent, s) for s in mod.enumerate_submodules(within)]
    return sorted(subs, key=Subgroup.sort_key)


def iso_signature(group: Group) -> tuple:
    """Number of elements of each order.

    For finite abelian groups this determines the isomorphism type, so it is
    used to avoid repeating identical searches on isomorphic subgroups.
    """
    h = _as_subgroup(group)
    key = h.parent.module.ann_key
    return tuple(sorted(Counter(key(x) for x in h.ids).items()))


def find_monomorphism_between(source: Group, target: Group) -> dict | None:
    """Generator images (as residue tuples) of an injective map, or ``None``."""
    n, k = _as_subgroup(source), _as_subgroup(target)
    found = find_monomorphism(n.parent.module, n.ids, k.parent.module, k.ids)
    if found is None:
        return None
    return {n.parent.element(g): k.parent.element(y) for g, y in found.items()}


def exists_monomorphism(source: Group, target: Group) -> bool:
    return find_monomorphism_between(source, target) is not None


def witness_map(source: Group, target: Group, gen_images: dict) -> dict | None:
    """Expand generator images into a full element map (``None`` if not a homomorphism)."""
    n, k = _as_subgroup(source), _as_subgroup(target)
    idx = {n.parent.index(g): k.parent.index(y) for g, y in gen_images.items()}
    full = extend_to_map(n.parent.module, k.parent.module, idx)
    if full is None:
        return None
    return {n.parent.element(x): k.parent.element(y) for x, y in full.items()}


def _comparable(a: Subgroup, b: Subgroup) -> bool:
    if a.order > b.order:
        a, b = b, a
    return exists_monomorphism(a, b) or (a.order == b.order and exists_monomorphism(b, a))


def is_weakly_uniserial_oracle(group: Group, dedupe: bool = True) -> Verdict:
    """Check every pair of subgroups for an embedding in at least one direction.

    On failure the witness is the incomparable pair with the smallest
    ``|N| + |K|``, ties broken by the sorted element sets.  With ``dedupe``
    one representative per isomorphism type is searched; ``dedupe=False``
    runs the search on every pair (slow, used to test the shortcut).
    """
    subs = enumerate_subgroups(group)
    if dedupe:
        classes: dict[tuple, list[Subgroup]] = {}
        for s in subs:
            classes.setdefault(iso_signature(s), []).append(s)
        buckets = list(classes.values())
    else:
        buckets = [[s] for s in subs]

    best = None
    for i, j in itertools.combinations(range(len(buckets)), 2):
        a, b = buckets[i][0], buckets[j][0]
        if _comparable(a, b):
            continue
        first, second = sorted((a, b), key=lambda s: sorted(s.ids))
        key = (a.order + b.order, sorted(first.ids), sorted(second.ids))
        if best is None or key < best[0]:
            best = (key, (first, second))
    if best is None:
        return Verdict(True)
    return Verdict(False, reason="incomparable-subgroups", witness=best[1])


def associated_primes(group: Group) -> frozenset[int]:
    """Primes ``p`` with ``pZ`` the annihilator of some prime subgroup.

    A nonzero subgroup ``N`` is a prime module when every nonzero subgroup of
    ``N`` has the annihilator of ``N``.  Each nonzero subgroup contains a
    nonzero cyclic one and annihilators only grow when passing to
    subgroups, so it suffices that every nonzero element has order equal
    to the exponent of ``N``.
    """
    h = _as_subgroup(group)
    order = h.parent.module.ann_key
    out = set()
    for n in enumerate_subgroups(h):
        if n.order == 1:
            continue
        orders = {order(x) for x in n.ids if x != 0}
        if len(orders) == 1:
            out.add(orders.pop())
    return frozenset(out)


def socle(group: Group) -> Subgroup:
    """Sum of the minimal subgroups: generated by the elements of prime order."""
    h = _as_subgroup(group)
    mod = h.parent.module
    prime_order = [x for x in sorted(h.ids) if _is_prime(mod.ann_key(x))]
    return Subgroup(h.parent, mod.span(prime_order))


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


def is_essential(group: Group, sub: Subgroup) -> bool:
    """True iff ``sub`` meets every nonzero subgroup of ``group`` nontrivially."""
    return all(len(n.ids & sub.ids) > 1 for n in enumerate_subgroups(group) if n.order > 1)


def socle_is_essential(group: Group) -> bool:
    return is_essential(group, socle(group))
