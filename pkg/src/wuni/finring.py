"""Finite rings given by addition and multiplication tables.

Elements are ``0..n-1``.  Right ideals are enumerated by closing principal
right ideals under sums; module maps between ideals (and between
submodules of ``R ⊕ R``) are found by the same exhaustive search used for
abelian groups.  Left-sided questions are answered on the opposite ring.

>>> from wuni.presets import preset
>>> bool(is_right_weakly_uniserial(preset("z6")))
False
>>> len(enumerate_right_ideals(preset("z8")))
4
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

from ._modules import CapExceeded, FiniteModule, cap_from_env, find_monomorphism
from .verdict import Verdict

__all__ = [
    "DEFAULT_RING_CAP",
    "DEFAULT_MODULE_CAP",
    "RingAxiomError",
    "FiniteRing",
    "RightIdeal",
    "Submodule2",
    "enumerate_right_ideals",
    "enumerate_left_ideals",
    "right_annihilator",
    "find_right_module_mono",
    "exists_right_module_mono",
    "is_right_weakly_uniserial",
    "is_left_weakly_uniserial",
    "central_idempotents",
    "maximal_right_ideals",
    "minimal_right_ideals",
    "jacobson_radical",
    "socle_right",
    "ideal_product",
    "is_local",
    "is_kasch_right",
    "is_prime",
    "is_semiprime",
    "is_right_uniserial",
    "is_left_uniserial",
    "simple_module_classes",
    "every_module_weakly_uniserial",
    "has_principal_maximal_right_ideal",
    "check_2generated_counterexample",
]

DEFAULT_RING_CAP = 64
DEFAULT_MODULE_CAP = 256


class RingAxiomError(ValueError):
    """A table violates a ring axiom; ``axiom`` names it, ``witness`` shows where."""

    def __init__(self, axiom: str, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = f"ring axiom violated: {axiom}"
        if witness is not None:
            msg += f" at {witness}"
        super().__init__(msg)


class FiniteRing:
    """Ring with elements ``0..n-1`` and explicit tables.

    The tables are checked against the ring axioms on construction; the
    zero and one are located in the tables.
    """

    def __init__(self, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], name: str | None = None,
                 labels: Sequence | None = None):
        self.add = tuple(tuple(int(v) for v in row) for row in add)
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        self.size = len(self.add)
        self.name = name
        self.labels = list(labels) if labels is not None else None
        self._validate()

    def __repr__(self) -> str:
        return f"FiniteRing({self.name or 'unnamed'}, size={self.size})"

    @classmethod
    def from_operations(cls, elements: Sequence[Hashable], add: Callable, mul: Callable, name: str | None = None):
        """Tabulate a ring from Python operations on an explicit element list."""
        index = {e: i for i, e in enumerate(elements)}
        add_t = [[index[add(a, b)] for b in elements] for a in elements]
        mul_t = [[index[mul(a, b)] for b in elements] for a in elements]
        return cls(add_t, mul_t, name=name, labels=elements)

    @classmethod
    def from_json(cls, source: str | Path | dict) -> "FiniteRing":
        """Load ``{"size", "add", "mul", "name"?}`` from a dict or a JSON file."""
        if not isinstance(source, dict):
            source = json.loads(Path(source).read_text())
        size = int(source["size"])
        ring = cls(source["add"], source["mul"], name=source.get("name"))
        if ring.size != size:
            raise RingAxiomError("size", f"declared {size}, tables have {ring.size}")
        return ring

    def to_json(self) -> dict:
        out = {"size": self.size, "add": [list(r) for r in self.add], "mul": [list(r) for r in self.mul]}
        if self.name:
            out["name"] = self.name
        return out

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def _validate(self) -> None:
        n, add, mul = self.size, self.add, self.mul
        if n == 0:
            raise RingAxiomError("nonempty")
        for name, t in (("add", add), ("mul", mul)):
            if len(t) != n or any(len(row) != n for row in t):
                raise RingAxiomError(f"{name} table is {n}x{n}")
            if any(not 0 <= v < n for row in t for v in row):
                raise RingAxiomError(f"{name} table entries in range")
        zeros = [z for z in range(n) if all(add[z][a] == a for a in range(n))]
        if not zeros:
            raise RingAxiomError("additive identity")
        self.zero = zero = zeros[0]
        R = range(n)
        for a, b in itertools.product(R, R):
            if add[a][b] != add[b][a]:
                raise RingAxiomError("addition commutative", (a, b))
        for a in R:
            if zero not in add[a]:
                raise RingAxiomError("additive inverse", a)
        for a, b, c in itertools.product(R, R, R):
            if add[add[a][b]][c] != add[a][add[b][c]]:
                raise RingAxiomError("addition associative", (a, b, c))
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise RingAxiomError("multiplication associative", (a, b, c))
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise RingAxiomError("left distributive", (a, b, c))
            if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                raise RingAxiomError("right distributive", (a, b, c))
        ones = [u for u in R if all(mul[u][a] == a == mul[a][u] for a in R)]
        if not ones:
            raise RingAxiomError("multiplicative identity")
        self.one = ones[0]

    # -- derived structure -------------------------------------------------

    @cached_property
    def is_commutative(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.size) for b in range(a))

    @cached_property
    def opposite(self) -> "FiniteRing":
        mul_op = [[self.mul[b][a] for b in range(self.size)] for a in range(self.size)]
        name = f"{self.name}^op" if self.name else None
        return FiniteRing(self.add, mul_op, name=name, labels=self.labels)

    @cached_property
    def right_ann_of_element(self) -> list[frozenset]:
        mul, z = self.mul, self.zero
        return [frozenset(r for r in range(self.size) if mul[x][r] == z) for x in range(self.size)]

    @cached_property
    def regular_module(self) -> FiniteModule:
        """``R`` as a right module over itself (elements relabelled so zero is 0)."""
        return _relabelled_module(self, 1)

    @cached_property
    def double_module(self) -> FiniteModule:
        """``R ⊕ R`` as a right module; element ``(a, b)`` is ``a * n + b``."""
        return _relabelled_module(self, 2)

    def check_cap(self, cap: int | None = None) -> None:
        cap = cap_from_env(DEFAULT_RING_CAP) if cap is None else cap
        if self.size > cap:
            raise CapExceeded(f"ring of order {self.size} exceeds cap {cap}")


def _relabelled_module(ring: FiniteRing, copies: int) -> FiniteModule:
    # module index 0 must be zero: swap ring.zero with 0 in the coordinate encoding
    n, z = ring.size, ring.zero
    perm = list(range(n))
    perm[0], perm[z] = perm[z], perm[0]  # module coordinate -> ring element
    inv = {e: i for i, e in enumerate(perm)}
    tuples = list(itertools.product(range(n), repeat=copies))
    index = {t: i for i, t in enumerate(tuples)}
    add, mul = ring.add, ring.mul
    add_t = [
        [index[tuple(inv[add[perm[a]][perm[b]]] for a, b in zip(s, t))] for t in tuples]
        for s in tuples
    ]
    act_t = [[index[tuple(inv[mul[perm[a]][r]] for a in s)] for r in range(n)] for s in tuples]
    ann_el = ring.right_ann_of_element
    ann = [frozenset.intersection(*(ann_el[perm[a]] for a in s)) for s in tuples]
    labels = [tuple(perm[a] for a in s) if copies > 1 else perm[s[0]] for s in tuples]
    scal = range(n)
    return FiniteModule(
        add=add_t,
        act=lambda x, r: act_t[x][r],
        scalars=lambda x: scal,
        ann_key=ann.__getitem__,
        scalar_ring=id(ring),
        labels=labels,
    )


@dataclass(frozen=True, eq=False)
class RightIdeal:
    """A right ideal, stored as module indices of :attr:`FiniteRing.regular_module`."""

    ring: FiniteRing
    ids: frozenset

    @property
    def elements(self) -> tuple[int, ...]:
        """Ring elements of the ideal, sorted."""
        lab = self.ring.regular_module.labels
        return tuple(sorted(lab[i] for i in self.ids))

    @property
    def order(self) -> int:
        return len(self.ids)

    def __eq__(self, other) -> bool:
        return isinstance(other, RightIdeal) and other.ring is self.ring and other.ids == self.ids

    def __hash__(self) -> int:
        return hash((id(self.ring), self.ids))

    def __le__(self, other: "RightIdeal") -> bool:
        return self.ids <= other.ids

    def __repr__(self) -> str:
        return f"RightIdeal(order={self.order}, {set(self.elements)})"


@dataclass(frozen=True, eq=False)
class Submodule2:
    """Submodule of the right module ``R ⊕ R``; elements are pairs of ring elements."""

    ring: FiniteRing
    ids: frozenset

    @property
    def elements(self) -> tuple[tuple[int, int], ...]:
        lab = self.ring.double_module.labels
        return tuple(sorted(lab[i] for i in self.ids))

    @property
    def order(self) -> int:
        return len(self.ids)

    def __eq__(self, other) -> bool:
        return isinstance(other, Submodule2) and other.ring is self.ring and other.ids == self.ids

    def __hash__(self) -> int:
        return hash((id(self.ring), self.ids))

    def __repr__(self) -> str:
        return f"Submodule2(order={self.order})"


def _ideal_key(ideal) -> tuple:
    return (len(ideal.ids), sorted(ideal.elements))


def enumerate_right_ideals(ring: FiniteRing) -> list[RightIdeal]:
    """All right ideals, sorted by order then elements."""
    ring.check_cap()
    subs = ring.regular_module.enumerate_submodules()
    return sorted((RightIdeal(ring, s) for s in subs), key=_ideal_key)


def enumerate_left_ideals(ring: FiniteRing) -> list[RightIdeal]:
    """Left ideals of ``ring``, returned as right ideals of its opposite."""
    return enumerate_right_ideals(ring.opposite)


def right_annihilator(ideal) -> frozenset[int]:
    """``{r : x r = 0 for all x}`` as a set of ring elements."""
    mod = ideal.ring.double_module if isinstance(ideal, Submodule2) else ideal.ring.regular_module
    out = frozenset(range(ideal.ring.size))
    for x in ideal.ids:
        out &= mod.ann_key(x)
    return out


def _module(ideal) -> FiniteModule:
    return ideal.ring.double_module if isinstance(ideal, Submodule2) else ideal.ring.regular_module


def find_right_module_mono(source, target) -> dict | None:
    """Generator images of an injective right-module map ``source -> target``.

    Works for right ideals and for submodules of ``R ⊕ R``.  The necessary
    condition ``r.Ann(target) ⊆ r.Ann(source)`` is checked before searching.
    """
    if source.ring is not target.ring:
        raise ValueError("ideals of different rings")
    if source.ids <= target.ids:
        return {x: x for x in _module(source).generating_set(source.ids)}
    if len(source.ids) > len(target.ids):
        return None
    if not right_annihilator(target) <= right_annihilator(source):
        return None
    return find_monomorphism(_module(source), source.ids, _module(target), target.ids)


def exists_right_module_mono(source, target) -> bool:
    return find_right_module_mono(source, target) is not None


def _is_cyclic(sub) -> bool:
    return len(sub.ids) == 1 or len(_module(sub).generating_set(sub.ids)) == 1


def _incomparable_pair(subs: list) -> tuple | None:
    """Incomparable pair minimising ``(|N|+|K|, #non-cyclic, elements)``."""
    best = None
    for a, b in itertools.combinations(subs, 2):
        if a.ids <= b.ids or b.ids <= a.ids:
            continue
        if exists_right_module_mono(a, b) or exists_right_module_mono(b, a):
            continue
        first, second = sorted((a, b), key=lambda s: sorted(s.elements))
        key = (
            a.order + b.order,
            (not _is_cyclic(a)) + (not _is_cyclic(b)),
            sorted(first.elements),
            sorted(second.elements),
        )
        if best is None or key < best[0]:
            best = (key, (first, second))
    return None if best is None else best[1]


def is_right_weakly_uniserial(ring: FiniteRing) -> Verdict:
    """Pairwise embedding check over all right ideals.

    A failing verdict carries the smallest incomparable pair, preferring
    principal right ideals.
    """
    pair = _incomparable_pair(enumerate_right_ideals(ring))
    if pair is None:
        return Verdict(True)
    return Verdict(False, reason="incomparable-right-ideals", witness=pair)


def is_left_weakly_uniserial(ring: FiniteRing) -> Verdict:
    """Left-sided check, run on the opposite ring (witness ideals live there)."""
    v = is_right_weakly_uniserial(ring.opposite)
    if v:
        return v
    return Verdict(False, reason="incomparable-left-ideals", witness=v.witness)


def central_idempotents(ring: FiniteRing) -> frozenset[int]:
    mul, n = ring.mul, ring.size
    return frozenset(
        e for e in range(n)
        if mul[e][e] == e and all(mul[e][r] == mul[r][e] for r in range(n))
    )


def _ring_elements(ideal: RightIdeal) -> frozenset[int]:
    return frozenset(ideal.elements)


def _from_elements(ring: FiniteRing, elems: Iterable[int]) -> RightIdeal:
    lab = ring.regular_module.labels
    inv = {e: i for i, e in enumerate(lab)}
    return RightIdeal(ring, frozenset(inv[e] for e in elems))


def maximal_right_ideals(ring: FiniteRing) -> list[RightIdeal]:
    ideals = [i for i in enumerate_right_ideals(ring) if i.order < ring.size]
    return [i for i in ideals if not any(i.ids < j.ids for j in ideals)]


def minimal_right_ideals(ring: FiniteRing) -> list[RightIdeal]:
    ideals = [i for i in enumerate_right_ideals(ring) if i.order > 1]
    return [i for i in ideals if not any(j.ids < i.ids for j in ideals)]


def jacobson_radical(ring: FiniteRing) -> RightIdeal:
    """Intersection of the maximal right ideals (a two-sided ideal)."""
    maxes = maximal_right_ideals(ring)
    ids = frozenset.intersection(*(m.ids for m in maxes)) if maxes else frozenset({0})
    return RightIdeal(ring, ids)


def socle_right(ring: FiniteRing) -> RightIdeal:
    """Sum of the minimal right ideals."""
    mod = ring.regular_module
    out = frozenset({0})
    for m in minimal_right_ideals(ring):
        out = mod.sum(out, m.ids)
    return RightIdeal(ring, out)


def _additive_span(ring: FiniteRing, elems: Iterable[int]) -> frozenset[int]:
    out = {ring.zero}
    frontier = list(set(elems))
    while frontier:
        x = frontier.pop()
        if x in out:
            continue
        new = {ring.add[x][y] for y in out}
        out.add(x)
        frontier.extend(new - out)
    return frozenset(out)


def ideal_product(a: RightIdeal, b: RightIdeal) -> RightIdeal:
    """Additive span of all products ``x y`` with ``x`` in ``a``, ``y`` in ``b``."""
    ring = a.ring
    prods = {ring.mul[x][y] for x in a.elements for y in b.elements}
    return _from_elements(ring, _additive_span(ring, prods))


def is_local(ring: FiniteRing) -> bool:
    return len(maximal_right_ideals(ring)) == 1


def _kills(ring: FiniteRing, y: int, m: RightIdeal) -> bool:
    return all(ring.mul[y][r] == ring.zero for r in m.elements)


def _quotient_embeds(ring: FiniteRing, m: RightIdeal, target: RightIdeal) -> bool:
    """Nonzero map ``R/m -> target`` exists: some nonzero ``y`` in ``target`` with ``y m = 0``."""
    return any(y != ring.zero and _kills(ring, y, m) for y in target.elements)


def is_kasch_right(ring: FiniteRing) -> bool:
    """Every simple right module ``R/m`` is isomorphic to a minimal right ideal."""
    mins = minimal_right_ideals(ring)
    return all(any(_quotient_embeds(ring, m, s) for s in mins) for m in maximal_right_ideals(ring))


def simple_module_classes(ring: FiniteRing) -> list[list[RightIdeal]]:
    """Maximal right ideals grouped by isomorphism of ``R/m``.

    ``R/m ≅ R/m'`` iff some ``r`` outside ``m'`` has ``r m ⊆ m'`` (a nonzero
    map between simple modules).
    """
    classes: list[list[RightIdeal]] = []
    for m in maximal_right_ideals(ring):
        for cls in classes:
            rep = cls[0]
            rep_el = set(rep.elements)
            if any(
                r not in rep_el and all(ring.mul[r][x] in rep_el for x in m.elements)
                for r in range(ring.size)
            ):
                cls.append(m)
                break
        else:
            classes.append([m])
    return classes


def is_prime(ring: FiniteRing) -> bool:
    """``a R b = 0`` forces ``a = 0`` or ``b = 0``."""
    n, mul, z = ring.size, ring.mul, ring.zero
    nonzero = [a for a in range(n) if a != z]
    return all(
        any(mul[mul[a][r]][b] != z for r in range(n)) for a in nonzero for b in nonzero
    )


def is_semiprime(ring: FiniteRing) -> bool:
    """``a R a = 0`` forces ``a = 0``."""
    n, mul, z = ring.size, ring.mul, ring.zero
    return all(any(mul[mul[a][r]][a] != z for r in range(n)) for a in range(n) if a != z)


def is_right_uniserial(ring: FiniteRing) -> bool:
    """Right ideals form a chain under inclusion."""
    ideals = enumerate_right_ideals(ring)
    return all(a.ids <= b.ids or b.ids <= a.ids for a, b in itertools.combinations(ideals, 2))


def is_left_uniserial(ring: FiniteRing) -> bool:
    return is_right_uniserial(ring.opposite)


def every_module_weakly_uniserial(ring: FiniteRing) -> bool:
    """Zero radical and a single simple module up to isomorphism, i.e. a
    matrix ring over a division ring."""
    return jacobson_radical(ring).order == 1 and len(simple_module_classes(ring)) == 1


def has_principal_maximal_right_ideal(ring: FiniteRing) -> bool:
    mod = ring.regular_module
    return any(len(mod.generating_set(m.ids)) <= 1 for m in maximal_right_ideals(ring))


def enumerate_double_submodules(ring: FiniteRing, cap: int | None = None) -> list[Submodule2]:
    cap = cap_from_env(DEFAULT_MODULE_CAP) if cap is None else cap
    if ring.size ** 2 > cap:
        raise CapExceeded(f"R ⊕ R has {ring.size ** 2} elements, cap is {cap}")
    subs = ring.double_module.enumerate_submodules()
    return sorted((Submodule2(ring, s) for s in subs), key=_ideal_key)


def check_2generated_counterexample(ring: FiniteRing, cap: int | None = None) -> tuple | None:
    """Mutually non-embeddable pair of submodules of ``R ⊕ R``, or ``None``.

    The pair minimises ``|N| + |K|``, then the number of non-cyclic members,
    then the sorted element lists.
    """
    return _incomparable_pair(enumerate_double_submodules(ring, cap))
