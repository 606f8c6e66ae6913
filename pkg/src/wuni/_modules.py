"""Brute-force machinery shared by the abelian-group oracle and the ring code.

A :class:`FiniteModule` is an explicit finite module with elements
``0..size-1`` (``0`` is the zero element), an addition table and a scalar
action.  Submodules are frozensets of element indices.  Everything here is
plain enumeration; no structure theory is used.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Callable, Hashable, Iterable, Sequence

Submodule = frozenset


class CapExceeded(ValueError):
    """Raised when an enumeration would exceed the configured element cap."""


def cap_from_env(default: int) -> int:
    """Enumeration cap, overridable with the ``WU_CAP`` environment variable."""
    raw = os.environ.get("WU_CAP")
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


class FiniteModule:
    """Explicit finite module over some scalar ring.

    Parameters
    ----------
    add:
        ``add[a][b]`` is the index of ``a + b``.
    act:
        ``act(x, s)`` is ``x`` times the scalar ``s``.
    scalars:
        ``scalars(x)`` lists scalars whose action on ``x`` already yields the
        whole cyclic submodule ``xR``.
    ann_key:
        ``ann_key(x)`` identifies the annihilator of ``x``; two elements
        generate isomorphic cyclic submodules iff their keys agree.
    scalar_ring:
        Tag of the scalar ring.  Homomorphisms are only searched between
        modules sharing the tag.
    """

    def __init__(
        self,
        add: Sequence[Sequence[int]],
        act: Callable[[int, int], int],
        scalars: Callable[[int], Iterable[int]],
        ann_key: Callable[[int], Hashable],
        scalar_ring: Hashable,
        labels: Sequence | None = None,
    ):
        self.size = len(add)
        self.add = add
        self.act = act
        self.scalars = scalars
        self.ann_key = ann_key
        self.scalar_ring = scalar_ring
        self.labels = labels
        self.neg = [row.index(0) for row in add]

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    # -- closure ---------------------------------------------------------

    def cyclic(self, g: int) -> Submodule:
        return frozenset(self.act(g, s) for s in self.scalars(g))

    def add_cyclic(self, base: Submodule, g: int) -> Submodule:
        """``base + gR``."""
        if g in base:
            return base
        gr = self.cyclic(g)
        add = self.add
        return frozenset(add[h][c] for h in base for c in gr)

    def sum(self, a: Submodule, b: Submodule) -> Submodule:
        add = self.add
        return frozenset(add[x][y] for x in a for y in b)

    def span(self, gens: Iterable[int], base: Submodule = frozenset({0})) -> Submodule:
        out = base
        for g in gens:
            out = self.add_cyclic(out, g)
        return out

    def enumerate_submodules(self, within: Submodule | None = None) -> set[Submodule]:
        """All submodules contained in ``within`` (default: the whole module).

        Breadth-first closure: every submodule is reached from ``{0}`` by
        adjoining one cyclic submodule at a time.  For a fixed ``H`` every
        element of a coset ``g + H`` yields the same ``H + gR``, so one
        representative per coset is tried.
        """
        universe = sorted(within) if within is not None else range(self.size)
        zero = frozenset({0})
        seen = {zero}
        frontier = [zero]
        add = self.add
        while frontier:
            nxt = []
            for h in frontier:
                done = set(h)
                for g in universe:
                    if g in done:
                        continue
                    done.update(add[g][x] for x in h)
                    k = self.add_cyclic(h, g)
                    if k not in seen:
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        return seen

    def generating_set(self, elems: Submodule) -> list[int]:
        """Greedy small generating set: repeatedly adjoin the element that grows the span most."""
        gens: list[int] = []
        span = frozenset({0})
        target = len(elems)
        while len(span) < target:
            best, best_span = None, span
            for x in sorted(elems):
                if x in span:
                    continue
                s = self.add_cyclic(span, x)
                if len(s) > len(best_span):
                    best, best_span = x, s
                    if len(s) == target:
                        break
            gens.append(best)
            span = best_span
        return gens


def _extend(src: FiniteModule, dst: FiniteModule, fmap: dict, g: int, y: int):
    """Extend a partial monomorphism from ``D`` to ``D + gR`` by ``g -> y``.

    Returns the new ``(map, inverse)`` or ``None`` if the extension is not
    well defined or not injective.
    """
    pairs = {(src.act(g, s), dst.act(y, s)) for s in src.scalars(g)}
    sadd, dadd = src.add, dst.add
    new = {}
    newinv = {}
    for x, fx in fmap.items():
        ax, afx = sadd[x], dadd[fx]
        for a, b in pairs:
            key = ax[a]
            val = afx[b]
            old = new.get(key)
            if old is None:
                if val in newinv:
                    return None
                new[key] = val
                newinv[val] = key
            elif old != val:
                return None
    return new, newinv


def find_monomorphism(
    src: FiniteModule, n_elems: Submodule, dst: FiniteModule, k_elems: Submodule
) -> dict[int, int] | None:
    """Search for an injective module map from ``n_elems`` into ``k_elems``.

    Generators of the source are assigned images one at a time.  A
    candidate image of ``g`` must have the same annihilator as ``g`` (the
    restriction to ``gR`` is injective and well defined exactly then);
    each assignment is checked for well-definedness and injectivity on the
    span built so far.  Returns the generator assignment or ``None``.
    """
    if src.scalar_ring != dst.scalar_ring:
        raise ValueError("modules over different scalar rings")
    if len(n_elems) > len(k_elems):
        return None
    # injective maps preserve annihilators, so each annihilator class must fit
    have = Counter(dst.ann_key(y) for y in k_elems)
    need = Counter(src.ann_key(x) for x in n_elems)
    if any(have[key] < cnt for key, cnt in need.items()):
        return None
    gens = src.generating_set(n_elems)
    targets = sorted(k_elems)
    cands = []
    for g in gens:
        key = src.ann_key(g)
        c = [y for y in targets if dst.ann_key(y) == key]
        if not c:
            return None
        cands.append(c)

    assignment: list[int] = []

    def dfs(i: int, fmap: dict, inv: dict) -> bool:
        if i == len(gens):
            return True
        g = gens[i]
        for y in cands[i]:
            if y in inv:
                continue
            ext = _extend(src, dst, fmap, g, y)
            if ext is None:
                continue
            assignment.append(y)
            if dfs(i + 1, *ext):
                return True
            assignment.pop()
        return False

    if dfs(0, {0: 0}, {0: 0}):
        return dict(zip(gens, assignment))
    return None


def extend_to_map(
    src: FiniteModule, dst: FiniteModule, gen_images: dict[int, int]
) -> dict[int, int] | None:
    """The full element map determined by generator images, or ``None`` if ill defined."""
    fmap = {0: 0}
    for g, y in gen_images.items():
        pairs = {(src.act(g, s), dst.act(y, s)) for s in src.scalars(g)}
        new = {}
        for x, fx in fmap.items():
            for a, b in pairs:
                key, val = src.add[x][a], dst.add[fx][b]
                if new.setdefault(key, val) != val:
                    return None
        fmap = new
    return fmap
