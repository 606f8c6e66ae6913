"""Height sequences and types of rank-1 torsion-free abelian groups.

Only eventually constant height sequences are represented: finitely many
prime exceptions over a constant tail.  Values live in ``N ∪ {∞}`` with
``INF = math.inf`` as infinity.

>>> a = parse_height("2:inf,3:1,5:1,tail:0")
>>> is_weakly_uniserial_type(TypeClass(a))
True
>>> type_leq(TypeClass(parse_height("tail:0")), TypeClass(parse_height("tail:inf")))
True
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from sympy import isprime, nextprime

__all__ = [
    "INF",
    "HeightSyntaxError",
    "HeightSequence",
    "TypeClass",
    "Rank1GeneratorSpec",
    "equivalent",
    "type_leq",
    "hom_nonzero",
    "same_type",
    "is_weakly_uniserial_type",
    "type_of_spec",
    "parse_height",
    "parse_generators",
    "parse_type_literal",
    "format_value",
]

INF = math.inf


class HeightSyntaxError(ValueError):
    """Raised for malformed or non eventually constant height literals."""


def _value(v) -> float | int:
    if v == INF:
        return INF
    v = int(v)
    if v < 0:
        raise ValueError(f"height values are non-negative, got {v}")
    return v


def format_value(v) -> str:
    return "inf" if v == INF else str(v)


@dataclass(frozen=True)
class HeightSequence:
    """Value ``exceptions[p]`` at listed primes, ``tail`` at every other prime.

    Exceptions equal to the tail are dropped so the representation is unique.
    """

    exceptions: tuple = field(default=())
    tail: float | int = 0

    def __post_init__(self):
        tail = _value(self.tail)
        items = self.exceptions.items() if isinstance(self.exceptions, Mapping) else self.exceptions
        canon = {}
        for p, v in items:
            p = int(p)
            if not isprime(p):
                raise ValueError(f"height sequence key {p} is not prime")
            v = _value(v)
            if v != tail:
                canon[p] = v
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "exceptions", tuple(sorted(canon.items())))

    def __getitem__(self, p: int):
        return dict(self.exceptions).get(p, self.tail)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def infinite_primes(self) -> frozenset[int]:
        return frozenset(p for p, v in self.exceptions if v == INF)

    def literal(self) -> str:
        parts = [f"{p}:{format_value(v)}" for p, v in self.exceptions]
        parts.append(f"tail:{format_value(self.tail)}")
        return ",".join(parts)

    def display(self) -> str:
        """``(∞, 1, 1, 0, …)``: every prime up to the last exception, one tail value, then an ellipsis."""
        shown = []
        last = self.primes[-1] if self.exceptions else 1
        p = 2
        while p <= last:
            shown.append(self[p])
            p = nextprime(p)
        shown.append(self.tail)
        return "(" + ", ".join("∞" if v == INF else str(v) for v in shown) + ", …)"

    def __str__(self) -> str:
        return self.display()


@dataclass(frozen=True, eq=False)
class TypeClass:
    """Equivalence class of a height sequence; equality is equivalence."""

    representative: HeightSequence

    def canonical(self) -> HeightSequence:
        """The class member with no finite exceptions (finite values moved to
        the tail, or to 0 when the tail is infinite)."""
        rep = self.representative
        if rep.tail == INF:
            return HeightSequence({p: 0 for p, v in rep.exceptions}, INF)
        return HeightSequence({p: INF for p in rep.infinite_primes()}, rep.tail)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeClass):
            return NotImplemented
        return equivalent(self.representative, other.representative)

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __le__(self, other: "TypeClass") -> bool:
        return type_leq(self, other)

    def __str__(self) -> str:
        return f"[{self.representative.display()}]"


Seq = Union[HeightSequence, TypeClass]


def _seq(x: Seq) -> HeightSequence:
    return x.representative if isinstance(x, TypeClass) else x


def equivalent(a: Seq, b: Seq) -> bool:
    """Equal at all but finitely many primes, and infinite at exactly the same primes."""
    a, b = _seq(a), _seq(b)
    if a.tail != b.tail:
        return False
    for p in set(a.primes) | set(b.primes):
        if (a[p] == INF) != (b[p] == INF):
            return False
    return True


def type_leq(s: Seq, t: Seq) -> bool:
    """``type(s) <= type(t)``: infinite positions of ``s`` are infinite in
    ``t`` and ``s_p <= t_p`` for all but finitely many ``p``."""
    s, t = _seq(s), _seq(t)
    if s.tail > t.tail:
        return False
    return all(t[p] == INF for p in set(s.primes) | set(t.primes) if s[p] == INF)


def hom_nonzero(s: Seq, t: Seq) -> bool:
    """A nonzero homomorphism exists between rank-1 groups iff their types compare."""
    return type_leq(s, t)


def same_type(s: Seq, t: Seq) -> bool:
    """Isomorphism test for rank-1 groups."""
    return type_leq(s, t) and type_leq(t, s)


def is_weakly_uniserial_type(t: Seq) -> bool:
    """Tail 0 and at most one infinite value."""
    t = _seq(t)
    return t.tail == 0 and len(t.infinite_primes()) <= 1


@dataclass(frozen=True)
class Rank1GeneratorSpec:
    """The group ``<1/p^e : (p, e_max) in entries, e <= e_max>`` inside Q."""

    entries: frozenset = field(default=frozenset())

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        seen = {}
        for p, e in items:
            p = int(p)
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            if p in seen:
                raise ValueError(f"prime {p} listed twice")
            e = _value(e)
            if e < 1:
                raise ValueError("generator exponents are >= 1 or inf")
            seen[p] = e
        object.__setattr__(self, "entries", frozenset(seen.items()))

    def literal(self) -> str:
        terms = []
        for p, e in sorted(self.entries):
            terms.append(f"1/{p}" if e == 1 else f"1/{p}^{format_value(e)}")
        return ",".join(terms) if terms else "1"


def type_of_spec(spec: Rank1GeneratorSpec) -> TypeClass:
    """Type of the subgroup of Q described by ``spec``: the height sequence of 1."""
    return TypeClass(HeightSequence(dict(spec.entries), 0))


# -- literals --------------------------------------------------------------

_ELLIPSIS = re.compile(r"\.\.\.|…")


def parse_height(text: str) -> HeightSequence:
    """Parse ``"2:inf,3:1,5:1,tail:0"``; the tail defaults to 0."""
    if _ELLIPSIS.search(text):
        raise HeightSyntaxError(
            "only eventually constant height sequences are supported: list the "
            "exceptional primes as p:v and give the constant value as tail:v"
        )
    exceptions: dict[int, float | int] = {}
    tail = 0
    for item in (x.strip() for x in text.split(",")):
        if not item:
            continue
        m = re.fullmatch(r"(tail|\d+)\s*:\s*(inf|\d+)", item)
        if not m:
            raise HeightSyntaxError(f"cannot parse {item!r}; expected p:v or tail:v")
        key, raw = m.groups()
        val = INF if raw == "inf" else int(raw)
        if key == "tail":
            tail = val
            continue
        p = int(key)
        if not isprime(p):
            raise HeightSyntaxError(f"{p} is not prime")
        if p in exceptions:
            raise HeightSyntaxError(f"prime {p} listed twice")
        exceptions[p] = val
    return HeightSequence(exceptions, tail)


def parse_generators(text: str) -> Rank1GeneratorSpec:
    """Parse ``"1/2^inf,1/3,1/5"`` (``"1"`` alone is Z)."""
    entries = {}
    for item in (x.strip() for x in text.split(",")):
        if not item or item == "1":
            continue
        m = re.fullmatch(r"1/(\d+)(?:\^(inf|\d+))?", item)
        if not m:
            raise HeightSyntaxError(f"cannot parse generator {item!r}; expected 1/p, 1/p^k or 1/p^inf")
        p, e = int(m.group(1)), m.group(2)
        if p in entries:
            raise HeightSyntaxError(f"prime {p} listed twice")
        entries[p] = INF if e == "inf" else int(e or 1)
    try:
        return Rank1GeneratorSpec(entries)
    except ValueError as exc:
        raise HeightSyntaxError(str(exc)) from exc


def parse_type_literal(text: str) -> TypeClass:
    """Either a height literal or a generator list (recognised by ``/``)."""
    if "/" in text or text.strip() == "1":
        return type_of_spec(parse_generators(text))
    return TypeClass(parse_height(text))
