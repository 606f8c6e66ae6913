"""Exhaustive cross-checks between the closed-form predicates and the oracles.

Each sweep returns a :class:`SweepResult` listing every divergence found.
Sweeps over groups can fan out over processes with ``parallel=True``.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from sympy import factorint, primerange

from . import classifier, finring, oracle, rank1
from .abelian import FgZModule, abelian_groups_of_order, partitions_of, render
from .presets import PRESET_NAMES, preset

__all__ = [
    "SweepResult",
    "SUITES",
    "pgroup_partitions",
    "sweep_pgroup_verdicts",
    "sweep_embedding",
    "sweep_mixed_primes",
    "sweep_group_invariants",
    "sweep_ring_invariants",
    "sweep_ring_fixtures",
    "sweep_type_fixtures",
    "sweep_partial_orders",
    "run_suite",
]


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    divergences: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.divergences

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.name}: {self.checked} checks, "
                f"{len(self.divergences)} divergences, {self.seconds:.1f}s")

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "divergences": self.divergences, "seconds": round(self.seconds, 3)}


def _run(name: str, items: Iterable, check: Callable, parallel: bool) -> SweepResult:
    """Apply ``check(item) -> list[str]`` to every item and collect divergences."""
    start = time.perf_counter()
    items = list(items)
    if parallel and len(items) > 1:
        with ProcessPoolExecutor() as pool:
            outs = list(pool.map(check, items))
    else:
        outs = [check(it) for it in items]
    res = SweepResult(name, checked=len(items))
    for o in outs:
        res.divergences.extend(o)
    res.seconds = time.perf_counter() - start
    return res


def pgroup_partitions(p: int, max_order: int) -> list:
    """Partitions ``lam`` with ``p^|lam| <= max_order``, the trivial one included."""
    out = []
    k = 0
    while p**k <= max_order:
        out.extend(partitions_of(k))
        k += 1
    return out


# -- abelian groups --------------------------------------------------------

def _check_pgroup_verdict(module: FgZModule) -> list[str]:
    fast = classifier.is_weakly_uniserial_fg(module)
    slow = oracle.is_weakly_uniserial_oracle(oracle.ConcreteGroup.from_module(module))
    if fast.value != slow.value:
        return [f"{render(module)}: classifier {fast.value}, oracle {slow.value}"]
    return []


def sweep_pgroup_verdicts(pmax: int = 3, omax: int = 81, parallel: bool = False) -> SweepResult:
    """Classifier vs oracle weak uniseriality on every abelian p-group with
    ``p <= pmax`` and order ``<= omax``."""
    mods = [FgZModule()]
    for p in primerange(2, pmax + 1):
        mods += [FgZModule(0, {p: lam}) for lam in pgroup_partitions(p, omax) if lam]
    return _run(f"p-group verdicts (p<={pmax}, order<={omax})", mods, _check_pgroup_verdict, parallel)


def _check_embed(pair) -> list[str]:
    p, lam, mu = pair
    fast = classifier.pgroup_embeds(lam, mu)
    g = oracle.ConcreteGroup(tuple(p**e for e in lam))
    h = oracle.ConcreteGroup(tuple(p**e for e in mu))
    slow = oracle.exists_monomorphism(g, h)
    if fast != slow:
        return [f"p={p} {tuple(lam)} -> {tuple(mu)}: classifier {fast}, oracle {slow}"]
    return []


def sweep_embedding(bounds: dict[int, int] | None = None, parallel: bool = False) -> SweepResult:
    """``pgroup_embeds`` vs exhaustive monomorphism search on all ordered pairs."""
    bounds = bounds or {2: 64, 3: 81}
    pairs = []
    for p, omax in sorted(bounds.items()):
        parts = pgroup_partitions(p, omax)
        pairs += [(p, a, b) for a in parts for b in parts]
    label = ", ".join(f"p={p} order<={o}" for p, o in sorted(bounds.items()))
    return _run(f"embedding ({label})", pairs, _check_embed, parallel)


def mixed_groups(max_order: int) -> list[FgZModule]:
    out = []
    for n in range(2, max_order + 1):
        if len(factorint(n)) >= 2:
            out.extend(abelian_groups_of_order(n))
    return out


def _check_mixed(module: FgZModule) -> list[str]:
    msgs = []
    fast = classifier.is_weakly_uniserial_fg(module)
    if fast.value or fast.reason != classifier.MIXED_PRIMES:
        msgs.append(f"{render(module)}: classifier gave {fast.value}/{fast.reason}")
    if oracle.is_weakly_uniserial_oracle(oracle.ConcreteGroup.from_module(module)):
        msgs.append(f"{render(module)}: oracle accepted")
    return msgs


def sweep_mixed_primes(max_order: int = 60, parallel: bool = False) -> SweepResult:
    """Groups whose order has two or more prime divisors must be rejected by both routes."""
    return _run(f"mixed primes (order<={max_order})", mixed_groups(max_order), _check_mixed, parallel)


def _check_group_invariants(module: FgZModule) -> list[str]:
    """Structural consequences of weak uniseriality on one finite abelian group."""
    name = render(module)
    g = oracle.ConcreteGroup.from_module(module)
    msgs = []
    wu = oracle.is_weakly_uniserial_oracle(g)
    soc = oracle.socle(g)
    if not oracle.socle_is_essential(g):
        msgs.append(f"{name}: socle not essential")
    if len(module.torsion) >= 2 and wu:
        msgs.append(f"{name}: several primes but weakly uniserial")
    if wu.value != classifier.is_weakly_uniserial_fg(module).value:
        msgs.append(f"{name}: classifier and oracle disagree")
    if not wu:
        return msgs
    ass = oracle.associated_primes(g)
    if len(ass) > 1 or (g.order > 1 and len(ass) != 1):
        msgs.append(f"{name}: associated primes {sorted(ass)}")
    if len(oracle.associated_primes(soc)) > 1:
        msgs.append(f"{name}: socle not homogeneous")
    subs = oracle.enumerate_subgroups(g)
    for n in subs:
        if n.order > 1 and not (n.ids <= soc.ids or soc.ids <= n.ids):
            msgs.append(f"{name}: subgroup {n.elements} incomparable with socle")
            break
    reps = {}
    for n in subs:
        reps.setdefault(oracle.iso_signature(n), n)
    for n in reps.values():
        if not oracle.is_weakly_uniserial_oracle(n):
            msgs.append(f"{name}: subgroup {n.elements} not weakly uniserial")
    for n in reps.values():
        shape = FgZModule(0, _shape_of(n))
        if not classifier.is_weakly_uniserial_fg(shape):
            msgs.append(f"{name}: classifier rejects subgroup shape {render(shape)}")
    return msgs


def _shape_of(sub: oracle.Subgroup) -> dict[int, tuple[int, ...]]:
    """Partition per prime, read off ``log_p |G[p^k]|`` (the parts >= k count)."""
    orders = [sub.parent.module.ann_key(x) for x in sub.ids]
    out = {}
    for p in sorted({q for o in orders for q in factorint(o)}):
        logs = [0]
        while True:
            k = len(logs)
            size = sum(1 for o in orders if (p**k) % o == 0)
            logs.append(round(math.log(size, p)))
            if logs[-1] == logs[-2]:
                break
        ge = [b - a for a, b in zip(logs, logs[1:]) if b > a]
        out[p] = tuple(sum(1 for c in ge if c > i) for i in range(ge[0]))
    return out


def sweep_group_invariants(max_order: int = 64, parallel: bool = False) -> SweepResult:
    """Socle, associated-prime and submodule-closure properties on every
    abelian group of order ``<= max_order``."""
    mods = [m for n in range(1, max_order + 1) for m in abelian_groups_of_order(n)]
    return _run(f"group invariants (order<={max_order})", mods, _check_group_invariants, parallel)


# -- rings -----------------------------------------------------------------

def _check_ring_invariants(name: str) -> list[str]:
    ring = preset(name)
    msgs = []
    emwu = finring.every_module_weakly_uniserial(ring)
    if emwu and not finring.is_kasch_right(ring):
        msgs.append(f"{name}: simple artinian but not right Kasch")
    if emwu and ring.size ** 2 <= finring.DEFAULT_MODULE_CAP:
        if finring.check_2generated_counterexample(ring) is not None:
            msgs.append(f"{name}: matrix ring with a bad 2-generated module")
    for side, r in (("right", ring), ("left", ring.opposite)):
        if not finring.is_right_weakly_uniserial(r):
            continue
        tag = f"{name} ({side})"
        if finring.central_idempotents(r) != {r.zero, r.one}:
            msgs.append(f"{tag}: nontrivial central idempotent")
        if finring.is_semiprime(r) and not finring.is_prime(r):
            msgs.append(f"{tag}: semiprime but not prime")
        soc = finring.socle_right(r)
        ideals = finring.enumerate_right_ideals(r)
        mins = finring.minimal_right_ideals(r)
        if any(not finring.exists_right_module_mono(a, b) for a in mins for b in mins):
            msgs.append(f"{tag}: socle not homogeneous")
        for i in ideals:
            if i.order > 1 and len(i.ids & soc.ids) == 1:
                msgs.append(f"{tag}: socle not essential")
            if not (i.ids <= soc.ids or soc.ids <= i.ids):
                msgs.append(f"{tag}: right ideal {i.elements} incomparable with socle")
        if soc.order > 1:
            jac = finring.jacobson_radical(r)
            if finring.ideal_product(jac, jac).order > 1 and finring.ideal_product(soc, soc).order > 1:
                msgs.append(f"{tag}: J^2 and Soc^2 both nonzero")
        r_emwu = finring.every_module_weakly_uniserial(r)
        if not (finring.is_local(r) or r_emwu):
            msgs.append(f"{tag}: neither local nor a matrix ring")
        if r.is_commutative and finring.is_kasch_right(r) and not finring.is_local(r):
            msgs.append(f"{tag}: commutative Kasch but not local")
        if finring.has_principal_maximal_right_ideal(r) and not (
            r_emwu or (finring.is_right_uniserial(r) and finring.is_left_uniserial(r))
        ):
            msgs.append(f"{tag}: principal maximal ideal but neither matrix ring nor uniserial")
    return msgs


def sweep_ring_invariants(names: Iterable[str] = PRESET_NAMES, parallel: bool = False) -> SweepResult:
    return _run("ring invariants (preset zoo)", list(names), _check_ring_invariants, parallel)


def _ring_fixture_checks() -> list[tuple[str, Callable[[], bool]]]:
    from .presets import KXY_X, KXY_Y

    def wu(name):
        r = preset(name)
        return (finring.is_right_weakly_uniserial(r).value, finring.is_left_weakly_uniserial(r).value)

    def kxy_witness():
        r = preset("kxyf2")
        v = finring.is_right_weakly_uniserial(r)
        if v or v.witness is None:
            return False
        xr = finring._from_elements(r, {r.mul[KXY_X][s] for s in range(r.size)})
        yr = finring.RightIdeal(r, r.regular_module.cyclic(KXY_Y))
        a, b = v.witness
        iso = finring.exists_right_module_mono
        return a.order == b.order == xr.order and (
            (iso(a, xr) and iso(b, yr)) or (iso(a, yr) and iso(b, xr))
        )

    def z4_witness():
        r = preset("z4")
        w = finring.check_2generated_counterexample(r)
        if w is None:
            return False
        n, k = w
        two = {(a, b) for a in (0, 2) for b in (0, 2)}
        mod = r.double_module
        return set(k.elements) == two and len(n.elements) == 4 and finring._is_cyclic(n) and (
            finring.right_annihilator(n) != finring.right_annihilator(k)
        ) and mod is not None

    m2 = preset("m2f2")
    return [
        ("z6 right/left not weakly uniserial", lambda: wu("z6") == (False, False)),
        ("z8 weakly uniserial and uniserial",
         lambda: wu("z8") == (True, True) and finring.is_right_uniserial(preset("z8"))),
        ("struct3f2 right/left weakly uniserial", lambda: wu("struct3f2") == (True, True)),
        ("t2f2 right/left not weakly uniserial", lambda: wu("t2f2") == (False, False)),
        ("kxyf2 right-false with (xR, yR) witness", kxy_witness),
        ("m2f2 right/left weakly uniserial", lambda: wu("m2f2") == (True, True)),
        ("m2f2 every module weakly uniserial", lambda: finring.every_module_weakly_uniserial(m2)),
        ("z4 2-generated witness", z4_witness),
        ("m2f2 no 2-generated witness", lambda: finring.check_2generated_counterexample(m2) is None),
    ]


def sweep_ring_fixtures(parallel: bool = False) -> SweepResult:
    checks = _ring_fixture_checks()
    start = time.perf_counter()
    res = SweepResult("ring fixtures", checked=len(checks))
    for label, fn in checks:
        if not fn():
            res.divergences.append(label)
    res.seconds = time.perf_counter() - start
    return res


# -- rank-1 types ----------------------------------------------------------

def _type_fixture_checks() -> list[tuple[str, Callable[[], bool]]]:
    T = rank1.parse_type_literal
    wu = rank1.is_weakly_uniserial_type
    a, b = T("2:inf"), T("3:inf")
    return [
        ("(∞,1,1,0,…) weakly uniserial", lambda: wu(T("2:inf,3:1,5:1,tail:0"))),
        ("(∞,∞,1,0,…) not weakly uniserial", lambda: not wu(T("2:inf,3:inf,5:1,tail:0"))),
        ("(1,1,1,…) not weakly uniserial", lambda: not wu(T("tail:1"))),
        ("Q not weakly uniserial", lambda: not wu(T("tail:inf"))),
        ("Z weakly uniserial", lambda: wu(T("tail:0"))),
        ("generator spec 1/2^inf,1/3,1/5", lambda: wu(T("1/2^inf,1/3,1/5"))),
        ("[∞ at 2] and [∞ at 3] incomparable",
         lambda: not rank1.type_leq(a, b) and not rank1.type_leq(b, a)),
        ("Hom(R_(2), R_(3)) = 0", lambda: not rank1.hom_nonzero(a, b)),
    ]


def sweep_type_fixtures(parallel: bool = False) -> SweepResult:
    checks = _type_fixture_checks()
    res = SweepResult("rank-1 type fixtures", checked=len(checks))
    for label, fn in checks:
        if not fn():
            res.divergences.append(label)
    return res


def random_height_sequences(count: int, seed: int = 0, max_exceptions: int = 5,
                            primes=(2, 3, 5, 7, 11, 13, 17)) -> list:
    """Eventually constant sequences with values in ``{0, 1, 2, inf}``."""
    rng = random.Random(seed)
    values = [0, 1, 2, rank1.INF]
    out = []
    for _ in range(count):
        k = rng.randint(0, max_exceptions)
        ex = {p: rng.choice(values) for p in rng.sample(primes, k)}
        tail = rng.choice([0, 0, 0, 1, rank1.INF])
        out.append(rank1.HeightSequence(ex, tail))
    return out


def sweep_partial_orders(max_total: int = 8, type_samples: int = 1000, seed: int = 0) -> SweepResult:
    """Reflexivity, antisymmetry and transitivity of partition embedding, and
    reflexivity/transitivity of the type order."""
    start = time.perf_counter()
    res = SweepResult(f"partial orders (partitions total<={max_total}, {type_samples} types)")
    parts = [lam for n in range(max_total + 1) for lam in partitions_of(n)]
    le = {(a, b): classifier.pgroup_embeds(a, b) for a in parts for b in parts}
    for a in parts:
        if not le[a, a]:
            res.divergences.append(f"partition {a} not reflexive")
    for a, b in itertools.combinations(parts, 2):
        if le[a, b] and le[b, a]:
            res.divergences.append(f"partitions {a}, {b} violate antisymmetry")
    for a, b, c in itertools.product(parts, repeat=3):
        if le[a, b] and le[b, c] and not le[a, c]:
            res.divergences.append(f"partitions {a} <= {b} <= {c} violate transitivity")
    res.checked += len(parts) ** 3

    seqs = random_height_sequences(type_samples, seed)
    n = len(seqs)
    leq = [[rank1.type_leq(s, t) for t in seqs] for s in seqs]
    for i in range(n):
        if not leq[i][i]:
            res.divergences.append(f"type {seqs[i].literal()} not reflexive")
    above = [{j for j in range(n) if leq[i][j]} for i in range(n)]
    for i in range(n):
        for j in above[i]:
            if not above[j] <= above[i]:
                res.divergences.append(f"types {seqs[i].literal()} <= {seqs[j].literal()} break transitivity")
                break
    res.checked += n * n
    res.seconds = time.perf_counter() - start
    return res


SUITES: dict[str, Callable[..., SweepResult]] = {
    "thm55": sweep_pgroup_verdicts,
    "embed": sweep_embedding,
    "mixed": sweep_mixed_primes,
    "groups": sweep_group_invariants,
    "rings": sweep_ring_invariants,
    "ring-fixtures": sweep_ring_fixtures,
    "types": sweep_type_fixtures,
    "orders": sweep_partial_orders,
}


def run_suite(name: str, parallel: bool = False, **kwargs) -> list[SweepResult]:
    """Run one suite (or ``"all"``); keyword arguments go to the sweep."""
    if name == "all":
        return [run_suite(n, parallel=parallel)[0] for n in SUITES]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    fn = SUITES[name]
    if name in ("thm55", "embed", "mixed", "groups", "rings"):
        kwargs["parallel"] = parallel
    return [fn(**kwargs)]
