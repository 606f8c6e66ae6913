"""``wuni`` command line: classify, embed, type, ring and sweep.

Exit status is 0 on success, 1 when a cross-check diverges or a sweep
fails, and 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import classifier, finring, oracle, rank1, sweeps
from ._modules import CapExceeded
from .abelian import FgZModule, ModuleSyntaxError, parse_module, render
from .presets import preset

RING_CHECKS = ("wu", "local", "kasch", "prime", "semiprime", "radical", "socle",
               "uniserial", "emwu", "2gen")


class UsageError(Exception):
    """Bad input; reported on stderr with exit status 2."""


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


def _text(report: dict, indent: int = 0) -> list[str]:
    width = max((len(k) for k in report), default=0)
    lines = []
    for k, v in report.items():
        if isinstance(v, dict) and v and all(isinstance(x, dict) for x in v.values()):
            lines.append(" " * indent + f"{k}:")
            for sub, body in v.items():
                lines.append(" " * (indent + 2) + f"{sub}:")
                lines.extend(_text(body, indent + 4))
        else:
            lines.append(" " * indent + f"{k:<{width}}  {_fmt(v)}")
    return lines


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_jsonable(report), ensure_ascii=False, indent=2))
    else:
        print("\n".join(_text(report)))


def _parse(text: str):
    try:
        return parse_module(text)
    except ModuleSyntaxError as exc:
        raise UsageError(str(exc)) from exc


# -- subcommands -----------------------------------------------------------

def cmd_classify(args) -> tuple[dict, int]:
    m = _parse(args.module)
    v = classifier.classify(m)
    return {
        "command": "classify",
        "input": render(m),
        "weakly_uniserial": v.value,
        "reason": v.reason,
        "clause": v.clause,
    }, 0


def cmd_embed(args) -> tuple[dict, int]:
    src, dst = _parse(args.source), _parse(args.target)
    for text, m in ((args.source, src), (args.target, dst)):
        if not isinstance(m, FgZModule):
            raise UsageError(f"{text!r} is not finitely generated; embed takes finitely generated modules")
    answer = classifier.fg_embeds(src, dst)
    report = {"command": "embed", "from": render(src), "to": render(dst), "embeds": answer}
    status = 0
    if src.is_finite and dst.is_finite:
        try:
            g, h = oracle.ConcreteGroup.from_module(src), oracle.ConcreteGroup.from_module(dst)
        except CapExceeded as exc:
            report["oracle"] = f"skipped ({exc})"
            return report, status
        images = oracle.find_monomorphism_between(g, h)
        report["oracle"] = "confirmed" if (images is not None) == answer else "DIVERGES"
        if (images is not None) != answer:
            status = 1
        if images is not None:
            report["witness"] = [[list(k), list(v)] for k, v in images.items()]
    else:
        report["oracle"] = "not applicable (infinite group)"
    return report, status


def _type_fields(t: rank1.TypeClass, prefix: str = "") -> dict:
    canon = t.canonical()
    return {
        f"{prefix}input": t.representative.literal(),
        f"{prefix}sequence": t.representative.display(),
        f"{prefix}type": canon.literal(),
        f"{prefix}weakly_uniserial": rank1.is_weakly_uniserial_type(t),
    }


def cmd_type(args) -> tuple[dict, int]:
    try:
        a = rank1.parse_type_literal(args.literal)
        b = rank1.parse_type_literal(args.other) if args.other else None
    except (rank1.HeightSyntaxError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    report = {"command": "type", **_type_fields(a)}
    if b is not None:
        report.update(_type_fields(b, "other_"))
        report.update({
            "leq": rank1.type_leq(a, b),
            "geq": rank1.type_leq(b, a),
            "same_type": rank1.same_type(a, b),
            "hom_nonzero": rank1.hom_nonzero(a, b),
            "hom_nonzero_reverse": rank1.hom_nonzero(b, a),
        })
    return report, 0


def _load_ring(spec: str) -> finring.FiniteRing:
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            return finring.FiniteRing.from_json(path)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot load ring from {spec}: {exc}") from exc
    try:
        return preset(spec)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc


def _wit(pair) -> list | None:
    return None if pair is None else [list(s.elements) for s in pair]


def _ring_check(ring: finring.FiniteRing, check: str) -> dict:
    if check == "wu":
        r, l = finring.is_right_weakly_uniserial(ring), finring.is_left_weakly_uniserial(ring)
        out = {"right": r.value, "left": l.value}
        if not r:
            out["right_witness"] = _wit(r.witness)
        if not l:
            out["left_witness"] = _wit(l.witness)
        return out
    if check == "local":
        return {"value": finring.is_local(ring)}
    if check == "kasch":
        return {"value": finring.is_kasch_right(ring)}
    if check == "prime":
        return {"value": finring.is_prime(ring)}
    if check == "semiprime":
        return {"value": finring.is_semiprime(ring)}
    if check == "radical":
        return {"elements": list(finring.jacobson_radical(ring).elements)}
    if check == "socle":
        return {"elements": list(finring.socle_right(ring).elements)}
    if check == "uniserial":
        return {"right": finring.is_right_uniserial(ring), "left": finring.is_left_uniserial(ring)}
    if check == "emwu":
        return {"value": finring.every_module_weakly_uniserial(ring)}
    if check == "2gen":
        try:
            pair = finring.check_2generated_counterexample(ring)
        except CapExceeded as exc:
            return {"skipped": str(exc)}
        return {"found": pair is not None, "witness": _wit(pair)}
    raise UsageError(f"unknown check {check!r}")


def cmd_ring(args) -> tuple[dict, int]:
    try:
        ring = _load_ring(args.ring)
    except finring.RingAxiomError as exc:
        raise UsageError(str(exc)) from exc
    try:
        ring.check_cap()
    except CapExceeded as exc:
        raise UsageError(str(exc)) from exc
    checks = []
    for c in args.check or ["wu"]:
        checks.extend(RING_CHECKS if c == "all" else [c])
    report = {"command": "ring", "ring": ring.name or args.ring, "order": ring.size,
              "checks": {c: _ring_check(ring, c) for c in dict.fromkeys(checks)}}
    return report, 0


def cmd_sweep(args) -> tuple[dict, int]:
    kwargs = {}
    if args.suite == "thm55":
        kwargs = {"pmax": args.pmax, "omax": args.omax}
    elif args.pmax != 3 or args.omax != 81:
        raise UsageError("--pmax/--omax only apply to the thm55 suite")
    try:
        results = sweeps.run_suite(args.suite, parallel=args.parallel, **kwargs)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    ok = all(r.passed for r in results)
    if not args.json:
        for r in results:
            print(r.summary())
            for d in r.divergences:
                print(f"    {d}")
        return None, 0 if ok else 1
    return {"command": "sweep", "suite": args.suite, "passed": ok,
            "results": [r.as_dict() for r in results]}, 0 if ok else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of aligned text")

    p = argparse.ArgumentParser(prog="wuni", description="Weak uniseriality checks for abelian groups, "
                                "rank-1 torsion-free groups and finite rings.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify a Z-module expression")
    c.add_argument("module", help='e.g. "Z^2", "Z/2 + Z/4", "Z/2^inf", "(Z/3)^inf"')
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("embed", parents=[common], help="decide whether one f.g. Z-module embeds in another")
    e.add_argument("source")
    e.add_argument("target")
    e.set_defaults(func=cmd_embed)

    t = sub.add_parser("type", parents=[common], help="type of a rank-1 torsion-free group")
    t.add_argument("literal", help='height literal "2:inf,3:1,tail:0" or generators "1/2^inf,1/3"')
    t.add_argument("other", nargs="?", help="second literal to compare against")
    t.set_defaults(func=cmd_type)

    r = sub.add_parser("ring", parents=[common], help="checks on a finite ring (preset name or JSON file)")
    r.add_argument("ring")
    r.add_argument("--check", action="append", choices=RING_CHECKS + ("all",),
                   help="repeatable; default wu")
    r.set_defaults(func=cmd_ring)

    s = sub.add_parser("sweep", parents=[common], help="run a classifier-vs-oracle sweep")
    s.add_argument("--suite", default="all", help=f"one of {', '.join(sweeps.SUITES)}, all")
    s.add_argument("--pmax", type=int, default=3)
    s.add_argument("--omax", type=int, default=81)
    s.add_argument("--parallel", action="store_true", help="spread the sweep over processes")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, status = args.func(args)
    except UsageError as exc:
        print(f"wuni {args.command}: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"wuni {args.command}: {exc} (raise WU_CAP to allow more)", file=sys.stderr)
        return 2
    if report is not None:
        _emit(report, args.json)
    return status


if __name__ == "__main__":
    sys.exit(main())
