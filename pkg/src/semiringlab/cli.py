"""Command line workbench.

Structure references are corpus names or paths to structure files. Reports
are JSON with sorted keys and no timestamps, so identical jobs produce
byte-identical output; timing is opt-in and goes to stderr.

Exit codes: 0 success, 1 theorem-assertion failure, 2 input error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .corpus import corpus, corpus_entry, corpus_names, corpus_semimodules
from .covering import covering, mccoy_exponent, semiring_avoidance, davis_witness
from .errors import CapExceeded, StructureError, TheoremViolation
from .fileio import ingest, structure_to_json
from .ideals import (
    TWO_SIDED,
    classify_ideal,
    enumerate_ideals,
    generate_ideal,
    mult_closure,
)
from .covering import avoidance_witness, t_semiprime_avoidance, union_avoidance_suite
from .spectrum import compactly_packed_battery, spec_of
from .suites import FAIL, PASS, SKIP, verify_all
from .tables import CayleyStructure, check_laws, LAW_NAMES, self_action
from .zerodivisors import (
    few_zero_divisors,
    kasch_semilocal_report,
    monoid_zd_check,
    total_quotient,
    zero_divisor_report,
)

REPORT_VERSION = 1


def _resolve(ref: str) -> CayleyStructure:
    for name in corpus_names():
        if name == ref:
            return corpus_entry(ref).structure
    loaded = ingest(ref)
    if isinstance(loaded, CayleyStructure):
        return loaded
    return loaded.semiring


def _parse_gens(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _emit(doc: dict, as_json: bool) -> None:
    doc = {"report_version": REPORT_VERSION, **doc}
    if as_json:
        print(json.dumps(doc, sort_keys=True, indent=2))
        return
    for line in _render(doc):
        print(line)


def _render(doc, prefix="") -> list[str]:
    lines = []
    if isinstance(doc, dict):
        for key in sorted(doc):
            value = doc[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{prefix}{key}:")
                lines.extend(_render(value, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {value}")
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)):
                lines.extend(_render(value, prefix + "  "))
            else:
                lines.append(f"{prefix}- {value}")
    return lines


def cmd_laws(args) -> int:
    s = _resolve(args.structure)
    rep = check_laws(s)
    doc = {
        "job": {"command": "laws", "structure": args.structure},
        "flags": {law: rep.flag(law) for law in LAW_NAMES},
        "witnesses": {k: list(v) for k, v in sorted(rep.witnesses.items())},
        "zero": rep.zero,
        "one": rep.one,
        "classes": {
            "ringoid": rep.is_ringoid,
            "na_hemiring": rep.is_na_hemiring,
            "na_semiring": rep.is_na_semiring,
            "semiring": rep.is_semiring,
            "commutative_semiring": rep.is_commutative_semiring,
        },
    }
    _emit(doc, args.json)
    return 0


def cmd_ideals(args) -> int:
    s = _resolve(args.structure)
    rows = []
    for ideal in enumerate_ideals(s, args.side, cap=args.cap_ideals):
        row = {"members": list(ideal.members())}
        if args.side == TWO_SIDED:
            cls = classify_ideal(ideal)
            row.update(
                subtractive=cls.subtractive,
                proper=cls.proper,
                prime=cls.prime,
                semiprime=cls.semiprime,
                two_absorbing=cls.two_absorbing,
                maximal=cls.maximal,
                radical_ideal=cls.radical_ideal,
            )
        rows.append(row)
    _emit({"job": {"command": "ideals", "structure": args.structure, "side": args.side}, "ideals": rows}, args.json)
    return 0


def cmd_spec(args) -> int:
    s = _resolve(args.structure)
    primes = [list(p.members()) for p in spec_of(s)]
    _emit({"job": {"command": "spec", "structure": args.structure}, "primes": primes}, args.json)
    return 0


def cmd_packed(args) -> int:
    s = _resolve(args.structure)
    battery = compactly_packed_battery(s)
    doc = {
        "job": {"command": "packed", "structure": args.structure},
        "primes": [list(p.members()) for p in battery.primes],
        "weak_gaussian": battery.weak_gaussian,
        "compactly_packed": battery.compactly_packed,
        "equivalence_table": battery.equivalence_table,
        "radical_principal_map": {
            str(list(k)): v for k, v in sorted(battery.radical_principal_map.items())
        },
    }
    _emit(doc, args.json)
    return 0


def cmd_avoid(args) -> int:
    s = _resolve(args.structure)
    target = generate_ideal(s, _parse_gens(args.target))
    covers = [generate_ideal(s, _parse_gens(c)) for c in args.cover]
    if args.mode == "ringoid":
        report = avoidance_witness(target, covers)
    elif args.mode == "semiring":
        report = semiring_avoidance(target, covers)
    elif args.mode in ("radical", "semiprime"):
        report = union_avoidance_suite(target, covers, args.mode)
    elif args.mode == "t-semiprime":
        t_set = mult_closure(s, _parse_gens(args.t_set or ""))
        report = t_semiprime_avoidance(target, covers, t_set)
    else:  # davis
        if args.element is None:
            raise StructureError("davis mode needs --element")
        report = davis_witness(args.element, target, covers)
    doc = {
        "job": {
            "command": "avoid",
            "structure": args.structure,
            "mode": args.mode,
            "target": _parse_gens(args.target),
            "covers": [_parse_gens(c) for c in args.cover],
        },
        "verdict": report.verdict,
        "witness": report.witness if not isinstance(report.witness, tuple) else list(report.witness),
        "violated_hypothesis": report.violated_hypothesis,
        "details": _plain(report.details),
    }
    _emit(doc, args.json)
    return 0


def cmd_mccoy(args) -> int:
    s = _resolve(args.structure)
    target = generate_ideal(s, _parse_gens(args.target))
    covers = [generate_ideal(s, _parse_gens(c)) for c in args.cover]
    cov = covering(target, covers)
    report = mccoy_exponent(cov)
    doc = {
        "job": {
            "command": "mccoy",
            "structure": args.structure,
            "target": _parse_gens(args.target),
            "covers": [_parse_gens(c) for c in args.cover],
        },
        "efficient": cov.efficient,
        "verdict": report.verdict,
        "exponent": report.exponent,
        "violated_hypothesis": report.violated_hypothesis,
        "details": _plain(report.details),
    }
    _emit(doc, args.json)
    return 0


def cmd_zdiv(args) -> int:
    s = _resolve(args.structure)
    m = self_action(s)
    report = zero_divisor_report(s, m)
    doc = {
        "job": {"command": "zdiv", "structure": args.structure, "degree_cap": args.degree_cap},
        "zero_divisors": list(report.zset),
        "radical_decomposition": [
            {"element": x, "radical": list(r)} for x, r in report.radical_decomposition
        ],
        "associated_primes": [
            {"element": x, "annihilator": list(a)} for x, a in report.ass
        ],
        "very_few": report.very_few,
        "few": report.few,
        "property_a": report.property_a,
    }
    if args.degree_cap is not None:
        slice_report = monoid_zd_check(s, m, args.degree_cap)
        doc["slice"] = {
            "verdict": slice_report.verdict,
            "violated_hypothesis": slice_report.violated_hypothesis,
            "tallies": _plain(slice_report.details),
        }
    _emit(doc, args.json)
    return 0


def cmd_quotient(args) -> int:
    s = _resolve(args.structure)
    q = total_quotient(s)
    report = kasch_semilocal_report(q)
    few, decomposition = few_zero_divisors(s)
    doc = {
        "job": {"command": "quotient", "structure": args.structure},
        "size": q.structure.size,
        "canonical_map": list(q.canonical),
        "maximal_ideals": [list(m.members()) for m in q.maximal_ideals],
        "kasch": report.kasch,
        "semilocal": report.semilocal,
        "very_few": report.very_few,
        "few_zero_divisors": few,
        "decomposition": [list(p.members()) for p in decomposition],
    }
    _emit(doc, args.json)
    return 0


def cmd_verify_all(args) -> int:
    scope = None if args.scope is None else [n for n in args.scope.split(",") if n]
    if scope is not None:
        known = set(corpus_names())
        unknown = [name for name in scope if name not in known]
        if unknown:
            raise StructureError(f"unknown corpus entries {unknown}")
    started = time.perf_counter()
    results = verify_all(scope=scope, seed=args.seed)
    elapsed = time.perf_counter() - started
    tallies = {"checks": len(results), "passed": 0, "failed": 0, "skipped": 0}
    rows = []
    for r in sorted(results, key=lambda r: r.name):
        tallies["passed" if r.status == PASS else "failed" if r.status == FAIL else "skipped"] += 1
        rows.append({"check": r.name, "status": r.status, "detail": r.detail})
    doc = {
        "job": {"command": "verify-all", "scope": sorted(scope) if scope else None, "seed": args.seed},
        "tallies": tallies,
        "results": rows,
    }
    _emit(doc, args.json)
    if args.timing:
        print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    return 1 if tallies["failed"] else 0


def cmd_ingest(args) -> int:
    loaded = ingest(args.path)
    s = loaded if isinstance(loaded, CayleyStructure) else loaded.semiring
    doc = {
        "job": {"command": "ingest", "path": args.path},
        "loaded": structure_to_json(s),
        "kind": "structure" if isinstance(loaded, CayleyStructure) else "semimodule",
    }
    _emit(doc, args.json)
    return 0


def cmd_corpus(args) -> int:
    rows = []
    for entry in corpus():
        rows.append(
            {
                "name": entry.name,
                "size": entry.structure.size,
                "claims": list(entry.claims),
                "flags": dict(sorted(entry.flags.items())),
                "modules": sorted(corpus_semimodules(entry)),
                "doc": entry.doc,
            }
        )
    _emit({"job": {"command": "corpus"}, "entries": rows}, args.json)
    return 0


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap-carrier", type=int, default=4096)
    common.add_argument("--cap-ideals", type=int, default=16)

    parser = argparse.ArgumentParser(
        prog="semiringlab",
        description="finite semiring workbench: laws, ideals, spectra, coverings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("laws", parents=[common], help="check every law of a structure")
    p.add_argument("structure")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("ideals", parents=[common], help="enumerate and classify ideals")
    p.add_argument("structure")
    p.add_argument("--side", choices=["left", "right", TWO_SIDED], default=TWO_SIDED)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("spec", parents=[common], help="prime spectrum")
    p.add_argument("structure")
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("packed", parents=[common], help="compactly packed battery")
    p.add_argument("structure")
    p.set_defaults(func=cmd_packed)

    p = sub.add_parser("avoid", parents=[common], help="avoidance and covering checks")
    p.add_argument("structure")
    p.add_argument("--target", required=True, help="comma separated generator indices")
    p.add_argument("--cover", action="append", required=True, help="generators; repeatable")
    p.add_argument(
        "--mode",
        choices=["ringoid", "semiring", "radical", "semiprime", "t-semiprime", "davis"],
        default="semiring",
    )
    p.add_argument("--t-set", help="generators of the multiplicative set")
    p.add_argument("--element", type=int, help="element x for davis mode")
    p.set_defaults(func=cmd_avoid)

    p = sub.add_parser("mccoy", parents=[common], help="exponent for an efficient covering")
    p.add_argument("structure")
    p.add_argument("--target", required=True)
    p.add_argument("--cover", action="append", required=True)
    p.set_defaults(func=cmd_mccoy)

    p = sub.add_parser("zdiv", parents=[common], help="zero-divisor report for the self action")
    p.add_argument("structure")
    p.add_argument("--degree-cap", type=int, default=None)
    p.set_defaults(func=cmd_zdiv)

    p = sub.add_parser("quotient", parents=[common], help="total quotient semiring report")
    p.add_argument("structure")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify-all", parents=[common], help="run every theorem suite")
    p.add_argument("--scope", help="comma separated corpus names")
    p.add_argument("--seed", type=int, default=0, help="seed for sum-tree sampling")
    p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("ingest", parents=[common], help="load and verify a structure file")
    p.add_argument("path")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("corpus", parents=[common], help="list built-in structures")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (StructureError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
