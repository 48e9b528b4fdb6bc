"""Command-line front end: deterministic JSON reports on standard output."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import mod1
from .codes import Classification, dual_code, euclidean_weight, load_code, split_even_odd
from .u0 import U0Label, fuse_u0, weight_mod1
from .ud import (
    CharacterLabel,
    case_b_inventory,
    character_from_eta,
    induce,
    orbits,
    weight_mod1_uxi,
)
from .verify import SUITES, run_suite

SCHEMA = "parafusion-report/1"


def _rat(q) -> str:
    return str(Fraction(q))


def _label_list(x) -> list[str]:
    return [str(c) for c in x.components()]


def _report(command: str, parameters: dict, results: dict, seed=None,
            deterministic: bool = True) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "results": results,
        "seed": seed,
        "deterministic": deterministic,
    }


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'i,l', got {text!r}")
    return int(parts[0]), int(parts[1])


def cmd_fusion(args) -> tuple[dict, int]:
    i1, l1 = _parse_pair(args.left)
    i2, l2 = _parse_pair(args.right)
    a = U0Label(args.k, i1, l1)
    b = U0Label(args.k, i2, l2)
    product = fuse_u0(a, b)
    results = {
        "left": str(a),
        "right": str(b),
        "terms": [
            {"label": str(label), "multiplicity": mult} for label, mult in product.items()
        ],
    }
    params = {"k": args.k, "left": args.left, "right": args.right}
    return _report("fusion", params, results, deterministic=args.deterministic), 0


def cmd_classify(args) -> tuple[dict, int]:
    code = load_code(args.code)
    results: dict = {
        "k": code.k,
        "length": code.length,
        "size": code.size,
        "classification": code.classification.value,
        "generators": [
            {
                "word": list(g.entries),
                "euclidean_weight": euclidean_weight(g),
                "weight_mod1": _rat(weight_mod1_uxi(g)),
            }
            for g in code.generators
        ],
        "dual_size": dual_code(code).size,
    }
    if code.classification is Classification.CASE_B:
        d0, d1 = split_even_odd(code)
        results["even_part_size"] = len(d0)
        results["odd_part_size"] = len(d1)
    return _report("classify", {"code": args.code}, results,
                   deterministic=args.deterministic), 0


def _parse_chi(text: str, code) -> CharacterLabel:
    text = text.strip()
    for prefix in ("eta=", "chi="):
        if text.startswith(prefix):
            text = text[len(prefix):]
    return character_from_eta(code, tuple(int(x) for x in text.split(",")))


def cmd_modules(args) -> tuple[dict, int]:
    code = load_code(args.code)
    params = {"code": args.code, "chi": args.chi, "induce": args.induce}
    if code.classification is Classification.INVALID:
        raise ValueError("module inventory requires a Case A or Case B code")

    if code.classification is Classification.CASE_B:
        inventory = case_b_inventory(code)
        results = {
            "classification": "CaseB",
            "even_part_size": inventory.even_part.size,
            "odd_representative": list(inventory.odd_representative.entries),
            "entries": [
                {
                    "orbit_representative": _label_list(e.orbit_representative),
                    "summand_index": e.summand_index,
                    "multiplicity": e.multiplicity,
                    "u0_decomposition": [
                        {"label": _label_list(w), "multiplicity": m}
                        for w, m in e.u0_decomposition
                    ],
                    "flag": e.flag,
                }
                for e in inventory.entries
            ],
        }
        return _report("modules", params, results,
                       deterministic=args.deterministic), 0

    chi = _parse_chi(args.chi, code) if args.chi else None
    census = orbits(code, restrict_to_character=chi)
    counts: dict[str, int] = {}
    for o in census:
        key = str(o.character)
        if o.stabilizer_order == 1:
            contribution = 1
        elif code.k % 4 == 1:
            contribution = o.stabilizer_order
        else:
            contribution = o.isotropic_order
        counts[key] = counts.get(key, 0) + contribution
    orbit_table = []
    for o in census:
        entry = {
            "representative": _label_list(o.representative),
            "size": o.size,
            "stabilizer_order": o.stabilizer_order,
            "isotropic_order": o.isotropic_order,
            "character": str(o.character),
            "weight_mod1": _rat(
                mod1(sum((weight_mod1(c) for c in o.representative.components()),
                         Fraction(0)))
            ),
        }
        if args.induce:
            report = induce(code, o.representative)
            entry["induced"] = {
                "summand_count": report.summand_count,
                "multiplicity": report.multiplicity,
                "u0_decomposition": [
                    {"label": _label_list(w), "multiplicity": m}
                    for w, m in report.u0_decomposition
                ],
            }
        orbit_table.append(entry)
    results = {
        "classification": "CaseA",
        "orbit_count": len(census),
        "orbits": orbit_table,
        "twisted_module_counts": counts,
    }
    return _report("modules", params, results, deterministic=args.deterministic), 0


def cmd_verify(args) -> tuple[dict, int]:
    checks = run_suite(args.suite, args.k, seed=args.seed)
    all_passed = all(c.passed for c in checks)
    results = {
        "suite": args.suite,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "all_passed": all_passed,
    }
    params = {"suite": args.suite, "k": args.k}
    report = _report("verify", params, results, seed=args.seed,
                     deterministic=args.deterministic)
    return report, 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parafusion",
        description="Exact fusion-ring, code, and lattice computations "
                    "with deterministic JSON reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fusion", help="fusion product of two U(i,l) classes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--left", required=True, metavar="i,l")
    p.add_argument("--right", required=True, metavar="i,l")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("classify", help="enumerate and classify a code from JSON")
    p.add_argument("--code", required=True, help="path to a code JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("modules", help="orbit census and module inventory for a code")
    p.add_argument("--code", required=True, help="path to a code JSON file")
    p.add_argument("--chi", default=None, help="restrict to the character 'a,b,...'")
    p.add_argument("--induce", action="store_true", help="include induced-module reports")
    p.set_defaults(func=cmd_modules)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--deterministic", action="store_true", default=True,
                        help="force single-threaded evaluation (always on)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report, indent=2, sort_keys=True))
    return status


if __name__ == "__main__":
    sys.exit(main())
