"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 internal error.  The
paper-examples subcommand exits 0 only if all three bundled worked
examples reproduce.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bicyclic as bc
from .classify import (
    FLAG_ORDER,
    check_consistency,
    classify_pair,
    report_json,
    witness_json,
)
from .clots import homogeneity, is_normal_submonoid
from .monoid import (
    FiniteMonoid,
    MonoidError,
    SubmonoidMask,
    enumerate_submonoids,
    full_transformation_monoid,
    load_monoid,
)
from .natfuncs import doubling_refutation_report, ea_to_literal
from .relations import (
    internal_reflexive_closure,
    syntactic_congruence,
    syntactic_preorder,
    syntactic_reflexive_relation,
    zero_class,
)
from .search import open_question_report

OK, BAD_INPUT, INTERNAL = 0, 2, 3

RELATION_BUILDERS = {
    "cong": syntactic_congruence,
    "pre": syntactic_preorder,
    "refl": syntactic_reflexive_relation,
}


class InputError(Exception):
    pass


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _load(path: str):
    try:
        return load_monoid(path)
    except FileNotFoundError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except (MonoidError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"invalid monoid file {path}: {exc}") from exc


def _resolve_subset(m: FiniteMonoid, named: dict, selector: str) -> frozenset:
    if selector in named:
        return frozenset(named[selector])
    try:
        indices = frozenset(int(tok) for tok in selector.split(",")
                            if tok.strip())
    except ValueError:
        raise InputError(f"submonoid {selector!r} is neither a named subset "
                         "nor a comma-separated index list") from None
    if not indices:
        raise InputError("empty submonoid selector")
    return indices


def _mask(m: FiniteMonoid, bits: frozenset) -> SubmonoidMask:
    try:
        return SubmonoidMask(m, bits)
    except MonoidError as exc:
        raise InputError(f"not a submonoid: {exc}") from exc


def _fmt_witness(witness, m: FiniteMonoid | None) -> str:
    labeler = (lambda i: m.labels[i]) if m else str
    parts = [f"{k}={v}" for k, v in witness_json(witness, labeler).items()]
    return ", ".join(parts)


def _print_report(report, m: FiniteMonoid) -> None:
    print(f"pair {report.pair}")
    for name in FLAG_ORDER:
        f = report.flags[name]
        if f.holds is None:
            cell = "n/a"
        else:
            cell = "✓" if f.holds else "✗"
            if f.mode == "bounded":
                cell += " (bounded)"
        line = f"  {name:<8}{cell}"
        if f.witness:
            line += f"   witness {_fmt_witness(f.witness, m)}"
        print(line)
    bad = check_consistency(report)
    print("consistency: " + ("ok" if not bad else "VIOLATED " + ", ".join(bad)))


def cmd_validate(args) -> int:
    m, named = _load(args.file)
    print(f"ok: monoid '{m.name}' of order {m.order}, "
          f"identity {m.labels[m.identity]}")
    for name, bits in named.items():
        print(f"  subset {name}: {sorted(bits)}")
    return OK


def cmd_classify(args) -> int:
    m, named = _load(args.file)
    if args.all_submonoids:
        enum = enumerate_submonoids(m, cap=args.cap)
        masks = [mask.bits for mask in enum.masks]
        if enum.truncated:
            print(f"note: truncated at {args.cap} submonoids",
                  file=sys.stderr)
    elif args.submonoid:
        masks = [_mask(m, _resolve_subset(m, named, args.submonoid)).bits]
    else:
        raise InputError("need --submonoid or --all-submonoids")
    reports = [classify_pair(m, bits) for bits in masks]
    if args.json:
        _emit_json([report_json(r, m) for r in reports]
                   if len(reports) > 1 else report_json(reports[0], m))
    else:
        for r in reports:
            _print_report(r, m)
    return OK


def cmd_relation(args) -> int:
    m, named = _load(args.file)
    subset = _resolve_subset(m, named, args.submonoid)
    rel = RELATION_BUILDERS[args.kind](m, subset)
    if args.json:
        _emit_json({"kind": rel.kind, "n": m.order,
                    "rows": ["".join("1" if r >> b & 1 else "0"
                                     for b in range(m.order))
                             for r in rel.rows],
                    "zero_class": sorted(m.labels[i]
                                         for i in zero_class(rel))})
    else:
        print(rel.dump())
    return OK


def cmd_closure(args) -> int:
    m, named = _load(args.file)
    mask = _mask(m, _resolve_subset(m, named, args.submonoid))
    rel = internal_reflexive_closure(m, mask)
    zc = zero_class(rel)
    is_clot = zc == mask.bits
    if args.json:
        _emit_json({"kind": rel.kind, "n": m.order,
                    "rows": ["".join("1" if r >> b & 1 else "0"
                                     for b in range(m.order))
                             for r in rel.rows],
                    "zero_class": sorted(m.labels[i] for i in zc),
                    "clot": is_clot})
    else:
        print(rel.dump())
        print("zero-class: " + ", ".join(sorted(m.labels[i] for i in zc)))
        print(f"clot: {'yes' if is_clot else 'no'}")
    return OK


def _parse_residues(text: str) -> set[tuple[int, int]]:
    import re
    found = re.findall(r"\(?\s*(\d+)\s*,\s*(\d+)\s*\)?", text)
    if not found:
        raise InputError(f"cannot parse residues from {text!r}")
    return {(int(r), int(s)) for r, s in found}


def cmd_bicyclic(args) -> int:
    try:
        p_str, q_str = args.mod.split(",")
        p, q = int(p_str), int(q_str)
    except ValueError:
        raise InputError(f"--mod expects P,Q; got {args.mod!r}") from None
    try:
        sub = bc.residue_submonoid(p, q, _parse_residues(args.residues))
    except bc.BicyclicError as exc:
        raise InputError(str(exc)) from exc
    out: dict = {"submonoid": sub.describe()}
    if args.check_rm:
        try:
            a_str, b_str = args.check_rm.split(",")
            a, b = bc.parse_element(a_str), bc.parse_element(b_str)
        except (ValueError, bc.BicyclicError) as exc:
            raise InputError(f"bad --check-rm argument: {exc}") from exc
        verdict = bc.b_rm_related(a, b, sub)
        out["check_rm"] = {
            "a": str(a), "b": str(b), "related": verdict.holds,
            "witness": witness_json(verdict.witness, str),
        }
    if args.condition_r:
        v = bc.b_unit_insertion_condition(sub, args.bound)
        out["unit_insertion"] = {
            "holds": v.holds, "bounded": v.bounded, "bound": v.bound,
            "witness": witness_json(v.witness, str),
        }
    if args.internality:
        v = bc.b_internality_search(sub, args.bound)
        out["internality"] = {
            "holds": v.holds, "bounded": v.bounded, "bound": v.bound,
            "witness": witness_json(v.witness, str),
        }
    if args.normal_form:
        try:
            out["normal_form"] = str(bc.bword_normal_form(args.normal_form))
        except bc.BicyclicError as exc:
            raise InputError(str(exc)) from exc
    if args.json:
        _emit_json(out)
        return OK
    print(f"submonoid {out['submonoid']}")
    if "check_rm" in out:
        r = out["check_rm"]
        print("true" if r["related"] else "false")
        if r["witness"]:
            print(f"witness ({r['witness']['x']}, {r['witness']['y']}) "
                  f"product {r['witness']['product']}")
    if "unit_insertion" in out:
        r = out["unit_insertion"]
        state = "holds (bounded)" if r["holds"] else "fails"
        print(f"unit insertion: {state}")
        if r["witness"]:
            print(f"  witness u={r['witness']['u']} k={r['witness']['k']} "
                  f"product {r['witness']['product']}")
    if "internality" in out:
        r = out["internality"]
        state = "no failure found (bounded)" if r["holds"] else "fails"
        print(f"compatibility: {state}")
        if r["witness"]:
            w = r["witness"]
            print(f"  pairs ({w['pair1'][0]},{w['pair1'][1]}) and "
                  f"({w['pair2'][0]},{w['pair2'][1]}) -> "
                  f"product ({w['product'][0]},{w['product'][1]}) "
                  f"[{w['order']}]")
    if "normal_form" in out:
        print(f"normal form: {out['normal_form']}")
    return OK


def _run_examples() -> tuple[list[str], bool]:
    lines = []
    all_ok = True

    parity = bc.parity_submonoid()
    fact1 = bc.b_rm_related(bc.parse_element("y2x1"),
                            bc.parse_element("y1x2"), parity).holds
    fact2 = bc.b_rm_related(bc.X, bc.Y, parity).holds
    fail = bc.b_rm_related(bc.parse_element("y1x1"),
                           bc.parse_element("y2x2"), parity)
    fact3 = (not fail.holds and fail.witness["x"] == bc.X
             and fail.witness["y"] == bc.Y
             and fail.witness["product"] == bc.BicyclicElement(1, 1))
    search = bc.b_internality_search(parity, 2)
    ex1 = fact1 and fact2 and fact3 and not search.holds
    all_ok &= ex1
    lines.append(f"Example 1 (bicyclic, parity submonoid): "
                 f"{'PASS' if ex1 else 'FAIL'}")
    lines.append(f"  y2x1 R y1x2: {str(fact1).lower()}")
    lines.append(f"  y0x1 R y1x0: {str(fact2).lower()}")
    lines.append("  y1x1 R y2x2: false  witness (y0x1, y1x0) product y1x1")
    if not search.holds:
        w = search.witness
        lines.append(f"  compatibility fails at bound 2: pairs "
                     f"({w['pair1'][0]},{w['pair1'][1]}) and "
                     f"({w['pair2'][0]},{w['pair2'][1]}) -> "
                     f"({w['product'][0]},{w['product'][1]}) [{w['order']}]")

    report = doubling_refutation_report(5)
    all_ok &= report.passed
    lines.append(f"Example 2 (doubling submonoid of Set(N,N)): "
                 f"{'PASS' if report.passed else 'FAIL'}")
    lines.append(f"  f*g = identity: {str(report.fg_is_identity).lower()}")
    for row in report.rows:
        lines.append(f"  f*u^{row.n}*g = {ea_to_literal(row.composite)}: "
                     f"outside the doubling submonoid")

    ex3_ok = True
    for k in (2, 3):
        tk, named = full_transformation_monoid(k)
        bij = named["bijections"]
        normal = is_normal_submonoid(tk, bij).holds
        left = homogeneity(tk, bij, "left")
        right = homogeneity(tk, bij, "right")
        sides_fail = (not left.holds) or (not right.holds)
        both_fail_for_t3 = k != 3 or (not left.holds and not right.holds)
        ex3_ok &= normal and sides_fail and both_fail_for_t3
        lines.append(f"  T{k}, bijections: normal={str(normal).lower()}, "
                     f"left homogeneous={str(left.holds).lower()}, "
                     f"right homogeneous={str(right.holds).lower()}")
    all_ok &= ex3_ok
    lines.insert(len(lines) - 2,
                 f"Example 3 (bijections of a finite set): "
                 f"{'PASS' if ex3_ok else 'FAIL'}")
    return lines, all_ok


def cmd_examples(args) -> int:
    lines, ok = _run_examples()
    if args.json:
        _emit_json({"lines": lines, "passed": ok})
    else:
        for line in lines:
            print(line)
    if not ok:
        print("example reproduction failed", file=sys.stderr)
        return INTERNAL
    return OK


def cmd_hunt(args) -> int:
    report = open_question_report(moduli_bound=args.bound)
    if args.json:
        _emit_json(report)
        return OK
    fin = report["finite_vacuity"]
    print(f"finite vacuity: {fin['pairs_checked']} pairs, "
          f"{fin['clot_pairs']} clots, {len(fin['violations'])} violations")
    print(f"  {fin['note']}")
    bcand = report["bicyclic_candidates"]
    print(f"bicyclic hunt (moduli <= {bcand['moduli_bound']}, bounded): "
          f"{bcand['submonoids_checked']} submonoids, "
          f"{len(bcand['candidates'])} candidates")
    for c in bcand["candidates"]:
        print(f"  candidate: {c['submonoid']}")
    print(f"  {bcand['note']}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clotkit",
        description="Decide normal submonoids, positive cones and clots of "
                    "monoids via syntactic relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a monoid file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="classify (monoid, submonoid) pairs")
    p.add_argument("file")
    p.add_argument("--submonoid", help="named subset or index list")
    p.add_argument("--all-submonoids", action="store_true")
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("relation", help="print a syntactic relation")
    p.add_argument("file")
    p.add_argument("--submonoid", required=True)
    p.add_argument("--kind", choices=sorted(RELATION_BUILDERS), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("closure",
                       help="generated reflexive-compatible closure")
    p.add_argument("file")
    p.add_argument("--submonoid", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("bicyclic", help="bicyclic residue submonoid checks")
    p.add_argument("--mod", required=True, metavar="P,Q")
    p.add_argument("--residues", required=True)
    p.add_argument("--check-rm", metavar="A,B")
    p.add_argument("--condition-r", action="store_true",
                   help="bounded unit-insertion check")
    p.add_argument("--internality", action="store_true",
                   help="bounded compatibility search")
    p.add_argument("--normal-form", metavar="WORD",
                   help="reduce a word over x,y")
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bicyclic)

    for alias in ("examples", "paper-examples"):
        p = sub.add_parser(alias, help="re-run the bundled worked examples")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=cmd_examples)

    p = sub.add_parser("hunt", help="clot-versus-compatibility hunt")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hunt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "bound", 1) < 1 or getattr(args, "cap", 1) < 1:
        print("bounds must be positive", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except Exception as exc:  # noqa: BLE001 - contract maps these to exit 3
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
