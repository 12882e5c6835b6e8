"""Membership reports for the hierarchy of (monoid, submonoid) conditions.

Flag names, from weakest to strongest requirements:

* C        every pair (always true);
* C1       the reflexive syntactic relation is compatible with the product;
* C2       the unit-transfer condition holds;
* C3       the monoid is Dedekind finite;
* C4       the monoid is a group;
* C5       monoid and submonoid are both groups;
* C0       M equals the zero-class of its reflexive syntactic relation;
* C0.5     M is a clot;
* C(i,0)   Ci together with C0;
* D        M is a positive cone (zero-class of its syntactic preorder);
* Dr / Dl  M is right / left homogeneous;
* Dh       Dr with M a group;
* normal   M is a normal submonoid (zero-class of its syntactic congruence).

Each flag carries a mode: "exact", "bounded" (confirmed only up to a
stated bound) or "n/a" (not computed for this kind of pair).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import bicyclic as bc
from .clots import (
    homogeneity,
    is_clot,
    is_normal_submonoid,
    is_positive_cone,
    unit_transfer_condition,
)
from .monoid import (
    FiniteMonoid,
    is_dedekind_finite,
    group_verdict,
    subset_group_verdict,
)
from .relations import (
    as_subset,
    is_internal,
    syntactic_reflexive_relation,
    zero_class,
)

FLAG_ORDER = (
    "C", "C1", "C2", "C3", "C4", "C5",
    "C0", "C0.5",
    "C(1,0)", "C(2,0)", "C(3,0)", "C(4,0)", "C(5,0)",
    "D", "Dr", "Dl", "Dh", "normal",
)

# adjacent inclusions of the two chains plus the homogeneity chain
IMPLICATIONS = (
    ("C5", "C4"), ("C4", "C3"), ("C3", "C2"), ("C2", "C1"), ("C1", "C"),
    ("C(1,0)", "C0.5"), ("C0.5", "C0"), ("C0", "C"),
    ("Dr", "D"), ("Dl", "D"), ("D", "C0.5"),
    ("C(4,0)", "Dr"), ("C(4,0)", "Dl"),
    ("normal", "D"),
)


@dataclass(frozen=True)
class FlagVerdict:
    holds: Optional[bool]
    mode: str = "exact"            # "exact" | "bounded" | "n/a"
    witness: Optional[dict] = None
    note: str = ""


@dataclass(frozen=True)
class ClassificationReport:
    pair: str
    flags: dict[str, FlagVerdict]
    m_is_group: Optional[bool]

    def holds(self, name: str) -> Optional[bool]:
        return self.flags[name].holds


def _exact(holds: bool, witness: Optional[dict] = None,
           note: str = "") -> FlagVerdict:
    return FlagVerdict(holds, "exact", witness, note)


NOT_COMPUTED = FlagVerdict(None, "n/a")


def flag_and(f1: FlagVerdict, f2: FlagVerdict) -> FlagVerdict:
    """Three-valued conjunction; a definite False wins over n/a."""
    if f1.holds is False:
        return FlagVerdict(False, f1.mode, f1.witness, f1.note)
    if f2.holds is False:
        return FlagVerdict(False, f2.mode, f2.witness, f2.note)
    if f1.holds is None or f2.holds is None:
        return NOT_COMPUTED
    mode = "bounded" if "bounded" in (f1.mode, f2.mode) else "exact"
    return FlagVerdict(True, mode)


def pair_name(m: FiniteMonoid, subset) -> str:
    bits = sorted(as_subset(m, subset))
    return f"{m.name}:{{{','.join(str(b) for b in bits)}}}"


def classify_pair(m: FiniteMonoid, subset) -> ClassificationReport:
    """Compute every flag for a finite pair; all modes are exact."""
    return _classify_pair(m, as_subset(m, subset))


@lru_cache(maxsize=None)
def _classify_pair(m: FiniteMonoid, sub: frozenset) -> ClassificationReport:
    flags: dict[str, FlagVerdict] = {"C": _exact(True)}

    rm = syntactic_reflexive_relation(m, sub)
    internal = is_internal(rm)
    flags["C1"] = _exact(internal.holds, internal.witness)

    transfer = unit_transfer_condition(m, sub)
    flags["C2"] = _exact(transfer.holds, transfer.witness)

    dedekind = is_dedekind_finite(m)
    flags["C3"] = _exact(dedekind.holds, dedekind.witness)

    a_group = group_verdict(m)
    flags["C4"] = _exact(a_group.holds, a_group.witness)

    m_group = subset_group_verdict(m, sub)
    flags["C5"] = flag_and(flags["C4"], _exact(m_group.holds, m_group.witness))

    zc = zero_class(rm)
    if zc == sub:
        flags["C0"] = _exact(True)
    else:
        flags["C0"] = _exact(False, {"u": min(zc ^ sub)})

    clot = is_clot(m, sub)
    flags["C0.5"] = _exact(clot.holds, clot.witness)

    for i in range(1, 6):
        flags[f"C({i},0)"] = flag_and(flags[f"C{i}"], flags["C0"])

    cone = is_positive_cone(m, sub)
    flags["D"] = _exact(cone.holds, cone.witness)

    right = homogeneity(m, sub, "right")
    left = homogeneity(m, sub, "left")
    flags["Dr"] = _exact(right.holds, right.witness)
    flags["Dl"] = _exact(left.holds, left.witness)
    flags["Dh"] = flag_and(flags["Dr"],
                           _exact(m_group.holds, m_group.witness))

    normal = is_normal_submonoid(m, sub)
    flags["normal"] = _exact(normal.holds, normal.witness)

    return ClassificationReport(pair_name(m, sub), flags, m_group.holds)


def classify_bicyclic(M: bc.ResidueSubmonoid,
                      bound: int = 6) -> ClassificationReport:
    """Report for a pair (bicyclic monoid, residue submonoid).

    Refutations from the bounded scans are exact; bounded passes are
    labelled as such; flags without a procedure here stay n/a.
    """
    flags: dict[str, FlagVerdict] = {"C": _exact(True)}

    # the generator pair x, y has xy = 1 but yx = yx != 1
    assert bc.bmul(bc.X, bc.Y) == bc.ONE and bc.bmul(bc.Y, bc.X) != bc.ONE
    unit_witness = {"x": bc.X, "y": bc.Y}
    flags["C3"] = _exact(False, unit_witness,
                         "xy = 1 but yx differs from 1")
    flags["C4"] = _exact(False, unit_witness,
                         "a group would force yx = 1 from xy = 1")
    # every residue submonoid contains the non-invertible element x^q
    m_group = False
    flags["C5"] = _exact(False, {"a": bc.BicyclicElement(0, M.q)},
                         "contains a non-invertible power of x")

    if M.is_full:
        flags["C0"] = _exact(True, note="the whole monoid")
        flags["C1"] = _exact(True, note="relation is total")
        flags["C2"] = _exact(True, note="all products land in the monoid")
        flags["C0.5"] = _exact(True, note="zero-class of the total relation")
        flags["D"] = _exact(True, note="zero-class of the total preorder")
        flags["normal"] = _exact(True, note="zero-class of the total congruence")
    else:
        search = bc.b_internality_search(M, bound)
        if search.holds:
            flags["C1"] = FlagVerdict(True, "bounded", None, search.note)
        else:
            witness = {k: v for k, v in search.witness.items()}
            flags["C1"] = _exact(False, witness)
        insertion = bc.b_unit_insertion_condition(M, bound)
        if insertion.holds:
            flags["C0"] = FlagVerdict(True, "bounded", None, insertion.note)
        else:
            flags["C0"] = _exact(False, insertion.witness)
        if flags["C0"].holds is False:
            flags["C0.5"] = _exact(False, flags["C0"].witness,
                                   "a clot would satisfy the zero-class "
                                   "condition")
        else:
            flags["C0.5"] = NOT_COMPUTED
        flags["C2"] = NOT_COMPUTED
        flags["D"] = NOT_COMPUTED
        flags["normal"] = NOT_COMPUTED

    flags["Dr"] = NOT_COMPUTED
    flags["Dl"] = NOT_COMPUTED
    flags["Dh"] = flag_and(flags["Dr"], _exact(m_group))

    for i in range(1, 6):
        flags[f"C({i},0)"] = flag_and(flags[f"C{i}"], flags["C0"])

    return ClassificationReport(f"B:{M.describe()}", flags, m_group)


def check_consistency(report: ClassificationReport) -> list[str]:
    """Violated implications among computed flags; empty iff consistent."""
    violations = []
    flags = report.flags

    def holds(name):
        return flags[name].holds

    for strong, weak in IMPLICATIONS:
        if holds(strong) is True and holds(weak) is False:
            violations.append(f"{strong}=>{weak}")
    for i in range(1, 6):
        parts = (holds(f"C{i}"), holds("C0"), holds(f"C({i},0)"))
        if None not in parts and (parts[0] and parts[1]) != parts[2]:
            violations.append(f"C({i},0)<=>C{i}&C0")
    if (holds("Dh") is not None and holds("Dr") is not None
            and report.m_is_group is not None):
        if holds("Dh") != (holds("Dr") and report.m_is_group):
            violations.append("Dh<=>Dr&group(M)")
    return violations


def _json_value(value, labeler):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return labeler(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(v, labeler) for v in value]
    return str(value)


def witness_json(witness: Optional[dict], labeler) -> Optional[dict]:
    if witness is None:
        return None
    return {k: _json_value(v, labeler) for k, v in witness.items()}


def report_json(report: ClassificationReport,
                monoid: Optional[FiniteMonoid] = None) -> dict:
    labeler = (lambda i: monoid.labels[i]) if monoid else str
    flags = {}
    for name in FLAG_ORDER:
        f = report.flags[name]
        entry: dict = {"holds": f.holds, "mode": f.mode}
        if f.witness is not None:
            entry["witness"] = witness_json(f.witness, labeler)
        if f.note:
            entry["note"] = f.note
        flags[name] = entry
    return {"pair": report.pair, "flags": flags}


def report_to_json_str(report: ClassificationReport,
                       monoid: Optional[FiniteMonoid] = None) -> str:
    return json.dumps(report_json(report, monoid), indent=2, sort_keys=True)
