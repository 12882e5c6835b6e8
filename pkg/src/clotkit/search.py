"""Classified corpus of finite pairs, strictness witnesses, and the hunt
for a clot whose reflexive syntactic relation fails compatibility."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import NamedTuple, Optional

from . import bicyclic as bc
from .classify import classify_pair
from .monoid import (
    FiniteMonoid,
    cyclic_group,
    direct_product,
    enumerate_submonoids,
    full_transformation_monoid,
    load_monoid,
    restrict_to_submonoid,
    submonoid_closure,
)

CATEGORIES = frozenset({
    "C", "C1", "C2", "C3", "C4", "C5", "C0", "C0.5",
    "C(1,0)", "C(2,0)", "C(3,0)", "C(4,0)", "C(5,0)",
    "D", "Dr", "Dl", "Dh",
})

# inner strictly included in outer, read off the three hierarchy chains
INCLUSIONS = frozenset({
    ("C", "C1"), ("C1", "C2"), ("C2", "C3"), ("C3", "C4"), ("C4", "C5"),
    ("C", "C0"), ("C0", "C0.5"), ("C0.5", "C(1,0)"),
    ("C", "C0.5"), ("C0.5", "D"), ("D", "Dr"), ("D", "Dl"),
    ("Dr", "C(4,0)"), ("Dl", "C(4,0)"),
})

# inclusions whose strictness cannot be witnessed by finite pairs
INFINITE_ONLY = frozenset({("C", "C1"), ("C1", "C2")})


class UnknownCategory(Exception):
    pass


class CorpusPair(NamedTuple):
    name: str
    monoid: FiniteMonoid
    mask: frozenset


@dataclass(frozen=True)
class CorpusConfig:
    zn_max: int = 6
    transformation_max: int = 3
    submonoid_cap: int = 170
    include_products: bool = True
    extra_files: tuple[str, ...] = ()


@dataclass(frozen=True)
class Corpus:
    pairs: tuple[CorpusPair, ...]
    truncated: bool
    notes: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def _corpus_monoids(config: CorpusConfig):
    monoids = []
    t_monoids = {}
    for k in range(1, config.transformation_max + 1):
        tk, named = full_transformation_monoid(k)
        t_monoids[k] = (tk, named)
        monoids.append(tk)
    if config.transformation_max >= 3:
        t3, named3 = t_monoids[3]
        monoids.append(restrict_to_submonoid(t3, named3["bijections"], "S3"))
    for n in range(2, config.zn_max + 1):
        monoids.append(cyclic_group(n))
    if config.include_products:
        z2, z3, z4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
        monoids.append(direct_product(z2, z2))   # Klein four-group
        monoids.append(direct_product(z2, z3))
        monoids.append(direct_product(z3, z3))
        monoids.append(direct_product(z2, z4))
    return monoids, t_monoids


def build_corpus(config: Optional[CorpusConfig] = None) -> Corpus:
    """Deterministic classified corpus.

    Submonoids come from capped breadth-first enumeration; the bijection
    submonoids of the transformation monoids are always force-included.
    Pairs are deduplicated on (table, identity, mask) and sorted by
    monoid order, then table, then mask.
    """
    config = config or CorpusConfig()
    monoids, t_monoids = _corpus_monoids(config)
    notes = []
    truncated = False
    seen = set()
    pairs = []

    def add(m: FiniteMonoid, bits: frozenset):
        key = (m.table, m.identity, tuple(sorted(bits)))
        if key not in seen:
            seen.add(key)
            pairs.append(CorpusPair(m.name, m, frozenset(bits)))

    for m in monoids:
        enum = enumerate_submonoids(m, cap=config.submonoid_cap)
        if enum.truncated:
            truncated = True
            notes.append(f"{m.name}: submonoid enumeration truncated at "
                         f"{config.submonoid_cap}")
        for mask in enum.masks:
            add(m, mask.bits)
    for k, (tk, named) in t_monoids.items():
        if k >= 2:
            add(tk, frozenset(named["bijections"]))
    for path in config.extra_files:
        m, subs = load_monoid(path)
        add(m, frozenset(range(m.order)))
        for bits in subs.values():
            add(m, submonoid_closure(m, bits).bits)

    pairs.sort(key=lambda p: (p.monoid.order, p.monoid.table,
                              sum(1 << b for b in p.mask)))
    return Corpus(tuple(pairs), truncated, tuple(notes))


@lru_cache(maxsize=1)
def default_corpus() -> Corpus:
    return build_corpus()


def _check_inclusion(outer: str, inner: str) -> None:
    for name in (outer, inner):
        if name not in CATEGORIES:
            raise UnknownCategory(f"unknown category {name!r}")
    if (outer, inner) not in INCLUSIONS:
        raise UnknownCategory(
            f"({inner}, {outer}) is not one of the hierarchy inclusions")


def strictness_search(corpus: Corpus, outer: str,
                      inner: str) -> Optional[CorpusPair]:
    """First corpus pair belonging to the outer category but not the inner
    one, or None (some strictness witnesses are inherently infinite)."""
    _check_inclusion(outer, inner)
    for pair in corpus:
        report = classify_pair(pair.monoid, pair.mask)
        if report.holds(outer) is True and report.holds(inner) is False:
            return pair
    return None


def infinite_strictness_evidence(bound: int = 4, nmax: int = 5) -> dict:
    """Computational evidence behind the inclusions that no finite pair can
    separate: the bicyclic parity pair escapes C1 and C0, and the doubling
    powers escape the zero-class of their reflexive syntactic relation."""
    parity = bc.parity_submonoid()
    internality = bc.b_internality_search(parity, bound)
    insertion = bc.b_unit_insertion_condition(parity, bound)
    from .natfuncs import doubling_refutation_report
    doubling = doubling_refutation_report(nmax)
    return {
        "bicyclic_parity_not_C1": not internality.holds,
        "bicyclic_parity_not_C0": not insertion.holds,
        "doubling_powers_escape_zero_class": doubling.passed,
    }


def _closed_residue_submonoids(moduli_bound: int):
    """All residue submonoids with moduli <= bound, deduplicated by their
    membership pattern on a common grid."""
    grid = lcm(*range(1, moduli_bound + 1))
    out = []
    seen = set()
    for p in range(1, moduli_bound + 1):
        for q in range(1, moduli_bound + 1):
            residues = [(r, s) for r in range(p) for s in range(q)
                        if (r, s) != (0, 0)]
            for mask in range(1 << len(residues)):
                rset = {(0, 0)} | {residues[i] for i in range(len(residues))
                                   if mask >> i & 1}
                try:
                    sub = bc.residue_submonoid(p, q, rset)
                except bc.BicyclicError:
                    continue
                key = frozenset(
                    (n, m) for n in range(grid) for m in range(grid)
                    if bc.BicyclicElement(n, m) in sub)
                if key not in seen:
                    seen.add(key)
                    out.append(sub)
    return out


def open_question_report(corpus: Optional[Corpus] = None,
                         moduli_bound: int = 4,
                         internality_bound: int = 3,
                         eq_nmax: int = 2) -> dict:
    """Two-part report on whether a clot can have an incompatible reflexive
    syntactic relation.

    Part one: over the finite corpus no counterexample is possible (finite
    monoids are Dedekind finite, so the relation is always compatible);
    the scan confirms every clot pair also lies in C(1,0).

    Part two: a bounded hunt over bicyclic residue submonoids, reporting
    any candidate whose bounded interleaved-insertion check passes while
    the bounded compatibility search fails.  Everything in this part is
    evidence at a stated bound, never a theorem.
    """
    corpus = corpus or default_corpus()
    violations = []
    clot_pairs = 0
    for pair in corpus:
        report = classify_pair(pair.monoid, pair.mask)
        if report.holds("C0.5"):
            clot_pairs += 1
            if report.holds("C(1,0)") is not True:
                violations.append(report.pair)
    finite = {
        "pairs_checked": len(corpus),
        "clot_pairs": clot_pairs,
        "violations": violations,
        "note": ("no finite counterexample is possible: finite monoids are "
                 "Dedekind finite, hence the unit-transfer condition holds "
                 "and the reflexive syntactic relation is compatible"),
    }

    submonoids = _closed_residue_submonoids(moduli_bound)
    candidates = []
    insertion_passes = []
    for sub in submonoids:
        exp_bound = 2 * lcm(sub.p, sub.q)
        eq = bc.b_interleaved_insertion_bounded(sub, eq_nmax, exp_bound)
        if not eq.holds:
            continue
        insertion_passes.append(sub.describe())
        search = bc.b_internality_search(sub, internality_bound)
        if not search.holds:
            ce = search.witness
            candidates.append({
                "submonoid": sub.describe(),
                "pair1": [str(ce["pair1"][0]), str(ce["pair1"][1])],
                "pair2": [str(ce["pair2"][0]), str(ce["pair2"][1])],
                "order": ce["order"],
                "product": [str(ce["product"][0]), str(ce["product"][1])],
            })
    bicyclic_part = {
        "moduli_bound": moduli_bound,
        "submonoids_checked": len(submonoids),
        "interleaved_insertion_passes": insertion_passes,
        "candidates": candidates,
        "mode": "bounded",
        "note": (f"interleaved insertion checked for n<={eq_nmax}; "
                 f"compatibility searched with exponents<="
                 f"{internality_bound}; all conclusions bounded"),
    }
    return {"finite_vacuity": finite, "bicyclic_candidates": bicyclic_part}
