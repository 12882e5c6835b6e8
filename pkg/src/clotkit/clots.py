"""Decision procedures for submonoid statuses and their defining conditions.

All checks are exhaustive scans with deterministic witnesses: loops run in
ascending index order, so the first counterexample found is the
lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .monoid import FiniteMonoid, MonoidError, inverse_table
from .relations import (
    Relation,
    as_subset,
    internal_reflexive_closure,
    syntactic_congruence,
    syntactic_preorder,
    zero_class,
)


class NotAGroup(MonoidError):
    """Raised by checks that are only defined over groups."""


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a universally quantified property check."""

    property: str
    holds: bool
    witness: Optional[dict] = None
    derivation: str = ""

    def __bool__(self) -> bool:
        return self.holds


def property_verdict_json(v: PropertyVerdict,
                          m: Optional[FiniteMonoid] = None) -> dict:
    """Wire form {"property", "holds", "witness"?}; witness values become
    element labels when the monoid is supplied."""
    out: dict = {"property": v.property, "holds": v.holds}
    if v.witness is not None:
        def label(value):
            if isinstance(value, int) and m is not None:
                return m.labels[value]
            if isinstance(value, (list, tuple)):
                return [label(x) for x in value]
            return value if isinstance(value, (int, bool)) else str(value)
        out["witness"] = {k: label(x) for k, x in v.witness.items()}
    return out


def _unit_pairs(m: FiniteMonoid) -> list[tuple[int, int]]:
    e = m.identity
    return [(x, y) for x in range(m.order) for y in range(m.order)
            if m.table[x][y] == e]


def unit_insertion_condition(m: FiniteMonoid, subset) -> PropertyVerdict:
    """xy = 1 implies x*u*y in M, for every u in M.

    Equivalent to M being the zero-class of the reflexive syntactic relation.
    Unit pairs are enumerated first since they are usually few.
    """
    sub = as_subset(m, subset)
    table = m.table
    members = sorted(sub)
    for x, y in _unit_pairs(m):
        tx = table[x]
        for u in members:
            if table[tx[u]][y] not in sub:
                return PropertyVerdict("unit_insertion", False,
                                       {"x": x, "y": y, "u": u},
                                       "scan over unit pairs")
    return PropertyVerdict("unit_insertion", True, None,
                           "scan over unit pairs")


def unit_transfer_condition(m: FiniteMonoid, subset) -> PropertyVerdict:
    """xy = 1, xs in M and ty in M together imply ts in M.

    Sufficient for the reflexive syntactic relation to be compatible with
    the product; holds automatically when the monoid is Dedekind finite.
    """
    sub = as_subset(m, subset)
    table = m.table
    n = m.order
    for x, y in _unit_pairs(m):
        tx = table[x]
        good_s = [s for s in range(n) if tx[s] in sub]
        good_t = [t for t in range(n) if table[t][y] in sub]
        for s in good_s:
            for t in good_t:
                if table[t][s] not in sub:
                    return PropertyVerdict("unit_transfer", False,
                                           {"x": x, "y": y, "s": s, "t": t},
                                           "scan over unit pairs")
    return PropertyVerdict("unit_transfer", True, None,
                           "scan over unit pairs")


def _zero_class_status(name: str, m: FiniteMonoid, subset,
                       rel: Relation, derivation: str) -> PropertyVerdict:
    sub = as_subset(m, subset)
    zc = zero_class(rel)
    if zc == sub:
        return PropertyVerdict(name, True, None, derivation)
    return PropertyVerdict(name, False, {"u": min(zc ^ sub)}, derivation)


def is_normal_submonoid(m: FiniteMonoid, subset) -> PropertyVerdict:
    """M equals the zero-class of its syntactic congruence."""
    return _zero_class_status("normal_submonoid", m, subset,
                              syntactic_congruence(m, subset),
                              "zero-class of syntactic congruence")


def is_positive_cone(m: FiniteMonoid, subset) -> PropertyVerdict:
    """M equals the zero-class of its syntactic preorder."""
    return _zero_class_status("positive_cone", m, subset,
                              syntactic_preorder(m, subset),
                              "zero-class of syntactic preorder")


def is_clot(m: FiniteMonoid, subset) -> PropertyVerdict:
    """M is the zero-class of some compatible reflexive relation.

    Decided via the generated closure: M is a clot iff the zero-class of
    the smallest compatible reflexive relation containing {1} x M is M
    itself.  The witness is the least element absorbed beyond M.
    """
    sub = as_subset(m, subset)
    zc = zero_class(internal_reflexive_closure(m, sub))
    if zc == sub:
        return PropertyVerdict("clot", True, None,
                               "generated reflexive-compatible closure")
    return PropertyVerdict("clot", False, {"u": min(zc - sub)},
                           "generated reflexive-compatible closure")


@lru_cache(maxsize=None)
def _pair_reach(m: FiniteMonoid, sub: frozenset, nmax: int):
    """BFS over pairs (plain product, interleaved product).

    Level L holds all pairs (a1*...*a(L+1), a1*u1*a2*...*uL*a(L+1)) with
    each u in M.  Returns (violation state or None, level, stabilized,
    parents) where a violation is a state with plain product 1 whose
    interleaved product left M.
    """
    n = m.order
    table = m.table
    e = m.identity
    members = sorted(sub)
    seen = set()
    parents: dict[int, tuple[int, int]] = {}
    frontier = []
    for a in range(n):
        s = a * n + a
        seen.add(s)
        frontier.append(s)
    level = 0
    while frontier and level < nmax:
        level += 1
        new = []
        for s in frontier:
            p, q = divmod(s, n)
            tp = table[p]
            tq = table[q]
            for u in members:
                tr = table[tq[u]]
                for a2 in range(n):
                    t = tp[a2] * n + tr[a2]
                    if t not in seen:
                        seen.add(t)
                        parents[t] = (s, u)
                        new.append(t)
                        if tp[a2] == e and tr[a2] not in sub:
                            return t, level, False, parents
        frontier = new
    return None, level, not frontier, parents


def interleaved_insertion_bounded(m: FiniteMonoid, subset,
                                  nmax: Optional[int] = None) -> PropertyVerdict:
    """Bounded check that identity factorizations absorb members of M:
    whenever a1*...*a(n+1) = 1, every interleaving a1*u1*a2*...*un*a(n+1)
    with u_i in M stays in M, for all n <= nmax.

    A refutation is exact; a pass is bounded unless the reachable pair set
    stabilized below nmax (then it is exact).  Default nmax is order**2.
    Exists as an independent oracle for the closure-based clot test.
    """
    sub = as_subset(m, subset)
    if nmax is None:
        nmax = m.order ** 2
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    bad, level, stabilized, parents = _pair_reach(m, sub, nmax)
    tag = f"pair-reachability bfs, n<={nmax}"
    if bad is None:
        if stabilized:
            tag += f", stabilized at level {level}"
        return PropertyVerdict("interleaved_insertion", True, None, tag)
    # walk parents back to a seed to reconstruct the factorization
    n = m.order
    table = m.table
    chain = []
    s = bad
    while s in parents:
        prev, u = parents[s]
        chain.append((prev, u, s))
        s = prev
    chain.reverse()
    a_seq = [s // n]
    u_seq = []
    for prev, u, cur in chain:
        p0, q0 = divmod(prev, n)
        p1, q1 = divmod(cur, n)
        r = table[table[q0][u]]
        a2 = next(a for a in range(n)
                  if table[p0][a] == p1 and r[a] == q1)
        u_seq.append(u)
        a_seq.append(a2)
    return PropertyVerdict(
        "interleaved_insertion", False,
        {"n": level, "a_seq": a_seq, "u_seq": u_seq, "value": bad % n}, tag)


def homogeneity(m: FiniteMonoid, subset, side: str) -> PropertyVerdict:
    """Right homogeneous: aM included in Ma for all a (left: Ma in aM)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    sub = as_subset(m, subset)
    members = sorted(sub)
    table = m.table
    for a in range(m.order):
        if side == "right":
            cone = {table[v][a] for v in members}
            for u in members:
                if table[a][u] not in cone:
                    return PropertyVerdict("right_homogeneous", False,
                                           {"a": a, "u": u}, "inclusion scan")
        else:
            cone = {table[a][v] for v in members}
            for u in members:
                if table[u][a] not in cone:
                    return PropertyVerdict("left_homogeneous", False,
                                           {"a": a, "u": u}, "inclusion scan")
    return PropertyVerdict(f"{side}_homogeneous", True, None, "inclusion scan")


def is_conjugation_closed(m: FiniteMonoid, subset) -> PropertyVerdict:
    """In a group: g*u*g^-1 in M for all g in the group and u in M."""
    inv = inverse_table(m)
    if inv is None:
        raise NotAGroup("conjugation closure is only defined over groups")
    sub = as_subset(m, subset)
    members = sorted(sub)
    table = m.table
    for g in range(m.order):
        gi = inv[g]
        tg = table[g]
        for u in members:
            if table[tg[u]][gi] not in sub:
                return PropertyVerdict("conjugation_closed", False,
                                       {"g": g, "u": u}, "conjugation scan")
    return PropertyVerdict("conjugation_closed", True, None,
                           "conjugation scan")


def translation_preorder(m: FiniteMonoid, subset, side: str) -> Relation:
    """Right: a <= b iff b in Ma.  Left: a <= b iff b in aM.

    Always reflexive (1 is in M) and transitive; compatibility with the
    product is not guaranteed and should be checked with is_internal.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    sub = as_subset(m, subset)
    members = sorted(sub)
    table = m.table
    rows = []
    for a in range(m.order):
        r = 0
        for v in members:
            r |= 1 << (table[v][a] if side == "right" else table[a][v])
        rows.append(r)
    return Relation(m, tuple(rows), "custom")
