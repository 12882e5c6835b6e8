"""A decidable class of endofunctions of the positive naturals.

An eventually affine map has finitely many exceptional values followed by
an affine tail a*x + b.  The class is closed under composition and has a
normal form (minimal threshold), so equality is structural.  It is rich
enough to witness that powers of the doubling map x -> 2x escape the
zero-class of the reflexive syntactic relation in the full endofunction
monoid: with g = x+1 and f its left inverse, f*g = id yet f*(2^n * -)*g
is 2^n x + 2^n - 1, which is not a power of the doubling map.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class EventuallyAffineMap:
    """x -> exceptions[x-1] for x < threshold, else slope*x + offset.

    Maps the positive naturals into themselves; construct via ea() which
    validates and normalizes (threshold is minimal).
    """

    slope: int
    offset: int
    threshold: int = 1
    exceptions: tuple[int, ...] = ()

    def __call__(self, x: int) -> int:
        if x < 1:
            raise ValueError("domain is the positive naturals")
        if x < self.threshold:
            return self.exceptions[x - 1]
        return self.slope * x + self.offset


def ea(slope: int, offset: int, threshold: int = 1,
       exceptions=()) -> EventuallyAffineMap:
    """Validated, normalized constructor."""
    exceptions = tuple(int(v) for v in exceptions)
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    if len(exceptions) != threshold - 1:
        raise ValueError("need exactly threshold-1 exceptional values")
    if slope < 0:
        raise ValueError("slope must be >= 0")
    if slope * threshold + offset < 1:
        raise ValueError("tail must map into the positive naturals")
    if any(v < 1 for v in exceptions):
        raise ValueError("exceptional values must be >= 1")
    while threshold > 1 and exceptions[-1] == slope * (threshold - 1) + offset:
        exceptions = exceptions[:-1]
        threshold -= 1
    return EventuallyAffineMap(slope, offset, threshold, exceptions)


IDENTITY = ea(1, 0)
DOUBLING = ea(2, 0)
SHIFT_UP = ea(1, 1)                      # g(x) = x + 1
SHIFT_DOWN = ea(1, -1, 2, (1,))          # f(1) = 1, f(x) = x - 1 for x > 1


def ea_compose(outer: EventuallyAffineMap,
               inner: EventuallyAffineMap) -> EventuallyAffineMap:
    """Pointwise composition outer(inner(x)), renormalized.

    Once x clears inner's threshold and inner(x) clears outer's, the
    composite is affine with slope and offset multiplied through; a
    constant inner tail gives a constant composite tail.
    """
    if inner.slope == 0:
        raw_threshold = inner.threshold
        slope, offset = 0, outer(inner.offset)
    else:
        need = outer.threshold - inner.offset
        raw_threshold = max(inner.threshold, -(-need // inner.slope), 1)
        slope = outer.slope * inner.slope
        offset = outer.slope * inner.offset + outer.offset
    exceptions = tuple(outer(inner(x)) for x in range(1, raw_threshold))
    return ea(slope, offset, raw_threshold, exceptions)


def ea_equal(p: EventuallyAffineMap, q: EventuallyAffineMap) -> bool:
    """Structural equality of normal forms, equivalent to pointwise equality."""
    return p == q


def ea_power(h: EventuallyAffineMap, n: int) -> EventuallyAffineMap:
    out = IDENTITY
    for _ in range(n):
        out = ea_compose(out, h)
    return out


def ea_in_doubling_submonoid(h: EventuallyAffineMap) -> Optional[int]:
    """The n with h = (x -> 2^n x), or None."""
    if h.threshold != 1 or h.offset != 0 or h.slope < 1:
        return None
    n = h.slope.bit_length() - 1
    return n if 1 << n == h.slope else None


_LITERAL = re.compile(r"affine\((-?\d+),(-?\d+),(\d+)\)\{([^}]*)\}")


def ea_from_literal(text: str) -> EventuallyAffineMap:
    """Parse 'affine(a,b,T){x1:v1,x2:v2}' into a map."""
    match = _LITERAL.fullmatch(text.replace(" ", ""))
    if not match:
        raise ValueError(f"bad map literal: {text!r}")
    slope, offset, threshold = (int(match.group(i)) for i in (1, 2, 3))
    pairs = {}
    if match.group(4):
        for item in match.group(4).split(","):
            key, value = item.split(":")
            pairs[int(key)] = int(value)
    if set(pairs) != set(range(1, threshold)):
        raise ValueError("exceptions must cover 1..threshold-1 exactly")
    return ea(slope, offset, threshold,
              tuple(pairs[x] for x in range(1, threshold)))


def ea_to_literal(h: EventuallyAffineMap) -> str:
    inner = ",".join(f"{x}:{v}" for x, v in enumerate(h.exceptions, start=1))
    return f"affine({h.slope},{h.offset},{h.threshold}){{{inner}}}"


@dataclass(frozen=True)
class RefutationRow:
    n: int
    composite: EventuallyAffineMap
    in_doubling: Optional[int]
    ok: bool


@dataclass(frozen=True)
class DoublingRefutationReport:
    nmax: int
    fg_is_identity: bool
    rows: tuple[RefutationRow, ...]
    passed: bool


def doubling_refutation_report(nmax: int) -> DoublingRefutationReport:
    """Witness that the doubling powers 2^n * - (n >= 1) are not related to
    the identity by the reflexive syntactic relation of the doubling
    submonoid: f*g = id yet f*(2^n * -)*g lands outside the submonoid.

    Purely witness-based: no claim about the full zero-class is made.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    fg = ea_compose(SHIFT_DOWN, SHIFT_UP)
    fg_ok = ea_equal(fg, IDENTITY)
    rows = []
    for n in range(1, nmax + 1):
        composite = ea_compose(SHIFT_DOWN,
                               ea_compose(ea_power(DOUBLING, n), SHIFT_UP))
        expected = ea(2 ** n, 2 ** n - 1)
        membership = ea_in_doubling_submonoid(composite)
        ok = ea_equal(composite, expected) and membership is None
        rows.append(RefutationRow(n, composite, membership, ok))
    passed = fg_ok and all(r.ok for r in rows)
    return DoublingRefutationReport(nmax, fg_ok, tuple(rows), passed)
