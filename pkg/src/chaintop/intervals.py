"""Finite unions of endpoint-described intervals over a chain, and their
decomposition into maximal order-convex components.

Canonicalization is gap-aware: two intervals merge exactly when nothing
of the chain lies strictly between them, which is where completeness of
the chain starts to matter.  Unbounded rays carry symbolic infinities
because catalog chains may lack extremes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional

from .bitsets import as_set, elements
from .chains import ChainHandle
from .errors import MalformedElement, NotAChain, NotOpen
from .poset import FinitePoset
from .topology import Topology


class _Infinity:
    __slots__ = ("_repr",)

    def __init__(self, r):
        self._repr = r

    def __repr__(self):
        return self._repr


NEG_INF = _Infinity("-inf")
POS_INF = _Infinity("+inf")


@dataclass(frozen=True)
class Interval:
    """One interval: endpoints are chain elements or the infinities.

    Infinite ends are always open; a missing endpoint cannot be attained.
    """

    lower: object
    lower_open: bool
    upper: object
    upper_open: bool

    def __post_init__(self):
        if self.lower is POS_INF or self.upper is NEG_INF:
            raise MalformedElement("interval endpoints are reversed infinities")
        if self.lower is NEG_INF and not self.lower_open:
            object.__setattr__(self, "lower_open", True)
        if self.upper is POS_INF and not self.upper_open:
            object.__setattr__(self, "upper_open", True)

    def bounded(self) -> bool:
        return self.lower is not NEG_INF and self.upper is not POS_INF


def closed_interval(a, b) -> Interval:
    return Interval(a, False, b, False)


def open_interval(a, b) -> Interval:
    return Interval(a, True, b, True)


def below(b, strict: bool = False) -> Interval:
    """The ray of everything below b."""
    return Interval(NEG_INF, True, b, strict)


def above(a, strict: bool = False) -> Interval:
    """The ray of everything above a."""
    return Interval(a, strict, POS_INF, True)


WHOLE = Interval(NEG_INF, True, POS_INF, True)


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of intervals over one chain.

    Raw instances may overlap or be mis-ordered; `normalize` returns the
    canonical form (disjoint, non-adjacent, ascending, endpoints closed
    wherever the chain admits it).
    """

    chain: ChainHandle
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        fixed = []
        for iv in self.intervals:
            lo = iv.lower if iv.lower is NEG_INF else self.chain.validate(iv.lower)
            hi = iv.upper if iv.upper is POS_INF else self.chain.validate(iv.upper)
            fixed.append(Interval(lo, iv.lower_open, hi, iv.upper_open))
        object.__setattr__(self, "intervals", tuple(fixed))

    def member(self, x) -> bool:
        return interval_member(self, x)


def _cmp_points(chain: ChainHandle, a, b) -> int:
    if a is NEG_INF or b is POS_INF:
        return 0 if a is b else -1
    if a is POS_INF or b is NEG_INF:
        return 0 if a is b else 1
    return chain.compare(a, b)


def interval_member(IS: IntervalSet, x) -> bool:
    """Whether x satisfies some interval's endpoint constraints."""
    x = IS.chain.validate(x)
    for iv in IS.intervals:
        lo = _cmp_points(IS.chain, iv.lower, x)
        if lo > 0 or (lo == 0 and iv.lower_open):
            continue
        hi = _cmp_points(IS.chain, x, iv.upper)
        if hi > 0 or (hi == 0 and iv.upper_open):
            continue
        return True
    return False


def _canonical_interval(chain: ChainHandle, iv: Interval) -> Optional[Interval]:
    """Close endpoints where the chain admits it; None when empty."""
    lo, lo_open = iv.lower, iv.lower_open
    hi, hi_open = iv.upper, iv.upper_open
    if lo is NEG_INF and chain.has_least:
        lo, lo_open = chain.least(), False
    if hi is POS_INF and chain.has_greatest:
        hi, hi_open = chain.greatest(), False
    if lo is not NEG_INF and lo_open:
        succ = chain.successor(lo)
        if succ is not None:
            lo, lo_open = succ, False
    if hi is not POS_INF and hi_open:
        pred = chain.predecessor(hi)
        if pred is not None:
            hi, hi_open = pred, False
    if lo is NEG_INF or hi is POS_INF:
        return Interval(lo, lo_open, hi, hi_open)
    c = chain.compare(lo, hi)
    if c > 0:
        return None
    if c == 0:
        return None if lo_open or hi_open else Interval(lo, False, hi, False)
    if lo_open and hi_open and chain.between(lo, hi) is None:
        return None
    return Interval(lo, lo_open, hi, hi_open)


def _upper_pair_max(chain, e1, o1, e2, o2):
    if e1 is POS_INF:
        return e1, o1
    if e2 is POS_INF:
        return e2, o2
    c = chain.compare(e1, e2)
    if c > 0:
        return e1, o1
    if c < 0:
        return e2, o2
    return e1, o1 and o2


def _mergeable(chain: ChainHandle, left: Interval, right: Interval) -> bool:
    """Whether two start-ordered canonical intervals have an order-convex
    union: they overlap, touch with a closed side, or sit across a gap."""
    if left.upper is POS_INF or right.lower is NEG_INF:
        return True
    c = chain.compare(left.upper, right.lower)
    if c > 0:
        return True
    if c == 0:
        return not (left.upper_open and right.lower_open)
    if not left.upper_open and not right.lower_open:
        return chain.between(left.upper, right.lower) is None
    return False


def _merge(chain: ChainHandle, left: Interval, right: Interval) -> Interval:
    hi, hi_open = _upper_pair_max(
        chain, left.upper, left.upper_open, right.upper, right.upper_open
    )
    return Interval(left.lower, left.lower_open, hi, hi_open)


def _start_key(chain: ChainHandle):
    def cmp(i1: Interval, i2: Interval) -> int:
        c = _cmp_points(chain, i1.lower, i2.lower)
        if c:
            return c
        return (i1.lower_open > i2.lower_open) - (i1.lower_open < i2.lower_open)

    return functools.cmp_to_key(cmp)


def normalize(IS: IntervalSet) -> IntervalSet:
    """Canonical form: same membership, intervals disjoint, non-adjacent,
    sorted ascending, endpoints attained wherever possible."""
    chain = IS.chain
    cleaned = []
    for iv in IS.intervals:
        c = _canonical_interval(chain, iv)
        if c is not None:
            cleaned.append(c)
    cleaned.sort(key=_start_key(chain))
    merged: list[Interval] = []
    for iv in cleaned:
        if merged and _mergeable(chain, merged[-1], iv):
            merged[-1] = _merge(chain, merged[-1], iv)
        else:
            merged.append(iv)
    return IntervalSet(chain, tuple(merged))


def convex_components(IS: IntervalSet) -> list[IntervalSet]:
    """The maximal order-convex pieces of the union, one IntervalSet each."""
    norm = normalize(IS)
    return [IntervalSet(norm.chain, (iv,)) for iv in norm.intervals]


def is_order_convex(IS: IntervalSet) -> bool:
    """True iff the union has at most one convex component."""
    return len(normalize(IS).intervals) <= 1


def decompose_open_finite(
    P: FinitePoset, T: Topology, subset: Iterable[int]
) -> list[frozenset[int]]:
    """Partition an open subset of a finite chain into its maximal
    order-convex pieces and insist each piece is open."""
    if not P.is_chain:
        raise NotAChain("decomposition requires a chain")
    mask = P.as_mask(subset)
    if P.n != T.n:
        raise NotOpen(f"carrier mismatch: poset {P.n}, topology {T.n}")
    if not T.is_open_mask(mask):
        raise NotOpen(f"{sorted(as_set(mask))} is not open in the given topology")
    order = sorted(range(P.n), key=lambda x: P.down[x].bit_count())
    runs: list[int] = []
    current = 0
    for x in order:
        if mask >> x & 1:
            current |= 1 << x
        elif current:
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    for run in runs:
        if not T.is_open_mask(run):
            raise NotOpen(f"component {sorted(as_set(run))} is not open in the topology")
    # maximality: consecutive runs are separated by a non-member, so any
    # coarsening of the partition loses order-convexity
    position = {x: i for i, x in enumerate(order)}
    for a, b in zip(runs, runs[1:]):
        end_a = max(position[x] for x in elements(a))
        start_b = min(position[x] for x in elements(b))
        separated = any(
            not mask >> order[i] & 1 for i in range(end_a + 1, start_b)
        )
        if not separated:
            raise AssertionError("adjacent components were not separated")
    return [as_set(r) for r in runs]
