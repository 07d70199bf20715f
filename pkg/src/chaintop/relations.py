"""Way-below machinery: compactness, continuity flavours, and the
chain-specific dichotomies.

On finite posets every quantifier is exhausted; `way_below` enumerates
all directed subsets and is the oracle every faster path is tested
against.  On catalog chains the relation is decided through local
structure (gaps, predecessors, extremes)."""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import as_set, elements
from .chains import ChainHandle, FiniteChain
from .errors import CapExceeded, NotAChain
from .poset import FinitePoset, classify
from .topology import canonical_topology

EXHAUSTIVE_CAP = 16

COMPACT = "compact"
SUP_OF_STRICT_DOWNSET = "sup-of-strict-downset"


def _check_cap(P: FinitePoset, cap: int) -> None:
    if P.n > cap:
        raise CapExceeded(P.n, cap)


def way_below(P: FinitePoset, x: int, y: int, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Brute-force way-below: every directed subset with a supremum above
    y contains an element above x."""
    _check_cap(P, cap)
    P.check_index(x)
    P.check_index(y)
    for mask, s in P.directed_with_sup:
        if P.leq(y, s) and not mask & P.up[x]:
            return False
    return True


@dataclass(frozen=True)
class WayBelowReport:
    """The full way-below relation of a poset with its compact elements."""

    poset: FinitePoset
    ll: tuple[int, ...]
    compact_mask: int

    def __post_init__(self):
        P = self.poset
        for x in range(P.n):
            if self.ll[x] & ~P.up[x]:
                raise AssertionError("way-below exceeded the order relation")
        diag = 0
        for x in range(P.n):
            if self.ll[x] >> x & 1:
                diag |= 1 << x
        if diag != self.compact_mask:
            raise AssertionError("compact elements disagree with the diagonal")

    @property
    def compact(self) -> frozenset[int]:
        return as_set(self.compact_mask)

    def holds(self, x: int, y: int) -> bool:
        return bool(self.ll[x] >> y & 1)

    def as_dict(self) -> dict:
        n = self.poset.n
        return {
            "n": n,
            "ll": [[bool(self.ll[x] >> y & 1) for y in range(n)] for x in range(n)],
            "compact": sorted(self.compact),
        }


def way_below_report(P: FinitePoset, cap: int = EXHAUSTIVE_CAP) -> WayBelowReport:
    _check_cap(P, cap)
    rows = []
    compact = 0
    for x in range(P.n):
        row = 0
        for y in range(P.n):
            if way_below(P, x, y, cap):
                row |= 1 << y
        rows.append(row)
        if row >> x & 1:
            compact |= 1 << x
    return WayBelowReport(P, tuple(rows), compact)


def chain_way_below(C: ChainHandle, x, y) -> bool:
    """Way-below on a chain: strict order forces it, the diagonal is the
    compactness question, and descending pairs never qualify."""
    c = C.compare(x, y)
    if c < 0:
        return True
    if c > 0:
        return False
    return C.local_structure(x).is_compact


def theorem2_dichotomy(obj, x, cap: int = EXHAUSTIVE_CAP) -> str:
    """Each chain element is compact or the supremum of its strict
    downset, never both and never neither."""
    if isinstance(obj, ChainHandle):
        ls = obj.local_structure(x)
        compact, sup_of = ls.is_compact, ls.is_sup_of_strict_downset
    else:
        P: FinitePoset = obj
        if not P.is_chain:
            raise NotAChain("dichotomy requires a totally ordered input")
        P.check_index(x)
        compact = way_below(P, x, x, cap)
        strict_down = P.strict_down(x)
        sup_of = bool(strict_down) and P.sup_mask(strict_down) == x
    if compact == sup_of:
        raise AssertionError(f"dichotomy failed at {x!r}: compact={compact}, sup={sup_of}")
    return COMPACT if compact else SUP_OF_STRICT_DOWNSET


def way_way_below(P: FinitePoset, x: int, y: int, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Like way-below but quantified over arbitrary subsets with suprema,
    the empty set included (its supremum is the least element)."""
    _check_cap(P, cap)
    P.check_index(x)
    P.check_index(y)
    for mask in range(1 << P.n):
        s = P.sup_mask(mask)
        if s is not None and P.leq(y, s) and not mask & P.up[x]:
            return False
    return True


def way_way_below_set(P: FinitePoset, x: int, cap: int = EXHAUSTIVE_CAP) -> frozenset[int]:
    return frozenset(y for y in range(P.n) if way_way_below(P, y, x, cap))


def is_completely_distributive(P: FinitePoset, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Every element is the supremum of the elements way-way-below it."""
    _check_cap(P, cap)
    for x in range(P.n):
        approx = 0
        for y in range(P.n):
            if way_way_below(P, y, x, cap):
                approx |= 1 << y
        if P.sup_mask(approx) != x:
            return False
    return True


def is_continuous_poset(P: FinitePoset, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Every waydown set is directed with supremum the point itself."""
    _check_cap(P, cap)
    for x in range(P.n):
        waydown = 0
        for y in range(P.n):
            if way_below(P, y, x, cap):
                waydown |= 1 << y
        if not P.is_directed_mask(waydown) or P.sup_mask(waydown) != x:
            return False
    return True


def hyper_prec(P: FinitePoset, y: int, x: int) -> bool:
    """x lies in the upper-topology interior of the principal filter of y."""
    P.check_index(x)
    P.check_index(y)
    T = canonical_topology(P, "upper")
    return bool(T.interior_mask(P.up[y]) >> x & 1)


def is_hypercontinuous(P: FinitePoset) -> bool:
    """Every point is the directed supremum of its hyper-way-below set."""
    T = canonical_topology(P, "upper")
    for x in range(P.n):
        approx = 0
        for y in range(P.n):
            if T.interior_mask(P.up[y]) >> x & 1:
                approx |= 1 << y
        if not P.is_directed_mask(approx) or P.sup_mask(approx) != x:
            return False
    return True


@dataclass(frozen=True)
class Corollary3Report:
    """Equivalence record: strict order agrees with way-below away from
    the least element iff no other element is compact."""

    cond1: bool
    cond2: bool
    order_dense: bool
    conditionally_complete: bool

    def __post_init__(self):
        if self.cond1 != self.cond2:
            raise AssertionError("the two equivalent conditions disagree")
        if self.cond1 and not self.order_dense:
            raise AssertionError("agreement of < and way-below must force density")
        if self.conditionally_complete and self.order_dense and not self.cond1:
            raise AssertionError("density plus conditional completeness must force agreement")

    def as_dict(self) -> dict:
        return {
            "cond1": self.cond1,
            "cond2": self.cond2,
            "order_dense": self.order_dense,
            "conditionally_complete": self.conditionally_complete,
        }


def _finite_chain_report(P: FinitePoset, cap: int) -> Corollary3Report:
    least = P.least()
    cond1 = True
    for x in range(P.n):
        for y in range(P.n):
            if x == y == least:
                continue
            if P.lt(x, y) != way_below(P, x, y, cap):
                cond1 = False
    cond2 = all(
        not way_below(P, x, x, cap) for x in range(P.n) if x != least
    )
    cls = classify(P)
    return Corollary3Report(cond1, cond2, cls.order_dense, cls.conditionally_complete)


def corollary3_report(
    obj, samples: int = 64, seed: int = 0, cap: int = EXHAUSTIVE_CAP
) -> Corollary3Report:
    """Check the agreement-of-relations conditions on a chain.

    Finite inputs are settled by the brute-force oracle.  Infinite
    handles take the globally quantified flags from their declared
    metadata and spot-verify them on a seeded sample: the diagonal of
    chain_way_below must match the declared compactness profile, and
    declared density must produce a witness between every sampled pair.
    """
    if isinstance(obj, FiniteChain):
        return _finite_chain_report(obj.to_finite_poset(), cap)
    if isinstance(obj, FinitePoset):
        if not obj.is_chain:
            raise NotAChain("the report is only defined on chains")
        return _finite_chain_report(obj, cap)
    C: ChainHandle = obj
    pts = C.sample(seed, samples)
    least = C.least() if C.has_least else None
    compact_witness = False
    for p in pts:
        if least is not None and C.compare(p, least) == 0:
            continue
        if chain_way_below(C, p, p):
            compact_witness = True
            if C.only_least_compact:
                raise AssertionError(f"{C.format(p)} is compact but the profile forbids it")
    if not C.only_least_compact and len(pts) >= 3 and not compact_witness:
        raise AssertionError(f"no sampled compact element corroborates the {C.id} profile")
    for a, b in zip(pts, pts[1:]):
        w = C.between(a, b)
        if C.declared_order_dense and w is None:
            raise AssertionError(
                f"declared density refuted between {C.format(a)} and {C.format(b)}"
            )
        if w is not None and not (C.compare(a, w) < 0 < C.compare(b, w)):
            raise AssertionError("between returned an element outside the gap")
    cond = C.only_least_compact
    return Corollary3Report(
        cond1=cond,
        cond2=cond,
        order_dense=C.declared_order_dense,
        conditionally_complete=C.declared_conditionally_complete,
    )
