"""Explicit topologies on finite carriers.

Open families are materialized as frozensets of bitmasks and validated
on construction, so topology equality is structural equality.  The
separation and continuity checks exploit the fact that on a finite
carrier every point has a least open neighbourhood: an open set exists
around A avoiding B iff the least one does.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .bitsets import as_set, elements, full_mask, mask_of
from .errors import (
    CapExceeded,
    CarrierMismatch,
    IndexOutOfRange,
    NotALattice,
)
from .poset import FinitePoset

HEREDITARY_CAP = 8
PRODUCT_CARRIER_CAP = 10

CANONICAL_NAMES = (
    "upper",
    "lower",
    "scott",
    "dual_scott",
    "intrinsic",
    "interval",
    "open_interval",
    "order",
    "lawson",
    "dual_lawson",
    "bi_scott",
)


@dataclass(frozen=True)
class Topology:
    """A family of open subsets of {0..n-1}, closed under union and
    intersection and containing the empty set and the whole carrier."""

    n: int
    opens: frozenset[int]

    def __post_init__(self):
        full = full_mask(self.n)
        for u in self.opens:
            if u & ~full:
                raise IndexOutOfRange(f"open {u:#x} exceeds carrier of size {self.n}")
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("a topology must contain the empty set and the carrier")
        fam = self.opens
        for a in fam:
            for b in fam:
                if b > a:
                    continue
                if a | b not in fam or a & b not in fam:
                    raise ValueError("open family is not closed under union/intersection")

    @cached_property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=lambda m: (m.bit_count(), elements(m))))

    @cached_property
    def minimal_neighbourhoods(self) -> tuple[int, ...]:
        """minimal_neighbourhoods[x] is the least open set containing x."""
        out = []
        for x in range(self.n):
            acc = self.full
            bit = 1 << x
            for u in self.opens:
                if u & bit:
                    acc &= u
            out.append(acc)
        return tuple(out)

    def is_open_mask(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed_mask(self, mask: int) -> bool:
        return (self.full & ~mask) in self.opens

    def open_sets(self) -> list[frozenset[int]]:
        return [as_set(m) for m in self.sorted_opens]

    def interior_mask(self, mask: int) -> int:
        out = 0
        for u in self.opens:
            if u & ~mask == 0:
                out |= u
        return out

    def closure_mask(self, mask: int) -> int:
        return self.full & ~self.interior_mask(self.full & ~mask)


def _close_family(n: int, seed: Iterable[int]) -> frozenset[int]:
    """Unions of finite intersections of the seed, plus empty and full."""
    fam = set(seed)
    fam.add(0)
    fam.add(full_mask(n))
    for op in (int.__and__, int.__or__):
        changed = True
        while changed:
            changed = False
            current = list(fam)
            for i, a in enumerate(current):
                for b in current[i + 1 :]:
                    c = op(a, b)
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return frozenset(fam)


def generate_topology(n: int, subbasis: Iterable[Iterable[int]]) -> Topology:
    """Smallest topology on {0..n-1} containing every subbasis member."""
    full = full_mask(n)
    masks = []
    for s in subbasis:
        m = s if isinstance(s, int) else mask_of(s)
        if m & ~full:
            raise IndexOutOfRange(f"subbasis member {m:#x} exceeds carrier of size {n}")
        masks.append(m)
    return Topology(n, _close_family(n, masks))


def join_topologies(T1: Topology, T2: Topology) -> Topology:
    """Topology generated by both open families together."""
    if T1.n != T2.n:
        raise CarrierMismatch(f"carriers {T1.n} and {T2.n} differ")
    return Topology(T1.n, _close_family(T1.n, T1.opens | T2.opens))


def topology_equal(T1: Topology, T2: Topology) -> bool:
    if T1.n != T2.n:
        raise CarrierMismatch(f"carriers {T1.n} and {T2.n} differ")
    return T1.opens == T2.opens


def _upper_topology(P: FinitePoset) -> Topology:
    return generate_topology(P.n, [P.full & ~P.down[x] for x in range(P.n)])


def _lower_topology(P: FinitePoset) -> Topology:
    return generate_topology(P.n, [P.full & ~P.up[x] for x in range(P.n)])


def _is_upper_mask(P: FinitePoset, mask: int) -> bool:
    for x in elements(mask):
        if P.up[x] & ~mask:
            return False
    return True


def _scott_topology(P: FinitePoset) -> Topology:
    """Scott opens from the definition: upper sets that meet every
    directed set whose supremum they contain.  Nothing is assumed about
    the result coinciding with any other family."""
    dirs = P.directed_with_sup
    opens = []
    for mask in range(1 << P.n):
        if not _is_upper_mask(P, mask):
            continue
        if all(s_mask & mask for s_mask, s in dirs if mask >> s & 1):
            opens.append(mask)
    return Topology(P.n, frozenset(opens))


def canonical_topology(P: FinitePoset, name: str) -> Topology:
    """One of the named topologies attached to a poset.

    upper/lower are generated by complements of principal ideals and
    filters; scott comes from the directed-supremum definition; the
    interval family is the join of upper and lower; order and
    open_interval are ray-generated; lawson variants join scott with the
    opposite ray topology.
    """
    if name == "upper":
        return _upper_topology(P)
    if name == "lower":
        return _lower_topology(P)
    if name == "scott":
        return _scott_topology(P)
    if name == "dual_scott":
        return _scott_topology(P.dual)
    if name in ("intrinsic", "interval"):
        return join_topologies(_upper_topology(P), _lower_topology(P))
    if name == "order":
        rays = [P.strict_up(x) for x in range(P.n)] + [P.strict_down(x) for x in range(P.n)]
        return generate_topology(P.n, rays)
    if name == "open_interval":
        rays = [P.strict_up(x) for x in range(P.n)] + [P.strict_down(x) for x in range(P.n)]
        rays += [
            P.strict_up(a) & P.strict_down(b) for a in range(P.n) for b in range(P.n)
        ]
        return generate_topology(P.n, rays)
    if name == "lawson":
        return join_topologies(_scott_topology(P), _lower_topology(P))
    if name == "dual_lawson":
        return join_topologies(_scott_topology(P.dual), _upper_topology(P))
    if name == "bi_scott":
        return join_topologies(_scott_topology(P), _scott_topology(P.dual))
    raise ValueError(f"unknown topology name {name!r}, expected one of {CANONICAL_NAMES}")


def discrete_topology(n: int) -> Topology:
    return Topology(n, frozenset(range(1 << n)))


def indiscrete_topology(n: int) -> Topology:
    return Topology(n, frozenset({0, full_mask(n)}))


def hull(T: Topology, subset: Iterable[int], kind: str) -> frozenset[int]:
    """Interior or closure of a subset in the given topology."""
    mask = mask_of(subset)
    if mask & ~T.full:
        raise IndexOutOfRange(f"subset exceeds carrier of size {T.n}")
    if kind == "interior":
        return as_set(T.interior_mask(mask))
    if kind == "closure":
        return as_set(T.closure_mask(mask))
    raise ValueError(f"unknown hull kind {kind!r}")


def scott_closure(P: FinitePoset, subset: Iterable[int]) -> frozenset[int]:
    """Closure of the subset in the Scott topology of P."""
    return hull(canonical_topology(P, "scott"), subset, "closure")


def subspace_topology(T: Topology, subset: Iterable[int]) -> Topology:
    """Relative topology on the subset, reindexed along sorted order."""
    mask = mask_of(subset)
    if mask & ~T.full:
        raise IndexOutOfRange(f"subset exceeds carrier of size {T.n}")
    points = elements(mask)
    index = {p: i for i, p in enumerate(points)}
    opens = set()
    for u in T.opens:
        opens.add(mask_of(index[p] for p in elements(u & mask)))
    return Topology(len(points), frozenset(opens))


def product_topology(T1: Topology, T2: Topology) -> Topology:
    """All unions of open rectangles on the n*m carrier (row-major)."""
    n, m = T1.n, T2.n
    if n * m > PRODUCT_CARRIER_CAP:
        raise CapExceeded(n * m, PRODUCT_CARRIER_CAP)
    rects = set()
    for u in T1.opens:
        for v in T2.opens:
            r = 0
            for x in elements(u):
                for y in elements(v):
                    r |= 1 << (x * m + y)
            rects.add(r)
    fam = set(rects)
    changed = True
    while changed:
        changed = False
        current = list(fam)
        for i, a in enumerate(current):
            for b in current[i + 1 :]:
                c = a | b
                if c not in fam:
                    fam.add(c)
                    changed = True
    fam.add(0)
    fam.add(full_mask(n * m))
    return Topology(n * m, frozenset(fam))


def _normal_over(points: tuple[int, ...], closed: list[int], minimal: dict[int, int]) -> bool:
    """Normality given explicit closed sets and least neighbourhoods.

    Disjoint closed sets have disjoint open neighbourhoods iff their
    least open hulls are disjoint, because every open superset contains
    the least one.
    """
    for i, a in enumerate(closed):
        for b in closed[i + 1 :]:
            if a & b:
                continue
            hull_a = 0
            for x in points:
                if a >> x & 1:
                    hull_a |= minimal[x]
            hull_b = 0
            for x in points:
                if b >> x & 1:
                    hull_b |= minimal[x]
            if hull_a & hull_b:
                return False
    return True


@dataclass(frozen=True)
class SeparationReport:
    t1: bool
    hausdorff: bool
    normal: bool
    completely_normal: bool

    def as_dict(self) -> dict:
        return {
            "t1": self.t1,
            "hausdorff": self.hausdorff,
            "normal": self.normal,
            "completely_normal": self.completely_normal,
        }


def _relative_normal(T: Topology, space: int) -> bool:
    """Normality of the subspace on ``space`` without reindexing."""
    points = elements(space)
    rel_opens = {u & space for u in T.opens}
    minimal = {}
    for x in points:
        acc = space
        for u in rel_opens:
            if u >> x & 1:
                acc &= u
        minimal[x] = acc
    closed = [space & ~u for u in rel_opens]
    return _normal_over(points, closed, minimal)


def separation_report(T: Topology, hereditary_cap: int = HEREDITARY_CAP) -> SeparationReport:
    """T1, Hausdorff, normality, and normality of every subspace."""
    if T.n > hereditary_cap:
        raise CapExceeded(T.n, hereditary_cap)
    t1 = all(T.is_closed_mask(1 << x) for x in range(T.n))
    minimal = T.minimal_neighbourhoods
    hausdorff = all(
        not minimal[x] & minimal[y] for x in range(T.n) for y in range(x + 1, T.n)
    )
    normal = _relative_normal(T, T.full)
    completely_normal = all(_relative_normal(T, s) for s in range(1 << T.n))
    if hausdorff and not t1:
        raise AssertionError("hausdorff space failed the t1 check")
    if completely_normal and not normal:
        raise AssertionError("hereditarily normal space failed the normality check")
    return SeparationReport(t1, hausdorff, normal, completely_normal)


def is_pospace(P: FinitePoset, T: Topology) -> bool:
    """Whether the order relation is closed in the product topology.

    A pair x <=/ y lies in the complement; the least open rectangle
    around it is the product of the least neighbourhoods, so closedness
    reduces to those rectangles avoiding the relation.
    """
    if P.n != T.n:
        raise CarrierMismatch(f"poset carrier {P.n} differs from topology carrier {T.n}")
    minimal = T.minimal_neighbourhoods
    for x in range(P.n):
        for y in range(P.n):
            if P.leq(x, y):
                continue
            u, v = minimal[x], minimal[y]
            if any(P.up[a] & v for a in elements(u)):
                return False
    return True


def _pairwise_op_table(P: FinitePoset, kind: str) -> Optional[list[list[int]]]:
    table = []
    for x in range(P.n):
        row = []
        for y in range(P.n):
            pair = (1 << x) | (1 << y)
            z = P.sup_mask(pair) if kind == "sup" else P.inf_mask(pair)
            if z is None:
                return None
            row.append(z)
        table.append(row)
    return table


def is_topological_lattice(P: FinitePoset, T: Topology) -> bool:
    """Continuity of pairwise meet and join from the product topology.

    Both maps are continuous iff the image of the least open rectangle
    around (x, y) stays inside the least neighbourhood of the value.
    """
    if P.n != T.n:
        raise CarrierMismatch(f"poset carrier {P.n} differs from topology carrier {T.n}")
    meet = _pairwise_op_table(P, "inf")
    join = _pairwise_op_table(P, "sup")
    if meet is None or join is None:
        raise NotALattice("some pair lacks a meet or a join")
    minimal = T.minimal_neighbourhoods
    for table in (meet, join):
        for x in range(P.n):
            for y in range(P.n):
                target = minimal[table[x][y]]
                for a in elements(minimal[x]):
                    for b in elements(minimal[y]):
                        if not target >> table[a][b] & 1:
                            return False
    return True


def is_order_convex_mask(P: FinitePoset, mask: int) -> bool:
    for a in elements(mask):
        for b in elements(mask):
            if P.up[a] & P.down[b] & ~mask:
                return False
    return True


def has_order_convex_basis(P: FinitePoset, T: Topology) -> bool:
    """Every point of every open set has an open order-convex
    neighbourhood inside it."""
    if P.n != T.n:
        raise CarrierMismatch(f"poset carrier {P.n} differs from topology carrier {T.n}")
    convex = {u for u in T.opens if is_order_convex_mask(P, u)}
    for u in T.opens:
        for x in elements(u):
            if not any(v >> x & 1 and v & ~u == 0 for v in convex):
                return False
    return True


def xu_condition(P: FinitePoset) -> bool:
    """Every upper set closed in the intrinsic topology is closed in the
    lower topology; equivalently, lower sets open in the intrinsic
    topology are already open in the lower topology."""
    intrinsic = canonical_topology(P, "intrinsic")
    lower = canonical_topology(P, "lower")
    for mask in range(1 << P.n):
        if not _is_upper_mask(P, mask):
            continue
        if intrinsic.is_closed_mask(mask) and not lower.is_closed_mask(mask):
            return False
    return True
