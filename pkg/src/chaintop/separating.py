"""Monotone [0,1]-valued step functions separating a closed lower set
from an outside point.

A function is a finite cut list, so it can only change value finitely
often: across a gap of the chain such a jump is genuinely continuous,
while inside a dense stretch the construction bisects down to a
configurable depth and certifies each residual jump (of size 2^-depth)
with the density witness that allows refining it further.  Every jump
therefore carries a machine-checkable certificate instead of an
unverifiable claim about infinitely many open sets.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cmp_to_key

from .chains import ChainHandle, FiniteChain, ReversedChain
from .errors import NotClosed, NotLowerSet, PointInsideA
from .intervals import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalSet,
    interval_member,
    normalize,
)
from .topology import canonical_topology

BELOW_OR_EQUAL = "below-or-equal"
STRICTLY_BELOW = "strictly-below"

DEFAULT_DEPTH = 10


@dataclass(frozen=True)
class Cut:
    threshold: object
    side: str
    value: Fraction


@dataclass(frozen=True)
class JumpCertificate:
    """Evidence that one value jump respects the chain's structure."""

    kind: str  # "gap" or "density"
    lo: object
    hi: object
    lo_value: Fraction
    hi_value: Fraction
    witness: object = None


@dataclass(frozen=True)
class SeparatingFunction:
    """Piecewise-constant monotone map into [0,1].

    Evaluation walks the cuts in ascending threshold order and returns
    the value of the first matching cut, defaulting to 1 beyond them.
    ``complemented`` flips values through 1 - v, which turns a monotone
    function on a reversed chain into an antitone one on the original.
    """

    chain: ChainHandle
    cuts: tuple[Cut, ...]
    default: Fraction = Fraction(1)
    depth: int = DEFAULT_DEPTH
    certificates: tuple[JumpCertificate, ...] = ()
    complemented: bool = False

    def raw_value(self, y) -> Fraction:
        y = self.chain.validate(y)
        cuts = self.cuts
        # cut conditions are monotone along the ascending threshold list,
        # so the first matching cut can be found by bisection
        lo, hi = 0, len(cuts)
        while lo < hi:
            mid = (lo + hi) // 2
            cut = cuts[mid]
            c = self.chain.compare(y, cut.threshold)
            if c < 0 or (c == 0 and cut.side == BELOW_OR_EQUAL):
                hi = mid
            else:
                lo = mid + 1
        return cuts[lo].value if lo < len(cuts) else self.default

    def __call__(self, y) -> Fraction:
        v = self.raw_value(y)
        return 1 - v if self.complemented else v


def evaluate(f: SeparatingFunction, y) -> Fraction:
    return f(y)


def _lower_set_boundary(chain: ChainHandle, A: IntervalSet):
    """Validate the closed-lower-set shape and return its attained upper
    boundary, or None for the empty set."""
    norm = normalize(A)
    if not norm.intervals:
        return None
    if len(norm.intervals) > 1:
        raise NotLowerSet("a lower set has a single convex component")
    iv = norm.intervals[0]
    covers_bottom = iv.lower is NEG_INF or (
        chain.has_least
        and not iv.lower_open
        and chain.compare(iv.lower, chain.least()) == 0
    )
    if not covers_bottom:
        raise NotLowerSet("the component does not reach the bottom of the chain")
    if iv.upper is POS_INF:
        raise PointInsideA("the lower set is the whole chain")
    if iv.upper_open:
        # after canonicalization an open boundary has no predecessor, so
        # the complement filter is not open and the set is not closed
        raise NotClosed(f"boundary {chain.format(iv.upper)} is not attained")
    return iv.upper


def separate_from_lower(
    C: ChainHandle, A: IntervalSet, x, depth: int = DEFAULT_DEPTH
) -> SeparatingFunction:
    """A monotone function that is 0 on the closed lower set A and 1 at x.

    If the stretch between the boundary of A and x collapses into a gap
    the result is a two-valued step; otherwise bisection builds a dyadic
    staircase with one certificate per jump.
    """
    x = C.validate(x)
    if interval_member(A, x):
        raise PointInsideA(f"{C.format(x)} lies inside the set to separate from")
    b = _lower_set_boundary(C, A)
    if b is None:
        return SeparatingFunction(C, (), depth=depth)
    succ = C.successor(b)
    if succ is not None:
        # a gap right above the boundary: the indicator of the strict
        # upper cone is already continuous, no staircase needed
        step = (Cut(b, BELOW_OR_EQUAL, Fraction(0)),)
        cert = (JumpCertificate("gap", b, succ, Fraction(0), Fraction(1)),)
        return SeparatingFunction(C, step, depth=depth, certificates=cert)
    cuts: list[Cut] = []
    certs: list[JumpCertificate] = []

    def build(lo, hi, vlo: Fraction, vhi: Fraction, budget: int) -> None:
        mid = C.between(lo, hi)
        if mid is None:
            cuts.append(Cut(lo, BELOW_OR_EQUAL, vlo))
            certs.append(JumpCertificate("gap", lo, hi, vlo, vhi))
            return
        if budget == 0:
            cuts.append(Cut(hi, STRICTLY_BELOW, vlo))
            certs.append(JumpCertificate("density", lo, hi, vlo, vhi, witness=mid))
            return
        vmid = (vlo + vhi) / 2
        build(lo, mid, vlo, vmid, budget - 1)
        build(mid, hi, vmid, vhi, budget - 1)

    build(b, x, Fraction(0), Fraction(1), depth)
    return SeparatingFunction(C, tuple(cuts), depth=depth, certificates=tuple(certs))


def reverse_interval_set(IS: IntervalSet) -> IntervalSet:
    """The same point set viewed through the order-reversal adapter."""
    rev = ReversedChain(IS.chain) if not isinstance(IS.chain, ReversedChain) else IS.chain.base
    flipped = tuple(
        Interval(
            NEG_INF if iv.upper is POS_INF else iv.upper,
            iv.upper_open,
            POS_INF if iv.lower is NEG_INF else iv.lower,
            iv.lower_open,
        )
        for iv in IS.intervals
    )
    return IntervalSet(rev, flipped)


def separate_from_upper(
    C: ChainHandle, A: IntervalSet, x, depth: int = DEFAULT_DEPTH
) -> SeparatingFunction:
    """Dual separation: 1 on the closed upper set A, 0 at x.

    This is the lower-set construction on the order-reversed handle with
    values complemented."""
    rev_A = reverse_interval_set(A)
    g = separate_from_lower(rev_A.chain, rev_A, x, depth)
    return replace(g, complemented=True)


@dataclass(frozen=True)
class VerificationReport:
    monotone_ok: bool
    zero_on_A_ok: bool
    one_at_x_ok: bool
    continuity_ok: bool

    def all_ok(self) -> bool:
        return self.monotone_ok and self.zero_on_A_ok and self.one_at_x_ok and self.continuity_ok

    def as_dict(self) -> dict:
        return {
            "monotone_ok": self.monotone_ok,
            "zero_on_A_ok": self.zero_on_A_ok,
            "one_at_x_ok": self.one_at_x_ok,
            "continuity_ok": self.continuity_ok,
        }


def _finite_continuity(C: FiniteChain, f: SeparatingFunction) -> bool:
    """Exact openness of subbasic preimages in the intrinsic topology."""
    P = C.to_finite_poset()
    T = canonical_topology(P, "intrinsic")
    values = sorted({f.raw_value(y) for y in range(C.n)})
    for v in values:
        strictly_below = 0
        strictly_above = 0
        for y in range(C.n):
            fy = f.raw_value(y)
            if fy < v:
                strictly_below |= 1 << y
            if fy > v:
                strictly_above |= 1 << y
        if not T.is_open_mask(strictly_below) or not T.is_open_mask(strictly_above):
            return False
    return True


def _certified_continuity(C: ChainHandle, f: SeparatingFunction) -> bool:
    """Each jump must carry a valid gap or density certificate."""
    levels = [cut.value for cut in f.cuts] + [f.default]
    jumps = sum(1 for a, b in zip(levels, levels[1:]) if a != b)
    if len(f.certificates) != jumps:
        return False
    tolerance = Fraction(1, 2**f.depth)
    for cert in f.certificates:
        if C.compare(cert.lo, cert.hi) >= 0:
            return False
        if f.raw_value(cert.lo) != cert.lo_value or f.raw_value(cert.hi) != cert.hi_value:
            return False
        if cert.kind == "gap":
            if C.between(cert.lo, cert.hi) is not None:
                return False
        elif cert.kind == "density":
            w = cert.witness
            if w is None:
                return False
            if not (C.compare(cert.lo, w) < 0 < C.compare(cert.hi, w)):
                return False
            if cert.hi_value - cert.lo_value > tolerance:
                return False
            if f.raw_value(w) != cert.lo_value:
                return False
        else:
            return False
    return True


def verify_separating(
    C: ChainHandle,
    f: SeparatingFunction,
    A: IntervalSet,
    x,
    samples: int = 200,
    seed: int = 0,
) -> VerificationReport:
    """Check the separation postconditions on a seeded sample.

    Monotonicity and the boundary values are sampled; continuity is
    exact on finite chains and certificate-checked on infinite ones.
    """
    x = C.validate(x)
    if isinstance(C, FiniteChain):
        samples = min(samples, C.n)
    pts = list(C.sample(seed, samples))
    pts.append(x)
    # probe every decision point of the function as well
    pts.extend(cut.threshold for cut in f.cuts)
    norm = normalize(A)
    if norm.intervals and norm.intervals[0].upper is not POS_INF:
        if not norm.intervals[0].upper_open:
            pts.append(norm.intervals[0].upper)
    pts.sort(key=cmp_to_key(C._compare))
    values = [f(p) for p in pts]
    monotone_ok = all(a <= b for a, b in zip(values, values[1:]))
    zero_on_A_ok = all(
        f(p) == 0 for p in pts if interval_member(norm, p)
    )
    one_at_x_ok = f(x) == 1
    if isinstance(C, FiniteChain):
        continuity_ok = _finite_continuity(C, f)
    else:
        continuity_ok = _certified_continuity(C, f)
    return VerificationReport(monotone_ok, zero_on_A_ok, one_at_x_ok, continuity_ok)
