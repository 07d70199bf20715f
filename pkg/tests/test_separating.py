from dataclasses import replace
from fractions import Fraction

import pytest

from chaintop import (
    FiniteChain,
    Interval,
    IntervalSet,
    NEG_INF,
    NotClosed,
    NotLowerSet,
    OMEGA,
    PointInsideA,
    below,
    closed_interval,
    evaluate,
    make_chain,
    reverse_interval_set,
    separate_from_lower,
    separate_from_upper,
    verify_separating,
)

RAT = make_chain("rat01")


def test_finite_chain_indicator():
    fc = FiniteChain(3)
    A = IntervalSet(fc, (below(0),))
    f = separate_from_lower(fc, A, 2)
    assert [f(y) for y in range(3)] == [0, 1, 1]
    assert verify_separating(fc, f, A, 2).all_ok()


def test_rational_staircase():
    A = IntervalSet(RAT, (below(Fraction(1, 2)),))
    f = separate_from_lower(RAT, A, Fraction(3, 4))
    assert f(Fraction(1, 2)) == 0
    assert f(Fraction(3, 4)) == 1
    assert evaluate(f, Fraction(0)) == 0
    assert len(f.cuts) == 1024  # depth-10 bisection
    rep = verify_separating(RAT, f, A, Fraction(3, 4), samples=200, seed=3)
    assert rep.all_ok()


def test_staircase_values_are_dyadic_and_monotone():
    A = IntervalSet(RAT, (below(Fraction(1, 3)),))
    f = separate_from_lower(RAT, A, Fraction(1), depth=6)
    values = [c.value for c in f.cuts]
    assert all(v.denominator & (v.denominator - 1) == 0 for v in values)
    assert values == sorted(values)
    jumps = {b - a for a, b in zip(values, values[1:])}
    assert jumps == {Fraction(1, 64)}


def test_split_gap_step():
    sp = make_chain("split")
    q = Fraction(1, 2)
    A = IntervalSet(sp, (below((q, 0)),))
    f = separate_from_lower(sp, A, (q, 1))
    assert len(f.cuts) == 1
    assert f.certificates[0].kind == "gap"
    assert f((q, 0)) == 0 and f((q, 1)) == 1
    assert verify_separating(sp, f, A, (q, 1), samples=60, seed=1).all_ok()


def test_split_staircase_mixes_certificates():
    sp = make_chain("split")
    A = IntervalSet(sp, (below((Fraction(1, 2), 1)),))
    f = separate_from_lower(sp, A, (Fraction(2), 0), depth=6)
    kinds = {c.kind for c in f.certificates}
    assert kinds == {"gap", "density"}
    assert verify_separating(sp, f, A, (Fraction(2), 0), samples=80, seed=4).all_ok()


def test_omega_boundary_step():
    om = make_chain("omega+1")
    A = IntervalSet(om, (below(2),))
    f = separate_from_lower(om, A, OMEGA)
    assert f(2) == 0 and f(3) == 1 and f(OMEGA) == 1
    assert verify_separating(om, f, A, OMEGA, samples=50, seed=2).all_ok()


def test_empty_lower_set():
    A = IntervalSet(RAT, ())
    f = separate_from_lower(RAT, A, Fraction(1, 2))
    assert f(Fraction(0)) == 1 and f(Fraction(1)) == 1
    assert verify_separating(RAT, f, A, Fraction(1, 2), samples=20).all_ok()


def test_shape_errors():
    with pytest.raises(NotLowerSet):
        separate_from_lower(
            RAT,
            IntervalSet(RAT, (closed_interval(Fraction(1, 4), Fraction(1, 2)),)),
            Fraction(3, 4),
        )
    with pytest.raises(NotLowerSet):
        separate_from_lower(
            RAT,
            IntervalSet(
                RAT,
                (
                    below(Fraction(1, 8)),
                    closed_interval(Fraction(1, 2), Fraction(5, 8)),
                ),
            ),
            Fraction(3, 4),
        )
    with pytest.raises(PointInsideA):
        separate_from_lower(RAT, IntervalSet(RAT, (below(Fraction(1, 2)),)), Fraction(1, 4))
    with pytest.raises(NotClosed):
        separate_from_lower(
            RAT,
            IntervalSet(RAT, (Interval(NEG_INF, True, Fraction(1, 2), True),)),
            Fraction(3, 4),
        )


def test_unattained_boundary_is_rejected_only_when_genuinely_open():
    # over the integers the open ray closes to an attained boundary
    ic = make_chain("int")
    A = IntervalSet(ic, (Interval(NEG_INF, True, 5, True),))
    f = separate_from_lower(ic, A, 10)
    assert f(4) == 0 and f(5) == 1 and f(10) == 1


def test_planted_fault_detected():
    A = IntervalSet(RAT, (below(Fraction(1, 2)),))
    f = separate_from_lower(RAT, A, Fraction(3, 4), depth=4)
    cuts = list(f.cuts)
    cuts[2], cuts[5] = (
        replace(cuts[2], value=cuts[5].value),
        replace(cuts[5], value=cuts[2].value),
    )
    broken = replace(f, cuts=tuple(cuts))
    rep = verify_separating(RAT, broken, A, Fraction(3, 4), samples=200, seed=9)
    assert not rep.monotone_ok


def test_certificate_tampering_detected():
    A = IntervalSet(RAT, (below(Fraction(1, 2)),))
    f = separate_from_lower(RAT, A, Fraction(3, 4), depth=3)
    certs = list(f.certificates)
    certs[0] = replace(certs[0], kind="gap", witness=None)  # falsely claim a gap
    forged = replace(f, certificates=tuple(certs))
    rep = verify_separating(RAT, forged, A, Fraction(3, 4), samples=50, seed=5)
    assert not rep.continuity_ok


def test_reverse_interval_set():
    A = IntervalSet(RAT, (Interval(Fraction(1, 2), False, Fraction(1), False),))
    rev = reverse_interval_set(A)
    assert rev.chain.id == "rev(rat01)"
    assert rev.intervals[0].lower == Fraction(1)
    # membership is unchanged pointwise
    for q in (Fraction(0), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        from chaintop import interval_member

        assert interval_member(rev, q) == interval_member(A, q)


def test_separate_from_upper():
    A = IntervalSet(RAT, (Interval(Fraction(1, 2), False, Fraction(1), False),))
    g = separate_from_upper(RAT, A, Fraction(1, 4))
    assert g(Fraction(1, 2)) == 1 and g(Fraction(1)) == 1
    assert g(Fraction(1, 4)) == 0
    values = [g(Fraction(k, 16)) for k in range(17)]
    assert values == sorted(values)


def test_evaluate_matches_call():
    A = IntervalSet(RAT, (below(Fraction(1, 2)),))
    f = separate_from_lower(RAT, A, Fraction(3, 4), depth=5)
    for q in RAT.sample(6, 40):
        assert evaluate(f, q) == f(q)
        assert 0 <= f(q) <= 1
