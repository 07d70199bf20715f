import pytest

from chaintop import (
    CLAIM_IDS,
    CoverageGap,
    FAULT_KERNELS,
    SEARCH_TARGETS,
    SearchConfig,
    SuiteConfig,
    UnknownTarget,
    find_counterexample,
    is_completely_distributive,
    is_pospace,
    canonical_topology,
    classify,
    run_suite,
    separation_report,
)

SMALL = SuiteConfig(
    max_n=4,
    sample_pairs=40,
    sample_elements=24,
    interval_cases=20,
    separation_samples=40,
    dm_max_n=4,
    hereditary_max_n=4,
    cd_max_n=4,
)


def test_default_claim_ids_cover_the_map():
    assert set(CLAIM_IDS) == {
        "lemma1",
        "thm2",
        "cor3",
        "prop4",
        "prop5",
        "remark-dm",
        "cor6",
        "thm7",
        "thm8-1",
        "thm8-2",
        "thm9",
        "xu",
    }


def test_small_suite_passes():
    report = run_suite(SMALL)
    assert report.passed()
    assert all(r.instances > 0 for r in report.records)
    assert [r.claim for r in report.records] == sorted(CLAIM_IDS)


def test_suite_deterministic():
    assert run_suite(SMALL).as_json() == run_suite(SMALL).as_json()


def test_restricted_claims():
    report = run_suite(SuiteConfig(max_n=8, claims=("prop5",)))
    assert report.passed()
    rec = report.record("prop5")
    assert rec.instances > 0
    assert "constructors" in rec.note


def test_unknown_claim_and_chain():
    with pytest.raises(UnknownTarget):
        run_suite(SuiteConfig(claims=("lemma9000",)))
    with pytest.raises(UnknownTarget):
        run_suite(SuiteConfig(chains=("reals",)))


def test_record_lookup():
    report = run_suite(SuiteConfig(max_n=3, claims=("cor6",)))
    assert report.record("cor6").verdict == "pass"
    with pytest.raises(KeyError):
        report.record("lemma1")


@pytest.mark.parametrize("fault", FAULT_KERNELS)
def test_each_fault_is_detected(fault):
    report = run_suite(SuiteConfig(**{**SMALL.__dict__, "faults": (fault,)}))
    assert not report.passed()
    failing = [r.claim for r in report.records if r.verdict == "fail"]
    assert failing
    for rec in report.records:
        if rec.verdict == "fail":
            assert rec.witnesses  # verdict iff witnesses


def test_fault_scott_breaks_prop5_with_topology_diff():
    report = run_suite(SuiteConfig(max_n=4, claims=("prop5",), faults=("scott",)))
    rec = report.record("prop5")
    assert rec.verdict == "fail"
    assert any("differ" in w for w in rec.witnesses)


def test_search_targets_all_findable():
    for target in SEARCH_TARGETS:
        found = find_counterexample(SearchConfig(target=target, min_n=3, max_n=6, seed=1))
        assert found is not None, target
        assert found.witness
        assert found.instances_tried >= 1


def test_search_witnesses_are_genuine():
    found = find_counterexample(
        SearchConfig(target="completely_distributive_fails", min_n=5, max_n=5, seed=0)
    )
    assert not found.poset.is_chain
    assert not is_completely_distributive(found.poset)

    found = find_counterexample(
        SearchConfig(target="pospace_fails_for_upper", min_n=2, max_n=3, seed=0)
    )
    assert not is_pospace(found.poset, canonical_topology(found.poset, "upper"))

    found = find_counterexample(
        SearchConfig(target="conditional_completeness_fails", min_n=4, max_n=6, seed=0)
    )
    assert not classify(found.poset).conditionally_complete
    assert not found.poset.is_chain

    found = find_counterexample(
        SearchConfig(target="normality_fails_for_topology", min_n=3, max_n=5, seed=0)
    )
    rep = separation_report(canonical_topology(found.poset, "upper"))
    assert not rep.normal


def test_search_determinism():
    a = find_counterexample(SearchConfig(target="pospace_fails_for_upper", seed=5))
    b = find_counterexample(SearchConfig(target="pospace_fails_for_upper", seed=5))
    assert a.poset == b.poset and a.witness == b.witness


def test_search_not_found_returns_none():
    # a target that cannot occur at size 1
    cfg = SearchConfig(
        target="conditional_completeness_fails", min_n=1, max_n=1, seed=0, max_instances=50
    )
    assert find_counterexample(cfg) is None


def test_search_config_validation():
    with pytest.raises(UnknownTarget):
        SearchConfig(target="perpetual_motion")
    with pytest.raises(CoverageGap):
        SearchConfig(target="pospace_fails_for_upper", min_n=5, max_n=2)


def test_coverage_guard_rejects_empty_claims():
    # an empty size range leaves the chain-only claims with no instances
    with pytest.raises(CoverageGap):
        run_suite(SuiteConfig(min_n=5, max_n=4, chains=(), claims=("cor6",)))
