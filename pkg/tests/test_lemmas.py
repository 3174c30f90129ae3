import json

import pytest

from nulldiam import (
    Graph,
    check_interlacing,
    check_pendant_deletion,
    check_rank_bound_diam,
    check_rank_lower_bound,
    check_reduction_equivalence,
    check_twin_deletion,
    check_twin_extension,
    complete_graph,
    cycle_graph,
    nullity,
    path_graph,
    run_suite,
    star_graph,
)
from nulldiam.lemmas import ALL_SUITES


def p5_with_triple_anchor() -> Graph:
    return path_graph(5).with_vertex(0b00111)


class TestInterlacing:
    def test_path5(self):
        report = check_interlacing(path_graph(5), mu_values=(0,))
        assert report.ok
        assert report.checked == 5

    def test_cycle4(self):
        assert check_interlacing(cycle_graph(4), mu_values=(0,)).ok

    def test_exhaustive_small(self, census7):
        for n in range(1, 7):
            for g in census7[n]:
                assert check_interlacing(g).ok


class TestTwinDeletion:
    def test_cycle4(self):
        report = check_twin_deletion(cycle_graph(4))
        assert report.ok
        assert report.checked == 4  # two twin pairs, two deletions each

    def test_star(self):
        assert check_twin_deletion(star_graph(4)).ok

    def test_reduced_graph_is_vacuous(self):
        report = check_twin_deletion(path_graph(4))
        assert report.ok
        assert report.checked == 0

    def test_exhaustive_small(self, census7):
        for n in range(2, 7):
            for g in census7[n]:
                assert check_twin_deletion(g).ok


class TestPendantDeletion:
    def test_path5(self):
        report = check_pendant_deletion(path_graph(5))
        assert report.ok
        assert report.checked == 2

    def test_pendant_off_a_path_counts_both_components(self):
        g = path_graph(5).with_vertex(0b00010)  # extra pendant at the second path vertex
        assert nullity(g) == 2
        assert nullity(g.without(5, 1)) == 2  # K_1 + P_3
        assert check_pendant_deletion(g).ok

    def test_k2_leaves_empty_graph(self):
        report = check_pendant_deletion(complete_graph(2))
        assert report.ok
        assert report.checked == 2

    def test_support_only_form_is_tracked_not_asserted(self):
        report = check_pendant_deletion(path_graph(5))
        notes = report.notes["instances"]
        assert all(not inst["support_only_form_holds"] for inst in notes)
        assert all(inst["eta_without_support"] == inst["eta"] + 1 for inst in notes)

    def test_exhaustive_small(self, census7):
        for n in range(2, 7):
            for g in census7[n]:
                assert check_pendant_deletion(g).ok


class TestRankBound:
    def test_extremal_instance_sweeps_both_subsets(self):
        report = check_rank_bound_diam(p5_with_triple_anchor())
        assert report.ok
        assert report.skipped is None
        assert report.checked == 2

    def test_non_extremal_is_skipped(self):
        report = check_rank_bound_diam(path_graph(5))
        assert report.skipped is not None
        assert report.checked == 0

    def test_exhaustive_small(self, census7):
        for n in range(2, 7):
            for g in census7[n]:
                assert check_rank_bound_diam(g).ok


class TestTwinExtension:
    def test_extremal_instance(self):
        report = check_twin_extension(p5_with_triple_anchor())
        assert report.ok
        assert report.skipped is None

    def test_non_extremal_is_skipped(self):
        assert check_twin_extension(cycle_graph(5)).skipped is not None

    def test_exhaustive_small(self, census7):
        for n in range(2, 7):
            for g in census7[n]:
                assert check_twin_extension(g).ok


class TestReductionEquivalence:
    def test_cycle4_is_a_counterexample(self):
        report = check_reduction_equivalence(cycle_graph(4))
        assert not report.ok
        [violation] = report.violations
        assert violation.severity == "violation"
        assert violation.witness["d"] == 2
        assert violation.witness["d_reduced"] == 1
        assert report.notes["diameter"]["changed"]

    def test_reduced_graph_is_consistent(self):
        assert check_reduction_equivalence(path_graph(5)).ok

    def test_duplicated_pendant_keeps_diameter_and_consistency(self):
        g = path_graph(5).with_vertex(0b00010)
        report = check_reduction_equivalence(g)
        assert report.ok
        assert not report.notes["diameter"]["changed"]

    def test_single_vertex_is_skipped(self):
        assert check_reduction_equivalence(complete_graph(1)).skipped is not None

    def test_every_violation_at_small_order_drops_diameter(self, census7):
        seen_violation = False
        for n in range(2, 7):
            for g in census7[n]:
                report = check_reduction_equivalence(g)
                for violation in report.violations:
                    seen_violation = True
                    assert violation.witness["d_reduced"] < violation.witness["d"]
                    assert violation.severity == "violation"
        assert seen_violation


class TestRankLowerBound:
    def test_even_path_attains_the_bound(self):
        for m in (4, 6):
            report = check_rank_lower_bound(path_graph(m))
            assert report.ok
            assert report.notes["odd_extremal"]

    def test_even_diameter_is_skipped(self):
        assert check_rank_lower_bound(cycle_graph(4)).skipped == "diameter is even"

    def test_exhaustive_small(self, census7):
        for n in range(2, 7):
            for g in census7[n]:
                assert check_rank_lower_bound(g).ok


class TestReports:
    def test_reports_are_deterministic(self):
        a = check_reduction_equivalence(cycle_graph(4)).to_dict()
        b = check_reduction_equivalence(cycle_graph(4)).to_dict()
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_violation_serialization_shape(self):
        report = check_reduction_equivalence(cycle_graph(4))
        payload = report.to_dict()
        assert set(payload) == {
            "lemma",
            "graph6",
            "checked",
            "violations",
            "skipped",
            "truncated",
            "notes",
        }
        [violation] = payload["violations"]
        assert set(violation) == {"lemma", "graph6", "witness", "expected", "observed", "severity"}

    def test_run_suite_dispatch(self):
        assert run_suite("interlacing", path_graph(3)).lemma == "interlacing"
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nonsense", path_graph(3))

    def test_all_suites_cover_every_checker(self):
        for name in ALL_SUITES:
            report = run_suite(name, path_graph(4))
            assert report.lemma == name
