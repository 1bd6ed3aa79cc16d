import pytest

from mbgames.families import complete, edgeless, fig4_graph, h_r, path, star
from mbgames.parameters import (
    monotonicity_violations,
    parameter_report,
    win_profile,
)
from mbgames.rules import Status, Variant


class TestWinProfile:
    def test_h1_ordered_profile_is_non_monotone(self):
        og = h_r(1)
        profile = win_profile(og.graph, Variant.ORDERED_VERTEX, (3, 4), og.ordering)
        assert profile.outcome(3) is Status.MAKER_WIN
        assert profile.outcome(4) is Status.BREAKER_WIN
        assert profile.monotonicity_violations() == [3]
        assert not profile.upward_closed

    def test_fig4_connected_marking_profile(self):
        g, _ = fig4_graph()
        profile = win_profile(g, Variant.CONNECTED_MARKING, (1, 3))
        assert profile.outcome(1) is Status.BREAKER_WIN
        assert profile.outcome(2) is Status.MAKER_WIN
        assert profile.outcome(3) is Status.MAKER_WIN

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            win_profile(path(3), Variant.VERTEX, (3, 2))

    def test_outcome_out_of_range_rejected(self):
        profile = win_profile(path(3), Variant.VERTEX, (1, 2))
        with pytest.raises(ValueError, match="outside"):
            profile.outcome(5)

    def test_as_dict(self):
        profile = win_profile(complete(3), Variant.VERTEX, (2, 3))
        assert profile.as_dict() == {2: "breaker", 3: "maker"}


class TestMonotonicityViolations:
    def test_h1_ordered(self):
        og = h_r(1)
        assert monotonicity_violations(
            og.graph, Variant.ORDERED_VERTEX, (3, 4), og.ordering
        ) == [3]

    def test_arboricity_small_graphs_clean(self):
        for g in (complete(4), path(5), star(4)):
            assert monotonicity_violations(g, Variant.ARBORICITY, (1, g.m)) == []

    def test_marking_clean(self):
        g = complete(4)
        assert monotonicity_violations(g, Variant.MARKING, (0, 4)) == []


class TestParameterReport:
    def test_edgeless_parameters_all_one(self):
        report = parameter_report(edgeless(3))
        assert report["chi_g"].value == 1
        assert report["gamma_g"].value == 1
        assert report["col_g"].value == 1
        assert report["arboricity_game_number"].value == 1
        assert not report["chi_cg"].applicable  # disconnected guard
        assert not report["col_cg"].applicable

    def test_triangle(self):
        report = parameter_report(complete(3))
        assert report["chi_g"].value == 3
        assert report["chi_cg"].value == 3
        assert report["gamma_g"].value == 3
        assert report["arboricity_game_number"].value == 2
        assert report["col_g"].value == 3
        assert report["col_cg"].value == 3

    def test_star_chi_g_two(self):
        report = parameter_report(star(4))
        assert report["chi_g"].value == 2

    def test_profiles_attached_and_consistent(self):
        report = parameter_report(complete(3))
        pv = report["chi_g"]
        assert pv.profile is not None
        assert pv.profile.outcome(pv.value) is Status.MAKER_WIN
        for k in range(pv.profile.k_lo, pv.value):
            assert pv.profile.outcome(k) is Status.BREAKER_WIN

    def test_explicit_k_max_fig4(self):
        g, e = fig4_graph()
        report = parameter_report(g, k_max=5)
        assert report["col_cg"].value == 3
        reduced = parameter_report(g.delete_edge(e), k_max=5)
        assert reduced["col_cg"].value == 4

    def test_as_dict_roundtrips_to_json(self):
        import json

        report = parameter_report(path(3))
        blob = json.dumps(report.as_dict())
        assert json.loads(blob)["parameters"]["chi_g"]["value"] == report["chi_g"].value

    def test_k_max_below_one_rejected(self):
        with pytest.raises(ValueError):
            parameter_report(path(3), k_max=0)
