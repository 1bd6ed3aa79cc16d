import io
import json

import pytest

from mbgames.cli import run
from mbgames.families import fig3_graph
from mbgames.graphs import to_edge_list


def invoke(*argv, stdin=None):
    out = io.StringIO()
    code = run(list(argv), out=out, in_stream=stdin)
    return code, out.getvalue()


class TestSolveCommand:
    def test_fig3_vertex_four_colours(self):
        code, out = invoke(
            "solve", "--family", "fig3", "--variant", "vertex", "--colours", "4"
        )
        assert code == 0
        assert "Maker wins" in out

    def test_fig3_vertex_three_colours(self):
        code, out = invoke(
            "solve", "--family", "fig3", "--variant", "vertex", "--colours", "3"
        )
        assert code == 0
        assert "Breaker wins" in out

    def test_json_mode(self):
        code, out = invoke(
            "solve", "--family", "complete:3", "--variant", "vertex",
            "--colours", "3", "--json", "--pv",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["winner"] == "maker"
        assert payload["pv"] == ["v1=1", "v2=2", "v3=3"]

    def test_marking_needs_bound(self):
        code, _ = invoke(
            "solve", "--family", "complete:3", "--variant", "marking",
            "--colours", "2",
        )
        assert code == 2

    def test_graph_file_input(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(to_edge_list(fig3_graph()))
        code, out = invoke(
            "solve", "--graph", str(path), "--variant", "vertex", "--colours", "4"
        )
        assert code == 0
        assert "Maker wins" in out

    def test_graph6_file_input(self, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text("Bw\n")
        code, out = invoke(
            "solve", "--graph6", str(path), "--variant", "vertex", "--colours", "3"
        )
        assert code == 0
        assert "Maker wins" in out

    def test_bad_edge_list_is_usage_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 1\n1 1\n")
        code, _ = invoke(
            "solve", "--graph", str(path), "--variant", "vertex", "--colours", "2"
        )
        assert code == 2

    def test_ordered_variant_with_order_flag(self):
        code, out = invoke(
            "solve", "--family", "h_r:1", "--variant", "overtex",
            "--colours", "3", "--json",
        )
        assert code == 0
        assert json.loads(out)["winner"] == "maker"

    def test_emit_edges(self):
        code, out = invoke(
            "solve", "--family", "complete:3", "--variant", "vertex",
            "--colours", "3", "--emit-edges",
        )
        assert code == 0
        assert "3 3" in out
        assert "# graph6: Bw" in out


class TestProfileCommand:
    def test_h1_ordered_profile(self):
        code, out = invoke(
            "profile", "--family", "h_r:1", "--variant", "overtex",
            "--k-min", "3", "--k-max", "4", "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["outcomes"] == {"3": "maker", "4": "breaker"}
        assert payload["monotonicity_violations"] == [3]

    def test_human_output_mentions_violations(self):
        code, out = invoke(
            "profile", "--family", "h_r:1", "--variant", "overtex",
            "--k-min", "3", "--k-max", "4",
        )
        assert code == 0
        assert "violations" in out


class TestReportCommand:
    def test_fig3_report(self):
        code, out = invoke("report", "--family", "fig3", "--k-max", "6", "--json")
        assert code == 0
        params = json.loads(out)["parameters"]
        assert params["chi_g"]["value"] == 4
        assert params["chi_cg"]["value"] == 5

    def test_disconnected_not_applicable(self):
        code, out = invoke("report", "--family", "edgeless:3")
        assert code == 0
        assert "not applicable" in out


class TestSearchCommand:
    def test_small_enumeration_scan(self):
        code, out = invoke(
            "search", "--n", "4", "--connected",
            "--predicate", "param:chi_g=3",
        )
        assert code == 0
        assert "# scanned 6 graphs" in out

    def test_json_report_written(self, tmp_path):
        path = tmp_path / "report.json"
        code, _ = invoke(
            "search", "--n", "3", "--predicate", "param:chi_g=2",
            "--json-report", str(path),
        )
        assert code == 0
        assert json.loads(path.read_text())["scanned"] == 4

    def test_needs_source(self):
        code, _ = invoke("search", "--predicate", "param:chi_g=2")
        assert code == 2


class TestTransformCommand:
    def test_complete4_with_trace(self):
        code, out = invoke(
            "transform", "--family", "complete:4", "--colours", "1", "--trace"
        )
        assert code == 0
        assert "wins every Maker line" in out
        assert "containment ok" in out

    def test_complete5_json(self):
        code, out = invoke(
            "transform", "--family", "complete:5", "--colours", "1", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] is True

    def test_forest_has_nothing_to_transform(self):
        code, out = invoke("transform", "--family", "path:4", "--colours", "1")
        assert code == 1
        assert "does not win" in out


class TestVerifyPaperCommand:
    def test_list(self):
        code, out = invoke("verify-paper", "--list")
        assert code == 0
        assert out.count(":") >= 10
        assert "T1" in out and "T10" in out

    def test_subset_runs_and_passes(self):
        code, out = invoke("verify-paper", "--only", "T1,T5", "--json")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("PASS")]
        assert len(lines) == 2
        payload = json.loads(out.splitlines()[-1])
        assert payload["all_ok"] is True

    def test_unknown_id_is_usage_error(self):
        code, _ = invoke("verify-paper", "--only", "T99")
        assert code == 2


class TestPlayCommand:
    def test_human_maker_wins_k3_three_colours(self):
        stdin = io.StringIO("1 1\n2 2\n3 3\n")
        code, out = invoke(
            "play", "--family", "complete:3", "--variant", "vertex",
            "--colours", "3", "--side", "maker", stdin=stdin,
        )
        assert code == 0
        assert "Maker wins" in out

    def test_solver_breaker_always_wins_k3_two_colours(self):
        stdin = io.StringIO("1 1\n2 2\n3 2\n")
        code, out = invoke(
            "play", "--family", "complete:3", "--variant", "vertex",
            "--colours", "2", "--side", "maker", stdin=stdin,
        )
        assert code == 0
        assert "Breaker wins" in out

    def test_illegal_entries_reprompted(self):
        stdin = io.StringIO("9 9\nbogus\n1 1\n2 2\n3 3\n")
        code, out = invoke(
            "play", "--family", "complete:3", "--variant", "vertex",
            "--colours", "3", "--side", "maker", stdin=stdin,
        )
        assert code == 0
        assert "illegal move" in out
        assert "Maker wins" in out

    def test_eof_aborts_cleanly(self):
        stdin = io.StringIO("")
        code, out = invoke(
            "play", "--family", "complete:3", "--variant", "vertex",
            "--colours", "3", "--side", "maker", stdin=stdin,
        )
        assert code == 0
        assert "aborted" in out

    def test_human_breaker_on_h1_ordered_loses(self):
        # solver Maker wins ordered H_1 with 3 colours whatever Breaker does;
        # offering colours 1,2,3 at every prompt survives the re-prompt loop
        stdin = io.StringIO("1\n2\n3\n" * 8)
        code, out = invoke(
            "play", "--family", "h_r:1", "--variant", "overtex",
            "--colours", "3", "--side", "breaker", stdin=stdin,
        )
        assert code == 0
        assert "Maker wins" in out