import pytest

from mbgames.families import complete, edgeless, fig3_graph, h_r, path, star
from mbgames.rules import GameSpec, Move, Status, Variant, engine
from mbgames.solver import (
    ResourceLimitError,
    Solver,
    best_move,
    naive_solve,
    principal_variation,
    solve,
)

K3 = complete(3)


class TestSolve:
    def test_k3_needs_three_colours(self):
        assert solve(GameSpec(Variant.VERTEX, 2), K3).winner is Status.BREAKER_WIN
        assert solve(GameSpec(Variant.VERTEX, 3), K3).winner is Status.MAKER_WIN

    def test_max_degree_plus_one_always_wins(self):
        for g in (path(5), star(5), complete(4)):
            k = g.max_degree() + 1
            assert solve(GameSpec(Variant.VERTEX, k), g).winner is Status.MAKER_WIN

    def test_arboricity_one_colour(self):
        # a single colour class must stay a forest
        assert solve(GameSpec(Variant.ARBORICITY, 1), K3).winner is Status.BREAKER_WIN
        assert solve(GameSpec(Variant.ARBORICITY, 1), path(4)).winner is Status.MAKER_WIN

    def test_star_game_chromatic_number_two(self):
        g = star(4)
        assert solve(GameSpec(Variant.VERTEX, 1), g).winner is Status.BREAKER_WIN
        assert solve(GameSpec(Variant.VERTEX, 2), g).winner is Status.MAKER_WIN

    def test_deterministic(self):
        g = fig3_graph()
        spec = GameSpec(Variant.VERTEX, 4)
        first = solve(spec, g)
        second = solve(spec, g)
        assert first.winner is second.winner
        assert principal_variation(spec, g) == principal_variation(spec, g)

    def test_result_statistics(self):
        result = solve(GameSpec(Variant.VERTEX, 2), K3)
        assert result.elapsed >= 0
        assert result.table_entries >= 0
        assert result.oracle is not None

    def test_table_cap_fails_loudly(self):
        g = fig3_graph()
        with pytest.raises(ResourceLimitError):
            solve(GameSpec(Variant.VERTEX, 3), g, max_table_entries=2)

    def test_edgeless_any_k(self):
        g = edgeless(4)
        assert solve(GameSpec(Variant.VERTEX, 1), g).winner is Status.MAKER_WIN


class TestBestMove:
    def test_all_moves_win_picks_least(self):
        spec = GameSpec(Variant.VERTEX, 3)
        solver = Solver(spec, K3)
        assert solver.best_move(engine(spec, K3).initial()) == Move(vertex=1, colour=1)

    def test_lemma_winning_colour_at_vertex_three(self):
        og = h_r(1)
        spec = GameSpec(Variant.ORDERED_VERTEX, 3, og.ordering)
        eng = engine(spec, og.graph)
        pos = eng.initial()
        pos = eng.apply(pos, Move(colour=1))
        pos = eng.apply(pos, Move(colour=2))
        # colour 2 at vertex 3 loses; colour 3 is Maker's winning move
        assert best_move(spec, og.graph, pos) == Move(colour=3)

    def test_fig3_opening_is_vertex_one_or_two(self):
        g = fig3_graph()
        spec = GameSpec(Variant.VERTEX, 4)
        move = best_move(spec, g, engine(spec, g).initial())
        assert move.vertex in (1, 2)

    def test_terminal_position_rejected(self):
        spec = GameSpec(Variant.VERTEX, 2)
        eng = engine(spec, K3)
        pos = eng.apply(eng.initial(), Move(vertex=1, colour=1))
        pos = eng.apply(pos, Move(vertex=2, colour=2))
        with pytest.raises(ValueError, match="over"):
            best_move(spec, K3, pos)


class TestPrincipalVariation:
    def test_k3_three_colours_runs_to_completion(self):
        pv = principal_variation(GameSpec(Variant.VERTEX, 3), K3)
        assert len(pv) == 3

    def test_k3_two_colours_ends_in_two_moves(self):
        spec = GameSpec(Variant.VERTEX, 2)
        pv = principal_variation(spec, K3)
        assert len(pv) <= 2
        eng = engine(spec, K3)
        pos = eng.initial()
        for move in pv:
            pos = eng.apply(pos, move)
        assert eng.status(pos) is Status.BREAKER_WIN

    def test_pv_terminal_status_matches_winner(self):
        for k in (2, 3, 4):
            g = fig3_graph()
            spec = GameSpec(Variant.VERTEX, k)
            result = solve(spec, g)
            eng = engine(spec, g)
            pos = eng.initial()
            for move in result.oracle.principal_variation():
                pos = eng.apply(pos, move)
            assert eng.status(pos) is result.winner


class TestNaiveOracle:
    def test_agrees_on_k3_arboricity(self):
        for k in (1, 2):
            spec = GameSpec(Variant.ARBORICITY, k)
            assert naive_solve(spec, K3).winner is solve(spec, K3).winner

    def test_reports_node_count(self):
        result = naive_solve(GameSpec(Variant.VERTEX, 2), K3)
        assert result.nodes_searched > 0
        assert result.table_entries == 0
