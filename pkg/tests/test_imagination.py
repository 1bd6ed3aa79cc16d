import pytest

from mbgames.families import complete, path
from mbgames.imagination import (
    AgentError,
    ConcedeError,
    SolverAgent,
    TraceEntry,
    solver_strategy,
    transform_breaker,
    verify_agent_wins,
)
from mbgames.rules import GameSpec, Move, Player, Status, Variant, engine
from mbgames.solver import solve


def arb(k):
    return GameSpec(Variant.ARBORICITY, k)


class TestSolverAgent:
    def test_winning_breaker_agent_exists_for_k3_one_colour(self):
        agent = solver_strategy(arb(1), complete(3), Player.BREAKER)
        assert isinstance(agent, SolverAgent)

    def test_losing_side_rejected(self):
        # forests are Maker wins even with one colour
        with pytest.raises(ValueError, match="maker win"):
            solver_strategy(arb(1), path(3), Player.BREAKER)

    def test_breaker_agent_for_k5_two_colours(self):
        # completion is impossible: 10 edges cannot fit in two forests
        agent = solver_strategy(arb(2), complete(5), Player.BREAKER)
        assert agent.side is Player.BREAKER

    def test_agent_plays_a_full_game(self):
        g = complete(3)
        spec = arb(1)
        eng = engine(spec, g)
        breaker = solver_strategy(spec, g, Player.BREAKER)
        pos = eng.initial()
        while eng.status(pos) is Status.ONGOING:
            if pos.count % 2 == 0:
                move = eng.legal_moves(pos)[0]
                breaker.observe(move)
            else:
                move = breaker.propose()
            pos = eng.apply(pos, move)
        assert eng.status(pos) is Status.BREAKER_WIN

    def test_out_of_turn_protocol_errors(self):
        breaker = solver_strategy(arb(1), complete(3), Player.BREAKER)
        with pytest.raises(AgentError, match="out of turn"):
            breaker.propose()


class TestVerifyAgentWins:
    def test_solver_breaker_agent_on_k3(self):
        g = complete(3)
        agent = solver_strategy(arb(1), g, Player.BREAKER)
        result = verify_agent_wins(arb(1), g, agent)
        assert result.ok
        assert result.leaves > 0

    def test_no_agent_can_defend_a_forest(self):
        g = path(3)
        agent = SolverAgent(arb(1), g, Player.BREAKER)
        result = verify_agent_wins(arb(1), g, agent)
        assert not result.ok
        assert result.maker_line is not None
        assert len(result.maker_line) == 2  # both edges get coloured

    def test_counterexample_line_replays_to_maker_win(self):
        g = path(3)
        agent = SolverAgent(arb(1), g, Player.BREAKER)
        result = verify_agent_wins(arb(1), g, agent)
        eng = engine(arb(1), g)
        pos = eng.initial()
        for move in result.maker_line:
            pos = eng.apply(pos, move)
        assert eng.status(pos) is Status.MAKER_WIN


class TestTransform:
    def test_k_zero_rejected(self):
        inner = solver_strategy(arb(1), complete(3), Player.BREAKER)
        with pytest.raises(ValueError, match="k >= 1"):
            transform_breaker(inner, complete(3), 0)

    def test_transformed_agent_defeats_every_maker_line_k4(self):
        # Breaker wins K4 with 2 colours; the transform wins with 1
        g = complete(4)
        assert solve(arb(2), g).winner is Status.BREAKER_WIN
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1)
        result = verify_agent_wins(arb(1), g, agent)
        assert result.ok

    def test_transformed_agent_defeats_every_maker_line_k5(self):
        g = complete(5)
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1)
        result = verify_agent_wins(arb(1), g, agent)
        assert result.ok

    def test_trace_preserves_move_locations(self):
        g = complete(4)
        trace: list[TraceEntry] = []
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1, trace=trace)
        eng = engine(arb(1), g)
        maker = solve(arb(1), g).oracle
        pos = eng.initial()
        while eng.status(pos) is Status.ONGOING:
            if pos.count % 2 == 0:
                move = maker.best_move(pos)
                agent.observe(move)
            else:
                move = agent.propose()
            pos = eng.apply(pos, move)
        assert eng.status(pos) is Status.BREAKER_WIN
        assert trace
        for entry in trace:
            assert entry.containment_ok
            assert entry.real_move.edge == entry.imagined_move.edge
        coloured_real = len([e for e in agent.state.real.edge_colours if e])
        coloured_imag = len([e for e in agent.state.imagined.edge_colours if e])
        assert coloured_real == coloured_imag

    def test_observe_rejects_breaker_turn(self):
        g = complete(4)
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1)
        agent.observe(Move(edge=(1, 2), colour=1))
        with pytest.raises(AgentError, match="Breaker's turn"):
            agent.observe(Move(edge=(1, 3), colour=1))

    def test_copy_isolates_state(self):
        g = complete(4)
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1)
        agent.observe(Move(edge=(1, 2), colour=1))
        dup = agent.copy()
        dup_reply = dup.propose()
        assert agent.state.real.count == 1
        assert dup.state.real.count == 2
        assert dup_reply.edge is not None

    def test_concede_error_on_desynced_imagined_state(self):
        # the concede branch is unreachable through the public protocol, so
        # desync the imagination state by hand and watch it raise loudly
        from mbgames.imagination import ImaginationState

        g = complete(4)
        inner = solver_strategy(arb(2), g, Player.BREAKER)
        agent = transform_breaker(inner, g, 1)
        real = agent.eng_real.initial()
        real = agent.eng_real.apply(real, Move(edge=(1, 2), colour=1))
        real = agent.eng_real.apply(real, Move(edge=(3, 4), colour=1))
        imag = agent.eng_imag.initial()
        imag = agent.eng_imag.apply(imag, Move(edge=(1, 2), colour=1))
        imag = agent.eng_imag.apply(imag, Move(edge=(2, 3), colour=1))
        agent.state = ImaginationState(real, imag)
        # (1,3) with colour 1 is legal in the real game but closes a
        # monochromatic path 1-2-3 in the imagined game
        with pytest.raises(ConcedeError, match="cannot be copied"):
            agent.observe(Move(edge=(1, 3), colour=1))
