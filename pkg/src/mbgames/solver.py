"""Exact win-loss search over a game's position graph.

``solve`` runs depth-first AND/OR search with results memoized under
colour-canonical position keys; ``naive_solve`` is the independent oracle
(plain recursion, no memo table, no canonicalization, no counting shortcuts).
Both return the exact winner under optimal play; there are no draws.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .graphs import Graph
from .rules import GameSpec, Move, Player, Position, Status, engine


class ResourceLimitError(RuntimeError):
    """The memo table outgrew its configured entry cap."""


class BudgetExceededError(RuntimeError):
    """The solve ran past its wall-clock deadline."""


_DEADLINE_STRIDE = 4096


class Solver:
    """Reusable exact solver for one (spec, graph) pair.

    The memo table persists across queries, so a strategy oracle can keep
    asking about positions discovered during play without re-searching.
    """

    def __init__(
        self,
        spec: GameSpec,
        g: Graph,
        *,
        max_table_entries: int | None = None,
        deadline: float | None = None,
    ):
        self.spec = spec
        self.g = g
        self.eng = engine(spec, g)
        self.nodes_searched = 0
        self.max_table_entries = max_table_entries
        self.deadline = deadline
        self._table: dict = {}

    @property
    def table_entries(self) -> int:
        return len(self._table)

    def winner(self, pos: Position | None = None) -> Status:
        """Exact winner from ``pos`` (the initial position by default)."""
        if pos is None:
            pos = self.eng.initial()
        depth = self.g.n + self.g.m + 16
        if depth > sys.getrecursionlimit() - 100:
            sys.setrecursionlimit(3 * depth + 200)
        return self._winner(pos)

    def _winner(self, pos: Position) -> Status:
        eng = self.eng
        st, quick = eng.assess(pos)
        if st is not Status.ONGOING:
            return st
        if quick is not None:
            return quick
        key = pos._key
        if key is None:
            key = eng.canonical_key(pos)
        table = self._table
        cached = table.get(key)
        if cached is not None:
            return cached
        self.nodes_searched += 1
        if self.deadline is not None and self.nodes_searched % _DEADLINE_STRIDE == 0:
            if time.perf_counter() > self.deadline:
                raise BudgetExceededError("solve exceeded its time budget")
        if self.max_table_entries is not None and len(table) >= self.max_table_entries:
            raise ResourceLimitError(
                f"memo table reached the {self.max_table_entries}-entry cap"
            )
        mover_win = (
            Status.MAKER_WIN if pos.count % 2 == 0 else Status.BREAKER_WIN
        )
        result = (
            Status.BREAKER_WIN if mover_win is Status.MAKER_WIN else Status.MAKER_WIN
        )
        winner = self._winner
        for cached_child, child in eng.search_steps(pos, table):
            w = cached_child if cached_child is not None else winner(child)
            if w is mover_win:
                result = mover_win
                break
        table[key] = result
        return result

    def solve(self) -> "SolveResult":
        start = time.perf_counter()
        winner = self.winner()
        elapsed = time.perf_counter() - start
        return SolveResult(
            winner=winner,
            nodes_searched=self.nodes_searched,
            table_entries=self.table_entries,
            elapsed=elapsed,
            oracle=StrategyOracle(self),
        )

    def best_move(self, pos: Position) -> Move:
        """First winning move in (element, colour) order for the side to move;
        the first legal move when the side to move is lost."""
        eng = self.eng
        if eng.status(pos) is not Status.ONGOING:
            raise ValueError("no move to pick: the game is over")
        mover_win = Status.MAKER_WIN if pos.count % 2 == 0 else Status.BREAKER_WIN
        first = None
        for move, child in eng.children(pos):
            if first is None:
                first = move
            if self._winner(child) is mover_win:
                return move
        assert first is not None
        return first

    def principal_variation(self) -> list[Move]:
        """Moves produced when both sides play ``best_move`` from the start."""
        eng = self.eng
        pos = eng.initial()
        moves: list[Move] = []
        while eng.status(pos) is Status.ONGOING:
            move = self.best_move(pos)
            moves.append(move)
            pos = eng.apply(pos, move)
        return moves


class StrategyOracle:
    """Deterministic move source backed by a solver's memo table."""

    def __init__(self, solver: Solver):
        self.solver = solver

    def best_move(self, pos: Position) -> Move:
        return self.solver.best_move(pos)

    def principal_variation(self) -> list[Move]:
        return self.solver.principal_variation()


@dataclass
class SolveResult:
    winner: Status
    nodes_searched: int
    table_entries: int
    elapsed: float
    oracle: StrategyOracle | None = field(default=None, repr=False)


def solve(
    spec: GameSpec,
    g: Graph,
    *,
    max_table_entries: int | None = None,
    deadline: float | None = None,
) -> SolveResult:
    return Solver(
        spec, g, max_table_entries=max_table_entries, deadline=deadline
    ).solve()


def best_move(spec: GameSpec, g: Graph, pos: Position) -> Move:
    return Solver(spec, g).best_move(pos)


def principal_variation(spec: GameSpec, g: Graph) -> list[Move]:
    return Solver(spec, g).principal_variation()


def naive_solve(spec: GameSpec, g: Graph) -> SolveResult:
    """Independent oracle: plain recursive search over the same rules layer,
    with no memoization, no canonical keys and no counting shortcuts.
    Intended for tiny inputs only."""
    eng = engine(spec, g)
    nodes = 0
    start = time.perf_counter()

    def search(pos: Position) -> Status:
        nonlocal nodes
        st = eng.status(pos)
        if st is not Status.ONGOING:
            return st
        nodes += 1
        mover_win = Status.MAKER_WIN if pos.count % 2 == 0 else Status.BREAKER_WIN
        for move in eng.legal_moves(pos):
            if search(eng.apply(pos, move)) is mover_win:
                return mover_win
        return (
            Status.BREAKER_WIN if mover_win is Status.MAKER_WIN else Status.MAKER_WIN
        )

    winner = search(eng.initial())
    return SolveResult(
        winner=winner,
        nodes_searched=nodes,
        table_entries=0,
        elapsed=time.perf_counter() - start,
        oracle=None,
    )
