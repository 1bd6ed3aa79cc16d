"""Rules for every Maker-Breaker colouring and marking game variant.

Positions are immutable values: ``apply`` returns a new position and the turn
is always derived from the move count (Maker moves first). Breaker wins are
declared the moment some element becomes unplayable, matching the game
definitions; marking-bound violations latch the position at apply time.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .graphs import ColourComponents, Graph, validate_ordering


class RulesError(ValueError):
    """A game specification that cannot be played on the given graph."""


class IllegalMoveError(RulesError):
    """A move that violates the variant's rules at the current position."""


class Variant(Enum):
    VERTEX = "vertex"
    CONNECTED_VERTEX = "cvertex"
    ORDERED_VERTEX = "overtex"
    GREEDY = "greedy"
    ORDERED_GREEDY = "ogreedy"
    ARBORICITY = "arboricity"
    MARKING = "marking"
    CONNECTED_MARKING = "cmarking"

    @property
    def ordered(self) -> bool:
        return self in (Variant.ORDERED_VERTEX, Variant.ORDERED_GREEDY)

    @property
    def connectivity_restricted(self) -> bool:
        return self in (Variant.CONNECTED_VERTEX, Variant.CONNECTED_MARKING)

    @property
    def marking(self) -> bool:
        return self in (Variant.MARKING, Variant.CONNECTED_MARKING)

    @property
    def greedy(self) -> bool:
        return self in (Variant.GREEDY, Variant.ORDERED_GREEDY)

    @property
    def colour_symmetric(self) -> bool:
        """Variants whose positions may be relabelled by any colour permutation."""
        return self in (
            Variant.VERTEX,
            Variant.CONNECTED_VERTEX,
            Variant.ORDERED_VERTEX,
            Variant.ARBORICITY,
        )

    @property
    def plays_edges(self) -> bool:
        return self is Variant.ARBORICITY


VARIANTS_BY_NAME = {v.value: v for v in Variant}


class Status(Enum):
    ONGOING = "ongoing"
    MAKER_WIN = "maker"
    BREAKER_WIN = "breaker"


class Player(Enum):
    MAKER = "maker"
    BREAKER = "breaker"

    @property
    def win(self) -> Status:
        return Status.MAKER_WIN if self is Player.MAKER else Status.BREAKER_WIN

    @property
    def opponent(self) -> "Player":
        return Player.BREAKER if self is Player.MAKER else Player.MAKER


@dataclass(frozen=True)
class GameSpec:
    """One game: a variant plus its palette size k.

    For marking variants ``k`` is the back-degree bound s (Maker wins iff every
    vertex is marked with at most s already-marked neighbours). Ordered
    variants carry the prescribed vertex ordering.
    """

    variant: Variant
    k: int
    ordering: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.k < 0:
            raise RulesError(f"palette size / bound must be >= 0, got {self.k}")
        if self.variant.ordered:
            if self.ordering is None:
                raise RulesError(f"{self.variant.value} requires a vertex ordering")
            object.__setattr__(self, "ordering", tuple(self.ordering))
        elif self.ordering is not None:
            raise RulesError(f"{self.variant.value} does not take an ordering")


@dataclass(frozen=True)
class Move:
    """Variant-family move payload.

    vertex games: (vertex, colour); ordered vertex: (colour); greedy: (vertex);
    ordered greedy: empty; arboricity: (edge, colour); marking: (vertex).
    """

    vertex: int | None = None
    colour: int | None = None
    edge: tuple[int, int] | None = None

    def __post_init__(self):
        if self.edge is not None:
            u, v = self.edge
            if u > v:
                object.__setattr__(self, "edge", (v, u))

    def __str__(self) -> str:
        if self.edge is not None:
            return f"e{self.edge[0]}-{self.edge[1]}={self.colour}"
        if self.vertex is not None and self.colour is not None:
            return f"v{self.vertex}={self.colour}"
        if self.vertex is not None:
            return f"v{self.vertex}"
        if self.colour is not None:
            return f"c{self.colour}"
        return "pass"


class VertexPosition:
    """Partial proper colouring: ``colours[i]`` is vertex i+1's colour, 0 = none.

    ``blocked`` keeps, per vertex, the bitmask of colours present in its
    coloured neighbourhood (bit c-1 for colour c); ``colour_mask`` the set of
    colours used anywhere.
    """

    __slots__ = (
        "colours", "blocked", "played", "count", "colour_mask", "_status", "_key"
    )

    def __init__(
        self,
        colours: bytes,
        blocked: tuple[int, ...],
        played: int,
        count: int,
        colour_mask: int = 0,
    ):
        self.colours = colours
        self.blocked = blocked
        self.played = played
        self.count = count
        self.colour_mask = colour_mask
        self._status = None
        self._key = None

    def colour(self, v: int) -> int:
        return self.colours[v - 1]

    def coloured_vertices(self) -> dict[int, int]:
        return {i + 1: c for i, c in enumerate(self.colours) if c}


class EdgePosition:
    """Partial edge colouring for the arboricity game, plus colour components.

    ``blocked_counts[i]`` caches, for each still-uncoloured edge i, how many
    palette colours are blocked there (endpoints in one c-component); entries
    of coloured edges are stale and ignored. ``colour_mask`` is the set of
    colours in use.
    """

    __slots__ = (
        "edge_colours",
        "components",
        "count",
        "blocked_counts",
        "colour_mask",
        "_status",
        "_uncoloured",
        "_key",
    )

    def __init__(
        self,
        edge_colours: bytes,
        components: ColourComponents,
        count: int,
        blocked_counts: bytes,
        colour_mask: int = 0,
    ):
        self.edge_colours = edge_colours
        self.components = components
        self.count = count
        self.blocked_counts = blocked_counts
        self.colour_mask = colour_mask
        self._status = None
        self._uncoloured = None
        self._key = None

    def edge_colour(self, g: Graph, e: tuple[int, int]) -> int:
        u, v = e
        key = (u, v) if u < v else (v, u)
        return self.edge_colours[g.edge_index[key]]

    def coloured_edges(self, g: Graph) -> dict[tuple[int, int], int]:
        return {
            g.edges[i]: c for i, c in enumerate(self.edge_colours) if c
        }


class MarkPosition:
    """Marked-vertex set; ``lost`` latches once a mark exceeded the bound."""

    __slots__ = ("marked", "count", "lost", "_status", "_key")

    def __init__(self, marked: int, count: int, lost: bool):
        self.marked = marked
        self.count = count
        self.lost = lost
        self._status = None
        self._key = None

    def is_marked(self, v: int) -> bool:
        return bool(self.marked >> (v - 1) & 1)

    def marked_vertices(self) -> frozenset[int]:
        return frozenset(
            i + 1 for i in range(self.marked.bit_length()) if self.marked >> i & 1
        )


Position = VertexPosition | EdgePosition | MarkPosition


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


class _EngineBase:
    def __init__(self, spec: GameSpec, g: Graph):
        self.spec = spec
        self.g = g
        self.n = g.n
        self.k = spec.k
        if spec.variant.connectivity_restricted and not g.is_connected():
            raise RulesError(
                f"{spec.variant.value} requires a connected graph; this one has "
                f"{g.component_count()} components"
            )
        self.order0: tuple[int, ...] | None = None
        if spec.variant.ordered:
            assert spec.ordering is not None
            order = validate_ordering(g.n, spec.ordering)
            self.order0 = tuple(v - 1 for v in order)

    def to_move(self, pos: Position) -> Player:
        return Player.MAKER if pos.count % 2 == 0 else Player.BREAKER

    def status(self, pos: Position) -> Status:
        st = pos._status
        if st is None:
            st = self.assess(pos)[0]
        return st

    def assess(self, pos: Position) -> tuple[Status, Status | None]:
        """Return (status, quick winner). The quick winner, when not None, is
        the exact game value of an ongoing position settled by a counting
        argument; it never guesses."""
        raise NotImplementedError

    def initial(self) -> Position:
        raise NotImplementedError

    def legal_moves(self, pos: Position) -> list[Move]:
        raise NotImplementedError

    def children(self, pos: Position):
        """Yield (move, child) pairs in the legal-move order, skipping the
        per-move validation (each generated move is legal by construction)."""
        raise NotImplementedError

    def search_children(self, pos: Position):
        """Yield child positions only, for the solver's inner loop.

        Colour-symmetric variants try at most one unused colour per element:
        children reached through distinct fresh colours are identical up to a
        colour swap, so skipping the rest never changes any winner.
        """
        for _, child in self.children(pos):
            yield child

    def search_steps(self, pos: Position, table: dict):
        """Yield (cached winner, child) pairs: when the child's canonical key
        is already in the memo table its winner is returned without building
        the child at all."""
        for child in self.search_children(pos):
            yield None, child

    def _tryable_colours(self, colour_mask: int) -> "range | list[int]":
        full = (1 << self.k) - 1
        if colour_mask & full == full:
            return range(1, self.k + 1)
        unused = ~colour_mask
        fresh = (unused & -unused).bit_length()  # lowest unused colour
        out = list(range(1, min(fresh, self.k) + 1))
        for c in range(fresh + 1, self.k + 1):
            if colour_mask >> (c - 1) & 1:
                out.append(c)
        return out

    def apply(self, pos: Position, move: Move) -> Position:
        raise NotImplementedError

    def canonical_key(self, pos: Position):
        raise NotImplementedError

    def _require_ongoing(self, pos: Position):
        st = self.status(pos)
        if st is not Status.ONGOING:
            raise IllegalMoveError(f"the game is already over ({st.value} win)")


def _canonical_colours(values: bytes, k: int) -> bytes:
    """Rename colours in order of first occurrence under the element scan."""
    out = bytearray(len(values))
    rename = [0] * (k + 1)
    nxt = 0
    for i, c in enumerate(values):
        if c:
            r = rename[c]
            if r == 0:
                nxt += 1
                rename[c] = r = nxt
            out[i] = r
    return bytes(out)


class _VertexEngine(_EngineBase):
    """Vertex, ConnectedVertex, OrderedVertex, Greedy and OrderedGreedy rules."""

    def __init__(self, spec: GameSpec, g: Graph):
        super().__init__(spec, g)
        self.full = (1 << self.k) - 1
        self.all_mask = (1 << self.n) - 1
        v = spec.variant
        self.connected = v.connectivity_restricted
        self.greedy = v.greedy
        self.ordered = v.ordered
        self.free_colour_choice = v in (
            Variant.VERTEX,
            Variant.CONNECTED_VERTEX,
            Variant.ORDERED_VERTEX,
        )

    def initial(self) -> VertexPosition:
        return VertexPosition(bytes(self.n), (0,) * self.n, 0, 0)

    def assess(self, pos: VertexPosition) -> tuple[Status, Status | None]:
        if pos.count == self.n:
            pos._status = Status.MAKER_WIN
            return Status.MAKER_WIN, None
        full = self.full
        blocked = pos.blocked
        adj = self.g.adj
        unc = self.all_mask & ~pos.played
        k = self.k
        quick: Status | None = Status.MAKER_WIN
        mask = unc
        while mask:
            b = mask & -mask
            mask ^= b
            v = b.bit_length() - 1
            bl = blocked[v]
            if bl & full == full:
                pos._status = Status.BREAKER_WIN
                return Status.BREAKER_WIN, None
            if quick is not None:
                # v can never be blocked if it keeps more free colours than it
                # has uncoloured neighbours; if that holds everywhere the game
                # must run to completion, so Maker wins outright.
                if k - bl.bit_count() <= (adj[v] & unc).bit_count():
                    quick = None
        pos._status = Status.ONGOING
        return Status.ONGOING, quick

    def _candidates(self, pos: VertexPosition) -> int:
        unc = self.all_mask & ~pos.played
        if self.connected and pos.count > 0:
            nb = 0
            adj = self.g.adj
            for v in _iter_bits(pos.played):
                nb |= adj[v]
            unc &= nb
        return unc

    def legal_moves(self, pos: VertexPosition) -> list[Move]:
        if self.status(pos) is not Status.ONGOING:
            return []
        moves: list[Move] = []
        if self.spec.variant is Variant.ORDERED_GREEDY:
            moves.append(Move())
        elif self.ordered:
            v = self.order0[pos.count]
            free = self.full & ~pos.blocked[v]
            for c in _iter_bits(free):
                moves.append(Move(colour=c + 1))
        elif self.greedy:
            for v in _iter_bits(self.all_mask & ~pos.played):
                moves.append(Move(vertex=v + 1))
        else:
            full = self.full
            blocked = pos.blocked
            for v in _iter_bits(self._candidates(pos)):
                free = full & ~blocked[v]
                for c in _iter_bits(free):
                    moves.append(Move(vertex=v + 1, colour=c + 1))
        assert moves, "stalemate: ongoing position with no legal move"
        return moves

    def children(self, pos: VertexPosition):
        if self.spec.variant is Variant.ORDERED_GREEDY:
            v = self.order0[pos.count]
            yield Move(), self._child(pos, v, self._forced_colour(pos, v))
        elif self.ordered:
            v = self.order0[pos.count]
            free = self.full & ~pos.blocked[v]
            for c in _iter_bits(free):
                yield Move(colour=c + 1), self._child(pos, v, c + 1)
        elif self.greedy:
            for v in _iter_bits(self.all_mask & ~pos.played):
                yield Move(vertex=v + 1), self._child(pos, v, self._forced_colour(pos, v))
        else:
            full = self.full
            blocked = pos.blocked
            for v in _iter_bits(self._candidates(pos)):
                free = full & ~blocked[v]
                for c in _iter_bits(free):
                    yield Move(vertex=v + 1, colour=c + 1), self._child(pos, v, c + 1)

    def _forced_colour(self, pos: VertexPosition, v0: int) -> int:
        free = ~pos.blocked[v0]
        c = (free & -free).bit_length()
        assert c <= self.k, "forced colour exceeds the palette in an ongoing game"
        return c

    def _child(self, pos: VertexPosition, v0: int, c: int) -> VertexPosition:
        colours = bytearray(pos.colours)
        colours[v0] = c
        blocked = list(pos.blocked)
        bit = 1 << (c - 1)
        mask = self.g.adj[v0]
        while mask:
            b = mask & -mask
            mask ^= b
            blocked[b.bit_length() - 1] |= bit
        return VertexPosition(
            bytes(colours),
            tuple(blocked),
            pos.played | 1 << v0,
            pos.count + 1,
            pos.colour_mask | bit,
        )

    def search_children(self, pos: VertexPosition):
        if self.spec.variant is Variant.ORDERED_GREEDY:
            v = self.order0[pos.count]
            yield self._child(pos, v, self._forced_colour(pos, v))
        elif self.greedy:
            for v in _iter_bits(self.all_mask & ~pos.played):
                yield self._child(pos, v, self._forced_colour(pos, v))
        elif self.ordered:
            v = self.order0[pos.count]
            blocked = pos.blocked[v]
            for c in self._tryable_colours(pos.colour_mask):
                if not blocked >> (c - 1) & 1:
                    yield self._child(pos, v, c)
        else:
            blocked = pos.blocked
            tryable = self._tryable_colours(pos.colour_mask)
            for v in _iter_bits(self._candidates(pos)):
                bl = blocked[v]
                for c in tryable:
                    if not bl >> (c - 1) & 1:
                        yield self._child(pos, v, c)

    def apply(self, pos: VertexPosition, move: Move) -> VertexPosition:
        self._require_ongoing(pos)
        variant = self.spec.variant
        if move.edge is not None:
            raise IllegalMoveError(f"{variant.value} moves do not name an edge")

        if self.ordered:
            v0 = self.order0[pos.count]
            if move.vertex is not None and move.vertex != v0 + 1:
                raise IllegalMoveError(
                    f"vertex {move.vertex} is out of order; vertex {v0 + 1} is next"
                )
        else:
            if move.vertex is None:
                raise IllegalMoveError(f"{variant.value} moves must name a vertex")
            if not (1 <= move.vertex <= self.n):
                raise IllegalMoveError(f"vertex {move.vertex} out of range 1..{self.n}")
            v0 = move.vertex - 1
        if pos.colours[v0]:
            raise IllegalMoveError(f"vertex {v0 + 1} is already coloured")
        if self.connected and pos.count > 0 and not self.g.adj[v0] & pos.played:
            raise IllegalMoveError(
                f"vertex {v0 + 1} is not adjacent to the coloured set"
            )

        if self.greedy:
            if move.colour is not None:
                raise IllegalMoveError(
                    f"{variant.value} colours are forced; moves carry no colour"
                )
            c = self._forced_colour(pos, v0)
        else:
            if move.colour is None:
                raise IllegalMoveError(f"{variant.value} moves must name a colour")
            c = move.colour
            if not (1 <= c <= self.k):
                raise IllegalMoveError(f"colour {c} out of range 1..{self.k}")
            if pos.blocked[v0] >> (c - 1) & 1:
                raise IllegalMoveError(
                    f"colour {c} already appears on a neighbour of vertex {v0 + 1}"
                )
        return self._child(pos, v0, c)

    def canonical_key(self, pos: VertexPosition):
        if self.spec.variant.colour_symmetric:
            return _canonical_colours(pos.colours, self.k)
        return pos.colours


class _ArboricityEngine(_EngineBase):
    """Edge-colouring game: no colour class may contain a cycle."""

    def __init__(self, spec: GameSpec, g: Graph):
        super().__init__(spec, g)
        self.m = g.m
        self.edges0 = tuple((u - 1, v - 1) for u, v in g.edges)
        # With c components in G, a colour class holds at most n - c edges, so
        # completion is impossible (Breaker wins from anywhere) whenever
        # m > k * (n - c). The slack in that bound gates the per-position
        # capacity check: each move wastes at most k-1 units of capacity.
        self.margin = self.k * (g.n - g.component_count()) - self.m
        self.impossible = self.margin < 0

    def initial(self) -> EdgePosition:
        return EdgePosition(
            bytes(self.m), ColourComponents.empty(self.n, self.k), 0, bytes(self.m)
        )

    def _uncoloured_of(self, pos: EdgePosition) -> tuple[int, ...]:
        unc = pos._uncoloured
        if unc is None:
            edge_colours = pos.edge_colours
            unc = tuple(i for i in range(self.m) if not edge_colours[i])
            pos._uncoloured = unc
        return unc

    def assess(self, pos: EdgePosition) -> tuple[Status, Status | None]:
        if pos.count == self.m:
            pos._status = Status.MAKER_WIN
            return Status.MAKER_WIN, None
        k = self.k
        u = self.m - pos.count
        blocked_counts = pos.blocked_counts
        threshold = k - u  # each later play blocks at most one more colour
        maker_quick = not self.impossible
        critical: list[int] = []
        unc = self._uncoloured_of(pos)
        for i in unc:
            blocked = blocked_counts[i]
            if blocked == k:
                pos._status = Status.BREAKER_WIN
                return Status.BREAKER_WIN, None
            # an edge keeping at least u free colours can never die
            if blocked > threshold:
                maker_quick = False
                if blocked == k - 1:
                    critical.append(i)
        pos._status = Status.ONGOING
        if self.impossible:
            return Status.ONGOING, Status.BREAKER_WIN
        if maker_quick:
            return Status.ONGOING, Status.MAKER_WIN
        if (
            pos.count % 2 == 1
            and critical
            and u > 1
            and self._kill_available(pos, critical, unc)
        ):
            # Breaker, to move, can colour some edge so that a critical edge
            # loses its last colour: an immediate exact win
            return Status.ONGOING, Status.BREAKER_WIN
        if (
            (k - 1) * pos.count > self.margin
            and self._remaining_capacity(pos, unc) < u
        ):
            # no continuation can colour all remaining edges, and a game that
            # cannot complete must end with an unplayable edge
            return Status.ONGOING, Status.BREAKER_WIN
        return Status.ONGOING, None

    def _kill_available(
        self, pos: EdgePosition, critical: list[int], unc: tuple[int, ...]
    ) -> bool:
        """True iff some legal move completes the blocking of a critical edge."""
        reps = pos.components.reps
        edges0 = self.edges0
        for j in critical:
            p, q = edges0[j]
            for rep in reps:
                rp = rep[p]
                rq = rep[q]
                if rp != rq:
                    # the one remaining colour of edge j; any other uncoloured
                    # edge joining the same pair of components kills j
                    for i in unc:
                        if i == j:
                            continue
                        a, b = edges0[i]
                        ra = rep[a]
                        rb = rep[b]
                        if (ra == rp and rb == rq) or (ra == rq and rb == rp):
                            return True
                    break
        return False

    def _remaining_capacity(self, pos: EdgePosition, unc: tuple[int, ...]) -> int:
        """Upper bound on how many more edges can ever be coloured: per colour,
        the spanning-forest size of the c-components contracted along the
        still-usable uncoloured edges. Usable edge sets only shrink as play
        proceeds, so the bound is valid for every continuation."""
        edges0 = self.edges0
        base = list(range(self.n))
        total = 0
        for rep in pos.components.reps:
            parent = base.copy()
            for i in unc:
                p, q = edges0[i]
                a = rep[p]
                b = rep[q]
                if a == b:
                    continue
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    total += 1
        return total

    def legal_moves(self, pos: EdgePosition) -> list[Move]:
        if self.status(pos) is not Status.ONGOING:
            return []
        moves: list[Move] = []
        reps = pos.components.reps
        edge_colours = pos.edge_colours
        for i, (x, y) in enumerate(self.edges0):
            if edge_colours[i]:
                continue
            e = self.g.edges[i]
            for c in range(1, self.k + 1):
                if reps[c - 1][x] != reps[c - 1][y]:
                    moves.append(Move(edge=e, colour=c))
        assert moves, "stalemate: ongoing position with no legal move"
        return moves

    def children(self, pos: EdgePosition):
        reps = pos.components.reps
        edge_colours = pos.edge_colours
        for i, (x, y) in enumerate(self.edges0):
            if edge_colours[i]:
                continue
            e = self.g.edges[i]
            for c in range(1, self.k + 1):
                if reps[c - 1][x] != reps[c - 1][y]:
                    yield Move(edge=e, colour=c), self._child(pos, i, x, y, c)

    def search_children(self, pos: EdgePosition):
        reps = pos.components.reps
        edges0 = self.edges0
        tryable = self._tryable_colours(pos.colour_mask)
        for i in self._uncoloured_of(pos):
            x, y = edges0[i]
            for c in tryable:
                if reps[c - 1][x] != reps[c - 1][y]:
                    yield self._child(pos, i, x, y, c)

    def search_steps(self, pos: EdgePosition, table: dict):
        reps = pos.components.reps
        edges0 = self.edges0
        edge_colours = pos.edge_colours
        k = self.k
        tryable = self._tryable_colours(pos.colour_mask)
        for i in self._uncoloured_of(pos):
            x, y = edges0[i]
            for c in tryable:
                if reps[c - 1][x] == reps[c - 1][y]:
                    continue
                patched = bytearray(edge_colours)
                patched[i] = c
                key = _canonical_colours(patched, k)
                cached = table.get(key)
                if cached is not None:
                    yield cached, None
                    continue
                child = self._child(pos, i, x, y, c)
                child._key = key
                yield None, child

    def _child(self, pos: EdgePosition, i: int, x: int, y: int, c: int) -> EdgePosition:
        colours = bytearray(pos.edge_colours)
        colours[i] = c
        rep = pos.components.reps[c - 1]
        ra = rep[x]
        rb = rep[y]
        blocked = bytearray(pos.blocked_counts)
        edges0 = self.edges0
        child_unc = []
        for j in self._uncoloured_of(pos):
            if j == i:
                continue
            child_unc.append(j)
            p, q = edges0[j]
            rp = rep[p]
            rq = rep[q]
            if (rp == ra and rq == rb) or (rp == rb and rq == ra):
                blocked[j] += 1
        child = EdgePosition(
            bytes(colours),
            pos.components.merged(c, x + 1, y + 1),
            pos.count + 1,
            bytes(blocked),
            pos.colour_mask | 1 << (c - 1),
        )
        child._uncoloured = tuple(child_unc)
        return child

    def apply(self, pos: EdgePosition, move: Move) -> EdgePosition:
        self._require_ongoing(pos)
        if move.edge is None or move.colour is None:
            raise IllegalMoveError("arboricity moves name an edge and a colour")
        if move.vertex is not None:
            raise IllegalMoveError("arboricity moves do not name a vertex")
        i = self.g.edge_index.get(move.edge)
        if i is None:
            raise IllegalMoveError(
                f"edge ({move.edge[0]},{move.edge[1]}) is not in the graph"
            )
        if pos.edge_colours[i]:
            raise IllegalMoveError(
                f"edge ({move.edge[0]},{move.edge[1]}) is already coloured"
            )
        c = move.colour
        if not (1 <= c <= self.k):
            raise IllegalMoveError(f"colour {c} out of range 1..{self.k}")
        x, y = self.edges0[i]
        if pos.components.reps[c - 1][x] == pos.components.reps[c - 1][y]:
            raise IllegalMoveError(
                f"colour {c} on edge ({move.edge[0]},{move.edge[1]}) would close "
                f"a monochromatic cycle"
            )
        return self._child(pos, i, x, y, c)

    def canonical_key(self, pos: EdgePosition):
        return _canonical_colours(pos.edge_colours, self.k)

    def free_colours(self, pos: EdgePosition, edge: tuple[int, int]) -> list[int]:
        """Colours legally playable on ``edge`` (ignoring whose turn it is)."""
        u, v = edge
        key = (u, v) if u < v else (v, u)
        i = self.g.edge_index[key]
        if pos.edge_colours[i]:
            return []
        x, y = self.edges0[i]
        reps = pos.components.reps
        return [c for c in range(1, self.k + 1) if reps[c - 1][x] != reps[c - 1][y]]


class _MarkingEngine(_EngineBase):
    """Marking games: Maker wins iff every vertex is marked with at most s
    already-marked neighbours; a violating mark latches a Breaker win."""

    def __init__(self, spec: GameSpec, g: Graph):
        super().__init__(spec, g)
        self.s = spec.k
        self.all_mask = (1 << self.n) - 1
        self.connected = spec.variant.connectivity_restricted

    def initial(self) -> MarkPosition:
        return MarkPosition(0, 0, False)

    def assess(self, pos: MarkPosition) -> tuple[Status, Status | None]:
        if pos.lost:
            pos._status = Status.BREAKER_WIN
            return Status.BREAKER_WIN, None
        if pos.count == self.n:
            pos._status = Status.MAKER_WIN
            return Status.MAKER_WIN, None
        pos._status = Status.ONGOING
        # a vertex whose whole degree fits the bound can never violate it
        adj = self.g.adj
        s = self.s
        for v in _iter_bits(self.all_mask & ~pos.marked):
            if adj[v].bit_count() > s:
                return Status.ONGOING, None
        return Status.ONGOING, Status.MAKER_WIN

    def _candidates(self, pos: MarkPosition) -> int:
        unmarked = self.all_mask & ~pos.marked
        if self.connected and pos.count > 0:
            nb = 0
            adj = self.g.adj
            for v in _iter_bits(pos.marked):
                nb |= adj[v]
            unmarked &= nb
        return unmarked

    def legal_moves(self, pos: MarkPosition) -> list[Move]:
        if self.status(pos) is not Status.ONGOING:
            return []
        moves = [Move(vertex=v + 1) for v in _iter_bits(self._candidates(pos))]
        assert moves, "stalemate: ongoing position with no legal move"
        return moves

    def children(self, pos: MarkPosition):
        for v in _iter_bits(self._candidates(pos)):
            yield Move(vertex=v + 1), self._child(pos, v)

    def _child(self, pos: MarkPosition, v0: int) -> MarkPosition:
        lost = pos.lost or (self.g.adj[v0] & pos.marked).bit_count() > self.s
        return MarkPosition(pos.marked | 1 << v0, pos.count + 1, lost)

    def apply(self, pos: MarkPosition, move: Move) -> MarkPosition:
        self._require_ongoing(pos)
        if move.vertex is None or move.colour is not None or move.edge is not None:
            raise IllegalMoveError("marking moves name a vertex only")
        if not (1 <= move.vertex <= self.n):
            raise IllegalMoveError(f"vertex {move.vertex} out of range 1..{self.n}")
        v0 = move.vertex - 1
        if pos.marked >> v0 & 1:
            raise IllegalMoveError(f"vertex {move.vertex} is already marked")
        if self.connected and pos.count > 0 and not self.g.adj[v0] & pos.marked:
            raise IllegalMoveError(
                f"vertex {move.vertex} is not adjacent to the marked set"
            )
        return self._child(pos, v0)

    def canonical_key(self, pos: MarkPosition):
        return pos.marked << 1 | pos.lost


@lru_cache(maxsize=512)
def engine(spec: GameSpec, g: Graph) -> _EngineBase:
    if spec.variant is Variant.ARBORICITY:
        return _ArboricityEngine(spec, g)
    if spec.variant.marking:
        return _MarkingEngine(spec, g)
    return _VertexEngine(spec, g)


# Public operations; each delegates to the cached per-(spec, graph) engine.

def initial_position(spec: GameSpec, g: Graph) -> Position:
    return engine(spec, g).initial()


def legal_moves(spec: GameSpec, g: Graph, pos: Position) -> list[Move]:
    return engine(spec, g).legal_moves(pos)


def apply(spec: GameSpec, g: Graph, pos: Position, move: Move) -> Position:
    return engine(spec, g).apply(pos, move)


def status(spec: GameSpec, g: Graph, pos: Position) -> Status:
    return engine(spec, g).status(pos)


def canonical_key(spec: GameSpec, g: Graph, pos: Position):
    return engine(spec, g).canonical_key(pos)


def to_move(pos: Position) -> Player:
    return Player.MAKER if pos.count % 2 == 0 else Player.BREAKER
