"""Win/loss profiles over palette sizes and the named game parameters.

Profiles never assume monotonicity: every k in range is solved. A parameter
is the least k whose outcome is a Maker win, reported together with its full
profile so that losses above the minimum stay visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, identity_ordering
from .rules import GameSpec, RulesError, Status, Variant
from .solver import solve


@dataclass(frozen=True)
class WinProfile:
    variant: Variant
    k_lo: int
    k_hi: int
    outcomes: tuple[Status, ...]
    ordering: tuple[int, ...] | None = None

    def outcome(self, k: int) -> Status:
        if not self.k_lo <= k <= self.k_hi:
            raise ValueError(f"k={k} outside profile range [{self.k_lo},{self.k_hi}]")
        return self.outcomes[k - self.k_lo]

    def items(self):
        return [
            (self.k_lo + i, outcome) for i, outcome in enumerate(self.outcomes)
        ]

    def min_maker_win(self) -> int | None:
        for k, outcome in self.items():
            if outcome is Status.MAKER_WIN:
                return k
        return None

    def monotonicity_violations(self) -> list[int]:
        """All k with a Maker win at k and a Breaker win at k+1."""
        return [
            self.k_lo + i
            for i in range(len(self.outcomes) - 1)
            if self.outcomes[i] is Status.MAKER_WIN
            and self.outcomes[i + 1] is Status.BREAKER_WIN
        ]

    @property
    def upward_closed(self) -> bool:
        return not self.monotonicity_violations()

    def as_dict(self) -> dict[int, str]:
        return {k: outcome.value for k, outcome in self.items()}


def win_profile(
    g: Graph,
    variant: Variant,
    k_range: tuple[int, int],
    ordering: tuple[int, ...] | None = None,
    *,
    deadline: float | None = None,
) -> WinProfile:
    """Solve every k in the inclusive range; no outcome is inferred."""
    k_lo, k_hi = k_range
    if k_lo > k_hi:
        raise ValueError(f"empty k range [{k_lo},{k_hi}]")
    if variant.ordered and ordering is None:
        ordering = identity_ordering(g.n)
    outcomes = []
    for k in range(k_lo, k_hi + 1):
        spec = GameSpec(variant, k, ordering if variant.ordered else None)
        outcomes.append(solve(spec, g, deadline=deadline).winner)
    return WinProfile(variant, k_lo, k_hi, tuple(outcomes), ordering)


def monotonicity_violations(
    g: Graph,
    variant: Variant,
    k_range: tuple[int, int],
    ordering: tuple[int, ...] | None = None,
    *,
    deadline: float | None = None,
) -> list[int]:
    return win_profile(
        g, variant, k_range, ordering, deadline=deadline
    ).monotonicity_violations()


@dataclass(frozen=True)
class ParameterValue:
    name: str
    value: int | None
    applicable: bool
    profile: WinProfile | None = field(repr=False, default=None)
    note: str = ""

    @property
    def determined(self) -> bool:
        return self.value is not None


# parameter name -> (variant, marking flag). Marking parameters equal
# 1 + the least winning back-degree bound.
PARAMETER_VARIANTS: dict[str, Variant] = {
    "chi_g": Variant.VERTEX,
    "chi_cg": Variant.CONNECTED_VERTEX,
    "gamma_g": Variant.GREEDY,
    "arboricity_game_number": Variant.ARBORICITY,
    "col_g": Variant.MARKING,
    "col_cg": Variant.CONNECTED_MARKING,
}


@dataclass(frozen=True)
class ParameterReport:
    n: int
    m: int
    values: dict[str, ParameterValue]

    def __getitem__(self, name: str) -> ParameterValue:
        return self.values[name]

    def as_dict(self) -> dict:
        out: dict = {"n": self.n, "m": self.m, "parameters": {}}
        for name, pv in self.values.items():
            out["parameters"][name] = {
                "value": pv.value,
                "applicable": pv.applicable,
                "determined": pv.determined,
                "note": pv.note,
                "profile": pv.profile.as_dict() if pv.profile else None,
            }
        return out


def _default_k_max(g: Graph, variant: Variant) -> int:
    # sound upper termini from the trivial-win bounds: Delta+1 for vertex
    # palettes, m for arboricity, n for marking bounds
    if variant is Variant.ARBORICITY:
        return max(g.m, 1)
    if variant.marking:
        return max(g.n, 1)
    return g.max_degree() + 1


def parameter_report(
    g: Graph,
    k_max: int | None = None,
    *,
    deadline: float | None = None,
) -> ParameterReport:
    """Derive every named parameter from a fresh profile over [1, k_max]
    (marking bounds run over [0, k_max - 1] so col = 1 + s stays in range)."""
    if k_max is not None and k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    values: dict[str, ParameterValue] = {}
    for name, variant in PARAMETER_VARIANTS.items():
        if variant.connectivity_restricted and not g.is_connected():
            values[name] = ParameterValue(
                name, None, applicable=False, note="graph is disconnected"
            )
            continue
        top = k_max if k_max is not None else _default_k_max(g, variant)
        if variant.marking:
            profile = win_profile(g, variant, (0, top - 1), deadline=deadline)
            least = profile.min_maker_win()
            value = None if least is None else least + 1
        else:
            profile = win_profile(g, variant, (1, top), deadline=deadline)
            value = profile.min_maker_win()
        note = "" if value is not None else f"no Maker win found up to {top}"
        values[name] = ParameterValue(name, value, applicable=True, profile=profile, note=note)
    return ParameterReport(g.n, g.m, values)
