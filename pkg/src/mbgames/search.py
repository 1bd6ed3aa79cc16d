"""Small-graph enumeration and predicate scans.

Enumeration grows graphs one vertex at a time and deduplicates with a
brute-force canonical form: the lexicographically minimal upper-triangle
adjacency encoding over all vertex orders (restricted to degree-sorted
orders, which is isomorphism-invariant). Scans evaluate a predicate on each
streamed graph, optionally on a worker pool, with order-normalized output.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graphs import Graph, parse_graph6, to_graph6
from .parameters import (
    PARAMETER_VARIANTS,
    parameter_report,
    win_profile,
)
from .rules import Variant
from .solver import BudgetExceededError, ResourceLimitError

ENUM_MAX_N = 8

# Published counts of non-isomorphic simple graphs, used as a cross-check by
# the test suite: all graphs and connected graphs on 1..8 vertices.
KNOWN_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)
KNOWN_CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Minimal upper-triangle encoding over all degree-sorted vertex orders.

    Column j's int packs the bits x(p(0),p(j)) .. x(p(j-1),p(j)), most
    significant first, so tuple comparison equals bitstring comparison.
    """
    n = g.n
    adj = g.adj
    degs = [a.bit_count() for a in adj]
    target = sorted(degs)
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        by_degree.setdefault(d, []).append(v)

    best: list[int] | None = None
    cols: list[int] = []
    perm: list[int] = []

    def rec(j: int, used: int):
        nonlocal best
        if best is not None and cols > best[:j]:
            return
        if j == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        for v in by_degree.get(target[j], ()):
            if used >> v & 1:
                continue
            col = 0
            av = adj[v]
            for i in range(j):
                col = col << 1 | (av >> perm[i] & 1)
            cols.append(col)
            perm.append(v)
            rec(j + 1, used | 1 << v)
            cols.pop()
            perm.pop()

    rec(0, 0)
    assert best is not None
    return tuple(best[1:])  # the first column is empty and carries no bits


def graph_from_canonical(n: int, cols: tuple[int, ...]) -> Graph:
    edges = []
    for j in range(1, n):
        col = cols[j - 1]
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                edges.append((i + 1, j + 1))
    return Graph(n, edges)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All non-isomorphic graphs on n vertices, canonically labelled, in
    ascending canonical order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > ENUM_MAX_N:
        raise ValueError(
            f"built-in enumeration stops at n={ENUM_MAX_N}; feed a graph6 "
            f"stream for larger sizes"
        )
    keys: list[tuple[int, ...]] = [()]
    for size in range(2, n + 1):
        seen: set[tuple[int, ...]] = set()
        for key in keys:
            base = graph_from_canonical(size - 1, key)
            base_edges = base.edges
            for mask in range(1 << (size - 1)):
                edges = list(base_edges)
                for i in range(size - 1):
                    if mask >> i & 1:
                        edges.append((i + 1, size))
                seen.add(canonical_form(Graph(size, edges)))
        keys = sorted(seen)
    for key in keys:
        g = graph_from_canonical(n, key)
        if connected_only and not g.is_connected():
            continue
        yield g


# ---------------------------------------------------------------------------
# Predicates. Each evaluates exactly (delegating to the parameters module)
# and returns a Hit carrying enough witness data to be re-checked.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hit:
    graph6: str
    predicate: str
    witness: dict
    profiles: dict

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "predicate": self.predicate,
            "witness": self.witness,
            "profiles": self.profiles,
        }

    def line(self) -> str:
        fields = " ".join(f"{k}={v}" for k, v in sorted(self.witness.items()))
        return f"{self.graph6}\t{self.predicate}\t{fields}"


def _col_cg(g: Graph, s_top: int, deadline: float | None) -> tuple[int | None, dict]:
    profile = win_profile(
        g, Variant.CONNECTED_MARKING, (0, s_top), deadline=deadline
    )
    least = profile.min_maker_win()
    return (None if least is None else least + 1), profile.as_dict()


@dataclass(frozen=True)
class ChiGLessThanChiCg:
    """chi_g(G) < chi_cg(G) over palettes 1..k_max (default Delta+1)."""

    k_max: int | None = None
    name = "chi_g_lt_chi_cg"

    def evaluate(self, g: Graph, deadline: float | None = None) -> Hit | None:
        if g.n == 0 or not g.is_connected():
            return None
        top = self.k_max if self.k_max is not None else g.max_degree() + 1
        p_plain = win_profile(g, Variant.VERTEX, (1, top), deadline=deadline)
        p_conn = win_profile(g, Variant.CONNECTED_VERTEX, (1, top), deadline=deadline)
        chi_g = p_plain.min_maker_win()
        chi_cg = p_conn.min_maker_win()
        if chi_g is None or chi_cg is None or not chi_g < chi_cg:
            return None
        return Hit(
            to_graph6(g),
            self.name,
            {"chi_g": chi_g, "chi_cg": chi_cg},
            {"vertex": p_plain.as_dict(), "cvertex": p_conn.as_dict()},
        )


@dataclass(frozen=True)
class ColCgEdgeNonMonotone:
    """Some edge e keeps G-e connected yet col_cg(G-e) > col_cg(G)."""

    name = "col_cg_edge_nonmonotone"

    def evaluate(self, g: Graph, deadline: float | None = None) -> Hit | None:
        if g.n == 0 or not g.is_connected():
            return None
        s_top = max(g.n - 1, 0)
        base, base_profile = _col_cg(g, s_top, deadline)
        if base is None:
            return None
        witnesses = []
        profiles = {"col_cg": base_profile}
        for e in g.edges:
            reduced = g.delete_edge(e)
            if not reduced.is_connected():
                continue
            value, profile = _col_cg(reduced, s_top, deadline)
            if value is not None and value > base:
                witnesses.append({"edge": list(e), "col_cg_minus_e": value})
                profiles[f"col_cg_minus_{e[0]}_{e[1]}"] = profile
        if not witnesses:
            return None
        return Hit(
            to_graph6(g),
            self.name,
            {"col_cg": base, "edges": witnesses},
            profiles,
        )


@dataclass(frozen=True)
class NonMonotoneProfile:
    """The variant's win profile has a Maker win followed by a Breaker win."""

    variant: Variant
    k_lo: int | None = None
    k_hi: int | None = None

    @property
    def name(self) -> str:
        return f"nonmonotone_profile:{self.variant.value}"

    def _range(self, g: Graph) -> tuple[int, int]:
        if self.k_lo is not None and self.k_hi is not None:
            return self.k_lo, self.k_hi
        if self.variant is Variant.ARBORICITY:
            return 1, max(g.m, 1)
        if self.variant.marking:
            return 0, max(g.n, 1)
        return 1, g.max_degree() + 1

    def evaluate(self, g: Graph, deadline: float | None = None) -> Hit | None:
        if self.variant.connectivity_restricted and not g.is_connected():
            return None
        profile = win_profile(g, self.variant, self._range(g), deadline=deadline)
        violations = profile.monotonicity_violations()
        if not violations:
            return None
        return Hit(
            to_graph6(g),
            self.name,
            {"violations": violations},
            {self.variant.value: profile.as_dict()},
        )


@dataclass(frozen=True)
class ParameterEquals:
    """A named parameter from the report equals the given value."""

    parameter: str
    value: int
    k_max: int | None = None

    @property
    def name(self) -> str:
        return f"param:{self.parameter}={self.value}"

    def evaluate(self, g: Graph, deadline: float | None = None) -> Hit | None:
        if self.parameter not in PARAMETER_VARIANTS:
            raise ValueError(
                f"unknown parameter {self.parameter!r}; choose from "
                f"{sorted(PARAMETER_VARIANTS)}"
            )
        report = parameter_report(g, self.k_max, deadline=deadline)
        pv = report[self.parameter]
        if not pv.applicable or pv.value != self.value:
            return None
        return Hit(
            to_graph6(g),
            self.name,
            {self.parameter: pv.value},
            {self.parameter: pv.profile.as_dict() if pv.profile else None},
        )


Predicate = ChiGLessThanChiCg | ColCgEdgeNonMonotone | NonMonotoneProfile | ParameterEquals


def parse_predicate(text: str) -> Predicate:
    """CLI predicate syntax; see each predicate's class for semantics.

    chi_g_lt_chi_cg[:KMAX] | col_cg_edge_nonmonotone |
    nonmonotone_profile:VARIANT[:KLO-KHI] | param:NAME=VALUE
    """
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head == "chi_g_lt_chi_cg":
        return ChiGLessThanChiCg(int(rest)) if rest else ChiGLessThanChiCg()
    if head == "col_cg_edge_nonmonotone":
        return ColCgEdgeNonMonotone()
    if head == "nonmonotone_profile":
        variant_name, _, krange = rest.partition(":")
        try:
            variant = Variant(variant_name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown variant {variant_name!r}") from None
        if krange:
            lo, _, hi = krange.partition("-")
            return NonMonotoneProfile(variant, int(lo), int(hi))
        return NonMonotoneProfile(variant)
    if head == "param":
        name, _, value = rest.partition("=")
        if not value:
            raise ValueError('param predicate needs "param:NAME=VALUE"')
        return ParameterEquals(name.strip(), int(value))
    raise ValueError(f"unknown predicate {text!r}")


# ---------------------------------------------------------------------------
# Scan driver.
# ---------------------------------------------------------------------------

@dataclass
class Skip:
    index: int
    graph6: str
    reason: str


@dataclass
class ScanReport:
    predicate: str
    scanned: int = 0
    hits: list[Hit] = field(default_factory=list)
    skipped: list[Skip] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "scanned": self.scanned,
            "hits": [h.as_dict() for h in self.hits],
            "skipped": [
                {"index": s.index, "graph6": s.graph6, "reason": s.reason}
                for s in self.skipped
            ],
        }


def _evaluate_one(
    index: int, g6: str, predicate: Predicate, budget_ms: int | None
):
    g = parse_graph6(g6)
    deadline = None
    if budget_ms is not None:
        deadline = time.perf_counter() + budget_ms / 1000.0
    try:
        hit = predicate.evaluate(g, deadline=deadline)
        return index, hit, None
    except (BudgetExceededError, ResourceLimitError) as exc:
        return index, None, str(exc)


def _worker(args):
    return _evaluate_one(*args)


def scan(
    graphs: Iterable[Graph],
    predicate: Predicate,
    *,
    jobs: int = 1,
    budget_ms: int | None = None,
) -> ScanReport:
    """Evaluate the predicate on every streamed graph.

    Results are collected in stream order regardless of worker count; a graph
    whose evaluation blows its per-graph budget is recorded as skipped, never
    fatal.
    """
    report = ScanReport(predicate=predicate.name)
    items = [(i, to_graph6(g), predicate, budget_ms) for i, g in enumerate(graphs)]
    report.scanned = len(items)
    if jobs <= 1:
        results = map(_worker, items)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        try:
            results = list(pool.map(_worker, items, chunksize=4))
        finally:
            pool.shutdown()
    ordered = sorted(results, key=lambda r: r[0])
    for index, hit, error in ordered:
        if error is not None:
            report.skipped.append(Skip(index, items[index][1], error))
        elif hit is not None:
            report.hits.append(hit)
    return report
