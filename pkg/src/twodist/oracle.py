"""Exact 2-distance chromatic number for small graphs.

chi2 of a graph equals the chromatic number of its square, computed here by
saturation-ordered branch and bound between a greedy clique lower bound and
a greedy coloring upper bound, refined by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colorer import Coloring
from .planar import PlanarGraph, square

Adjacency = dict[int, set[int]]

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass
class OracleResult:
    chi2: int
    witness: Coloring
    nodes_explored: int
    exact: bool


class _Budget:
    __slots__ = ("left", "used")

    def __init__(self, limit: int):
        self.left = limit
        self.used = 0

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        self.used += 1
        return True


def _square_of(g: PlanarGraph | Adjacency) -> Adjacency:
    if isinstance(g, PlanarGraph):
        return square(g)
    sq: Adjacency = {}
    for v in g:
        reach = set(g[v])
        for u in g[v]:
            reach.update(g[u])
        reach.discard(v)
        sq[v] = reach
    return sq


def greedy_clique(adj: Adjacency) -> list[int]:
    """Largest clique found by seeded greedy growth; a valid lower bound."""
    best: list[int] = []
    order = sorted(adj, key=lambda v: (-len(adj[v]), v))
    for seed in order:
        if len(adj[seed]) + 1 <= len(best):
            continue
        clique = [seed]
        for v in sorted(adj[seed], key=lambda v: (-len(adj[v]), v)):
            if all(v in adj[c] for c in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_colors(adj: Adjacency) -> dict[int, int]:
    """Saturation-greedy coloring of an adjacency structure."""
    colors: dict[int, int] = {}
    neighbor_colors: dict[int, set[int]] = {v: set() for v in adj}
    uncolored = set(adj)
    while uncolored:
        v = min(
            uncolored,
            key=lambda u: (-len(neighbor_colors[u]), -len(adj[u]), u),
        )
        used = neighbor_colors[v]
        c = 1
        while c in used:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in adj[v]:
            neighbor_colors[u].add(c)
    return colors


def greedy_square(g: PlanarGraph | Adjacency) -> Coloring:
    """Valid 2-distance coloring by greedy on the square; never more colors
    than max d2(v) + 1."""
    sq = _square_of(g)
    if not sq:
        return Coloring({}, budget=0)
    colors = _greedy_colors(sq)
    budget = max(len(n2) for n2 in sq.values()) + 1
    return Coloring(colors, budget=max(budget, max(colors.values())))


def _feasible(
    adj: Adjacency, k: int, budget: _Budget
) -> tuple[str, dict[int, int] | None]:
    """Search for a proper k-coloring of adj.

    Returns ("found", coloring), ("infeasible", None) or ("abort", None).
    Branches on the most saturated vertex, ties toward higher degree then
    smaller id; only colors up to one past the current maximum are tried.
    """
    colors: dict[int, int] = {}
    neighbor_colors: dict[int, set[int]] = {v: set() for v in adj}

    def choose() -> int:
        return min(
            (v for v in adj if v not in colors),
            key=lambda u: (-len(neighbor_colors[u]), -len(adj[u]), u),
        )

    max_used = 0

    def walk() -> str:
        nonlocal max_used
        if len(colors) == len(adj):
            return "found"
        v = choose()
        forbidden = neighbor_colors[v]
        if len(forbidden) >= k:
            return "infeasible"
        limit = min(k, max_used + 1)
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            if not budget.spend():
                return "abort"
            colors[v] = c
            bumped = [u for u in adj[v] if c not in neighbor_colors[u]]
            for u in bumped:
                neighbor_colors[u].add(c)
            prev_max = max_used
            max_used = max(max_used, c)
            verdict = walk()
            if verdict != "infeasible":
                return verdict
            del colors[v]
            for u in bumped:
                neighbor_colors[u].discard(c)
            max_used = prev_max
        return "infeasible"

    verdict = walk()
    return (verdict, dict(colors) if verdict == "found" else None)


def chi2_exact(
    g: PlanarGraph | Adjacency, node_budget: int = DEFAULT_NODE_BUDGET
) -> OracleResult:
    """chi2(g) by branch and bound on the square graph.

    When the node budget runs out the result carries exact=False and the
    best coloring found so far.
    """
    sq = _square_of(g)
    n = len(sq)
    if n == 0:
        return OracleResult(0, Coloring({}, budget=0), 0, True)

    budget = _Budget(node_budget)
    lower = len(greedy_clique(sq))
    best = _greedy_colors(sq)
    upper = max(best.values())

    lo, hi = lower, upper
    exact = True
    while lo < hi:
        mid = (lo + hi) // 2
        verdict, witness = _feasible(sq, mid, budget)
        if verdict == "found":
            assert witness is not None
            best = witness
            hi = max(witness.values())
        elif verdict == "infeasible":
            lo = mid + 1
        else:
            exact = False
            break

    chi2 = max(best.values())
    return OracleResult(
        chi2=chi2,
        witness=Coloring(best, budget=chi2),
        nodes_explored=budget.used,
        exact=exact and lo >= hi,
    )
