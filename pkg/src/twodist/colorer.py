"""Recursive 2-distance coloring engine.

Shrink the graph with the first catalog reduction, color the smaller graph
with the same palette, pull the coloring back and give every pending vertex
the smallest safe color.  Cut vertices split the graph in two; the halves
are colored independently and reconciled by a color permutation.  Tiny
graphs are colored directly by the exact oracle.

The palette stays fixed at 3*Delta + 2 throughout the recursion (properness
keeps the maximum degree from growing, so the budget never needs to).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable

from .errors import (
    BudgetExhausted,
    DegreeBudgetExceeded,
    NoSafeColor,
    PermutationInfeasible,
)
from .planar import Face, PlanarGraph, distance_profile, split_at, square, trace_faces
from .reductions import (
    ProofGapReport,
    Reduction,
    apply_reduction,
    find_reduction,
)

BASE_N = 10  # below this the oracle colors directly
BASE_ORACLE_BUDGET = 300_000


@dataclass
class Coloring:
    """Partial or total assignment vertex -> color in 1..budget."""

    assignment: dict[int, int]
    budget: int

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def copy(self) -> "Coloring":
        return Coloring(dict(self.assignment), self.budget)


@dataclass
class ColorReport:
    valid: bool
    violations: list[tuple[int, int, int, int]]  # (u, v, dist, shared color)
    colors_used: int
    budget: int


@dataclass
class RunTrace:
    """Optional instrumentation for one color() run."""

    steps: list[tuple[str, int, int, int]] = field(default_factory=list)
    extensions: list[tuple[int, str, int, int | None]] = field(default_factory=list)
    gaps: list[ProofGapReport] = field(default_factory=list)
    graph_hook: Callable[[PlanarGraph, tuple[Face, ...], object], None] | None = None

    def lemma_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for lemma, *_ in self.steps:
            counts[lemma] = counts.get(lemma, 0) + 1
        return counts


def verify_coloring(g: PlanarGraph, c: Coloring) -> ColorReport:
    """Exhaustive distance-2 check, independent of how c was produced."""
    violations: list[tuple[int, int, int, int]] = []
    for v in sorted(c.assignment):
        col = c.assignment[v]
        if not (1 <= col <= c.budget):
            violations.append((v, v, 0, col))
    sq = square(g)
    for u in sorted(sq):
        cu = c.assignment.get(u)
        if cu is None:
            continue
        for w in sorted(sq[u]):
            if w <= u:
                continue
            if c.assignment.get(w) == cu:
                dist = 1 if g.has_edge(u, w) else 2
                violations.append((u, w, dist, cu))
    return ColorReport(
        valid=not violations,
        violations=violations,
        colors_used=c.colors_used,
        budget=c.budget,
    )


def extend(
    partial: Coloring,
    g: PlanarGraph,
    pending: tuple[int, ...],
    reduction: Reduction | None = None,
    trace: RunTrace | None = None,
) -> Coloring:
    """Color each pending vertex with the smallest color unused within
    distance 2, in order; later pending vertices see the earlier choices."""
    assignment = dict(partial.assignment)
    k = partial.budget
    for v in pending:
        forbidden = {
            assignment[u]
            for u in distance_profile(g, v).n2
            if u in assignment
        }
        if trace is not None:
            bound = reduction.d2_bound if reduction is not None else None
            lemma = reduction.lemma if reduction is not None else "-"
            trace.extensions.append((v, lemma, len(forbidden), bound))
        if len(forbidden) >= k:
            detail = (
                f" (rule {reduction.lemma}, claimed bound {reduction.d2_bound})"
                if reduction is not None
                else ""
            )
            raise NoSafeColor(
                f"all {k} colors forbidden at vertex {v}{detail}"
            )
        c = 1
        while c in forbidden:
            c += 1
        assignment[v] = c
    return Coloring(assignment, k)


def merge_at_cut(
    c1: Coloring, c2: Coloring, v: int, g: PlanarGraph
) -> Coloring:
    """Combine colorings of the two sides of a cut vertex.

    A global color permutation is applied to the second side so that v keeps
    its first-side color and the second side's neighbor colors land on
    colors unused around v on the first side.  Every cross-side pair within
    distance 2 runs through v, so that is enough.
    """
    k = c1.budget
    base = c1.assignment[v]
    nbr1_colors = {
        c1.assignment[u] for u in g.adj(v) if u in c1.assignment
    }
    nbr2_colors = sorted(
        {c2.assignment[u] for u in g.adj(v) if u in c2.assignment}
        - {c2.assignment[v]}
    )
    blocked = nbr1_colors | {base}
    perm: dict[int, int] = {c2.assignment[v]: base}
    taken = {base}
    free = [c for c in range(1, k + 1) if c not in blocked]
    it = iter(free)
    for src in nbr2_colors:
        if src in perm:
            continue
        dst = next((t for t in it if t not in taken), None)
        if dst is None:
            raise PermutationInfeasible(
                f"palette of {k} too small to merge at vertex {v}"
            )
        perm[src] = dst
        taken.add(dst)

    # complete to a bijection on 1..k, keeping untouched colors fixed
    remaining_targets = [c for c in range(1, k + 1) if c not in taken]
    rt = set(remaining_targets)
    unmapped = [c for c in range(1, k + 1) if c not in perm]
    for c in unmapped:
        if c in rt:
            perm[c] = c
            rt.remove(c)
    spare = sorted(rt)
    for c, t in zip([c for c in unmapped if c not in perm], spare):
        perm[c] = t

    merged = dict(c1.assignment)
    for u, col in c2.assignment.items():
        if u != v:
            merged[u] = perm[col]
    return Coloring(merged, k)


def color(
    g: PlanarGraph, k: int | None = None, trace: RunTrace | None = None
) -> Coloring:
    """2-distance coloring with at most k colors (default 3*Delta + 2).

    The palette suffices for every connected embedded planar graph with
    maximum degree at least 6; smaller graphs are handled best effort and
    may raise BudgetExhausted.
    """
    if k is None:
        k = 3 * g.max_degree() + 2
    depth = 4 * g.size() + 1000
    old_limit = sys.getrecursionlimit()
    if depth > old_limit:
        sys.setrecursionlimit(depth)
    try:
        return _color(g, k, trace)
    finally:
        if depth > old_limit:
            sys.setrecursionlimit(old_limit)


def _color(g: PlanarGraph, k: int, trace: RunTrace | None) -> Coloring:
    faces = trace_faces(g)
    if g.n <= BASE_N:
        if trace is not None and trace.graph_hook is not None:
            trace.graph_hook(g, faces, None)
        return _base_color(g, k)

    outcome = find_reduction(g, faces)
    if trace is not None:
        if isinstance(outcome, Reduction):
            trace.steps.append((outcome.lemma, g.n, g.m, g.max_degree()))
        else:
            trace.gaps.append(outcome)
        if trace.graph_hook is not None:
            trace.graph_hook(g, faces, outcome)

    if isinstance(outcome, ProofGapReport):
        # outside the guarantee the catalog may run dry; fall back to greedy
        return _greedy_fallback(g, k, outcome)

    r = outcome
    if r.split is not None:
        parts = split_at(g, r.split)
        c1 = _color(parts.g1, k, trace)
        c2 = _color(parts.g2, k, trace)
        back1 = {new: old for old, new in parts.map1.items()}
        back2 = {new: old for old, new in parts.map2.items()}
        c1g = Coloring({back1[u]: col for u, col in c1.assignment.items()}, k)
        c2g = Coloring({back2[u]: col for u, col in c2.assignment.items()}, k)
        return merge_at_cut(c1g, c2g, r.split, g)

    try:
        res = apply_reduction(g, r)
    except DegreeBudgetExceeded:
        # possible only below the guarantee threshold, where a fan center
        # may sit at the maximum degree already; never with Delta >= 6
        if g.max_degree() >= 6:
            raise
        return _greedy_fallback(g, k, None)
    sub = _color(res.graph, k, trace)
    pending = set(r.pending)
    partial = Coloring(
        {
            old: sub.assignment[new]
            for old, new in res.old_to_new.items()
            if old not in pending
        },
        k,
    )
    return extend(partial, g, r.pending, reduction=r, trace=trace)


def _greedy_fallback(
    g: PlanarGraph, k: int, gap: ProofGapReport | None
) -> Coloring:
    from .oracle import greedy_square

    greedy = greedy_square(g)
    if greedy.colors_used <= k:
        return Coloring(greedy.assignment, k)
    detail = f" (catalog gap, delta={gap.delta})" if gap is not None else ""
    raise BudgetExhausted(
        f"greedy needs {greedy.colors_used} > {k} colors on n={g.n}{detail}",
        gap=gap,
    )


def _base_color(g: PlanarGraph, k: int) -> Coloring:
    from .oracle import chi2_exact, greedy_square

    if g.n == 0:
        return Coloring({}, k)
    result = chi2_exact(g, node_budget=BASE_ORACLE_BUDGET)
    if result.witness.assignment and result.witness.colors_used <= k:
        return Coloring(dict(result.witness.assignment), k)
    greedy = greedy_square(g)
    if greedy.colors_used <= k:
        return Coloring(greedy.assignment, k)
    raise BudgetExhausted(
        f"base case n={g.n} needs more than {k} colors"
    )
