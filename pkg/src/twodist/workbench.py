"""File format, random generation, and the proof-gap hunter.

Graph files are line based and carry the embedding explicitly:

    # optional comments
    p <n> <m>
    r <v> <deg> <u1> ... <udeg>      one line per vertex, ccw rotation

Vertices are dense 1-based integers.  Coloring files hold one "<v> <c>"
pair per line, colors 1-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .colorer import Coloring, RunTrace, color, verify_coloring
from .discharge import audit
from .errors import GenerationFailed, ParseError
from .planar import PlanarGraph
from .reductions import ProofGapReport

# -- graph files -----------------------------------------------------------


def parse_graph(text: str) -> PlanarGraph:
    """Parse the native format; every embedding invariant is validated."""
    header: tuple[int, int] | None = None
    rotations: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 3:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError("header fields must be integers", lineno)
        elif parts[0] == "r":
            if header is None:
                raise ParseError("rotation line before header", lineno)
            try:
                nums = [int(x) for x in parts[1:]]
            except ValueError:
                raise ParseError("rotation fields must be integers", lineno)
            if len(nums) < 2:
                raise ParseError("rotation line too short", lineno)
            v, deg, nbrs = nums[0], nums[1], nums[2:]
            if len(nbrs) != deg:
                raise ParseError(
                    f"vertex {v} declares degree {deg} but lists {len(nbrs)}",
                    lineno,
                )
            if not (1 <= v <= header[0]):
                raise ParseError(f"vertex {v} outside 1..{header[0]}", lineno)
            if v in rotations:
                raise ParseError(f"duplicate rotation for vertex {v}", lineno)
            rotations[v] = tuple(nbrs)
        else:
            raise ParseError(f"unknown record '{parts[0]}'", lineno)
    if header is None:
        raise ParseError("missing 'p' header")
    n, m = header
    missing = [v for v in range(1, n + 1) if v not in rotations]
    if missing:
        raise ParseError(f"missing rotation lines for {missing}")
    g = PlanarGraph([rotations[v] for v in range(1, n + 1)])
    if g.m != m:
        raise ParseError(f"header says m={m} but rotations define m={g.m}")
    return g


def write_graph(g: PlanarGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"p {g.n} {g.m}")
    for v in g.vertices():
        nbrs = g.neighbors(v)
        lines.append(f"r {v} {len(nbrs)} " + " ".join(map(str, nbrs)))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, budget: int) -> Coloring:
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("coloring line must be '<v> <c>'", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("coloring fields must be integers", lineno)
        if v in assignment:
            raise ParseError(f"duplicate color for vertex {v}", lineno)
        assignment[v] = c
    return Coloring(assignment, budget)


def write_coloring(c: Coloring) -> str:
    lines = [f"{v} {c.assignment[v]}" for v in sorted(c.assignment)]
    return "\n".join(lines) + "\n"


# -- random generation -------------------------------------------------------


def gen_planar(
    n: int,
    min_delta: int = 0,
    seed: int = 0,
    deletions: int | None = None,
) -> PlanarGraph:
    """Random connected embedded planar graph on n vertices.

    Grow a stacked triangulation by dropping each new vertex into a
    uniformly chosen face, then delete random edges (about m/5 by default)
    rejecting any deletion that would disconnect the graph or pull the
    maximum degree under min_delta.  Fully determined by the seed.
    """
    if n < 3:
        raise GenerationFailed("need n >= 3")
    for attempt in range(60):
        rng = random.Random(seed * 1_000_003 + attempt)
        g = _try_generate(n, min_delta, rng, deletions)
        if g is not None:
            return g
    raise GenerationFailed(
        f"could not reach maximum degree {min_delta} with n={n} vertices"
    )


def _try_generate(
    n: int, min_delta: int, rng: random.Random, deletions: int | None
) -> PlanarGraph | None:
    rot: dict[int, list[int]] = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    # faces as oriented triangles (a, b, c): darts a->b, b->c, c->a
    faces: list[tuple[int, int, int]] = [(1, 2, 3), (2, 1, 3)]
    degree = {1: 2, 2: 2, 3: 2}

    for w in range(4, n + 1):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        # the new neighbor goes right after the face predecessor of each corner
        rot[a].insert(rot[a].index(c) + 1, w)
        rot[b].insert(rot[b].index(a) + 1, w)
        rot[c].insert(rot[c].index(b) + 1, w)
        rot[w] = [a, c, b]
        degree[a] += 1
        degree[b] += 1
        degree[c] += 1
        degree[w] = 3
        faces.extend([(a, b, w), (b, c, w), (c, a, w)])

    if max(degree.values()) < min_delta:
        return None

    m = sum(degree.values()) // 2
    target = deletions if deletions is not None else m // 5
    removed = 0
    attempts = 0
    edges = sorted(
        (v, u) for v in rot for u in rot[v] if v < u
    )
    while removed < target and attempts < 10 * target + 20:
        attempts += 1
        u, v = edges[rng.randrange(len(edges))]
        if degree[u] <= 1 or degree[v] <= 1:
            continue
        if _max_degree_after(degree, u, v) < min_delta:
            continue
        iu = rot[u].index(v)
        iv = rot[v].index(u)
        rot[u].pop(iu)
        rot[v].pop(iv)
        if _connected(rot):
            degree[u] -= 1
            degree[v] -= 1
            edges.remove((u, v))
            removed += 1
        else:
            rot[u].insert(iu, v)
            rot[v].insert(iv, u)

    g = PlanarGraph([tuple(rot[v]) for v in range(1, n + 1)])
    if g.max_degree() < min_delta:
        return None
    return g


def _max_degree_after(degree: dict[int, int], u: int, v: int) -> int:
    best = 0
    for w, d in degree.items():
        if w == u or w == v:
            d -= 1
        if d > best:
            best = d
    return best


def _connected(rot: dict[int, list[int]]) -> bool:
    start = next(iter(rot))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in rot[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rot)


# -- the hunter ---------------------------------------------------------------


@dataclass
class HuntReport:
    """Aggregate evidence from coloring many random graphs end to end."""

    trials: int
    n: int
    min_delta: int
    seeds: tuple[int, ...]
    lemma_fires: dict[str, int] = field(default_factory=dict)
    gap_count: int = 0
    gap_reports: list[ProofGapReport] = field(default_factory=list)
    audit_totals: dict[str, int] = field(default_factory=dict)
    graphs_colored: int = 0
    colorings_valid: int = 0

    def summary(self) -> str:
        lines = [
            f"trials={self.trials} n={self.n} min_delta={self.min_delta}",
            f"colored {self.graphs_colored}, valid {self.colorings_valid}",
            f"gap count: {self.gap_count}",
        ]
        if self.audit_totals:
            lines.append(
                "audit totals: "
                + ", ".join(f"{t} x{c}" for t, c in sorted(self.audit_totals.items()))
            )
        for lemma in sorted(self.lemma_fires):
            lines.append(f"  {lemma}: {self.lemma_fires[lemma]}")
        return "\n".join(lines)


def hunt(
    trials: int,
    n: int,
    min_delta: int = 6,
    seed: int = 0,
    audit_each: bool = True,
) -> HuntReport:
    """Generate graphs, color each one while recording every reduction the
    recursion takes, audit every intermediate graph, and count catalog gaps
    on graphs with maximum degree >= 6 (the expected count is zero)."""
    report = HuntReport(
        trials=trials,
        n=n,
        min_delta=min_delta,
        seeds=tuple(seed + t for t in range(trials)),
    )

    def hook(graph: PlanarGraph, faces, outcome) -> None:
        if audit_each and graph.n >= 2:
            total = audit(graph, cross_reference=False).total
            key = str(total)
            report.audit_totals[key] = report.audit_totals.get(key, 0) + 1

    for s in report.seeds:
        g = gen_planar(n, min_delta, s)
        trace = RunTrace(graph_hook=hook)
        c = color(g, trace=trace)
        report.graphs_colored += 1
        if verify_coloring(g, c).valid and c.colors_used <= c.budget:
            report.colorings_valid += 1
        for lemma, count in trace.lemma_counts().items():
            report.lemma_fires[lemma] = report.lemma_fires.get(lemma, 0) + count
        for gap in trace.gaps:
            if gap.delta >= 6:
                report.gap_count += 1
                report.gap_reports.append(gap)
    return report


def format_audit_tsv(g: PlanarGraph, with_trace: bool = False) -> str:
    """TSV dump of an audit: kind, id, initial, final (rationals as p/q)."""
    rep = audit(g)
    lines = ["kind\tid\tinitial\tfinal"]
    for v in sorted(rep.final_vertex):
        lines.append(
            f"vertex\t{v}\t{rep.initial_vertex[v]}\t{rep.final_vertex[v]}"
        )
    for key in sorted(rep.final_face):
        fid = "-".join(str(x) for x in key)
        lines.append(
            f"face\t{fid}\t{rep.initial_face[key]}\t{rep.final_face[key]}"
        )
    lines.append(f"total\t-\t{Fraction(-8)}\t{rep.total}")
    if with_trace:
        for t in rep.rule_log:
            src = _element_id(t.source)
            dst = _element_id(t.target)
            lines.append(f"transfer\t{t.rule}\t{src}->{dst}\t{t.amount}")
    return "\n".join(lines) + "\n"


def _element_id(element: tuple[str, object]) -> str:
    kind, key = element
    if kind == "vertex":
        return f"v{key}"
    return "f" + "-".join(str(x) for x in key)  # type: ignore[union-attr]
