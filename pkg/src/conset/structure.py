"""Constituent structure diagrams and operations on them.

A StructureGraph is the covering diagram of a set's constituents: vertices
are abstract ids 0..n-1 (optionally tagged with the set each one came from),
edges point from the smaller constituent to the one that covers it, and there
is a single bottom (the empty set) and a single top (the whole set).

Certificates come from color refinement with deterministic individualization
and take the minimum over all branches, so two graphs get equal certificate
bytes exactly when they are isomorphic.  Realization walks a diagram bottom-up
and builds the least set whose diagram matches, adding far-down constituents
as extra elements only when two vertices would otherwise collide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import Unrealizable
from .kernel import (
    EMPTY,
    SetHandle,
    constituents,
    is_constituent,
    parse,
)
from .kernel import make_set

__all__ = [
    "StructureGraph",
    "IsoWitness",
    "POINT",
    "check_graph",
    "structure_of",
    "canonical_cert",
    "isomorphic",
    "simplest_set",
    "graph_sum",
    "graph_product",
    "chain_graph",
    "to_dot",
    "to_json",
    "graph_from_json",
]


@dataclass(frozen=True)
class StructureGraph:
    tags: tuple[SetHandle | None, ...]
    edges: tuple[tuple[int, int], ...]  # (lower, upper) covering pairs
    top: int
    bottom: int

    @property
    def n(self) -> int:
        return len(self.tags)


@dataclass(frozen=True)
class IsoWitness:
    """Vertex bijection first graph -> second graph, validated order-preserving."""

    mapping: tuple[int, ...]


POINT = StructureGraph(tags=(None,), edges=(), top=0, bottom=0)


def structure_of(h: SetHandle) -> StructureGraph:
    """Covering diagram of the constituents of h.

    Vertices are the constituents in shortlex order, so the bottom (empty set)
    is vertex 0 and the top (h itself) is vertex n-1.  A membership pair e in c
    is a covering edge unless another element of c contains e strictly.
    """
    cons = constituents(h)
    index = {c: i for i, c in enumerate(cons)}
    edges: list[tuple[int, int]] = []
    for c in cons:
        for e in c.children:
            if not any(
                e2 is not e and is_constituent(e, e2) for e2 in c.children
            ):
                edges.append((index[e], index[c]))
    return StructureGraph(
        tags=tuple(cons),
        edges=tuple(sorted(edges)),
        top=index[h],
        bottom=index[EMPTY],
    )


def _adjacency(g: StructureGraph) -> tuple[list[list[int]], list[list[int]]]:
    lowers: list[list[int]] = [[] for _ in range(g.n)]
    uppers: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        uppers[a].append(b)
        lowers[b].append(a)
    return lowers, uppers


def check_graph(g: StructureGraph) -> None:
    """Raise ValueError unless g is a well-formed covering diagram."""
    n = g.n
    if n == 0:
        raise ValueError("graph has no vertices")
    for a, b in g.edges:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise ValueError(f"bad edge ({a}, {b})")
    if len(set(g.edges)) != len(g.edges):
        raise ValueError("duplicate edges")
    lowers, uppers = _adjacency(g)
    if n > 1:
        sources = [v for v in range(n) if not lowers[v]]
        sinks = [v for v in range(n) if not uppers[v]]
        if sources != [g.bottom] or sinks != [g.top]:
            raise ValueError("graph must have a single bottom and a single top")
    levels = _levels(g)  # raises on cycles
    del levels


def _levels(g: StructureGraph) -> list[int]:
    """Longest-path height of each vertex above the bottom."""
    lowers, uppers = _adjacency(g)
    indeg = [len(lowers[v]) for v in range(g.n)]
    level = [0] * g.n
    queue = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for u in uppers[v]:
            level[u] = max(level[u], level[v] + 1)
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    if seen != g.n:
        raise ValueError("graph has a cycle")
    return level


def _up_closure(g: StructureGraph) -> list[set[int]]:
    """For each vertex the set of vertices reachable strictly upward."""
    _, uppers = _adjacency(g)
    level = _levels(g)
    order = sorted(range(g.n), key=lambda v: -level[v])
    up: list[set[int]] = [set() for _ in range(g.n)]
    for v in order:
        for u in uppers[v]:
            up[v].add(u)
            up[v] |= up[u]
    return up


def _refine(
    n: int,
    lowers: list[list[int]],
    uppers: list[list[int]],
    colors: list[int],
) -> list[int]:
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[u] for u in lowers[v])),
                tuple(sorted(colors[u] for u in uppers[v])),
            )
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical(g: StructureGraph) -> tuple[tuple, tuple[int, ...]]:
    """Canonical form and a labeling realizing it (vertex -> canonical index).

    Individualization branches over every vertex of the first non-singleton
    color class and keeps the minimum encoding, which makes the result
    independent of the input labeling.
    """
    n = g.n
    lowers, uppers = _adjacency(g)
    level = _levels(g)
    base = [(level[v], len(lowers[v]), len(uppers[v])) for v in range(n)]
    ranks = {s: i for i, s in enumerate(sorted(set(base)))}
    init = [ranks[s] for s in base]

    best: list[tuple[tuple, tuple[int, ...]] | None] = [None]

    def encode(lab: list[int]) -> tuple:
        return (n, tuple(sorted((lab[a], lab[b]) for a, b in g.edges)))

    def search(colors: list[int]) -> None:
        colors = _refine(n, lowers, uppers, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            form = encode(colors)
            if best[0] is None or form < best[0][0]:
                best[0] = (form, tuple(colors))
            return
        for v in target:
            branched = [(colors[u], 0 if u == v else 1) for u in range(n)]
            rr = {s: i for i, s in enumerate(sorted(set(branched)))}
            search([rr[s] for s in branched])

    search(init)
    assert best[0] is not None
    return best[0]


def canonical_cert(g: StructureGraph) -> bytes:
    """Label-invariant certificate; equal bytes exactly when isomorphic."""
    form, _ = _canonical(g)
    return repr(form).encode("ascii")


def isomorphic(g1: StructureGraph, g2: StructureGraph) -> IsoWitness | None:
    """A validated vertex bijection when the graphs are isomorphic, else None."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    form1, lab1 = _canonical(g1)
    form2, lab2 = _canonical(g2)
    if form1 != form2:
        return None
    inv2 = [0] * g2.n
    for v, pos in enumerate(lab2):
        inv2[pos] = v
    mapping = tuple(inv2[lab1[v]] for v in range(g1.n))
    e1 = {(mapping[a], mapping[b]) for a, b in g1.edges}
    assert e1 == set(g2.edges), "certificate matched but edges do not map"
    assert mapping[g1.top] == g2.top and mapping[g1.bottom] == g2.bottom
    return IsoWitness(mapping=mapping)


def simplest_set(g: StructureGraph) -> SetHandle:
    """The least set whose covering diagram is g.

    Vertices are realized bottom-up as the set of their realized covers.  When
    a candidate collides with an already-realized vertex, constituents from
    at least two levels further down are added one at a time, canonically
    smallest first, until the candidate is fresh.
    """
    check_graph(g)
    lowers, _ = _adjacency(g)
    level = _levels(g)
    order = sorted(range(g.n), key=lambda v: (level[v], v))
    up = _up_closure(g)
    down: list[set[int]] = [set() for _ in range(g.n)]
    for v in range(g.n):
        for u in up[v]:
            down[u].add(v)

    realized: dict[int, SetHandle] = {}
    used: dict[SetHandle, int] = {}
    for v in order:
        elems = [realized[u] for u in lowers[v]]
        chosen = set(elems)
        cand = make_set(elems)
        while cand in used:
            pool = sorted(
                (
                    realized[d]
                    for d in down[v]
                    if d not in lowers[v]
                ),
                key=lambda h: (len(h.text), h.text),
            )
            pick = next((p for p in pool if p not in chosen), None)
            if pick is None:
                raise Unrealizable(
                    f"vertex {v} collides and has no spare constituent to add"
                )
            elems.append(pick)
            chosen.add(pick)
            cand = make_set(elems)
        realized[v] = cand
        used[cand] = v

    result = realized[g.top]
    actual = structure_of(result)
    if actual.n != g.n:
        raise Unrealizable("realized set has the wrong number of constituents")
    where = {tag: i for i, tag in enumerate(actual.tags)}
    mapped = {(where[realized[a]], where[realized[b]]) for a, b in g.edges}
    if mapped != set(actual.edges):
        raise Unrealizable("realized set does not cover along the given edges")
    return result


def graph_sum(g1: StructureGraph, g2: StructureGraph) -> StructureGraph:
    """Stack g1 on g2, identifying g1's bottom with g2's top."""
    if g1.n == 1:
        return g2
    if g2.n == 1:
        return g1
    remap: dict[int, int] = {g1.bottom: g2.top}
    nxt = g2.n
    for v in range(g1.n):
        if v != g1.bottom:
            remap[v] = nxt
            nxt += 1
    tags = tuple(g2.tags) + tuple(
        None for v in range(g1.n) if v != g1.bottom
    )
    edges = tuple(g2.edges) + tuple(
        sorted((remap[a], remap[b]) for a, b in g1.edges)
    )
    return StructureGraph(
        tags=tags, edges=tuple(sorted(edges)), top=remap[g1.top], bottom=g2.bottom
    )


def graph_product(g1: StructureGraph, g2: StructureGraph) -> StructureGraph:
    """Replace every edge of g1 with a copy of g2 joined at the endpoints."""
    if g2.n == 1:
        return POINT  # every edge of g1 contracts away
    if g1.n == 1:
        return g1
    if g2.n == 2:
        return g1  # single-edge copies change nothing
    interior = [v for v in range(g2.n) if v not in (g2.top, g2.bottom)]
    k = len(interior)
    edges: list[tuple[int, int]] = []
    nxt = g1.n
    for lo, hi in g1.edges:
        remap = {g2.bottom: lo, g2.top: hi}
        for i, v in enumerate(interior):
            remap[v] = nxt + i
        nxt += k
        for a, b in g2.edges:
            edges.append((remap[a], remap[b]))
    tags = tuple(None for _ in range(nxt))
    return StructureGraph(
        tags=tags, edges=tuple(sorted(edges)), top=g1.top, bottom=g1.bottom
    )


def chain_graph(k: int) -> StructureGraph:
    """A covering chain with k edges (k+1 vertices)."""
    if k < 0:
        raise ValueError("chain length must be >= 0")
    if k == 0:
        return POINT
    edges = tuple((i, i + 1) for i in range(k))
    return StructureGraph(
        tags=tuple(None for _ in range(k + 1)), edges=edges, top=k, bottom=0
    )


def to_dot(g: StructureGraph) -> str:
    """Graphviz digraph, edges lower -> upper, one rank per level."""
    level = _levels(g)
    lines = ["digraph constituent_structure {", "  rankdir=BT;", "  node [shape=box];"]
    for lvl in range(max(level) + 1):
        members = [v for v in range(g.n) if level[v] == lvl]
        decls = []
        for v in members:
            label = g.tags[v].text if g.tags[v] is not None else f"v{v}"
            decls.append(f'v{v} [label="{label}"]')
        lines.append("  { rank=same; " + "; ".join(decls) + "; }")
    for a, b in g.edges:
        lines.append(f"  v{a} -> v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: StructureGraph) -> str:
    """Stable JSON encoding; graph_from_json inverts it."""
    vertices = []
    for v in range(g.n):
        entry: dict = {"id": v}
        if g.tags[v] is not None:
            entry["set"] = g.tags[v].text
        vertices.append(entry)
    obj = {
        "vertices": vertices,
        "edges": [[a, b] for a, b in g.edges],
        "top": g.top,
        "bottom": g.bottom,
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> StructureGraph:
    obj = json.loads(text)
    vertices = obj["vertices"]
    tags: list[SetHandle | None] = [None] * len(vertices)
    for entry in vertices:
        if "set" in entry:
            tags[entry["id"]] = parse(entry["set"])
    g = StructureGraph(
        tags=tuple(tags),
        edges=tuple(sorted((a, b) for a, b in obj["edges"])),
        top=obj["top"],
        bottom=obj["bottom"],
    )
    check_graph(g)
    return g
