"""Directed graphs labeled by words, quotients and isomorphism testing.

Graphs here are tiny (a few hundred vertices at most), so the canonical
form is computed by colour refinement followed by individualization and
backtracking, keeping the lexicographically least encoding.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Hashable, Iterable


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple
    edges: frozenset  # (source, label word, target)
    base: Hashable = None

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset((s, tuple(l), t) for s, l, t in self.edges))
        vs = set(vertices)
        if len(vs) != len(vertices):
            raise ValueError("duplicate vertices")
        for s, label, t in self.edges:
            if s not in vs or t not in vs:
                raise ValueError(f"edge {(s, label, t)} references a missing vertex")
            if not label:
                raise ValueError("edge labels must be nonempty words")
        if self.base is not None and self.base not in vs:
            raise ValueError("base vertex not in graph")

    def out_edges(self, v) -> list:
        return sorted(((s, l, t) for s, l, t in self.edges if s == v), key=_edge_key)

    def in_edges(self, v) -> list:
        return sorted(((s, l, t) for s, l, t in self.edges if t == v), key=_edge_key)

    def successors(self, v) -> set:
        return {t for s, _, t in self.edges if s == v}

    def predecessors(self, v) -> set:
        return {s for s, _, t in self.edges if t == v}

    def with_base(self, base) -> "LabeledGraph":
        return LabeledGraph(self.vertices, self.edges, base)

    def to_dot(self, fmt=None, name: str = "G", vertex_fmt=None) -> str:
        """DOT text; vertices are numbered in stored order, base double-circled."""
        fmt = fmt or (lambda w: "".join(map(str, w)))
        vertex_fmt = vertex_fmt or str
        ids = {v: i for i, v in enumerate(self.vertices)}
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = "doublecircle" if v == self.base else "circle"
            lines.append(f'  n{ids[v]} [label="{vertex_fmt(v)}", shape={shape}];')
        for s, l, t in sorted(self.edges, key=lambda e: (ids[e[0]], e[1], ids[e[2]])):
            lines.append(f'  n{ids[s]} -> n{ids[t]} [label="{fmt(l)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _edge_key(e):
    return (repr(e[0]), e[1], repr(e[2]))


def quotient(G: LabeledGraph, partition: Iterable[Iterable]) -> LabeledGraph:
    """G/θ: vertices are the classes (as frozensets), edges induced by representatives."""
    classes = [frozenset(c) for c in partition]
    cls = {}
    for c in classes:
        for v in c:
            if v in cls:
                raise ValueError(f"vertex {v!r} in two classes")
            cls[v] = c
    missing = set(G.vertices) - set(cls)
    if missing:
        raise ValueError(f"partition misses vertices {sorted(map(repr, missing))}")
    order = {v: i for i, v in enumerate(G.vertices)}
    classes.sort(key=lambda c: min(order[v] for v in c))
    edges = {(cls[s], l, cls[t]) for s, l, t in G.edges}
    base = cls[G.base] if G.base is not None else None
    return LabeledGraph(tuple(classes), frozenset(edges), base)


def is_strongly_connected(G: LabeledGraph) -> bool:
    if not G.vertices:
        return False
    out = defaultdict(set)
    inn = defaultdict(set)
    for s, _, t in G.edges:
        out[s].add(t)
        inn[t].add(s)
    start = G.vertices[0]
    return _reach(start, out) == set(G.vertices) == _reach(start, inn)


def is_weakly_connected(G: LabeledGraph) -> bool:
    if not G.vertices:
        return False
    adj = defaultdict(set)
    for s, _, t in G.edges:
        adj[s].add(t)
        adj[t].add(s)
    return _reach(G.vertices[0], adj) == set(G.vertices)


def _reach(start, adj) -> set:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def _rank(signatures: list) -> list:
    table = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [table[s] for s in signatures]


def _refine(colors: list, out_adj: list, in_adj: list) -> list:
    while True:
        sigs = [
            (colors[v],
             tuple(sorted((l, colors[t]) for l, t in out_adj[v])),
             tuple(sorted((l, colors[s]) for l, s in in_adj[v])))
            for v in range(len(colors))
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(G: LabeledGraph) -> tuple:
    """An isomorphism invariant that is complete: equal iff isomorphic.

    Isomorphisms must preserve labels and, when both graphs have one, the
    base vertex.
    """
    n = len(G.vertices)
    idx = {v: i for i, v in enumerate(G.vertices)}
    edges = [(idx[s], l, idx[t]) for s, l, t in G.edges]
    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for s, l, t in edges:
        out_adj[s].append((l, t))
        in_adj[t].append((l, s))
    base = idx[G.base] if G.base is not None else None
    init = _rank([(v == base, len(in_adj[v]), len(out_adj[v]),
                   tuple(sorted(l for l, _ in out_adj[v])),
                   tuple(sorted(l for l, _ in in_adj[v])),
                   tuple(sorted(l for l, t in out_adj[v] if t == v)))
                  for v in range(n)])
    best = None

    def encode(colors):
        return (n, base is not None,
                tuple(sorted((colors[s], l, colors[t]) for s, l, t in edges)),
                colors[base] if base is not None else -1)

    def search(colors):
        nonlocal best
        colors = _refine(colors, out_adj, in_adj)
        if len(set(colors)) == n:
            code = encode(colors)
            if best is None or code < best:
                best = code
            return
        cells = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            search(_rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)]))

    search(init)
    return best if best is not None else (0, base is not None, (), -1)


def graphs_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    if len(G.vertices) != len(H.vertices) or len(G.edges) != len(H.edges):
        return False
    if (G.base is None) != (H.base is None):
        return False
    return canonical_form(G) == canonical_form(H)


def split_labels(G: LabeledGraph) -> LabeledGraph:
    """Replace each multi-letter edge by a chain of single-letter edges.

    Fresh interior vertices are tuples ``("split", i, k)``.
    """
    edges = set()
    vertices = list(G.vertices)
    for i, (s, label, t) in enumerate(sorted(G.edges, key=_edge_key)):
        if len(label) == 1:
            edges.add((s, label, t))
            continue
        chain = [s] + [("split", i, k) for k in range(1, len(label))] + [t]
        vertices.extend(chain[1:-1])
        for k, a in enumerate(label):
            edges.add((chain[k], (a,), chain[k + 1]))
    return LabeledGraph(tuple(vertices), frozenset(edges), G.base)
