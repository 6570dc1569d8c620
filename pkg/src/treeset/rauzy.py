"""Rauzy graphs, the θ_n equivalence, foldings and type-graph classification."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import NoSpecialVertex
from .extension import extension_graph, left_extensions
from .freegroup import StallingsGraph
from .graphs import (LabeledGraph, canonical_form, graphs_isomorphic,  # noqa: F401
                     is_strongly_connected as _strongly_connected, quotient)
from .words import EMPTY, FactorSet, Word, length_lex


@dataclass(frozen=True)
class RauzyGraph:
    order: int
    vertices: tuple
    edges: frozenset  # (x, letter, y)

    def as_labeled(self) -> LabeledGraph:
        return LabeledGraph(self.vertices, frozenset((x, (a,), y) for x, a, y in self.edges))


def rauzy_graph(F: FactorSet, n: int) -> RauzyGraph:
    """Vertices F ∩ Aⁿ; an edge (x, a, y) whenever xa is in F and y is xa minus its first letter."""
    if n < 0:
        raise ValueError("order must be non-negative")
    F.check_horizon(n + 1, "Rauzy graph")
    vertices = tuple(F.words(n))
    edges = frozenset((w[:-1], w[-1], w[1:]) for w in F.words(n + 1))
    return RauzyGraph(n, vertices, edges)


def is_strongly_connected(G) -> bool:
    return _strongly_connected(G.as_labeled() if isinstance(G, RauzyGraph) else G)


def theta_equivalence(F: FactorSet, n: int) -> list:
    """Classes of θ_n on F ∩ Aⁿ, each a sorted list, classes in length-lex order.

    ax and bx are equivalent when a and b lie in one connected component of
    the extension graph G(x).
    """
    if n < 1:
        raise ValueError("θ_n is defined for n >= 1 only")
    F.check_horizon(n + 1, "θ equivalence")
    classes = []
    for x in F.words(n - 1):
        g = extension_graph(F, x)
        for comp in g.components():
            lefts = [g.left[i] for side, i in comp if side == "L"]
            if lefts:
                classes.append(sorted(a + x for a in lefts))
    # letters with no right extension still have to appear in G(x)
    covered = {w for c in classes for w in c}
    for w in F.words(n):
        if w not in covered:
            classes.append([w])
    return sorted(classes, key=lambda c: length_lex(c[0]))


def stallings_fold(G: LabeledGraph, rng: random.Random | None = None) -> LabeledGraph:
    """Fully fold G; vertices of the result are frozensets of the original
    vertices they absorbed (split-chain vertices dropped when others exist)."""
    sg = StallingsGraph.from_labeled(G).fold(rng)
    return _folded_to_labeled(sg, set(G.vertices))


def _folded_to_labeled(sg: StallingsGraph, originals: set) -> LabeledGraph:
    names = {}
    for v in sg.vertices:
        absorbed = sg.merged.get(v, {v})
        own = frozenset(u for u in absorbed if u in originals)
        names[v] = own if own else frozenset(absorbed)
    order = sorted(sg.vertices, key=lambda v: (v != sg.base, v))
    return LabeledGraph(tuple(names[v] for v in order),
                        frozenset((names[s], (a,), names[t]) for s, a, t in sg.edges),
                        names[sg.base])


def fold_to_stallings(G: LabeledGraph, base=None, rng=None) -> StallingsGraph:
    return StallingsGraph.from_labeled(G, base).fold(rng)


def rose(alphabet_size: int) -> LabeledGraph:
    return LabeledGraph(("*",), frozenset(("*", (a,), "*") for a in range(alphabet_size)), "*")


def is_rose(G: LabeledGraph, alphabet_size: int) -> bool:
    return (len(G.vertices) == 1
            and {l for _, l, _ in G.edges} == {(a,) for a in range(alphabet_size)}
            and len(G.edges) == alphabet_size)


# -- type graphs ---------------------------------------------------------------

def _degrees(G: LabeledGraph) -> tuple:
    indeg = {v: 0 for v in G.vertices}
    outdeg = {v: 0 for v in G.vertices}
    for s, _, t in G.edges:
        outdeg[s] += 1
        indeg[t] += 1
    return indeg, outdeg


def special_vertices(G: LabeledGraph) -> list:
    """Vertices with in-degree or out-degree above one."""
    indeg, outdeg = _degrees(G)
    return [v for v in G.vertices if indeg[v] > 1 or outdeg[v] > 1]


def bispecial_vertices(G) -> list:
    if isinstance(G, RauzyGraph):
        G = G.as_labeled()
    indeg, outdeg = _degrees(G)
    return [v for v in G.vertices if indeg[v] > 1 and outdeg[v] > 1]


def type_graph(G) -> LabeledGraph:
    """Contract every maximal path through non-special vertices into one edge."""
    if isinstance(G, RauzyGraph):
        G = G.as_labeled()
    special = special_vertices(G)
    if not special:
        raise NoSpecialVertex("no special vertex: the graph is a cycle (periodic set)")
    keep = set(special)
    out = {v: G.out_edges(v) for v in G.vertices}
    edges = set()
    for p in special:
        for _, label, q in out[p]:
            steps = 0
            while q not in keep:
                nxt = out[q]
                if len(nxt) != 1 or steps > len(G.vertices):
                    raise ValueError("type graph needs a strongly connected input")
                _, more, q = nxt[0]
                label = label + more
                steps += 1
            edges.add((p, label, q))
    return LabeledGraph(tuple(special), frozenset(edges))


# -- classification ------------------------------------------------------------

# Edge lists (source, edge name, target); "x" is the bispecial vertex.
TEMPLATES = {
    "Finite1": [("x", "u", "x"), ("x", "v", "x"), ("x", "w", "x")],
    "Finite2": [("x", "u", "x"), ("x", "v", "p"), ("p", "w", "x"), ("p", "t", "x")],
    "Finite3": [("x", "u", "x"), ("x", "v", "p"), ("p", "w", "x"), ("x", "t", "p")],
    "Finite4": [("x", "u", "x"), ("x", "v", "p"), ("q", "z", "x"), ("p", "w", "q"),
                ("p", "t", "q")],
    "Finite5": [("p", "w", "q"), ("p", "t", "x"), ("x", "u", "p"), ("q", "z", "x"),
                ("x", "v", "q")],
    "Finite6": [("y", "z", "q"), ("x", "u", "y"), ("x", "v", "y"), ("q", "w", "x"),
                ("q", "t", "x")],
    "Finite7": [("x", "u", "y"), ("x", "v", "y"), ("y", "w", "x"), ("y", "t", "x")],
    "Infinite1": [("x", "u", "x"), ("y", "w", "y"), ("x", "v", "y"), ("y", "t", "x")],
    "Infinite2": [("x", "u", "x"), ("x", "v", "p"), ("q", "z", "x"), ("p", "w", "q"),
                  ("q", "t", "p")],
}

FINITE_TAGS = tuple(f"Finite{i}" for i in range(1, 8))
INFINITE_TAGS = ("Infinite1", "Infinite2")


@dataclass(frozen=True)
class TypeClass:
    tag: str
    witness: dict = field(default_factory=dict)  # edge name -> label Word
    bispecial_vertex: Word = EMPTY
    vertex_map: dict = field(default_factory=dict)  # template vertex -> graph vertex

    def __hash__(self):
        return hash((self.tag, tuple(sorted(self.witness.items())), self.bispecial_vertex))


def template_graph(tag: str, labels: dict | None = None) -> LabeledGraph:
    """The template as a labeled graph; edge labels default to one letter per name."""
    edges = TEMPLATES[tag]
    names = sorted({n for _, n, _ in edges})
    labels = labels or {n: (i,) for i, n in enumerate(names)}
    vertices = sorted({s for s, _, _ in edges} | {t for _, _, t in edges},
                      key=lambda v: (v != "x", v))
    return LabeledGraph(tuple(vertices), frozenset((s, tuple(labels[n]), t) for s, n, t in edges))


def classify_type(T: LabeledGraph, bispecial) -> TypeClass:
    """Match T against the nine templates with `bispecial` in the role of x.

    Returns TypeClass("Other") when nothing matches.  Parallel template
    edges are bound in label order.
    """
    bispecial = tuple(bispecial) if isinstance(bispecial, (tuple, list)) else bispecial
    if bispecial not in T.vertices:
        raise ValueError("bispecial vertex is not a vertex of the type graph")
    others = [v for v in T.vertices if v != bispecial]
    g_groups = {}
    for s, l, t in T.edges:
        g_groups.setdefault((s, t), []).append(l)
    for tag, edges in TEMPLATES.items():
        if len(edges) != len(T.edges):
            continue
        t_vertices = sorted(({s for s, _, _ in edges} | {t for _, _, t in edges}) - {"x"})
        if len(t_vertices) != len(others):
            continue
        t_groups = {}
        for s, n, t in edges:
            t_groups.setdefault((s, t), []).append(n)
        for perm in itertools.permutations(others):
            vmap = dict(zip(t_vertices, perm), x=bispecial)
            mapped = {(vmap[s], vmap[t]): names for (s, t), names in t_groups.items()}
            if {k: len(v) for k, v in mapped.items()} != {k: len(v) for k, v in g_groups.items()}:
                continue
            witness = {}
            for key, names in mapped.items():
                for name, label in zip(sorted(names), sorted(g_groups[key], key=length_lex)):
                    witness[name] = label
            return TypeClass(tag, witness, bispecial, vmap)
    return TypeClass("Other", {}, bispecial, {})


def classify_rauzy(G: RauzyGraph) -> list:
    """Classify the type graph of G once per bispecial vertex (length-lex order)."""
    T = type_graph(G)
    return [classify_type(T, v) for v in sorted(bispecial_vertices(G), key=length_lex)]


def first_return_labels(G: LabeledGraph, x, max_len: int) -> set:
    """Labels of paths from x back to x not visiting x in between, up to max_len letters."""
    out = {v: G.out_edges(v) for v in G.vertices}
    found = set()
    stack = [(x, EMPTY, True)]
    while stack:
        v, label, start = stack.pop()
        if v == x and not start:
            found.add(label)
            continue
        for _, l, t in out[v]:
            if len(label) + len(l) <= max_len:
                stack.append((t, label + l, False))
    return found


def reduce_infinite2(tc: TypeClass) -> tuple:
    """Rewrite an Infinite2 type into the equivalent Infinite1 shape.

    Returns (graph, witness): loop u at x, loop tw at y, x -> y labeled vw,
    y -> x labeled z.  First-return labels at x are unchanged.
    """
    if tc.tag != "Infinite2":
        raise ValueError("only Infinite2 types are rewritten")
    u, v, w, t, z = (tc.witness[k] for k in "uvwtz")
    witness = {"u": u, "v": v + w, "w": t + w, "t": z}
    g = LabeledGraph(("x", "y"), frozenset({("x", witness["u"], "x"), ("y", witness["w"], "y"),
                                            ("x", witness["v"], "y"), ("y", witness["t"], "x")}))
    return g, witness
