"""Free-group elements and Stallings subgroup graphs.

An element is a freely reduced tuple of (letter index, sign) pairs.  A
subgroup given by generators is represented by its folded Stallings graph;
membership is path tracing from the base vertex and the basis test checks
that the folded graph is the rose on the whole alphabet.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DisconnectedGraph, NotFolded
from .graphs import LabeledGraph, is_weakly_connected, split_labels
from .words import Alphabet, Word


def reduce(letters: Iterable) -> "GroupElement":
    out = []
    for a, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if out and out[-1] == (a, -sign):
            out.pop()
        else:
            out.append((a, sign))
    return GroupElement(tuple(out))


@dataclass(frozen=True, order=True)
class GroupElement:
    letters: tuple = ()

    def __post_init__(self):
        ls = tuple((int(a), int(s)) for a, s in self.letters)
        object.__setattr__(self, "letters", ls)
        for (a, s), (b, t) in zip(ls, ls[1:]):
            if a == b and s == -t:
                raise ValueError("GroupElement must be freely reduced; use reduce()")

    @classmethod
    def from_word(cls, word: Word) -> "GroupElement":
        """Lift a positive word, every letter with sign +1."""
        return cls(tuple((a, 1) for a in word))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> "GroupElement":
        """Read ``ab'c`` style text: a ``'`` after a letter inverts it."""
        out = []
        for ch in text.strip():
            if ch == "'":
                if not out:
                    raise ValueError(f"dangling inverse mark in {text!r}")
                a, s = out.pop()
                out.append((a, -s))
            elif not ch.isspace():
                out.append((alphabet.index(ch), 1))
        return reduce(out)

    def format(self, alphabet: Alphabet) -> str:
        return "".join(alphabet.symbols[a] + ("'" if s < 0 else "") for a, s in self.letters)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "GroupElement":
        return GroupElement(tuple((a, -s) for a, s in reversed(self.letters)))

    def __pow__(self, k: int) -> "GroupElement":
        g = self if k >= 0 else self.inverse()
        out = GroupElement()
        for _ in range(abs(k)):
            out = out * g
        return out

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters


def as_element(g) -> GroupElement:
    return g if isinstance(g, GroupElement) else GroupElement.from_word(tuple(g))


@dataclass
class StallingsGraph:
    """Rooted graph with positively oriented letter edges (s, a, t)."""

    vertices: set
    edges: set
    base: int = 0
    folded: bool = False
    merged: dict = field(default_factory=dict)  # vertex id -> original vertices it absorbed

    def copy(self) -> "StallingsGraph":
        return StallingsGraph(set(self.vertices), set(self.edges), self.base, self.folded,
                              {k: set(v) for k, v in self.merged.items()})

    def _fold_candidates(self) -> list:
        out_seen = {}
        in_seen = {}
        cands = []
        for s, a, t in sorted(self.edges):
            key = (s, a)
            if key in out_seen and out_seen[key] != t:
                cands.append((out_seen[key], t))
            out_seen.setdefault(key, t)
            key = (t, a)
            if key in in_seen and in_seen[key] != s:
                cands.append((in_seen[key], s))
            in_seen.setdefault(key, s)
        return cands

    def _merge(self, u, v):
        keep, drop = (u, v) if u == self.base or (v != self.base and u < v) else (v, u)
        self.vertices.discard(drop)
        self.edges = {(keep if s == drop else s, a, keep if t == drop else t)
                      for s, a, t in self.edges}
        self.merged.setdefault(keep, {keep}).update(self.merged.pop(drop, {drop}))

    def fold_step(self, rng: random.Random | None = None) -> bool:
        cands = self._fold_candidates()
        if not cands:
            return False
        u, v = rng.choice(cands) if rng else cands[0]
        self._merge(u, v)
        return True

    def fold(self, rng: random.Random | None = None) -> "StallingsGraph":
        """Fold to completion in place and return self.

        With `rng` the fold at each step is chosen at random.
        """
        while self.fold_step(rng):
            pass
        self.folded = True
        return self

    def core(self) -> "StallingsGraph":
        """Prune hanging trees; the base vertex is always kept."""
        g = self.copy()
        while True:
            deg = {v: 0 for v in g.vertices}
            for s, _, t in g.edges:
                deg[s] += 1
                deg[t] += 1
            leaves = {v for v, d in deg.items() if d <= 1 and v != g.base}
            if not leaves:
                return g
            g.vertices -= leaves
            g.edges = {e for e in g.edges if e[0] not in leaves and e[2] not in leaves}

    def is_rose(self, alphabet_size: int) -> bool:
        return (len(self.vertices) == 1
                and self.edges == {(self.base, a, self.base) for a in range(alphabet_size)})

    def to_labeled(self) -> LabeledGraph:
        return LabeledGraph(tuple(sorted(self.vertices)),
                            frozenset((s, (a,), t) for s, a, t in self.edges), self.base)

    @classmethod
    def from_labeled(cls, G: LabeledGraph, base=None) -> "StallingsGraph":
        """Integer-relabelled copy of G with labels split into letters."""
        if base is not None:
            G = G.with_base(base)
        G = split_labels(G)
        order = list(G.vertices)
        if G.base is not None:
            order.remove(G.base)
            order.insert(0, G.base)
        ids = {v: i for i, v in enumerate(order)}
        edges = {(ids[s], l[0], ids[t]) for s, l, t in G.edges}
        merged = {i: {v} for v, i in ids.items()}
        return cls(set(ids.values()), edges, 0, False, merged)


def subgroup_graph(gens: Iterable, A: Alphabet | int) -> StallingsGraph:
    """Folded core graph of the subgroup generated by `gens`."""
    g = bouquet(gens)
    g.fold()
    core = g.core()
    core.folded = True
    return core


def bouquet(gens: Iterable) -> StallingsGraph:
    vertices = {0}
    edges = set()
    nxt = 1
    for gen in gens:
        gen = as_element(gen)
        if gen.is_identity():
            continue
        path = [0] + list(range(nxt, nxt + len(gen) - 1)) + [0]
        nxt += len(gen) - 1
        vertices.update(path)
        for k, (a, sign) in enumerate(gen.letters):
            p, q = path[k], path[k + 1]
            edges.add((p, a, q) if sign > 0 else (q, a, p))
    return StallingsGraph(vertices, edges, 0, False)


def rank(G: StallingsGraph) -> int:
    if not G.folded:
        raise NotFolded("rank needs a folded graph")
    core = G.core()
    return len(core.edges) - len(core.vertices) + 1


def contains_element(G: StallingsGraph, g) -> bool:
    if not G.folded:
        raise NotFolded("membership needs a folded graph")
    g = as_element(g)
    fwd = {(s, a): t for s, a, t in G.edges}
    bwd = {(t, a): s for s, a, t in G.edges}
    v = G.base
    for a, sign in g.letters:
        v = (fwd if sign > 0 else bwd).get((v, a))
        if v is None:
            return False
    return v == G.base


def is_basis_of_free_group(gens: Iterable, A: Alphabet | int) -> bool:
    gens = {as_element(g) for g in gens}
    k = A if isinstance(A, int) else len(A)
    if len(gens) != k:
        return False
    return subgroup_graph(gens, A).is_rose(k)


def spanning_tree_basis(G: StallingsGraph) -> list:
    """Free basis of the group of a connected graph: one generator per non-tree edge."""
    adj = {v: [] for v in G.vertices}
    for e in sorted(G.edges):
        s, a, t = e
        adj[s].append((e, t, (a, 1)))
        adj[t].append((e, s, (a, -1)))
    path = {G.base: ()}
    tree = set()
    queue = deque([G.base])
    while queue:
        v = queue.popleft()
        for e, u, step in adj[v]:
            if u not in path:
                path[u] = path[v] + (step,)
                tree.add(e)
                queue.append(u)
    if len(path) != len(G.vertices):
        raise DisconnectedGraph("graph is not connected")
    gens = []
    for s, a, t in sorted(G.edges):
        if (s, a, t) in tree:
            continue
        back = tuple((b, -sg) for b, sg in reversed(path[t]))
        gens.append(reduce(path[s] + ((a, 1),) + back))
    return gens


def group_of_graph(G: LabeledGraph, v=None) -> list:
    """A free basis of the group defined by G with respect to vertex v."""
    base = v if v is not None else G.base
    if base is None:
        base = G.vertices[0]
    if not is_weakly_connected(G):
        raise DisconnectedGraph("group_of_graph needs a connected graph")
    sg = StallingsGraph.from_labeled(G, base).fold()
    return spanning_tree_basis(sg)
