"""Extension graphs, special words, the tree condition and complexity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import EMPTY, FactorSet, Word, length_lex


@dataclass(frozen=True)
class BipartiteExtensionGraph:
    """Undirected bipartite graph; the two sides are disjoint copies.

    `edges` holds (left index, right index) pairs.
    """

    left: tuple
    right: tuple
    edges: frozenset

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < len(self.left) and 0 <= j < len(self.right)):
                raise ValueError(f"edge {(i, j)} references a missing vertex")

    @property
    def n_vertices(self) -> int:
        return len(self.left) + len(self.right)

    def edge_words(self) -> set:
        return {(self.left[i], self.right[j]) for i, j in self.edges}

    def components(self) -> list:
        """Connected components as lists of ('L', i) / ('R', j) vertices."""
        adj = {("L", i): [] for i in range(len(self.left))}
        adj.update({("R", j): [] for j in range(len(self.right))})
        for i, j in self.edges:
            adj[("L", i)].append(("R", j))
            adj[("R", j)].append(("L", i))
        seen = set()
        comps = []
        for start in adj:
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def to_dot(self, fmt=None, name: str = "G") -> str:
        fmt = fmt or (lambda w: "".join(map(str, w)) or "ε")
        lines = [f"graph {name} {{"]
        for i, w in enumerate(self.left):
            lines.append(f'  L_{i} [label="{fmt(w)}"];')
        for j, w in enumerate(self.right):
            lines.append(f'  R_{j} [label="{fmt(w)}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  L_{i} -- R_{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def left_extensions(F: FactorSet, w: Word) -> set:
    w = tuple(w)
    F.check_horizon(len(w) + 1, "left extensions")
    return {a for a in range(len(F.alphabet)) if (a,) + w in F}


def right_extensions(F: FactorSet, w: Word) -> set:
    w = tuple(w)
    F.check_horizon(len(w) + 1, "right extensions")
    return {a for a in range(len(F.alphabet)) if w + (a,) in F}


def extension_pairs(F: FactorSet, w: Word) -> set:
    w = tuple(w)
    F.check_horizon(len(w) + 2, "extension pairs")
    return {(a, b) for a in left_extensions(F, w) for b in right_extensions(F, w)
            if (a,) + w + (b,) in F}


def is_left_special(F: FactorSet, w: Word) -> bool:
    return len(left_extensions(F, w)) >= 2


def is_right_special(F: FactorSet, w: Word) -> bool:
    return len(right_extensions(F, w)) >= 2


def is_bispecial(F: FactorSet, w: Word) -> bool:
    return is_left_special(F, w) and is_right_special(F, w)


def is_biessential(F: FactorSet, up_to: int) -> bool:
    """Every member of length <= up_to extends by a letter on both sides."""
    return all(extension_pairs(F, w) for w in F.words_up_to(up_to))


def extension_graph(F: FactorSet, w: Word) -> BipartiteExtensionGraph:
    letters = [(a,) for a in range(len(F.alphabet))]
    return generalized_extension_graph(F, w, letters, letters)


def generalized_extension_graph(F: FactorSet, w: Word, U: Iterable[Word],
                                V: Iterable[Word]) -> BipartiteExtensionGraph:
    """G_{U,V}(w): left side {l in U | lw in F}, right side {r in V | wr in F},
    edge (l, r) whenever lwr is in F."""
    w = tuple(w)
    U = sorted({tuple(u) for u in U}, key=length_lex)
    V = sorted({tuple(v) for v in V}, key=length_lex)
    F.check_horizon(max(map(len, U), default=0) + len(w) + max(map(len, V), default=0),
                    "generalized extension graph")
    left = tuple(u for u in U if u + w in F)
    right = tuple(v for v in V if w + v in F)
    edges = frozenset((i, j) for i, u in enumerate(left) for j, v in enumerate(right)
                      if u + w + v in F)
    return BipartiteExtensionGraph(left, right, edges)


def is_tree(g: BipartiteExtensionGraph) -> bool:
    if g.n_vertices == 0:
        return False
    return len(g.edges) == g.n_vertices - 1 and len(g.components()) == 1


@dataclass(frozen=True)
class TreeReport:
    ok: bool
    checked: int
    word: Word | None = None
    graph: BipartiteExtensionGraph | None = None


def check_tree_condition(F: FactorSet, up_to: int) -> TreeReport:
    """Check G(w) is a tree for every w in F with |w| <= up_to.

    The first failure in length-lex order is reported.
    """
    F.check_horizon(up_to + 2, "tree condition")
    checked = 0
    for w in F.words_up_to(up_to):
        g = extension_graph(F, w)
        checked += 1
        if not is_tree(g):
            return TreeReport(False, checked, w, g)
    return TreeReport(True, checked)


def complexity(F: FactorSet, n: int) -> int:
    return len(F.words(n))


def bispecial_words(F: FactorSet, up_to: int) -> list:
    F.check_horizon(up_to + 1, "bispecial words")
    return [w for w in F.words_up_to(up_to) if is_bispecial(F, w)]


def enumerate_maximal_prefix_codes(F: FactorSet, max_word_len: int,
                                   after: Word = EMPTY) -> list:
    """All F-maximal prefix codes (or after⁻¹F-maximal) with words of length <= max_word_len.

    Such a code is a cut of the prefix tree of the language: from the root
    every node either becomes a codeword or is replaced by all its children.
    """
    after = tuple(after)
    F.check_horizon(len(after) + max_word_len, "maximal prefix codes")

    def children(p):
        return [p + (a,) for a in range(len(F.alphabet)) if after + p + (a,) in F]

    def cuts(p, depth):
        # codes for the subtree below p, p itself excluded from being a codeword
        options = [[]]
        for c in children(p):
            sub = [[c]]
            if depth + 1 < max_word_len and children(c):
                sub += cuts(c, depth + 1)
            options = [o + s for o in options for s in sub]
        return options

    if after not in F:
        return []
    codes = [tuple(sorted(c, key=length_lex)) for c in cuts(EMPTY, 0) if c]
    return sorted(set(codes), key=lambda c: [length_lex(w) for w in c])


def enumerate_maximal_suffix_codes(F: FactorSet, max_word_len: int,
                                   before: Word = EMPTY) -> list:
    """Suffix dual of :func:`enumerate_maximal_prefix_codes`."""
    before = tuple(before)
    F.check_horizon(len(before) + max_word_len, "maximal suffix codes")

    def parents(s):
        return [(a,) + s for a in range(len(F.alphabet)) if (a,) + s + before in F]

    def cuts(s, depth):
        options = [[]]
        for c in parents(s):
            sub = [[c]]
            if depth + 1 < max_word_len and parents(c):
                sub += cuts(c, depth + 1)
            options = [o + x for o in options for x in sub]
        return options

    if before not in F:
        return []
    codes = [tuple(sorted(c, key=length_lex)) for c in cuts(EMPTY, 0) if c]
    return sorted(set(codes), key=lambda c: [length_lex(w) for w in c])
