"""
Stallings folding
=================

Folding a Rauzy graph of the Tribonacci set ends at the rose, so the
labels of closed paths at any vertex generate the whole free group.
"""

import random

from treeset import GroupElement, rauzy_graph, stallings_fold, tribonacci
from treeset.freegroup import group_of_graph, is_basis_of_free_group, subgroup_graph, rank
from treeset.rauzy import is_rose
from treeset.words import Alphabet

F = tribonacci.factor_set(40)
G = rauzy_graph(F, 4).as_labeled()
print("G_4:", len(G.vertices), "vertices,", len(G.edges), "edges")

folded = stallings_fold(G.with_base(G.vertices[0]))
print("folded to the rose:", is_rose(folded, 3))

# fold order does not matter
again = stallings_fold(G.with_base(G.vertices[0]), random.Random(7))
print("same result with random fold order:", is_rose(again, 3))

basis = group_of_graph(G, G.vertices[0])
print("free basis from a spanning tree has", len(basis), "elements")

# subgroup membership and rank from generators
A = Alphabet.of("ab")
H = subgroup_graph([GroupElement.parse(g, A) for g in ("aa", "bab")], A)
print("<aa, bab> rank:", rank(H))
print("{aba, baaba} is a basis:",
      is_basis_of_free_group([GroupElement.parse(g, A) for g in ("aba", "baaba")], A))
