"""
Chacon: a negative control
==========================

The Chacon set has the same complexity 2n+1 as a ternary tree set but
fails the tree condition, and its return sets are not bases.
"""

from treeset import chacon, check_tree_condition, complexity, first_return_words
from treeset.freegroup import is_basis_of_free_group
from treeset.graphs import graphs_isomorphic, quotient
from treeset.rauzy import rauzy_graph, theta_equivalence

F = chacon.factor_set(60)
print("complexity:", [complexity(F, n) for n in range(9)])

report = check_tree_condition(F, 6)
print("tree condition:", report.ok, " first failure at:", repr(F.format(report.word)))
print(report.graph.to_dot(lambda w: F.format(w) or "ε"))

Q = quotient(rauzy_graph(F, 1).as_labeled(), theta_equivalence(F, 1))
print("G_1 / theta_1 vertices:", len(Q.vertices),
      " isomorphic to G_0:", graphs_isomorphic(Q, rauzy_graph(F, 0).as_labeled()))

bad = [F.format(x) for x in F.words_up_to(3)
       if not is_basis_of_free_group(first_return_words(F, x).words, 3)]
print("words whose return set is not a basis:", bad)
