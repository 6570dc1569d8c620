"""
Quotients of Rauzy graphs
=========================

Collapsing G_2 of the block-coded Fibonacci word by the equivalence read
from extension graphs gives back G_1.
"""

from treeset import fibonacci_block2, quotient, rauzy_graph, theta_equivalence
from treeset.graphs import graphs_isomorphic

F = fibonacci_block2.factor_set(40)

G2 = rauzy_graph(F, 2)
print("G_2 edges:")
for x, a, y in sorted(G2.edges):
    print(f"  {F.format(x)} -{F.format((a,))}-> {F.format(y)}")

classes = theta_equivalence(F, 2)
print("classes:", [[F.format(w) for w in c] for c in classes])

Q = quotient(G2.as_labeled(), classes)
print("quotient has", len(Q.vertices), "vertices")
print("isomorphic to G_1:", graphs_isomorphic(Q, rauzy_graph(F, 1).as_labeled()))

# the same holds at every order tested
print(all(graphs_isomorphic(quotient(rauzy_graph(F, n).as_labeled(), theta_equivalence(F, n)),
                            rauzy_graph(F, n - 1).as_labeled())
          for n in range(1, 9)))
