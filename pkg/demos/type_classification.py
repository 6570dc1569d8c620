"""
Type graphs
===========

Contract the non-special vertices of a Rauzy graph and match what is
left against the nine shapes a ternary tree set can produce.
"""

from treeset import classify_rauzy, fibonacci_block2, rauzy_graph, type_graph
from treeset.returns import finite_case_table_check, first_return_words, infinite_case_exponent

F = fibonacci_block2.factor_set(40)

for n in (1, 2, 3, 5):
    G = rauzy_graph(F, n)
    T = type_graph(G)
    for tc in classify_rauzy(G):
        x = tc.bispecial_vertex
        R = first_return_words(F, x)
        binds = " ".join(f"{k}={F.format(v)}" for k, v in sorted(tc.witness.items()))
        print(f"order {n}: {tc.tag} at {F.format(x)}  [{binds}]")
        print("   returns:", sorted(F.format(r) for r in R))
        if tc.tag.startswith("Infinite"):
            print("   exponent n =", infinite_case_exponent(R.as_set(), tc))
        else:
            print("   matches table:", finite_case_table_check(F, x, tc))
