"""
Return words in the Fibonacci set
=================================

First returns to aa, the shortest bispecial word around it, and the
conjugacy that links the two return sets.
"""

from treeset import fibonacci, first_return_words, shortest_bispecial_extension
from treeset.freegroup import is_basis_of_free_group
from treeset.returns import conjugacy_check, conjugate_by

# all factors up to length 40 of the Fibonacci word
F = fibonacci.factor_set(40)
x = F.parse("aa")

R = first_return_words(F, x)
print("R(aa) =", sorted(F.format(r) for r in R))

# grow aa on both sides while the extension is forced
u, v, y = shortest_bispecial_extension(F, x)
print("u =", F.format(u), " v =", F.format(v), " y =", F.format(y))

Ry = first_return_words(F, y)
print("R(y)  =", sorted(F.format(r) for r in Ry))
print("v R(y) v^-1 =", sorted(F.format(r) for r in conjugate_by(v, Ry)))
print("conjugacy holds:", conjugacy_check(F, x))

# both sets generate the free group on {a, b}
print("basis:", is_basis_of_free_group(R.words, 2))
