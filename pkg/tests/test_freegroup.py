import random

import pytest

from treeset.errors import DisconnectedGraph, NotFolded
from treeset.freegroup import (GroupElement, StallingsGraph, bouquet, contains_element,
                               group_of_graph, is_basis_of_free_group, rank, reduce,
                               spanning_tree_basis, subgroup_graph)
from treeset.graphs import LabeledGraph, canonical_form
from treeset.words import Alphabet

ABC = Alphabet.of("abc")
UVW = Alphabet.of("uvw")
AB = Alphabet.of("ab")


def E(text, A=ABC):
    return GroupElement.parse(text, A)


def brute_generated_letters(gens, k, half_depth=4):
    """Letters that are products of at most 2 * half_depth generators or inverses.

    Meet in the middle: a = p q with p, q in the ball B of radius half_depth
    iff p⁻¹ a lies in B.
    """
    pool = [g for g in gens] + [g.inverse() for g in gens]
    ball = {GroupElement()}
    frontier = {GroupElement()}
    for _ in range(half_depth):
        frontier = {f * g for f in frontier for g in pool} - ball
        ball |= frontier
    letters = set()
    for a in range(k):
        x = GroupElement(((a, 1),))
        if any(p.inverse() * x in ball for p in ball):
            letters.add(a)
    return letters


def test_reduce():
    assert reduce([(0, 1), (1, 1), (1, -1)]) == GroupElement(((0, 1),))
    assert reduce([]) == GroupElement()
    ba, aba = E("ba", AB), E("aba", AB)
    assert ba * aba * ba.inverse() == E("baa", AB)
    assert E("ab'ba", AB) == E("aa", AB)


def test_element_rejects_unreduced():
    with pytest.raises(ValueError):
        GroupElement(((0, 1), (0, -1)))


def test_rose_from_letters():
    g = subgroup_graph([E("a"), E("b"), E("c")], ABC)
    assert g.is_rose(3)
    assert rank(g) == 3


@pytest.mark.parametrize("gens,A", [(["baa", "babaa"], AB), (["v", "uwv", "uwwv"], UVW),
                                    (["uwwv", "vuwv", "vuwwv"], UVW)])
def test_return_sets_fold_to_rose(gens, A):
    els = [E(g, A) for g in gens]
    assert brute_generated_letters(els, len(A)) == set(range(len(A)))
    assert subgroup_graph(els, A).is_rose(len(A))
    assert is_basis_of_free_group(els, A)


def test_rank_examples():
    empty = StallingsGraph({0}, set(), 0, folded=True)
    assert rank(empty) == 0
    g = subgroup_graph([E("aba", AB), E("baaba", AB)], AB)
    assert rank(g) == 2
    h = subgroup_graph([E("aa", AB), E("bab", AB)], AB)
    assert rank(h) == 2 and not h.is_rose(2)


def test_membership():
    assert contains_element(subgroup_graph([E("a"), E("b"), E("c")], ABC), E("ab'c'ca"))
    h = subgroup_graph([E("a", AB)], AB)
    assert contains_element(h, E("aa", AB))
    assert not contains_element(h, E("b", AB))
    UVWT = Alphabet.of("uvwt")
    h = subgroup_graph([E("u", UVWT), E("vt", UVWT), E("vwt", UVWT)], UVWT)
    assert contains_element(h, E("vwwt", UVWT))
    assert not contains_element(h, E("w", UVWT))


def test_basis_negative_cases():
    assert is_basis_of_free_group([E("a"), E("b"), E("c")], ABC)
    assert not is_basis_of_free_group([E("a"), E("b")], ABC)
    assert not is_basis_of_free_group([E("aa", AB), E("b", AB)], AB)
    assert not is_basis_of_free_group([E("a", AB), E("b", AB), E("ab", AB)], AB)


def test_not_folded_errors():
    g = bouquet([E("ab"), E("a")])
    with pytest.raises(NotFolded):
        rank(g)
    with pytest.raises(NotFolded):
        contains_element(g, E("a"))


def test_group_of_graph_examples():
    g0 = LabeledGraph(("e",), frozenset(("e", (a,), "e") for a in range(3)))
    assert set(group_of_graph(g0, "e")) == {E("a"), E("b"), E("c")}
    loops = LabeledGraph(("e",), frozenset({("e", (0,), "e"), ("e", (1,), "e")}))
    assert set(group_of_graph(loops, "e")) == {E("a", AB), E("b", AB)}
    with pytest.raises(DisconnectedGraph):
        group_of_graph(LabeledGraph((0, 1), frozenset({(0, (0,), 0)})), 0)


def test_chacon_g1_group_has_rank_two(cha):
    from treeset.rauzy import rauzy_graph
    G = rauzy_graph(cha, 1).as_labeled()
    for v in G.vertices:
        basis = group_of_graph(G, v)
        assert len(basis) == 2
        assert not is_basis_of_free_group(basis, ABC)


def _random_element(rng, k, max_len):
    while True:
        letters = [(rng.randrange(k), rng.choice((1, -1))) for _ in range(rng.randint(1, max_len))]
        g = reduce(letters)
        if not g.is_identity():
            return g


def _random_gens(rng):
    k = rng.randint(1, 4)
    return k, [_random_element(rng, k, 8) for _ in range(rng.randint(1, 6))]


@pytest.mark.parametrize("seed", range(200))
def test_folding_is_confluent(seed):
    rng = random.Random(seed)
    k, gens = _random_gens(rng)
    a = bouquet(gens).fold().to_labeled()
    b = bouquet(gens).fold(random.Random(seed + 1000)).to_labeled()
    c = bouquet(gens).fold(random.Random(seed + 2000)).to_labeled()
    assert canonical_form(a) == canonical_form(b) == canonical_form(c)


@pytest.mark.parametrize("seed", range(50))
def test_subgroup_contains_generators_and_products(seed):
    rng = random.Random(seed)
    k, gens = _random_gens(rng)
    H = subgroup_graph(gens, k)
    pool = gens + [g.inverse() for g in gens]
    assert all(contains_element(H, g) for g in gens)
    for _ in range(30):
        prod = GroupElement()
        for _ in range(rng.randint(1, 3)):
            prod = prod * rng.choice(pool)
        assert contains_element(H, prod)


@pytest.mark.parametrize("seed", range(50))
def test_single_fold_step_preserves_group(seed):
    rng = random.Random(seed)
    k, gens = _random_gens(rng)
    g = bouquet(gens)
    before = spanning_tree_basis(g)
    g.fold_step(rng)
    after = spanning_tree_basis(g)
    H_before, H_after = subgroup_graph(before, k), subgroup_graph(after, k)
    assert all(contains_element(H_before, x) for x in after)
    assert all(contains_element(H_after, x) for x in before)


def _random_basis(rng, k, moves):
    basis = [GroupElement(((a, 1),)) for a in range(k)]
    for _ in range(moves):
        i, j = rng.sample(range(k), 2)
        gj = basis[j] if rng.random() < 0.5 else basis[j].inverse()
        basis[i] = basis[i] * gj if rng.random() < 0.5 else gj * basis[i]
    return basis


@pytest.mark.parametrize("seed", range(100))
def test_nielsen_moves_keep_a_basis(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 4)
    basis = _random_basis(rng, k, rng.randint(0, 6))
    assert is_basis_of_free_group(basis, k)
    i, j = rng.sample(range(k), 2)
    moved = list(basis)
    moved[i] = basis[i] * basis[j]
    assert is_basis_of_free_group(moved, k)
    H = subgroup_graph(moved, k)
    assert rank(H) == k
    assert all(contains_element(H, GroupElement(((a, 1),))) for a in range(k))


def test_core_keeps_base_of_degree_one():
    g = subgroup_graph([E("aba'")], ABC)
    assert g.base in g.vertices
    assert rank(g) == 1
    assert contains_element(g, E("ab'a'"))
