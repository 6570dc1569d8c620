import random

import pytest

from treeset.errors import NoSpecialVertex
from treeset.extension import check_tree_condition
from treeset.freegroup import is_basis_of_free_group
from treeset.graphs import LabeledGraph, canonical_form, graphs_isomorphic, quotient
from treeset.rauzy import (TEMPLATES, classify_rauzy, classify_type, first_return_labels,
                           rauzy_graph, is_rose,
                           is_strongly_connected, reduce_infinite2, rose, stallings_fold,
                           template_graph, theta_equivalence, type_graph)
from treeset.freegroup import group_of_graph
from treeset.words import EMPTY, Alphabet, FactorSet, factors


def edges_of(F, G):
    """Edge set of a RauzyGraph or word-vertex LabeledGraph as strings."""
    out = set()
    for s, l, t in G.edges:
        label = F.format((l,)) if isinstance(l, int) else F.format(l)
        out.add((F.format(s), label, F.format(t)))
    return out


def classes_of(F, classes):
    return {frozenset(F.format(w) for w in c) for c in classes}


def test_g0_is_single_vertex_with_loops(trib):
    G = rauzy_graph(trib, 0)
    assert G.vertices == (EMPTY,)
    assert edges_of(trib, G) == {("", "a", ""), ("", "b", ""), ("", "c", "")}


def test_fib2_g1_and_g2_edges(fib2):
    assert edges_of(fib2, rauzy_graph(fib2, 1)) == {
        ("v", "v", "v"), ("v", "u", "u"), ("u", "w", "w"), ("w", "w", "w"), ("w", "v", "v")}
    assert edges_of(fib2, rauzy_graph(fib2, 2)) == {
        ("wv", "v", "vv"), ("vv", "u", "vu"), ("vu", "w", "uw"), ("uw", "v", "wv"),
        ("uw", "w", "ww"), ("ww", "v", "wv"), ("wv", "u", "vu")}


def test_chacon_g1_edges(cha):
    assert edges_of(cha, rauzy_graph(cha, 1)) == {
        ("a", "a", "a"), ("a", "b", "b"), ("b", "c", "c"), ("c", "a", "a"), ("c", "b", "b")}


@pytest.mark.parametrize("name", ["fib", "trib", "cha", "fib2"])
def test_rauzy_graphs_strongly_connected(name, request):
    F = request.getfixturevalue(name)
    assert all(is_strongly_connected(rauzy_graph(F, n)) for n in range(10))


def test_strong_connectivity_small():
    assert is_strongly_connected(LabeledGraph((0,), frozenset({(0, (0,), 0)})))
    assert not is_strongly_connected(LabeledGraph((0, 1), frozenset({(0, (0,), 1)})))


def test_theta_classes(fib2, cha):
    assert classes_of(fib2, theta_equivalence(fib2, 2)) == {
        frozenset({"wv", "vv"}), frozenset({"uw", "ww"}), frozenset({"vu"})}
    assert classes_of(cha, theta_equivalence(cha, 1)) == {frozenset({"a", "c"}), frozenset({"b"})}
    with pytest.raises(ValueError):
        theta_equivalence(fib2, 0)


def test_theta_is_identity_when_no_left_special():
    A = Alphabet.of("ab")
    p = A.parse("ab" * 40)
    F = FactorSet(A, 6, factors(p, 6))
    # ℓ(x) = 1 for every x of length 1 in (ab)^ω
    assert all(len(c) == 1 for c in theta_equivalence(F, 2))


def test_quotient_fib2_order2(fib2):
    G2 = rauzy_graph(fib2, 2).as_labeled()
    q = quotient(G2, theta_equivalence(fib2, 2))
    assert graphs_isomorphic(q, rauzy_graph(fib2, 1).as_labeled())


def test_quotient_chacon_order1(cha):
    q = quotient(rauzy_graph(cha, 1).as_labeled(), theta_equivalence(cha, 1))
    assert len(q.vertices) == 2
    ac = frozenset({cha.parse("a"), cha.parse("c")})
    b = frozenset({cha.parse("b")})
    assert q.edges == {(ac, (0,), ac), (ac, (1,), b), (b, (2,), ac)}
    assert not graphs_isomorphic(q, rauzy_graph(cha, 0).as_labeled())


def test_identity_quotient(trib):
    G = rauzy_graph(trib, 3).as_labeled()
    assert graphs_isomorphic(quotient(G, [[v] for v in G.vertices]), G)


@pytest.mark.parametrize("name", ["trib", "fib2", "fib"])
def test_quotient_recovers_previous_order(name, request):
    F = request.getfixturevalue(name)
    assert check_tree_condition(F, 9).ok
    for n in range(1, 11):
        q = quotient(rauzy_graph(F, n).as_labeled(), theta_equivalence(F, n))
        assert graphs_isomorphic(q, rauzy_graph(F, n - 1).as_labeled())


def test_graph_isomorphic_to_itself(fib2):
    G = rauzy_graph(fib2, 4).as_labeled()
    assert graphs_isomorphic(G, G)


@pytest.mark.parametrize("n", range(0, 7))
def test_tribonacci_folds_to_rose(trib, n):
    assert is_rose(stallings_fold(rauzy_graph(trib, n).as_labeled()), 3)


def test_rose_is_a_fixpoint():
    r = rose(3)
    folded = stallings_fold(r)
    assert graphs_isomorphic(folded.with_base(None), r.with_base(None))


def test_fib2_g2_folds_through_g1_to_rose(fib2):
    G2 = rauzy_graph(fib2, 2).as_labeled()
    G1 = rauzy_graph(fib2, 1).as_labeled()
    assert graphs_isomorphic(quotient(G2, theta_equivalence(fib2, 2)), G1)
    assert is_rose(stallings_fold(G2), 3)
    assert is_rose(stallings_fold(G1), 3)


@pytest.mark.parametrize("name", ["trib", "fib2", "fib"])
def test_folded_rauzy_graph_is_rose_for_tree_sets(name, request):
    F = request.getfixturevalue(name)
    k = len(F.letters())
    for n in range(0, 9):
        G = rauzy_graph(F, n).as_labeled()
        assert is_rose(stallings_fold(G), k)
        v = G.vertices[len(G.vertices) // 2]
        assert is_basis_of_free_group(group_of_graph(G, v), k)


@pytest.mark.parametrize("seed", range(20))
def test_rauzy_folding_confluent(fib2, seed):
    G = rauzy_graph(fib2, 1 + seed % 6).as_labeled()
    G = G.with_base(G.vertices[seed % len(G.vertices)])
    a = stallings_fold(G)
    b = stallings_fold(G, random.Random(seed))
    assert canonical_form(a) == canonical_form(b)


def test_chacon_folds_to_quotient_not_rose(cha):
    folded = stallings_fold(rauzy_graph(cha, 1).as_labeled())
    assert not is_rose(folded, 3)
    q = quotient(rauzy_graph(cha, 1).as_labeled(), theta_equivalence(cha, 1))
    assert graphs_isomorphic(folded.with_base(None), q)


def test_type_graph_fib2_g1(fib2):
    T = type_graph(rauzy_graph(fib2, 1))
    assert edges_of(fib2, T) == {("v", "v", "v"), ("w", "w", "w"), ("v", "uw", "w"),
                                 ("w", "v", "v")}


def test_type_graph_fib2_g2_g3_g5(fib2):
    assert edges_of(fib2, type_graph(rauzy_graph(fib2, 2))) == {
        ("wv", "vu", "vu"), ("wv", "u", "vu"), ("vu", "w", "uw"), ("uw", "v", "wv"),
        ("uw", "wv", "wv")}
    assert edges_of(fib2, type_graph(rauzy_graph(fib2, 3))) == {
        ("vuw", "vv", "wvv"), ("vuw", "wv", "wwv"), ("wwv", "v", "wvv"), ("wvv", "uw", "vuw"),
        ("wwv", "uw", "vuw")}
    assert edges_of(fib2, type_graph(rauzy_graph(fib2, 5))) == {
        ("wvvuw", "vvuw", "wvvuw"), ("vuwwv", "uwwv", "vuwwv"), ("wvvuw", "wv", "vuwwv"),
        ("vuwwv", "vuw", "wvvuw")}


def test_type_graph_of_cycle_raises():
    A = Alphabet.of("ab")
    F = FactorSet(A, 6, factors(A.parse("ab" * 40), 6))
    with pytest.raises(NoSpecialVertex):
        type_graph(rauzy_graph(F, 2))


@pytest.mark.parametrize("tag", sorted(TEMPLATES))
def test_templates_classify_as_themselves(tag):
    T = template_graph(tag)
    tc = classify_type(T, "x")
    assert tc.tag == tag
    names = sorted({n for _, n, _ in TEMPLATES[tag]})
    assert set(tc.witness) == set(names)


def test_templates_pairwise_distinct():
    forms = {canonical_form(template_graph(tag).with_base("x")) for tag in TEMPLATES}
    assert len(forms) == len(TEMPLATES)


def test_unmatched_graph_is_other():
    g = LabeledGraph(("x",), frozenset({("x", (0,), "x"), ("x", (1,), "x")}))
    assert classify_type(g, "x").tag == "Other"


def _classified(F, n, x):
    T = type_graph(rauzy_graph(F, n))
    return classify_type(T, F.parse(x))


def test_classification_fib2(fib2):
    tc = _classified(fib2, 1, "v")
    assert tc.tag == "Infinite1"
    assert {k: fib2.format(v) for k, v in tc.witness.items()} == {
        "u": "v", "v": "uw", "w": "w", "t": "v"}
    assert _classified(fib2, 5, "wvvuw").tag == "Infinite1"
    assert _classified(fib2, 2, "wv").tag == "Finite6"
    assert _classified(fib2, 3, "vuw").tag == "Finite5"


@pytest.mark.parametrize("name", ["trib", "fib2"])
def test_bundled_tree_sets_never_classify_other(name, request):
    F = request.getfixturevalue(name)
    for n in range(0, 20):
        for tc in classify_rauzy(rauzy_graph(F, n)):
            assert tc.tag != "Other"


@pytest.mark.parametrize("order", [1, 7])
def test_infinite2_rewrite_keeps_first_return_labels(cha, order):
    results = [tc for tc in classify_rauzy(rauzy_graph(cha, order)) if tc.tag == "Infinite2"]
    assert results
    for tc in results:
        T = type_graph(rauzy_graph(cha, order))
        g, _ = reduce_infinite2(tc)
        bound = 40
        assert first_return_labels(T, tc.bispecial_vertex, bound) == first_return_labels(g, "x", bound)


def test_rauzy_dot_marks_base(fib2):
    G = rauzy_graph(fib2, 1).as_labeled()
    dot = G.with_base(G.vertices[0]).to_dot(fib2.format)
    assert "doublecircle" in dot and 'label="uw"' not in dot
    assert dot == G.with_base(G.vertices[0]).to_dot(fib2.format)
