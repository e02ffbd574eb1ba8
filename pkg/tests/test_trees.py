import random

import pytest

from cubical import trees
from cubical.operad import EMPTY_A, MU, ONE, AElement, circ

s1, s2 = trees.star(1), trees.star(2)


def test_graft_examples():
    g = trees.graft(s2, 1, s2)
    assert g.n == 3 and g.internal_nodes == 2
    assert str(g) == "((* *) *)"
    u = trees.graft(s2, 2, None)
    assert u.n == 1 and u.undistinguished == 1
    with pytest.raises(trees.TreeError):
        trees.graft(s2, 3, s2)


def test_contraction_examples():
    g = trees.graft(s2, 1, s2)
    pt = trees.TreePoint(g, (MU, MU))
    assert trees.contract(trees.Contraction(g, frozenset()), pt) == pt
    edge = trees.graft_data(s2, 1, s2).edge
    out = trees.contract(trees.Contraction(g, frozenset({edge})), pt)
    assert out.tree == trees.star(3) and out.decorations == (circ(MU, 1, MU),)
    u = trees.graft(s2, 2, None)
    assert trees.evaluate(trees.TreePoint(u, (MU,))) == AElement.of((0, MU.intervals[0].hi))


def test_arity_mismatch():
    with pytest.raises(trees.TreeError):
        trees.TreePoint(s2, (ONE,))


def test_tree_json_round_trip():
    t = trees.graft(trees.graft(s2, 1, s2), 3, None)
    assert trees.PlanarTree.from_json(t.to_json()) == t
    assert trees.PlanarTree.from_json(None) is None


def test_eta_round_trip():
    rng = random.Random(3)
    t = trees.graft(s2, 2, s2)
    pt = trees.random_point(rng, t)
    p1, p2 = trees.eta(s2, 2, s2, pt)
    assert trees.eta_inv(p1, 2, p2) == pt
    assert trees.iota(trees.TreePoint(s2, (MU,)))[0].decorations == (ONE,)


def test_enumeration_and_catalan():
    poset = trees.enumerate_Tn(1, 1)
    assert s1 in poset.trees
    for n in range(2, 7):
        binary = [t for t in trees.trees_with(n, n - 1, min_valence=2) if set(t.valences) == {2}]
        assert len(binary) == trees.catalan(n - 1)
    dot = trees.enumerate_Tn(2, 2).to_dot()
    assert dot.startswith("digraph")


def test_associahedra():
    assert trees.associahedron_faces(2).f_vector == [1]
    assert trees.associahedron_faces(3).f_vector == [2, 1]
    assert trees.associahedron_faces(4).f_vector == [5, 5, 1]
    assert trees.associahedron_faces(2, indexing="shifted").f_vector == [2, 1]
    for n in range(2, 9):
        k = trees.associahedron_faces(n)
        assert k.f_vector[0] == trees.catalan(n - 1)
        assert k.euler_characteristic == 1
    with pytest.raises(ValueError):
        trees.associahedron_faces(1)


def test_small_coherence_run():
    rep = trees.check_partial_lax_coherence(n_max=2, trials=30, seed=5)
    assert rep.passed, rep.failures[:3]
    assert rep.checks["left unit triangle"] > 0 and rep.checks["transitivity square (sequential)"] > 0
