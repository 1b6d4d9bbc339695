import random

import pytest

from ribbonlink.errors import (FixedPointAlpha, LabelNotTwice, NonOrientable,
                               NotPermutation, UnknownEdge, WeightCoverage)
from ribbonlink.generators import random_edge_subset, random_map
from ribbonlink.maps import (ArrowPresentation, CombinatorialMap, Weight,
                             build_map, from_arrow_presentation, map_equal,
                             map_isomorphic)

LOOP = ([2, 1], [2, 1])                  # plane loop
BRIDGE = ([1, 2], [2, 1])                # single edge, two vertices
BOUQUET = ([3, 4, 2, 1], [2, 1, 4, 3])   # two interlaced loops, genus 1


def test_build_map_examples():
    assert build_map(*LOOP).counts() == (1, 1, 1, 2, (0,), 0)
    assert build_map(*BRIDGE).counts() == (2, 1, 1, 1, (0,), 0)
    assert build_map(*BOUQUET).counts() == (1, 2, 1, 1, (1,), 1)
    assert build_map([], [], isolated_vertices=1).counts() == (1, 0, 1, 1, (0,), 0)


def test_build_map_validation():
    with pytest.raises(NotPermutation):
        build_map([1, 1], [2, 1])
    with pytest.raises(FixedPointAlpha):
        build_map([2, 1], [1, 2])
    with pytest.raises(NotPermutation):
        build_map([2, 1, 3], [2, 1, 3])
    with pytest.raises(WeightCoverage):
        build_map([2, 1], [2, 1], weights={2: Weight("+")})


def test_weight_invariants():
    w = Weight.of(1, -1)
    assert (w.tait, w.oriented, w.cd) == ("+", "-", "d")
    assert w.tait_negated() == Weight("-", "-", "c")
    with pytest.raises(WeightCoverage):
        Weight("+", "+", "d")


def test_dual_examples():
    loop = build_map(*LOOP)
    assert map_equal(loop.dual(), build_map(*BRIDGE))
    assert map_equal(loop.dual().dual(), loop)
    bq = build_map(*BOUQUET)
    assert bq.dual().counts().g == 1


def test_dual_random_properties():
    rng = random.Random(11)
    for _ in range(40):
        g = random_map(rng, max_edges=10, weighted=True)
        c, cd = g.counts(), g.dual().counts()
        assert (cd.v, cd.p, cd.e, cd.k, cd.g) == (c.p, c.v, c.e, c.k, c.g)
        assert map_equal(g.dual().dual(), g)


def test_delete_edges():
    # triangle: vertices (1,6), (2,3), (4,5); edges 1={1,2}, 2={3,4}, 3={5,6}
    tri = build_map([6, 3, 2, 5, 4, 1], [2, 1, 4, 3, 6, 5])
    assert tri.counts() == (3, 3, 1, 2, (0,), 0)
    assert map_equal(tri.delete_edges([]), tri, weights=False)
    path = tri.delete_edges([2])
    assert path.counts() == (3, 2, 1, 1, (0,), 0)
    empty = tri.delete_edges([1, 2, 3])
    assert empty.counts() == (3, 0, 3, 3, (0, 0, 0), 0)
    with pytest.raises(UnknownEdge):
        tri.delete_edges([7])


def test_arrow_presentation_round_trip():
    rng = random.Random(3)
    for _ in range(60):
        g = random_map(rng, max_edges=12, weighted=True)
        assert map_equal(from_arrow_presentation(g.to_arrow_presentation()), g)


def test_bridge_presentation_shape():
    ap = build_map(*BRIDGE).to_arrow_presentation()
    assert sorted(len(c) for c in ap.cycles) == [1, 1]
    assert {lab for c in ap.cycles for lab, _ in c} == {1}


def test_presentation_errors():
    with pytest.raises(LabelNotTwice):
        ArrowPresentation([[(1, 1)]])
    with pytest.raises(NonOrientable):
        from_arrow_presentation(ArrowPresentation([[(1, 1), (1, -1)]]))


def test_reversed_cycle_is_same_graph():
    # a cycle written backwards describes the same ribbon graph
    ap1 = ArrowPresentation([[(1, 1), (2, 1)], [(1, 1), (2, 1)]])
    ap2 = ArrowPresentation([[(1, 1), (2, 1)], [(2, -1), (1, -1)]])
    assert map_equal(from_arrow_presentation(ap1), from_arrow_presentation(ap2))


def test_canonical_presentation_idempotent():
    rng = random.Random(4)
    for _ in range(30):
        ap = random_map(rng, max_edges=8).to_arrow_presentation()
        c1 = ap.canonical()
        assert c1.canonical().cycles == c1.cycles


def test_partial_dual_examples():
    bq = build_map(*BOUQUET)
    assert map_equal(bq.partial_dual([]), bq)
    assert map_equal(bq.partial_dual([1, 2]), bq.dual())
    assert bq.partial_dual([1]).counts().g == 0
    with pytest.raises(UnknownEdge):
        bq.partial_dual([9])


def test_partial_dual_axioms_randomized():
    rng = random.Random(12)
    for _ in range(120):
        g = random_map(rng, max_edges=10, weighted=True)
        A = random_edge_subset(rng, g)
        B = random_edge_subset(rng, g)
        ga = g.partial_dual(A)
        assert map_equal(ga.partial_dual(B), g.partial_dual(A ^ B))
        assert ga.counts().k == g.counts().k
        # genus formula and its A <-> A^c symmetry
        c = g.counts()
        pa = g.delete_edges(set(g.edge_labels) - A).counts().p
        pac = g.delete_edges(A).counts().p
        assert 2 * ga.counts().g == 2 * c.k + c.e - pa - pac
        assert ga.counts().g == g.partial_dual(set(g.edge_labels) - A).counts().g
        for lab in g.edge_labels:
            want = g.weights[lab].tait_negated() if lab in A else g.weights[lab]
            assert ga.weights[lab] == want


def test_underlying_graph():
    loop = build_map(*LOOP)
    ug = loop.underlying_graph()
    assert ug.n == 1 and ug.edges == ((0, 0),)
    theta = build_map(*BOUQUET).partial_dual([1])  # any 2-edge map is fine
    g = theta.underlying_graph()
    assert g.m == 2
    # partial duals keep the edge id set
    assert sorted(g.labels) == sorted(theta.edge_labels)


def test_json_round_trip():
    rng = random.Random(9)
    for _ in range(25):
        g = random_map(rng, max_edges=8, weighted=True)
        h = CombinatorialMap.from_json_dict(g.to_json_dict())
        assert map_equal(g, h)
    iso = build_map([], [], isolated_vertices=2)
    assert CombinatorialMap.from_json_dict(iso.to_json_dict()).counts() == iso.counts()


def test_map_isomorphism_vs_equality():
    rng = random.Random(31)
    g = random_map(rng, max_edges=6, weighted=False, connected=True)
    # relabel the edges: isomorphic but not label-equal (unless trivial)
    shift = {lab: lab + 100 for lab in g.edge_labels}
    h = g.relabel_edges(shift)
    assert map_isomorphic(g, h, weights=False)
    tri = build_map([6, 3, 2, 5, 4, 1], [2, 1, 4, 3, 6, 5])
    theta = tri.dual()
    assert not map_isomorphic(tri, theta, weights=False)
