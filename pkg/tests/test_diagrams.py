import random

import pytest

from ribbonlink.catalog import CATALOG
from ribbonlink.diagrams import (all_states, canonical_states, checkerboard,
                                 crossing_signs, parse_pd, parse_state,
                                 seifert_data, state_dual_set,
                                 state_ribbon_graph, tait_graph)
from ribbonlink.errors import (ArcCount, BadOrientation, Disconnected,
                               NonPlanar)
from ribbonlink.generators import random_diagram
from ribbonlink.maps import map_equal

KINK = CATALOG["kink"]
HOPF = CATALOG["hopf"]
TREFOIL = CATALOG["trefoil"]
FIG8 = CATALOG["figure8"]


def test_parse_examples():
    d = parse_pd(TREFOIL)
    assert (d.n, len(d.components), len(d.faces)) == (3, 1, 5)
    k = parse_pd(KINK)
    assert (k.n, len(k.faces)) == (1, 3)
    h = parse_pd(HOPF)
    assert (h.n, len(h.components)) == (2, 2)


def test_parse_errors():
    with pytest.raises(Disconnected):
        parse_pd("X(1,2,2,1) X(3,4,4,3)")
    with pytest.raises(ArcCount):
        parse_pd("X(1,2,3,1)")
    with pytest.raises(ArcCount):
        parse_pd("X(1,2,2,1) garbage")
    with pytest.raises(BadOrientation):
        parse_pd("X(1,2,3,4) X(2,1,4,3)")
    with pytest.raises(NonPlanar):
        parse_pd("X(4,2,1,3) X(3,2,4,1)")
    with pytest.raises(ArcCount):
        parse_pd("# only a comment")


def test_comments_and_brackets():
    d = parse_pd("# trefoil\nX[1,4,2,5], X[3,6,4,1]\nX(5,2,6,3)")
    assert d.n == 3


def test_checkerboard():
    k = parse_pd(KINK)
    c1, c2 = checkerboard(k)
    assert len(c1.colors) == 3
    assert all(a != b for a, b in zip(c1.colors, c2.colors))
    assert c2.swapped().colors == c1.colors
    t = parse_pd(TREFOIL)
    c1, c2 = checkerboard(t)
    assert sorted((len(c1.black_faces()), len(c2.black_faces()))) == [2, 3]


def test_crossing_signs_properties():
    for pd in (KINK, HOPF, TREFOIL, FIG8):
        d = parse_pd(pd)
        c1, c2 = checkerboard(d)
        s1, s2 = crossing_signs(d, c1), crossing_signs(d, c2)
        for ci in s1:
            assert s1[ci][0] == -s2[ci][0]      # colour swap negates m
            assert s1[ci][1] == s2[ci][1]       # and fixes the oriented sign
        # reversing every component fixes the oriented sign
        full = frozenset(range(len(d.components)))
        sr = crossing_signs(d, c1, full)
        assert all(sr[ci][1] == s1[ci][1] for ci in s1)
    tre = crossing_signs(parse_pd(TREFOIL), checkerboard(parse_pd(TREFOIL))[0])
    assert len({m for m, _ in tre.values()}) == 1   # alternating: one Tait sign


def test_tait_graphs():
    d = parse_pd(TREFOIL)
    c1, c2 = checkerboard(d)
    t1, t2 = tait_graph(d, c1), tait_graph(d, c2)
    got = sorted([(t1.counts().v, t1.counts().p), (t2.counts().v, t2.counts().p)])
    assert got == [(2, 3), (3, 2)]      # theta and triangle
    assert t1.is_plane and t2.is_plane
    assert map_equal(t1, t2.dual())     # duality moves the weights correctly


def test_state_graphs():
    d = parse_pd(TREFOIL)
    c1, _ = checkerboard(d)
    allA = state_ribbon_graph(d, parse_state("AAA", 3), c1)
    c = allA.counts()
    assert (c.e, c.g, c.v + c.p) == (3, 0, 5)
    k = parse_pd(KINK)
    ck, _ = checkerboard(k)
    shapes = sorted(state_ribbon_graph(k, st, ck).counts().v
                    for st in all_states(1))
    assert shapes == [1, 2]             # the loop and the bridge


def test_tait_states():
    for pd in (KINK, HOPF, TREFOIL, FIG8):
        d = parse_pd(pd)
        for coloring in checkerboard(d):
            states = canonical_states(d, coloring)
            t_black = tait_graph(d, coloring)
            t_white = tait_graph(d, coloring.swapped())
            assert map_equal(
                state_ribbon_graph(d, states["tait_black"], coloring), t_black)
            assert map_equal(
                state_ribbon_graph(d, states["tait_white"], coloring), t_white)
            # the black-following state has dual set empty
            assert state_dual_set(d, states["tait_black"], coloring) == frozenset()
            signs = crossing_signs(d, coloring)
            assert state_dual_set(d, states["allA"], coloring) == frozenset(
                ci for ci, (m, _s) in signs.items() if m > 0)
            assert state_dual_set(d, states["allB"], coloring) == frozenset(
                ci for ci, (m, _s) in signs.items() if m < 0)
            assert state_dual_set(d, states["seifert"], coloring) == frozenset(
                ci for ci, (m, s) in signs.items() if m == s)


def test_all_states_are_partial_duals():
    rng = random.Random(77)
    diagrams = [parse_pd(p) for p in
                (KINK, HOPF, TREFOIL, FIG8, CATALOG["nonalt6"])]
    diagrams += [random_diagram(rng, rng.randint(2, 8)) for _ in range(6)]
    for d in diagrams:
        coloring, _ = checkerboard(d)
        T = tait_graph(d, coloring)
        states = (all_states(d.n) if d.n <= 6 else
                  [tuple(rng.choice("AB") for _ in range(d.n)) for _ in range(8)])
        for st in states:
            A = state_dual_set(d, st, coloring)
            assert map_equal(T.partial_dual(A), state_ribbon_graph(d, st, coloring))


def test_seifert_state_is_coloring_independent():
    for pd in (TREFOIL, FIG8, CATALOG["nonalt6"]):
        d = parse_pd(pd)
        c1, c2 = checkerboard(d)
        assert (canonical_states(d, c1)["seifert"]
                == canonical_states(d, c2)["seifert"])
        s1 = state_ribbon_graph(d, canonical_states(d, c1)["seifert"], c1)
        s2 = state_ribbon_graph(d, canonical_states(d, c2)["seifert"], c2)
        assert map_equal(s1, s2)
        assert all(w.tait != w.oriented for w in s1.weights.values())


def test_seifert_data_examples():
    f8 = seifert_data(parse_pd(FIG8))
    c = f8["seifert_map"].counts()
    assert (f8["circle_count"], c.g, c.p) == (3, 1, 1)
    kk = seifert_data(parse_pd(KINK))
    assert (kk["circle_count"], kk["genus"]) == (2, 0)
    tr = seifert_data(parse_pd(TREFOIL))
    assert tr["circle_count"] == 2
    theta = tr["graph"]
    assert (theta.n, theta.m) == (2, 3) and theta.is_bipartite()


def test_state_graph_circle_and_edge_counts():
    rng = random.Random(6)
    for _ in range(12):
        d = random_diagram(rng, rng.randint(1, 7))
        coloring, _ = checkerboard(d)
        st = tuple(rng.choice("AB") for _ in range(d.n))
        from ribbonlink.diagrams import state_circles
        g = state_ribbon_graph(d, st, coloring)
        assert g.counts().v == len(state_circles(d, st))
        assert g.counts().e == d.n
        # genus range of any state of a plane diagram
        c = g.counts()
        assert 0 <= c.g <= (d.n - c.v + c.k) // 2
        # and the boundary-count genus formula through the dual set
        T = tait_graph(d, coloring)
        A = state_dual_set(d, st, coloring)
        pa = T.delete_edges(set(T.edge_labels) - A).counts().p
        pac = T.delete_edges(A).counts().p
        assert 2 * c.g == 2 * T.counts().k + T.counts().e - pa - pac
