import random
from itertools import product

import pytest

from ribbonlink.catalog import CATALOG
from ribbonlink.diagrams import checkerboard, parse_pd, seifert_data, tait_graph
from ribbonlink.errors import NotEulerian, NotPlane
from ribbonlink.generators import (connected_plane_maps, random_edge_subset,
                                   random_map, random_plane_map)
from ribbonlink.maps import Weight, build_map
from ribbonlink.multigraph import AbstractMultigraph
from ribbonlink.seifert import (admissibility_violations, build_phi,
                                cd_labeling, overlay_pair, reconstruct_link,
                                remark_identity_check, roundtrip_matches,
                                verify_seifert_characterization)

TREFOIL = parse_pd(CATALOG["trefoil"])
HOPF = parse_pd(CATALOG["hopf"])
FIG8 = parse_pd(CATALOG["figure8"])


def _classes(diagram):
    k = len(diagram.components)
    for bits in product((0, 1), repeat=k - 1):
        yield frozenset(i + 1 for i, b in enumerate(bits) if b)


def test_cd_labeling_counts():
    c1, _ = checkerboard(TREFOIL)
    labelings = {tuple(sorted(cd_labeling(TREFOIL, c1, m).items()))
                 for m in _classes(TREFOIL)}
    assert len(labelings) == 1
    ch, _ = checkerboard(HOPF)
    labelings = {tuple(sorted(cd_labeling(HOPF, ch, m).items()))
                 for m in _classes(HOPF)}
    assert len(labelings) == 2
    # reversing every component does not change the labels
    full = frozenset(range(len(HOPF.components)))
    assert cd_labeling(HOPF, ch, full) == cd_labeling(HOPF, ch)


def test_overlay_examples():
    loop = build_map([2, 1], [2, 1])
    ov = overlay_pair(loop)
    c = ov.map.counts()
    assert (c.v, c.e, c.p, c.g) == (4, 4, 2, 0)
    tri = tait_graph(TREFOIL, checkerboard(TREFOIL)[0])
    ovt = overlay_pair(tri)
    ct = ovt.map.counts()
    assert (ct.v, ct.e, ct.p) == (8, 12, 6)
    assert all(len(f) == 4 for f in ovt.map.face_orbits())


def test_overlay_quadrilaterals_random():
    rng = random.Random(21)
    for _ in range(20):
        t = random_plane_map(rng, rng.randint(1, 7))
        ov = overlay_pair(t)
        assert ov.map.is_plane
        assert all(len(f) == 4 for f in ov.map.face_orbits())
        # crossing vertices have degree 4 with alternating provenance
        for lab, vtx in ov.crossing_vertex_of_edge.items():
            orbit = next(o for o in ov.map.vertex_orbits() if vtx in o)
            kinds = [ov.provenance[ov.map.edge_of_dart(d)][0] for d in orbit]
            assert kinds in (["T", "T*", "T", "T*"], ["T*", "T", "T*", "T"])


def test_overlay_rejects_nonplane():
    with pytest.raises(NotPlane):
        overlay_pair(build_map([3, 4, 2, 1], [2, 1, 4, 3]))   # genus 1
    with pytest.raises(NotPlane):
        overlay_pair(build_map([2, 1, 4, 3], [2, 1, 4, 3]))   # two loops


def test_build_phi_degenerate_labelings():
    tri = tait_graph(TREFOIL, checkerboard(TREFOIL)[0])
    allc = build_phi(tri, {e: "c" for e in tri.edge_labels})
    rd = allc.region_dual()
    assert (rd.n, rd.m) == (2, 3)           # regions of the triangle
    alld = build_phi(tri, {e: "d" for e in tri.edge_labels})
    rd = alld.region_dual()
    assert rd.is_isomorphic(AbstractMultigraph(3, [(0, 1), (1, 2), (2, 0)]))


def test_phi_star_is_seifert_graph():
    for diagram in (TREFOIL, HOPF, FIG8):
        coloring, _ = checkerboard(diagram)
        T = tait_graph(diagram, coloring)
        phi = build_phi(T, cd_labeling(diagram, coloring))
        rd = phi.region_dual()
        sg = seifert_data(diagram)["graph"]
        assert rd.is_isomorphic(sg)
        assert rd.is_bipartite()
        assert phi.subgraph_c().components_eulerian()
        assert phi.subgraph_c_prime().components_eulerian()
    phi8 = build_phi(tait_graph(FIG8, checkerboard(FIG8)[0]),
                     cd_labeling(FIG8, checkerboard(FIG8)[0]))
    rd8 = phi8.region_dual()
    assert (rd8.n, rd8.m) == (3, 4)


def test_verification_report():
    for diagram in (TREFOIL, FIG8):
        rep = verify_seifert_characterization(diagram, checkerboard(diagram)[0])
        assert rep["all_pass"], rep
        assert len(rep["checks"]) == 7
    ch, _ = checkerboard(HOPF)
    for mask in _classes(HOPF):
        assert verify_seifert_characterization(HOPF, ch, mask)["all_pass"]


def test_parity_statement_equivalences():
    # On every labeled connected plane map (up to 4 edges, exhaustively):
    # even primal contraction degree is the same statement as "C Eulerian",
    # even deletion count on a cycle basis is the same statement as
    # "C' Eulerian", and admissibility is their conjunction.  All four hold
    # simultaneously on labelings induced by an oriented diagram.
    from ribbonlink.seifert import _odd_d_basis_cycles
    for base in connected_plane_maps(4):
        T = base.with_weights({k: Weight("+") for k in base.edge_labels})
        for bits in product("cd", repeat=T.counts().e):
            labels = dict(zip(sorted(T.edge_labels), bits))
            phi = build_phi(T, labels)
            s1 = not _odd_c_vertex(T, labels)
            s2 = phi.subgraph_c().components_eulerian()
            s3 = phi.subgraph_c_prime().components_eulerian()
            s4 = not _odd_d_basis_cycles(T, labels)
            assert s1 == s2
            assert s3 == s4
            assert (s2 and s3) == (not admissibility_violations(T, labels))


def _odd_c_vertex(T, labels):
    g = T.underlying_graph()
    deg = [0] * g.n
    for (u, v), lab in zip(g.edges, g.labels):
        if labels[lab] == "c":
            deg[u] += 1
            deg[v] += 1
    return any(d % 2 for d in deg)


def test_all_four_hold_on_diagram_labelings():
    rng = random.Random(23)
    from ribbonlink.generators import random_diagram
    from ribbonlink.seifert import _odd_d_basis_cycles
    for _ in range(10):
        d = random_diagram(rng, rng.randint(1, 6))
        coloring, _ = checkerboard(d)
        T = tait_graph(d, coloring)
        labels = cd_labeling(d, coloring)
        phi = build_phi(T, labels)
        assert not _odd_c_vertex(T, labels)
        assert phi.subgraph_c().components_eulerian()
        assert phi.subgraph_c_prime().components_eulerian()
        assert not _odd_d_basis_cycles(T, labels)


def test_reconstruct_examples():
    tri = tait_graph(TREFOIL, checkerboard(TREFOIL)[0])
    labels = {e: "c" for e in tri.edge_labels}
    diagram, pd = reconstruct_link(tri, labels)
    assert diagram.n == 3
    assert roundtrip_matches(tri, labels, diagram)
    bridge = build_map([1, 2], [2, 1], weights={1: Weight("+")})
    with pytest.raises(NotEulerian) as exc:
        reconstruct_link(bridge, {1: "c"})
    assert exc.value.violations
    # a bridge labeled d is the kink seen from the other colouring
    diagram, _ = reconstruct_link(bridge, {1: "d"})
    assert diagram.n == 1
    assert roundtrip_matches(bridge, {1: "d"}, diagram)


def test_reconstruct_roundtrip_exhaustive_small():
    rng = random.Random(8)
    for base in connected_plane_maps(4):
        e = base.counts().e
        T = base.with_weights(
            {k: Weight(rng.choice("+-")) for k in base.edge_labels})
        for bits in product("cd", repeat=e):
            labels = dict(zip(sorted(T.edge_labels), bits))
            if admissibility_violations(T, labels):
                with pytest.raises(NotEulerian):
                    reconstruct_link(T, labels)
                continue
            diagram, _pd = reconstruct_link(T, labels)
            assert roundtrip_matches(T, labels, diagram)


def test_diagram_to_labels_and_back():
    rng = random.Random(13)
    from ribbonlink.generators import random_diagram
    for _ in range(10):
        d = random_diagram(rng, rng.randint(1, 6))
        coloring, _ = checkerboard(d)
        T = tait_graph(d, coloring)
        labels = cd_labeling(d, coloring)
        T_signed = T.with_weights({e: Weight(T.weights[e].tait)
                                   for e in T.edge_labels})
        d2, _ = reconstruct_link(T_signed, labels)
        assert roundtrip_matches(T_signed, labels, d2)


def test_remark_identity():
    tri = tait_graph(TREFOIL, checkerboard(TREFOIL)[0])
    assert remark_identity_check(tri, [])
    assert remark_identity_check(tri, list(tri.edge_labels))
    rng = random.Random(17)
    for _ in range(40):
        g = random_plane_map(rng, rng.randint(1, 6))
        assert remark_identity_check(g, random_edge_subset(rng, g))
    with pytest.raises(NotPlane):
        remark_identity_check(build_map([3, 4, 2, 1], [2, 1, 4, 3]), [1])
