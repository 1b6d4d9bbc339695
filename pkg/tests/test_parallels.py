import random

import pytest

from ribbonlink.catalog import CATALOG
from ribbonlink.diagrams import (all_states, canonical_states, checkerboard,
                                 crossing_signs, parse_pd, state_dual_set,
                                 state_ribbon_graph, tait_graph)
from ribbonlink.errors import BadR
from ribbonlink.maps import map_equal
from ribbonlink.parallels import (check_sign_projection,
                                  check_sign_projection_data,
                                  corollary_ca2_checks, induced_A_r,
                                  induced_state, parallel_diagram,
                                  parallel_genus_report, parallel_tait,
                                  turaev_upper_bound,
                                  verify_overlay_recurrence)

KINK = parse_pd(CATALOG["kink"])
HOPF = parse_pd(CATALOG["hopf"])
TREFOIL = parse_pd(CATALOG["trefoil"])
FIG8 = parse_pd(CATALOG["figure8"])


def test_blowup_examples():
    par = parallel_diagram(TREFOIL, 2)
    assert par.diagram.n == 12
    assert sum(1 for ci, _i, _j in par.grid.values() if ci == 1) == 4
    one = parallel_diagram(TREFOIL, 1)
    assert one.diagram.crossings == TREFOIL.crossings
    k3 = parallel_diagram(KINK, 3)
    assert k3.diagram.n == 9
    assert len(k3.diagram.components) == 3
    with pytest.raises(BadR):
        parallel_diagram(KINK, 0)


def test_blowup_repeats_signs():
    for diagram in (TREFOIL, FIG8):
        coloring, _ = checkerboard(diagram)
        psigns = crossing_signs(diagram, coloring)
        pt = parallel_tait(diagram, coloring, 2)
        for cell, (ci, _i, _j) in pt.parallel.grid.items():
            assert pt.signs[cell][1] == psigns[ci][1]


def test_induced_state():
    par = parallel_diagram(TREFOIL, 2)
    assert induced_state(tuple("AAA"), par) == tuple("A" * 12)
    mixed = induced_state(tuple("ABA"), par)
    for cell, (ci, _i, _j) in par.grid.items():
        assert mixed[cell - 1] == "ABA"[ci - 1]
    # the Seifert state of D induces the Seifert state of the parallel
    coloring, _ = checkerboard(TREFOIL)
    pt = parallel_tait(TREFOIL, coloring, 2)
    s = canonical_states(TREFOIL, coloring)["seifert"]
    s2 = canonical_states(pt.parallel.diagram, pt.coloring)["seifert"]
    assert induced_state(s, pt.parallel) == s2


def test_parallel_tait_counts():
    coloring, _ = checkerboard(TREFOIL)
    rec = parallel_tait(TREFOIL, coloring, 3).counts_record()
    assert (rec["v"], rec["e"], rec["f"]) == (15, 27, 14)
    c8, _ = checkerboard(FIG8)
    rec = parallel_tait(FIG8, c8, 2).counts_record()
    assert (rec["v"], rec["e"], rec["f"]) == (10, 16, 8)
    ck, _ = checkerboard(KINK)
    rec = parallel_tait(KINK, ck, 2).counts_record()
    assert (rec["v"], rec["e"], rec["f"]) == (4, 4, 2)


def test_overlay_recurrence_and_faces():
    for diagram in (KINK, HOPF, TREFOIL, FIG8):
        coloring, _ = checkerboard(diagram)
        assert verify_overlay_recurrence(diagram, coloring, r_faces=(3, 4))


def test_sign_projection():
    for diagram in (TREFOIL, FIG8):
        coloring, _ = checkerboard(diagram)
        assert check_sign_projection(diagram, coloring, 3)


def test_sign_projection_mutation():
    coloring, _ = checkerboard(TREFOIL)
    taits = {k: parallel_tait(TREFOIL, coloring, k) for k in (1, 2)}
    tables = {k: {cell: taits[k].signs[cell][0] for cell in taits[k].signs}
              for k in taits}
    assert check_sign_projection_data(tables, taits, 2)
    cell = next(iter(tables[2]))
    tables[2][cell] = -tables[2][cell]
    assert not check_sign_projection_data(tables, taits, 2)


def test_induced_dual_set():
    coloring, _ = checkerboard(TREFOIL)
    T = tait_graph(TREFOIL, coloring)
    pt1 = parallel_tait(TREFOIL, coloring, 1)
    A = frozenset([1, 3])
    assert induced_A_r(T, A, pt1) == A
    for diagram in (KINK, HOPF, TREFOIL):
        coloring, _ = checkerboard(diagram)
        T = tait_graph(diagram, coloring)
        pt = parallel_tait(diagram, coloring, 2)
        for st in all_states(diagram.n):
            A = state_dual_set(diagram, st, coloring)
            lhs = pt.map.partial_dual(induced_A_r(T, A, pt))
            rhs = state_ribbon_graph(pt.parallel.diagram,
                                     induced_state(st, pt.parallel),
                                     pt.coloring)
            assert map_equal(lhs, rhs)


def test_genus_reports():
    for diagram in (KINK, HOPF, TREFOIL, FIG8):
        coloring, _ = checkerboard(diagram)
        reports = corollary_ca2_checks(diagram, coloring, 1)
        for key, rep in reports.items():
            g, e = rep["base_genus"], rep["base_edges"]
            rec = rep["records"][0]
            assert rec["oracle_genus"] == 2 * g + e - 1
            assert rec["ca5_item1"] and rec["ca5_item2"]
            assert rec["matches"]["ca3_ca4_form"]


def test_trefoil_adjudication_at_r2():
    coloring, _ = checkerboard(TREFOIL)
    rep = parallel_genus_report(TREFOIL, coloring, tuple("AAA"), 2)
    rec = rep["records"][1]
    assert rec["r"] == 2
    assert rec["ca4_iterated_value"] == 7
    assert rec["ca1_value"] == 10
    assert rec["oracle_genus"] == 7
    assert rec["adjudication"] == "iterated_ca4"
    assert rec["ca3_value"] == rec["oracle_genus"]
    assert rec["ca5_item1"] and rec["ca5_item2"]


def test_turaev_upper_bound():
    assert turaev_upper_bound(TREFOIL, 2) == 10
    coloring, _ = checkerboard(TREFOIL)
    gA = state_ribbon_graph(TREFOIL, tuple("AAA"), coloring).counts().g
    assert turaev_upper_bound(TREFOIL, 0) == gA
    g8 = state_ribbon_graph(FIG8, tuple("AAAA"), checkerboard(FIG8)[0]).counts().g
    assert turaev_upper_bound(FIG8, 1) == 2 * g8 + 3
    with pytest.raises(BadR):
        turaev_upper_bound(KINK, -1)


def test_random_diagram_parallel_counts():
    rng = random.Random(41)
    from ribbonlink.generators import random_diagram
    for _ in range(4):
        d = random_diagram(rng, rng.randint(1, 4))
        coloring, _ = checkerboard(d)
        T = tait_graph(d, coloring)
        c = T.counts()
        for r in (2, 3):
            rec = parallel_tait(d, coloring, r).counts_record()
            assert rec["e"] == r * r * c.e
            assert rec["v"] - rec["e"] + rec["f"] == 2
