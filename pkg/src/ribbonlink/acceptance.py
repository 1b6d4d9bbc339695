"""The built-in verification suites.

Each criterion is a function returning ``(ok, detail)``; ``run_all`` times
them and reports one line per criterion.  These are the same suites the
test module and ``ribbonlink selftest`` run.
"""

from __future__ import annotations

import random
import time
from itertools import product

from .catalog import CATALOG_ORDER, all_diagrams
from .diagrams import (all_states, canonical_states, checkerboard,
                       crossing_signs, state_dual_set, state_ribbon_graph,
                       tait_graph)
from .errors import NotEulerian
from .generators import (connected_plane_maps, random_diagram,
                         random_edge_subset, random_map, random_plane_map)
from .maps import Weight, map_equal, map_isomorphic
from .parallels import (check_sign_projection, corollary_ca2_checks,
                        induced_A_r, induced_state, parallel_genus_report,
                        parallel_tait, verify_overlay_recurrence)
from .seifert import (admissibility_violations, cd_labeling, reconstruct_link,
                      remark_identity_check, roundtrip_matches,
                      verify_seifert_characterization)


def _orientation_classes(diagram):
    """One reversal mask per orientation class (component 0 never reversed)."""
    k = len(diagram.components)
    rest = range(1, k)
    for bits in product((0, 1), repeat=k - 1):
        yield frozenset(i for i, b in zip(rest, bits) if b)


def criterion_1_partial_duality(samples=500, max_edges=12, seed=101):
    """Partial duality axioms and the genus formula on random maps."""
    rng = random.Random(seed)
    for t in range(samples):
        g = random_map(rng, max_edges=max_edges, weighted=True)
        labels = list(g.edge_labels)
        A = random_edge_subset(rng, g)
        B = random_edge_subset(rng, g)
        ga = g.partial_dual(A)
        if not map_equal(g.partial_dual([]), g):
            return False, f"G^{{}} != G at trial {t}"
        if not map_equal(g.partial_dual(labels), g.dual()):
            return False, f"G^E != G* at trial {t}"
        if not map_equal(ga.partial_dual(B), g.partial_dual(A ^ B)):
            return False, f"(G^A)^B != G^(A xor B) at trial {t}"
        if ga.counts().k != g.counts().k:
            return False, f"component count changed at trial {t}"
        c = g.counts()
        pa = g.delete_edges(set(labels) - A).counts().p
        pac = g.delete_edges(A).counts().p
        if 2 * ga.counts().g != 2 * c.k + c.e - pa - pac:
            return False, f"genus formula failed at trial {t}"
        if ga.counts().g != g.partial_dual(set(labels) - A).counts().g:
            return False, f"genus A/A^c symmetry failed at trial {t}"
    return True, f"{samples} random maps (<= {max_edges} edges)"


def criterion_2_tait_duality():
    """The two bi-weighted Tait graphs are plane duals, Tait signs negated."""
    for name, diagram in all_diagrams().items():
        c1, c2 = checkerboard(diagram)
        t1, t2 = tait_graph(diagram, c1), tait_graph(diagram, c2)
        if not (t1.is_plane and t2.is_plane):
            return False, f"{name}: Tait graph not plane"
        if not map_equal(t1, t2.dual()):
            return False, f"{name}: Tait graphs are not weighted duals"
        for lab in t1.edge_labels:
            w1, w2 = t1.weights[lab], t2.weights[lab]
            if w1.tait == w2.tait or w1.oriented != w2.oriented:
                return False, f"{name}: weight action wrong on edge {lab}"
    return True, f"catalog of {len(CATALOG_ORDER)}"


def criterion_3_pdt():
    """Named partial duals hit the all-A/all-B/Seifert graphs, and every
    state of every small diagram is the partial dual over its dual set."""
    for name, diagram in all_diagrams().items():
        for coloring in checkerboard(diagram):
            T = tait_graph(diagram, coloring)
            states = canonical_states(diagram, coloring)
            named = {
                "allA": frozenset(l for l, w in T.weights.items() if w.tait == "+"),
                "allB": frozenset(l for l, w in T.weights.items() if w.tait == "-"),
                "seifert": frozenset(l for l, w in T.weights.items()
                                     if w.tait == w.oriented),
            }
            for key, A in named.items():
                if A != state_dual_set(diagram, states[key], coloring):
                    return False, f"{name}: {key} dual set wrong"
                got = state_ribbon_graph(diagram, states[key], coloring)
                if not map_equal(T.partial_dual(A), got):
                    return False, f"{name}: T^A != {key} graph"
            if diagram.n <= 4:
                for st in all_states(diagram.n):
                    A = state_dual_set(diagram, st, coloring)
                    if not map_equal(T.partial_dual(A),
                                     state_ribbon_graph(diagram, st, coloring)):
                        return False, f"{name}: state {''.join(st)} failed"
    return True, "catalog, both colorings, exhaustive states for n <= 4"


def criterion_4_seifert_characterization(random_diagrams=100, max_crossings=8,
                                         seed=104):
    """Five structural checks and the labeling count, over all orientation
    classes of the catalog and a random corpus."""
    rng = random.Random(seed)
    corpus = list(all_diagrams().items())
    made = 0
    while made < random_diagrams:
        d = random_diagram(rng, rng.randint(1, max_crossings))
        if len(d.components) > 4:
            continue
        corpus.append((f"random{made}", d))
        made += 1
    for name, diagram in corpus:
        coloring, _ = checkerboard(diagram)
        k = len(diagram.components)
        labelings = set()
        for mask in _orientation_classes(diagram):
            rep = verify_seifert_characterization(diagram, coloring, mask)
            if not rep["all_pass"]:
                bad = [c["name"] for c in rep["checks"] if not c["pass"]]
                return False, f"{name} mask {sorted(mask)}: failed {bad}"
            labels = cd_labeling(diagram, coloring, mask)
            labelings.add(tuple(sorted(labels.items())))
        if len(labelings) != 2 ** (k - 1):
            return False, (f"{name}: {len(labelings)} labelings, "
                           f"expected {2 ** (k - 1)}")
    return True, f"catalog + {random_diagrams} random diagrams, all classes"


def criterion_5_reconstruction(max_edges=5):
    """Exhaustive reconstruction round trip over connected plane maps."""
    maps = connected_plane_maps(max_edges)
    done = rejected = 0
    for base in maps:
        e = base.counts().e
        T = base.with_weights({k: Weight("+") for k in base.edge_labels})
        for bits in product("cd", repeat=e):
            labels = dict(zip(sorted(T.edge_labels), bits))
            if admissibility_violations(T, labels):
                rejected += 1
                try:
                    reconstruct_link(T, labels)
                    return False, f"inadmissible labeling accepted: {labels}"
                except NotEulerian:
                    continue
            diagram, _pd = reconstruct_link(T, labels)
            if not roundtrip_matches(T, labels, diagram):
                return False, f"round trip failed on {T} with {labels}"
            done += 1
    return True, (f"{len(maps)} plane maps (<= {max_edges} edges), "
                  f"{done} round trips, {rejected} rejections")


def criterion_6_remark_identity(samples=200, max_edges=8, seed=106):
    """underlying(G^A) against the region dual of the kept halves."""
    rng = random.Random(seed)
    for t in range(samples):
        e = rng.randint(1, max_edges)
        g = random_plane_map(rng, e)
        A = random_edge_subset(rng, g)
        if not remark_identity_check(g, A):
            return False, f"failed at trial {t} (e={e}, A={sorted(A)})"
    return True, f"{samples} random plane maps (<= {max_edges} edges)"


def criterion_7_parallel_counts():
    """Edge/face/vertex formulas for r in 2..5 and face-size histograms."""
    for name, diagram in all_diagrams().items():
        coloring, _ = checkerboard(diagram)
        T = tait_graph(diagram, coloring)
        c = T.counts()
        e1, v1, f1 = c.e, c.v, c.p
        base_hist = {}
        for f in T.face_orbits():
            base_hist[len(f)] = base_hist.get(len(f), 0) + 1
        for r in (2, 3, 4, 5):
            pt = parallel_tait(diagram, coloring, r)
            rec = pt.counts_record()
            if rec["e"] != r * r * e1:
                return False, f"{name} r={r}: e_r wrong"
            if r % 2 == 0:
                ok = (rec["f"] == r * r * e1 // 2
                      and rec["v"] == 2 + r * r * e1 // 2)
            else:
                ok = (rec["f"] == f1 + e1 * (r * r - 1) // 2
                      and rec["v"] == v1 + e1 * (r * r - 1) // 2)
            if not ok:
                return False, f"{name} r={r}: v_r/f_r wrong: {rec}"
            if rec["v"] - rec["e"] + rec["f"] != 2:
                return False, f"{name} r={r}: Euler relation broken"
            if r <= 4:
                hist = rec["face_sizes"]
                if r % 2 == 0:
                    ok = set(hist) == {4} and hist[4] == r * r * e1 // 2
                else:
                    want = dict(base_hist)
                    want[4] = want.get(4, 0) + e1 * (r * r - 1) // 2
                    ok = hist == dict(sorted(want.items()))
                if not ok:
                    return False, f"{name} r={r}: face histogram wrong"
    return True, "catalog, r in 2..5 (histograms r in 2..4)"


def criterion_8_overlay_base():
    """T(D_2) is the weighted overlay of T with its dual."""
    for name, diagram in all_diagrams().items():
        coloring, _ = checkerboard(diagram)
        from .seifert import overlay_pair
        t2 = parallel_tait(diagram, coloring, 2)
        ov = overlay_pair(tait_graph(diagram, coloring))
        if not map_isomorphic(t2.map, ov.map, weights=True):
            return False, f"{name}: T(D_2) != T overlaid with T*"
    return True, f"catalog of {len(CATALOG_ORDER)}"


def criterion_9_sign_structure():
    """Sign projection lemma, the induced-dual-set identity, and both
    boundary-count identities."""
    for name, diagram in all_diagrams().items():
        coloring, _ = checkerboard(diagram)
        if not check_sign_projection(diagram, coloring, 3):
            return False, f"{name}: sign projection failed"
        T = tait_graph(diagram, coloring)
        if diagram.n <= 4:
            pt = parallel_tait(diagram, coloring, 2)
            for st in all_states(diagram.n):
                A = state_dual_set(diagram, st, coloring)
                ar = induced_A_r(T, A, pt)
                lhs = pt.map.partial_dual(ar)
                rhs = state_ribbon_graph(pt.parallel.diagram,
                                         induced_state(st, pt.parallel),
                                         pt.coloring)
                if not map_equal(lhs, rhs):
                    return False, f"{name}: induced dual set failed at {''.join(st)}"
        states = canonical_states(diagram, coloring)
        r_max = 2 if diagram.n <= 3 else 1
        for key in ("allA", "seifert"):
            rep = parallel_genus_report(diagram, coloring, states[key], r_max)
            for rec in rep["records"]:
                if not (rec["ca5_item1"] and rec["ca5_item2"]):
                    return False, (f"{name}/{key} r={rec['r']}: "
                                   "boundary-count identity failed")
    return True, "catalog: projection r<=3, exhaustive n<=4 at r=2, p-identities"


def criterion_10_genus_theorems():
    """Exact genus values: the r=1 closed form, a consistent adjudication
    between the two conflicting closed forms at r=2, and the matching
    boundary-count decomposition."""
    adjudications = set()
    for name, diagram in all_diagrams().items():
        coloring, _ = checkerboard(diagram)
        reports = corollary_ca2_checks(diagram, coloring,
                                       2 if diagram.n <= 3 else 1)
        for key, rep in reports.items():
            g, e = rep["base_genus"], rep["base_edges"]
            rec1 = rep["records"][0]
            if rec1["oracle_genus"] != 2 * g + e - 1:
                return False, (f"{name}/{key}: g(D_2 state) = "
                               f"{rec1['oracle_genus']} != 2g+e-1 = {2*g+e-1}")
            if rec1["adjudication"] == "neither":
                return False, f"{name}/{key}: r=1 matches neither closed form"
            for rec in rep["records"][1:]:
                if rec["adjudication"] in ("both", "neither"):
                    return False, (f"{name}/{key} r={rec['r']}: ambiguous "
                                   f"adjudication {rec['adjudication']}")
                adjudications.add(rec["adjudication"])
                form = ("ca3_ca4_form" if rec["adjudication"] == "iterated_ca4"
                        else "ca3_ca1_form")
                if rec["oracle_genus"] != rec[form]:
                    return False, (f"{name}/{key} r={rec['r']}: selected ca3 "
                                   "decomposition does not match the oracle")
    if len(adjudications) > 1:
        return False, f"inconsistent adjudications: {sorted(adjudications)}"
    chosen = adjudications.pop() if adjudications else "none"
    return True, f"r=1 exact for catalog x 3 states; r=2 oracle selects {chosen}"


def criterion_11_cli_golden(golden_dir=None):
    """CLI outputs byte-identical to committed fixtures."""
    import pathlib
    from . import cli
    if golden_dir is None:
        golden_dir = pathlib.Path(__file__).resolve().parent / "golden"
    golden_dir = pathlib.Path(golden_dir)
    if not golden_dir.is_dir():
        return False, f"golden directory missing: {golden_dir}"
    checked = 0
    for name in CATALOG_ORDER:
        for kind in ("invariants", "seifert"):
            path = golden_dir / f"{kind}_{name}.txt"
            if not path.is_file():
                return False, f"missing fixture {path.name}"
            got = (cli.render_invariants_text(name) if kind == "invariants"
                   else cli.render_seifert_text(name))
            if got != path.read_text():
                return False, f"fixture mismatch: {path.name}"
            checked += 1
    return True, f"{checked} fixtures byte-identical"


CRITERIA = (
    ("1", "partial duality axioms + genus formula", criterion_1_partial_duality),
    ("2", "Tait graphs are weighted plane duals", criterion_2_tait_duality),
    ("3", "states are partial duals of the Tait graph", criterion_3_pdt),
    ("4", "Eulerian characterization of Seifert graphs", criterion_4_seifert_characterization),
    ("5", "reconstruction round trip (exhaustive)", criterion_5_reconstruction),
    ("6", "partial-dual graphs via region duals", criterion_6_remark_identity),
    ("7", "parallel Tait counts and face sizes", criterion_7_parallel_counts),
    ("8", "2-parallel Tait graph is the overlay", criterion_8_overlay_base),
    ("9", "sign projection and boundary-count identities", criterion_9_sign_structure),
    ("10", "parallel genus values and adjudication", criterion_10_genus_theorems),
    ("11", "CLI golden files", criterion_11_cli_golden),
)


def run_all(quick=False, only=None, out=print):
    """Run the suites; returns True when everything passed."""
    overrides = {}
    if quick:
        overrides = {
            "1": dict(samples=60),
            "4": dict(random_diagrams=12, max_crossings=6),
            "5": dict(max_edges=4),
            "6": dict(samples=40, max_edges=6),
        }
    all_ok = True
    for num, title, fn in CRITERIA:
        if only and num not in only:
            continue
        t0 = time.time()
        try:
            ok, detail = fn(**overrides.get(num, {}))
        except Exception as exc:  # a crash is a failure, not an excuse
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        all_ok &= ok
        out("%s criterion %-2s %-45s [%5.1fs] %s"
            % ("PASS" if ok else "FAIL", num, title, time.time() - t0, detail))
    return all_ok
