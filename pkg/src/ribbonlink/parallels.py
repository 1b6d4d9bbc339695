"""r-fold parallels of link diagrams and their Tait/state ribbon graphs.

The r-fold parallel replaces every strand by r plane-parallel copies, so
every crossing blows up into an r x r grid of crossings repeating the
over/under pattern and the oriented sign.  The parallel Tait graph is built
from the blown-up diagram; the overlay recurrence (T_r = T_{r-1}* overlaid
with T), the face counts, the sign projection and the genus formulas are
verified against it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BadR
from .diagrams import (LinkDiagram, checkerboard, crossing_signs,
                       canonical_states, state_dual_set, state_ribbon_graph,
                       tait_graph)
from .maps import map_isomorphic
from .seifert import overlay_pair


@dataclass(frozen=True)
class ParallelDiagram:
    """Blow-up of a diagram: ``grid`` sends each new crossing id to
    (parent crossing, row i along the under copies, column j along the over
    copies); ``strand_map`` sends each new arc to (parent arc, copy)."""

    diagram: LinkDiagram
    r: int
    grid: dict
    strand_map: dict
    pd_text: str


def parallel_diagram(diagram, r):
    """Replace every strand with r parallel copies (copy 1 leftmost facing
    along the orientation), each grid crossing repeating the parent."""
    if r < 1:
        raise BadR(f"parallel multiplicity must be >= 1, got {r}")
    n = diagram.n
    coloring, _ = checkerboard(diagram)
    signs = crossing_signs(diagram, coloring)
    sigma_of = {ci: signs[ci + 1][1] for ci in range(n)}

    # token arcs: parent copies ("a", x, k) and per-crossing intermediates
    def under_chain(ci, i):
        a, _, c, _ = diagram.crossings[ci]
        return ([("a", a, i)] +
                [("u", ci, i, t) for t in range(1, r)] +
                [("a", c, i)])

    def over_chain(ci, j):
        o_in, o_out = diagram.over_strand_arcs(ci)
        return ([("a", o_in, j)] +
                [("o", ci, j, t) for t in range(1, r)] +
                [("a", o_out, j)])

    # walk the parallel components to number the arcs
    arc_no = {}
    strand_map = {}
    succ = {}
    components = []
    base = 0
    head_of = {}
    for ci, (a, b, c, d) in enumerate(diagram.crossings):
        head_of[a] = (ci, "under")
        head_of[diagram.over_strand_arcs(ci)[0]] = (ci, "over")
    for comp in diagram.components:
        for k in range(1, r + 1):
            walk = []
            for x in comp:
                walk.append((("a", x, k), (x, k)))
                ci, role = head_of[x]
                chain = under_chain(ci, k) if role == "under" else over_chain(ci, k)
                for tok in chain[1:-1]:
                    walk.append((tok, (x, k)))
            L = len(walk)
            for j, (tok, parent) in enumerate(walk):
                arc_no[tok] = base + j + 1
                strand_map[base + j + 1] = parent
            for j in range(L):
                succ[base + j + 1] = base + j + 2 if j + 1 < L else base + 1
            components.append(tuple(range(base + 1, base + L + 1)))
            base += L

    records = []
    over_in = []
    grid = {}
    for ci in range(n):
        s = sigma_of[ci]
        U = {i: [arc_no[t] for t in under_chain(ci, i)] for i in range(1, r + 1)}
        O = {j: [arc_no[t] for t in over_chain(ci, j)] for j in range(1, r + 1)}
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if s < 0:
                    rec = (U[i][j - 1], O[j][r - i], U[i][j], O[j][r - i + 1])
                    oin = 1
                else:
                    rec = (U[i][r - j], O[j][i], U[i][r - j + 1], O[j][i - 1])
                    oin = 3
                records.append(rec)
                over_in.append(oin)
                grid[len(records)] = (ci + 1, i, j)

    blown = LinkDiagram(records, over_in, succ, components)
    text = " ".join("X({},{},{},{})".format(*rec) for rec in records)
    return ParallelDiagram(blown, r, grid, strand_map, text)


def induced_state(state, parallel):
    """Splice every crossing of the grid the way its parent was spliced."""
    out = []
    for idx in range(parallel.diagram.n):
        parent_ci, _i, _j = parallel.grid[idx + 1]
        out.append(state[parent_ci - 1])
    return tuple(out)


@dataclass(frozen=True)
class ParallelTait:
    """Tait graph of the r-fold parallel with grid bookkeeping.

    ``rho`` projects each edge to its parent edge of T.  ``cell_coords``
    gives sign-normalized grid coordinates: the column index of a c-edge's
    grid runs against the over-copy order, which puts the cells inheriting
    the parent sign on the main diagonal for every edge.  ``phi_r`` sends a
    diagonal cell to ("T", parent) and an off-diagonal cell to the
    normalized cell of the (r-1)-grid it projects into."""

    r: int
    parallel: ParallelDiagram
    map: object
    coloring: object
    rho: dict
    signs: dict
    parent_signs: dict

    def cell_coords(self, edge):
        ci, i, j = self.parallel.grid[edge]
        m, s = self.parent_signs[ci]
        if m == s:                       # contraction edge
            j = self.r + 1 - j
        return ci, i, j

    def phi_r(self, edge):
        ci, i, j = self.cell_coords(edge)
        if i == j:
            return ("T", ci)
        if i < j:
            return ("T*", (ci, i, j - 1))
        return ("T*", (ci, i - 1, j))

    def cell_at(self, ci, i, j):
        """Edge with the given normalized coordinates."""
        m, s = self.parent_signs[ci]
        jc = self.r + 1 - j if m == s else j
        for cell, g in self.parallel.grid.items():
            if g == (ci, i, jc):
                return cell
        raise KeyError((ci, i, j))

    def counts_record(self):
        c = self.map.counts()
        hist = Counter(len(f) for f in self.map.face_orbits())
        return {"r": self.r, "v": c.v, "e": c.e, "f": c.p,
                "face_sizes": dict(sorted(hist.items()))}


def parallel_tait(diagram, coloring, r):
    """T_r with the colouring of the blow-up that extends the black regions
    of the base diagram (the one whose normalized-diagonal cells inherit
    the parent signs)."""
    par = parallel_diagram(diagram, r)
    parent_signs = crossing_signs(diagram, coloring)

    def norm(ci, i, j):
        m, s = parent_signs[ci]
        return (ci, i, r + 1 - j if m == s else j)

    chosen = None
    for cand in checkerboard(par.diagram):
        signs = crossing_signs(par.diagram, cand)
        ok = all(signs[cell][0] == parent_signs[ci][0]
                 for cell, (ci, i, j) in par.grid.items()
                 if norm(ci, i, j)[2] == i)
        if ok:
            chosen = cand
            chosen_signs = signs
            break
    assert chosen is not None, "no blow-up colouring preserves diagonal signs"
    tmap = tait_graph(par.diagram, chosen)
    rho = {cell: ci for cell, (ci, _i, _j) in par.grid.items()}
    return ParallelTait(r=r, parallel=par, map=tmap, coloring=chosen,
                        rho=rho, signs=chosen_signs, parent_signs=parent_signs)


# ----------------------------------------------------------------------
# structural checks


def verify_overlay_recurrence(diagram, coloring, r_faces=(3, 4)):
    """Base case of the cabling theorem (the 2-parallel Tait graph is the
    overlay of T with its dual, weights included) plus the face-size
    constraints for higher r."""
    T = tait_graph(diagram, coloring)
    t2 = parallel_tait(diagram, coloring, 2)
    ov = overlay_pair(T)
    if not map_isomorphic(t2.map, ov.map, weights=True):
        return False
    base_hist = Counter(len(f) for f in T.face_orbits())
    e1 = T.counts().e
    for r in r_faces:
        tr = parallel_tait(diagram, coloring, r)
        hist = Counter(len(f) for f in tr.map.face_orbits())
        if r % 2 == 0:
            if set(hist) - {4} or hist[4] != r * r * e1 // 2:
                return False
        else:
            want = Counter(base_hist)
            want[4] += e1 * (r * r - 1) // 2
            if hist != +want:
                return False
    return True


def check_sign_projection(diagram, coloring, r):
    """Sign inheritance along the projection (a T_{r-1}* edge carries the
    sign opposite to its T_{r-1} edge) and the mixed-provenance adjacency
    rule: adjacent edges projecting to different layers have different
    signs."""
    taits = {k: parallel_tait(diagram, coloring, k) for k in range(1, r + 1)}
    return check_sign_projection_data(
        {k: {cell: taits[k].signs[cell][0] for cell in taits[k].signs}
         for k in taits},
        {k: taits[k] for k in taits}, r)


def check_sign_projection_data(sign_tables, taits, r):
    for k in range(2, r + 1):
        tk = taits[k]
        prev = taits[k - 1]
        for cell in tk.map.edge_labels:
            kind, target = tk.phi_r(cell)
            m = sign_tables[k][cell]
            if kind == "T":
                if m != tk.parent_signs[target][0]:
                    return False
            else:
                prev_cell = prev.cell_at(*target)
                if m != -sign_tables[k - 1][prev_cell]:
                    return False
        # adjacency: mixed provenance => opposite signs
        g = tk.map.underlying_graph()
        incident = {}
        for (u, v), lab in zip(g.edges, g.labels):
            incident.setdefault(u, []).append(lab)
            incident.setdefault(v, []).append(lab)
        for labs in incident.values():
            diag = [x for x in labs if tk.phi_r(x)[0] == "T"]
            off = [x for x in labs if tk.phi_r(x)[0] == "T*"]
            for x in diag:
                for y in off:
                    if sign_tables[k][x] == sign_tables[k][y]:
                        return False
    return True


def induced_A_r(T, A, pt):
    """The dual set of the induced state: keep a grid edge when its parent
    lies in A and the signs agree, or the parent is outside A and the signs
    differ."""
    A = frozenset(A)
    out = set()
    for cell in pt.map.edge_labels:
        parent = pt.rho[cell]
        same = pt.signs[cell][0] == pt.parent_signs[parent][0]
        if (parent in A) == same:
            out.add(cell)
    return frozenset(out)


# ----------------------------------------------------------------------
# genus reports


def parallel_genus_report(diagram, coloring, state, r_max):
    """Per r = 1..r_max: the directly-traced genus of the (r+1)-parallel
    state graph against the one-step recurrence, both closed forms (the
    iterated recurrence and the printed one, which disagree for r >= 2),
    and the boundary-count decompositions."""
    T = tait_graph(diagram, coloring)
    A = state_dual_set(diagram, state, coloring)
    eT = T.counts().e
    pA = T.delete_edges(A).counts().p
    pAc = T.delete_edges(set(T.edge_labels) - A).counts().p

    levels = {}
    for k in range(1, r_max + 2):
        pt = parallel_tait(diagram, coloring, k)
        s_k = induced_state(state, pt.parallel)
        g_k = state_ribbon_graph(pt.parallel.diagram, s_k, pt.coloring).counts().g
        levels[k] = (pt, s_k, g_k)
    g1 = levels[1][2]

    records = []
    for r in range(1, r_max + 1):
        g_next = levels[r + 1][2]
        g_r = levels[r][2]
        ca4_value = g_r + g1 + r * eT - 1
        ca4_iterated = (r + 1) * g1 + r * (r + 1) * eT // 2 - r
        ca1_value = (r + 1) * g1 + r * r * eT - r
        ca3_ca1_form = ((2 * r * r + r + 1) * eT - (r + 1) * (pAc + pA) + 2) // 2
        ca3_ca4_form = ((r + 1) ** 2 * eT - (r + 1) * (pAc + pA) + 2) // 2

        pt_next, _s, _g = levels[r + 1]
        pt_r = levels[r][0]
        a_next = induced_A_r(T, A, pt_next)
        a_r = induced_A_r(T, A, pt_r)
        tr_dual = pt_r.map.dual()
        # the state's dual set relative to T_r* is the complement of A_r
        # ((T_r*)^{A_r^c} = T_r^{A_r}), so "A_r*" deletes the complement
        a_r_star = set(tr_dual.edge_labels) - a_r
        p_next = pt_next.map.delete_edges(a_next).counts().p
        p_dual = tr_dual.delete_edges(a_r_star).counts().p
        ca5_item1 = (p_next == p_dual + pA)
        p_next_c = pt_next.map.delete_edges(
            set(pt_next.map.edge_labels) - a_next).counts().p
        p_dual_c = tr_dual.delete_edges(a_r).counts().p
        ca5_item2 = (p_next_c == p_dual_c + pAc)

        matches = {
            "ca4_recurrence": g_next == ca4_value,
            "ca4_iterated": g_next == ca4_iterated,
            "ca1_printed": g_next == ca1_value,
            "ca3_ca1_form": g_next == ca3_ca1_form,
            "ca3_ca4_form": g_next == ca3_ca4_form,
        }
        if matches["ca4_iterated"] and not matches["ca1_printed"]:
            adjudication = "iterated_ca4"
        elif matches["ca1_printed"] and not matches["ca4_iterated"]:
            adjudication = "printed_ca1"
        elif matches["ca1_printed"] and matches["ca4_iterated"]:
            adjudication = "both"
        else:
            adjudication = "neither"
        records.append({
            "r": r,
            "oracle_genus": g_next,
            "ca4_value": ca4_value,
            "ca4_iterated_value": ca4_iterated,
            "ca1_value": ca1_value,
            # the decomposition instantiated with whichever closed form the
            # oracle selected (they agree at r = 1)
            "ca3_value": (ca3_ca1_form if adjudication == "printed_ca1"
                          else ca3_ca4_form),
            "ca3_ca1_form": ca3_ca1_form,
            "ca3_ca4_form": ca3_ca4_form,
            "matches": matches,
            "adjudication": adjudication,
            "ca5_item1": ca5_item1,
            "ca5_item2": ca5_item2,
        })
    return {
        "state": "".join(state),
        "base_genus": g1,
        "base_edges": eT,
        "records": records,
    }


def corollary_ca2_checks(diagram, coloring, r_max):
    """The genus report at the three named states."""
    states = canonical_states(diagram, coloring)
    return {name: parallel_genus_report(diagram, coloring, states[name], r_max)
            for name in ("allA", "allB", "seifert")}


def turaev_upper_bound(diagram, r):
    """(r+1) g(allA) + r^2 n - r: an upper bound certificate for the Turaev
    genus of the r-fold parallel, from this diagram only."""
    if r < 0:
        raise BadR(f"parallel multiplicity must be >= 0, got {r}")
    coloring, _ = checkerboard(diagram)
    g = state_ribbon_graph(diagram, tuple("A" * diagram.n), coloring).counts().g
    return (r + 1) * g + r * r * diagram.n - r
