"""Oriented connected link diagrams from PD codes, and their ribbon graphs.

A crossing record ``X(a,b,c,d)`` lists the four incident arcs
counterclockwise starting at the incoming under-strand arc ``a``; the
under-strand exits at ``c``.  Arcs are numbered ``1..2n`` consecutively
along each oriented link component (with wraparound), which pins the
orientation of the over-strand at every crossing.

The diagram's 4-valent map uses darts ``4*ci + slot``; faces are traced as
orbits of ``sigma . alpha`` exactly as in :mod:`ribbonlink.maps`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass

from .errors import (ArcCount, BadOrientation, Disconnected, NonPlanar)
from .maps import (Weight, from_arrow_presentation, ArrowPresentation,
                   map_from_rotations)

_X_RE = re.compile(r"X\s*[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")

# splice matchings in slot terms; each pair is written in its
# counterclockwise-progressing direction, which is the direction carried by
# the marking arrow living on that splice arc.
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((1, 2), (3, 0))


class LinkDiagram:
    """Validated oriented connected link diagram."""

    __slots__ = ("crossings", "over_in", "n", "succ", "components",
                 "comp_of_arc", "sigma4", "alpha4", "faces", "face_of_dart",
                 "_tail")

    def __init__(self, crossings, over_in, succ, components):
        self.crossings = tuple(tuple(c) for c in crossings)
        self.over_in = tuple(over_in)
        self.n = len(self.crossings)
        self.succ = dict(succ)
        self.components = tuple(tuple(c) for c in components)
        self.comp_of_arc = {}
        for k, comp in enumerate(self.components):
            for x in comp:
                self.comp_of_arc[x] = k
        self._build_map()

    # darts: 4*ci + slot
    def dart(self, ci, slot):
        return 4 * ci + slot

    def crossing_of_dart(self, d):
        return d // 4

    def slot_of_dart(self, d):
        return d % 4

    def _head_tail(self):
        """arc -> (tail dart, head dart): where it leaves / enters a crossing."""
        head = {}
        tail = {}
        for ci, (a, b, c, d) in enumerate(self.crossings):
            oi = self.over_in[ci]
            oo = 4 - oi  # 1 <-> 3
            slots = (a, b, c, d)
            for s, role in ((0, "h"), (oi, "h"), (2, "t"), (oo, "t")):
                arc = slots[s]
                store = head if role == "h" else tail
                if arc in store:
                    raise BadOrientation(f"arc {arc} has two {role} ends")
                store[arc] = self.dart(ci, s)
        return tail, head

    def _build_map(self):
        n4 = 4 * self.n
        tail, head = self._head_tail()
        self._tail = tail
        # the passes must realize the succession exactly
        for ci, slots in enumerate(self.crossings):
            oi = self.over_in[ci]
            if (self.succ.get(slots[0]) != slots[2]
                    or self.succ.get(slots[oi]) != slots[4 - oi]):
                raise BadOrientation(
                    f"crossing {ci + 1} contradicts the arc succession")
        self.sigma4 = tuple(4 * (d // 4) + (d + 1) % 4 for d in range(n4))
        alpha = [0] * n4
        for arc in tail:
            t, h = tail[arc], head[arc]
            alpha[t] = h
            alpha[h] = t
        self.alpha4 = tuple(alpha)
        # connectivity of the 4-valent graph
        if self.n:
            seen = {0}
            stack = [0]
            while stack:
                d = stack.pop()
                for x in (self.sigma4[d], self.alpha4[d]):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            if len(seen) != n4:
                raise Disconnected("diagram is not connected")
        # faces: orbits of sigma . alpha
        phi = [self.sigma4[self.alpha4[d]] for d in range(n4)]
        seen = set()
        faces = []
        fod = [0] * n4
        for d0 in range(n4):
            if d0 in seen:
                continue
            orb = [d0]
            seen.add(d0)
            x = phi[d0]
            while x != d0:
                orb.append(x)
                seen.add(x)
                x = phi[x]
            for d in orb:
                fod[d] = len(faces)
            faces.append(tuple(orb))
        self.faces = tuple(faces)
        self.face_of_dart = tuple(fod)
        if self.n - 2 * self.n + len(faces) != 2:
            raise NonPlanar(
                f"traced {len(faces)} faces for {self.n} crossings; not spherical")

    # -- arc ends ---------------------------------------------------------

    def tail_dart(self, arc):
        return self._tail[arc]

    def arc_at(self, d):
        return self.crossings[d // 4][d % 4]

    def over_strand_arcs(self, ci):
        """(incoming over arc, outgoing over arc)."""
        oi = self.over_in[ci]
        slots = self.crossings[ci]
        return slots[oi], slots[4 - oi]

    def to_pd(self):
        return " ".join("X({},{},{},{})".format(*c) for c in self.crossings)

    def __repr__(self):
        return f"LinkDiagram(n={self.n}, components={len(self.components)})"


def parse_pd(text):
    """Parse and fully validate a PD code.

    Raises :class:`ArcCount`, :class:`BadOrientation`, :class:`Disconnected`
    or :class:`NonPlanar`.
    """
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings = [tuple(int(g) for g in m.groups())
                 for m in _X_RE.finditer(stripped)]
    leftover = _X_RE.sub("", stripped).replace(",", " ").split()
    if leftover:
        raise ArcCount(f"unparsable PD tokens: {leftover[:3]}")
    if not crossings:
        raise ArcCount("no crossings found")
    n = len(crossings)
    count = defaultdict(int)
    for rec in crossings:
        for arc in rec:
            count[arc] += 1
    expected = set(range(1, 2 * n + 1))
    if set(count) != expected or any(v != 2 for v in count.values()):
        bad = sorted(set(count) ^ expected)[:4]
        raise ArcCount(f"arc labels must be 1..{2*n} each twice (offending: {bad})")
    over_in, succ, components = _orient_overs(crossings)
    return LinkDiagram(crossings, over_in, succ, components)


def _orient_overs(crossings):
    """Choose the over-strand direction at every crossing so that arc
    succession is x -> x+1 along each component with a single wraparound."""
    n = len(crossings)
    succ = {}
    pred = {}
    for a, b, c, d in crossings:
        if a in succ or c in pred:
            raise BadOrientation(f"under-strand transitions conflict at arc {a}")
        succ[a] = c
        pred[c] = a

    dirs = [None] * n

    def propagate(succ, pred, dirs):
        changed = True
        while changed:
            changed = False
            for ci in range(n):
                if dirs[ci] is not None:
                    continue
                _, b, _, d = crossings[ci]
                can_bd = b not in succ and d not in pred
                can_db = d not in succ and b not in pred
                if not can_bd and not can_db:
                    return False
                if can_bd != can_db:
                    x, y = (b, d) if can_bd else (d, b)
                    dirs[ci] = 1 if can_bd else 3
                    succ[x] = y
                    pred[y] = x
                    changed = True
        return True

    def search(succ, pred, dirs):
        if not propagate(succ, pred, dirs):
            return None
        todo = [ci for ci in range(n) if dirs[ci] is None]
        if not todo:
            comps = _validate_numbering(succ, 2 * n)
            return (dirs, succ, comps) if comps is not None else None
        ci = todo[0]
        _, b, _, d = crossings[ci]
        for x, y, slot in ((b, d, 1), (d, b, 3)):
            s2, p2, d2 = dict(succ), dict(pred), list(dirs)
            d2[ci] = slot
            s2[x] = y
            p2[y] = x
            res = search(s2, p2, d2)
            if res is not None:
                return res
        return None

    res = search(succ, pred, dirs)
    if res is None:
        raise BadOrientation("arc numbering admits no consistent orientation")
    dirs, succ, comps = res
    return dirs, succ, comps


def _validate_numbering(succ, narcs):
    if len(succ) != narcs:
        return None
    seen = set()
    comps = []
    for x0 in range(1, narcs + 1):
        if x0 in seen:
            continue
        cyc = [x0]
        seen.add(x0)
        x = succ[x0]
        while x != x0:
            cyc.append(x)
            seen.add(x)
            x = succ[x]
        lo, hi = min(cyc), max(cyc)
        if set(cyc) != set(range(lo, hi + 1)):
            return None
        for x in cyc:
            if succ[x] != (lo if x == hi else x + 1):
                return None
        comps.append(tuple(range(lo, hi + 1)))
    comps.sort(key=lambda c: c[0])
    return comps


# ----------------------------------------------------------------------
# checkerboard colourings


@dataclass(frozen=True)
class CheckerboardColoring:
    """Face index -> colour; exactly two exist per diagram."""

    colors: tuple

    def swapped(self):
        flip = {"black": "white", "white": "black"}
        return CheckerboardColoring(tuple(flip[c] for c in self.colors))

    def black_faces(self):
        return frozenset(i for i, c in enumerate(self.colors) if c == "black")

    def __getitem__(self, face):
        return self.colors[face]


def checkerboard(diagram):
    """The two proper 2-colourings; the first is canonical (the face on the
    left of arc 1 is white)."""
    nf = len(diagram.faces)
    colors = [None] * nf
    t1 = diagram.tail_dart(1)
    left_face = diagram.face_of_dart[diagram.sigma4[t1]]
    colors[left_face] = "white"
    # adjacency across arcs
    adj = defaultdict(set)
    for arc in range(1, 2 * diagram.n + 1):
        t = diagram.tail_dart(arc)
        right = diagram.face_of_dart[t]
        left = diagram.face_of_dart[diagram.sigma4[t]]
        adj[right].add(left)
        adj[left].add(right)
    stack = [left_face]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            want = "black" if colors[f] == "white" else "white"
            if colors[g] is None:
                colors[g] = want
                stack.append(g)
            elif colors[g] != want:
                raise NonPlanar("faces are not 2-colourable")  # cannot happen
    first = CheckerboardColoring(tuple(colors))
    return first, first.swapped()


# ----------------------------------------------------------------------
# signs


def crossing_signs(diagram, coloring, reversed_components=frozenset()):
    """crossing id (1-based) -> (tait sign, oriented sign), both ±1.

    ``reversed_components`` selects an orientation class: the oriented sign
    flips at a crossing iff exactly one of its two strands lies on a
    reversed component (a self-crossing never flips).
    """
    signs = {}
    rev = frozenset(reversed_components)
    for ci in range(diagram.n):
        slots = diagram.crossings[ci]
        # oriented sign: + iff the over-strand enters at slot d
        s = 1 if diagram.over_in[ci] == 3 else -1
        under_comp = diagram.comp_of_arc[slots[0]]
        over_comp = diagram.comp_of_arc[slots[diagram.over_in[ci]]]
        if (under_comp in rev) != (over_comp in rev):
            s = -s
        # tait sign: + iff the quadrants (b,c) and (d,a) are black
        q1 = diagram.face_of_dart[diagram.dart(ci, 2)]
        q3 = diagram.face_of_dart[diagram.dart(ci, 0)]
        assert coloring[q1] == coloring[q3], "opposite quadrants share colour"
        m = 1 if coloring[q1] == "black" else -1
        signs[ci + 1] = (m, s)
    return signs


# ----------------------------------------------------------------------
# Tait graphs


def tait_graph(diagram, coloring, reversed_components=frozenset()):
    """Bi-weighted Tait graph: a vertex per black face, an edge per crossing,
    rotations read off the cyclic order of crossings around each black face.
    Always plane."""
    signs = crossing_signs(diagram, coloring, reversed_components)
    black = coloring.black_faces()
    rotations = []
    label_of = {}
    ends = defaultdict(list)
    for f in sorted(black):
        orbit = diagram.faces[f]
        rot = list(reversed(orbit))     # counterclockwise around the face disc
        rotations.append(rot)
        for d in rot:
            ci = diagram.crossing_of_dart(d)
            label_of[d] = ci + 1
            ends[ci + 1].append(d)
    pairing = {}
    for lab, ds in ends.items():
        if len(ds) != 2:
            raise NonPlanar(f"crossing {lab} does not meet two black corners")
        pairing[ds[0]] = ds[1]
        pairing[ds[1]] = ds[0]
    weights = {lab: Weight.of(m, s) for lab, (m, s) in signs.items()}
    m, _ = map_from_rotations(rotations, pairing, label_of, weights=weights)
    return m


# ----------------------------------------------------------------------
# states


def parse_state(text, n):
    s = text.strip().upper()
    if len(s) != n or any(ch not in "AB" for ch in s):
        raise ArcCount(f"state must be {n} letters over A/B, got {text!r}")
    return tuple(s)


def all_states(n):
    from itertools import product
    return [tuple(p) for p in product("AB", repeat=n)]


def state_circles(diagram, state):
    """Trace the state circles; returns a list of cycles of
    ``(crossing id, direction)`` arrows, one arrow per splice arc traversed.
    """
    splice = {}
    forward = set()
    for ci, choice in enumerate(state):
        pairs = A_PAIRS if choice == "A" else B_PAIRS
        for p, q in pairs:
            dp, dq = diagram.dart(ci, p), diagram.dart(ci, q)
            splice[dp] = dq
            splice[dq] = dp
            forward.add((dp, dq))
    circles = []
    visited = set()
    for start in range(4 * diagram.n):
        if start in visited:
            continue
        circle = []
        d = start
        while True:
            e = splice[d]
            circle.append((diagram.crossing_of_dart(d) + 1,
                           1 if (d, e) in forward else -1))
            visited.add(d)
            visited.add(e)
            d = diagram.alpha4[e]
            if d == start:
                break
        circles.append(tuple(circle))
    return circles


def state_dual_set(diagram, state, coloring, reversed_components=frozenset()):
    """Edges of the Tait graph whose partial dual realizes this state:
    + edges spliced A and - edges spliced B."""
    signs = crossing_signs(diagram, coloring, reversed_components)
    out = set()
    for ci, choice in enumerate(state):
        m, _ = signs[ci + 1]
        if (m > 0 and choice == "A") or (m < 0 and choice == "B"):
            out.add(ci + 1)
    return frozenset(out)


def state_ribbon_graph(diagram, state, coloring, reversed_components=frozenset()):
    """Ribbon graph of a state: vertices are the state circles, edges the
    crossings.  Edge weights transform exactly as in the partial dual of the
    Tait graph that realizes the state."""
    signs = crossing_signs(diagram, coloring, reversed_components)
    dual_set = state_dual_set(diagram, state, coloring, reversed_components)
    weights = {}
    for lab, (m, s) in signs.items():
        weights[lab] = Weight.of(-m if lab in dual_set else m, s)
    circles = state_circles(diagram, state)
    ap = ArrowPresentation(tuple(circles), weights)
    return from_arrow_presentation(ap)


def canonical_states(diagram, coloring, reversed_components=frozenset()):
    """The five named states: allA, allB, seifert, tait_black, tait_white."""
    signs = crossing_signs(diagram, coloring, reversed_components)
    n = diagram.n
    seifert = tuple("A" if signs[i + 1][1] > 0 else "B" for i in range(n))
    tait_black = tuple("A" if signs[i + 1][0] < 0 else "B" for i in range(n))
    tait_white = tuple("B" if signs[i + 1][0] < 0 else "A" for i in range(n))
    return {
        "allA": tuple("A" * n),
        "allB": tuple("B" * n),
        "seifert": seifert,
        "tait_black": tait_black,
        "tait_white": tait_white,
    }


def seifert_data(diagram, reversed_components=frozenset()):
    """Seifert circles and the Seifert ribbon graph (weights depend only on
    the oriented signs, so no colouring enters)."""
    coloring, _ = checkerboard(diagram)
    states = canonical_states(diagram, coloring, reversed_components)
    st = states["seifert"]
    circles = state_circles(diagram, st)
    smap = state_ribbon_graph(diagram, st, coloring, reversed_components)
    c = smap.counts()
    return {
        "circle_count": len(circles),
        "seifert_map": smap,
        "genus": c.g,
        "graph": smap.underlying_graph(),
    }
