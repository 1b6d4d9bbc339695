"""Corpora for the verification suites: random orientable maps, random and
exhaustive connected plane maps, and random oriented diagrams (as medials
of random plane maps, which reach every connected diagram).
"""

from __future__ import annotations

import random

from .maps import CombinatorialMap, Weight, map_from_rotations
from .medial import MedialStructure


def random_map(rng, max_edges=12, weighted=False, connected=False):
    """Uniform rotation system on 2e darts with the standard pairing."""
    while True:
        e = rng.randint(1, max_edges)
        n = 2 * e
        sig = list(range(1, n + 1))
        rng.shuffle(sig)
        alpha = [i + 1 if i % 2 == 1 else i - 1 for i in range(1, n + 1)]
        w = None
        if weighted:
            w = {k: Weight.of(rng.choice("+-"), rng.choice("+-"))
                 for k in range(1, e + 1)}
        m = CombinatorialMap(sig, alpha, weights=w)
        if not connected or m.counts().k == 1:
            return m


def random_edge_subset(rng, m):
    return frozenset(lab for lab in m.edge_labels if rng.random() < 0.5)


# ----------------------------------------------------------------------
# plane maps by edge growth
#
# Every connected plane map with e >= 1 edges comes from a connected plane
# map with e-1 edges by adding an edge between two corners (any non-bridge
# edge can be removed) or by hanging a new leaf vertex (trees always have
# one).  Growing through plane intermediates therefore reaches everything.


class _Growth:
    __slots__ = ("rots", "pairs", "next_tok")

    def __init__(self):
        self.rots = [[]]
        self.pairs = []
        self.next_tok = 0

    def clone(self):
        g = _Growth.__new__(_Growth)
        g.rots = [list(r) for r in self.rots]
        g.pairs = list(self.pairs)
        g.next_tok = self.next_tok
        return g

    def corners(self):
        out = []
        for vi, rot in enumerate(self.rots):
            for j in range(max(1, len(rot))):
                out.append((vi, j))
        return out

    def insert(self, corner, tok):
        vi, j = corner
        self.rots[vi].insert(j, tok)

    def add_edge_between(self, c1, c2):
        t1, t2 = self.next_tok, self.next_tok + 1
        self.next_tok += 2
        self.insert(c1, t1)
        self.insert(c2, t2)
        self.pairs.append((t1, t2))

    def add_leaf(self, corner):
        t1, t2 = self.next_tok, self.next_tok + 1
        self.next_tok += 2
        self.insert(corner, t1)
        self.rots.append([t2])
        self.pairs.append((t1, t2))

    def to_map(self, weights=None):
        pairing = {}
        label_of = {}
        for i, (t1, t2) in enumerate(self.pairs):
            pairing[t1] = t2
            pairing[t2] = t1
            label_of[t1] = label_of[t2] = i + 1
        if not self.pairs:
            return CombinatorialMap([], [], isolated_vertices=len(self.rots))
        m, _ = map_from_rotations(self.rots, pairing, label_of, weights=weights)
        return m


def random_plane_map(rng, edges, weighted=False):
    """Random connected plane map with the given number of edges."""
    g = _Growth()
    for _ in range(edges):
        for _attempt in range(64):
            trial = g.clone()
            if rng.random() < 0.3:
                trial.add_leaf(rng.choice(trial.corners()))
            else:
                tok = trial.next_tok
                trial.next_tok += 1
                trial.insert(rng.choice(trial.corners()), tok)
                t2 = trial.next_tok
                trial.next_tok += 1
                trial.insert(rng.choice(trial.corners()), t2)
                trial.pairs.append((tok, t2))
            m = trial.to_map()
            if m.counts().g == 0:
                g = trial
                break
        else:
            g.add_leaf(rng.choice(g.corners()))
    w = None
    if weighted:
        w = {k: Weight.of(rng.choice("+-"), rng.choice("+-"))
             for k in range(1, edges + 1)}
    m = g.to_map(weights=w)
    assert m.is_plane or edges == 0
    return m


def connected_plane_maps(max_edges):
    """All connected plane maps with 1..max_edges edges, one per
    isomorphism class (exhaustive, by growth with canonical dedup)."""
    current = [_Growth()]
    out = []
    for _e in range(max_edges):
        nxt = []
        seen = set()
        for g in current:
            children = []
            for c1 in g.corners():
                t = g.clone()
                t.add_leaf(c1)
                children.append(t)
            for c1 in g.corners():
                base = g.clone()
                tok = base.next_tok
                base.next_tok += 1
                base.insert(c1, tok)
                for c2 in base.corners():
                    t = base.clone()
                    t2 = t.next_tok
                    t.next_tok += 1
                    t.insert(c2, t2)
                    t.pairs.append((tok, t2))
                    children.append(t)
            for t in children:
                m = t.to_map()
                if m.counts().g != 0:
                    continue
                key = m.canonical_key(with_labels=False, with_weights=False)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(t)
        current = nxt
        out.extend(t.to_map() for t in current)
    return out


# ----------------------------------------------------------------------
# random diagrams


def random_diagram(rng, crossings):
    """Random oriented connected diagram with the given crossing number:
    the medial of a random plane map with random over/under strands and
    random strand orientations."""
    while True:
        T = random_plane_map(rng, crossings)
        if T.counts().e == crossings:
            break
    med = MedialStructure(T)
    under = {e: rng.choice(("into", "after")) for e in med.edge_order}
    rev = {i: rng.random() < 0.5 for i in range(len(med.strands))}
    diagram, _text, _order = med.build_diagram(under, rev)
    return diagram
