"""Orientable ribbon graphs as dart permutations.

A map is a pair of permutations of the darts ``1..2e``: ``sigma`` rotates
the darts counterclockwise around their vertex and ``alpha`` (a fixed-point
free involution) swaps the two darts of every edge.  Faces are the orbits
of ``d -> sigma[alpha[d]]``, so duality and partial duality are pure
permutation algebra.  Vertices without darts cannot be expressed by the
permutations and ride along as an ``isolated_vertices`` count.

Edges are named by integer ids ("labels"); operations that come with a
natural bijection of edge sets (dual, partial dual, deletion) preserve
those ids.

    >>> loop = build_map([2, 1], [2, 1])          # one vertex, one edge
    >>> loop.counts()
    Counts(v=1, e=1, k=1, p=2, genus_per_component=(0,), g=0)
    >>> loop.dual().counts().v                    # a vertex per face
    2
    >>> bouquet = build_map([3, 4, 2, 1], [2, 1, 4, 3])
    >>> bouquet.counts().g                        # interlaced loops: a torus
    1
    >>> map_equal(bouquet.partial_dual([1]).partial_dual([2]),
    ...           bouquet.partial_dual([1, 2]))
    True
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque, namedtuple
from dataclasses import dataclass
from typing import Optional

from .errors import (FixedPointAlpha, LabelNotTwice, NonOrientable,
                     NotPermutation, UnknownEdge, WeightCoverage)
from .multigraph import AbstractMultigraph

PLUS = "+"
MINUS = "-"
_SIGNS = (PLUS, MINUS)


def sign_str(s):
    """±1 -> '+'/'-'."""
    return PLUS if s > 0 else MINUS


@dataclass(frozen=True)
class Weight:
    """Edge weight of a (bi-weighted) Tait-style map.

    ``tait`` is the checkerboard sign, ``oriented`` the orientation sign,
    ``cd`` the contraction/deletion letter.  When both ``tait`` and
    ``oriented`` are present, ``cd`` is forced: ``c`` exactly when they agree.
    """

    tait: str
    oriented: Optional[str] = None
    cd: Optional[str] = None

    def __post_init__(self):
        if self.tait not in _SIGNS:
            raise WeightCoverage(f"bad tait sign {self.tait!r}")
        if self.oriented is not None and self.oriented not in _SIGNS:
            raise WeightCoverage(f"bad oriented sign {self.oriented!r}")
        if self.cd is not None:
            if self.cd not in ("c", "d"):
                raise WeightCoverage(f"bad cd label {self.cd!r}")
            if self.oriented is not None:
                expect = "c" if self.tait == self.oriented else "d"
                if self.cd != expect:
                    raise WeightCoverage(
                        f"cd label {self.cd!r} contradicts signs ({self.tait},{self.oriented})")

    @classmethod
    def of(cls, tait, oriented=None):
        """Build from ±1 ints or sign strings, deriving cd when possible."""
        t = tait if isinstance(tait, str) else sign_str(tait)
        o = None
        if oriented is not None:
            o = oriented if isinstance(oriented, str) else sign_str(oriented)
        cd = None if o is None else ("c" if t == o else "d")
        return cls(t, o, cd)

    def tait_negated(self):
        """Weight after dualizing this edge: (m, s) -> (-m, s)."""
        t = MINUS if self.tait == PLUS else PLUS
        cd = None
        if self.oriented is not None:
            cd = "c" if t == self.oriented else "d"
        return Weight(t, self.oriented, cd)


# ----------------------------------------------------------------------
# permutation helpers

def _as_perm(images):
    """1-indexed permutation storage: tuple p with p[0] = 0."""
    return (0,) + tuple(int(x) for x in images)


def perm_orbits(perm, darts):
    """Orbits of ``perm`` on ``darts``, each listed from its smallest element
    in permutation order."""
    darts = sorted(darts)
    seen = set()
    orbits = []
    for d in darts:
        if d in seen:
            continue
        orb = [d]
        seen.add(d)
        x = perm[d]
        while x != d:
            orb.append(x)
            seen.add(x)
            x = perm[x]
        orbits.append(orb)
    return orbits


def perm_inverse(perm):
    n = len(perm) - 1
    inv = [0] * (n + 1)
    for d in range(1, n + 1):
        inv[perm[d]] = d
    return tuple(inv)


# ----------------------------------------------------------------------

Counts = namedtuple("Counts", "v e k p genus_per_component g")


class CombinatorialMap:
    """See module docstring.  Instances are immutable values."""

    __slots__ = ("sigma", "alpha", "isolated_vertices", "edge_labels",
                 "weights", "_edge_of_dart", "_cache")

    def __init__(self, sigma, alpha, isolated_vertices=0, edge_labels=None,
                 weights=None, validate=True):
        self.sigma = sigma if (sigma and sigma[0] == 0 and isinstance(sigma, tuple)) else _as_perm(sigma)
        self.alpha = alpha if (alpha and alpha[0] == 0 and isinstance(alpha, tuple)) else _as_perm(alpha)
        self.isolated_vertices = int(isolated_vertices)
        n = len(self.sigma) - 1
        if validate:
            self._validate_perms(n)
        # edges = alpha orbits, listed by least dart
        pairs = [tuple(o) if len(o) == 2 else None
                 for o in perm_orbits(self.alpha, range(1, n + 1))]
        if validate and any(p is None for p in pairs):
            raise NotPermutation("alpha must pair darts two by two")
        if edge_labels is None:
            edge_labels = tuple(range(1, len(pairs) + 1))
        else:
            edge_labels = tuple(edge_labels)
            if len(edge_labels) != len(pairs) or len(set(edge_labels)) != len(pairs):
                raise UnknownEdge("edge_labels must name each alpha-orbit once")
        self.edge_labels = edge_labels
        eod = [0] * (n + 1)
        for lab, (d1, d2) in zip(edge_labels, pairs):
            eod[d1] = lab
            eod[d2] = lab
        self._edge_of_dart = tuple(eod)
        if weights:
            weights = {lab: w for lab, w in weights.items()}
            if validate and set(weights) != set(edge_labels):
                raise WeightCoverage(
                    "edge weights, when present, must cover every edge exactly once")
        else:
            weights = {}
        self.weights = weights
        self._cache = {}

    def _validate_perms(self, n):
        if n % 2 == 1:
            raise NotPermutation("odd number of darts")
        full = set(range(1, n + 1))
        if len(self.alpha) != n + 1 or set(self.alpha[1:]) != full:
            raise NotPermutation("alpha is not a permutation of the darts")
        if set(self.sigma[1:]) != full:
            raise NotPermutation("sigma is not a permutation of the darts")
        for d in range(1, n + 1):
            if self.alpha[d] == d:
                raise FixedPointAlpha(f"alpha fixes dart {d}")
            if self.alpha[self.alpha[d]] != d:
                raise NotPermutation("alpha is not an involution")

    # -- basic structure --------------------------------------------------

    @property
    def num_darts(self):
        return len(self.sigma) - 1

    def darts(self):
        return range(1, self.num_darts + 1)

    def edge_of_dart(self, d):
        return self._edge_of_dart[d]

    def darts_of_edge(self, label):
        try:
            i = self.edge_labels.index(label)
        except ValueError:
            raise UnknownEdge(f"edge {label!r} is not in the map") from None
        pairs = self._edge_pairs()
        return pairs[i]

    def _edge_pairs(self):
        if "pairs" not in self._cache:
            self._cache["pairs"] = [tuple(o) for o in
                                    perm_orbits(self.alpha, self.darts())]
        return self._cache["pairs"]

    def phi(self):
        """Face permutation d -> sigma[alpha[d]]."""
        if "phi" not in self._cache:
            self._cache["phi"] = tuple(
                0 if d == 0 else self.sigma[self.alpha[d]]
                for d in range(self.num_darts + 1))
        return self._cache["phi"]

    def vertex_orbits(self):
        if "vorb" not in self._cache:
            self._cache["vorb"] = perm_orbits(self.sigma, self.darts())
        return self._cache["vorb"]

    def face_orbits(self):
        if "forb" not in self._cache:
            self._cache["forb"] = perm_orbits(self.phi(), self.darts())
        return self._cache["forb"]

    def dart_components(self):
        """Connected components of the dart set under <sigma, alpha>."""
        if "comps" in self._cache:
            return self._cache["comps"]
        seen = set()
        comps = []
        for d0 in self.darts():
            if d0 in seen:
                continue
            comp = set()
            stack = [d0]
            seen.add(d0)
            while stack:
                d = stack.pop()
                comp.add(d)
                for x in (self.sigma[d], self.alpha[d]):
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
            comps.append(frozenset(comp))
        comps.sort(key=min)
        self._cache["comps"] = comps
        return comps

    def counts(self):
        """(v, e, k, p, genus per component, total genus)."""
        if "counts" in self._cache:
            return self._cache["counts"]
        vorb = self.vertex_orbits()
        forb = self.face_orbits()
        comps = self.dart_components()
        v_of = {min(o): o for o in vorb}
        genus = []
        for comp in comps:
            vi = sum(1 for o in vorb if o[0] in comp)
            pi = sum(1 for o in forb if o[0] in comp)
            ei = len(comp) // 2
            chi = vi - ei + pi
            g2 = 2 - chi
            assert g2 % 2 == 0 and g2 >= 0, "sigma/alpha does not orient"
            genus.append(g2 // 2)
        genus.extend([0] * self.isolated_vertices)
        c = Counts(v=len(vorb) + self.isolated_vertices,
                   e=len(self.edge_labels),
                   k=len(comps) + self.isolated_vertices,
                   p=len(forb) + self.isolated_vertices,
                   genus_per_component=tuple(genus),
                   g=sum(genus))
        self._cache["counts"] = c
        return c

    @property
    def is_plane(self):
        """Connected and genus zero (cellularly embedded in the sphere)."""
        c = self.counts()
        return c.k == 1 and c.g == 0

    # -- derived maps ------------------------------------------------------

    def dual(self):
        """Geometric dual: one vertex per face; weights (m,s) -> (-m,s)."""
        phi = self.phi()
        w = {lab: wt.tait_negated() for lab, wt in self.weights.items()}
        return CombinatorialMap(phi, self.alpha, self.isolated_vertices,
                                self.edge_labels, w, validate=False)

    def delete_edges(self, labels):
        """Spanning ribbon subgraph: drop the edges, keep every vertex."""
        labels = frozenset(labels)
        unknown = labels - set(self.edge_labels)
        if unknown:
            raise UnknownEdge(f"edges {sorted(unknown)} are not in the map")
        dead = {d for d in self.darts() if self._edge_of_dart[d] in labels}
        keep = [d for d in self.darts() if d not in dead]
        renum = {d: i + 1 for i, d in enumerate(keep)}
        sigma = []
        for d in keep:
            x = self.sigma[d]
            while x in dead:
                x = self.sigma[x]
            sigma.append(renum[x])
        alpha = [renum[self.alpha[d]] for d in keep]
        newly_isolated = sum(1 for o in self.vertex_orbits()
                             if all(d in dead for d in o))
        new_labels = [lab for lab in self.edge_labels if lab not in labels]
        w = {lab: wt for lab, wt in self.weights.items() if lab not in labels}
        return CombinatorialMap(sigma, alpha,
                                self.isolated_vertices + newly_isolated,
                                _relabel_sorted_by_least_dart(alpha, keep, self._edge_of_dart),
                                w or None, validate=False)

    def partial_dual(self, A):
        """Dual over the edge subset ``A`` by the arrow-marked construction:
        hide the edges outside ``A`` as marking arrows, dualize the spanning
        subgraph on ``A`` carrying the arrows along its boundary, reattach.

        Edge ids survive; Tait signs of edges in ``A`` are negated.

            >>> g = build_map([3, 4, 2, 1], [2, 1, 4, 3])
            >>> map_equal(g.partial_dual([]), g)
            True
            >>> map_equal(g.partial_dual([1, 2]), g.dual())
            True
            >>> g.partial_dual([1]).counts().g
            0
        """
        A = frozenset(A)
        unknown = A - set(self.edge_labels)
        if unknown:
            raise UnknownEdge(f"edges {sorted(unknown)} are not in the map")

        # vertex boundaries as mixed sequences of kept darts and arrows
        seqs = []
        pos = {}
        for orbit in self.vertex_orbits():
            seq = []
            for d in orbit:
                if self._edge_of_dart[d] in A:
                    pos[d] = (len(seqs), len(seq))
                    seq.append(("d", d))
                else:
                    seq.append(("a", self._edge_of_dart[d], d))
            seqs.append(seq)

        circles = []
        visited = set()
        for d0 in self.darts():
            if d0 in visited or self._edge_of_dart[d0] not in A:
                continue
            circle = []
            d = d0
            while True:
                visited.add(d)
                circle.append(("d", d))
                vi, idx = pos[self.alpha[d]]
                seq = seqs[vi]
                j = (idx + 1) % len(seq)
                while seq[j][0] != "d":
                    circle.append(seq[j])
                    j = (j + 1) % len(seq)
                d = seq[j][1]
                if d == d0:
                    break
            circles.append(circle)
        for seq in seqs:
            if seq and not any(item[0] == "d" for item in seq):
                circles.append(list(seq))

        pairing = {}
        label_of = {}
        for d in self.darts():
            lab = self._edge_of_dart[d]
            tok = ("d", d) if lab in A else ("a", lab, d)
            other = self.alpha[d]
            tok2 = ("d", other) if lab in A else ("a", lab, other)
            pairing[tok] = tok2
            label_of[tok] = lab
        weights = {}
        for lab, wt in self.weights.items():
            weights[lab] = wt.tait_negated() if lab in A else wt
        m, _ = map_from_rotations(circles, pairing, label_of,
                                  weights=weights or None,
                                  isolated_vertices=self.isolated_vertices)
        return m

    def with_weights(self, weights):
        return CombinatorialMap(self.sigma, self.alpha, self.isolated_vertices,
                                self.edge_labels, weights)

    def relabel_edges(self, mapping):
        """New map with edge ids pushed through ``mapping`` (a dict)."""
        labels = [mapping[lab] for lab in self.edge_labels]
        w = {mapping[lab]: wt for lab, wt in self.weights.items()}
        return CombinatorialMap(self.sigma, self.alpha, self.isolated_vertices,
                                labels, w or None, validate=False)

    def underlying_graph(self):
        """Forget the embedding; keep edge ids as labels."""
        vorb = self.vertex_orbits()
        vid = {}
        for i, o in enumerate(vorb):
            for d in o:
                vid[d] = i
        n = len(vorb) + self.isolated_vertices
        edges, labels = [], []
        for lab, (d1, d2) in zip(self.edge_labels, self._edge_pairs()):
            edges.append((vid[d1], vid[d2]))
            labels.append(lab)
        return AbstractMultigraph(n, edges, labels)

    # -- arrow presentation --------------------------------------------------

    def to_arrow_presentation(self):
        """Hide every edge: one cycle per vertex, all arrows 'along'."""
        cycles = tuple(tuple((self._edge_of_dart[d], 1) for d in o)
                       for o in self.vertex_orbits())
        cycles += tuple(() for _ in range(self.isolated_vertices))
        return ArrowPresentation(cycles, dict(self.weights) or None)

    # -- canonical forms ------------------------------------------------------

    def canonical_key(self, with_labels=True, with_weights=True):
        """Complete invariant of the ribbon graph up to homeomorphism
        (structure-preserving, possibly orientation-reversing) — with edge
        ids and weights kept when requested.
        """
        ck = ("key", with_labels, with_weights)
        if ck in self._cache:
            return self._cache[ck]
        inv = perm_inverse(self.sigma)
        comp_keys = []
        for comp in self.dart_components():
            comp_sorted = sorted(comp)
            best = None
            for s in (self.sigma, inv):
                for root in comp_sorted:
                    cand = self._bfs_code(s, root, comp, with_labels, with_weights)
                    if best is None or cand < best:
                        best = cand
            comp_keys.append(best)
        comp_keys.sort()
        key = (tuple(comp_keys), self.isolated_vertices)
        self._cache[ck] = key
        return key

    def _bfs_code(self, s, root, comp, with_labels, with_weights):
        num = {root: 0}
        order = [root]
        i = 0
        while i < len(order):
            d = order[i]
            i += 1
            for x in (s[d], self.alpha[d]):
                if x not in num:
                    num[x] = len(order)
                    order.append(x)
        S = tuple(num[s[d]] for d in order)
        A = tuple(num[self.alpha[d]] for d in order)
        L = W = ()
        if with_labels:
            L = tuple(self._edge_of_dart[d] for d in order)
        if with_weights and self.weights:
            W = tuple(_weight_code(self.weights.get(self._edge_of_dart[d]))
                      for d in order)
        return (S, A, L, W)

    # -- serialization --------------------------------------------------------

    def to_json_dict(self):
        """Wire format; darts are renumbered so edge k (by least dart)
        carries darts 2k-1, 2k."""
        order = sorted(range(len(self.edge_labels)),
                       key=lambda i: self.edge_labels[i])
        pairs = self._edge_pairs()
        renum = {}
        for k, i in enumerate(order):
            d1, d2 = pairs[i]
            renum[d1] = 2 * k + 1
            renum[d2] = 2 * k + 2
        n = self.num_darts
        sigma = [0] * n
        alpha = [0] * n
        for d in self.darts():
            sigma[renum[d] - 1] = renum[self.sigma[d]]
            alpha[renum[d] - 1] = renum[self.alpha[d]]
        out = {"sigma": sigma, "alpha": alpha,
               "isolated_vertices": self.isolated_vertices}
        wlist = []
        for k, i in enumerate(order):
            lab = self.edge_labels[i]
            if lab in self.weights:
                w = self.weights[lab]
                entry = {"edge": k + 1, "tait": w.tait}
                if w.oriented is not None:
                    entry["oriented"] = w.oriented
                if w.cd is not None:
                    entry["cd"] = w.cd
                wlist.append(entry)
        out["weights"] = wlist
        return out

    @classmethod
    def from_json_dict(cls, data):
        sigma = data["sigma"]
        alpha = data["alpha"]
        isolated = data.get("isolated_vertices", 0)
        weights = {}
        for entry in data.get("weights", ()):
            weights[int(entry["edge"])] = Weight(
                entry["tait"], entry.get("oriented"), entry.get("cd"))
        return cls(sigma, alpha, isolated, weights=weights or None)

    def __repr__(self):
        c = self.counts()
        return (f"CombinatorialMap(e={c.e}, v={c.v}, k={c.k}, p={c.p}, g={c.g})")


def _relabel_sorted_by_least_dart(alpha_list, keep, old_edge_of_dart):
    """After deletion the surviving edges keep their old ids; the new alpha
    orbits appear in the same least-dart order as the surviving old ones."""
    labels = []
    seen = set()
    for d in keep:
        lab = old_edge_of_dart[d]
        if lab not in seen:
            seen.add(lab)
            labels.append(lab)
    return labels


def _weight_code(w):
    if w is None:
        return ("", "", "")
    return (w.tait, w.oriented or "", w.cd or "")


def build_map(sigma, alpha, weights=None, isolated_vertices=0):
    """Validating constructor (wire semantics: weights keyed by edge id,
    edges = alpha orbits numbered by least dart)."""
    return CombinatorialMap(sigma, alpha, isolated_vertices, weights=weights)


def map_from_rotations(rotations, pairing, label_of, weights=None,
                       isolated_vertices=0):
    """Assemble a map from vertex rotations over opaque end tokens.

    ``rotations``: one list of tokens per vertex, in counterclockwise order;
    ``pairing``: fixed-point-free involution of tokens (the edges);
    ``label_of``: token -> edge id.  Darts are numbered so the edge with the
    i-th smallest id carries darts 2i-1 and 2i.

    Returns ``(map, token_to_dart)``.
    """
    first_pos = {}
    k = 0
    for rot in rotations:
        for tok in rot:
            if tok in first_pos:
                raise LabelNotTwice(f"token {tok!r} appears twice in rotations")
            first_pos[tok] = k
            k += 1
    labels = sorted({label_of[t] for t in first_pos})
    tok_by_label = defaultdict(list)
    for tok in sorted(first_pos, key=first_pos.get):
        tok_by_label[label_of[tok]].append(tok)
    dart_of = {}
    for i, lab in enumerate(labels):
        toks = tok_by_label[lab]
        if len(toks) != 2 or pairing[toks[0]] != toks[1]:
            raise LabelNotTwice(f"edge {lab!r} does not have exactly two ends")
        dart_of[toks[0]] = 2 * i + 1
        dart_of[toks[1]] = 2 * i + 2
    n = 2 * len(labels)
    sigma = [0] * (n + 1)
    alpha = [0] * (n + 1)
    extra_isolated = 0
    for rot in rotations:
        if not rot:
            extra_isolated += 1
            continue
        for j, tok in enumerate(rot):
            sigma[dart_of[tok]] = dart_of[rot[(j + 1) % len(rot)]]
            alpha[dart_of[tok]] = dart_of[pairing[tok]]
    m = CombinatorialMap(tuple(sigma), tuple(alpha),
                         isolated_vertices + extra_isolated,
                         edge_labels=labels, weights=weights, validate=False)
    return m, dart_of


# ----------------------------------------------------------------------
# arrow presentations


class ArrowPresentation:
    """Labelled directed arrows on oriented circles.

    ``cycles`` is a tuple of cycles; each cycle is a tuple of
    ``(label, direction)`` with direction ``+1`` (along the cycle) or ``-1``.
    Empty cycles stand for isolated vertices.  Two presentations are
    equivalent under reversing both arrows of any label set; ``canonical()``
    normalizes for that, for cycle rotation and for cycle order.
    """

    __slots__ = ("cycles", "label_weights")

    def __init__(self, cycles, label_weights=None):
        cycles = tuple(tuple((lab, int(d)) for lab, d in c) for c in cycles)
        counts = Counter(lab for c in cycles for lab, _ in c)
        bad = [lab for lab, k in counts.items() if k != 2]
        if bad:
            raise LabelNotTwice(f"labels {sorted(bad)} do not occur exactly twice")
        if any(d not in (1, -1) for c in cycles for _, d in c):
            raise LabelNotTwice("arrow directions must be +1 or -1")
        self.cycles = cycles
        self.label_weights = dict(label_weights) if label_weights else {}

    def labels(self):
        return sorted({lab for c in self.cycles for lab, _ in c})

    def canonical(self):
        """Rotate each cycle to its least encoding, flip pairs so the first
        occurrence of every label is 'along', sort cycles; iterate to a
        fixpoint (the three steps interact)."""
        cycles = [list(c) for c in self.cycles]
        for _ in range(16):
            before = [tuple(c) for c in cycles]
            flip = set()
            seen = set()
            for c in cycles:
                for lab, d in c:
                    if lab not in seen:
                        seen.add(lab)
                        if d != 1:
                            flip.add(lab)
            cycles = [[(lab, -d if lab in flip else d) for lab, d in c]
                      for c in cycles]
            cycles = [_least_rotation(c) for c in cycles]
            cycles.sort()
            if [tuple(c) for c in cycles] == before:
                break
        return ArrowPresentation(tuple(tuple(c) for c in cycles),
                                 self.label_weights or None)

    def to_map(self):
        return from_arrow_presentation(self)

    def __eq__(self, other):
        if not isinstance(other, ArrowPresentation):
            return NotImplemented
        return (self.canonical().cycles == other.canonical().cycles
                and self.label_weights == other.label_weights)

    def __hash__(self):
        return hash(self.canonical().cycles)

    def __repr__(self):
        return f"ArrowPresentation({list(self.cycles)!r})"


def _least_rotation(seq):
    if not seq:
        return []
    n = len(seq)
    best = None
    for i in range(n):
        rot = seq[i:] + seq[:i]
        if best is None or rot < best:
            best = rot
    return best


def from_arrow_presentation(ap):
    """Rebuild the oriented map an arrow presentation describes.

    Cycles may be written with either orientation; a consistent global
    re-orientation is solved for, and a presentation that admits none (a
    non-orientable ribbon graph) is rejected.

        >>> ap = ArrowPresentation([[(1, 1), (1, 1)]])   # same label twice
        >>> from_arrow_presentation(ap).counts().p       # the plane loop
        2
    """
    if not isinstance(ap, ArrowPresentation):
        ap = ArrowPresentation(ap)
    occ = defaultdict(list)
    for ci, cycle in enumerate(ap.cycles):
        for pos, (lab, d) in enumerate(cycle):
            occ[lab].append((ci, pos, d))

    ncyc = len(ap.cycles)
    flip = [None] * ncyc
    adj = defaultdict(list)          # cycle -> [(other cycle, parity)]
    for lab, hits in occ.items():
        (c1, _, d1), (c2, _, d2) = hits
        if c1 == c2:
            if d1 != d2:
                raise NonOrientable(
                    f"label {lab!r} is twisted on one cycle (non-orientable)")
        else:
            adj[c1].append((c2, 0 if d1 == d2 else 1))
            adj[c2].append((c1, 0 if d1 == d2 else 1))
    for c0 in range(ncyc):
        if flip[c0] is not None:
            continue
        flip[c0] = 0
        queue = deque([c0])
        while queue:
            c = queue.popleft()
            for c2, par in adj[c]:
                want = flip[c] ^ par
                if flip[c2] is None:
                    flip[c2] = want
                    queue.append(c2)
                elif flip[c2] != want:
                    raise NonOrientable(
                        "cycles cannot be consistently oriented (non-orientable)")

    rotations = []
    pairing = {}
    label_of = {}
    ends = defaultdict(list)
    for ci, cycle in enumerate(ap.cycles):
        items = list(cycle)
        if flip[ci]:
            items = [(lab, -d) for lab, d in reversed(items)]
        rot = []
        for pos, (lab, _d) in enumerate(items):
            tok = (ci, pos)
            rot.append(tok)
            label_of[tok] = lab
            ends[lab].append(tok)
        rotations.append(rot)
    for lab, toks in ends.items():
        pairing[toks[0]] = toks[1]
        pairing[toks[1]] = toks[0]
    weights = ap.label_weights or None
    m, _ = map_from_rotations(rotations, pairing, label_of, weights=weights)
    return m


# ----------------------------------------------------------------------
# comparisons


def map_equal(g, h, weights=True):
    """Equality of labelled ribbon graphs (up to structure-preserving
    homeomorphism, which includes reflections)."""
    if g.isolated_vertices != h.isolated_vertices:
        return False
    if sorted(g.edge_labels) != sorted(h.edge_labels):
        return False
    if weights and (g.weights or h.weights):
        if set(g.weights) != set(h.weights):
            return False
        if any(g.weights[k] != h.weights[k] for k in g.weights):
            return False
    return (g.canonical_key(True, weights) == h.canonical_key(True, weights))


def map_isomorphic(g, h, weights=True):
    """Isomorphism of ribbon graphs ignoring edge ids (weights respected
    when requested)."""
    if g.isolated_vertices != h.isolated_vertices:
        return False
    if g.counts()[:4] != h.counts()[:4]:
        return False
    return (g.canonical_key(False, weights) == h.canonical_key(False, weights))
