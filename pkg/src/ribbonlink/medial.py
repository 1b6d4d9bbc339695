"""Medial 4-valent diagrams of connected plane maps.

Every connected link diagram is the medial graph of its Tait graph, so
going back from a plane map ``T`` to a PD code is: build the medial map
(one 4-valent vertex per edge of ``T``, one medial edge per corner of
``T``), orient the two medial strands through every vertex, pick an
under-strand per vertex, and number the arcs along the strands.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import NotPlane
from .maps import perm_inverse

# slot layout at the medial vertex of an edge (u --d ... d'-- v), listed
# counterclockwise; slots 0/2 are the two ends of the strand crossing the
# edge transversally near d' and d ("into" axis), slots 1/3 the strand
# running alongside the edge ("after" axis).
NE, NW, SW, SE = 0, 1, 2, 3
INTO_SLOTS = (NE, SW)
AFTER_SLOTS = (NW, SE)


class MedialStructure:
    """Medial graph of a connected plane map with strand bookkeeping.

    ``slots[e]`` lists the four corner tokens (darts of ``T``) around the
    medial vertex of edge ``e`` counterclockwise.  ``strands`` are the
    reference-oriented closed strands, as lists of directed passes
    ``(edge, entering slot)``.
    """

    __slots__ = ("T", "edge_order", "slots", "tok_locs", "strands",
                 "pass_strand", "into_pass", "after_pass")

    def __init__(self, T):
        if not T.is_plane:
            raise NotPlane("medial construction needs a connected plane map")
        self.T = T
        inv = perm_inverse(T.sigma)
        self.edge_order = sorted(T.edge_labels)
        self.slots = {}
        self.tok_locs = defaultdict(list)
        for e in self.edge_order:
            d, dp = T.darts_of_edge(e)
            arr = [inv[dp], d, inv[d], dp]          # NE, NW, SW, SE
            self.slots[e] = arr
            for s, tok in enumerate(arr):
                self.tok_locs[tok].append((e, s))
        for tok, locs in self.tok_locs.items():
            assert len(locs) == 2, "corner token must have two medial ends"
        self._trace_strands()

    def _other_loc(self, e, s):
        tok = self.slots[e][s]
        l1, l2 = self.tok_locs[tok]
        return l2 if l1 == (e, s) else l1

    def _next_pass(self, e, s):
        """Entering (e, s), leave through the opposite slot."""
        return self._other_loc(e, (s + 2) % 4)

    def _trace_strands(self):
        self.strands = []
        self.pass_strand = {}
        visited = set()
        for e in self.edge_order:
            for s in range(4):
                if (e, s) in visited:
                    continue
                cyc = []
                p = (e, s)
                while p not in visited:
                    visited.add(p)
                    cyc.append(p)
                    p = self._next_pass(*p)
                # mark the reversed traversal as visited too
                for (pe, ps) in cyc:
                    visited.add((pe, (ps + 2) % 4))
                idx = len(self.strands)
                self.strands.append(cyc)
                for pp in cyc:
                    self.pass_strand[pp] = idx
        self.into_pass = {}
        self.after_pass = {}
        for e in self.edge_order:
            for s in INTO_SLOTS:
                if (e, s) in self.pass_strand:
                    self.into_pass[e] = (e, s)
            for s in AFTER_SLOTS:
                if (e, s) in self.pass_strand:
                    self.after_pass[e] = (e, s)
            assert e in self.into_pass and e in self.after_pass

    def directed_cycle(self, strand_idx, reverse):
        """The strand as a directed pass cycle, deterministically rooted."""
        cyc = self.strands[strand_idx]
        if reverse:
            cyc = [(e, (s + 2) % 4) for (e, s) in reversed(cyc)]
        i = cyc.index(min(cyc))
        return cyc[i:] + cyc[:i]

    def build_diagram(self, under_axis, reverse):
        """The decorated medial as a validated diagram.

        ``under_axis``: edge -> "into" or "after" (which strand dives under);
        ``reverse``: strand index -> bool (flip the reference orientation).

        Returns ``(diagram, pd_text, crossing_order)``; ``crossing_order``
        lists the T-edge labels in crossing order.  The diagram object is
        built directly from the decoration: a PD *text* cannot distinguish
        the two orientations of a link component with at most two arcs, so
        re-parsing ``pd_text`` may legally read such components reversed.
        """
        from .diagrams import LinkDiagram

        # the arc leaving pass j carries number base+j+1; the strand enters
        # pass 0 on arc base+L, giving the single wraparound per component
        arc_no = {}
        succ = {}
        components = []
        base = 0
        for idx in range(len(self.strands)):
            cyc = self.directed_cycle(idx, reverse[idx])
            L = len(cyc)
            for j, (e, s) in enumerate(cyc):
                tok = self.slots[e][(s + 2) % 4]     # arc we exit through
                arc_no[tok] = base + j + 1
            for j in range(L):
                succ[base + j + 1] = base + j + 2 if j + 1 < L else base + 1
            components.append(tuple(range(base + 1, base + L + 1)))
            base += L
        records = []
        over_in = []
        for e in self.edge_order:
            p = self.into_pass[e] if under_axis[e] == "into" else self.after_pass[e]
            q = self.after_pass[e] if under_axis[e] == "into" else self.into_pass[e]
            s = p[1]
            if reverse[self.pass_strand[p]]:
                s = (s + 2) % 4
            so = q[1]
            if reverse[self.pass_strand[q]]:
                so = (so + 2) % 4
            records.append(tuple(arc_no[self.slots[e][(s + k) % 4]]
                                 for k in range(4)))
            over_in.append((so - s) % 4)
        diagram = LinkDiagram(records, over_in, succ, components)
        text = " ".join("X({},{},{},{})".format(*r) for r in records)
        return diagram, text, list(self.edge_order)
