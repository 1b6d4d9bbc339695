"""Unembedded multigraphs: biparticity, Eulerian components, blocks,
exact isomorphism.

These are the "abstract graph" questions asked of the embedded objects:
loops and parallel edges are allowed everywhere, and loops count twice
towards degrees.
"""

from __future__ import annotations

from collections import Counter, defaultdict

from .errors import BudgetExceeded


class AbstractMultigraph:
    """A multigraph on vertices ``0..n-1`` given by a list of unordered
    endpoint pairs.  Loops (``u == u``) are allowed.  ``labels``, when given,
    runs parallel to ``edges``.
    """

    __slots__ = ("n", "edges", "labels")

    def __init__(self, n, edges, labels=None):
        self.n = int(n)
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for {self.n} vertices")
            norm.append((u, v) if u <= v else (v, u))
        self.edges = tuple(norm)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(norm):
                raise ValueError("labels must run parallel to edges")
        self.labels = labels

    # -- basics ----------------------------------------------------------

    @property
    def m(self):
        return len(self.edges)

    def degrees(self):
        """Vertex degrees, loops counted twice."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self):
        """vertex -> Counter of neighbours (a loop at u contributes u twice)."""
        adj = [Counter() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u][v] += 1
            if u != v:
                adj[v][u] += 1
        return adj

    def components(self):
        """List of vertex sets, one per connected component."""
        seen = [False] * self.n
        nbrs = defaultdict(set)
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], set()
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.add(x)
                for y in nbrs[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(comp)
        return comps

    # -- predicates --------------------------------------------------------

    def is_bipartite(self):
        """Proper 2-colourability; any loop makes this False."""
        if any(u == v for u, v in self.edges):
            return False
        colour = [-1] * self.n
        nbrs = defaultdict(set)
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        for s in range(self.n):
            if colour[s] != -1:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if colour[y] == -1:
                        colour[y] = colour[x] ^ 1
                        stack.append(y)
                    elif colour[y] == colour[x]:
                        return False
        return True

    def components_eulerian(self):
        """True iff every vertex has even degree (loops twice), i.e. each
        connected component is Eulerian."""
        return all(d % 2 == 0 for d in self.degrees())

    def blocks(self):
        """Biconnected decomposition.

        Returns ``(blocks, cut_vertices)`` where each block is a frozenset of
        edge indices.  Loops form singleton blocks and never create cut
        vertices.
        """
        incid = defaultdict(list)          # vertex -> [(edge index, other end)]
        loop_blocks = []
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                loop_blocks.append(frozenset([i]))
            else:
                incid[u].append((i, v))
                incid[v].append((i, u))

        disc = [0] * self.n
        low = [0] * self.n
        timer = [1]
        blocks = []
        cut = set()
        estack = []

        for root in range(self.n):
            if disc[root]:
                continue
            # iterative DFS
            stack = [(root, -1, iter(incid[root]))]
            disc[root] = low[root] = timer[0]
            timer[0] += 1
            root_children = 0
            while stack:
                x, pedge, it = stack[-1]
                advanced = False
                for ei, y in it:
                    if ei == pedge:
                        continue
                    if not disc[y]:
                        estack.append(ei)
                        disc[y] = low[y] = timer[0]
                        timer[0] += 1
                        if x == root:
                            root_children += 1
                        stack.append((y, ei, iter(incid[y])))
                        advanced = True
                        break
                    elif disc[y] < disc[x]:
                        estack.append(ei)
                        low[x] = min(low[x], disc[y])
                while stack and not advanced:
                    stack.pop()
                    if not stack:
                        break
                    px = stack[-1][0]
                    low[px] = min(low[px], low[x])
                    if low[x] >= disc[px]:
                        blk = set()
                        while True:
                            ei = estack.pop()
                            blk.add(ei)
                            if ei == pedge:
                                break
                        blocks.append(frozenset(blk))
                        if px != root or root_children > 1:
                            cut.add(px)
                    break
        blocks.extend(loop_blocks)
        return blocks, cut

    def predicates(self):
        """The bundle of abstract-graph questions asked of embedded objects:
        2-colourability, Eulerian components, biconnected decomposition."""
        blocks, cut_vertices = self.blocks()
        return {
            "is_bipartite": self.is_bipartite(),
            "components_eulerian": self.components_eulerian(),
            "blocks": blocks,
            "cut_vertices": cut_vertices,
        }

    # -- isomorphism -------------------------------------------------------

    def is_isomorphic(self, other, budget=40):
        """Exact isomorphism by backtracking with degree/multiplicity pruning.

        Raises :class:`BudgetExceeded` instead of guessing when either graph
        has more than ``budget`` edges.
        """
        if self.m > budget or other.m > budget:
            raise BudgetExceeded(
                f"isomorphism budget {budget} exceeded ({self.m} vs {other.m} edges)")
        if self.n != other.n or self.m != other.m:
            return False
        if sorted(self.degrees()) != sorted(other.degrees()):
            return False

        adj1 = self.adjacency()
        adj2 = other.adjacency()
        loops1 = sorted(adj1[v][v] for v in range(self.n))
        loops2 = sorted(adj2[v][v] for v in range(self.n))
        if loops1 != loops2:
            return False

        col1 = _refine_colours(self.n, adj1)
        col2 = _refine_colours(other.n, adj2)
        if sorted(col1) != sorted(col2):
            return False

        by_colour2 = defaultdict(list)
        for v in range(other.n):
            by_colour2[col2[v]].append(v)

        # match rarest colours first, then high degree
        deg1 = self.degrees()
        order = sorted(range(self.n),
                       key=lambda v: (len(by_colour2[col1[v]]), -deg1[v], v))
        mapping = [-1] * self.n
        used = [False] * other.n

        def extend(k):
            if k == self.n:
                return True
            v = order[k]
            for w in by_colour2[col1[v]]:
                if used[w]:
                    continue
                if adj1[v][v] != adj2[w][w]:
                    continue
                ok = True
                for u, mult in adj1[v].items():
                    if u == v:
                        continue
                    mu = mapping[u]
                    if mu != -1 and adj2[w][mu] != mult:
                        ok = False
                        break
                if not ok:
                    continue
                # reverse direction: mapped neighbours of w must pull back
                for uw, mult in adj2[w].items():
                    if uw == w or not used[uw]:
                        continue
                    pre = _preimage(mapping, uw)
                    if adj1[v][pre] != mult:
                        ok = False
                        break
                if not ok:
                    continue
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
            return False

        return extend(0)

    # -- export --------------------------------------------------------------

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for i, (u, v) in enumerate(self.edges):
            lab = self.labels[i] if self.labels is not None else i + 1
            lines.append(f'  {u} -- {v} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"AbstractMultigraph(n={self.n}, edges={list(self.edges)})"


def _preimage(mapping, w):
    for v, mv in enumerate(mapping):
        if mv == w:
            return v
    return -1


def _refine_colours(n, adj, rounds=4):
    """Weisfeiler-Leman style colour refinement (loops folded into the
    initial colour).  Colour ids are assigned by sorted signature so that
    corresponding vertices of isomorphic graphs get equal ids."""
    colour = [(sum(adj[v].values()) + adj[v][v], adj[v][v]) for v in range(n)]
    for _ in range(rounds):
        sigs = [(colour[v],
                 tuple(sorted((colour[u], mult)
                              for u, mult in adj[v].items() if u != v)))
                for v in range(n)]
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        stable = len(set(new)) == len(set(colour))
        colour = new
        if stable:
            break
    return colour
