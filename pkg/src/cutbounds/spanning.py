"""Spanning structures: DFS trees, min/max spanning trees, and the layer
decompositions that turn a tree into families of induced-bipartite
certificates (parity layers, girth layers, edge-rooted layers)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .cuts import InducedBipartiteSubgraph, verify_induced_bipartite
from .graph import DisconnectedGraphError, WeightedGraph, girth as graph_girth


class OddCycleError(Exception):
    """A short odd cycle violates a layer-decomposition precondition."""


@dataclass(frozen=True)
class RootedSpanningTree:
    """Spanning tree with root(s), per-vertex level and parent map.

    ``roots`` has one vertex, or two tree-adjacent vertices when levels are
    measured from a marked tree edge (both endpoints at level 0).  ``kind``
    is "dfs" for trees with the no-cross-edge property, "arbitrary"
    otherwise.
    """

    parent: tuple[Optional[int], ...]
    roots: tuple[int, ...]
    level: tuple[int, ...]
    edge_ids: frozenset[int]
    kind: str
    weight: float

    def validate(self, g: WeightedGraph) -> None:
        n = len(self.parent)
        if n != g.n:
            raise AssertionError("tree size mismatch")
        if len(self.edge_ids) != max(g.n - 1, 0):
            raise AssertionError("not a spanning tree: wrong edge count")
        for r in self.roots:
            if self.level[r] != 0 or self.parent[r] is not None:
                raise AssertionError("root must have level 0 and no parent")
        for v in range(n):
            p = self.parent[v]
            if p is None:
                if v not in self.roots:
                    raise AssertionError(f"non-root vertex {v} has no parent")
                continue
            if self.level[v] != self.level[p] + 1:
                raise AssertionError(f"level invariant broken at {v}")
            if g.edge_id(v, p) not in self.edge_ids:
                raise AssertionError(f"parent edge of {v} not a tree edge")
        if self.kind == "dfs" and cross_edges(g, self):
            raise AssertionError("DFS tree has a cross edge")


def _orient(g: WeightedGraph, edge_ids: frozenset[int], roots: Sequence[int],
            kind: str) -> RootedSpanningTree:
    """Build parent/level maps by BFS over the tree edges from the roots."""
    parent: list[Optional[int]] = [None] * g.n
    level = [-1] * g.n
    for r in roots:
        level[r] = 0
    queue = deque(roots)
    while queue:
        u = queue.popleft()
        for v, eid in g.adj[u]:
            if eid in edge_ids and level[v] < 0:
                level[v] = level[u] + 1
                parent[v] = u
                queue.append(v)
    if any(l < 0 for l in level):
        raise DisconnectedGraphError("edge set does not span the graph")
    w = float(sum(g.edges[e][2] for e in edge_ids))
    return RootedSpanningTree(tuple(parent), tuple(roots), tuple(level),
                              edge_ids, kind, w)


def dfs_tree(g: WeightedGraph, root: int = 0) -> RootedSpanningTree:
    """Depth-first search tree; neighbors explored in ascending vertex id."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no spanning tree")
    parent: list[Optional[int]] = [None] * g.n
    level = [-1] * g.n
    level[root] = 0
    edge_ids: set[int] = set()
    stack = [(root, iter(g.adj[root]))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for v, eid in it:
            if level[v] < 0:
                level[v] = level[u] + 1
                parent[v] = u
                edge_ids.add(eid)
                stack.append((v, iter(g.adj[v])))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if any(l < 0 for l in level):
        raise DisconnectedGraphError("graph is not connected")
    w = float(sum(g.edges[e][2] for e in edge_ids))
    return RootedSpanningTree(tuple(parent), (root,), tuple(level),
                              frozenset(edge_ids), "dfs", w)


def cross_edges(g: WeightedGraph, t: RootedSpanningTree) -> list[int]:
    """Non-tree edges joining two vertices neither an ancestor of the other."""
    bad = []
    for eid, (u, v, _) in enumerate(g.edges):
        if eid in t.edge_ids:
            continue
        a, b = (u, v) if t.level[u] >= t.level[v] else (v, u)
        while t.level[a] > t.level[b]:
            a = t.parent[a]  # type: ignore[assignment]
        if a != b:
            bad.append(eid)
    return bad


def _kruskal(g: WeightedGraph, maximize: bool) -> frozenset[int]:
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no spanning tree")
    order = sorted(range(g.m),
                   key=lambda e: (-g.edges[e][2] if maximize else g.edges[e][2], e))
    par = list(range(g.n))

    def find(x: int) -> int:
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    chosen: set[int] = set()
    for eid in order:
        u, v, _ = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            par[ru] = rv
            chosen.add(eid)
    if len(chosen) != g.n - 1:
        raise DisconnectedGraphError("graph is not connected")
    return frozenset(chosen)


def min_spanning_tree(g: WeightedGraph, root: int = 0) -> RootedSpanningTree:
    return _orient(g, _kruskal(g, maximize=False), (root,), "arbitrary")


def max_spanning_tree(g: WeightedGraph, root: int = 0) -> RootedSpanningTree:
    return _orient(g, _kruskal(g, maximize=True), (root,), "arbitrary")


def reroot_at_edge(g: WeightedGraph, t: RootedSpanningTree,
                   marked_eid: int) -> RootedSpanningTree:
    """Re-level a tree from both endpoints of a marked tree edge.

    Levels become min distance to either endpoint; both endpoints sit at
    level 0 so the marked edge is the only level-0/level-0 tree edge.
    """
    if marked_eid not in t.edge_ids:
        raise ValueError("marked edge must be a tree edge")
    u, v, _ = g.edges[marked_eid]
    return _orient(g, t.edge_ids, (u, v), t.kind)


def parity_layer_certificates(
        g: WeightedGraph, t: RootedSpanningTree
) -> tuple[InducedBipartiteSubgraph, InducedBipartiteSubgraph]:
    """Split tree edges by the parity of their upper level.

    Edges between levels i and i+1 go to the odd-i part or the even-i part.
    Each part's components are stars, induced whenever the children of any
    node are pairwise non-adjacent (always true for DFS trees; needs a
    triangle-free host for arbitrary trees).  Verification failures
    surface as NotInducedError / NotBipartiteError.
    """
    if len(t.roots) != 1:
        raise ValueError("parity layers need a single-rooted tree")
    odd, even = [], []
    for eid in sorted(t.edge_ids):
        u, v, _ = g.edges[eid]
        i = min(t.level[u], t.level[v])
        (odd if i % 2 == 1 else even).append(eid)
    return (verify_induced_bipartite(g, odd), verify_induced_bipartite(g, even))


def layer_edge_sets(g: WeightedGraph, t: RootedSpanningTree, k: int) -> list[list[int]]:
    """The k layered edge sets of a leveled tree.

    Set j keeps every tree edge except those between levels i and i+1 with
    i = j (mod k), then adds every non-tree edge whose endpoints fall in
    one connected component of the kept forest.  A marked level-0/level-0
    edge is never dropped.
    """
    tree_ids = sorted(t.edge_ids)
    sets: list[list[int]] = []
    non_tree = [e for e in range(g.m) if e not in t.edge_ids]
    for j in range(k):
        kept = []
        for eid in tree_ids:
            u, v, _ = g.edges[eid]
            lu, lv = t.level[u], t.level[v]
            if lu == lv:
                kept.append(eid)
                continue
            if min(lu, lv) % k != j:
                kept.append(eid)
        par = list(range(g.n))

        def find(x: int) -> int:
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        for eid in kept:
            u, v, _ = g.edges[eid]
            par[find(u)] = find(v)
        extra = [eid for eid in non_tree
                 if find(g.edges[eid][0]) == find(g.edges[eid][1])]
        sets.append(sorted(kept + extra))
    return sets


def tree_distances_from(g: WeightedGraph, t: RootedSpanningTree, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v, eid in g.adj[u]:
            if eid in t.edge_ids and dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def shortest_fundamental_odd_cycle(g: WeightedGraph, t: RootedSpanningTree) -> Optional[int]:
    """Min length of an odd cycle in T + e over non-tree edges e; None if none.

    The cycle closed by e = (u, v) has d_T(u, v) + 1 edges.
    """
    best: Optional[int] = None
    dists: dict[int, list[int]] = {}
    for eid, (u, v, _) in enumerate(g.edges):
        if eid in t.edge_ids:
            continue
        if u not in dists:
            dists[u] = tree_distances_from(g, t, u)
        cyc = dists[u][v] + 1
        if cyc % 2 == 1 and (best is None or cyc < best):
            best = cyc
    return best


def girth_layer_certificates(g: WeightedGraph, t: RootedSpanningTree, k: int,
                             marked_eid: Optional[int] = None
                             ) -> list[InducedBipartiteSubgraph]:
    """The k layer certificates of a spanning tree.

    Without a marked edge: t must be a DFS tree, k even and at most the
    girth; every tree edge then lands in exactly k-1 of the k sets.  With a
    marked tree edge: t may be arbitrary and k any positive integer, but
    T + e must contain no odd cycle of length 2k-1 or less for every
    non-tree edge e (checked); levels are measured from the marked edge's
    endpoints and the marked edge lands in all k sets.
    """
    if marked_eid is None:
        if k < 2 or k % 2 != 0:
            raise ValueError("k must be a positive even integer")
        if t.kind != "dfs":
            raise ValueError("girth layers need a DFS tree (no cross edges)")
        gi = graph_girth(g)
        if gi is not None and gi < k:
            raise OddCycleError(f"girth {gi} is below k = {k}")
        leveled = t
    else:
        if k < 1:
            raise ValueError("k must be a positive integer")
        leveled = reroot_at_edge(g, t, marked_eid)
        r = shortest_fundamental_odd_cycle(g, leveled)
        if r is not None and r <= 2 * k - 1:
            raise OddCycleError(
                f"odd cycle of length {r} <= 2k-1 = {2 * k - 1} through the tree")
    return [verify_induced_bipartite(g, s) for s in layer_edge_sets(g, leveled, k)]
