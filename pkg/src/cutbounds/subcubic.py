"""Constructive cut machinery for triangle-free subcubic graphs.

Pipeline for the 8/11 coefficient bound: pad the graph to a 3-regular
triangle-free supergraph with zero-weight gadgets, 3-color it (Brooks),
orient every vertex toward the neighbor whose color is unique in its
neighborhood (the successor digraph), classify edges by how many endpoints
realize them as successor arcs, and combine three certified cuts built
from that structure.  Also hosts the 2/3 coloring cut, the tree
percolation sampler, its combination bound, and the two-stage random
redistribution sampler.
"""

from __future__ import annotations

import random
import statistics
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bounds import (BoundReport, MONTE_CARLO, _exact_total, _report, slack)
from .coloring import matching_vizing_bound, shearer_coefficient
from .cuts import Cut, local_search_improve, place_blocks
from .graph import (DisconnectedGraphError, TriangleFoundError, WeightedGraph,
                    stats)
from .spanning import (RootedSpanningTree, _orient, layer_edge_sets,
                       max_spanning_tree, shortest_fundamental_odd_cycle,
                       tree_distances_from)

EIGHT_ELEVENTHS = Fraction(8, 11)
PERCOLATION_P = 0.85
COMBINATION_WEIGHT_A = 0.46545  # on the percolation inequality (p = 0.85, r = 5)
COMBINATION_WEIGHT_B = 0.53455  # on the 8/11 inequality
TREE_COEFFICIENT = 0.3193


class ClaimViolationError(Exception):
    """A structural property of the successor decomposition failed.

    These properties are consequences of the construction; a violation
    signals an upstream bug, so callers get diagnostics instead of a cut.
    """


# =====================================================================
# vertex 3-coloring (constructive Brooks for connected subcubic graphs)
# =====================================================================


@dataclass(frozen=True)
class VertexColoring3:
    """Proper vertex coloring with classes 1..3."""

    class_of: tuple[int, ...]

    def validate(self, g: WeightedGraph) -> None:
        for u, v, _ in g.edges:
            if self.class_of[u] == self.class_of[v]:
                raise AssertionError(f"monochromatic edge ({u}, {v})")
        if any(c not in (1, 2, 3) for c in self.class_of):
            raise AssertionError("color out of range")

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: tuple[list[int], ...] = ([], [], [])
        for v, c in enumerate(self.class_of):
            out[c - 1].append(v)
        return tuple(tuple(c) for c in out)


def _peel_greedy(g: WeightedGraph) -> list[int]:
    """Greedy 3-coloring in reverse degeneracy order.

    Valid for any connected graph that has a vertex of degree at most 2:
    at every peeling step some remaining vertex has at most two remaining
    neighbors, so in reverse order every vertex sees at most two colors.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    order = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x] and deg[x] <= 2), default=None)
        if v is None:
            raise AssertionError("no low-degree vertex available while peeling")
        alive[v] = False
        order.append(v)
        for u, _ in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
    color = [0] * g.n
    for v in reversed(order):
        used = {color[u] for u, _ in g.adj[v] if color[u]}
        color[v] = min(c for c in (1, 2, 3) if c not in used)
    return color


def _articulation_points(g: WeightedGraph) -> list[int]:
    """Articulation points of a connected graph (iterative lowpoint DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    arts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v, _ in it:
                if disc[v] == -1:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, iter(g.adj[v])))
                    advanced = True
                    break
                elif v != parent[u]:
                    low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        arts.add(p)
        if root_children >= 2:
            arts.add(root)
    return sorted(arts)


def brooks_3_coloring(g: WeightedGraph) -> VertexColoring3:
    """Proper 3-coloring of a connected triangle-free subcubic graph.

    Non-regular graphs are colored greedily in reverse degeneracy order.
    For 3-regular graphs with an articulation point, the graph splits
    there into pieces where the cut vertex has degree at most 2 and the
    greedy applies; otherwise (2-connected cubic) some vertex has two
    non-adjacent neighbors whose removal keeps the graph connected; those
    two get the same color and the rest is colored greedily away from a
    reverse BFS order.
    """
    if g.n == 0:
        raise DisconnectedGraphError("cannot color the empty graph")
    if not g.is_connected():
        raise DisconnectedGraphError("coloring expects a connected graph")
    if g.max_degree() > 3:
        raise ValueError("graph is not subcubic")
    if not stats(g).triangle_free:
        raise TriangleFoundError("coloring expects a triangle-free graph")
    color = _brooks_connected(g)
    out = VertexColoring3(tuple(color))
    out.validate(g)
    return out


def _brooks_connected(g: WeightedGraph) -> list[int]:
    if g.n == 1:
        return [1]
    if min(g.degree(v) for v in range(g.n)) <= 2:
        return _peel_greedy(g)
    arts = _articulation_points(g)
    if arts:
        return _color_split_at(g, arts[0])
    return _precolored_pair_greedy(g)


def _color_split_at(g: WeightedGraph, a: int) -> list[int]:
    # pieces are component-of(G - a) + {a}; a has degree <= 2 in each piece,
    # so the peel greedy applies; permute piece colors to agree at a
    rest, _, _ = g.induced([v for v in range(g.n) if v != a])
    color = [0] * g.n
    for comp in rest.components():
        orig = [v if v < a else v + 1 for v in comp]  # undo the relabel shift
        sub, orig_v, _ = g.induced(orig + [a])
        piece = _peel_greedy(sub)
        want = piece[orig_v.index(a)]
        swap = {1: 1, 2: 2, 3: 3}
        if want != 1:
            swap[want], swap[1] = 1, want
        for i, v in enumerate(orig_v):
            color[v] = swap[piece[i]]
    color[a] = 1
    return color


def _precolored_pair_greedy(g: WeightedGraph) -> list[int]:
    # 2-connected cubic: find v with neighbors x, y (non-adjacent: the graph
    # is triangle-free) such that G - {x, y} stays connected
    for v in range(g.n):
        for x, y in combinations(g.neighbors(v), 2):
            if g.has_edge(x, y):
                continue
            if not _connected_without(g, (x, y)):
                continue
            dist = _bfs_without(g, v, (x, y))
            order = sorted((u for u in range(g.n) if u not in (x, y)),
                           key=lambda u: (-dist[u], u))
            color = [0] * g.n
            color[x] = color[y] = 1
            for u in order:
                used = {color[t] for t, _ in g.adj[u] if color[t]}
                color[u] = min(c for c in (1, 2, 3) if c not in used)
            return color
    raise AssertionError("no precoloring pair found in a 2-connected cubic graph")


def _connected_without(g: WeightedGraph, banned: tuple[int, ...]) -> bool:
    start = next(v for v in range(g.n) if v not in banned)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w, _ in g.adj[u]:
            if w not in banned and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n - len(banned)


def _bfs_without(g: WeightedGraph, src: int, banned: tuple[int, ...]) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w, _ in g.adj[u]:
            if w not in banned and dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def color_components(g: WeightedGraph) -> VertexColoring3:
    """Proper 3-coloring of a (possibly disconnected) tf subcubic graph."""
    color = [0] * max(g.n, 1)
    for comp in g.components():
        sub, orig_v, _ = g.induced(comp)
        piece = brooks_3_coloring(sub)
        for i, v in enumerate(orig_v):
            color[v] = piece.class_of[i]
    out = VertexColoring3(tuple(color[: g.n]))
    out.validate(g)
    return out


# =====================================================================
# regularization
# =====================================================================


@dataclass(frozen=True)
class CubicExtension:
    """3-regular triangle-free supergraph with zero-weight padding.

    The first ``base.n`` vertices and the first ``base.m`` edges coincide
    with the original graph; every added edge has weight zero, so any cut
    of the extension restricts to a cut of the base of the same weight.
    """

    graph: WeightedGraph
    base: WeightedGraph
    gadget_count: int

    def restrict(self, cut: Cut) -> Cut:
        return Cut.from_side(self.base, cut.side[: self.base.n])


def regularize_to_cubic(g: WeightedGraph) -> CubicExtension:
    """Pad every deficient vertex with degree-completing gadgets.

    Each gadget is a six-vertex complete bipartite block with one edge
    subdivided; its subdivision vertex has two internal edges and attaches
    to the deficient vertex, keeping the result triangle-free.
    """
    st = stats(g)
    if not st.triangle_free:
        raise TriangleFoundError("regularization expects a triangle-free graph")
    if st.max_degree > 3:
        raise ValueError("graph is not subcubic")
    edges = [(u, v, w) for u, v, w in g.edges]
    n = g.n
    gadgets = 0
    for s in range(g.n):
        for _ in range(3 - g.degree(s)):
            a0, a1, a2, b0, b1, b2, mid = range(n, n + 7)
            for x, y in ((a0, b1), (a0, b2), (a1, b0), (a1, b1), (a1, b2),
                         (a2, b0), (a2, b1), (a2, b2), (a0, mid), (b0, mid)):
                edges.append((x, y, 0.0))
            edges.append((s, mid, 0.0))
            n += 7
            gadgets += 1
    if gadgets == 0:
        return CubicExtension(g, g, 0)
    return CubicExtension(WeightedGraph(n, edges), g, gadgets)


# =====================================================================
# successor digraph and edge classification
# =====================================================================


@dataclass(frozen=True)
class SuccessorDigraph:
    """Functional digraph v -> succ[v] on the colored graph.

    succ[v] is defined iff exactly one color occurs exactly once among
    v's neighbors, and then points at that neighbor; out-degree is at
    most one by construction.
    """

    succ: tuple[Optional[int], ...]

    def arcs(self) -> list[tuple[int, int]]:
        return [(v, s) for v, s in enumerate(self.succ) if s is not None]


@dataclass(frozen=True)
class EdgeClassification:
    """Per-edge count (0, 1 or 2) of endpoints whose successor arc is the edge.

    Class-2 edges form a matching; classes 1 and 2 are exactly the edges
    of the underlying successor graph.
    """

    class_of_edge: tuple[int, ...]

    def edge_ids(self, cls: int) -> tuple[int, ...]:
        return tuple(e for e, c in enumerate(self.class_of_edge) if c == cls)

    def weights(self, g: WeightedGraph) -> tuple[float, float, float]:
        w = [0.0, 0.0, 0.0]
        for e, c in enumerate(self.class_of_edge):
            w[c] += g.edges[e][2]
        return (w[0], w[1], w[2])


def successor_digraph(g: WeightedGraph, coloring: VertexColoring3) -> SuccessorDigraph:
    coloring.validate(g)
    succ: list[Optional[int]] = [None] * g.n
    for v in range(g.n):
        counts: dict[int, int] = {}
        for u, _ in g.adj[v]:
            c = coloring.class_of[u]
            counts[c] = counts.get(c, 0) + 1
        singles = [c for c, k in counts.items() if k == 1]
        if len(singles) == 1:
            target = singles[0]
            succ[v] = next(u for u, _ in g.adj[v]
                           if coloring.class_of[u] == target)
    return SuccessorDigraph(tuple(succ))


def classify_edges(g: WeightedGraph, succ: SuccessorDigraph) -> EdgeClassification:
    cls = [0] * g.m
    for v, s in enumerate(succ.succ):
        if s is not None:
            eid = g.edge_id(v, s)
            if eid is None:
                raise ClaimViolationError(f"successor arc ({v}, {s}) is not an edge")
            cls[eid] += 1
    out = EdgeClassification(tuple(cls))
    # class-2 edges must form a matching (out-degree <= 1 forces it)
    seen: set[int] = set()
    for e in out.edge_ids(2):
        u, v, _ = g.edges[e]
        if u in seen or v in seen:
            raise ClaimViolationError("mutual successor edges share a vertex")
        seen.add(u)
        seen.add(v)
    return out


def _class_weights_exact(g: WeightedGraph, cls: EdgeClassification):
    if not g.integer_weights:
        return None
    w = [Fraction(0)] * 3
    for e, c in enumerate(cls.class_of_edge):
        w[c] += Fraction(int(g.edges[e][2]))
    return tuple(w)


# =====================================================================
# the three certified cuts
# =====================================================================


def _two_color_blocks(g: WeightedGraph, edge_ids: Sequence[int]) -> list[dict[int, int]]:
    """2-color the components of an edge subset; raise if one is odd."""
    adj: dict[int, list[int]] = {}
    for e in edge_ids:
        u, v, _ = g.edges[e]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color: dict[int, int] = {}
    blocks: list[dict[int, int]] = []
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 0
        block = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = color[u] ^ 1
                    block[v] = color[v]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise ClaimViolationError(
                        f"edge set component at vertex {start} is not bipartite")
        blocks.append(block)
    return blocks


def per_class_cut(g: WeightedGraph, coloring: VertexColoring3,
                  succ: SuccessorDigraph,
                  cls: Optional[EdgeClassification] = None
                  ) -> tuple[Cut, float, Optional[Fraction]]:
    """Best of the three drop-one-class cuts.

    Dropping every successor edge owned by one color class leaves each of
    that class's vertices attached to a single other class, so the residue
    is bipartite.  Certified value: w0 + (2/3) w1 + (1/3) w2 over the edge
    classes, the average of the three residues.
    """
    cls = cls or classify_edges(g, succ)
    best: Optional[Cut] = None
    for i in (1, 2, 3):
        dropped = set()
        for v, s in enumerate(succ.succ):
            if s is not None and coloring.class_of[v] == i:
                dropped.add(g.edge_id(v, s))
        residue = [e for e in range(g.m) if e not in dropped]
        cut = place_blocks(g, _two_color_blocks(g, residue))
        if best is None or cut.weight > best.weight:
            best = cut
    w0, w1, w2 = cls.weights(g)
    value = w0 + 2.0 * w1 / 3.0 + w2 / 3.0
    exact_w = _class_weights_exact(g, cls)
    exact = (exact_w[0] + Fraction(2, 3) * exact_w[1] + Fraction(1, 3) * exact_w[2]
             if exact_w is not None else None)
    return best, value, exact


def _assert_cycles_divisible(h: WeightedGraph, tree_ids: frozenset[int]) -> None:
    """Every non-tree edge closes a cycle of length divisible by 3."""
    if h.m == len(tree_ids):
        return
    t = _orient(h, tree_ids, (0,), "arbitrary")
    dists: dict[int, list[int]] = {}
    for eid in range(h.m):
        if eid in tree_ids:
            continue
        u, v, _ = h.edges[eid]
        if u not in dists:
            dists[u] = tree_distances_from(h, t, u)
        cyc = dists[u][v] + 1
        if cyc % 3 != 0:
            raise ClaimViolationError(
                f"cycle of length {cyc} through a non-successor edge "
                "(expected a multiple of 3)")


def _layered_local_cut(h: WeightedGraph, tree_ids: frozenset[int],
                       roots: tuple[int, ...], k: int = 4) -> Cut:
    """Best of the k layer cuts of a component with its spanning tree."""
    t = _orient(h, tree_ids, roots, "arbitrary")
    best: Optional[Cut] = None
    for s in layer_edge_sets(h, t, k):
        cut = place_blocks(h, _two_color_blocks(h, s))
        if best is None or cut.weight > best.weight:
            best = cut
    return best


def component_layer_cut(g: WeightedGraph, succ: SuccessorDigraph,
                        cls: Optional[EdgeClassification] = None
                        ) -> tuple[Cut, float, Optional[Fraction]]:
    """Layered cut over the components of the successor graph.

    Each component is an in-tree or a tree plus one directed cycle.  Trees
    (and the two-cycle case, leveled from the mutual edge) get the k = 4
    layer construction; longer cycles are split into the subtrees hanging
    off each cycle vertex, which are cut locally and then stitched around
    the cycle, dropping the cheapest cycle edge when the cycle is odd (its
    length is then at least 9).  Certified value: (1/2) w0 + (7/8) w1 + w2.
    """
    cls = cls or classify_edges(g, succ)
    star_edges = sorted(set(cls.edge_ids(1)) | set(cls.edge_ids(2)))
    comp_of = _undirected_components(g, star_edges)
    blocks: list[dict[int, int]] = []
    for comp in comp_of:
        if len(comp) == 1:
            blocks.append({comp[0]: 0})
            continue
        blocks.append(_component_block(g, succ, comp, set(star_edges)))
    cut = place_blocks(g, blocks)
    w0, w1, w2 = cls.weights(g)
    value = 0.5 * w0 + 7.0 * w1 / 8.0 + w2
    exact_w = _class_weights_exact(g, cls)
    exact = (Fraction(1, 2) * exact_w[0] + Fraction(7, 8) * exact_w[1] + exact_w[2]
             if exact_w is not None else None)
    return cut, value, exact


def _undirected_components(g: WeightedGraph, edge_ids: Sequence[int]) -> list[list[int]]:
    """Components of (V, edge_ids), singletons included, sorted as usual."""
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for e in edge_ids:
        u, v, _ = g.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _walk_cycle(succ: SuccessorDigraph, comp: list[int]) -> Optional[list[int]]:
    """The directed cycle of a successor component, or None for an in-tree."""
    pos: dict[int, int] = {}
    walk: list[int] = []
    v = comp[0]
    while v is not None and v not in pos:
        pos[v] = len(walk)
        walk.append(v)
        v = succ.succ[v]
    if v is None:
        return None
    return walk[pos[v]:]


def _component_block(g: WeightedGraph, succ: SuccessorDigraph, comp: list[int],
                     star_edges: set[int]) -> dict[int, int]:
    sub, orig_v, orig_e = g.induced(comp)
    local = {v: i for i, v in enumerate(orig_v)}
    e_local = {oe: i for i, oe in enumerate(orig_e)}
    comp_star = [e_local[oe] for oe in orig_e if oe in star_edges]
    cycle = _walk_cycle(succ, comp)

    if cycle is None:
        root = next(v for v in comp if succ.succ[v] is None)
        tree_ids = frozenset(comp_star)
        _assert_cycles_divisible(sub, tree_ids)
        cut = _layered_local_cut(sub, tree_ids, (local[root],))
        return {orig_v[i]: s for i, s in enumerate(cut.side)}

    if len(cycle) == 2:
        tree_ids = frozenset(comp_star)
        _assert_cycles_divisible(sub, tree_ids)
        roots = (local[cycle[0]], local[cycle[1]])
        cut = _layered_local_cut(sub, tree_ids, tuple(sorted(roots)))
        return {orig_v[i]: s for i, s in enumerate(cut.side)}

    # long directed cycle: length divisible by 3, chordless, and the only
    # edges between distinct hanging subtrees are the cycle edges
    if len(cycle) % 3 != 0:
        raise ClaimViolationError(
            f"successor cycle of length {len(cycle)} (expected a multiple of 3)")
    cyc_set = set(cycle)
    cyc_pairs = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)]))
                 for i in range(len(cycle))}
    for a, b in combinations(sorted(cyc_set), 2):
        if g.has_edge(a, b) and frozenset((a, b)) not in cyc_pairs:
            raise ClaimViolationError("successor cycle has a chord")

    anchor: dict[int, int] = {}

    def entry(v: int) -> int:
        path = []
        x = v
        while x not in cyc_set and x not in anchor:
            path.append(x)
            x = succ.succ[x]  # type: ignore[assignment]
        root = x if x in cyc_set else anchor[x]
        for y in path:
            anchor[y] = root
        return root

    for v in comp:
        anchor[v] = entry(v) if v not in cyc_set else v
    for u, v, _ in sub.edges:
        au, av = anchor[orig_v[u]], anchor[orig_v[v]]
        if au != av and frozenset((orig_v[u], orig_v[v])) not in cyc_pairs:
            raise ClaimViolationError(
                "edge between distinct hanging subtrees off the successor cycle")

    side: dict[int, int] = {}
    local_sides: dict[int, dict[int, int]] = {}
    for cj in cycle:
        members = sorted(v for v in comp if anchor[v] == cj)
        if len(members) == 1:
            local_sides[cj] = {cj: 0}
            continue
        tsub, t_orig_v, t_orig_e = g.induced(members)
        t_star = frozenset(i for i, oe in enumerate(t_orig_e) if oe in star_edges)
        _assert_cycles_divisible(tsub, t_star)
        t_local_root = t_orig_v.index(cj)
        cut = _layered_local_cut(tsub, t_star, (t_local_root,))
        local_sides[cj] = {t_orig_v[i]: s for i, s in enumerate(cut.side)}

    order = list(cycle)
    if len(order) % 2 == 1:
        cheapest = min(range(len(order)),
                       key=lambda i: (g.edges[g.edge_id(order[i], order[(i + 1) % len(order)])][2],
                                      g.edge_id(order[i], order[(i + 1) % len(order)])))
        order = order[cheapest + 1:] + order[:cheapest + 1]
    for pos, cj in enumerate(order):
        want = pos % 2
        flip = local_sides[cj][cj] ^ want
        for v, s in local_sides[cj].items():
            side[v] = s ^ flip
    return side


def mutual_matching_cut(g: WeightedGraph, cls: EdgeClassification
                        ) -> tuple[Cut, float, Optional[Fraction]]:
    """Matching-contraction cut with the mutual successor edges as matching.

    Certified value: (3/5)(w0 + w1) + w2, which the contraction bound
    dominates whenever the contracted coloring uses at most five colors.
    """
    a2 = cls.edge_ids(2)
    rep = matching_vizing_bound(g, a2)
    if rep.details["color_count"] > 5 and g.max_degree() >= 3:
        raise ClaimViolationError(
            f"contracted coloring used {rep.details['color_count']} > 5 colors")
    w0, w1, w2 = cls.weights(g)
    value = 0.6 * (w0 + w1) + w2
    exact_w = _class_weights_exact(g, cls)
    exact = (Fraction(3, 5) * (exact_w[0] + exact_w[1]) + exact_w[2]
             if exact_w is not None else None)
    return rep.cut, value, exact


# =====================================================================
# the 8/11 pipeline and the 2/3 cut
# =====================================================================


def _require_tf_subcubic(g: WeightedGraph) -> None:
    st = stats(g)
    if not st.triangle_free:
        raise TriangleFoundError("bound expects a triangle-free graph")
    if st.max_degree > 3:
        raise ValueError("graph is not subcubic")


def _check_claim(name: str, g3: WeightedGraph, cut: Cut, value: float,
                 exact: Optional[Fraction]) -> None:
    if exact is not None and g3.integer_weights:
        if Fraction(cut.weight) < exact:
            raise ClaimViolationError(
                f"{name} cut weight {cut.weight} below certified {exact}")
    elif cut.weight < value - slack(g3):
        raise ClaimViolationError(
            f"{name} cut weight {cut.weight} below certified {value}")


def eight_elevenths_bound(g: WeightedGraph) -> BoundReport:
    """Deterministic cut of weight at least (8/11) w(G) for tf subcubic G.

    The three certified cuts satisfy, with weights 9/22, 8/22 and 5/22,
    a combination identity equal to (8/11) w, so their maximum meets the
    bound.  Runs on the zero-weight 3-regular extension and restricts the
    winning cut back.
    """
    _require_tf_subcubic(g)
    if g.n == 0:
        return _report("eight_elevenths", g, 0.0,
                       Fraction(0) if g.integer_weights else None,
                       Cut((), 0.0), {})
    ext = regularize_to_cubic(g)
    g3 = ext.graph
    coloring = color_components(g3)
    succ = successor_digraph(g3, coloring)
    cls = classify_edges(g3, succ)
    candidates = (
        ("drop_class", per_class_cut(g3, coloring, succ, cls)),
        ("layered_components", component_layer_cut(g3, succ, cls)),
        ("mutual_matching", mutual_matching_cut(g3, cls)),
    )
    details: dict = {"gadgets": ext.gadget_count,
                     "class_weights": list(cls.weights(g3))}
    best_cut = None
    best_name = None
    for name, (cut, value, exact) in candidates:
        _check_claim(name, g3, cut, value, exact)
        details[name] = {"cut_weight": cut.weight, "certified": value}
        if best_cut is None or cut.weight > best_cut.weight:
            best_cut, best_name = cut, name
    details["winner"] = best_name
    cut = ext.restrict(best_cut)
    wt = _exact_total(g)
    exact = EIGHT_ELEVENTHS * wt if wt is not None else None
    value = float(EIGHT_ELEVENTHS) * g.total_weight
    return _report("eight_elevenths", g, value, exact, cut, details)


def two_thirds_bound(g: WeightedGraph) -> BoundReport:
    """Cut of weight at least (2/3) w(G) from a proper 3-coloring.

    Keeps the heaviest class pair apart and moves each third-class vertex
    to whichever side captures more of its incident weight.
    """
    _require_tf_subcubic(g)
    if g.n == 0:
        return _report("two_thirds", g, 0.0,
                       Fraction(0) if g.integer_weights else None, Cut((), 0.0), {})
    coloring = color_components(g)
    pair_w = {(i, j): 0.0 for i, j in combinations((1, 2, 3), 2)}
    for u, v, w in g.edges:
        cu, cv = sorted((coloring.class_of[u], coloring.class_of[v]))
        pair_w[(cu, cv)] += w
    (i, j) = max(pair_w, key=lambda p: (pair_w[p], -p[0], -p[1]))
    k = ({1, 2, 3} - {i, j}).pop()
    side = [0] * g.n
    for v in range(g.n):
        c = coloring.class_of[v]
        if c == i:
            side[v] = 0
        elif c == j:
            side[v] = 1
        else:
            wi = sum(g.edges[e][2] for u, e in g.adj[v] if coloring.class_of[u] == i)
            wj = sum(g.edges[e][2] for u, e in g.adj[v] if coloring.class_of[u] == j)
            side[v] = 0 if wj >= wi else 1
    cut = Cut.from_side(g, side)
    wt = _exact_total(g)
    exact = Fraction(2, 3) * wt if wt is not None else None
    value = 2.0 * g.total_weight / 3.0
    details = {"kept_pair": [i, j], "moved_class": k,
               "pair_weight": pair_w[(i, j)]}
    return _report("two_thirds", g, value, exact, cut, details)


# =====================================================================
# tree percolation (Monte Carlo) and the combination bound
# =====================================================================


def percolation_expectation(g: WeightedGraph, t: RootedSpanningTree, p: float,
                            r: Optional[int]) -> float:
    """(p+1)/2 w(T) + (1 - p^(r-1))/2 (w(G) - w(T))."""
    w, wt = g.total_weight, t.weight
    p_pow = p ** (r - 1) if r is not None else 0.0
    return (p + 1.0) / 2.0 * wt + (1.0 - p_pow) / 2.0 * (w - wt)


def _percolation_raw(g: WeightedGraph, t: RootedSpanningTree, p: float,
                     rng: random.Random) -> Cut:
    kept = [e for e in sorted(t.edge_ids) if rng.random() < p]
    par = list(range(g.n))

    def find(x: int) -> int:
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    kept_adj: dict[int, list[int]] = {}
    for e in kept:
        u, v, _ = g.edges[e]
        par[find(u)] = find(v)
        kept_adj.setdefault(u, []).append(v)
        kept_adj.setdefault(v, []).append(u)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    side = [0] * g.n
    for root in sorted(groups, key=lambda r2: min(groups[r2])):
        members = groups[root]
        start = min(members)
        color = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in kept_adj.get(u, ()):
                if v not in color:
                    color[v] = color[u] ^ 1
                    queue.append(v)
        orient = rng.getrandbits(1)
        for v in members:
            side[v] = color[v] ^ orient
    return Cut.from_side(g, side)


def tree_percolation_sample(g: WeightedGraph, t: RootedSpanningTree, p: float,
                            rng: random.Random) -> Cut:
    """One percolation sample: keep tree edges with probability p, 2-color
    the forest, orient components uniformly, then locally improve."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return local_search_improve(g, _percolation_raw(g, t, p, rng))


def tree_percolation_bound(g: WeightedGraph,
                           tree: Optional[RootedSpanningTree] = None,
                           p: float = PERCOLATION_P, trials: int = 256,
                           seed: int = 0) -> BoundReport:
    """Monte Carlo percolation bound; the guarantee holds in expectation.

    Requires max degree at most 3.  Returns the best locally improved
    sample; details record the raw sample mean and standard deviation for
    expectation validation.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if g.max_degree() > 3:
        raise ValueError("graph is not subcubic")
    if not g.is_connected():
        raise DisconnectedGraphError("percolation bound needs a spanning tree")
    t = tree if tree is not None else max_spanning_tree(g)
    r = shortest_fundamental_odd_cycle(g, t)
    best: Optional[Cut] = None
    raw_weights = []
    for trial in range(trials):
        rng = random.Random(seed + trial)
        raw = _percolation_raw(g, t, p, rng)
        raw_weights.append(raw.weight)
        improved = local_search_improve(g, raw)
        if best is None or improved.weight > best.weight:
            best = improved
    value = percolation_expectation(g, t, p, r)
    details = {
        "p": p, "r": r, "trials": trials, "seed": seed,
        "tree_weight": t.weight,
        "raw_mean": statistics.fmean(raw_weights) if raw_weights else 0.0,
        "raw_std": statistics.stdev(raw_weights) if len(raw_weights) > 1 else 0.0,
    }
    return BoundReport("tree_percolation", value, best, MONTE_CARLO, None, details)


def combined_tree_bound(g: WeightedGraph,
                        tree: Optional[RootedSpanningTree] = None,
                        trials: int = 256, seed: int = 0) -> BoundReport:
    """w(G)/2 + 0.3193 w(T) for tf subcubic G and any spanning tree T.

    Mixing the p = 0.85 percolation inequality (worst case r = 5) with the
    8/11 inequality at weights 0.46545 / 0.53455 yields the coefficient;
    the returned cut is the better of the two branch cuts, and the
    expectation-only percolation branch makes the mode Monte Carlo.
    """
    _require_tf_subcubic(g)
    if not g.is_connected():
        raise DisconnectedGraphError("combination bound needs a spanning tree")
    t = tree if tree is not None else max_spanning_tree(g)
    eight = eight_elevenths_bound(g)
    perc = tree_percolation_bound(g, t, PERCOLATION_P, trials, seed)
    cut = eight.cut if eight.cut.weight >= perc.cut.weight else perc.cut
    value = g.total_weight / 2.0 + TREE_COEFFICIENT * t.weight
    mixed = (COMBINATION_WEIGHT_A * (PERCOLATION_P + 1.0) / 2.0
             + COMBINATION_WEIGHT_B * float(EIGHT_ELEVENTHS))
    details = {
        "tree_weight": t.weight,
        "branch_eight_elevenths": eight.bound_value,
        "branch_percolation": perc.bound_value,
        "mix_weight_percolation": COMBINATION_WEIGHT_A,
        "mix_weight_eight_elevenths": COMBINATION_WEIGHT_B,
        "mixed_tree_coefficient": mixed - 0.5,
    }
    return BoundReport("combined_tree", value, cut, MONTE_CARLO, None, details)


# =====================================================================
# two-stage random redistribution (Monte Carlo)
# =====================================================================


def shearer_sample(g: WeightedGraph, rng: random.Random) -> Cut:
    """Uniform partition, then re-randomize every vertex that does not have
    more than half of its neighbors on the other side (ties stay put with
    probability 1/2)."""
    side = [rng.getrandbits(1) for _ in range(g.n)]
    good = [False] * g.n
    for v in range(g.n):
        other = sum(1 for u, _ in g.adj[v] if side[u] != side[v])
        d = g.degree(v)
        if 2 * other > d:
            good[v] = True
        elif 2 * other == d:
            good[v] = bool(rng.getrandbits(1))
    for v in range(g.n):
        if not good[v]:
            side[v] = rng.getrandbits(1)
    return Cut.from_side(g, side)


def shearer_bound(g: WeightedGraph, trials: int = 256, seed: int = 0) -> BoundReport:
    """Monte Carlo coefficient bound s * w(G) for triangle-free graphs,
    s = 1/2 + 1/(4 sqrt(2 max_degree))."""
    if not stats(g).triangle_free:
        raise TriangleFoundError("redistribution bound expects a triangle-free graph")
    delta = g.max_degree()
    if g.m == 0:
        return BoundReport("shearer", 0.0, Cut.from_side(g, [0] * g.n),
                           MONTE_CARLO, None, {"delta": delta})
    best_raw: Optional[Cut] = None
    raw_weights = []
    for trial in range(trials):
        rng = random.Random(seed + trial)
        raw = shearer_sample(g, rng)
        raw_weights.append(raw.weight)
        if best_raw is None or raw.weight > best_raw.weight:
            best_raw = raw
    cut = local_search_improve(g, best_raw)
    value = shearer_coefficient(delta) * g.total_weight
    details = {
        "delta": delta, "trials": trials, "seed": seed,
        "coefficient": shearer_coefficient(delta),
        "raw_mean": statistics.fmean(raw_weights),
        "raw_std": statistics.stdev(raw_weights) if len(raw_weights) > 1 else 0.0,
    }
    return BoundReport("shearer", value, cut, MONTE_CARLO, None, details)
