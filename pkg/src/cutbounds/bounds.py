"""Deterministic certified lower bounds for the maximum weighted cut.

Every operation returns a BoundReport whose cut was constructed by the
conditional-expectation derandomizer, so `cut.weight >= bound_value` holds
up to floating-point slack, and exactly (over rationals) for graphs with
integral weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .cuts import (Cut, check_matching, derandomized_cut, verify_induced_bipartite)
from .graph import DisconnectedGraphError, WeightedGraph, stats
from .spanning import (RootedSpanningTree, dfs_tree, girth_layer_certificates,
                       max_spanning_tree, min_spanning_tree,
                       parity_layer_certificates,
                       shortest_fundamental_odd_cycle)
from .graph import TriangleFoundError

DETERMINISTIC = "deterministic"
MONTE_CARLO = "monte_carlo"

EXACT_MATCHING_MAX_EDGES = 24
ROOT_SWEEP_MAX_N = 64


class BoundPreconditionError(Exception):
    """The instance violates a bound's precondition (reported, not fatal)."""


@dataclass
class BoundReport:
    """Named bound with its certified value and constructed cut.

    mode "deterministic" guarantees cut.weight >= bound_value - slack(G);
    mode "monte_carlo" bounds the expectation only.  ``bound_exact`` is the
    rational bound value when the instance has integral weights and the
    bound is deterministic.
    """

    name: str
    bound_value: float
    cut: Cut
    mode: str
    bound_exact: Optional[Fraction] = None
    details: dict = field(default_factory=dict)

    def certified(self, g: WeightedGraph) -> bool:
        if self.mode != DETERMINISTIC:
            return True
        if self.bound_exact is not None and g.integer_weights:
            return Fraction(self.cut.weight) >= self.bound_exact
        return self.cut.weight >= self.bound_value - slack(g)


def slack(g: WeightedGraph) -> float:
    """Absolute comparison slack absorbing float rounding only."""
    return 1e-9 * max(1.0, g.total_weight)


def _exact_weight(g: WeightedGraph, edge_ids) -> Optional[Fraction]:
    if not g.integer_weights:
        return None
    return Fraction(sum(int(g.edges[e][2]) for e in edge_ids))


def _exact_total(g: WeightedGraph) -> Optional[Fraction]:
    if not g.integer_weights:
        return None
    return Fraction(sum(int(w) for _, _, w in g.edges))


def _report(name, g, value_float, value_exact, cut, details) -> BoundReport:
    if value_exact is not None:
        value_float = float(value_exact)
    return BoundReport(name, value_float, cut, DETERMINISTIC, value_exact, details)


# -- spanning-tree based bounds -----------------------------------------


def _dfs_root_policy(g: WeightedGraph, root: Optional[int],
                     sweep: Optional[bool]) -> list[int]:
    if root is not None:
        return [root]
    if sweep is None:
        sweep = g.n <= ROOT_SWEEP_MAX_N
    return list(range(g.n)) if sweep else [0]


def _best_dfs_tree(g, root, sweep) -> RootedSpanningTree:
    """DFS tree maximizing tree weight over the swept roots (ties: lowest root)."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no spanning tree")
    best = None
    for r in _dfs_root_policy(g, root, sweep):
        t = dfs_tree(g, r)
        if best is None or t.weight > best.weight:
            best = t
    return best


def _parity_cut(g: WeightedGraph, t: RootedSpanningTree) -> Cut:
    """Better of the two parity-layer derandomized cuts of a tree."""
    c1, c2 = (derandomized_cut(g, cert) for cert in parity_layer_certificates(g, t))
    return c1 if c1.weight >= c2.weight else c2


def poljak_turzik(g: WeightedGraph, root: Optional[int] = None,
                  sweep: Optional[bool] = None) -> BoundReport:
    """w(G)/2 + w(T_min)/4 with a minimum-weight spanning tree T_min.

    The constructed cut comes from the DFS parity layers, which certify the
    stronger DFS bound; their guarantee dominates this one because any DFS
    tree outweighs the minimum spanning tree.
    """
    tmin = min_spanning_tree(g)
    d = _best_dfs_tree(g, root, sweep)
    cut = _parity_cut(g, d)
    wt = _exact_total(g)
    exact = wt / 2 + _exact_weight(g, tmin.edge_ids) / 4 if wt is not None else None
    value = g.total_weight / 2 + tmin.weight / 4
    details = {"min_tree_weight": tmin.weight, "dfs_root": d.roots[0],
               "dfs_tree_weight": d.weight}
    return _report("poljak_turzik", g, value, exact, cut, details)


def dfs_bound(g: WeightedGraph, root: Optional[int] = None,
              sweep: Optional[bool] = None) -> BoundReport:
    """w(G)/2 + w(D)/4 for a DFS tree D (default: best root by tree weight)."""
    d = _best_dfs_tree(g, root, sweep)
    cut = _parity_cut(g, d)
    wt = _exact_total(g)
    exact = wt / 2 + _exact_weight(g, d.edge_ids) / 4 if wt is not None else None
    value = g.total_weight / 2 + d.weight / 4
    details = {"dfs_root": d.roots[0], "dfs_tree_weight": d.weight}
    return _report("dfs_tree", g, value, exact, cut, details)


# -- matching bounds -----------------------------------------------------


def greedy_matching(g: WeightedGraph) -> tuple[int, ...]:
    """Heaviest-first greedy matching (ties by edge id), then one swap pass."""
    order = sorted(range(g.m), key=lambda e: (-g.edges[e][2], e))
    used = [False] * g.n
    chosen: list[int] = []
    for eid in order:
        u, v, _ = g.edges[eid]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            chosen.append(eid)
    return _swap_pass(g, chosen)


def _swap_pass(g: WeightedGraph, chosen: list[int]) -> tuple[int, ...]:
    # single pass: replace up to two conflicting matched edges by one
    # heavier edge when that increases total weight
    have = set(chosen)
    by_vertex: dict[int, int] = {}
    for eid in chosen:
        u, v, _ = g.edges[eid]
        by_vertex[u] = eid
        by_vertex[v] = eid
    for eid in range(g.m):
        if eid in have:
            continue
        u, v, w = g.edges[eid]
        conflicts = {by_vertex[x] for x in (u, v) if x in by_vertex}
        if w > sum(g.edges[c][2] for c in conflicts):
            for c in conflicts:
                have.discard(c)
                cu, cv, _ = g.edges[c]
                by_vertex.pop(cu, None)
                by_vertex.pop(cv, None)
            have.add(eid)
            by_vertex[u] = eid
            by_vertex[v] = eid
    return tuple(sorted(have))


def exact_matching_small(g: WeightedGraph) -> tuple[int, ...]:
    """Exhaustive maximum-weight matching, branch and bound over edges."""
    if g.m > EXACT_MATCHING_MAX_EDGES:
        raise ValueError(f"exact matching limited to {EXACT_MATCHING_MAX_EDGES} edges")
    order = sorted(range(g.m), key=lambda e: (-g.edges[e][2], e))
    suffix = [0.0] * (g.m + 1)
    for i in range(g.m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + g.edges[order[i]][2]
    best_w = -1.0
    best: tuple[int, ...] = ()
    used = [False] * g.n
    chosen: list[int] = []

    def recurse(i: int, cur: float) -> None:
        nonlocal best_w, best
        if cur + suffix[i] <= best_w:
            return
        if i == g.m:
            if cur > best_w:
                best_w = cur
                best = tuple(sorted(chosen))
            return
        eid = order[i]
        u, v, w = g.edges[eid]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            chosen.append(eid)
            recurse(i + 1, cur + w)
            chosen.pop()
            used[u] = used[v] = False
        recurse(i + 1, cur)

    recurse(0, 0.0)
    return best


def best_matching(g: WeightedGraph, strategy: str = "auto") -> tuple[int, ...]:
    if strategy == "auto":
        strategy = "exact_small" if g.m <= EXACT_MATCHING_MAX_EDGES else "greedy"
    if strategy == "exact_small":
        return exact_matching_small(g)
    if strategy == "greedy":
        return greedy_matching(g)
    raise ValueError(f"unknown matching strategy {strategy!r}")


def matching_bound(g: WeightedGraph, strategy: str = "auto",
                   matching: Optional[Sequence[int]] = None) -> BoundReport:
    """(w(G) + w(M))/2 for a matching M.

    A matching is always a valid certificate: its components are single
    edges, and a single edge is induced in any simple graph.
    """
    if matching is not None:
        m_ids = check_matching(g, matching)
        strategy = "provided"
    else:
        m_ids = best_matching(g, strategy)
    cert = verify_induced_bipartite(g, m_ids)
    cut = derandomized_cut(g, cert)
    wt = _exact_total(g)
    wm = _exact_weight(g, m_ids)
    exact = (wt + wm) / 2 if wt is not None else None
    value = (g.total_weight + sum(g.edges[e][2] for e in m_ids)) / 2
    details = {"matching_size": len(m_ids),
               "matching_weight": float(sum(g.edges[e][2] for e in m_ids)),
               "strategy": strategy}
    return _report("matching", g, value, exact, cut, details)


# -- girth-family bounds --------------------------------------------------


def _best_layer_cut(g: WeightedGraph, certs) -> tuple[Cut, int]:
    best = None
    best_j = 0
    for j, cert in enumerate(certs):
        c = derandomized_cut(g, cert)
        if best is None or c.weight > best.weight:
            best, best_j = c, j
    return best, best_j


def girth_bound(g: WeightedGraph, k: Optional[int] = None,
                root: Optional[int] = None, sweep: Optional[bool] = None) -> BoundReport:
    """w(G)/2 + (k-1)/(2k) * w(D) for a DFS tree D, when the girth is >= k.

    k must be even; the default is the girth rounded down to an even value
    (one less when the girth is odd).  Acyclic graphs have unbounded girth;
    any even k is then legal and we use the vertex count rounded up to even.
    """
    st = stats(g)
    if not st.connected:
        raise DisconnectedGraphError("girth bound needs a connected graph")
    if st.girth is not None and st.girth < 4:
        raise BoundPreconditionError(f"girth {st.girth} < 4")
    if k is None:
        if st.girth is None:
            k = g.n if g.n % 2 == 0 else g.n + 1
        else:
            k = st.girth if st.girth % 2 == 0 else st.girth - 1
    if k % 2 != 0 or k < 2:
        raise BoundPreconditionError(f"k = {k} must be even and positive")
    if st.girth is not None and k > st.girth:
        raise BoundPreconditionError(f"k = {k} exceeds girth {st.girth}")
    d = _best_dfs_tree(g, root, sweep)
    certs = girth_layer_certificates(g, d, k)
    cut, best_j = _best_layer_cut(g, certs)
    wt = _exact_total(g)
    exact = (wt / 2 + Fraction(k - 1, 2 * k) * _exact_weight(g, d.edge_ids)
             if wt is not None else None)
    value = g.total_weight / 2 + (k - 1) / (2 * k) * d.weight
    details = {"k": k, "girth": st.girth, "dfs_root": d.roots[0],
               "dfs_tree_weight": d.weight, "best_layer": best_j}
    return _report("girth_layers", g, value, exact, cut, details)


def triangle_free_tree_bound(g: WeightedGraph,
                             tree: Optional[RootedSpanningTree] = None) -> BoundReport:
    """w(G)/2 + w(T)/4 for any spanning tree T of a triangle-free graph.

    Defaults to the maximum-weight spanning tree, which maximizes the
    bound.  The parity-layer components are stars and stay induced exactly
    because children of a tree node cannot be adjacent without a triangle.
    """
    st = stats(g)
    if not st.triangle_free:
        raise TriangleFoundError("triangle-free tree bound needs girth >= 4")
    if not st.connected:
        raise DisconnectedGraphError("spanning tree bound needs a connected graph")
    t = tree if tree is not None else max_spanning_tree(g)
    cut = _parity_cut(g, t)
    wt = _exact_total(g)
    exact = wt / 2 + _exact_weight(g, t.edge_ids) / 4 if wt is not None else None
    value = g.total_weight / 2 + t.weight / 4
    details = {"tree_weight": t.weight, "tree_kind": t.kind}
    return _report("triangle_free_tree", g, value, exact, cut, details)


def edge_rooted_tree_bound(g: WeightedGraph,
                           tree: Optional[RootedSpanningTree] = None,
                           marked_eid: Optional[int] = None,
                           k: Optional[int] = None) -> BoundReport:
    """w(G)/2 + (k-1)/(2k) w(T) + w(e*)/(2k) via layers around a tree edge e*.

    Valid for any positive integer k such that T + e has no odd cycle of
    length 2k-1 or less for every non-tree edge e (checked).  Defaults:
    maximum spanning tree, heaviest tree edge, largest legal k.
    """
    st = stats(g)
    if not st.connected:
        raise DisconnectedGraphError("edge-rooted bound needs a connected graph")
    if g.m == 0:
        raise BoundPreconditionError("edge-rooted bound needs at least one edge")
    t = tree if tree is not None else max_spanning_tree(g)
    if marked_eid is None:
        marked_eid = max(t.edge_ids, key=lambda e: (g.edges[e][2], -e))
    if marked_eid not in t.edge_ids:
        raise ValueError("marked edge must be a tree edge")
    r = shortest_fundamental_odd_cycle(g, t)
    if k is None:
        k = (r - 1) // 2 if r is not None else max(1, g.n)
    if k < 1:
        raise BoundPreconditionError("no legal k: an odd triangle closes the tree")
    certs = girth_layer_certificates(g, t, k, marked_eid)
    cut, best_j = _best_layer_cut(g, certs)
    we_star = g.edges[marked_eid][2]
    wt = _exact_total(g)
    exact = None
    if wt is not None:
        exact = (wt / 2 + Fraction(k - 1, 2 * k) * _exact_weight(g, t.edge_ids)
                 + Fraction(int(we_star), 2 * k))
    value = (g.total_weight / 2 + (k - 1) / (2 * k) * t.weight
             + we_star / (2 * k))
    details = {"k": k, "marked_edge": list(g.edges[marked_eid][:2]),
               "marked_weight": we_star, "tree_weight": t.weight,
               "shortest_fundamental_odd_cycle": r, "best_layer": best_j}
    return _report("edge_rooted_tree", g, value, exact, cut, details)


# -- disconnected inputs --------------------------------------------------


def per_component(g: WeightedGraph, fn: Callable[[WeightedGraph], BoundReport],
                  name: Optional[str] = None) -> BoundReport:
    """Apply a bound per connected component and add up.

    The maximum cut decomposes over components, so summed bounds stay
    valid; cuts are merged through the component embeddings.
    """
    comps = g.components()
    if len(comps) <= 1:
        return fn(g)
    side = [0] * g.n
    total = 0.0
    exact: Optional[Fraction] = Fraction(0) if g.integer_weights else None
    mode = DETERMINISTIC
    reports = []
    for comp in comps:
        sub, orig_v, _ = g.induced(comp)
        rep = fn(sub)
        reports.append(rep)
        for i, s in enumerate(rep.cut.side):
            side[orig_v[i]] = s
        total += rep.bound_value
        if exact is not None and rep.bound_exact is not None:
            exact += rep.bound_exact
        else:
            exact = None
        if rep.mode != DETERMINISTIC:
            mode = MONTE_CARLO
    cut = Cut.from_side(g, side)
    if exact is not None:
        total = float(exact)
    details = {"components": len(comps),
               "component_bounds": [r.bound_value for r in reports]}
    return BoundReport(name or reports[0].name, total, cut, mode, exact, details)
