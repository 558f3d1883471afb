"""Exact desk-scale solvers for the NP-hard quantities the bounds are
validated against: maximum cut, maximum induced-bipartite family weight,
maximum DFS-tree weight, and exact one-edge-per-five-cycle covers."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .bounds import greedy_matching, slack
from .cuts import Cut
from .graph import DisconnectedGraphError, WeightedGraph, stats
from .spanning import min_spanning_tree, max_spanning_tree

MAX_CUT_GUARD = 30
BIPARTITE_FAMILY_GUARD = 16
DFS_WEIGHT_GUARD = 12
FIVE_CYCLE_GUARD = 40

_CHUNK_BITS = 22


class SizeGuardError(Exception):
    """Instance exceeds the oracle's exhaustive-search size guard."""


@dataclass(frozen=True)
class OracleResult:
    """Exact value with a re-checkable witness."""

    quantity: str
    value: object
    witness: object
    exact: bool = True


def exact_max_cut(g: WeightedGraph, max_n: int = MAX_CUT_GUARD) -> OracleResult:
    """Exact maximum cut by vectorized enumeration of all side assignments.

    The last vertex's side is fixed (cuts are complement invariant); the
    remaining assignments are scanned in chunks with integer accumulation
    when all weights are integral.  Witness: an optimal cut.
    """
    if g.n > max_n:
        raise SizeGuardError(f"max cut enumeration guarded at n <= {max_n}")
    if g.n == 0:
        return OracleResult("max_cut", 0, Cut((), 0.0))
    nfree = g.n - 1
    total_masks = 1 << nfree
    int_mode = g.integer_weights
    best_val: Optional[float] = None
    best_mask = 0
    for start in range(0, total_masks, 1 << _CHUNK_BITS):
        end = min(start + (1 << _CHUNK_BITS), total_masks)
        masks = np.arange(start, end, dtype=np.uint64)
        acc = np.zeros(end - start, dtype=np.int64 if int_mode else np.float64)
        for u, v, w in g.edges:
            if v == nfree:
                bits = (masks >> np.uint64(u)) & np.uint64(1)
            else:
                bits = ((masks >> np.uint64(u)) ^ (masks >> np.uint64(v))) & np.uint64(1)
            if int_mode:
                acc += bits.astype(np.int64) * int(w)
            else:
                acc += bits.astype(np.float64) * w
        i = int(np.argmax(acc))
        val = acc[i]
        if best_val is None or val > best_val:
            best_val = val
            best_mask = start + i
    side = [(best_mask >> v) & 1 for v in range(nfree)] + [0]
    cut = Cut.from_side(g, side)
    value = int(best_val) if int_mode else float(best_val)
    if abs(cut.weight - float(value)) > slack(g):
        raise AssertionError("optimal cut witness does not re-evaluate to the value")
    return OracleResult("max_cut", value, cut)


def _mask_vertices(mask: int, n: int) -> list[int]:
    return [v for v in range(n) if mask >> v & 1]


def max_induced_bipartite(g: WeightedGraph,
                          max_n: int = BIPARTITE_FAMILY_GUARD) -> OracleResult:
    """Exact maximum weight of an edge set whose components are induced
    bipartite subgraphs.

    Any such certificate is a family of pairwise disjoint vertex sets,
    each inducing a connected bipartite subgraph; the value is the sum of
    the induced weights.  Solved by subset DP over vertex sets: either the
    lowest vertex of the remaining set is unused, or its part is one of
    the connected bipartite induced subsets through it.  Witness: the edge
    ids of an optimal family.
    """
    if g.n > max_n:
        raise SizeGuardError(f"bipartite family enumeration guarded at n <= {max_n}")
    n = g.n
    if n == 0:
        return OracleResult("max_induced_bipartite", 0, ())
    full = (1 << n) - 1
    part_weight: dict[int, float] = {}
    for mask in range(1, full + 1):
        vs = _mask_vertices(mask, n)
        if len(vs) == 1:
            continue
        seen = {vs[0]}
        queue = deque([vs[0]])
        while queue:
            u = queue.popleft()
            for v, _ in g.adj[u]:
                if mask >> v & 1 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        if len(seen) != len(vs):
            continue
        color = {vs[0]: 0}
        queue = deque([vs[0]])
        ok = True
        weight = 0.0
        while queue and ok:
            u = queue.popleft()
            for v, eid in g.adj[u]:
                if not mask >> v & 1:
                    continue
                if v not in color:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    ok = False
                    break
        if not ok:
            continue
        for u, v, w in g.edges:
            if mask >> u & 1 and mask >> v & 1:
                weight += w
        if weight > 0.0:
            part_weight[mask] = weight

    value = [0.0] * (full + 1)
    choice = [0] * (full + 1)
    for mask in range(1, full + 1):
        low = mask & -mask
        best = value[mask ^ low]
        pick = 0
        rest = mask ^ low
        sub = rest
        while True:
            s = sub | low
            w = part_weight.get(s)
            if w is not None:
                cand = w + value[mask ^ s]
                if cand > best:
                    best, pick = cand, s
            if sub == 0:
                break
            sub = (sub - 1) & rest
        value[mask] = best
        choice[mask] = pick

    witness_edges: list[int] = []
    mask = full
    while mask:
        s = choice[mask]
        if s:
            in_s = [bool(s >> v & 1) for v in range(n)]
            witness_edges.extend(eid for eid, (u, v, _) in enumerate(g.edges)
                                 if in_s[u] and in_s[v])
            mask ^= s
        else:
            mask ^= mask & -mask
    out = value[full]
    result = int(round(out)) if g.integer_weights else out
    return OracleResult("max_induced_bipartite", result, tuple(sorted(witness_edges)))


def max_dfs_tree_weight(g: WeightedGraph, max_n: int = DFS_WEIGHT_GUARD) -> OracleResult:
    """Exact maximum weight of a DFS tree, over all roots and visit orders.

    Memoized branching over (visited set, DFS stack) states.  Witness: the
    edge ids of a maximizing tree.
    """
    if g.n > max_n:
        raise SizeGuardError(f"DFS tree enumeration guarded at n <= {max_n}")
    if not g.is_connected():
        raise DisconnectedGraphError("DFS trees need a connected graph")
    if g.n == 0:
        return OracleResult("max_dfs_tree_weight", 0.0, ())
    memo: dict[tuple[int, tuple[int, ...]], tuple[float, tuple[int, ...]]] = {}

    def explore(mask: int, stack: tuple[int, ...]) -> tuple[float, tuple[int, ...]]:
        while stack:
            u = stack[-1]
            if any(not mask >> v & 1 for v, _ in g.adj[u]):
                break
            stack = stack[:-1]
        if not stack:
            return 0.0, ()
        key = (mask, stack)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u = stack[-1]
        best = None
        for v, eid in g.adj[u]:
            if mask >> v & 1:
                continue
            sub_w, sub_e = explore(mask | (1 << v), stack + (v,))
            cand = (g.edges[eid][2] + sub_w, (eid,) + sub_e)
            if best is None or cand[0] > best[0]:
                best = cand
        memo[key] = best
        return best

    best_val = None
    best_edges: tuple[int, ...] = ()
    for root in range(g.n):
        w, eids = explore(1 << root, (root,))
        if best_val is None or w > best_val:
            best_val, best_edges = w, eids
    value = int(round(best_val)) if g.integer_weights else best_val
    return OracleResult("max_dfs_tree_weight", value, tuple(sorted(best_edges)))


# -- five-cycle covers ----------------------------------------------------


def enumerate_five_cycles(g: WeightedGraph) -> list[tuple[int, ...]]:
    """All 5-cycles, each as a sorted tuple of its five edge ids.

    Canonical scan: the first vertex is the cycle minimum and the walk
    direction is fixed by second < last, so each cycle appears once.
    """
    cycles = []
    for a in range(g.n):
        for b, e_ab in g.adj[a]:
            if b <= a:
                continue
            for c, e_bc in g.adj[b]:
                if c <= a:
                    continue
                for d, e_cd in g.adj[c]:
                    if d <= a or d == b:
                        continue
                    for e, e_de in g.adj[d]:
                        if e <= b or e == c:
                            continue
                        e_ea = g.edge_id(e, a)
                        if e_ea is None:
                            continue
                        cycles.append(tuple(sorted((e_ab, e_bc, e_cd, e_de, e_ea))))
    return sorted(set(cycles))


def is_exact_five_cycle_cover(g: WeightedGraph, edge_ids: Sequence[int]) -> bool:
    """Whether every 5-cycle contains exactly one of the given edges."""
    chosen = set(edge_ids)
    return all(len(chosen & set(cyc)) == 1 for cyc in enumerate_five_cycles(g))


def five_cycle_cover(g: WeightedGraph, max_n: int = FIVE_CYCLE_GUARD) -> OracleResult:
    """Search for an edge set meeting every 5-cycle exactly once.

    Backtracking over the first unhit cycle; value is the witness size, or
    None when no exact cover exists (a reportable structural find for
    triangle-free subcubic graphs).
    """
    if g.n > max_n:
        raise SizeGuardError(f"five-cycle search guarded at n <= {max_n}")
    st = stats(g)
    if not st.triangle_free or st.max_degree > 3:
        raise ValueError("five-cycle covers are defined for tf subcubic graphs here")
    cycles = enumerate_five_cycles(g)
    by_edge: dict[int, list[int]] = {}
    for ci, cyc in enumerate(cycles):
        for e in cyc:
            by_edge.setdefault(e, []).append(ci)
    hits = [0] * len(cycles)
    chosen: list[int] = []

    def solve() -> bool:
        target = next((ci for ci in range(len(cycles)) if hits[ci] == 0), None)
        if target is None:
            return True
        for e in cycles[target]:
            if any(hits[cj] for cj in by_edge[e]):
                continue
            for cj in by_edge[e]:
                hits[cj] += 1
            chosen.append(e)
            if solve():
                return True
            chosen.pop()
            for cj in by_edge[e]:
                hits[cj] -= 1
        return False

    if solve():
        witness = tuple(sorted(chosen))
        return OracleResult("five_cycle_cover", len(witness), witness)
    return OracleResult("five_cycle_cover", None, None)


# -- conjecture lab --------------------------------------------------------


@dataclass
class ConjectureReport:
    """Per-instance evidence ratios for the open questions.

    The ratios only bound class-wide constants from above; they are
    evidence, not claims.  ``flags`` lists genuine violations found
    (a non-empty list on a sound build means a counterexample).
    """

    n: int
    m: int
    total_weight: float
    max_cut: float
    cut_ratio: Optional[float]
    theta_ratio: Optional[float]
    theta_tree_weight: Optional[float]
    matching_ratio: Optional[float]
    matching_weight: Optional[float]
    five_cycle_cover_size: Optional[int]
    five_cycle_applicable: bool
    flags: list[str] = field(default_factory=list)


def _random_spanning_tree_ids(g: WeightedGraph, rng: random.Random) -> frozenset[int]:
    perturbed = WeightedGraph(g.n, [(u, v, rng.random()) for u, v, _ in g.edges])
    return min_spanning_tree(perturbed).edge_ids


def _random_maximal_matching(g: WeightedGraph, rng: random.Random) -> list[int]:
    order = list(range(g.m))
    rng.shuffle(order)
    used = [False] * g.n
    out = []
    for eid in order:
        u, v, _ = g.edges[eid]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            out.append(eid)
    return sorted(out)


def conjecture_report(g: WeightedGraph, seed: int = 0, tree_samples: int = 100,
                      matching_samples: int = 20, max_n: int = 20) -> ConjectureReport:
    """Evidence ratios against the instance's exact maximum cut.

    theta: min over sampled spanning trees of (mac - w/2) / w(T);
    matching coefficient: min over sampled maximal matchings of
    (mac - w(M)) / (w - w(M)); plus the five-cycle exact cover search for
    triangle-free subcubic instances.
    """
    st = stats(g)
    mac = float(exact_max_cut(g, max_n).value)
    w = g.total_weight
    eps = slack(g)
    rng = random.Random(seed)
    flags: list[str] = []

    cut_ratio = mac / w if w > 0 else None

    theta_ratio = None
    theta_tree_w = None
    if st.connected and g.n >= 2:
        tree_sets = [min_spanning_tree(g).edge_ids, max_spanning_tree(g).edge_ids]
        tree_sets += [_random_spanning_tree_ids(g, rng) for _ in range(tree_samples)]
        for ids in tree_sets:
            tw = sum(g.edges[e][2] for e in ids)
            if tw <= 0:
                continue
            ratio = (mac - w / 2.0) / tw
            if theta_ratio is None or ratio < theta_ratio:
                theta_ratio, theta_tree_w = ratio, tw
            if st.triangle_free and mac + eps < w / 2.0 + 0.375 * tw:
                flags.append("tree_three_eighths")

    matching_ratio = None
    matching_w = None
    matchings = [list(greedy_matching(g))]
    matchings += [_random_maximal_matching(g, rng) for _ in range(matching_samples)]
    for m_ids in matchings:
        wm = sum(g.edges[e][2] for e in m_ids)
        if w - wm <= 0:
            continue
        ratio = (mac - wm) / (w - wm)
        if matching_ratio is None or ratio < matching_ratio:
            matching_ratio, matching_w = ratio, wm
        if st.triangle_free:
            if mac + eps < 0.5 * (w - wm) + wm:
                flags.append("matching_coefficient_half")
            if st.max_degree <= 3 and mac + eps < 0.6 * (w - wm) + wm:
                flags.append("matching_coefficient_c3")

    five_applicable = st.triangle_free and st.max_degree <= 3 and g.n <= FIVE_CYCLE_GUARD
    five_size = None
    if five_applicable:
        found = five_cycle_cover(g)
        if found.value is None:
            flags.append("five_cycle_cover_missing")
        else:
            five_size = int(found.value)
        if st.max_degree <= 3 and mac + eps < 0.8 * w:
            flags.append("four_fifths_subcubic")

    return ConjectureReport(
        n=g.n, m=g.m, total_weight=w, max_cut=mac,
        cut_ratio=cut_ratio, theta_ratio=theta_ratio,
        theta_tree_weight=theta_tree_w, matching_ratio=matching_ratio,
        matching_weight=matching_w, five_cycle_cover_size=five_size,
        five_cycle_applicable=five_applicable,
        flags=sorted(set(flags)),
    )
