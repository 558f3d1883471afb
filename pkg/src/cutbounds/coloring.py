"""Constructive edge coloring and the coloring-driven cut bounds.

vizing_edge_coloring implements the classical fan-and-alternating-path
construction with at most max_degree + 1 colors.  matching_vizing_bound
contracts a matching, colors the contraction, lifts every color class
back to an induced matching, and keeps the best derandomized cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import BoundReport, _exact_total, _exact_weight, _report
from .cuts import check_matching, derandomized_cut, verify_induced_bipartite
from .graph import TriangleFoundError, WeightedGraph, stats


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring with colors 1..color_count."""

    color: tuple[int, ...]
    color_count: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.color_count)]
        for eid, c in enumerate(self.color):
            out[c - 1].append(eid)
        return out

    def validate(self, g: WeightedGraph) -> None:
        for v in range(g.n):
            seen = set()
            for _, eid in g.adj[v]:
                c = self.color[eid]
                if c in seen:
                    raise AssertionError(f"two color-{c} edges meet at vertex {v}")
                seen.add(c)
        if self.color_count > g.max_degree() + 1:
            raise AssertionError("coloring exceeds max degree + 1 colors")


def vizing_edge_coloring(g: WeightedGraph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree + 1 colors.

    Classical fan construction: edges are processed in id order; for an
    uncolored edge (u, v) a maximal fan at u is built (lowest-id choices),
    the alternating path in the two relevant colors through u is flipped,
    and a fan prefix is rotated.  Deterministic throughout.
    """
    palette = g.max_degree() + 1
    color = [0] * g.m
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # vertex -> {color: eid}

    def free(v: int) -> int:
        for c in range(1, palette + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color available")

    def set_color(eid: int, c: int) -> None:
        u, v, _ = g.edges[eid]
        old = color[eid]
        if old:
            del at[u][old]
            del at[v][old]
        color[eid] = c
        if c:
            at[u][c] = eid
            at[v][c] = eid

    def other(eid: int, x: int) -> int:
        u, v, _ = g.edges[eid]
        return v if x == u else u

    for start in range(g.m):
        if color[start]:
            continue
        u, v, _ = g.edges[start]
        # maximal fan at u starting with v
        fan = [v]
        fan_edge = [start]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for z, eid in g.adj[u]:
                if z in in_fan or not color[eid]:
                    continue
                if color[eid] not in at[last]:
                    nxt = (z, eid)
                    break
            if nxt is None:
                break
            fan.append(nxt[0])
            fan_edge.append(nxt[1])
            in_fan.add(nxt[0])
        c = free(u)
        d = free(fan[-1])
        if c != d:
            # flip the maximal path through u alternating colors d, c;
            # clear first so the color index never holds duplicates
            path = []
            cur, want = u, d
            while want in at[cur]:
                eid = at[cur][want]
                path.append(eid)
                cur = other(eid, cur)
                want = c if want == d else d
            flipped = [c if color[eid] == d else d for eid in path]
            for eid in path:
                set_color(eid, 0)
            for eid, col in zip(path, flipped):
                set_color(eid, col)
        # first fan prefix that is still a fan and ends where d is free
        w_index = None
        for j in range(len(fan)):
            if d in at[fan[j]]:
                continue
            ok = True
            for i in range(1, j + 1):
                if not color[fan_edge[i]] or color[fan_edge[i]] in at[fan[i - 1]]:
                    ok = False
                    break
            if ok:
                w_index = j
                break
        if w_index is None:
            raise AssertionError("fan rotation target not found")
        shifted = [color[fan_edge[i + 1]] for i in range(w_index)] + [d]
        for i in range(w_index + 1):
            set_color(fan_edge[i], 0)
        for i, col in enumerate(shifted):
            set_color(fan_edge[i], col)

    # compact to 1..c preserving the order of first use
    used: list[int] = []
    for c in color:
        if c not in used:
            used.append(c)
    remap = {c: i + 1 for i, c in enumerate(sorted(used))}
    out = EdgeColoring(tuple(remap[c] for c in color), len(used))
    out.validate(g)
    return out


# -- matching contraction -------------------------------------------------


@dataclass(frozen=True)
class ContractedGraph:
    """Result of contracting a matching, with lift-back bookkeeping.

    Parallel edges created by the contraction are merged with summed
    weights; ``edge_origin[k]`` lists the original edge ids behind
    contracted edge k.  In a triangle-free host each parallel class has at
    most two original edges and those are vertex-disjoint, so any matching
    in the contraction lifts to an induced matching of the host.
    """

    base: WeightedGraph
    vertex_origin: tuple[tuple[int, ...], ...]
    edge_origin: tuple[tuple[int, ...], ...]
    matching: tuple[int, ...]

    def lift_matching(self, base_edge_ids: Sequence[int]) -> tuple[int, ...]:
        out: list[int] = []
        for k in base_edge_ids:
            out.extend(self.edge_origin[k])
        return tuple(sorted(out))


def contract_matching(g: WeightedGraph, matching: Sequence[int]) -> ContractedGraph:
    m_ids = check_matching(g, matching)
    if not stats(g).triangle_free:
        raise TriangleFoundError("matching contraction needs a triangle-free graph")
    vid = [-1] * g.n
    origin: list[tuple[int, ...]] = []
    for eid in m_ids:
        u, v, _ = g.edges[eid]
        vid[u] = vid[v] = len(origin)
        origin.append((u, v))
    for v in range(g.n):
        if vid[v] < 0:
            vid[v] = len(origin)
            origin.append((v,))
    merged: dict[tuple[int, int], tuple[float, list[int]]] = {}
    m_set = set(m_ids)
    for eid, (u, v, w) in enumerate(g.edges):
        if eid in m_set:
            continue
        a, b = vid[u], vid[v]
        if a == b:
            raise AssertionError("contraction produced a self-loop")
        key = (min(a, b), max(a, b))
        if key in merged:
            w0, ids = merged[key]
            merged[key] = (w0 + w, ids + [eid])
        else:
            merged[key] = (w, [eid])
    keys = sorted(merged)
    base = WeightedGraph(len(origin), [(a, b, merged[(a, b)][0]) for a, b in keys])
    edge_origin = tuple(tuple(merged[k][1]) for k in keys)
    return ContractedGraph(base, tuple(origin), edge_origin, m_ids)


def matching_vizing_bound(g: WeightedGraph, matching: Sequence[int]) -> BoundReport:
    """(w(G)+w(M))/2 + (w(G)-w(M))/(2c) via coloring the contraction of M.

    c is the achieved color count of the contracted graph (at most
    2*max_degree - 1), so the reported bound is at least the worst-case
    max_degree/(2*max_degree-1) * (w(G)-w(M)) + w(M) form.  The cut is the
    best derandomized cut over M joined with each lifted color class.
    """
    con = contract_matching(g, matching)
    m_ids = con.matching
    classes = []
    if con.base.m:
        coloring = vizing_edge_coloring(con.base)
        classes = coloring.classes()
    c = max(len(classes), 1)
    best = None
    best_class = None
    for i, cls in enumerate(classes or [[]]):
        lifted = con.lift_matching(cls)
        cert = verify_induced_bipartite(g, set(m_ids) | set(lifted))
        cut = derandomized_cut(g, cert)
        if best is None or cut.weight > best.weight:
            best, best_class = cut, i
    wt = _exact_total(g)
    wm_f = float(sum(g.edges[e][2] for e in m_ids))
    exact = None
    if wt is not None:
        wm = _exact_weight(g, m_ids)
        exact = (wt + wm) / 2 + (wt - wm) / (2 * c)
    value = (g.total_weight + wm_f) / 2 + (g.total_weight - wm_f) / (2 * c)
    delta = g.max_degree()
    worst = (delta / (2 * delta - 1) * (g.total_weight - wm_f) + wm_f
             if delta >= 1 else wm_f)
    details = {"color_count": c, "matching_weight": wm_f,
               "matching_size": len(m_ids), "best_class": best_class,
               "worst_case_bound": worst}
    return _report("matching_vizing", g, value, exact, cut=best, details=details)


# -- degree-driven coefficients -------------------------------------------


def shearer_coefficient(delta: int) -> float:
    """1/2 + 1/(4*sqrt(2*delta)); randomized-redistribution coefficient."""
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    return 0.5 + 1.0 / (4.0 * math.sqrt(2.0 * delta))


def vizing_classes_coefficient(delta: int) -> float:
    """1/2 + (3*delta-1)/(4*delta^2+2*delta-2); edge-coloring coefficient."""
    return float(vizing_classes_coefficient_exact(delta))


def vizing_classes_coefficient_exact(delta: int) -> Fraction:
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    return Fraction(1, 2) + Fraction(3 * delta - 1, 4 * delta * delta + 2 * delta - 2)


def vizing_classes_bound(g: WeightedGraph) -> BoundReport:
    """Coefficient bound t * w(G) for triangle-free graphs.

    Colors the graph itself, runs the matching-contraction bound on every
    color class, and returns the best cut.  Averaging the per-class
    guarantees yields the closed-form coefficient, so the best cut meets
    it deterministically.
    """
    st = stats(g)
    if not st.triangle_free:
        raise TriangleFoundError("coefficient bound needs a triangle-free graph")
    if g.m == 0:
        cut = derandomized_cut(g, verify_induced_bipartite(g, ()))
        return _report("vizing_classes", g, 0.0,
                       Fraction(0) if g.integer_weights else None, cut,
                       {"delta": 0, "class_count": 0})
    delta = g.max_degree()
    coloring = vizing_edge_coloring(g)
    best = None
    best_class = None
    for i, cls in enumerate(coloring.classes()):
        rep = matching_vizing_bound(g, cls)
        if best is None or rep.cut.weight > best.cut.weight:
            best, best_class = rep, i
    coeff = vizing_classes_coefficient_exact(delta)
    wt = _exact_total(g)
    exact = coeff * wt if wt is not None else None
    value = float(coeff) * g.total_weight
    details = {"delta": delta, "class_count": coloring.color_count,
               "best_class": best_class, "coefficient": float(coeff)}
    return _report("vizing_classes", g, value, exact, best.cut, details)
