"""Independent brute-force oracles and instance builders used by the tests.

Everything here deliberately avoids the library's fast paths so the tests
remain a second route to the same quantities.
"""

from __future__ import annotations

import random
from itertools import combinations

from cutbounds import WeightedGraph, verify_induced_bipartite
from cutbounds.cuts import NotBipartiteError, NotInducedError


def naive_max_cut(g: WeightedGraph) -> float:
    """Full 2^n loop, recomputing the cut weight from scratch each time."""
    best = 0.0
    for mask in range(1 << g.n):
        w = 0.0
        for u, v, wt in g.edges:
            if (mask >> u & 1) != (mask >> v & 1):
                w += wt
        if w > best:
            best = w
    return best


def girth_by_edge_removal(g: WeightedGraph):
    """Girth via shortest u-v path after deleting each edge (u, v)."""
    from collections import deque
    best = None
    for eid, (u, v, _) in enumerate(g.edges):
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y, e2 in g.adj[x]:
                if e2 != eid and y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if v in dist:
            cand = dist[v] + 1
            if best is None or cand < best:
                best = cand
    return best


def brute_max_bipartite_family(g: WeightedGraph) -> float:
    """Max certificate weight over all edge subsets (only for tiny m)."""
    best = 0.0
    for mask in range(1 << g.m):
        ids = [e for e in range(g.m) if mask >> e & 1]
        try:
            verify_induced_bipartite(g, ids)
        except (NotInducedError, NotBipartiteError):
            continue
        w = sum(g.edges[e][2] for e in ids)
        if w > best:
            best = w
    return best


def has_triangle_scan(g: WeightedGraph) -> bool:
    """Exhaustive triple scan."""
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            return True
    return False


def spanning_tree_weights(g: WeightedGraph) -> list[float]:
    """Weights of every spanning tree, by subset enumeration."""
    out = []
    for eids in combinations(range(g.m), g.n - 1):
        par = list(range(g.n))

        def find(x):
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        ok = True
        for e in eids:
            u, v, _ = g.edges[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            par[ru] = rv
        if ok and len({find(v) for v in range(g.n)}) == 1:
            out.append(sum(g.edges[e][2] for e in eids))
    return out


def edge_coloring_feasible(g: WeightedGraph, k: int) -> bool:
    """Backtracking proper edge coloring with at most k colors."""
    col = [0] * g.m

    def usable(e, c):
        u, v, _ = g.edges[e]
        for x in (u, v):
            for _, e2 in g.adj[x]:
                if e2 != e and col[e2] == c:
                    return False
        return True

    def rec(e):
        if e == g.m:
            return True
        for c in range(1, k + 1):
            if usable(e, c):
                col[e] = c
                if rec(e + 1):
                    return True
                col[e] = 0
        return False

    return rec(0)


def random_connected_graph(n: int, extra_edges: int, rng: random.Random,
                           integer_weights: bool = False) -> WeightedGraph:
    """Random tree plus extra random edges; connected by construction."""
    def draw():
        return float(rng.randint(0, 9)) if integer_weights else rng.random() * 5.0

    edges = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = draw()
    tries = 0
    while len(edges) < n - 1 + extra_edges and tries < 20 * extra_edges + 20:
        tries += 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in edges:
            edges[key] = draw()
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


def random_certificate_edges(g: WeightedGraph, rng: random.Random) -> list[int]:
    """A valid certificate: bipartite components of a random induced subgraph."""
    from collections import deque
    keep = [v for v in range(g.n) if rng.random() < 0.6]
    keep_set = set(keep)
    seen = set()
    out = []
    for s in keep:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, _ in g.adj[u]:
                if v in keep_set and v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        color = {comp[0]: 0}
        queue = deque([comp[0]])
        odd = False
        while queue and not odd:
            u = queue.popleft()
            for v, _ in g.adj[u]:
                if v not in keep_set:
                    continue
                if v not in color:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    odd = True
                    break
        if odd:
            continue
        comp_set = set(comp)
        out.extend(e for e, (u, v, _) in enumerate(g.edges)
                   if u in comp_set and v in comp_set)
    return sorted(set(out))
