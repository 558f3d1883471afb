"""Weighted-graph core: data model, validation, statistics, file round-trip.

Graphs are simple and undirected with nonnegative real edge weights.
The text format is line oriented: ``c`` comment lines, one header line
``p <num_vertices> <num_edges>``, then ``e <u> <v> <weight>`` lines with
0-based vertex ids and a decimal weight.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class GraphError(Exception):
    """Base class for graph construction and parsing errors."""


class MalformedLineError(GraphError):
    """Input line does not follow the 'c' / 'p' / 'e' format."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered vertex pair appears more than once."""


class NegativeWeightError(GraphError):
    """An edge weight is negative."""


class DisconnectedGraphError(GraphError):
    """The operation requires a connected graph."""


class TriangleFoundError(GraphError):
    """The operation requires a triangle-free graph."""


class WeightedGraph:
    """Simple undirected graph with nonnegative edge weights.

    Vertices are ``0..n-1``.  Edges are stored with ``u < v``; the position
    of an edge in ``edges`` is its edge id and serves as the deterministic
    tie-breaker throughout the library.  Adjacency lists are sorted by
    neighbor id.  Instances are immutable after construction and safe to
    share across threads.

    ``integer_weights`` is True when every weight is integral; downstream
    bound arithmetic is then carried out exactly over rationals.
    """

    __slots__ = ("n", "edges", "adj", "total_weight", "integer_weights", "_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        self.n = int(n)
        canon: list[tuple[int, int, float]] = []
        ids: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"vertex id out of range: ({u}, {v})")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if w < 0:
                raise NegativeWeightError(f"negative weight {w} on edge ({u}, {v})")
            if u > v:
                u, v = v, u
            if (u, v) in ids:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            ids[(u, v)] = len(canon)
            canon.append((u, v, w))
        self.edges = tuple(canon)
        self._ids = ids
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v, w) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.total_weight = float(sum(w for _, _, w in self.edges))
        self.integer_weights = all(w.is_integer() for _, _, w in self.edges)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, _ in self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._ids

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._ids.get((min(u, v), max(u, v)))

    def weight(self, eid: int) -> float:
        return self.edges[eid][2]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, WeightedGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):  # pragma: no cover - kept unhashable on purpose
        raise TypeError("WeightedGraph is not hashable")

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m}, w={self.total_weight:g})"

    # -- structure -----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v, _ in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices: Sequence[int]):
        """Induced subgraph on ``vertices``.

        Returns ``(sub, orig_vertex, orig_edge)`` where ``orig_vertex[i]``
        is the original id of sub-vertex ``i`` and ``orig_edge[k]`` the
        original id of sub-edge ``k``.  Vertices are relabelled in sorted
        order, edges keep their relative order.
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        sub_edges = []
        orig_edge = []
        for eid, (u, v, w) in enumerate(self.edges):
            if u in index and v in index:
                sub_edges.append((index[u], index[v], w))
                orig_edge.append(eid)
        return WeightedGraph(len(vs), sub_edges), tuple(vs), tuple(orig_edge)


@dataclass(frozen=True)
class GraphStats:
    """Exact instance statistics.

    ``girth`` is None for acyclic graphs (no cycle, girth unbounded).
    """

    total_weight: float
    max_degree: int
    girth: Optional[int]
    triangle_free: bool
    connected: bool


def girth(g: WeightedGraph) -> Optional[int]:
    """Length of a shortest cycle, via BFS from every vertex; None if acyclic.

    For each root, any non-tree edge (u, v) seen during BFS closes a walk of
    dist(u) + dist(v) + 1 edges that contains a cycle of at most that length,
    and a root on a shortest cycle realizes it exactly, so the minimum over
    all roots is the girth.
    """
    best: Optional[int] = None
    for src in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for v, eid in g.adj[u]:
                if eid == via[u]:
                    continue
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    via[v] = eid
                    queue.append(v)
                else:
                    cand = dist[u] + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def stats(g: WeightedGraph) -> GraphStats:
    gi = girth(g)
    return GraphStats(
        total_weight=g.total_weight,
        max_degree=g.max_degree(),
        girth=gi,
        triangle_free=(gi is None or gi >= 4),
        connected=g.is_connected(),
    )


# -- file format -------------------------------------------------------


def _format_weight(w: float, integer_mode: bool) -> str:
    if integer_mode:
        return str(int(w))
    return repr(w)


def save_graph(g: WeightedGraph) -> str:
    """Canonical text form: header, then edges sorted by (u, v).

    Weights are written in shortest round-trip decimal form (plain
    integers in integer mode), so load(save(g)) reproduces g exactly.
    """
    lines = [f"p {g.n} {g.m}"]
    for u, v, w in sorted(g.edges):
        lines.append(f"e {u} {v} {_format_weight(w, g.integer_weights)}")
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> WeightedGraph:
    """Parse the edge-list format, validating every line.

    Raises MalformedLineError, SelfLoopError, DuplicateEdgeError or
    NegativeWeightError, each naming the offending line.
    """
    n = None
    declared_m = None
    edges: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise MalformedLineError(f"line {lineno}: repeated header")
            if len(fields) != 3:
                raise MalformedLineError(f"line {lineno}: header needs 'p <n> <m>'")
            try:
                n, declared_m = int(fields[1]), int(fields[2])
            except ValueError:
                raise MalformedLineError(f"line {lineno}: non-integer header field") from None
            if n < 0 or declared_m < 0:
                raise MalformedLineError(f"line {lineno}: negative header field")
        elif fields[0] == "e":
            if n is None:
                raise MalformedLineError(f"line {lineno}: edge before header")
            if len(fields) != 4:
                raise MalformedLineError(f"line {lineno}: edge needs 'e <u> <v> <w>'")
            try:
                u, v = int(fields[1]), int(fields[2])
                w = float(fields[3])
            except ValueError:
                raise MalformedLineError(f"line {lineno}: unparsable edge field") from None
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedLineError(f"line {lineno}: vertex id out of range")
            edges.append((u, v, w))
        else:
            raise MalformedLineError(f"line {lineno}: unknown line type {fields[0]!r}")
    if n is None:
        raise MalformedLineError("missing 'p' header line")
    if declared_m != len(edges):
        raise MalformedLineError(
            f"header declares {declared_m} edges, file has {len(edges)}")
    return WeightedGraph(n, edges)
