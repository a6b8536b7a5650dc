"""Immutable simple undirected graphs and the structural transforms the claim checks quantify over.

Vertices are dense integer ids 0..n-1.  Every transform returns a new graph,
so callers can hold the pre- and post-transform graphs side by side.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """A graph construction or transform violated one of its preconditions."""


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Invariants: no self-loops, no parallel edges, adjacency symmetric,
    neighbor lists sorted ascending (giving a canonical u < v edge order),
    and m == sum(degrees) / 2.
    """

    __slots__ = ("n", "m", "adj", "degrees")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...]):
        self.n = n
        self.adj = adj
        self.degrees = tuple(len(nbrs) for nbrs in adj)
        self.m = sum(self.degrees) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adj[u], self.adj[v]
        return v in a if len(a) <= len(b) else u in b

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    delta: int
    Delta: int


@dataclass(frozen=True)
class EccentricityTable:
    ecc: tuple[int, ...]

    @property
    def radius(self) -> int:
        return min(self.ecc)

    @property
    def diameter(self) -> int:
        return max(self.ecc)


def _graph_from_adj_sets(n: int, adj_sets: Sequence[set[int]]) -> Graph:
    return Graph(n, tuple(tuple(sorted(s)) for s in adj_sets))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated simple graph; rejects self-loops, duplicates, bad ids."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return _graph_from_adj_sets(n, adj)


def degree_summary(g: Graph) -> DegreeSummary:
    if g.n == 0:
        raise GraphError("degree summary of the empty graph is undefined")
    return DegreeSummary(g.degrees, min(g.degrees), max(g.degrees))


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    if g.n == 1:
        return True
    return all(d >= 0 for d in _bfs_distances(g, 0))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    """True for P_n (n >= 1): a tree with maximum degree at most 2."""
    return is_tree(g) and (g.n <= 2 or max(g.degrees) == 2)


def is_star_graph(g: Graph) -> bool:
    """True for K_{1,n-1} (n >= 2), including K_2 = K_{1,1}."""
    if g.n < 2 or not is_tree(g):
        return False
    return sorted(g.degrees, reverse=True)[0] == g.n - 1 or g.n == 2


def is_spider(g: Graph) -> bool:
    """True for trees with at most one vertex of degree greater than two."""
    return is_tree(g) and sum(1 for d in g.degrees if d > 2) <= 1


def _two_coloring(g: Graph) -> list[int] | None:
    """BFS 2-coloring; None when an odd cycle is found.  Assumes g connected."""
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return None
    return color


def is_bipartite(g: Graph) -> bool:
    if not is_connected(g):
        raise GraphError("bipartiteness test here assumes a connected graph")
    return _two_coloring(g) is not None


def classify_regularity(g: Graph) -> str:
    """Classify as 'regular', 'semiregular-bipartite', or 'other'.

    Semiregular-bipartite means the degree set is {Delta, delta} with
    Delta != delta, the graph is bipartite, and every edge joins a
    Delta-vertex to a delta-vertex.
    """
    if not is_connected(g):
        raise GraphError("regularity classification requires a connected graph")
    lo, hi = min(g.degrees), max(g.degrees)
    if lo == hi:
        return "regular"
    if _two_coloring(g) is None:
        return "other"
    for u, v in g.edges():
        if {g.degrees[u], g.degrees[v]} != {lo, hi}:
            return "other"
    return "semiregular-bipartite"


def eccentricities(g: Graph) -> EccentricityTable:
    """Per-vertex eccentricity by BFS from every vertex; requires connectivity."""
    if not is_connected(g):
        raise GraphError("eccentricities are undefined on a disconnected graph")
    ecc = []
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        ecc.append(max(dist))
    return EccentricityTable(tuple(ecc))


def line_graph(g: Graph) -> Graph:
    """Line graph on the edges of g in canonical (u < v) lexicographic order."""
    edges = g.edge_list()
    if not edges:
        raise GraphError("line graph of an edgeless graph is undefined")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        incident[u].append(idx)
        incident[v].append(idx)
    adj: list[set[int]] = [set() for _ in range(len(edges))]
    for ids in incident:
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                adj[a].add(b)
                adj[b].add(a)
    return _graph_from_adj_sets(len(edges), adj)


def complement(g: Graph) -> Graph:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u in range(g.n):
        nbrs = set(g.adj[u])
        adj[u] = {v for v in range(g.n) if v != u and v not in nbrs}
    return _graph_from_adj_sets(g.n, adj)


def join_apex(g: Graph) -> Graph:
    """Add an apex vertex (id n) adjacent to every existing vertex."""
    n = g.n
    adj = [set(nbrs) | {n} for nbrs in g.adj]
    adj.append(set(range(n)))
    return _graph_from_adj_sets(n + 1, adj)


def attach_pendant_path(g: Graph, u: int, t: int, *, require_pendant: bool = True) -> Graph:
    """Append a path of t new vertices at u; u's degree grows by one.

    With require_pendant (the setting the claim checks use) u must be a
    pendant vertex of a graph with n >= 3.  Pass require_pendant=False to
    allow general attachment points.
    """
    if t < 1:
        raise GraphError(f"pendant path length must be >= 1, got {t}")
    if not (0 <= u < g.n):
        raise GraphError(f"vertex {u} outside 0..{g.n - 1}")
    if require_pendant:
        if g.n < 3:
            raise GraphError("pendant-path attachment requires n >= 3")
        if g.degrees[u] != 1:
            raise GraphError(f"vertex {u} has degree {g.degrees[u]}, expected a pendant vertex")
    adj = [set(nbrs) for nbrs in g.adj] + [set() for _ in range(t)]
    chain = [u] + list(range(g.n, g.n + t))
    for a, b in zip(chain, chain[1:]):
        adj[a].add(b)
        adj[b].add(a)
    return _graph_from_adj_sets(g.n + t, adj)


def pendant_paths_at(g: Graph, u: int) -> list[list[int]]:
    """Pendant chains v1..vl hanging from u: deg(vi)=2 for i<l, deg(vl)=1."""
    chains = []
    for v in g.adj[u]:
        chain = []
        prev, cur = u, v
        while g.degrees[cur] == 2:
            chain.append(cur)
            a, b = g.adj[cur]
            prev, cur = cur, (b if a == prev else a)
            if cur == u:  # walked around a cycle
                chain = None
                break
        if chain is None:
            continue
        if g.degrees[cur] == 1:
            chain.append(cur)
            chains.append(chain)
    return chains


def lemma26_shift(g: Graph, u: int, w1: int, path: Sequence[int]) -> Graph:
    """Detach the subtree at w1 from u and re-attach it at the tip of a pendant
    chain hanging from u (remove edge u-w1, add edge path[-1]-w1).

    Preconditions mirror the registered claim lemma-2.6: u adjacent to both
    path[0] and w1, path is a pendant chain at u, deg(u) >= 3, and both
    path[0] and w1 have degree at most 2.
    """
    path = list(path)
    if not path:
        raise GraphError("pendant path must be non-empty")
    v1, vl = path[0], path[-1]
    if not g.has_edge(u, w1):
        raise GraphError(f"u={u} and w1={w1} are not adjacent")
    if not g.has_edge(u, v1):
        raise GraphError(f"u={u} and path start {v1} are not adjacent")
    if w1 == u or w1 in path:
        raise GraphError("w1 must be distinct from u and the pendant path")
    if g.degrees[u] < 3:
        raise GraphError(f"deg(u)={g.degrees[u]}, need at least 3")
    if g.degrees[v1] > 2:
        raise GraphError(f"deg(path[0])={g.degrees[v1]}, need at most 2")
    if g.degrees[w1] > 2:
        raise GraphError(f"deg(w1)={g.degrees[w1]}, need at most 2")
    for i, v in enumerate(path):
        expected = 1 if i == len(path) - 1 else 2
        if g.degrees[v] != expected:
            raise GraphError(f"path vertex {v} has degree {g.degrees[v]}, expected {expected}")
        if i + 1 < len(path) and not g.has_edge(v, path[i + 1]):
            raise GraphError(f"path vertices {v} and {path[i + 1]} are not adjacent")
    adj = [set(nbrs) for nbrs in g.adj]
    adj[u].remove(w1)
    adj[w1].remove(u)
    adj[vl].add(w1)
    adj[w1].add(vl)
    return _graph_from_adj_sets(g.n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabeled copy where old vertex v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges():
        adj[perm[u]].add(perm[v])
        adj[perm[v]].add(perm[u])
    return _graph_from_adj_sets(g.n, adj)
