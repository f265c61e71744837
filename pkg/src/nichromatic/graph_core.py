"""Immutable simple-graph type and the structural queries built on it.

Vertices are dense integers 0..n-1; adjacency lists are kept sorted so
every traversal has a canonical, reproducible order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised for structurally invalid graphs or out-of-contract queries."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``n`` vertices, per-vertex sorted neighbor tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a Graph from an edge list, rejecting loops, duplicates and bad ids."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has a vertex id outside [0,{n})")
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def edge_list(G: Graph) -> list[tuple[int, int]]:
    """Canonical ascending (u, v) edge list; build(G.n, edge_list(G)) == G."""
    return list(G.edges())


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabel requires a permutation of 0..n-1")
    return build(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def _require_nonempty(G: Graph) -> None:
    if G.n == 0:
        raise GraphError("operation undefined on the empty graph")


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} outside [0,{G.n})")


def max_degree(G: Graph) -> int:
    _require_nonempty(G)
    return max(len(nbrs) for nbrs in G.adjacency)


def _bfs_distances(G: Graph, v: int) -> list[int]:
    dist = [-1] * G.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_layers(G: Graph, v: int) -> list[VertexSet]:
    """Partition V(G) into distance layers from v; layers[k] holds vertices at distance k."""
    _require_nonempty(G)
    _check_vertex(G, v)
    dist = _bfs_distances(G, v)
    unreached = [u for u, d in enumerate(dist) if d < 0]
    if unreached:
        raise GraphError(f"graph disconnected: vertices {unreached} unreachable from {v}")
    ecc = max(dist)
    layers: list[list[int]] = [[] for _ in range(ecc + 1)]
    for u, d in enumerate(dist):
        layers[d].append(u)
    return [tuple(layer) for layer in layers]


def eccentricity(G: Graph, v: int) -> int:
    return len(bfs_layers(G, v)) - 1


def diameter(G: Graph) -> int:
    """Maximum eccentricity; requires a connected, non-empty graph."""
    _require_nonempty(G)
    best = 0
    for v in range(G.n):
        dist = _bfs_distances(G, v)
        if min(dist) < 0:
            raise GraphError("diameter undefined on a disconnected graph")
        best = max(best, max(dist))
    return best


def peripheral_vertex(G: Graph) -> int:
    """Smallest-id vertex at distance diam(G) from some other vertex."""
    _require_nonempty(G)
    d = diameter(G)
    for v in range(G.n):
        if max(_bfs_distances(G, v)) == d:
            return v
    raise AssertionError("unreachable: some vertex attains the diameter")


def is_connected(G: Graph) -> bool:
    _require_nonempty(G)
    return min(_bfs_distances(G, 0)) >= 0


def components(G: Graph) -> list[VertexSet]:
    """Connected components, sorted by smallest member."""
    _require_nonempty(G)
    seen = [False] * G.n
    out: list[VertexSet] = []
    for start in range(G.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def vertex_set(G: Graph, members: Iterable[int]) -> VertexSet:
    """Canonicalize an id collection into a sorted duplicate-free VertexSet."""
    s = sorted(set(members))
    for v in s:
        _check_vertex(G, v)
    return tuple(s)


def induced_components(G: Graph, S: Iterable[int]) -> list[VertexSet]:
    """Partition S by connectivity inside the induced subgraph G[S]."""
    members = vertex_set(G, S)
    if not members:
        raise GraphError("induced_components requires a non-empty vertex set")
    inside = set(members)
    seen: set[int] = set()
    out: list[VertexSet] = []
    for start in members:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in G.adjacency[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_tree(G: Graph) -> bool:
    _require_nonempty(G)
    return G.edge_count == G.n - 1 and is_connected(G)


def _cycle_decomposition(G: Graph) -> list[tuple[int, ...]] | None:
    """DFS back-edge cycles, or None if two cycles share an edge (non-cactus).

    In a depth-first tree of an undirected graph every non-tree edge joins a
    vertex to an ancestor; the graph is a cactus exactly when the tree paths
    closed by those back edges are pairwise edge-disjoint.
    """
    parent = [-1] * G.n
    depth = [-1] * G.n
    depth[0] = 0
    stack: list[tuple[int, Iterator[int]]] = [(0, iter(G.adjacency[0]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                stack.append((w, iter(G.adjacency[w])))
                break
        else:
            stack.pop()
    used_edges: set[tuple[int, int]] = set()
    cycles: list[tuple[int, ...]] = []
    for u in range(G.n):
        for w in G.adjacency[u]:
            if w == parent[u] or u == parent[w]:
                continue
            if depth[w] > depth[u] or (depth[w] == depth[u] and w > u):
                continue  # handle each back edge once, from its deeper endpoint
            cycle = [u]
            x = u
            while x != w and x != -1:
                x = parent[x]
                cycle.append(x)
            if x != w:
                raise AssertionError("non-tree edge is not ancestor-directed")
            cycle_edges = list(zip(cycle, cycle[1:])) + [(u, w)]
            for a, b in cycle_edges:
                key = (a, b) if a < b else (b, a)
                if key in used_edges:
                    return None
                used_edges.add(key)
            cycles.append(_canonical_cycle(cycle))
    return cycles


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate/reflect so the cycle starts at its smallest vertex, then its smaller neighbor."""
    k = len(cycle)
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


def is_cactus(G: Graph) -> bool:
    """Connected graph in which every edge lies on at most one cycle."""
    _require_nonempty(G)
    if not is_connected(G):
        return False
    return _cycle_decomposition(G) is not None


def cactus_cycles(G: Graph) -> list[tuple[int, ...]]:
    """Each cycle of a cactus once, as a canonical vertex sequence (no repeated endpoint)."""
    _require_nonempty(G)
    if not is_connected(G):
        raise GraphError("cactus_cycles requires a connected graph")
    cycles = _cycle_decomposition(G)
    if cycles is None:
        raise GraphError("not a cactus: some edge lies on two cycles")
    return sorted(cycles)


def sequential_join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of parts with consecutive parts completely joined.

    Vertex ids are assigned block-wise in part order, so part k occupies a
    contiguous id range.
    """
    if not parts:
        raise GraphError("sequential_join requires at least one part")
    offsets = []
    total = 0
    for part in parts:
        if part.n == 0:
            raise GraphError("sequential_join parts must be non-empty")
        offsets.append(total)
        total += part.n
    edges: list[tuple[int, int]] = []
    for off, part in zip(offsets, parts):
        edges.extend((off + u, off + v) for u, v in part.edges())
    for (off_a, a), (off_b, b) in zip(
        zip(offsets, parts), zip(offsets[1:], parts[1:])
    ):
        for u in range(a.n):
            for v in range(b.n):
                edges.append((off_a + u, off_b + v))
    return build(total, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph requires n >= 1")
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path_graph requires n >= 1")
    return build(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle_graph requires n >= 3")
    return build(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to 1..n-1."""
    if n < 1:
        raise GraphError("star_graph requires n >= 1")
    return build(n, [(0, v) for v in range(1, n)])
