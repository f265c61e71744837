"""Ground-truth computation: exhaustive oracle, branch-and-bound solver,
and exact minimum connected vertex cover.

The oracle and the solver are deliberately independent routes to the same
value; the solver's prunings are restricted to the two sound upper bounds
so that its correctness never depends on the claims under audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph_core import Graph, GraphError, VertexSet, is_connected, max_degree
from .palette import Coloring

ORACLE_CAP = 11  # Bell(11) = 678570 partitions; enumeration stays desk-scale
DEFAULT_NODE_BUDGET = 50_000_000


class OracleCapError(GraphError):
    """Raised when the exhaustive oracle is asked for more than it can chew."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Coloring
    nodes: int
    complete: bool


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """All set partitions of 0..n-1 as restricted-growth strings, lexicographic.

    Yields a shared buffer; callers must copy before storing.
    """
    a = [0] * n
    b = [1] * n  # b[k] = 1 + max(a[:k]); a[k] may range over 0..b[k]
    while True:
        yield a
        k = n - 1
        while k > 0 and a[k] >= b[k]:
            k -= 1
        if k == 0:
            return
        a[k] += 1
        nxt = b[k] + 1 if a[k] == b[k] else b[k]
        for j in range(k + 1, n):
            a[j] = 0
            b[j] = nxt


def oracle_ti(G: Graph, i: int) -> SolveResult:
    """Exhaustive maximum over all colorings, via set-partition enumeration.

    Only vertices of degree > i can violate the palette budget, so the
    validity filter touches just those neighborhoods.
    """
    if G.n < 1:
        raise GraphError("oracle_ti requires n >= 1")
    if i < 1:
        raise GraphError(f"palette budget i must be >= 1, got {i}")
    if G.n > ORACLE_CAP:
        raise OracleCapError(
            f"oracle cap exceeded (n={G.n} > {ORACLE_CAP}), use solve_ti"
        )
    check_list = [nbrs for nbrs in G.adjacency if len(nbrs) > i]
    best = 0
    best_rgs: list[int] = []
    nodes = 0
    for rgs in _restricted_growth_strings(G.n):
        nodes += 1
        count = max(rgs) + 1
        if count <= best:
            continue
        ok = True
        for nbrs in check_list:
            if len({rgs[u] for u in nbrs}) > i:
                ok = False
                break
        if ok:
            best = count
            best_rgs = list(rgs)
    witness = tuple(c + 1 for c in best_rgs)
    return SolveResult(value=best, witness=witness, nodes=nodes, complete=True)


def solve_ti(G: Graph, i: int, node_budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Depth-first branch-and-bound maximization of the number of colors.

    Vertices are colored in descending-degree order (ties by id) with
    candidate colors 1..max_used+1, so each color partition is visited once
    in restricted-growth form. A partial assignment dies when some vertex
    already sees more than i colors, or when even coloring every remaining
    vertex with a fresh color cannot beat the incumbent. The only a-priori
    upper bound used is min(n, n - max_degree + i) for connected inputs.
    """
    if G.n < 1:
        raise GraphError("solve_ti requires n >= 1")
    if i < 1:
        raise GraphError(f"palette budget i must be >= 1, got {i}")
    n = G.n
    order = sorted(range(n), key=lambda v: (-len(G.adjacency[v]), v))
    adj = G.adjacency
    upper = n
    if n >= 2 and is_connected(G):
        upper = min(n, n - max_degree(G) + i)

    # all-ones is valid for every i >= 1, so there is always an incumbent
    best_value = 1
    best_witness: list[int] = [1] * n
    assigned = [0] * n  # 0 = uncolored, else color id
    seen: list[list[int]] = [[0] * (n + 2) for _ in range(n)]  # per-vertex color counts
    distinct = [0] * n
    nodes = 0
    exhausted = True

    def place(v: int, c: int) -> int:
        """Add color c around v; return count of updated neighbors, -1 on overflow."""
        done = 0
        for u in adj[v]:
            row = seen[u]
            if row[c] == 0:
                distinct[u] += 1
                if distinct[u] > i:
                    row[c] += 1
                    done += 1
                    return -done
            row[c] += 1
            done += 1
        return done

    def unplace(v: int, c: int, done: int) -> None:
        for idx in range(done):
            u = adj[v][idx]
            row = seen[u]
            row[c] -= 1
            if row[c] == 0:
                distinct[u] -= 1

    def descend(depth: int, used: int) -> bool:
        """Returns False when the node budget ran out."""
        nonlocal best_value, nodes, exhausted
        if depth == n:
            if used > best_value:
                best_value = used
                best_witness[:] = assigned
            return True
        v = order[depth]
        remaining = n - depth - 1
        for c in range(used + 1, 0, -1):  # fresh color first: reaches big counts early
            used_after = used + 1 if c == used + 1 else used
            if used_after + remaining <= best_value:
                continue
            if nodes >= node_budget:
                exhausted = False
                return False
            nodes += 1
            placed = place(v, c)
            if placed >= 0:
                assigned[v] = c
                alive = descend(depth + 1, used_after)
                assigned[v] = 0
                unplace(v, c, placed)
                if not alive:
                    return False
                if best_value >= upper:
                    return True  # incumbent meets a sound upper bound: optimal
            else:
                unplace(v, c, -placed)
        return True

    descend(0, 0)
    complete = exhausted or best_value >= upper
    return SolveResult(
        value=best_value,
        witness=tuple(best_witness),
        nodes=nodes,
        complete=complete,
    )


def min_connected_vertex_cover(G: Graph) -> tuple[int, VertexSet]:
    """Smallest S meeting every edge with G[S] connected; lexicographically
    first optimum. Exponential search, intended for desk-scale graphs."""
    if G.n < 2:
        raise GraphError("min_connected_vertex_cover requires n >= 2")
    if not is_connected(G):
        raise GraphError("min_connected_vertex_cover requires a connected graph")
    edges = list(G.edges())
    adj = G.adjacency
    for k in range(1, G.n + 1):
        for subset in combinations(range(G.n), k):
            inside = set(subset)
            if any(u not in inside and v not in inside for u, v in edges):
                continue
            if _induced_connected(adj, subset):
                return k, subset
    raise AssertionError("unreachable: V(G) is always a connected cover")


def _induced_connected(adj, subset: tuple[int, ...]) -> bool:
    inside = set(subset)
    stack = [subset[0]]
    seen = {subset[0]}
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(subset)
