"""Closed-form values and constructive colorings for trees and cacti, plus
the distance-layer coloring that witnesses the diameter lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (
    Graph,
    GraphError,
    bfs_layers,
    cactus_cycles,
    is_cactus,
    is_tree,
    peripheral_vertex,
)
from .palette import Coloring

POLICY_PAPER_FAITHFUL = "paper-faithful"
POLICY_PALETTE_GREEDY = "palette-greedy"


class ConstructionGapError(RuntimeError):
    """No feasible reuse color exists during a cactus replay step."""

    def __init__(self, vertex: int, neighbors: tuple[int, ...], candidates: list[int]):
        self.vertex = vertex
        self.neighbors = neighbors
        self.candidates = candidates
        super().__init__(
            f"no valid color for vertex {vertex} (neighbors {neighbors}, "
            f"tried new color and reuse candidates {candidates})"
        )


@dataclass(frozen=True)
class TreeStats:
    n: int
    l: int
    degree_counts: dict[int, int]

    def n_k(self, k: int) -> int:
        return self.degree_counts.get(k, 0)


@dataclass(frozen=True)
class CactusStats:
    n: int
    l: int
    n_2: int
    r: int  # cycles containing a degree-2 vertex
    cycle_count: int


def tree_stats(T: Graph) -> TreeStats:
    if not is_tree(T):
        raise GraphError("tree_stats requires a tree")
    counts: dict[int, int] = {}
    for v in range(T.n):
        d = T.degree(v)
        counts[d] = counts.get(d, 0) + 1
    return TreeStats(n=T.n, l=counts.get(1, 0), degree_counts=counts)


def cactus_stats(G: Graph) -> CactusStats:
    if not is_cactus(G):
        raise GraphError("cactus_stats requires a connected cactus")
    cycles = cactus_cycles(G)
    r = sum(1 for cyc in cycles if any(G.degree(v) == 2 for v in cyc))
    l = sum(1 for v in range(G.n) if G.degree(v) == 1)
    n_2 = sum(1 for v in range(G.n) if G.degree(v) == 2)
    return CactusStats(n=G.n, l=l, n_2=n_2, r=r, cycle_count=len(cycles))


def tree_t2_closed(T: Graph) -> int:
    """Maximum colors under a 2-color palette budget on a tree: n - l + 2."""
    if not is_tree(T) or T.n < 2:
        raise GraphError("tree_t2_closed requires a tree with n >= 2")
    st = tree_stats(T)
    return st.n - st.l + 2


def tree_t3_closed(T: Graph) -> int:
    """Claimed t_3 value on a tree: 2n - 2l + 2 - n_2."""
    if not is_tree(T) or T.n < 2:
        raise GraphError("tree_t3_closed requires a tree with n >= 2")
    st = tree_stats(T)
    return 2 * st.n - 2 * st.l + 2 - st.n_k(2)


def tree_ti_closed(T: Graph, i: int) -> int:
    """Claimed t_i value on a tree: 2n - 2l + 2 - sum of n_k for 2 <= k <= i-1.

    Guarded to i >= 3: the i=2 specialization contradicts the established
    two-color formula, so that case routes to tree_t2_closed.
    """
    if i < 3:
        raise GraphError("tree_ti_closed requires i >= 3; use tree_t2_closed for i=2")
    if not is_tree(T) or T.n < 2:
        raise GraphError("tree_ti_closed requires a tree with n >= 2")
    st = tree_stats(T)
    return 2 * st.n - 2 * st.l + 2 - sum(st.n_k(k) for k in range(2, i))


def _leaf_removal_order(T: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Strip highest-id leaves down to a 1- or 2-vertex base.

    Returns (removals as (leaf, anchor) pairs in removal order, base vertices).
    """
    adj = {v: set(T.adjacency[v]) for v in range(T.n)}
    alive = set(range(T.n))
    removals: list[tuple[int, int]] = []
    while len(alive) > 2:
        leaf = max(v for v in alive if len(adj[v]) == 1)
        (anchor,) = adj[leaf]
        adj[anchor].discard(leaf)
        del adj[leaf]
        alive.discard(leaf)
        removals.append((leaf, anchor))
    return removals, sorted(alive)


def tree_inductive(
    T: Graph, i: int, policy: str = POLICY_PAPER_FAITHFUL
) -> tuple[Coloring, int]:
    """Rebuild the tree leaf by leaf, deciding fresh-vs-reused colors.

    Under the paper-faithful policy a re-attached leaf gets a brand-new color
    iff its anchor's degree before attachment is at most i-1; the
    palette-greedy policy instead tests the anchor's current distinct
    neighbor-color count. Reuse always picks the smallest color already on
    the anchor's neighborhood, which leaves that palette unchanged, so the
    result is valid by construction.
    """
    if policy not in (POLICY_PAPER_FAITHFUL, POLICY_PALETTE_GREEDY):
        raise ValueError(f"unknown policy {policy!r}")
    if not is_tree(T):
        raise GraphError("tree_inductive requires a tree")
    if i < 2:
        raise GraphError("tree_inductive requires i >= 2")
    if T.n == 1:
        return (1,), 1
    removals, base = _leaf_removal_order(T)
    colors = [0] * T.n
    a, b = base
    colors[a], colors[b] = 1, 2
    used = 2
    adj = {a: {b}, b: {a}}
    for leaf, anchor in reversed(removals):
        anchor_nbrs = adj[anchor]
        if policy == POLICY_PAPER_FAITHFUL:
            fresh = len(anchor_nbrs) <= i - 1
        else:
            fresh = len({colors[x] for x in anchor_nbrs}) <= i - 1
        if fresh:
            used += 1
            colors[leaf] = used
        else:
            colors[leaf] = min(colors[x] for x in anchor_nbrs)
        anchor_nbrs.add(leaf)
        adj[leaf] = {anchor}
    return tuple(colors), used


def cactus_t3_closed(G: Graph) -> int:
    """Claimed t_3 value on a cactus: 2n - 2l - 2r + 2 - n_2."""
    if G.n < 3 or not is_cactus(G):
        raise GraphError("cactus_t3_closed requires a connected cactus with n >= 3")
    st = cactus_stats(G)
    return 2 * st.n - 2 * st.l - 2 * st.r + 2 - st.n_2


def _adj_valid(adj: dict[int, set[int]], colors: list[int], i: int) -> bool:
    return all(
        len({colors[u] for u in nbrs}) <= i for nbrs in adj.values()
    )


def _cactus_removal_order(G: Graph) -> tuple[list[tuple[int, tuple[int, ...]]], list[int]]:
    """Strip degree-1/degree-2 vertices down to a 3-vertex base.

    Leaves go first (highest id); with no leaves left, every leaf block is a
    cycle, so some degree-2 vertex lies on a cycle and its removal keeps the
    remainder connected. The literal "any minimum-degree vertex" rule is
    unsafe: a degree-2 bridge vertex would disconnect the graph.
    """
    adj = {v: set(G.adjacency[v]) for v in range(G.n)}
    removals: list[tuple[int, tuple[int, ...]]] = []
    while len(adj) > 3:
        leaves = [v for v, nbrs in adj.items() if len(nbrs) == 1]
        if leaves:
            u = max(leaves)
        else:
            safe = [
                v
                for v, nbrs in adj.items()
                if len(nbrs) == 2 and _connected_without(adj, v)
            ]
            if not safe:
                raise GraphError("not a cactus: no removable low-degree vertex")
            u = max(safe)
        nbrs = tuple(sorted(adj[u]))
        for w in nbrs:
            adj[w].discard(u)
        del adj[u]
        removals.append((u, nbrs))
    return removals, sorted(adj)


def _connected_without(adj: dict[int, set[int]], v: int) -> bool:
    rest = [u for u in adj if u != v]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != v and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def cactus_inductive(G: Graph) -> tuple[Coloring, int]:
    """Constructive three-palette coloring of a cactus by vertex replay.

    Each re-attached vertex first tries a brand-new color; if the verifier
    rejects it, the smallest feasible color drawn from the palettes around
    its neighbors is used instead. Every reuse is validated against the full
    neighborhood check rather than trusting the case analysis.
    """
    if G.n < 3 or not is_cactus(G):
        raise GraphError("cactus_inductive requires a connected cactus with n >= 3")
    i = 3
    removals, base = _cactus_removal_order(G)
    colors = [0] * G.n
    adj: dict[int, set[int]] = {v: set() for v in base}
    for idx, v in enumerate(base):
        colors[v] = idx + 1
        for w in base:
            if w != v and G.has_edge(v, w):
                adj[v].add(w)
    used = len(base)
    for u, nbrs in reversed(removals):
        adj[u] = set(nbrs)
        for w in nbrs:
            adj[w].add(u)
        used += 1
        colors[u] = used
        if not _adj_valid(adj, colors, i):
            used -= 1
            candidates = sorted(
                {colors[x] for w in nbrs for x in adj[w] if x != u}
            )
            for c in candidates:
                colors[u] = c
                if _adj_valid(adj, colors, i):
                    break
            else:
                colors[u] = 0
                raise ConstructionGapError(u, nbrs, candidates)
    return tuple(colors), len(set(colors))


def layered_coloring(G: Graph, i: int) -> tuple[Coloring, int]:
    """Color distance layers from a peripheral vertex with cycling ranges.

    Layer 3k-2 cycles through i - ceil((i-1)/2) - 1 colors, layer 3k-1
    through ceil((i-1)/2) colors, layer 3k uses the single color k*i+1. Any
    three consecutive layers span exactly i colors, so every neighborhood
    palette fits the budget and the construction is always valid.
    """
    if i < 3:
        raise GraphError("layered_coloring requires i >= 3")
    if G.n < 1:
        raise GraphError("layered_coloring requires n >= 1")
    root = peripheral_vertex(G)
    layers = bfs_layers(G, root)  # raises on disconnected input
    half = i // 2  # == ceil((i-1)/2)
    colors = [0] * G.n
    colors[root] = 1
    for m in range(1, len(layers)):
        if m % 3 == 1:
            k = (m + 2) // 3
            rng = list(range(2 + (k - 1) * i, k * i - half + 1))
        elif m % 3 == 2:
            k = (m + 1) // 3
            rng = list(range(k * i - half + 1, k * i + 1))
        else:
            k = m // 3
            rng = [k * i + 1]
        for idx, v in enumerate(sorted(layers[m])):
            colors[v] = rng[idx % len(rng)]
    return tuple(colors), len(set(colors))
