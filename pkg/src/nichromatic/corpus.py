"""Deterministic graph generators: the named extremal families plus seeded
random trees, cacti and connected graphs for the property and audit suites.

Randomness comes from ``random.Random`` (Mersenne Twister), seeded per call,
so identical (family, parameters, seed) triples reproduce byte-identical
graphs on every platform.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph_core import (
    Graph,
    GraphError,
    build,
    complete_graph,
    cycle_graph,
    path_graph,
    sequential_join,
    star_graph,
)

FAMILIES = (
    "vc_extremal",
    "maxdeg_extremal",
    "seq_join_complete",
    "star",
    "double_star",
    "path",
    "cycle",
    "complete",
    "random_tree",
    "random_cactus",
    "random_connected",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: tuple[int, ...]

    def label(self) -> str:
        return f"{self.family}({','.join(str(p) for p in self.parameters)})"


def gen_vc_extremal(alpha: int) -> Graph:
    """Caterpillar whose minimum connected vertex cover is the center path.

    alpha=1..4 reproduce the exact extremal examples (star with 4 leaves,
    3+3 double star, 3+2+3 and 3+2+2+2 caterpillars); larger alpha extends
    the last pattern, keeping every center degree at least 3.
    """
    if alpha < 1:
        raise GraphError("gen_vc_extremal requires alpha >= 1")
    if alpha == 1:
        leaf_counts = [4]
    elif alpha == 2:
        leaf_counts = [3, 3]
    elif alpha == 3:
        leaf_counts = [3, 2, 3]
    else:
        leaf_counts = [3] + [2] * (alpha - 1)
    edges = [(w, w + 1) for w in range(alpha - 1)]
    nxt = alpha
    for w, count in enumerate(leaf_counts):
        for _ in range(count):
            edges.append((w, nxt))
            nxt += 1
    return build(nxt, edges)


def gen_maxdeg_extremal(n: int, k: int) -> Graph:
    """Hub with k pendants, the last of which also rides an (n-k)-cycle."""
    if not 1 <= k <= n - 1:
        raise GraphError(f"gen_maxdeg_extremal requires 1 <= k <= n-1, got n={n} k={k}")
    if n - k - 1 < 2:
        raise GraphError(
            f"gen_maxdeg_extremal needs n-k-1 >= 2 for a simple cycle, got n={n} k={k}"
        )
    hub = 0
    u = list(range(1, k + 1))
    w = list(range(k + 1, n))
    edges = [(hub, x) for x in u]
    edges.append((u[-1], w[0]))
    edges.extend((w[j], w[j + 1]) for j in range(len(w) - 1))
    edges.append((w[-1], u[-1]))
    return build(n, edges)


def gen_seq_join_complete(sizes: tuple[int, ...] | list[int]) -> Graph:
    """Sequential join of complete graphs with the given part sizes."""
    parts = tuple(sizes)
    if len(parts) < 2:
        raise GraphError("gen_seq_join_complete requires at least 2 part sizes")
    if any(a < 1 for a in parts):
        raise GraphError("gen_seq_join_complete part sizes must be positive")
    return sequential_join([complete_graph(a) for a in parts])


def gen_double_star(a: int, b: int) -> Graph:
    """Two adjacent centers with a and b pendant leaves."""
    if a < 1 or b < 1:
        raise GraphError("gen_double_star requires a, b >= 1")
    edges = [(0, 1)]
    edges.extend((0, 2 + j) for j in range(a))
    edges.extend((1, 2 + a + j) for j in range(b))
    return build(2 + a + b, edges)


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labeled tree by decoding a uniform Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)[:2]
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise GraphError("random_tree requires n >= 1")
    rng = random.Random(seed)
    return build(n, _random_tree_edges(n, rng))


def random_cactus(n: int, seed: int) -> Graph:
    """Random tree plus chords whose tree paths touch no existing cycle."""
    if n < 3:
        raise GraphError("random_cactus requires n >= 3")
    rng = random.Random(seed)
    tree_edges = _random_tree_edges(n, rng)
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    edge_set = {(min(u, v), max(u, v)) for u, v in tree_edges}
    cycle_edges: set[tuple[int, int]] = set()
    edges = list(tree_edges)
    for _ in range(3 * n):
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key in edge_set:
            continue
        path = _tree_path(adj, u, v)
        path_keys = [
            (min(a, b), max(a, b)) for a, b in zip(path, path[1:])
        ]
        if any(k in cycle_edges for k in path_keys):
            continue
        edges.append(key)
        edge_set.add(key)
        cycle_edges.update(path_keys)
        cycle_edges.add(key)
    return build(n, edges)


def _tree_path(adj: dict[int, list[int]], u: int, v: int) -> list[int]:
    parent = {u: u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                stack.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def random_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus extra distinct non-tree edges."""
    if n < 1:
        raise GraphError("random_connected requires n >= 1")
    if extra_edges < 0:
        raise GraphError("extra_edges must be non-negative")
    max_extra = n * (n - 1) // 2 - (n - 1)
    if extra_edges > max_extra:
        raise GraphError(
            f"extra_edges={extra_edges} exceeds the simple-graph limit {max_extra}"
        )
    rng = random.Random(seed)
    tree_edges = _random_tree_edges(n, rng)
    edge_set = {(min(u, v), max(u, v)) for u, v in tree_edges}
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edge_set
    ]
    chosen = rng.sample(non_edges, extra_edges) if extra_edges else []
    return build(n, tree_edges + chosen)


def generate(spec: FamilySpec, seed: int = 0) -> Graph:
    """Dispatch a FamilySpec to its generator; random families consume the seed."""
    fam, params = spec.family, spec.parameters
    if fam == "vc_extremal":
        _expect_params(spec, 1)
        return gen_vc_extremal(params[0])
    if fam == "maxdeg_extremal":
        _expect_params(spec, 2)
        return gen_maxdeg_extremal(params[0], params[1])
    if fam == "seq_join_complete":
        if len(params) < 2:
            raise GraphError("seq_join_complete needs at least 2 part sizes")
        return gen_seq_join_complete(params)
    if fam == "star":
        _expect_params(spec, 1)
        return star_graph(params[0])
    if fam == "double_star":
        if len(params) == 1:  # total order n -> near-even leaf split
            n = params[0]
            if n < 4:
                raise GraphError("double_star needs n >= 4")
            a = (n - 2 + 1) // 2
            return gen_double_star(a, n - 2 - a)
        _expect_params(spec, 2)
        return gen_double_star(params[0], params[1])
    if fam == "path":
        _expect_params(spec, 1)
        return path_graph(params[0])
    if fam == "cycle":
        _expect_params(spec, 1)
        return cycle_graph(params[0])
    if fam == "complete":
        _expect_params(spec, 1)
        return complete_graph(params[0])
    if fam == "random_tree":
        _expect_params(spec, 1)
        return random_tree(params[0], seed)
    if fam == "random_cactus":
        _expect_params(spec, 1)
        return random_cactus(params[0], seed)
    if fam == "random_connected":
        if len(params) == 1:
            n = params[0]
            max_extra = n * (n - 1) // 2 - (n - 1)
            return random_connected(n, min(2, max_extra), seed)
        _expect_params(spec, 2)
        return random_connected(params[0], params[1], seed)
    raise GraphError(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}")


def _expect_params(spec: FamilySpec, count: int) -> None:
    if len(spec.parameters) != count:
        raise GraphError(
            f"family {spec.family} expects {count} parameter(s), "
            f"got {spec.parameters!r}"
        )
