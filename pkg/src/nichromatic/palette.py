"""Coloring representation, the neighborhood-palette verifier, and the
color-set machinery over vertex subsets.

A coloring is valid for budget ``i`` when every vertex sees at most ``i``
distinct colors on its open neighborhood. Colors are positive integers with
no fixed upper bound; the partition into color classes is what matters, so
canonical comparisons go through :func:`normalize`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graph_core import Graph, induced_components, vertex_set

Coloring = tuple[int, ...]


class ColoringError(ValueError):
    """Raised for malformed colorings or out-of-contract verifier calls."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of verify: valid iff no vertex exceeds the palette budget."""

    valid: bool
    violations: tuple[tuple[int, int], ...]  # (vertex id, palette size observed)


def check_coloring(G: Graph, f: Sequence[int]) -> Coloring:
    """Validate and canonicalize a coloring: length n, all entries >= 1."""
    colors = tuple(f)
    if len(colors) != G.n:
        raise ColoringError(f"coloring length {len(colors)} != vertex count {G.n}")
    for v, c in enumerate(colors):
        if not isinstance(c, int) or c < 1:
            raise ColoringError(f"vertex {v} has non-positive color {c!r}")
    return colors


def neighborhood_palette(G: Graph, f: Sequence[int], v: int) -> frozenset[int]:
    """Colors appearing on the open neighborhood of v; empty for isolated v."""
    colors = check_coloring(G, f)
    return frozenset(colors[u] for u in G.adjacency[v])


def is_valid_coloring(G: Graph, f: Sequence[int], i: int) -> bool:
    """Early-exit validity check; agrees with verify(G, f, i).valid."""
    if i < 1:
        raise ColoringError(f"palette budget i must be >= 1, got {i}")
    colors = check_coloring(G, f)
    for nbrs in G.adjacency:
        if len(nbrs) <= i:
            continue  # a palette can never exceed the degree
        if len({colors[u] for u in nbrs}) > i:
            return False
    return True


def verify(G: Graph, f: Sequence[int], i: int) -> Verdict:
    """Full verdict listing every vertex whose palette exceeds i."""
    if i < 1:
        raise ColoringError(f"palette budget i must be >= 1, got {i}")
    colors = check_coloring(G, f)
    violations = []
    for v, nbrs in enumerate(G.adjacency):
        size = len({colors[u] for u in nbrs})
        if size > i:
            violations.append((v, size))
    return Verdict(valid=not violations, violations=tuple(violations))


def color_count(f: Sequence[int]) -> int:
    return len(set(f))


def normalize(f: Sequence[int]) -> Coloring:
    """Relabel to restricted-growth form: first occurrences become 1, 2, 3, ..."""
    mapping: dict[int, int] = {}
    out = []
    for c in f:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


def psi(G: Graph, f: Sequence[int], S: Iterable[int]) -> frozenset[int]:
    """Colors on the open neighborhood of S (members adjacent to members count)."""
    colors = check_coloring(G, f)
    members = vertex_set(G, S)
    if not members:
        raise ColoringError("psi requires a non-empty vertex set")
    return frozenset(colors[u] for v in members for u in G.adjacency[v])


class PsiBound(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def psi_bound(G: Graph, f: Sequence[int], i: int, S: Iterable[int]) -> PsiBound:
    """Neighborhood color-set bound for a valid coloring.

    Components of G[S] of size <= 2 contribute i colors per vertex; components
    of size >= 3 contribute i-1 per vertex plus i-1 per component. The mixed
    formula subsumes the all-small and all-large special cases.
    """
    if not verify(G, f, i).valid:
        raise ColoringError("psi_bound requires a valid coloring for the given i")
    members = vertex_set(G, S)
    if not members:
        raise ColoringError("psi_bound requires a non-empty vertex set")
    small = 0
    large = 0
    large_components = 0
    for comp in induced_components(G, members):
        if len(comp) <= 2:
            small += len(comp)
        else:
            large += len(comp)
            large_components += 1
    lhs = len(psi(G, f, members))
    rhs = i * small + (i - 1) * large + (i - 1) * large_components
    return PsiBound(lhs=lhs, rhs=rhs, holds=lhs <= rhs)
