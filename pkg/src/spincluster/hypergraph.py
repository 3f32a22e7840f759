"""Multihypergraph data model and enumeration of connected edge subsets.

A multihypergraph allows repeated edges and edges over any number of
vertices; every edge carries a unique label.  Connected edge subsets
(polymers) are the combinatorial unit of the interaction expansion: two
edges count as adjacent when they share at least one vertex, and a subset
is connected when its edge-adjacency graph is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Multihypergraph",
    "Polymer",
    "degree_and_rank",
    "enumerate_polymers",
    "are_compatible",
    "connected_subsets",
]


@dataclass(frozen=True)
class Multihypergraph:
    """Vertices ``0..n_vertices-1`` plus uniquely labelled edges.

    Each edge is ``(edge_id, vertices)`` where ``vertices`` is an ordered
    tuple of distinct vertex indices.  The stored vertex order is
    significant: it fixes the tensor-factor order of any operator attached
    to the edge.
    """

    n_vertices: int
    edges: tuple[tuple[str, tuple[int, ...]], ...]

    def __init__(self, n_vertices: int, edges: Iterable[tuple[str, Sequence[int]]]):
        if n_vertices < 0:
            raise ValueError("n_vertices must be nonnegative")
        normalized = []
        seen_ids = set()
        for edge_id, vertices in edges:
            edge_id = str(edge_id)
            if edge_id in seen_ids:
                raise ValueError(f"duplicate edge id {edge_id!r}")
            seen_ids.add(edge_id)
            vs = tuple(int(v) for v in vertices)
            if len(vs) == 0:
                raise ValueError(f"edge {edge_id!r} has no vertices")
            if len(set(vs)) != len(vs):
                raise ValueError(f"edge {edge_id!r} repeats a vertex")
            for v in vs:
                if not 0 <= v < n_vertices:
                    raise ValueError(f"edge {edge_id!r} references vertex {v} outside 0..{n_vertices - 1}")
            normalized.append((edge_id, vs))
        object.__setattr__(self, "n_vertices", int(n_vertices))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(eid for eid, _ in self.edges)

    def edge_vertices(self, index: int) -> tuple[int, ...]:
        return self.edges[index][1]

    def edge_index(self, edge_id: str) -> int:
        for i, (eid, _) in enumerate(self.edges):
            if eid == edge_id:
                return i
        raise KeyError(edge_id)

    def edge_adjacency(self) -> list[list[int]]:
        """For each edge index, the sorted indices of edges sharing a vertex."""
        incident: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, (_, vs) in enumerate(self.edges):
            for v in vs:
                incident[v].append(i)
        adj: list[set[int]] = [set() for _ in range(self.n_edges)]
        for edge_list in incident:
            for i in edge_list:
                adj[i].update(edge_list)
        return [sorted(s - {i}) for i, s in enumerate(adj)]


@dataclass(frozen=True, order=True)
class Polymer:
    """A connected edge subset with its derived vertex support.

    ``edge_indices`` are positions in the owning graph's edge tuple, sorted
    ascending; ``support`` is the sorted union of the member edges' vertex
    sets.  ``size`` counts edges (with multiplicity of parallel edges, since
    every edge is its own label) and ``order`` counts supported vertices.
    """

    edge_indices: tuple[int, ...]
    edge_ids: tuple[str, ...] = field(compare=False)
    support: tuple[int, ...] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.edge_indices)

    @property
    def order(self) -> int:
        return len(self.support)

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"Polymer({','.join(self.edge_ids)})"


def polymer_from_edges(graph: Multihypergraph, edge_indices: Iterable[int]) -> Polymer:
    """Build a polymer from edge indices, checking connectivity."""
    idx = tuple(sorted(set(int(i) for i in edge_indices)))
    if not idx:
        raise ValueError("a polymer contains at least one edge")
    adj = graph.edge_adjacency()
    members = set(idx)
    stack = [idx[0]]
    reached = {idx[0]}
    while stack:
        e = stack.pop()
        for nb in adj[e]:
            if nb in members and nb not in reached:
                reached.add(nb)
                stack.append(nb)
    if reached != members:
        raise ValueError("edge set is not connected")
    return _make_polymer(graph, idx)


def _make_polymer(graph: Multihypergraph, idx: tuple[int, ...]) -> Polymer:
    support = sorted({v for i in idx for v in graph.edges[i][1]})
    ids = tuple(graph.edges[i][0] for i in idx)
    return Polymer(edge_indices=idx, edge_ids=ids, support=tuple(support))


def degree_and_rank(graph: Multihypergraph) -> tuple[int, int]:
    """Maximum vertex degree (multi-edges counted) and maximum edge cardinality."""
    degree = [0] * graph.n_vertices
    rank = 0
    for _, vs in graph.edges:
        rank = max(rank, len(vs))
        for v in vs:
            degree[v] += 1
    return (max(degree, default=0), rank)


def connected_subsets(
    neighbors: Sequence[Sequence[int]],
    budget: int,
    weights: Sequence[int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Enumerate connected subsets of an abstract adjacency structure.

    Yields every subset ``S`` of ``range(len(neighbors))`` whose induced
    adjacency graph is connected and whose total weight is at most
    ``budget``, exactly once, as a sorted tuple.  Subsets are produced
    grouped by their minimum element (ascending) and sorted within each
    group, which makes the overall stream lexicographic.

    Uniqueness comes from rooted growth: a subset is only grown from its
    minimum element, and every candidate already offered at an earlier
    branch is excluded from later expansion (forbidden-set rule), so no
    seen-set is needed.
    """
    n = len(neighbors)
    if weights is None:
        weights = [1] * n

    for root in range(n):
        if weights[root] > budget:
            continue
        bucket: list[tuple[int, ...]] = []

        def grow(members: tuple[int, ...], closure: set[int], ext: list[int], used: int) -> None:
            bucket.append(members)
            for pos, cand in enumerate(ext):
                w = used + weights[cand]
                if w > budget:
                    continue
                # Candidates offered before `cand` stay excluded in the
                # subtree; new candidates must be fresh neighbors.
                new_closure = closure | set(ext[: pos + 1])
                fresh = [u for u in neighbors[cand] if u > root and u not in new_closure]
                fresh = sorted(set(fresh))
                new_closure.update(fresh)
                grow(members + (cand,), new_closure, ext[pos + 1 :] + fresh, w)

        initial = sorted(u for u in set(neighbors[root]) if u > root)
        grow((root,), {root, *initial}, initial, weights[root])
        for subset in sorted(tuple(sorted(s)) for s in bucket):
            yield subset


def enumerate_polymers(graph: Multihypergraph, m: int) -> Iterator[Polymer]:
    """Every connected edge subset with ``1 <= size <= m``, exactly once.

    The stream is lexicographic on the sorted edge-index tuples (the
    graph's stored edge order is the canonical edge order).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    adj = graph.edge_adjacency()
    for subset in connected_subsets(adj, m):
        yield _make_polymer(graph, subset)


def are_compatible(a: Polymer, b: Polymer) -> bool:
    """True iff the supports are vertex-disjoint.

    A polymer is never compatible with itself (equal supports intersect).
    """
    sa, sb = a.support, b.support
    if len(sa) > len(sb):
        sa, sb = sb, sa
    small = set(sa)
    return not any(v in small for v in sb)
