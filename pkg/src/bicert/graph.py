"""Immutable undirected multigraph and basic structural operations.

Vertices are dense integers ``0..n-1`` and edges keep their input order as
dense ids ``0..m-1``.  Parallel edges and loops are legal everywhere in this
package; a loop is the edge ``(v, v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class Graph:
    """Adjacency-list multigraph, frozen after construction.

    A non-loop edge appears once in each endpoint's adjacency list; a loop
    appears exactly once, in its single endpoint's list.  Entries are
    ``(neighbor, edge_id)`` pairs in edge-id order.  Instances are treated
    as read-only values by every algorithm here; do not mutate ``pairs``
    or ``adj`` after construction.
    """

    __slots__ = ("n", "pairs", "adj")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        copied = [(u, v) for u, v in pairs]
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(copied):
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(
                    f"edge {eid} endpoint pair ({u}, {v}) out of range for n={n}"
                )
            adj[u].append((v, eid))
            if u != v:
                adj[v].append((u, eid))
        self.n = n
        self.pairs = copied
        self.adj = adj

    @property
    def m(self) -> int:
        return len(self.pairs)

    def edge(self, eid: int) -> Edge:
        u, v = self.pairs[eid]
        return Edge(eid, u, v)

    def edges(self) -> Iterator[Edge]:
        for eid, (u, v) in enumerate(self.pairs):
            yield Edge(eid, u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph on ``n`` vertices from endpoint pairs.

    Edge ids are assigned in input order.  Raises InputError naming the
    offending pair when an endpoint is out of range.
    """
    return Graph(n, pairs)


class SimplifyResult(NamedTuple):
    graph: Graph
    removed: int


def simplify(g: Graph) -> SimplifyResult:
    """Drop parallel duplicates, keeping the first copy of each endpoint pair.

    Loops are retained (deduplicated like any other pair) because they decide
    the two-colorability verdict on their own.  The result has freshly dense
    edge ids; ``removed`` counts dropped duplicates.  Idempotent.
    """
    seen: set[tuple[int, int]] = set()
    kept: list[tuple[int, int]] = []
    for u, v in g.pairs:
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        kept.append((u, v))
    return SimplifyResult(Graph(g.n, kept), g.m - len(kept))


@dataclass(frozen=True)
class ComponentLabeling:
    """Dense component ids per vertex; ids ordered by smallest member vertex."""

    component_of: list[int]
    k: int

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.component_of):
            groups[c].append(v)
        return groups


def connected_components(g: Graph) -> ComponentLabeling:
    """Label connected components; isolated vertices are singletons."""
    label = [-1] * g.n
    adj = g.adj
    k = 0
    for seed in range(g.n):
        if label[seed] != -1:
            continue
        label[seed] = k
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for nbr, _ in adj[x]:
                if label[nbr] == -1:
                    label[nbr] = k
                    queue.append(nbr)
        k += 1
    return ComponentLabeling(label, k)


class InducedResult(NamedTuple):
    graph: Graph
    back_map: list[int]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedResult:
    """Subgraph induced by a vertex set, with new dense ids.

    ``back_map[new_id] = old_id``; new ids follow ascending old ids.  Edges
    with both endpoints inside survive, renumbered in original id order.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range for n={g.n}")
    new_id = {old: new for new, old in enumerate(chosen)}
    pairs = [
        (new_id[u], new_id[v])
        for u, v in g.pairs
        if u in new_id and v in new_id
    ]
    return InducedResult(Graph(len(chosen), pairs), chosen)


@dataclass
class Path:
    """A simple path: ``vertices[i]`` joined to ``vertices[i+1]`` by ``edge_ids[i]``."""

    vertices: list[int]
    edge_ids: list[int]

    @property
    def length(self) -> int:
        return len(self.edge_ids)


def find_path(g: Graph, allowed: Iterable[int], a: int, b: int) -> Path | None:
    """Shortest path from ``a`` to ``b`` using only ``allowed`` vertices.

    Breadth-first; at each step neighbors are scanned in ascending
    ``(vertex, edge_id)`` order, so ties between equal-length paths resolve
    toward lower vertex ids.  Returns None when ``b`` is unreachable; a == b
    yields the zero-length path.  Loops are never traversed.
    """
    allowed_set = allowed if isinstance(allowed, (set, frozenset)) else set(allowed)
    if a not in allowed_set or b not in allowed_set:
        raise InputError("path endpoints must belong to the allowed set")
    if a == b:
        return Path([a], [])
    parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for nbr, eid in sorted(g.adj[x]):
            if nbr in parent or nbr not in allowed_set:
                continue
            parent[nbr] = (x, eid)
            if nbr == b:
                verts = [b]
                eids = []
                cur = b
                while cur != a:
                    prev, via = parent[cur]
                    eids.append(via)
                    verts.append(prev)
                    cur = prev
                verts.reverse()
                eids.reverse()
                return Path(verts, eids)
            queue.append(nbr)
    return None
