"""Colored simple graphs and the neighborhood queries the reduction rules need.

Vertices carry one of three colors.  Red vertices are forced into any solution,
white vertices are already dominated, and black vertices still need to be
dominated.  An uncolored ("plain") graph is represented as an all-black one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph input or operation."""


class Color(Enum):
    RED = "R"
    WHITE = "W"
    BLACK = "B"

    @classmethod
    def from_letter(cls, letter: str) -> "Color":
        try:
            return cls(letter)
        except ValueError:
            raise GraphError(f"unknown color letter {letter!r}") from None


class ColoredGraph:
    """Mutable simple undirected graph whose vertices carry a color.

    Vertex ids are stable non-negative integers.  Ids of deleted vertices are
    never reused: every vertex added later gets a strictly larger id, which
    keeps reduction traces unambiguous even after gadget insertion.
    """

    __slots__ = ("_adj", "_color", "_next_id")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._color: dict[int, Color] = {}
        self._next_id = 0

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        colors: dict[int, Color] | None = None,
    ) -> "ColoredGraph":
        """Build a graph on vertices 0..n-1 (black unless overridden)."""
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(u, v)
        for v, c in (colors or {}).items():
            g.set_color(v, c)
        return g

    # -- queries ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._adj)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def neighbors(self, v: int) -> set[int]:
        """Open neighborhood.  The returned set is internal; treat as read-only."""
        self._require(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def color(self, v: int) -> Color:
        self._require(v)
        return self._color[v]

    def vertices_of_color(self, color: Color) -> list[int]:
        return sorted(v for v, c in self._color.items() if c is color)

    def red_vertices(self) -> list[int]:
        return self.vertices_of_color(Color.RED)

    def white_vertices(self) -> list[int]:
        return self.vertices_of_color(Color.WHITE)

    def black_vertices(self) -> list[int]:
        return self.vertices_of_color(Color.BLACK)

    def black_neighbors(self, v: int) -> set[int]:
        return {u for u in self.neighbors(v) if self._color[u] is Color.BLACK}

    def is_plain(self) -> bool:
        return all(c is Color.BLACK for c in self._color.values())

    # -- mutators --------------------------------------------------------

    def add_vertex(self, color: Color = Color.BLACK) -> int:
        v = self._next_id
        self._next_id += 1
        self._adj[v] = set()
        self._color[v] = color
        return v

    def add_edge(self, u: int, v: int) -> None:
        self._require(u)
        self._require(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def delete_vertex(self, v: int) -> None:
        self._require(v)
        for u in self._adj.pop(v):
            self._adj[u].discard(v)
        del self._color[v]

    def set_color(self, v: int, color: Color) -> None:
        self._require(v)
        if not isinstance(color, Color):
            raise GraphError(f"not a color: {color!r}")
        self._color[v] = color

    # -- plumbing --------------------------------------------------------

    def copy(self) -> "ColoredGraph":
        g = ColoredGraph()
        g._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        g._color = dict(self._color)
        g._next_id = self._next_id
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._adj == other._adj and self._color == other._color

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.vertex_count}, m={self.edge_count})"

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex id {v}")


def common_black_neighbors(g: ColoredGraph, u_set: Iterable[int]) -> set[int]:
    """Black vertices adjacent to every member of ``u_set``.

    The result is automatically disjoint from ``u_set`` in a simple graph: a
    vertex is never its own neighbor.
    """
    members = sorted(set(u_set))
    if not members:
        raise GraphError("common_black_neighbors needs a nonempty vertex set")
    common = set(g.neighbors(members[0]))
    for u in members[1:]:
        common &= g.neighbors(u)
        if not common:
            break
    common = {v for v in common if g.color(v) is Color.BLACK}
    assert common.isdisjoint(members)
    return common


def contains_kij(
    g: ColoredGraph, i: int, j: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find a complete bipartite subgraph with side sizes i and j, if any.

    Enumerates i-subsets of the vertices and certifies containment when the
    common open neighborhood has at least j members; that is sound and
    complete for subgraph (not induced-subgraph) containment.  Returns the
    lexicographically first witness ``(i_side, j_side)`` or ``None``.
    """
    if not 1 <= i <= j:
        raise GraphError(f"need 1 <= i <= j, got i={i}, j={j}")
    verts = g.vertices()
    if i > len(verts):
        return None
    for a_side in combinations(verts, i):
        common = set(g.neighbors(a_side[0]))
        for u in a_side[1:]:
            common &= g.neighbors(u)
            if len(common) < j:
                break
        if len(common) >= j:
            return a_side, tuple(sorted(common)[:j])
    return None


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Vertex order in which every vertex has few neighbors later in the order."""

    order: tuple[int, ...]
    degeneracy: int

    def forward_degrees(self, g: ColoredGraph) -> list[int]:
        position = {v: t for t, v in enumerate(self.order)}
        return [
            sum(1 for u in g.neighbors(v) if u in position and position[u] > t)
            for t, v in enumerate(self.order)
        ]


def degeneracy_ordering(
    g: ColoredGraph, restrict: Iterable[int] | None = None
) -> DegeneracyOrdering:
    """Order vertices by repeatedly removing a minimum-degree vertex.

    The maximum degree seen at removal time equals the graph's degeneracy.
    Degree ties break toward the smallest vertex id, so the ordering is
    deterministic.  ``restrict`` limits the computation to an induced
    subgraph without copying the graph.
    """
    if restrict is None:
        pool = set(g.vertices())
    else:
        pool = set(restrict)
        for v in pool:
            if not g.has_vertex(v):
                raise GraphError(f"unknown vertex id {v}")
    deg = {v: sum(1 for u in g.neighbors(v) if u in pool) for v in pool}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    order: list[int] = []
    removed: set[int] = set()
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != deg[v]:
            continue  # stale heap entry
        removed.add(v)
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in g.neighbors(v):
            if u in pool and u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return DegeneracyOrdering(tuple(order), degeneracy if order else 0)
