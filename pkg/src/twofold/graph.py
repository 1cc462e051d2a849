"""Mixed graphs: a vertex count plus a set of ordered arcs, loops allowed."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .perm import Permutation

Arc = tuple[int, int]


class GraphKind(str, enum.Enum):
    GRAPH = "graph"
    DIGRAPH = "digraph"
    PROPERLY_MIXED = "properly-mixed"


@dataclass(frozen=True)
class MixedGraph:
    """Vertices are ``0..n-1``; ``arcs`` is a set of ordered pairs.

    Isolated vertices are allowed, and so are loops ``(u, u)``.
    """

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], arcs: Iterable[Arc] = ()) -> MixedGraph:
        """Build from undirected edges (both arcs added) plus optional single arcs."""
        a = set(arcs)
        for u, v in edges:
            a.add((u, v))
            a.add((v, u))
        return cls(n, frozenset(a))

    @property
    def vertex_count(self) -> int:
        return self.n

    def __len__(self) -> int:
        return self.n

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    @cached_property
    def out_neighbours(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_neighbours(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].add(u)
        return tuple(frozenset(s) for s in inn)

    @property
    def loops(self) -> frozenset[int]:
        return frozenset(u for u, v in self.arcs if u == v)

    def is_isolated(self, v: int) -> bool:
        return not self.out_neighbours[v] and not self.in_neighbours[v]

    def relabel(self, perm: Sequence[int]) -> MixedGraph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return MixedGraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))

    def induced(self, vertices: Iterable[int]) -> MixedGraph:
        """Induced subgraph, relabelled densely in increasing vertex order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return MixedGraph(
            len(vs), frozenset((index[u], index[v]) for u, v in self.arcs if u in index and v in index)
        )


def classify(g: MixedGraph) -> GraphKind:
    if g.loops:
        return GraphKind.PROPERLY_MIXED
    if all((v, u) in g.arcs for u, v in g.arcs):
        return GraphKind.GRAPH
    if not any((v, u) in g.arcs for u, v in g.arcs):
        return GraphKind.DIGRAPH
    return GraphKind.PROPERLY_MIXED


def is_graph(g: MixedGraph) -> bool:
    return classify(g) is GraphKind.GRAPH


def underlying_graph(g: MixedGraph) -> MixedGraph:
    return MixedGraph.from_edges(g.n, ((u, v) for u, v in g.arcs if u != v))


def inverse(g: MixedGraph) -> MixedGraph:
    return MixedGraph(g.n, frozenset((v, u) for u, v in g.arcs))


def degrees(g: MixedGraph, v: int) -> tuple[int, int]:
    """``(in_degree, out_degree)`` of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"invalid vertex id {v}")
    return len(g.in_neighbours[v]), len(g.out_neighbours[v])


def is_source(g: MixedGraph, v: int) -> bool:
    return degrees(g, v)[0] == 0


def is_sink(g: MixedGraph, v: int) -> bool:
    return degrees(g, v)[1] == 0


def neighbourhood(g: MixedGraph, v: int) -> frozenset[int]:
    """Neighbours in the underlying graph (loops ignored)."""
    return (g.out_neighbours[v] | g.in_neighbours[v]) - {v}


def components(g: MixedGraph) -> list[list[int]]:
    """Connected components of the underlying graph, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in neighbourhood(g, x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: MixedGraph) -> bool:
    return len(components(g)) <= 1


def bipartition(g: MixedGraph) -> list[int] | None:
    """A 0/1 colouring with every arc joining the two colours, or None.

    Each component's smallest vertex gets colour 0. A loop makes the graph non-bipartite.
    """
    if g.loops:
        return None
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in neighbourhood(g, x):
                if colour[y] == -1:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour


def is_bipartite(g: MixedGraph) -> bool:
    return bipartition(g) is not None


def disjoint_union(*graphs: MixedGraph) -> MixedGraph:
    arcs = set()
    offset = 0
    for g in graphs:
        arcs.update((u + offset, v + offset) for u, v in g.arcs)
        offset += g.n
    return MixedGraph(offset, frozenset(arcs))


def is_automorphism(g: MixedGraph, perm: Permutation) -> bool:
    return len(perm) == g.n and all((perm[u], perm[v]) in g.arcs for u, v in g.arcs)


def is_isomorphism(g: MixedGraph, h: MixedGraph, perm: Permutation) -> bool:
    """True if ``perm`` maps the arc set of ``g`` exactly onto that of ``h``."""
    if g.n != h.n or len(perm) != g.n or len(g.arcs) != len(h.arcs):
        return False
    if sorted(perm) != list(range(g.n)):
        return False
    return all((perm[u], perm[v]) in h.arcs for u, v in g.arcs)
