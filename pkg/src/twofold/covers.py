"""Incidence, alternating and canonical double covers, and quotients by involutions.

Cover vertex ``(u, side)`` of a graph on ``n`` vertices has index ``side * n + u``
in the incidence and canonical covers. The alternating cover drops isolated
cover vertices and renumbers the rest in ``(side, base)`` order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import MixedGraph, bipartition, is_automorphism, is_connected
from .perm import Permutation, is_involution, is_permutation
from .unionfind import UnionFind


class CoverVertex(NamedTuple):
    base: int
    side: int

    def __str__(self) -> str:
        return f"{self.base}_{self.side}"


def side_colouring(n: int) -> list[int]:
    """Side of each vertex of an ``idc`` or ``cdc`` built over ``n`` base vertices."""
    return [0] * n + [1] * n


@dataclass(frozen=True)
class BipartiteCover:
    """The incidence double cover as an undirected graph on all ``2n`` cover vertices."""

    base_n: int
    edges: frozenset[tuple[int, int]]

    @property
    def vertices(self) -> list[CoverVertex]:
        return [CoverVertex(i % self.base_n, i // self.base_n) for i in range(2 * self.base_n)]

    @property
    def colour_classes(self) -> tuple[range, range]:
        return range(self.base_n), range(self.base_n, 2 * self.base_n)

    @property
    def sides(self) -> list[int]:
        return side_colouring(self.base_n)

    @property
    def graph(self) -> MixedGraph:
        return MixedGraph.from_edges(2 * self.base_n, self.edges)


@dataclass(frozen=True)
class StrongBipartiteDigraph:
    """The alternating double cover: arcs run from side 0 to side 1, no isolated vertices."""

    labels: tuple[CoverVertex, ...]
    graph: MixedGraph
    components: tuple[frozenset[int], ...]

    def as_mixed(self) -> MixedGraph:
        return self.graph

    @property
    def sides(self) -> list[int]:
        return [lab.side for lab in self.labels]

    def index_of(self, base: int, side: int) -> int:
        return self.labels.index(CoverVertex(base, side))


def idc(g: MixedGraph) -> BipartiteCover:
    n = g.n
    return BipartiteCover(n, frozenset((u, n + v) for u, v in g.arcs))


def adc(g: MixedGraph) -> StrongBipartiteDigraph:
    present = sorted({CoverVertex(u, 0) for u, _ in g.arcs} | {CoverVertex(v, 1) for _, v in g.arcs},
                     key=lambda c: (c.side, c.base))
    index = {c: i for i, c in enumerate(present)}
    arcs = frozenset((index[CoverVertex(u, 0)], index[CoverVertex(v, 1)]) for u, v in g.arcs)
    uf = UnionFind(range(len(present)))
    for a, b in arcs:
        uf.union(a, b)
    comps = tuple(frozenset(c) for c in uf.groups())
    return StrongBipartiteDigraph(tuple(present), MixedGraph(len(present), arcs), comps)


def cdc(g: MixedGraph) -> MixedGraph:
    n = g.n
    arcs = set()
    for u, v in g.arcs:
        arcs.add((u, n + v))
        arcs.add((n + u, v))
    return MixedGraph(2 * n, frozenset(arcs))


def is_strongly_bipartite(d: MixedGraph) -> bool:
    """Every arc leaves a vertex of in-degree 0 and enters one of out-degree 0."""
    if any(u == v or (v, u) in d.arcs for u, v in d.arcs):
        return False
    return all(not d.in_neighbours[u] and not d.out_neighbours[v] for u, v in d.arcs)


def quotient_by_involution(h: MixedGraph, sigma: Permutation) -> MixedGraph:
    """The mixed graph ``g`` with ``cdc(g)`` isomorphic to ``h`` determined by ``sigma``.

    ``sigma`` must be an automorphism of the connected bipartite ``h`` of order two
    exchanging its colour classes. Vertices of the result are the orbits
    ``{x, sigma(x)}`` numbered by their smallest member; ``([x], [y])`` is an arc
    when ``(x, sigma(y))`` is an arc of ``h`` for ``x, y`` in the colour class of
    vertex 0. The isomorphism ``cdc(g) -> h`` is checked before returning.
    """
    sigma = tuple(sigma)
    if not is_permutation(sigma, h.n) or not is_automorphism(h, sigma):
        raise ValueError("sigma is not an automorphism of h")
    if not is_involution(sigma):
        raise ValueError("sigma is not an involution")
    if not is_connected(h):
        raise ValueError("h must be connected")
    colour = bipartition(h)
    if colour is None:
        raise ValueError("h is not bipartite")
    if any(colour[sigma[x]] == colour[x] for x in range(h.n)):
        raise ValueError("sigma does not interchange the colour classes")
    reps = sorted(min(x, sigma[x]) for x in range(h.n) if x < sigma[x])
    ref = [x if colour[x] == 0 else sigma[x] for x in reps]
    k = len(ref)
    arcs = frozenset(
        (i, j) for i, x in enumerate(ref) for j, y in enumerate(ref) if (x, sigma[y]) in h.arcs
    )
    g = MixedGraph(k, arcs)
    phi = tuple(ref) + tuple(sigma[x] for x in ref)
    if not _maps_onto(cdc(g), h, phi):
        raise AssertionError("quotient does not cover h")
    return g


def _maps_onto(g: MixedGraph, h: MixedGraph, phi: Permutation) -> bool:
    return len(g.arcs) == len(h.arcs) and all((phi[u], phi[v]) in h.arcs for u, v in g.arcs)
