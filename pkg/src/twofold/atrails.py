"""Alternating trails, the arc relation they induce, and frontier vertices.

An alternating trail is exactly a trail of the incidence double cover: arc
``(x, y)`` is the cover edge ``{x_0, y_1}``, consecutive arcs sharing a tail meet
at ``x_0`` and those sharing a head meet at ``y_1``. The first and last vertices
are the bases of the walk's end cover vertices; the trail is closed when both
ends are the same cover vertex and semi-closed when they are the two copies of
one base vertex.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .graph import Arc, MixedGraph, components, is_graph
from .unionfind import UnionFind


class TrailKind(str, enum.Enum):
    NOT_A_TRAIL = "not_a_trail"
    OPEN = "open"
    CLOSED = "closed"
    SEMI_CLOSED = "semi_closed"


@dataclass(frozen=True)
class ATrail:
    arcs: tuple[Arc, ...]
    kind: TrailKind
    first: int
    last: int

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((self.first, self.last))


def _cover_walk(seq: Sequence[Arc]) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """End cover vertices of the walk traced by ``seq``, or None if it is not a walk."""
    ends = [((t, 0), (h, 1)) for t, h in seq]
    if len(ends) == 1:
        return ends[0]
    shared = set(ends[0]) & set(ends[1])
    if len(shared) != 1:
        return None
    cur = shared.pop()
    start = ends[0][1] if ends[0][0] == cur else ends[0][0]
    for e in ends[1:]:
        if cur not in e:
            return None
        cur = e[1] if e[0] == cur else e[0]
    return start, cur


def a_trail(g: MixedGraph, seq: Sequence[Arc]) -> ATrail | None:
    """The trail ``seq`` with its kind and end vertices, or None if it is not an A-trail of ``g``."""
    seq = tuple((int(u), int(v)) for u, v in seq)
    if not seq or len(set(seq)) != len(seq) or any(a not in g.arcs for a in seq):
        return None
    walk = _cover_walk(seq)
    if walk is None:
        return None
    (u, s), (v, t) = walk
    if u != v:
        kind = TrailKind.OPEN
    elif s == t:
        kind = TrailKind.CLOSED
    else:
        kind = TrailKind.SEMI_CLOSED
    return ATrail(seq, kind, u, v)


def classify_trail(g: MixedGraph, seq: Sequence[Arc]) -> TrailKind:
    t = a_trail(g, seq)
    return TrailKind.NOT_A_TRAIL if t is None else t.kind


def apply_tf_to_trail(m, t: ATrail, g: MixedGraph, h: MixedGraph) -> ATrail:
    """Image of ``t`` under the TF-isomorphism ``m`` from ``g`` to ``h``: ``(x, y) -> (alpha(x), beta(y))``."""
    from .tf import is_tf_map

    if not is_tf_map(g, h, m.alpha, m.beta):
        raise ValueError("map is not a TF-isomorphism from g to h")
    image = a_trail(h, [(m.alpha[x], m.beta[y]) for x, y in t.arcs])
    if image is None:
        raise AssertionError("image of an A-trail is not an A-trail")
    return image


def _cover_components(g: MixedGraph) -> dict[tuple[int, int], int]:
    """Component id of each non-isolated cover vertex ``(v, side)``."""
    uf = UnionFind()
    for u, v in g.arcs:
        uf.add((u, 0))
        uf.add((v, 1))
        uf.union((u, 0), (v, 1))
    return {x: uf.find(x) for x in uf.parent}


def is_a_connected(g: MixedGraph) -> bool:
    """Every two distinct vertices are the first and last vertices of some A-trail."""
    comp = _cover_components(g)
    reach = [{comp[(v, s)] for s in (0, 1) if (v, s) in comp} for v in range(g.n)]
    return all(reach[u] & reach[v] for u in range(g.n) for v in range(u + 1, g.n))


@dataclass(frozen=True)
class ArcPartition:
    classes: tuple[frozenset[Arc], ...]
    frontier: frozenset[int]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def frontier_count(self) -> int:
        return len(self.frontier)

    def class_of(self, arc: Arc) -> int:
        for i, c in enumerate(self.classes):
            if arc in c:
                return i
        raise KeyError(arc)


def arc_classes(g: MixedGraph) -> ArcPartition:
    """Classes of arcs that are first and last arcs of a common A-trail.

    Two arcs sharing a tail or a head are related; the classes are the
    transitive closure of that, i.e. the components of the alternating cover.
    """
    uf = UnionFind(g.arcs)
    by_tail: dict[int, list[Arc]] = defaultdict(list)
    by_head: dict[int, list[Arc]] = defaultdict(list)
    for a in g.arcs:
        by_tail[a[0]].append(a)
        by_head[a[1]].append(a)
    for group in list(by_tail.values()) + list(by_head.values()):
        for a in group[1:]:
            uf.union(group[0], a)
    classes = tuple(frozenset(c) for c in uf.groups())
    label = {a: i for i, c in enumerate(classes) for a in c}
    touching: dict[int, set[int]] = defaultdict(set)
    for u, v in g.arcs:
        touching[u].add(label[(u, v)])
        touching[v].add(label[(u, v)])
    frontier = frozenset(v for v, ids in touching.items() if len(ids) == 2)
    return ArcPartition(classes, frontier)


def frontier_vertices(g: MixedGraph) -> frozenset[int]:
    return arc_classes(g).frontier


def construct_with_classes(m: int, k: int) -> MixedGraph:
    """A mixed graph whose arc relation has ``m`` classes and ``k`` frontier vertices.

    ``k == m - 1``: a directed path with ``m`` arcs. ``k == m``: a directed cycle of
    length ``m``. ``k > m``: a star ``K_{1,k-m+1}``, an arc from its centre to a
    chain of ``m - 2`` triangle gadgets. With a single class no vertex can be a
    frontier vertex, so ``m == 1`` only admits ``k == 0``.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if m - 1 > k:
        raise ValueError(f"no mixed graph has {m} classes and only {k} frontier vertices (need m - 1 <= k)")
    if k == m - 1:
        g = MixedGraph(m + 1, frozenset((i, i + 1) for i in range(m)))
    elif m == 1:
        raise ValueError("a single class has no frontier vertices, so k must be 0 when m == 1")
    elif k == m:
        g = MixedGraph(m, frozenset((i, (i + 1) % m) for i in range(m)))
    else:
        g = _gadget_chain(m, k)
    part = arc_classes(g)
    if (part.class_count, part.frontier_count) != (m, k):
        raise AssertionError(f"construction gave {part.class_count} classes and {part.frontier_count} frontier vertices")
    return g


def _gadget_chain(m: int, k: int) -> MixedGraph:
    leaves = k - m + 1
    centre = 0
    arcs: set[Arc] = set()
    for leaf in range(1, leaves + 1):
        arcs.add((centre, leaf))
        arcs.add((leaf, centre))
    a = {i: leaves + i for i in range(1, m)}  # a_1 .. a_{m-1}
    nxt = leaves + m
    arcs.add((centre, a[1]))
    for i in range(1, m - 1):
        b, c, d = nxt, nxt + 1, nxt + 2
        nxt += 3
        for x, y in ((b, c), (c, d), (d, b)):
            arcs.add((x, y))
            arcs.add((y, x))
        arcs.add((a[i], b))
        arcs.add((d, a[i + 1]))
    return MixedGraph(nxt, frozenset(arcs))


def trail_parities(g: MixedGraph, e1: tuple[int, int], e2: tuple[int, int]) -> frozenset[str]:
    """Parities of the lengths of trails of the graph ``g`` starting with edge ``e1`` and ending with ``e2``.

    Length counts every edge of the trail, ``e1`` and ``e2`` included.
    """
    if not is_graph(g):
        raise ValueError("trail_parities needs a graph")
    if len(components(g)) != 1:
        raise ValueError("graph must be connected")
    f1, f2 = frozenset(e1), frozenset(e2)
    for f, e in ((f1, e1), (f2, e2)):
        if len(f) != 2 or tuple(e) not in g.arcs:
            raise ValueError(f"{tuple(e)} is not an edge")
    if f1 == f2:
        raise ValueError("e1 and e2 must be distinct")

    found: set[int] = set()
    used = {f1}

    def extend(cur: int, length: int) -> None:
        for y in sorted(g.out_neighbours[cur]):
            if len(found) == 2:
                return
            e = frozenset((cur, y))
            if e in used:
                continue
            if e == f2:
                found.add((length + 1) % 2)
                continue
            used.add(e)
            extend(y, length + 1)
            used.discard(e)

    x, y = tuple(e1)
    extend(y, 1)
    extend(x, 1)
    return frozenset("odd" if p else "even" for p in found)
