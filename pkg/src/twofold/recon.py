"""Reconstruction from neighbourhoods via canonical double cover preimages, and
symmetrization of mixed graphs.

Each conjugacy class of colour-swapping involutions of a connected bipartite
``h`` gives one mixed graph ``g`` with ``cdc(g)`` isomorphic to ``h``, and distinct
classes give non-isomorphic graphs. ``g`` is loopless exactly when the class
never takes a vertex to one of its neighbours.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .covers import cdc, idc, quotient_by_involution, side_colouring
from .graph import GraphKind, MixedGraph, bipartition, classify, is_connected
from .iso import (
    ENUMERATION_CAP,
    CapExceeded,
    automorphism_group,
    class_swapping_involutions,
    conjugacy_classes,
    find_isomorphism,
)
from .perm import Permutation, compose, identity, is_involution
from .tf import TFMap, find_tf_isomorphism, is_tf_map


@dataclass(frozen=True)
class PreimageSet:
    graphs: tuple[MixedGraph, ...]
    witnesses: tuple[Permutation, ...]
    loopless_flags: tuple[bool, ...]
    class_sizes: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.graphs)

    def loopless(self) -> list[MixedGraph]:
        return [g for g, ok in zip(self.graphs, self.loopless_flags) if ok]


def _moves_to_neighbour(h: MixedGraph, sigma: Permutation) -> bool:
    return any((u, sigma[u]) in h.arcs for u in range(h.n))


def enumerate_cdc_preimages(h: MixedGraph, cap: int = ENUMERATION_CAP) -> PreimageSet:
    """All mixed graphs whose canonical double cover is isomorphic to ``h``, one per class."""
    if not is_connected(h):
        raise ValueError("h must be connected")
    colour = bipartition(h)
    if colour is None or h.n < 2:
        raise ValueError("h must be bipartite with both colour classes non-empty")
    group = automorphism_group(h, cap=cap)
    swaps = class_swapping_involutions(group, colour)
    classes = conjugacy_classes(group, swaps)
    graphs, witnesses, flags = [], [], []
    for cls in classes:
        sigma = cls[0]
        g = quotient_by_involution(h, sigma)
        if find_isomorphism(cdc(g), h) is None:
            raise AssertionError("quotient does not have h as its canonical double cover")
        graphs.append(g)
        witnesses.append(sigma)
        flags.append(not _moves_to_neighbour(h, sigma))
    return PreimageSet(tuple(graphs), tuple(witnesses), tuple(flags), tuple(classes.sizes()))


def count_reconstructions(g: MixedGraph, cap: int = ENUMERATION_CAP) -> tuple[int, bool]:
    """Number of loopless graphs sharing the neighbourhood family of the non-bipartite connected graph ``g``.

    The second value reports whether ``g`` itself is among them, which it always
    should be.
    """
    if classify(g) is not GraphKind.GRAPH:
        raise ValueError("g must be a graph")
    if not is_connected(g):
        raise ValueError("g must be connected")
    if bipartition(g) is not None:
        raise ValueError("g is bipartite, so its canonical double cover is disconnected")
    pre = enumerate_cdc_preimages(cdc(g), cap=cap)
    found = [e for e in pre.loopless() if classify(e) is GraphKind.GRAPH]
    including_self = any(e.n == g.n and find_isomorphism(e, g) is not None for e in found)
    return len(found), including_self


class SymStatus(str, enum.Enum):
    FOUND = "found"
    NONE = "none"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Symmetrization:
    status: SymStatus
    graph: MixedGraph | None = None
    tfmap: TFMap | None = None


def symmetrize(d: MixedGraph, cap: int = ENUMERATION_CAP) -> Symmetrization:
    """A loopless graph TF-isomorphic to ``d``, if one exists.

    A graph's incidence cover carries the involution ``x_0 <-> x_1``. So ``d`` has a
    loopless graph partner exactly when ``idc(d)`` has a side-swapping involution
    that never takes a vertex to a neighbour. Such involutions are searched for on
    the non-isolated part of the cover, whose automorphisms are enumerated up to
    ``cap``; isolated cover vertices are paired off in order.
    """
    n = d.n
    if len(d.arcs) % 2:
        return Symmetrization(SymStatus.NONE)
    cover = idc(d).graph
    sides = side_colouring(n)
    live = sorted({u for u, _ in d.arcs} | {n + v for _, v in d.arcs})
    dead0 = [x for x in range(n) if cover.is_isolated(x)]
    dead1 = [x for x in range(n, 2 * n) if cover.is_isolated(x)]
    if len(dead0) != len(dead1):
        return Symmetrization(SymStatus.NONE)
    core = cover.induced(live)
    core_sides = [sides[x] for x in live]
    swap = find_isomorphism(core, core, respect=(core_sides, [1 - s for s in core_sides]))
    if swap is None:
        return Symmetrization(SymStatus.NONE)
    try:
        group = automorphism_group(core, respect=core_sides, cap=cap)
    except CapExceeded:
        return Symmetrization(SymStatus.UNKNOWN)
    candidates = sorted(compose(swap, p) for p in group.elements)
    for sigma in candidates:
        if core.n and not is_involution(sigma):
            continue
        if any((x, sigma[x]) in core.arcs for x in range(core.n)):
            continue
        full = list(identity(2 * n))
        for i, x in enumerate(live):
            full[x] = live[sigma[i]]
        for a, b in zip(dead0, dead1):
            full[a], full[b] = b, a
        g = _side_quotient(d, full)
        if classify(g) is not GraphKind.GRAPH or g.loops:
            continue
        m = find_tf_isomorphism(d, g)
        if m is None or not is_tf_map(d, g, m.alpha, m.beta):
            raise AssertionError("symmetrization candidate is not TF-isomorphic to the input")
        return Symmetrization(SymStatus.FOUND, g, m)
    return Symmetrization(SymStatus.NONE)


def _side_quotient(d: MixedGraph, sigma: list[int]) -> MixedGraph:
    """Graph on the bases with ``(x, y)`` an arc when ``x_0`` is joined to ``sigma(y_0)``."""
    n = d.n
    arcs = frozenset((x, y) for x in range(n) for y in range(n) if (x, sigma[y] - n) in d.arcs)
    return MixedGraph(n, arcs)
