"""Two-fold isomorphisms: pairs of bijections ``(alpha, beta)`` with
``(u, v)`` an arc of ``g`` iff ``(alpha(u), beta(v))`` is an arc of ``h``.

They are found as side-preserving isomorphisms of incidence double covers:
a cover isomorphism ``phi`` splits into ``alpha`` on side 0 and ``beta`` on side 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .covers import cdc, idc, side_colouring
from .graph import GraphKind, MixedGraph, classify, neighbourhood
from .iso import (
    ENUMERATION_CAP,
    automorphism_generators,
    automorphism_group,
    automorphism_order,
    find_isomorphism,
)
from .perm import Permutation, compose, identity, inverse, is_permutation


@dataclass(frozen=True, order=True)
class TFMap:
    alpha: Permutation
    beta: Permutation

    @property
    def non_trivial(self) -> bool:
        return self.alpha != self.beta

    def compose(self, other: TFMap) -> TFMap:
        """Componentwise product; ``other`` acts first."""
        return TFMap(compose(self.alpha, other.alpha), compose(self.beta, other.beta))

    def inverse(self) -> TFMap:
        return TFMap(inverse(self.alpha), inverse(self.beta))

    @classmethod
    def identity(cls, n: int) -> TFMap:
        return cls(identity(n), identity(n))

    def image(self, arc: tuple[int, int]) -> tuple[int, int]:
        return self.alpha[arc[0]], self.beta[arc[1]]


@dataclass(frozen=True)
class TFGroup:
    """All TF-automorphisms of a graph, sorted by ``(alpha, beta)``."""

    degree: int
    elements: tuple[TFMap, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def non_trivial(self) -> list[TFMap]:
        return [m for m in self.elements if m.non_trivial]


def is_tf_map(g: MixedGraph, h: MixedGraph, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    if not (len(alpha) == len(beta) == g.n == h.n):
        raise ValueError("alpha, beta, g and h must all have the same size")
    if not (is_permutation(alpha) and is_permutation(beta)):
        raise ValueError("alpha and beta must be bijections")
    if len(g.arcs) != len(h.arcs):
        return False
    return all((alpha[u], beta[v]) in h.arcs for u, v in g.arcs)


def _split(phi: Permutation, n: int) -> TFMap:
    return TFMap(tuple(phi[:n]), tuple(x - n for x in phi[n:]))


def find_tf_isomorphism(g: MixedGraph, h: MixedGraph) -> TFMap | None:
    if g.n != h.n:
        return None
    sides = side_colouring(g.n)
    phi = find_isomorphism(idc(g).graph, idc(h).graph, respect=(sides, sides))
    if phi is None:
        return None
    m = _split(phi, g.n)
    if not is_tf_map(g, h, m.alpha, m.beta):
        raise AssertionError("cover isomorphism did not split into a TF-isomorphism")
    return m


def tf_isomorphic_to_inverse(g: MixedGraph, h: MixedGraph) -> bool:
    """True when the covers are isomorphic by a map exchanging sides.

    Such a map is a TF-isomorphism from ``g`` onto the inverse of ``h``, which is
    a different thing from a TF-isomorphism onto ``h``.
    """
    if g.n != h.n:
        return False
    sides = side_colouring(g.n)
    flipped = [1 - s for s in sides]
    return find_isomorphism(idc(g).graph, idc(h).graph, respect=(sides, flipped)) is not None


def tf_automorphism_group(g: MixedGraph, cap: int = ENUMERATION_CAP) -> TFGroup:
    grp = automorphism_group(idc(g).graph, respect=side_colouring(g.n), cap=cap)
    return TFGroup(g.n, tuple(sorted(_split(phi, g.n) for phi in grp.elements)))


def tf_automorphism_order(g: MixedGraph) -> int:
    return automorphism_order(idc(g).graph, respect=side_colouring(g.n))


def tf_automorphism_generators(g: MixedGraph) -> list[TFMap]:
    return [_split(phi, g.n) for phi in automorphism_generators(idc(g).graph, respect=side_colouring(g.n))]


def neighbourhood_family(g: MixedGraph) -> tuple[frozenset[int], ...]:
    """The multiset of vertex neighbourhoods, as a sorted tuple."""
    if classify(g) is not GraphKind.GRAPH:
        raise ValueError("neighbourhood families are defined for graphs")
    return tuple(sorted((neighbourhood(g, v) for v in range(g.n)), key=sorted))


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    aut_order: int
    tf_aut_order: int
    cdc_aut_order: int

    @property
    def index(self) -> int:
        """Index of the diagonal copy of Aut(g) in Aut(cdc(g))."""
        return self.cdc_aut_order // self.aut_order

    @property
    def order_law_holds(self) -> bool:
        return self.cdc_aut_order == 2 * self.tf_aut_order


def is_stable(g: MixedGraph) -> StabilityReport:
    """Stable means every TF-automorphism is diagonal, i.e. the two groups have equal order."""
    if classify(g) is not GraphKind.GRAPH:
        raise ValueError("stability is defined here for graphs")
    aut = automorphism_order(g)
    tf = tf_automorphism_order(g)
    cover = automorphism_order(cdc(g))
    return StabilityReport(tf == aut, aut, tf, cover)
