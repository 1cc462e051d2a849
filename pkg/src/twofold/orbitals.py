"""Two-fold orbitals and their recognition.

A group of pairs ``(alpha, beta)`` acts on ordered pairs by
``(u, v) -> (alpha(u), beta(v))``; the orbit of one pair, read as an arc set, is a
two-fold orbital. Ordinary orbitals are the case ``alpha == beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .covers import is_strongly_bipartite
from .graph import Arc, MixedGraph, is_automorphism
from .iso import ENUMERATION_CAP, CapExceeded, automorphism_generators, orbit_of_pairs
from .perm import Permutation, compose, identity, is_permutation
from .tf import TFMap, is_tf_map, tf_automorphism_generators


@dataclass(frozen=True)
class TFGroupGens:
    degree: int
    generators: tuple[tuple[Permutation, Permutation], ...]

    def __post_init__(self):
        for a, b in self.generators:
            if not (is_permutation(a, self.degree) and is_permutation(b, self.degree)):
                raise ValueError(f"generator pair ({a}, {b}) is not a pair of permutations of degree {self.degree}")

    @classmethod
    def of(cls, degree: int, pairs) -> TFGroupGens:
        return cls(degree, tuple((tuple(a), tuple(b)) for a, b in pairs))

    @classmethod
    def diagonal(cls, degree: int, perms: Sequence[Permutation]) -> TFGroupGens:
        return cls.of(degree, [(p, p) for p in perms])

    def elements(self, cap: int = ENUMERATION_CAP) -> list[TFMap]:
        """Every element of the generated group, sorted."""
        start = TFMap.identity(self.degree)
        seen = {start}
        frontier = [start]
        gens = [TFMap(a, b) for a, b in self.generators]
        while frontier:
            nxt = []
            for e in frontier:
                for s in gens:
                    x = s.compose(e)
                    if x not in seen:
                        seen.add(x)
                        if len(seen) > cap:
                            raise CapExceeded(f"group exceeds the enumeration cap {cap}")
                        nxt.append(x)
            frontier = nxt
        return sorted(seen)


@dataclass(frozen=True)
class OrbitalDigraph:
    graph: MixedGraph
    seed: Arc
    generators: TFGroupGens


def tf_orbital(gens: TFGroupGens, seed: Arc) -> OrbitalDigraph:
    """The orbit of ``seed`` under the group generated by ``gens``, on all ``degree`` vertices."""
    u, v = seed
    n = gens.degree
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"seed {seed} has an endpoint outside 0..{n - 1}")
    arcs = orbit_of_pairs((u, v), gens.generators)
    return OrbitalDigraph(MixedGraph(n, frozenset(arcs)), (u, v), gens)


def _arc_transitive(d: MixedGraph, pairs) -> bool:
    if not d.arcs:
        raise ValueError("the graph has no arcs")
    seed = min(d.arcs)
    return orbit_of_pairs(seed, pairs) == set(d.arcs)


def is_orbital(d: MixedGraph) -> bool:
    """Whether the automorphism group of ``d`` is transitive on its arcs."""
    gens = automorphism_generators(d)
    return _arc_transitive(d, [(p, p) for p in gens])


def is_tf_orbital(d: MixedGraph) -> bool:
    """Whether the TF-automorphisms of ``d`` are transitive on its arcs."""
    gens = tf_automorphism_generators(d)
    return _arc_transitive(d, [(m.alpha, m.beta) for m in gens])


def psi_project(m: TFMap, d: MixedGraph) -> Permutation:
    """Automorphism of the strongly bipartite ``d`` induced by the TF-automorphism ``m``.

    Tails move by ``alpha``, heads by ``beta``, and isolated vertices stay put.
    ``alpha`` permutes the tails among themselves and ``beta`` the heads, so the
    isolated vertices are the only ones left.
    """
    if not is_strongly_bipartite(d):
        raise ValueError("d is not strongly bipartite")
    if not is_tf_map(d, d, m.alpha, m.beta):
        raise ValueError("m is not a TF-automorphism of d")
    f = list(identity(d.n))
    for x in range(d.n):
        if d.out_neighbours[x]:
            f[x] = m.alpha[x]
        elif d.in_neighbours[x]:
            f[x] = m.beta[x]
    f = tuple(f)
    if not is_permutation(f) or not is_automorphism(d, f):
        raise AssertionError("projection is not an automorphism")
    return f


def psi_is_homomorphism(d: MixedGraph, elements: Sequence[TFMap]) -> bool:
    """Check ``psi(a b) == psi(a) psi(b)`` over the full multiplication table of ``elements``."""
    image = {m: psi_project(m, d) for m in elements}
    for a in elements:
        for b in elements:
            ab = a.compose(b)
            lhs = image[ab] if ab in image else psi_project(ab, d)
            if lhs != compose(image[a], image[b]):
                return False
    return True
