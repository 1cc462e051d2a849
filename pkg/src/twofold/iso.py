"""Backtracking isomorphism search and automorphism groups of small mixed graphs.

The search is individualisation-refinement: both graphs are refined jointly by
iterated in/out-neighbour colour counts, then the first non-singleton cell (by
colour) is split by fixing its lowest-index vertex in ``g`` and trying every
candidate in ``h`` in ascending order. The first witness found is returned, so
results are reproducible.

Automorphism groups are built as a stabiliser chain: for each base point every
candidate image is either reached from the transversal already known or
searched for directly. The order is the product of the transversal sizes and
the elements are the products of one transversal element per level.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Hashable, Iterator, Sequence

from .graph import MixedGraph
from .perm import Permutation, compose, identity, inverse, is_identity

ENUMERATION_CAP = 10**6


class CapExceeded(RuntimeError):
    """A group is larger than the enumeration cap."""


class _Prepared:
    __slots__ = ("n", "out", "inn", "loop", "arcs")

    def __init__(self, g: MixedGraph):
        self.n = g.n
        self.out = [tuple(s) for s in g.out_neighbours]
        self.inn = [tuple(s) for s in g.in_neighbours]
        self.loop = [v in g.out_neighbours[v] for v in range(g.n)]
        self.arcs = g.arcs


def _signatures(a: _Prepared, c: Sequence[int]) -> list[tuple]:
    return [
        (
            c[v],
            a.loop[v],
            tuple(sorted(c[w] for w in a.out[v])),
            tuple(sorted(c[w] for w in a.inn[v])),
        )
        for v in range(a.n)
    ]


def _refine(a: _Prepared, ca: list[int], b: _Prepared, cb: list[int]):
    """Jointly refine two colourings to equitable ones; None if the colour histograms diverge."""
    same = a is b and ca == cb
    k = len(set(ca).union(cb))
    while True:
        sa = _signatures(a, ca)
        sb = sa if same else _signatures(b, cb)
        keys = sorted(set(sa).union(sb))
        index = {s: i for i, s in enumerate(keys)}
        na = [index[s] for s in sa]
        nb = na if same else [index[s] for s in sb]
        if not same and Counter(na) != Counter(nb):
            return None
        if len(keys) == k:
            return na, nb
        ca, cb, k = na, nb, len(keys)


def _first_split(c: Sequence[int]) -> int | None:
    counts = Counter(c)
    for colour in sorted(counts):
        if counts[colour] > 1:
            return colour
    return None


def _search(a: _Prepared, b: _Prepared, ca: list[int], cb: list[int]) -> Iterator[Permutation]:
    refined = _refine(a, ca, b, cb)
    if refined is None:
        return
    ca, cb = refined
    target = _first_split(ca)
    if target is None:
        where = {colour: w for w, colour in enumerate(cb)}
        phi = tuple(where[colour] for colour in ca)
        if all((phi[u], phi[v]) in b.arcs for u, v in a.arcs):
            yield phi
        return
    fresh = max(ca) + 1
    v = ca.index(target)
    for w in range(b.n):
        if cb[w] != target:
            continue
        ca2 = list(ca)
        cb2 = list(cb)
        ca2[v] = fresh
        cb2[w] = fresh
        yield from _search(a, b, ca2, cb2)


def _normalise_pair(cg: Sequence[Hashable], ch: Sequence[Hashable]) -> tuple[list[int], list[int]]:
    values = sorted(set(cg).union(ch), key=repr)
    index = {x: i for i, x in enumerate(values)}
    return [index[x] for x in cg], [index[x] for x in ch]


def _check_colouring(colours, n: int, what: str) -> None:
    if len(colours) != n:
        raise ValueError(f"{what} colouring has {len(colours)} entries for {n} vertices")


def find_isomorphism(
    g: MixedGraph,
    h: MixedGraph,
    respect: tuple[Sequence[Hashable], Sequence[Hashable]] | None = None,
) -> Permutation | None:
    """A vertex bijection mapping the arcs of ``g`` exactly onto those of ``h``.

    ``respect`` is a pair of colourings; when given, every vertex must map to a
    vertex of the same colour. Returns None when no such bijection exists.
    """
    if respect is not None:
        _check_colouring(respect[0], g.n, "first")
        _check_colouring(respect[1], h.n, "second")
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return None
    if respect is None:
        ca, cb = [0] * g.n, [0] * h.n
    else:
        ca, cb = _normalise_pair(respect[0], respect[1])
    return next(_search(_Prepared(g), _Prepared(h), ca, cb), None)


def are_isomorphic(g: MixedGraph, h: MixedGraph, respect=None) -> bool:
    return find_isomorphism(g, h, respect) is not None


@dataclass(frozen=True)
class StabiliserChain:
    degree: int
    base: tuple[int, ...]
    transversals: tuple[dict[int, Permutation], ...]
    generators: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def elements(self) -> list[Permutation]:
        current = [identity(self.degree)]
        for trans in reversed(self.transversals):
            current = [compose(t, e) for t in trans.values() for e in current]
        return current


def _close_orbit(trans: dict[int, Permutation], gens: list[Permutation]) -> None:
    queue = list(trans)
    while queue:
        x = queue.pop()
        for s in gens:
            y = s[x]
            if y not in trans:
                trans[y] = compose(s, trans[x])
                queue.append(y)


def stabiliser_chain(g: MixedGraph, respect: Sequence[Hashable] | None = None) -> StabiliserChain:
    """Base, transversals and generators of the colour-preserving automorphism group."""
    n = g.n
    if respect is not None:
        _check_colouring(respect, n, "vertex")
        cur, _ = _normalise_pair(respect, respect)
    else:
        cur = [0] * n
    a = _Prepared(g)
    cur = _refine(a, cur, a, cur)[0]
    base: list[int] = []
    transversals: list[dict[int, Permutation]] = []
    generators: list[Permutation] = []
    while (target := _first_split(cur)) is not None:
        fresh = max(cur) + 1
        b = cur.index(target)
        fixed_b = list(cur)
        fixed_b[b] = fresh
        trans = {b: identity(n)}
        gens: list[Permutation] = []
        for c in range(n):
            if cur[c] != target or c in trans:
                continue
            fixed_c = list(cur)
            fixed_c[c] = fresh
            phi = next(_search(a, a, fixed_b, fixed_c), None)
            if phi is not None:
                gens.append(phi)
                _close_orbit(trans, gens)
        base.append(b)
        transversals.append(dict(sorted(trans.items())))
        generators.extend(gens)
        cur = _refine(a, fixed_b, a, fixed_b)[0]
    return StabiliserChain(n, tuple(base), tuple(transversals), tuple(generators))


def automorphism_order(g: MixedGraph, respect: Sequence[Hashable] | None = None) -> int:
    """Exact group order; needs no enumeration, so no cap applies."""
    return stabiliser_chain(g, respect).order


def automorphism_generators(g: MixedGraph, respect: Sequence[Hashable] | None = None) -> list[Permutation]:
    return list(stabiliser_chain(g, respect).generators)


@dataclass(frozen=True)
class PermGroup:
    """A fully enumerated permutation group; ``elements`` is sorted."""

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    @cached_property
    def _members(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @classmethod
    def from_generators(cls, degree: int, generators: Sequence[Permutation], cap: int = ENUMERATION_CAP) -> PermGroup:
        """Closure of the generators under composition."""
        gens = [tuple(s) for s in generators if not is_identity(s)]
        elements = {identity(degree)}
        frontier = [identity(degree)]
        while frontier:
            nxt = []
            for e in frontier:
                for s in gens:
                    x = compose(s, e)
                    if x not in elements:
                        elements.add(x)
                        if len(elements) > cap:
                            raise CapExceeded(f"group exceeds the enumeration cap {cap}")
                        nxt.append(x)
            frontier = nxt
        return cls(degree, tuple(sorted(elements)), tuple(gens))

    def is_closed(self) -> bool:
        members = self._members
        return identity(self.degree) in members and all(
            compose(x, y) in members for x in self.elements for y in self.elements
        )


def automorphism_group(
    g: MixedGraph, respect: Sequence[Hashable] | None = None, cap: int = ENUMERATION_CAP
) -> PermGroup:
    chain = stabiliser_chain(g, respect)
    if chain.order > cap:
        raise CapExceeded(f"automorphism group of order {chain.order} exceeds the cap {cap}")
    return PermGroup(g.n, tuple(sorted(chain.elements())), chain.generators)


def class_swapping_involutions(group: PermGroup, classes: Sequence[int]) -> list[Permutation]:
    """Involutions of ``group`` that exchange the two colour classes."""
    if len(classes) != group.degree or set(classes) != {0, 1}:
        raise ValueError("classes must be a 0/1 colouring using both colours")
    out = []
    for p in group.elements:
        swapped = [classes[p[i]] != classes[i] for i in range(group.degree)]
        if any(swapped) and not all(swapped):
            raise ValueError("a group element neither preserves nor swaps the bipartition")
        if all(swapped) and all(p[p[i]] == i for i in range(group.degree)):
            out.append(p)
    return out


@dataclass(frozen=True)
class ConjugacyClassSet:
    classes: tuple[tuple[Permutation, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def conjugacy_classes(group: PermGroup, subset: Sequence[Permutation]) -> ConjugacyClassSet:
    """Partition ``subset`` into classes under conjugation by ``group``.

    Classes come out ordered by their least element; each class is sorted.
    """
    remaining = {tuple(p) for p in subset}
    inverses = [(x, inverse(x)) for x in group.elements]
    classes = []
    for p in sorted(remaining):
        if p not in remaining:
            continue
        cls = {compose(compose(x, p), xi) for x, xi in inverses}
        if not cls <= remaining:
            raise ValueError("subset is not closed under conjugation")
        remaining -= cls
        classes.append(tuple(sorted(cls)))
    return ConjugacyClassSet(tuple(classes))


def orbit_of_pairs(
    seed: tuple[int, int], generators: Sequence[tuple[Permutation, Permutation]]
) -> set[tuple[int, int]]:
    """Orbit of an ordered pair under ``(x, y) -> (a[x], b[y])`` for generator pairs ``(a, b)``."""
    orbit = {seed}
    queue = [seed]
    while queue:
        x, y = queue.pop()
        for a, b in generators:
            img = (a[x], b[y])
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return orbit

