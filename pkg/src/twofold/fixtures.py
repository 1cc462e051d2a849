"""Named example graphs."""

from __future__ import annotations

import re
from itertools import combinations

from .graph import MixedGraph, disjoint_union

# Neighbourhood lists, 1-indexed, vertex i adjacent to the i-th set.
PETERSEN_NEIGHBOURHOODS = (
    {2, 5, 6}, {1, 3, 7}, {2, 4, 8}, {3, 5, 9}, {1, 4, 10},
    {1, 8, 9}, {2, 9, 10}, {3, 6, 10}, {4, 6, 7}, {5, 7, 8},
)
LAMBDA_NEIGHBOURHOODS = (
    {4, 6, 7}, {3, 5, 9}, {2, 4, 8}, {1, 3, 7}, {2, 9, 10},
    {1, 8, 9}, {1, 4, 10}, {3, 6, 10}, {2, 5, 6}, {5, 7, 8},
)


def from_neighbourhoods(lists, one_indexed: bool = True) -> MixedGraph:
    shift = 1 if one_indexed else 0
    arcs = {(i, v - shift) for i, nbrs in enumerate(lists) for v in nbrs}
    g = MixedGraph(len(lists), frozenset(arcs))
    missing = [(u, v) for u, v in g.arcs if (v, u) not in g.arcs]
    if missing:
        raise ValueError(f"neighbourhood lists are not symmetric: {missing[:3]}")
    return g


def petersen() -> MixedGraph:
    return from_neighbourhoods(PETERSEN_NEIGHBOURHOODS)


def lambda_cousin() -> MixedGraph:
    return from_neighbourhoods(LAMBDA_NEIGHBOURHOODS)


def desargues() -> MixedGraph:
    """2-subsets versus 3-subsets of a 5-set, joined by inclusion."""
    pairs = list(combinations(range(5), 2))
    triples = list(combinations(range(5), 3))
    edges = [
        (i, 10 + j)
        for i, p in enumerate(pairs)
        for j, t in enumerate(triples)
        if set(p) <= set(t)
    ]
    return MixedGraph.from_edges(20, edges)


def directed_path(n: int) -> MixedGraph:
    _check_size(n)
    return MixedGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> MixedGraph:
    _check_size(n)
    return MixedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> MixedGraph:
    _check_size(n)
    return MixedGraph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> MixedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return MixedGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> MixedGraph:
    _check_size(n)
    return MixedGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty(n: int) -> MixedGraph:
    _check_size(n)
    return MixedGraph(n)


def alternating_cycle(n: int) -> MixedGraph:
    """Cycle on ``n`` (even) vertices whose arcs alternate in direction: even vertices are sources."""
    if n < 2 or n % 2:
        raise ValueError("an alternating cycle needs an even number of vertices >= 2")
    arcs = set()
    for i in range(0, n, 2):
        arcs.add((i, (i + 1) % n))
        arcs.add((i, (i - 1) % n))
    return MixedGraph(n, frozenset(arcs))


def triangle_plus_isolated() -> MixedGraph:
    """K3 together with three isolated vertices."""
    return disjoint_union(complete(3), empty(3))


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")


_FIXED = {
    "petersen": petersen,
    "lambda_cousin": lambda_cousin,
    "desargues": desargues,
    "k3_plus_3k1": triangle_plus_isolated,
}
_SIZED = {
    "directed_path": directed_path,
    "directed_cycle": directed_cycle,
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "empty": empty,
    "alternating_cycle": alternating_cycle,
}
FIXTURE_NAMES = tuple(_FIXED) + tuple(_SIZED)

_CALL = re.compile(r"^\s*([a-z_0-9]+)\s*(?:[(:]\s*(\d+)\s*\)?)?\s*$")


def fixture(name: str, n: int | None = None) -> MixedGraph:
    """Look up a fixture by name; sized ones take ``n`` or the forms ``cycle(6)`` / ``cycle:6``."""
    m = _CALL.match(name)
    if not m:
        raise ValueError(f"unknown fixture {name!r}")
    base, arg = m.group(1), m.group(2)
    if arg is not None:
        if n is not None:
            raise ValueError("size given twice")
        n = int(arg)
    if base in _FIXED:
        if n is not None:
            raise ValueError(f"fixture {base!r} takes no size")
        return _FIXED[base]()
    if base in _SIZED:
        if n is None:
            raise ValueError(f"fixture {base!r} needs a size")
        return _SIZED[base](n)
    raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
