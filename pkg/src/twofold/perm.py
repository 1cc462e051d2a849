"""Permutations as tuples of images on ``range(n)``.

Composition follows function notation: ``compose(p, q)`` applies ``q`` first.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def is_permutation(images: Sequence[int], n: int | None = None) -> bool:
    if n is not None and len(images) != n:
        return False
    return sorted(images) == list(range(len(images)))


def check_permutation(images: Sequence[int], n: int | None = None) -> Permutation:
    """Return ``images`` as a tuple, raising ValueError if it is not a bijection."""
    p = tuple(int(x) for x in images)
    if not is_permutation(p, n):
        raise ValueError(f"not a permutation of size {n if n is not None else len(p)}: {p}")
    return p


def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Permutation) -> bool:
    return all(i == x for i, x in enumerate(p))


def is_involution(p: Permutation) -> bool:
    """True for elements of order exactly two."""
    return not is_identity(p) and all(p[p[i]] == i for i in range(len(p)))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest point, ordered by that point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Permutation, one_indexed: bool = True) -> str:
    cs = cycles(p)
    if not cs:
        return "id"
    shift = 1 if one_indexed else 0
    return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cs)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int, one_indexed: bool = True) -> Permutation:
    """Parse disjoint-cycle notation such as ``(1 9)(2 4)(5 7)``; ``id`` and ``()`` mean identity."""
    text = text.strip()
    images = list(range(n))
    if text in ("", "id", "()"):
        return tuple(images)
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    shift = 1 if one_indexed else 0
    moved: set[int] = set()
    for body in _CYCLE.findall(text):
        pts = [int(tok) - shift for tok in body.replace(",", " ").split()]
        for x in pts:
            if not 0 <= x < n:
                raise ValueError(f"point {x + shift} out of range for degree {n}")
            if x in moved:
                raise ValueError(f"cycles are not disjoint at {x + shift}")
            moved.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def from_mapping(mapping: dict[int, int], n: int) -> Permutation:
    return check_permutation([mapping.get(i, i) for i in range(n)], n)

