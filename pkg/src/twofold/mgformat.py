"""The ``mg v1`` text format and DOT export.

::

    # mg v1
    n 3
    e 0 1        # both arcs (0,1) and (1,0)
    a 1 2        # a single arc
    side 0 0     # cover files only: vertex 0 lies on side 0

Vertex ids are 0-indexed.
"""

from __future__ import annotations

from typing import Mapping, TextIO

from .graph import MixedGraph


class FormatError(ValueError):
    pass


def format_mg(g: MixedGraph, sides: Mapping[int, int] | None = None, comment: str | None = None) -> str:
    lines = ["# mg v1"]
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    for u, v in g.sorted_arcs():
        if u != v and (v, u) in g.arcs:
            if u < v:
                lines.append(f"e {u} {v}")
        else:
            lines.append(f"a {u} {v}")
    if sides:
        lines.extend(f"side {v} {sides[v]}" for v in sorted(sides))
    return "\n".join(lines) + "\n"


def parse_mg_with_sides(text: str) -> tuple[MixedGraph, dict[int, int]]:
    n = None
    arcs: set[tuple[int, int]] = set()
    sides: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            args = [int(t) for t in tok[1:]]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {raw.strip()!r}") from None
        if n is None:
            if tok[0] != "n" or len(args) != 1 or args[0] < 0:
                raise FormatError(f"line {lineno}: expected 'n <vertex_count>' first")
            n = args[0]
            continue
        kind = tok[0]
        if kind in ("a", "e", "side"):
            if len(args) != 2:
                raise FormatError(f"line {lineno}: {kind!r} takes two integers")
            u, v = args
            if not 0 <= u < n or (kind != "side" and not 0 <= v < n):
                raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
            if kind == "a":
                arcs.add((u, v))
            elif kind == "e":
                arcs.add((u, v))
                arcs.add((v, u))
            else:
                if v not in (0, 1):
                    raise FormatError(f"line {lineno}: side must be 0 or 1")
                sides[u] = v
        elif kind == "n":
            raise FormatError(f"line {lineno}: duplicate 'n' line")
        else:
            raise FormatError(f"line {lineno}: unknown record {kind!r}")
    if n is None:
        raise FormatError("missing 'n <vertex_count>' line")
    return MixedGraph(n, frozenset(arcs)), sides


def parse_mg(text: str) -> MixedGraph:
    return parse_mg_with_sides(text)[0]


def read_mg(fh: TextIO) -> MixedGraph:
    return parse_mg(fh.read())


def to_dot(g: MixedGraph, name: str = "G", labels: Mapping[int, str] | None = None) -> str:
    """Arcs become directed edges; self-paired pairs collapse to one undirected edge."""
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        label = labels[v] if labels and v in labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.sorted_arcs():
        if u != v and (v, u) in g.arcs:
            if u < v:
                lines.append(f"  {u} -> {v} [dir=none];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
