"""Command-line entry point.

Graph arguments are ``mg v1`` files, ``-`` for standard input, or ``@name`` for
a built-in fixture (``@petersen``, ``@cycle(6)``). Permutations are printed in
1-indexed cycle notation; vertex ids in files and sets stay 0-indexed.

Exit codes: 0 for any answer (negative answers included), 1 when a witness
fails re-validation, 2 for bad input, 3 when a group exceeds the enumeration cap.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Callable

from . import atrails, covers, fixtures, iso, orbitals, recon, tf
from .graph import MixedGraph, classify, is_isomorphism
from .mgformat import FormatError, format_mg, parse_mg, to_dot
from .perm import format_cycles, parse_cycles

EXIT_OK, EXIT_INVALID_WITNESS, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class WitnessError(RuntimeError):
    pass


def load_graph(source: str, stdin=None) -> MixedGraph:
    if source.startswith("@"):
        return fixtures.fixture(source[1:])
    if source == "-":
        return parse_mg((stdin or sys.stdin).read())
    with open(source, encoding="utf-8") as fh:
        return parse_mg(fh.read())


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise WitnessError(f"{what} failed validation")


def _sides_map(sides) -> dict[int, int]:
    return dict(enumerate(sides))


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


# Handlers write lines through `out` and return the graph for --dot, or None.

def cmd_idc(a, out):
    g = a.load(a.graph)
    cover = covers.idc(g)
    h = cover.graph
    out(format_mg(h, _sides_map(cover.sides), comment=f"incidence double cover; vertex s*{g.n}+u is u_s"))
    return h


def cmd_adc(a, out):
    g = a.load(a.graph)
    cover = covers.adc(g)
    labels = " ".join(f"{i}={lab}" for i, lab in enumerate(cover.labels))
    out(format_mg(cover.graph, _sides_map(cover.sides), comment=f"alternating double cover: {labels}"))
    return cover.graph


def cmd_cdc(a, out):
    g = a.load(a.graph)
    h = covers.cdc(g)
    out(format_mg(h, _sides_map(covers.side_colouring(g.n)), comment="canonical double cover"))
    return h


def cmd_iso(a, out):
    g, h = a.load(a.first), a.load(a.second)
    phi = iso.find_isomorphism(g, h)
    out(f"isomorphic: {_yes(phi is not None)}")
    if phi is not None:
        _require(is_isomorphism(g, h, phi), "isomorphism")
        out(f"phi = {format_cycles(phi)}")
    return None


def cmd_aut(a, out):
    g = a.load(a.graph)
    chain = iso.stabiliser_chain(g)
    out(f"order = {chain.order}")
    for p in chain.generators:
        _require(is_isomorphism(g, g, p), "automorphism")
        out(f"generator {format_cycles(p)}")
    return None


def _print_tfmap(out, m: tf.TFMap) -> None:
    out(f"alpha = {format_cycles(m.alpha)}")
    out(f"beta = {format_cycles(m.beta)}")
    out(f"non-trivial: {_yes(m.non_trivial)}")


def cmd_tfiso(a, out):
    g, h = a.load(a.first), a.load(a.second)
    if a.alpha is not None or a.beta is not None:
        alpha = parse_cycles(a.alpha or "id", g.n)
        beta = parse_cycles(a.beta or "id", g.n)
        if g.n != h.n:
            raise ValueError("graphs have different vertex counts")
        out(f"valid tf-isomorphism: {_yes(tf.is_tf_map(g, h, alpha, beta))}")
        return None
    m = tf.find_tf_isomorphism(g, h)
    out(f"tf-isomorphic: {_yes(m is not None)}")
    if m is not None:
        _require(tf.is_tf_map(g, h, m.alpha, m.beta), "TF-isomorphism")
        _print_tfmap(out, m)
    return None


def cmd_tfaut(a, out):
    g = a.load(a.graph)
    out(f"order = {tf.tf_automorphism_order(g)}")
    out(f"aut order = {iso.automorphism_order(g)}")
    for m in tf.tf_automorphism_generators(g):
        _require(tf.is_tf_map(g, g, m.alpha, m.beta), "TF-automorphism")
        out(f"generator {format_cycles(m.alpha)} ; {format_cycles(m.beta)}")
    if a.list:
        for m in tf.tf_automorphism_group(g, cap=a.cap):
            out(f"element {format_cycles(m.alpha)} ; {format_cycles(m.beta)}")
    return None


def cmd_stable(a, out):
    g = a.load(a.graph)
    rep = tf.is_stable(g)
    out(f"stable: {_yes(rep.stable)}")
    out(f"aut order = {rep.aut_order}")
    out(f"tf-aut order = {rep.tf_aut_order}")
    out(f"cdc aut order = {rep.cdc_aut_order}")
    out(f"index = {rep.index}")
    return None


def cmd_nbhd(a, out):
    graphs = [a.load(x) for x in a.graphs]
    families = [tf.neighbourhood_family(g) for g in graphs]
    for source, fam in zip(a.graphs, families):
        out(f"{source}: " + " ".join(_fmt_set(s) for s in fam))
    if len(graphs) > 1:
        out(f"equal: {_yes(all(f == families[0] for f in families))}")
    return None


def cmd_classes(a, out):
    g = a.load(a.graph)
    part = atrails.arc_classes(g)
    out(f"classes = {part.class_count}, frontier = {part.frontier_count}")
    if a.verbose:
        for i, c in enumerate(part.classes):
            out(f"class {i}: " + " ".join(f"({u},{v})" for u, v in sorted(c)))
        out(f"frontier vertices: {_fmt_set(part.frontier)}")
    return None


def cmd_frontier(a, out):
    g = a.load(a.graph)
    out(_fmt_set(atrails.frontier_vertices(g)))
    return None


def cmd_construct(a, out):
    g = atrails.construct_with_classes(a.m, a.k)
    out(format_mg(g, comment=f"{a.m} arc classes, {a.k} frontier vertices"))
    return g


def cmd_recon(a, out):
    h = a.load(a.graph)
    if a.count:
        total, including_self = recon.count_reconstructions(h, cap=a.cap)
        out(f"reconstructions = {total}")
        out(f"includes input: {_yes(including_self)}")
        return None
    pre = recon.enumerate_cdc_preimages(h, cap=a.cap)
    out(f"preimages = {len(pre)}")
    for i, (g, sigma, flag) in enumerate(zip(pre.graphs, pre.witnesses, pre.loopless_flags)):
        _require(iso.find_isomorphism(covers.cdc(g), h) is not None, "preimage")
        out(f"preimage {i}: loopless = {'true' if flag else 'false'}, kind = {classify(g).value}, "
            f"involution = {format_cycles(sigma)}")
        out(format_mg(g).rstrip("\n"))
    return pre.graphs[0] if pre.graphs else None


def cmd_symmetrize(a, out):
    d = a.load(a.graph)
    res = recon.symmetrize(d, cap=a.cap)
    out(f"symmetrization: {res.status.value}")
    if res.graph is None:
        return None
    _require(tf.is_tf_map(d, res.graph, res.tfmap.alpha, res.tfmap.beta), "TF-isomorphism")
    _print_tfmap(out, res.tfmap)
    out(format_mg(res.graph).rstrip("\n"))
    return res.graph


def read_generator_pairs(text: str, degree: int) -> list[tuple]:
    """One pair per line, ``alpha ; beta`` in 1-indexed cycle notation; one permutation means ``(p, p)``."""
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) == 1:
            parts = parts * 2
        if len(parts) != 2:
            raise ValueError(f"generator line {raw.strip()!r} needs 'alpha ; beta'")
        pairs.append(tuple(parse_cycles(p, degree) for p in parts))
    return pairs


def cmd_orbital(a, out):
    src = contextlib.nullcontext(sys.stdin) if a.gens == "-" else open(a.gens, encoding="utf-8")
    with src as fh:
        pairs = read_generator_pairs(fh.read(), a.degree)
    res = orbitals.tf_orbital(orbitals.TFGroupGens.of(a.degree, pairs), tuple(a.seed))
    arcs = res.graph.arcs
    _require(all((al[u], be[v]) in arcs for al, be in pairs for u, v in arcs), "orbital closure")
    out(format_mg(res.graph, comment=f"two-fold orbital of ({a.seed[0]},{a.seed[1]})"))
    return res.graph


def cmd_is_orbital(a, out):
    out(f"orbital: {_yes(orbitals.is_orbital(a.load(a.graph)))}")
    return None


def cmd_is_tf_orbital(a, out):
    out(f"tf-orbital: {_yes(orbitals.is_tf_orbital(a.load(a.graph)))}")
    return None


def cmd_fixture(a, out):
    if a.name == "list":
        out("\n".join(fixtures.FIXTURE_NAMES))
        return None
    g = fixtures.fixture(a.name)
    out(format_mg(g, comment=a.name))
    return g


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twofold", description="Two-fold isomorphisms of mixed graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dot", metavar="OUT", help="also write the result (or input) graph as DOT")
    common.add_argument("--cap", type=int, default=iso.ENUMERATION_CAP, help="group enumeration cap")

    def add(name: str, fn: Callable, help: str, graphs: tuple[str, ...] = ("graph",)):
        sp = sub.add_parser(name, help=help, parents=[common])
        for g in graphs:
            sp.add_argument(g, help="mg file, '-' for stdin, or @fixture")
        sp.set_defaults(func=fn, graph_args=graphs)
        return sp

    add("idc", cmd_idc, "incidence double cover")
    add("adc", cmd_adc, "alternating double cover")
    add("cdc", cmd_cdc, "canonical double cover")
    add("iso", cmd_iso, "isomorphism test", ("first", "second"))
    add("aut", cmd_aut, "automorphism group order and generators")
    sp = add("tfiso", cmd_tfiso, "TF-isomorphism search", ("first", "second"))
    sp.add_argument("--alpha", help="validate this alpha (cycle notation) instead of searching")
    sp.add_argument("--beta", help="validate this beta (cycle notation) instead of searching")
    sp = add("tfaut", cmd_tfaut, "TF-automorphism group")
    sp.add_argument("--list", action="store_true", help="list every element")
    add("stable", cmd_stable, "stability of a graph")
    sp = sub.add_parser("nbhd", help="neighbourhood families", parents=[common])
    sp.add_argument("graphs", nargs="+")
    sp.set_defaults(func=cmd_nbhd, graph_args=())
    sp = add("classes", cmd_classes, "arc classes and frontier size")
    sp.add_argument("-v", "--verbose", action="store_true")
    add("frontier", cmd_frontier, "frontier vertices")
    sp = sub.add_parser("construct", help="graph with m arc classes and k frontier vertices", parents=[common])
    sp.add_argument("m", type=int)
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_construct, graph_args=())
    sp = add("recon", cmd_recon, "canonical double cover preimages")
    sp.add_argument("--count", action="store_true", help="treat the input as a graph and count its reconstructions")
    add("symmetrize", cmd_symmetrize, "find a loopless graph TF-isomorphic to the input")
    sp = sub.add_parser("orbital", help="two-fold orbital of a seed arc", parents=[common])
    sp.add_argument("--gens", required=True, help="generator file: 'alpha ; beta' per line")
    sp.add_argument("--seed", nargs=2, type=int, required=True, metavar=("U", "V"))
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=cmd_orbital, graph_args=())
    add("is-orbital", cmd_is_orbital, "arc-transitivity of Aut")
    add("is-tf-orbital", cmd_is_tf_orbital, "arc-transitivity of the TF-automorphisms")
    sp = sub.add_parser("fixture", help="print a built-in graph ('list' for names)", parents=[common])
    sp.add_argument("name")
    sp.set_defaults(func=cmd_fixture, graph_args=())
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    lines: list[str] = []
    loaded: list[MixedGraph] = []

    def load(source: str) -> MixedGraph:
        g = load_graph(source)
        loaded.append(g)
        return g

    args.load = load
    try:
        result = args.func(args, lambda s: lines.append(s.rstrip("\n")))
    except iso.CapExceeded as e:
        print(f"error: {e}", file=stderr)
        return EXIT_CAP
    except WitnessError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INVALID_WITNESS
    except (FormatError, ValueError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    stdout.write("\n".join(lines) + "\n")
    if args.dot:
        g = result if result is not None else (loaded[0] if loaded else None)
        if g is not None:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(to_dot(g))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
