import random

import pytest

from twofold import fixtures
from twofold.graph import (
    GraphKind,
    MixedGraph,
    bipartition,
    classify,
    components,
    degrees,
    disjoint_union,
    inverse,
    is_automorphism,
    is_bipartite,
    is_connected,
    is_sink,
    is_source,
    neighbourhood,
)
from twofold.unionfind import UnionFind

from oracles import random_mixed


def test_rejects_out_of_range_arcs():
    with pytest.raises(ValueError):
        MixedGraph(2, frozenset({(0, 2)}))


def test_classify():
    assert classify(fixtures.petersen()) is GraphKind.GRAPH
    assert classify(fixtures.directed_cycle(3)) is GraphKind.DIGRAPH
    assert classify(MixedGraph(2, frozenset({(0, 0)}))) is GraphKind.PROPERLY_MIXED
    assert classify(MixedGraph(3, frozenset({(0, 1), (1, 0), (1, 2)}))) is GraphKind.PROPERLY_MIXED
    assert classify(fixtures.empty(3)) is GraphKind.GRAPH


def test_degrees_and_roles():
    d = fixtures.directed_path(3)
    assert degrees(d, 0) == (0, 1)
    assert degrees(d, 1) == (1, 1)
    assert is_source(d, 0) and is_sink(d, 2) and not is_source(d, 1)
    with pytest.raises(ValueError):
        degrees(d, 5)


def test_fixture_shapes():
    p = fixtures.petersen()
    assert p.n == 10 and len(p.arcs) == 30
    assert all(len(neighbourhood(p, v)) == 3 for v in range(10))
    lam = fixtures.lambda_cousin()
    assert lam.n == 10 and len(lam.arcs) == 30 and classify(lam) is GraphKind.GRAPH
    d = fixtures.desargues()
    assert d.n == 20 and len(d.arcs) == 60 and is_bipartite(d) and is_connected(d)
    alt = fixtures.alternating_cycle(6)
    assert classify(alt) is GraphKind.DIGRAPH and len(alt.arcs) == 6
    assert all(is_source(alt, v) for v in (0, 2, 4)) and all(is_sink(alt, v) for v in (1, 3, 5))
    assert fixtures.fixture("cycle(5)") == fixtures.cycle(5) == fixtures.fixture("cycle:5")
    with pytest.raises(ValueError):
        fixtures.fixture("nonsense")


def test_bipartition_and_components():
    assert bipartition(fixtures.cycle(5)) is None
    assert bipartition(fixtures.cycle(6)) == [0, 1, 0, 1, 0, 1]
    g = disjoint_union(fixtures.complete(3), fixtures.empty(2))
    assert components(g) == [[0, 1, 2], [3], [4]]
    assert not is_connected(g)
    assert bipartition(MixedGraph(1, frozenset({(0, 0)}))) is None


def test_inverse_reverses_arcs():
    rng = random.Random(3)
    for _ in range(50):
        g = random_mixed(rng, rng.randint(1, 6))
        assert inverse(inverse(g)) == g
        assert all((v, u) in inverse(g).arcs for u, v in g.arcs)


def test_relabel_and_induced():
    g = fixtures.directed_path(3)
    assert g.relabel((2, 1, 0)).arcs == frozenset({(2, 1), (1, 0)})
    assert is_automorphism(fixtures.cycle(4), (1, 2, 3, 0))
    assert g.induced([1, 2]).arcs == frozenset({(0, 1)})


def test_union_find_groups():
    uf = UnionFind(range(6))
    uf.union(4, 1)
    uf.union(5, 3)
    uf.union(3, 4)
    assert uf.groups() == [[0], [1, 3, 4, 5], [2]]
