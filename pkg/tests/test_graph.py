import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowpaths import generators as gen
from rainbowpaths.graph import (
    Colouring,
    ColourPartition,
    Graph,
    PathWitness,
    induced_subgraph,
    is_hole,
    is_induced_path,
    is_proper,
    is_rainbow,
    validate_path_witness,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_is_immutable():
    g = gen.cycle(4)
    with pytest.raises(AttributeError):
        g.n = 3


@given(graphs())
def test_graph_invariants(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbours(v):
            assert g.has_edge(u, v)
    assert g.m == len(g.edges())


def test_induced_subgraph_examples():
    h, index = induced_subgraph(gen.cycle(5), [0, 1, 2])
    assert (h.n, h.m, index) == (3, 2, [0, 1, 2])
    h, index = induced_subgraph(gen.complete(4), [])
    assert (h.n, h.m) == (0, 0)
    with pytest.raises(ValueError):
        induced_subgraph(gen.cycle(5), [7])


def test_induced_subgraph_petersen_outer_cycle():
    p = gen.petersen()
    h, index = induced_subgraph(p, range(5))
    # direct adjacency enumeration: exactly the consecutive outer pairs
    expected = {(i, (i + 1) % 5) for i in range(5)}
    got = {(index[u], index[v]) for u, v in h.edges()}
    assert {tuple(sorted(e)) for e in got} == {tuple(sorted(e)) for e in expected}
    assert all(d == 2 for d in h.degrees())


@given(graphs(), st.data())
def test_induced_subgraph_edges(g, data):
    xs = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    h, index = induced_subgraph(g, xs)
    assert h.n == len(xs)
    for i in range(h.n):
        for j in range(h.n):
            if i != j:
                assert h.has_edge(i, j) == g.has_edge(index[i], index[j])


def test_is_proper_examples():
    c3 = gen.cycle(3)
    assert is_proper(c3, Colouring([1, 2, 3]))
    assert not is_proper(c3, Colouring([1, 1, 2]))
    with pytest.raises(ValueError):
        is_proper(c3, Colouring([1, 2]))


def test_middle_colouring_on_shift6_is_proper_by_enumeration():
    g, triples = gen.shift_graph_triples(6)
    c = gen.middle_element_colouring(triples)
    for u, v in g.edges():
        assert triples[u].b != triples[v].b
    assert is_proper(g, c)


def test_is_rainbow_examples():
    assert is_rainbow(Colouring([1, 2, 3]), [0, 1, 2])
    assert not is_rainbow(Colouring([1, 2, 1]), [0, 1, 2])
    assert is_rainbow(Colouring([5]), [0])
    with pytest.raises(ValueError):
        is_rainbow(Colouring([1]), [3])


def test_colouring_rejects_non_positive():
    with pytest.raises(ValueError):
        Colouring([1, 0])


def test_colour_partition_round_trip():
    c = Colouring([7, 3, 7, 9])
    p = ColourPartition.from_colouring(c)
    assert p.blocks == ((0, 2), (1,), (3,))
    assert p.rgs() == (0, 1, 0, 2)
    assert ColourPartition.from_colouring(p.to_colouring()) == p


def test_path_witness_validation():
    g = gen.cycle(5)
    c = Colouring([1, 2, 3, 1, 2])
    validate_path_witness(g, c, PathWitness((0, 1, 2)))
    with pytest.raises(AssertionError):
        validate_path_witness(g, c, PathWitness((0, 1, 2, 3)))  # colours repeat
    with pytest.raises(AssertionError):
        validate_path_witness(gen.complete(3), None, PathWitness((0, 1, 2), rainbow=False))


def test_induced_path_and_hole_predicates():
    assert is_induced_path(gen.path(4), [0, 1, 2, 3])
    assert not is_induced_path(gen.cycle(4), [0, 1, 2, 3])
    assert is_hole(gen.cycle(4), [0, 1, 2, 3])
    assert not is_hole(gen.cycle(3), [0, 1, 2])


@settings(max_examples=50)
@given(graphs(max_n=7))
def test_relabel_preserves_structure(g):
    order = list(reversed(range(g.n)))
    h = g.relabel(order)
    assert h.m == g.m
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                assert h.has_edge(i, j) == g.has_edge(order[i], order[j])
