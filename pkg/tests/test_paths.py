import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import atlas, brute_holes, brute_rainbow_path_by_orderings, random_proper_colouring
from rainbowpaths import generators as gen
from rainbowpaths.graph import BudgetExhausted, Colouring, Graph, is_hole, validate_path_witness
from rainbowpaths.paths import (
    find_hole,
    find_hole_with_rainbow_run,
    find_induced_path,
    find_locally_rainbow_hole,
    find_rainbow_hole,
    find_rainbow_induced_path,
    iter_holes,
    rainbow_run_start,
)
from test_graph import graphs


def canon_hole(h):
    k = len(h)
    rots = [tuple(h[(i + j) % k] for j in range(k)) for i in range(k)]
    rots += [r[::-1] for r in rots]
    return min(rots)


def test_c5_rainbow_p3():
    w = find_rainbow_induced_path(gen.cycle(5), Colouring([1, 2, 3, 1, 2]), 3)
    assert w.vertices == (0, 1, 2)


def test_complete_graph_has_no_induced_p3():
    assert find_rainbow_induced_path(gen.complete(4), Colouring([1, 2, 3, 4]), 3) is None
    assert find_induced_path(gen.complete(4), 3) is None


def test_single_vertex_is_a_path():
    assert find_rainbow_induced_path(Graph.empty(1), Colouring([4]), 1).vertices == (0,)


def test_bad_arguments():
    with pytest.raises(ValueError):
        find_rainbow_induced_path(gen.cycle(5), Colouring([1, 2, 3, 1, 2]), 0)
    with pytest.raises(ValueError):
        find_rainbow_induced_path(gen.cycle(5), Colouring([1, 2]), 2)
    with pytest.raises(ValueError):
        find_hole_with_rainbow_run(gen.cycle(5), Colouring([1, 2, 3, 1, 2]), 1)


def test_budget_is_distinct_from_absent():
    g = gen.complete(9)
    with pytest.raises(BudgetExhausted):
        find_rainbow_induced_path(g, Colouring(range(1, 10)), 3, budget=5)
    assert find_rainbow_induced_path(g, Colouring(range(1, 10)), 3) is None


def test_holes_in_c4():
    c4 = gen.cycle(4)
    assert find_rainbow_hole(c4, Colouring([1, 2, 3, 4])).vertices == (0, 1, 2, 3)
    assert find_rainbow_hole(c4, Colouring([1, 2, 1, 2])) is None
    assert find_hole(gen.cycle(3)) is None


def test_rainbow_run_on_c5():
    hole, start = find_hole_with_rainbow_run(gen.cycle(5), Colouring([1, 2, 3, 4, 5]), 3)
    assert set(hole.vertices) == set(range(5)) and start == 0
    assert rainbow_run_start(Colouring([1, 2, 1, 2, 3]), (0, 1, 2, 3, 4), 3) == 2
    assert rainbow_run_start(Colouring([1, 2, 1, 2]), (0, 1, 2, 3), 3) is None


def test_locally_rainbow_hole_on_c6():
    g = gen.cycle(6)
    assert find_locally_rainbow_hole(g, Colouring([1, 2, 3, 1, 2, 3]), 3) is not None
    assert find_locally_rainbow_hole(g, Colouring([1, 2, 1, 2, 3, 4]), 3) is None


@pytest.mark.parametrize("seed", range(40))
def test_holes_match_brute_force(seed):
    rng = random.Random(seed)
    g = gen.random_graph(rng.randint(4, 8), rng.uniform(0.2, 0.6), seed)
    got = sorted(canon_hole(h) for h in iter_holes(g))
    want = sorted(canon_hole(h) for h in brute_holes(g))
    assert got == want
    for h in got:
        assert is_hole(g, h)
    c = random_proper_colouring(g, rng)
    for s in (2, 3, 4):
        runs = [h for h in want if rainbow_run_start(c, h, s) is not None]
        found = find_hole_with_rainbow_run(g, c, s)
        assert (found is not None) == bool(runs)
        if found:
            hole, start = found
            k = len(hole.vertices)
            assert len({c[hole.vertices[(start + j) % k]] for j in range(s)}) == s
    rainbow_holes = [h for h in want if len({c[v] for v in h}) == len(h)]
    assert (find_rainbow_hole(g, c) is not None) == bool(rainbow_holes)


@pytest.mark.parametrize("g", atlas()[::7])
def test_rainbow_path_matches_orderings_oracle(g):
    rng = random.Random(g.digest())
    for _ in range(4):
        c = random_proper_colouring(g, rng)
        for s in range(1, g.n + 1):
            w = find_rainbow_induced_path(g, c, s)
            assert (w is not None) == brute_rainbow_path_by_orderings(g, c, s)
            if w is not None:
                validate_path_witness(g, c, w)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.integers(1, 5), st.randoms(use_true_random=False))
def test_witnesses_always_revalidate(g, s, rnd):
    if g.n == 0:
        return
    c = random_proper_colouring(g, random.Random(rnd.random()))
    w = find_rainbow_induced_path(g, c, s)
    if w is not None:
        assert len(w.vertices) == s
        validate_path_witness(g, c, w)
    p = find_induced_path(g, s)
    if p is not None:
        validate_path_witness(g, None, p)


def test_lowest_vertex_tie_break():
    # both (0,1,2) and (1,2,3) are rainbow P3s in P4; the first start wins
    w = find_rainbow_induced_path(gen.path(4), Colouring([1, 2, 3, 4]), 3)
    assert w.vertices == (0, 1, 2)
