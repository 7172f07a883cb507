import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instances import R_TABLE, cluster_grading_instance, random_grading_instance
from oracles import (
    atlas,
    brute_a_set,
    brute_b_set,
    brute_biclique_exists,
    induced_path_sets,
    random_proper_colouring,
    rainbow,
)
from rainbowpaths import generators as gen
from rainbowpaths.graph import BudgetExhausted, Colouring, PathWitness, validate_path_witness
from rainbowpaths.invariants import chromatic_number
from rainbowpaths.paths import find_rainbow_induced_path
from rainbowpaths.machinery import (
    BicliqueWitness,
    CyclicOrientation,
    Grading,
    Orientation,
    compute_a_set,
    compute_b_set,
    constants_table,
    extension_candidates,
    grading_from_sets,
    grading_lemma_constructive,
    grading_lemma_search,
    grs_dichotomy,
    longest_directed_path,
    orient_by_colour,
    proof_guided_search,
    validate_biclique,
    validate_grading_witness,
)
from test_graph import graphs

P3 = gen.path(3)


# orientation

def test_orient_examples():
    assert set(orient_by_colour(P3, Colouring([1, 2, 1])).arcs) == {(0, 1), (2, 1)}
    o = orient_by_colour(gen.cycle(3), Colouring([1, 2, 3]))
    assert set(o.arcs) == {(0, 1), (1, 2), (0, 2)} and o.is_acyclic()
    with pytest.raises(ValueError):
        orient_by_colour(P3, Colouring([1, 1, 2]))


def test_longest_path_examples():
    assert longest_directed_path(orient_by_colour(P3, Colouring([1, 2, 3]))).vertices == (0, 1, 2)
    assert len(longest_directed_path(orient_by_colour(P3, Colouring([1, 2, 1]))).vertices) == 2


def test_cyclic_orientation_rejected():
    o = Orientation(gen.cycle(3), ((0, 1), (1, 2), (2, 0)))
    assert not o.is_acyclic()
    with pytest.raises(CyclicOrientation):
        longest_directed_path(o)


def test_petersen_orientations_acyclic():
    rng = random.Random(3)
    p = gen.petersen()
    for _ in range(30):
        assert orient_by_colour(p, random_proper_colouring(p, rng)).is_acyclic()


@pytest.mark.parametrize("seed", range(100))
def test_gallai_roy_on_greedy_colourings(seed):
    rng = random.Random(seed)
    g = gen.random_graph(rng.randint(1, 12), rng.uniform(0.1, 0.7), seed)
    order = list(range(g.n))
    rng.shuffle(order)
    cols = [0] * g.n
    for v in order:
        banned = {cols[u] for u in g.neighbours(v)}
        cols[v] = min(k for k in range(1, g.n + 2) if k not in banned)
    c = Colouring(cols)
    path = longest_directed_path(orient_by_colour(g, c)).vertices
    assert len(path) >= chromatic_number(g)[0]
    assert all(c[a] < c[b] and g.has_edge(a, b) for a, b in zip(path, path[1:]))


# GRS dichotomy

def test_grs_examples():
    w = grs_dichotomy(gen.complete(6), 3)
    assert isinstance(w, BicliqueWitness)
    validate_biclique(gen.complete(6), w)
    p = grs_dichotomy(gen.path(10), 3)
    assert isinstance(p, PathWitness) and len(p.vertices) == 3
    validate_path_witness(gen.path(10), None, p)
    assert grs_dichotomy(gen.complete(5), 3) is None
    with pytest.raises(BudgetExhausted):
        grs_dichotomy(gen.complete(12), 6, budget=10)


def _ham(g):
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in permutations(range(g.n)))


@pytest.mark.parametrize("g", [h for h in atlas() if h.n <= 6][::3])
def test_grs_on_hamiltonian_small_graphs(g):
    if not _ham(g):
        return
    w = grs_dichotomy(g, 3)
    has_path = any(len(p) >= 3 for p in induced_path_sets(g))
    if has_path:
        assert isinstance(w, PathWitness)
    elif brute_biclique_exists(g, 3):
        assert isinstance(w, BicliqueWitness)
    else:
        assert w is None


# constants

def test_constants_examples():
    t = constants_table(3, 3, 2)
    assert t.w[1:] == (8, 2, 0) and t.c == 27
    for r in (1, 4, 9):
        t = constants_table(1, r, 5)
        assert t.w[1] == 0 and t.c == r
    t = constants_table(5, 2, 1)
    assert t.w[1:] == (15, 7, 3, 1, 0) and t.c == 32


def test_constants_overflow_and_errors():
    with pytest.raises(OverflowError):
        constants_table(20, 100, 100)
    with pytest.raises(ValueError):
        constants_table(0, 1, 1)


@given(st.integers(1, 8), st.integers(1, 6), st.integers(0, 6))
def test_constants_recursion(s, r, cp):
    t = constants_table(s, r, cp)
    assert t.w[s] == 0
    for j in range(s):
        assert t.w[j] == t.w[j + 1] * r + cp
    assert t.c == (t.w[1] + 1) * r


# A(z), candidates, B(Q)

def test_a_set_examples():
    assert compute_a_set(P3, Colouring([1, 2, 1]), 0) == {0, 1}
    assert compute_a_set(P3, Colouring([1, 2, 3]), 0) == {0, 1, 2}
    with pytest.raises(ValueError):
        compute_a_set(P3, Colouring([1, 1, 2]), 0)


def test_candidates_examples():
    star = gen.star(4)
    c = Colouring([1, 2, 3, 1, 4])
    assert extension_candidates(star, c, [0]) == {1, 2, 4}
    assert extension_candidates(P3, Colouring([1, 2, 1]), [0, 1]) == frozenset()
    with pytest.raises(ValueError):
        extension_candidates(P3, Colouring([1, 2, 3]), [0, 2])


def test_b_set_examples():
    assert compute_b_set(P3, Colouring([1, 2, 3]), [0]) == {1, 2}
    assert compute_b_set(P3, Colouring([1, 2, 3]), PathWitness((0, 1, 2))) == frozenset()


def _all_rainbow_prefixes(g, c):
    for p in induced_path_sets(g):
        if rainbow(c, p):
            yield p
            if len(p) > 1:
                yield p[::-1]


@pytest.mark.parametrize("g", atlas()[::11])
def test_sets_match_oracles_and_decomposition(g):
    rng = random.Random(g.digest())
    for _ in range(3):
        c = random_proper_colouring(g, rng)
        for z in range(g.n):
            assert compute_a_set(g, c, z) == brute_a_set(g, c, z)
        for q in _all_rainbow_prefixes(g, c):
            b = compute_b_set(g, c, q)
            assert b == brute_b_set(g, c, q)
            cands = extension_candidates(g, c, q)
            for x in g.neighbours(q[-1]):
                if x not in cands:
                    reasons = (x in q, any(g.has_edge(x, u) for u in q[:-1]), c[x] in {c[u] for u in q})
                    assert any(reasons)
            sub = [compute_b_set(g, c, q + (v,)) for v in sorted(cands)]
            union = frozenset().union(*sub)
            assert b == cands | union
            y = q[-1]
            assert union == {x for x in b if not g.has_edge(x, y)}


# gradings

def test_grading_validation():
    g = P3
    with pytest.raises(ValueError):
        Grading.build(g, [[0, 1], [2]], w=1)
    with pytest.raises(ValueError):
        Grading.build(g, [[0], [1]])
    gr = Grading.build(g, [[], [0, 2], [1]])
    assert gr.w == 1 and gr.blocks[0] == ()


def test_grading_search_star():
    star = gen.star(3)
    c = Colouring([1, 2, 3, 4])
    gr = Grading.build(star, [[0], [1, 2, 3]], w=1)
    w = grading_lemma_search(star, c, gr, 3)
    assert (w.block, w.vertex, w.later) == (0, 0, (1, 2, 3))
    validate_grading_witness(star, c, gr, w, 3)
    single = Grading.build(star, [range(4)])
    assert grading_lemma_search(star, c, single, 1) is None


def test_constructive_on_star_reports_failed_step():
    # r=1 is far below any valid GRS threshold for s=3 and the star has a
    # rainbow induced P3, so the proof's guarantee does not apply here
    star = gen.star(3)
    c = Colouring([1, 2, 3, 4])
    gr = Grading.build(star, [[0], [1, 2, 3]], w=1)
    run = grading_lemma_constructive(star, c, gr, 3, 1)
    assert run.witness is None and run.failed_step == "dichotomy"
    run = grading_lemma_constructive(star, c, gr, 1, 1)
    assert run.failed_step == "hypothesis" and run.induced_path is not None


def test_constructive_precondition_failure():
    g = gen.path(4)
    c = Colouring([1, 2, 1, 2])
    gr = Grading.build(g, [[0, 1, 2, 3]])
    run = grading_lemma_constructive(g, c, gr, 2, 2)
    assert run.failed_step == "precondition" and run.witness is None


def test_constructive_hypothesis_failure_returns_path():
    g = gen.path(8)
    c = Colouring([1, 2, 3, 4, 5, 6, 7, 8])
    gr = Grading.build(g, [[v] for v in range(8)], w=1)
    run = grading_lemma_constructive(g, c, gr, 3, 2)
    assert run.failed_step == "hypothesis"
    validate_path_witness(g, c, run.induced_path)
    assert len(run.induced_path.vertices) == 3


@pytest.mark.parametrize("seed", range(25))
def test_constructive_succeeds_on_cluster_instances(seed):
    g, c, gr, s, r = cluster_grading_instance(seed)
    run = grading_lemma_constructive(g, c, gr, s, r)
    assert run.failed_step is None, run.steps
    validate_grading_witness(g, c, gr, run.witness, s)
    direct = grading_lemma_search(g, c, gr, s)
    validate_grading_witness(g, c, gr, direct, s)
    assert direct.block <= run.witness.block


@pytest.mark.parametrize("seed", range(25))
def test_random_gradings(seed):
    g, c, gr, s, r = random_grading_instance(seed)
    run = grading_lemma_constructive(g, c, gr, s, r)
    if run.witness is not None:
        validate_grading_witness(g, c, gr, run.witness, s)
        assert grading_lemma_search(g, c, gr, s) is not None
    else:
        assert run.failed_step in {"precondition", "colour-class", "monotone-path", "hypothesis", "dichotomy"}


def test_grading_from_sets():
    assert grading_from_sets(5, [[0, 1], [1, 2], [0]]) == [[0, 1], [2], [], [3, 4]]


def test_direct_search_is_first_in_block_order():
    g = gen.complete_bipartite(2, 2)
    c = Colouring([1, 1, 2, 3])
    gr = Grading.build(g, [[1], [0], [2, 3]])
    assert grading_lemma_search(g, c, gr, 2).vertex == 1


# proof-guided search

def test_proof_guided_examples():
    g = gen.cycle(5)
    c = Colouring([1, 2, 3, 1, 2])
    w, steps = proof_guided_search(g, c, 3)
    validate_path_witness(g, c, w)
    assert steps[0]["step"] == "reach-sets"
    assert proof_guided_search(gen.complete(4), Colouring([1, 2, 3, 4]), 3)[0] is None


def test_proof_guided_on_triangle_free_chi4(grotzsch):
    rng = random.Random(11)
    graphs_ = [grotzsch, gen.mycielski(gen.cycle(7))]
    for g in graphs_:
        assert chromatic_number(g)[0] >= 4
        for _ in range(8):
            c = random_proper_colouring(g, rng)
            w, _ = proof_guided_search(g, c, 4, R_TABLE)
            assert w is not None
            validate_path_witness(g, c, w)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.integers(1, 5), st.integers(0, 10**6))
def test_proof_guided_agrees_with_exhaustive(g, s, seed):
    if g.n == 0:
        return
    c = random_proper_colouring(g, random.Random(seed))
    w, _ = proof_guided_search(g, c, s)
    assert (w is None) == (find_rainbow_induced_path(g, c, s) is None)
    if w:
        validate_path_witness(g, c, w)
