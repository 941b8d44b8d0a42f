import random
from fractions import Fraction
from math import gcd
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st

from sumgraphs import exactla as X
from sumgraphs import graphs as G
from sumgraphs import magmas as M
from sumgraphs.fixtures import FIXTURES
from sumgraphs.labelling import Labelling, verify
from oracles import cofactor_det, rational_rank

small = st.integers(-9, 9)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_determinant_matches_cofactor(m):
    assert X.determinant(m) == cofactor_det(m)


def test_determinant_not_square():
    with pytest.raises(X.NotSquare):
        X.determinant([[1, 2]])


@settings(max_examples=200)
@given(st.tuples(st.integers(1, 5), st.integers(1, 6)).flatmap(lambda rc: matrices(*rc)))
def test_nullspace(m):
    cols = len(m[0])
    basis = X.rational_nullspace(m)
    assert len(basis) == cols - rational_rank(m)
    assert X.rank(m) == rational_rank(m)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
        assert reduce(gcd, v) == 1
        assert next(x for x in v if x) > 0


@given(st.lists(small, min_size=1, max_size=6))
def test_primitive(v):
    p = X.primitive(v)
    if any(v):
        assert reduce(gcd, p) == 1 and next(x for x in p if x) > 0
        ratio = Fraction(next(x for x in v if x), next(x for x in p if x))
        assert all(Fraction(a) == ratio * b for a, b in zip(v, p))


@settings(max_examples=100)
@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_coordinates_round_trip(rows, coeffs):
    basis = X.rational_nullspace(rows, 5)
    if not basis:
        return
    c = coeffs[:len(basis)] + [0] * (len(basis) - len(coeffs))
    v = X.combine(c, basis)
    assert X.coordinates(v, basis) == tuple(Fraction(x) for x in c)


def test_coordinates_outside_span():
    assert X.coordinates((1, 0), [(0, 1)]) is None


@pytest.mark.parametrize("key", ["q4-sol1", "q4-sol2", "q4-sol3", "q4-r24", "harary-p6", "ex1-z-graph"])
def test_labelling_kernel_contains_labels(key):
    fx = FIXTURES[key]
    system, basis = X.labelling_kernel(fx.graph, fx.labelling)
    assert len(system.rows) == fx.graph.num_edges
    assert X.coordinates(fx.labelling.labels, basis) is not None
    mat = system.matrix()
    assert all(sum(a * b for a, b in zip(row, fx.labelling.labels)) == 0 for row in mat)


def test_q4_kernel_dimension():
    fx = FIXTURES["q4-sol1"]
    _, basis = X.labelling_kernel(fx.graph, fx.labelling)
    assert len(basis) == 3


def test_labelling_system_rejects_invalid():
    with pytest.raises(X.NotAValidLabelling):
        X.labelling_system(G.cycle(4), Labelling(M.int_add(), (1, 2, 3, 4)))


def test_enumerate_primitive_small():
    fx = FIXTURES["harary-p6"]
    _, basis = X.labelling_kernel(fx.graph, fx.labelling)
    labs = X.enumerate_primitive_labellings(fx.graph, basis, box=6)
    assert labs
    seen = set()
    for lab in labs:
        assert reduce(gcd, lab.labels) == 1
        assert verify(lab, fx.graph).ok
        # primitive with positive lead means proportional vectors would coincide up to sign
        key = X.primitive(lab.labels)
        assert key not in seen and tuple(-x for x in key) not in seen
        seen.add(key)


@pytest.mark.parametrize("p", [5, 7, 13, 29])
def test_nullspace_mod_p(p):
    rng = random.Random(p)
    for _ in range(20):
        m = [[rng.randint(-20, 20) for _ in range(5)] for _ in range(3)]
        for v in X.nullspace_mod_p(m, p, 5):
            assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in m)


def test_cycle_map_checks():
    rng = random.Random(0)
    for _ in range(50):
        X.check_cycle_map(X.sample_cycle_map(9, rng))
    with pytest.raises(X.InvalidCycleMap):
        X.check_cycle_map((1, 2, 3, 4, 0))


def test_random_cycle_search_hits_verify():
    hits = X.random_cycle_search(9, seed=7, want=2)
    assert len(hits) == 2
    for h in hits:
        assert verify(h.labelling, G.cycle(9)).ok
        assert h.det % h.prime == 0
