import random
from functools import reduce
from math import gcd

import pytest

from sumgraphs import graphs as G
from sumgraphs import magmas as M
from sumgraphs import search as S
from sumgraphs.labelling import Labelling, induced_graph, is_strong, verify
from oracles import naive_exists

SMALL = [g for n in range(1, 5) for g in G.all_graphs(n)]


def _found(g, r, relaxed=False, strong=False, **kw):
    out = S.solve(S.SearchProblem(g, S.IntRadius(r), relaxed=relaxed, strong=strong), **kw)
    if out.found:
        assert verify(out.labelling, g).ok
        assert not strong or is_strong(out.labelling)
    return out.found


@pytest.mark.parametrize("r", [1, 2, 4, 6])
@pytest.mark.parametrize("relaxed", [False, True])
def test_matches_naive_enumeration(r, relaxed):
    for g in SMALL:
        if relaxed and r > 4 and g.n == 4:
            continue  # (2r+1)^4 relaxed assignments dominate runtime; covered at smaller r
        assert _found(g, r, relaxed) == naive_exists(g.n, set(g.edges()), r, relaxed), (g, r)


@pytest.mark.parametrize("r", [2, 4])
def test_strong_matches_naive(r):
    for g in SMALL:
        assert _found(g, r, strong=True) == naive_exists(g.n, set(g.edges()), r, strong=True), g


def test_pruning_and_symmetry_do_not_change_outcomes():
    rng = random.Random(3)
    pool = [g for n in range(3, 6) for g in G.all_graphs(n)]
    for _ in range(50):
        g, r, relaxed = rng.choice(pool), rng.randint(1, 6), rng.random() < 0.3
        base = _found(g, r, relaxed)
        assert _found(g, r, relaxed, prune=False) == base
        assert _found(g, r, relaxed, symmetry=False) == base


@pytest.mark.parametrize("m", range(2, 10))
def test_mod_search_matches_naive(m):
    from itertools import permutations
    for g in [G.cycle(4), G.path(4), G.complete(3), G.empty(3), G.matching(2)]:
        out = S.solve(S.SearchProblem(g, S.Mod(m)))
        ref = any(set(induced_graph(Labelling(M.mod_add(m), p)).edges()) == set(g.edges())
                  for p in permutations(range(m), g.n))
        assert out.found == ref
        if out.found:
            assert verify(out.labelling, g).ok


def test_monotone_in_radius():
    for g in [G.path(5), G.cycle(5), G.empty(4), G.matching(3)]:
        r, _ = S.radius(g, 12)
        assert r is not None
        for bigger in (r + 1, r + 3):
            assert _found(g, bigger)
        if r > 0:
            assert not _found(g, r - 1)


def test_finite_magma_domain():
    out = S.solve(S.SearchProblem(G.cycle(4), S.FiniteMagma(M.mod_mul_units(11))))
    assert out.found and verify(out.labelling, G.cycle(4)).ok


def test_nat_domain_and_sum_number():
    # a connected graph never has one: the largest label is in no sum
    assert not S.solve(S.SearchProblem(G.path(3), S.NatMax(10))).found
    g = G.disjoint_union([G.path(2), G.empty(1)])
    out = S.solve(S.SearchProblem(g, S.NatMax(10)))
    assert out.found and all(x >= 1 for x in out.labelling.labels)
    k, res = S.sum_number_bounded(G.cycle(4), 3, 20)
    assert k == 3 and res.found
    k, _ = S.sum_number_bounded(G.complete(2), 2, 10)
    assert k == 1


def test_budget_is_reported():
    out = S.solve(S.SearchProblem(G.petersen(), S.IntRadius(15)), budget=100)
    assert out.status == S.BUDGET and not out.found


def test_problem_validation():
    for bad in (S.IntRadius(-1), S.NatMax(0), S.Mod(1), S.FiniteMagma(M.int_add())):
        with pytest.raises(ValueError):
            S.SearchProblem(G.cycle(4), bad)


def test_nonzero_domain():
    out = S.solve(S.SearchProblem(G.empty(3), S.IntRadius(3, nonzero=True)))
    assert out.found and 0 not in out.labelling.labels


def test_gcd_reduce_preserves_verification():
    rng = random.Random(11)
    done = 0
    while done < 100:
        m = rng.randint(4, 40)
        divisors = [d for d in range(2, m // 2 + 1) if m % d == 0]
        if not divisors:
            continue
        d = rng.choice(divisors)
        pool = list(range(d, m, d))
        labels = rng.sample(pool, rng.randint(1, min(6, len(pool))))
        if m % reduce(gcd, labels):
            continue
        lab = Labelling(M.mod_add(m), labels)
        red = S.gcd_reduce_mod_labelling(lab)
        assert red.spec.modulus * (m // red.spec.modulus) == m
        assert verify(red, induced_graph(lab)).ok
        done += 1


def test_gcd_reduce_rejects():
    with pytest.raises(S.GcdDoesNotDivideModulus):
        S.gcd_reduce_mod_labelling(Labelling(M.mod_add(9), (2, 4)))


def test_mod_sum_bound():
    assert [S.mod_sum_bound(n) for n in range(1, 13)] == [2 * 3 ** (n - 1) for n in range(1, 13)]


def test_mod_sweep_cube():
    res = S.mod_sum_sweep(G.hypercube(3), 20)
    assert res.modulus is not None and res.modulus <= 15
    assert verify(res.outcome.labelling, G.hypercube(3)).ok
    # a witness settles the question regardless of the theorem bound
    assert res.conclusive
    assert not S.mod_sum_sweep(G.complete_bipartite(3, 3), 12).conclusive


def test_count_corpus_small():
    c = S.count_corpus(G.all_graphs(4), radius_cap=6)
    assert c.isg <= c.risg <= c.total == 11
    with pytest.raises(S.MixedOrders):
        S.count_corpus([G.cycle(4), G.cycle(5)])
