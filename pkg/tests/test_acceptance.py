"""End-to-end acceptance checks, one group per criterion (see the summary section of the run)."""
import random
import time
from fractions import Fraction
from functools import reduce
from math import gcd
from pathlib import Path

import pytest

from sumgraphs import claims as CL
from sumgraphs import constructors as C
from sumgraphs import exactla as X
from sumgraphs import fib as F
from sumgraphs import graphs as G
from sumgraphs import magmas as M
from sumgraphs import product as P
from sumgraphs import search as S
from sumgraphs.cli import main
from sumgraphs.fixtures import C4_ISO_MAP, FIXTURES, Q4_COEFFS, Q4_SOL1, Q4_SOL2, Q4_SOL3, Q4_U
from sumgraphs.labelling import Labelling, check_sum_iso, induced_graph, is_strong, verify
from test_labelling import _random_instance

DATA = Path(__file__).parent / "data"


# 1 ----------------------------------------------------------------------------

REQUIRED_FIXTURES = ["ex1-z-graph", "harary-p6", "c4-3k1-nat", "c4-z5", "c4-units11", "c5-z11", "c6-z4xz4",
                     "c6-z13", "c7-z29-fib", "c8-z3xz15", "c8-z29", "c12-z40xz40", "c15-z682", "c9-z53",
                     "c9-z47-a", "c9-z47-b", "q4-sol1", "q4-sol2", "q4-sol3", "q4-r24", "q3-z15",
                     "petersen-z28", "k33-z9-relaxed", "relaxed-cubic12"]


@pytest.mark.criterion(1)
def test_c01_fixture_suite():
    t = time.perf_counter()
    for key in REQUIRED_FIXTURES:
        fx = FIXTURES[key]
        assert set(induced_graph(fx.labelling).edges()) == set(fx.graph.edges()), key
    ex1 = FIXTURES["ex1-z-graph"].graph
    assert (ex1.n, ex1.num_edges) == (6, 7)
    assert check_sum_iso(FIXTURES["c4-z5"].labelling, FIXTURES["c4-units11"].labelling, C4_ISO_MAP)
    radii = [Labelling(M.int_add(), s).radius() for s in (Q4_SOL1, Q4_SOL2, Q4_SOL3)]
    assert radii + [FIXTURES["q4-r24"].labelling.radius()] == [46, 37, 35, 24]
    assert time.perf_counter() - t < 10


# 2 ----------------------------------------------------------------------------

@pytest.mark.criterion(2)
def test_c02_verifier_oracle_equivalence():
    rng = random.Random(2024)
    ops_seen = set()
    for _ in range(1000):
        lab, ref = _random_instance(rng)
        if lab.spec.kind == M.SET:
            ops_seen.add(lab.spec.set_op)
        assert set(induced_graph(lab).edges()) == ref
    assert ops_seen == set(M.SET_OPS)


# 3 ----------------------------------------------------------------------------

@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", range(2, 7))
def test_c03_counts_table(n):
    graphs = G.read_graph6_file(DATA / f"graphs{n}.g6")
    c = S.count_corpus(graphs, relaxed=True, radius_cap=10)
    total, isg, risg = CL.COUNTS_TABLE[n]
    assert c.total == total
    assert c.isg <= c.risg <= c.total
    assert (c.isg, c.risg) == (isg, risg)


# 4 ----------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_c04_fibonacci():
    for n in range(3, 301):
        assert F.gcd_fn_closed_form(n) == gcd(F.fib(n), F.fib(n + 1) - 1)
    p15, p6 = F.fib_params(15), F.fib_params(6)
    assert (p15.d, p15.z, p15.delta) == (2, 162, 682)
    assert (p6.d, p6.z, p6.delta) == (4, -4, 4)
    rng = random.Random(4)
    for _ in range(100):
        m, n = rng.randint(-300, 300), rng.randint(-300, 300)
        assert F.fib(m + n) == F.fib(m - 1) * F.fib(n) + F.fib(m) * F.fib(n + 1)


# 5 ----------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_c05_c4_classification():
    t = time.perf_counter()
    c4 = G.cycle(4)
    checked = 0
    for order in range(1, 26):
        for spec in M.abelian_groups_of_order(order):
            out = S.solve(S.SearchProblem(c4, S.FiniteMagma(spec)))
            assert out.status in (S.FOUND, S.EXHAUSTED)
            assert out.found == (order % 5 == 0), M.spec_name(spec)
            if out.found:
                assert verify(out.labelling, c4).ok
            checked += 1
    assert checked == 39
    assert time.perf_counter() - t < 60


# 6 ----------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_c06_radius_results():
    for n in range(1, 51):
        lab = C.empty_graph(n)
        assert verify(lab, G.empty(n)).ok and lab.radius() == n - 1
    for n in range(1, 7):
        r, out = S.radius(G.empty(n), n - 1)
        assert r == n - 1 and verify(out.labelling, G.empty(n)).ok
        if n >= 2:
            below = S.solve(S.SearchProblem(G.empty(n), S.IntRadius(n - 2)))
            assert below.status == S.EXHAUSTED
    for m in range(3, 21):
        lab = C.matching_li(m)
        assert verify(lab, G.matching(m)).ok and lab.label_range() == 4 * m - 3


# 7 ----------------------------------------------------------------------------

NEGATIVE = [
    ("C4 radius 30", lambda: S.solve(S.SearchProblem(G.cycle(4), S.IntRadius(30)))),
    ("K4 radius 20", lambda: S.solve(S.SearchProblem(G.complete(4), S.IntRadius(20)))),
    ("Petersen radius 15", lambda: S.solve(S.SearchProblem(G.petersen(), S.IntRadius(15)))),
]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("name,run", NEGATIVE, ids=[n for n, _ in NEGATIVE])
def test_c07_integral_negatives(name, run):
    assert run().status == S.EXHAUSTED


@pytest.mark.criterion(7)
@pytest.mark.parametrize("name,g,cap,relaxed", [("K33", G.complete_bipartite(3, 3), 30, False),
                                                ("prism", G.triangular_prism(), 30, False),
                                                ("prism relaxed", G.triangular_prism(), 20, True)])
def test_c07_mod_negatives(name, g, cap, relaxed):
    res = S.mod_sum_sweep(g, cap, relaxed=relaxed)
    assert res.modulus is None and res.outcome is None


# 8 ----------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_c08_q4_kernel():
    q4 = G.hypercube(4)
    _, basis = X.labelling_kernel(q4, Labelling(M.int_add(), Q4_SOL1))
    assert len(basis) == 3
    # the printed basis spans the same space, so the change of basis is exact
    for u in Q4_U:
        assert X.coordinates(u, basis) is not None
    for name, sol in (("sol1", Q4_SOL1), ("sol2", Q4_SOL2), ("sol3", Q4_SOL3)):
        assert X.coordinates(sol, Q4_U) == tuple(Fraction(c) for c in Q4_COEFFS[name])
    labs = X.enumerate_primitive_labellings(q4, basis, box=50)
    keys = set()
    for lab in labs:
        assert verify(lab, q4).ok and reduce(gcd, lab.labels) == 1
        keys.add(X.primitive(lab.labels))
    assert len(keys) == len(labs) >= 5


# 9 ----------------------------------------------------------------------------

@pytest.fixture(scope="module")
def claim_records():
    return {r.id: r for r in CL.run_claims()}


@pytest.mark.criterion(9)
def test_c09_claims_exit_zero(claim_records, capsys):
    assert CL.exit_status(list(claim_records.values())) == 0
    assert main(["claims", "run", "--filter", "FIX-*"]) == 0
    capsys.readouterr()


@pytest.mark.criterion(9)
def test_c09_report_witnesses(claim_records):
    report = {f"T8-C4l-l{l}": G.cycle(4 * l) for l in range(1, 7)}
    report.update({f"P9.1-matching-harary-m{m}": G.matching(m) for m in range(4, 21)})
    for cid, g in report.items():
        rec = claim_records[cid]
        assert rec.actual in (CL.PASS, CL.FAIL, CL.REPORT_ONLY)
        if rec.actual == CL.FAIL:
            spec = M.spec_from_json(M.spec_to_json(M.parse_spec(_spec_text(rec.witness["magma"]))))
            assert CL.recheck_chord(rec.witness, g, spec), cid
    delta = claim_records["E5.1-delta-ratio"]
    assert delta.actual == CL.REPORT_ONLY and delta.witness["last_ratios"]


def _spec_text(name: str) -> str:
    # "Z" or "Z_3xZ_3" as rendered by spec_name
    if name == "Z":
        return "z"
    return "ab:" + "x".join(part.split("_")[1] for part in name.split("x"))


# 10 ---------------------------------------------------------------------------

@pytest.mark.criterion(10)
def test_c10_product_theorem():
    pairs = CL.strong_search_labellings(max_n=5)
    count = 0
    for g, a in pairs:
        for h, b in pairs:
            lab = P.product_labelling(a, b)
            assert verify(lab, P.direct_product(g, h)).ok and is_strong(lab)
            count += 1
    assert count >= 10


@pytest.mark.criterion(10)
def test_c10_flatten_properties():
    rng = random.Random(10)
    for _ in range(1000):
        k, bound = rng.randint(1, 4), rng.randint(1, 40)
        tuples = [tuple(rng.randint(-bound, bound) for _ in range(k)) for _ in range(rng.randint(2, 12))]
        spec = P.FlattenSpec.minimal(tuples)
        flat = P.flatten(tuples, spec)
        assert len(set(flat)) == len(set(tuples))
        a, b = rng.sample(tuples, 2)
        s = tuple(x + y for x, y in zip(a, b))
        # a base admitting a + b as well
        wide = P.FlattenSpec.minimal(tuples + [s])
        assert sum(P.flatten([a, b], wide)) == P.flatten([s], wide)[0]
        if all(2 * abs(x) < spec.M for x in s):
            assert flat[tuples.index(a)] + flat[tuples.index(b)] == P.flatten([s], spec)[0]


# 11 ---------------------------------------------------------------------------

@pytest.mark.criterion(11)
def test_c11_mod_sum():
    rng = random.Random(11)
    done = 0
    while done < 100:
        m = rng.randint(4, 60)
        d = rng.choice([x for x in range(1, m // 2 + 1) if m % x == 0])
        labels = rng.sample(range(0, m, d), rng.randint(1, min(7, m // d)))
        g0 = reduce(gcd, labels, 0)
        if g0 == 0 or m % g0:  # outside the precondition of the reduction
            continue
        lab = Labelling(M.mod_add(m), labels)
        g = induced_graph(lab)
        red = S.gcd_reduce_mod_labelling(lab)
        assert verify(lab, g).ok and verify(red, g).ok
        done += 1
    res = S.mod_sum_sweep(G.hypercube(3), 20)
    assert res.modulus is not None and res.modulus <= 15
    assert verify(res.outcome.labelling, G.hypercube(3)).ok
    for n in range(1, 13):
        assert S.mod_sum_bound(n) == 2 * 3 ** (n - 1)
        assert S.mod_sum_sweep(G.empty(n), 2).theorem_bound == 2 * 3 ** (n - 1)
