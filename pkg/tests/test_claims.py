import json

import pytest

from sumgraphs import claims as CL
from sumgraphs import constructors as C
from sumgraphs import graphs as G
from sumgraphs import magmas as M
from sumgraphs.fixtures import FIXTURES
from sumgraphs.labelling import verify


@pytest.mark.parametrize("key", list(FIXTURES))
def test_fixture_verifies(key):
    fx = FIXTURES[key]
    assert verify(fx.labelling, fx.graph).ok == fx.expect_ok


def test_only_misprint_is_expected_to_fail():
    assert [k for k, f in FIXTURES.items() if not f.expect_ok] == ["c7-z17"]


def test_claim_ids_unique_and_sorted_output():
    assert len(CL.CLAIM_IDS) == len(set(CL.CLAIM_IDS))
    recs = CL.run_claims("FIX-4-*")
    assert [r.id for r in recs] == sorted(r.id for r in recs)


def test_unknown_claim():
    with pytest.raises(CL.UnknownClaimId):
        CL.select("NO-SUCH-*")


@pytest.mark.parametrize("m", range(4, 21))
def test_matching_report_witness_rechecks(m):
    (rec,) = CL.run_claims(f"P9.1-matching-harary-m{m}")
    assert rec.expected == CL.REPORT
    if rec.actual == CL.FAIL:
        assert CL.recheck_chord(rec.witness, G.matching(m), M.int_add())


@pytest.mark.parametrize("ell", range(2, 7))
def test_c4l_report_witness_rechecks(ell):
    (rec,) = CL.run_claims(f"T8-C4l-l{ell}")
    if rec.actual == CL.FAIL:
        spec = C.c4l_theorem_labelling(ell).spec
        assert CL.recheck_chord(rec.witness, G.cycle(4 * ell), spec)
    else:
        assert rec.actual == CL.PASS


def test_recheck_rejects_forged_chord():
    (rec,) = CL.run_claims("P9.1-matching-harary-m5")
    forged = dict(rec.witness, chord=[0, 1, 2])
    assert not CL.recheck_chord(forged, G.matching(5), M.int_add())


def test_records_serialize():
    recs = CL.run_claims("P5.*")
    doc = json.loads(json.dumps([r.to_json() for r in recs]))
    assert all(d["actual"] in (CL.PASS, CL.FAIL, CL.REPORT_ONLY) for d in doc)
    assert CL.exit_status(recs) == 0
    assert "claims, 0 failing" in CL.format_table(recs)


def test_crashing_claim_is_a_failure():
    claim = CL.Claim("X-crash", "0", "boom", "none", CL.PASS, lambda ctx: 1 / 0)
    rec = CL.run_claim(claim, CL.Context())
    assert rec.actual == CL.FAIL and rec.failed


def test_counts_need_corpus():
    (rec,) = CL.run_claims("TBL9.2-n4")
    assert rec.actual == CL.REPORT_ONLY
