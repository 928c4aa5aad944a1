from dp1.algebra import parse_wpoly
from dp1.claims import CLAIMS, load_shipped, verify_paper
from dp1.normal_form import Fibration


def test_empty_filter_gives_empty_report():
    rep = verify_paper([])
    assert rep.claims == [] and rep.passed


def test_filter_by_prefix():
    rep = verify_paper(["example1"])
    assert [c.id for c in rep.claims] == sorted(i for i in CLAIMS if i.startswith("example1."))
    assert rep.passed


def test_perturbed_example1_fails_transform():
    inst = load_shipped()
    fib, mp, exp = inst["example1"]
    bad = Fibration.from_wpoly(fib.to_wpoly() + parse_wpoly("x*y^5"))
    inst["example1"] = (bad, mp, exp)
    rep = verify_paper(["example1.transform"], instances=inst)
    (claim,) = rep.claims
    assert not claim.passed
    assert claim.evidence["constraints"][0]["coefficient"] == "f6[5]"
    assert claim.evidence["violations"][0]["source_monomial"] == "x*y^5"


def test_deterministic_under_seed():
    ids = ["caseB.elephant-not-canonical", "example2.threefold"]
    a = verify_paper(ids, seed=3, population=5).to_dict()
    b = verify_paper(ids, seed=3, population=5).to_dict()
    assert a == b


def test_full_run_known_failure():
    rep = verify_paper(population=15)
    assert [c.id for c in rep.failures()] == ["example3b.threefold"]
