import json

import pytest

from ordsgp import (
    THEOREM_IDS,
    lz2,
    n2,
    run_suite,
    rz2,
    search_model,
    sl2,
    structure_key,
    t1,
    verify,
)
from ordsgp.harness import iter_catalog

ALL_IDS = (
    "thm2",
    "thm4",
    "thm5",
    "thm6",
    "thm7-open",
    "thm8",
    "thm51",
    "thm-wc",
    "lemma3",
    "lemma7",
    "cor1",
    "cor-pi-inverse",
    "cor-pi-t-simple",
    "cor-hstar",
    "cor-cpr",
)


def test_theorem_id_registry():
    assert set(THEOREM_IDS) == set(ALL_IDS)


def test_verify_examples():
    rep = verify(n2(), "thm2")
    assert rep.verdict == "equivalent"
    assert all(c["holds"] for c in rep.conditions)

    rep = verify(lz2(), "thm8")
    assert rep.verdict == "hypothesis_not_met"
    assert rep.hypothesis == {"right_pi_inverse": False}
    holds = {c["index"]: c["holds"] for c in rep.conditions}
    assert holds[1] is True and holds[4] is False

    rep = verify(sl2(), "thm51")
    assert rep.verdict == "equivalent"
    assert rep.hypothesis == {"regular": True}
    assert all(c["holds"] for c in rep.conditions)

    with pytest.raises(ValueError):
        verify(t1(), "thm99")


def test_verify_gating_and_laws():
    # lemma7's conclusion fails on LZ2 but so does its hypothesis
    rep = verify(lz2(), "lemma7")
    assert rep.verdict == "hypothesis_not_met"
    assert not rep.conditions[0]["holds"]
    rep = verify(lz2(), "lemma3")
    assert rep.verdict == "equivalent"
    # implication suite with false antecedent never reports a discrepancy
    rep = verify(rz2(), "thm-wc")
    assert rep.verdict == "hypothesis_not_met"
    rep = verify(n2(), "thm-wc")
    assert rep.verdict == "equivalent"
    assert rep.hypothesis == {
        "right_weakly_commutative": True,
        "right_archimedean": True,
        "lstar_unique_idempotent": True,
    }


def test_verify_is_deterministic_and_cache_free():
    for tid in ALL_IDS:
        first = json.dumps(verify(sl2(), tid).to_dict(), sort_keys=True)
        second = json.dumps(verify(sl2(), tid).to_dict(), sort_keys=True)
        assert first == second, tid


def test_cor1_indices_follow_source_numbering():
    rep = verify(n2(), "cor1")
    assert [c["index"] for c in rep.conditions] == [1, 2, 3, 4, 5]
    assert rep.verdict == "equivalent"


def test_iter_catalog_counts():
    assert sum(1 for _ in iter_catalog(1)) == 1
    assert sum(1 for _ in iter_catalog(2)) == 21
    n4 = sum(1 for _ in iter_catalog(4, sample_count=10, sample_seed=0))
    assert n4 == 992 + 3492 + 10
    with pytest.raises(ValueError):
        list(iter_catalog(5))


def test_run_suite_small_exhaustive():
    rep = run_suite("all", max_order=2)
    assert rep.structures == 21
    assert rep.totals["DISCREPANCY"] == 0
    assert rep.totals["equivalent"] + rep.totals["hypothesis_not_met"] == 21 * len(ALL_IDS)
    assert rep.diagnostics == {"reading_disagreements": {}}
    assert rep.config["theorems"] == list(ALL_IDS)
    assert set(rep.by_theorem) == set(ALL_IDS)
    for counts in rep.by_theorem.values():
        assert sum(counts.values()) == 21
    # every suite without a hypothesis gate is equivalent everywhere
    assert rep.by_theorem["thm2"]["equivalent"] == 21
    assert "thm2" in rep.table() and "DISCREPANCY" in rep.table()

    single = run_suite("lemma3", max_order=1)
    assert single.totals == {"equivalent": 1, "hypothesis_not_met": 0, "DISCREPANCY": 0}
    with pytest.raises(ValueError):
        run_suite("nope", max_order=1)


def test_run_suite_singleton_satisfies_everything():
    rep = run_suite("all", max_order=1)
    # the one-element structure meets every hypothesis and every condition
    assert rep.totals == {
        "equivalent": len(ALL_IDS),
        "hypothesis_not_met": 0,
        "DISCREPANCY": 0,
    }


def test_verify_thm7_open_and_thm_wc_conditions():
    rep = verify(lz2(), "thm7-open")
    assert rep.verdict == "equivalent"
    assert rep.hypothesis == {"regular": True}
    assert [c["holds"] for c in rep.conditions] == [True, True]
    rep = verify(sl2(), "thm7-open")
    assert [c["holds"] for c in rep.conditions] == [False, False]
    rep = verify(n2(), "thm-wc")
    assert rep.conditions[0]["holds"]


def test_run_suite_worker_independence():
    one = run_suite("thm6", max_order=2, workers=1)
    two = run_suite("thm6", max_order=2, workers=2)
    assert json.dumps(one.to_dict(), sort_keys=True) == json.dumps(
        two.to_dict(), sort_keys=True
    )


def test_search_model_examples():
    res = search_model(satisfy=["left-simple"], violate=["right-simple"], max_order=2)
    assert res.found
    assert res.structure == lz2()
    assert res.checked == 8

    res = search_model(satisfy=["pi-regular"], max_order=1)
    assert structure_key(res.structure) == "n1:0:1"

    # frozen from the first exhaustive run: the right-zero pair is the
    # earliest right-pi-inverse structure that is not left-pi-inverse
    res = search_model(
        satisfy=["right-pi-inverse"], violate=["left-pi-inverse"], max_order=4
    )
    assert res.found
    assert structure_key(res.structure) == "n2:0101:1001"
    assert res.checked == 11

    nothing = search_model(satisfy=["left-simple", "right-simple"], violate=["simple"], max_order=2)
    assert not nothing.found
    assert nothing.checked == 21

    with pytest.raises(ValueError):
        search_model(satisfy=["unknown-pred"], max_order=1)
    with pytest.raises(ValueError):
        search_model(max_order=9)


def test_report_schema_shape():
    rep = verify(sl2(), "thm8").to_dict()
    assert set(rep) == {
        "theorem",
        "structure_key",
        "hypothesis",
        "conditions",
        "verdict",
        "diagnostics",
    }
    for cond in rep["conditions"]:
        assert set(cond) == {"index", "holds", "witness", "counterexample"}
    json.dumps(rep)
