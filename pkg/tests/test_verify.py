import json

import pytest

from rmtcount.haar import secular_samples
from rmtcount.verify import EXACT, FAIL, SUITES, WITHIN, Collector, format_table, verify


def test_report_structure():
    rep = verify("magic")
    assert rep["suite"] == "magic" and rep["seed"] == 42
    assert rep["summary"][FAIL] == 0 and rep["summary"][EXACT] == len(rep["cases"])
    assert [c["case_id"] for c in rep["cases"]] == list(range(len(rep["cases"])))
    for c in rep["cases"]:
        assert set(c) == {"identity_id", "params", "lhs", "rhs", "verdict", "case_id"}
    assert "elapsed_ms" not in json.dumps(rep)
    json.dumps(rep)


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify("nope")


def test_timings_kept_out_of_report():
    t = {}
    rep = verify("p6", timings=t)
    assert set(t) == {"p6"} and "p6" not in json.dumps(rep["flags"])


def test_sub_threshold_override_reports_failures():
    rep = verify("eq1", cap=3, N=1, samples=200)
    assert rep["summary"][FAIL] > 0
    assert rep["flags"] == {"cap": 3, "N": 1, "samples": 200}


def test_f2_carries_sign_note():
    rep = verify("f2", cap=5)
    assert rep["summary"][FAIL] == 0
    assert any("sign law" in n for n in rep["notes"])
    assert any("n=p=1" in n for n in rep["notes"])


def test_threshold_notes():
    assert any("N >= number of rows" in n for n in verify("prop4", cap=2)["notes"])


def test_hook_index_note():
    notes = verify("hs2")["notes"]
    assert any("breaks the identity" in n for n in notes)


def test_collector_verdicts():
    col = Collector("x")
    col.exact({}, ("a", 1), ("b", 1))
    col.exact({}, ("a", 1), ("b", 2))

    class R:
        estimate, stderr, estimate_im, stderr_im = 1.01, 0.01, 0.0, 0.0

    col.mc({}, ("exact", 1), R)
    R.estimate = 1.2
    col.mc({}, ("exact", 1), R)
    assert [c["verdict"] for c in col.cases] == [EXACT, FAIL, WITHIN, FAIL]


def test_format_table_lists_summary():
    text = format_table(verify("magic"))
    assert text.splitlines()[-1].startswith("Exact: 16")


def test_mc_suite_deterministic():
    a = json.dumps(verify("prop9", samples=2000, seed=7), sort_keys=True)
    secular_samples.cache_clear()
    b = json.dumps(verify("prop9", samples=2000, seed=7, threads=2), sort_keys=True)
    assert a == b


def test_every_suite_registered():
    assert len(SUITES) == 25
