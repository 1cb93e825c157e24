import json

import pytest

from hclab.config import Caps
from hclab.embedding import hc_mutation
from hclab.group import Group
from hclab.harness import (
    REGISTRY,
    STATEMENTS,
    SuiteConfig,
    d_condition,
    evaluate_statement,
    hc_layer,
    iter_checks,
    replay_check,
    verify_suite,
)
from hclab.lattice import all_subgroups, sylow_subgroup

from conftest import grp

EXPECTED_IDS = [
    "L2.1.1", "L2.1.2", "L2.1.3", "L2.1.4", "L2.2.1", "L2.2.2", "L2.2.3", "L2.3", "L2.4",
    "L2.5.1", "L2.5.2", "L2.6.1", "L2.6.2", "L2.6.3", "L2.6.4", "L2.7", "L2.8", "L2.9",
    "L2.10", "L2.11", "L2.12", "L2.13", "T3.1", "C3.2", "T3.3", "T3.4", "T3.5", "T3.6",
]


def test_registry_is_exact():
    assert [s.id for s in STATEMENTS] == EXPECTED_IDS


def only_check(sid, G, **match):
    checks = [c for c in iter_checks(REGISTRY[sid], G) if all(c.raw_params[k] == v for k, v in match.items())]
    assert len(checks) == 1
    return checks[0]


def test_t31_on_s3_passes_with_cyclic_sylow():
    c = only_check("T3.1", grp("S3"))
    assert c.verdict == "pass" and c.hypothesis_holds and c.conclusion_holds
    assert c.params["p"] == 2 and "cyclic" in c.witness["hypothesis"]


def test_t31_on_s4_is_vacuous_for_every_d_order():
    G = grp("S4")
    c = only_check("T3.1", G)
    assert c.verdict == "vacuous"
    P = sylow_subgroup(G, 2)
    assert not d_condition(G, P, 2)[0] and not d_condition(G, P, 4)[0]
    assert [f["d"] for f in c.witness["hypothesis"]["failures"]] == [2, 4]


def test_t36_on_sl23_reports_the_failing_cyclic_four():
    G = grp("SL23")
    c = only_check("T3.6", G, E=G.whole)
    assert c.verdict == "vacuous"
    sel = c.witness["hypothesis"]["cyclic4_not_hc"]
    assert sel.startswith("order=4,")
    H = all_subgroups(G).select(4, int(sel.split("index=")[1]))
    assert H.size == 4 and max(G.element_orders[x] for x in H.members) == 4


def test_c32_all_cyclic_sylows_is_hypothesis_true():
    for spec in ("C6", "SD(7,3,2)", "S3"):
        assert only_check("C3.2", grp(spec)).hypothesis_holds


def test_hc_layer_for_cyclic_and_noncyclic():
    G = grp("D8")
    assert hc_layer(G, G.whole)[0]
    assert hc_layer(grp("C8"), grp("C8").whole)[1] == {"cyclic": grp("C8").whole}


def test_verdict_invariants_and_record_keys():
    report = verify_suite(corpus=[grp("S4"), grp("SL23")], cfg=SuiteConfig(diagnostic=True))
    for c in report.checks:
        assert (c.verdict == "FAIL") == (c.hypothesis_holds and not c.conclusion_holds)
        assert (c.verdict == "vacuous") == (not c.hypothesis_holds)
        assert c.conclusion_holds is not None
        assert set(c.record()) == {"statement", "group", "params", "verdict", "witness"}
    assert sum(report.contrapositive().values()) > 0


def test_conclusion_skipped_when_hypothesis_false_outside_diagnostic():
    c = only_check("T3.1", grp("S4"))
    assert c.conclusion_holds is None


def test_unknown_statement_rejected():
    with pytest.raises(KeyError):
        verify_suite(["NOPE"])


def test_cap_produces_skips_not_errors():
    G = Group(grp("S5").table, "S5")
    report = verify_suite(["L2.1.1", "T3.1"], [G], SuiteConfig(caps=Caps(lattice=60)))
    assert report.skips and report.exit_code() == 3
    assert all("exceeds" in c.witness["reason"] or "cap" in c.witness["reason"] for c in report.skips)


def test_parallel_and_serial_records_identical():
    groups = [grp(s) for s in ("S4", "A4", "Dic3", "prod(C3,S3)")]
    a = verify_suite(corpus=groups).to_records()
    b = verify_suite(corpus=groups, cfg=SuiteConfig(jobs=3)).to_records()
    assert a == b
    for line in a.splitlines():
        json.loads(line)


def test_failures_replay_on_fresh_groups():
    groups = [grp(s) for s in ("S4", "A4", "SL23", "D8")]
    cfg = SuiteConfig(hc_mutation="drop-intersection")
    report = verify_suite(corpus=groups, cfg=cfg)
    assert report.failures
    by_name = {G.name: G for G in groups}
    with hc_mutation("drop-intersection"):
        for c in report.failures:
            again = replay_check(c, by_name[c.group])
            assert again.verdict == "FAIL" and again.params == c.params
    # without the mutation the same tuples are sound
    for c in report.failures:
        assert replay_check(c, by_name[c.group]).verdict != "FAIL"


def test_text_report_mentions_every_statement():
    report = verify_suite(["T3.1", "L2.8"], [grp("S3"), grp("S4")])
    text = report.to_text(by_group=True)
    assert "T3.1" in text and "L2.8" in text and "S4" in text and "GREEN" in text
