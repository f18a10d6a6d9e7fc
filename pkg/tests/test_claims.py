from __future__ import annotations

import json

import pytest

from treeirr.claims import (
    EvalConfig,
    evaluate_all,
    evaluate_claim,
    fibonacci_irr_formula,
    get_claim,
    majorization_pairs,
    recheck_counterexample,
    registry,
)
from treeirr.construct import fibonacci_caterpillar
from treeirr.indices import albertson


@pytest.fixture(scope="module")
def report():
    return evaluate_all(EvalConfig(4, 9, 0))


def _verdict(report, cid):
    return next(v for v in report.verdicts if v.id == cid)


def test_registry_shape():
    claims = registry()
    assert [c.id for c in claims] == [f"C{i}" for i in range(1, 32)]
    assert all(c.quote and c.paper_ref and c.statement for c in claims)
    assert get_claim("c9").domain == "per_class"
    with pytest.raises(KeyError):
        get_claim("C32")


def test_counts_are_consistent(report):
    assert len(report.verdicts) == 31
    for v in report.verdicts:
        assert v.holds + v.fails + v.vacuous == v.domain_size, v.id
        assert (v.first_counterexample is None) == (v.fails == 0), v.id


def test_counterexamples_reverify_in_isolation(report):
    for v in report.verdicts:
        for record in v.counterexamples:
            assert recheck_counterexample(v.id, record).status == "fail", (v.id, record)


@pytest.mark.parametrize("cid", ["C1", "C2", "C5", "C8", "C30", "C31"])
def test_true_statements_hold(report, cid):
    assert _verdict(report, cid).fails == 0


def test_sigma_max_lemma_fails_on_the_star(report):
    v = _verdict(report, "C9")
    assert v.fails == 6
    six = [r for r in v.counterexamples if r["free_vars"]["n"] == 6]
    assert six and six[0]["values"] == {"left": 80, "right": 20}
    assert six[0]["witness_g6"] == "Esa?"


def test_sandwich_counterexamples_carry_middle_values(report):
    for cid in ("C12", "C15", "C21", "C24"):
        first = _verdict(report, cid).first_counterexample
        assert first is not None
        assert {"left", "middle", "right"} <= set(first["values"])
    assert "witness_pair_g6" in _verdict(report, "C15").first_counterexample


def test_fibonacci_record(report):
    rec = _verdict(report, "C11").reported
    assert rec["reported_value"] == 12319
    assert rec["computed_value"] == albertson(fibonacci_caterpillar(10, "paper"))
    assert rec["match"] is (rec["computed_value"] == 12319)
    assert set(rec["conventions"]) == {"paper", "standard"}
    assert rec["conventions"]["standard"]["sum_F3_to_F10_plus_2"] == 143
    assert rec["conventions"]["standard"]["sum_F3_to_F9_plus_2"] == 88


def test_fibonacci_formula_by_hand():
    # standard convention, n = 5: F3..F5 = 2, 3, 5
    assert fibonacci_irr_formula(5, "standard") == (2 + 3) + 0 + (3 - 1) + 4 * 4 + 2


def test_two_tree_record(report):
    rec = _verdict(report, "C15").reported
    assert (rec["reported_irr_min"], rec["reported_irr_max"]) == (562, 612)
    assert rec["computed_middle"] == pytest.approx(5 * (38 * 13**3 + 37 * 12**4 + 37 * 13**2) / (12 * 25**2))


def test_pair_domain_is_weighted():
    v = evaluate_claim("C15", EvalConfig(4, 6))
    # n1=4: no order-3 tree has Δ 3 or 4.  n1=5: P_5 pairs with S_4.
    # n1=6: P_6 pairs with the one Δ=3 tree of order 5, and each of the
    # three Δ=3 trees of order 6 pairs with the one Δ=4 tree of order 5.
    assert v.domain_size == 0 + 1 + (1 + 3)


def test_majorization_domain():
    pairs = majorization_pairs()
    assert all(sum(d) == sum(b) for d, b in pairs)
    assert ((4, 0, 0, 0), (1, 1, 1, 1)) in pairs
    v = evaluate_claim("C29")
    assert v.domain_size == len(pairs) ** 2 + 10_000


def test_report_is_deterministic(report):
    again = evaluate_all(EvalConfig(4, 9, 0))
    assert json.dumps(report.body()) == json.dumps(again.body())


def test_parallel_matches_serial():
    cfg = EvalConfig(4, 7, 1, ("C9", "C12", "C29", "C31"))
    a, b = evaluate_all(cfg), evaluate_all(cfg, workers=2)
    assert json.dumps(a.body()) == json.dumps(b.body())


@pytest.mark.parametrize("bad", [EvalConfig(5, 4), EvalConfig(1, 4), EvalConfig(4, 15),
                                 EvalConfig(4, 6, claims=("C99",))])
def test_invalid_configs(bad):
    with pytest.raises((ValueError, KeyError)):
        evaluate_all(bad)


def test_csv_export(report):
    lines = report.to_csv().splitlines()
    assert lines[0] == "id,domain_size,holds,fails,vacuous"
    assert len(lines) == 32
    assert lines[9].startswith("C9,6,0,6,0")


def test_json_schema(report):
    doc = report.to_json()
    assert set(doc) == {"version", "n_min", "n_max", "seed", "claims", "wall_time_s"}
    entry = doc["claims"][0]
    for key in ("id", "paper_ref", "quote", "domain_size", "holds", "fails", "vacuous",
                "first_counterexample", "notes"):
        assert key in entry
    json.dumps(doc)
