"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run with ``pytest -v tests/test_acceptance.py``; the lines are written
straight to the terminal.
"""

from __future__ import annotations

import io
import json
import math
import time

import pytest

from treeirr.claims import EvalConfig, evaluate_claim, recheck_counterexample
from treeirr.cli import run
from treeirr.construct import path, star
from treeirr.degseq import DegreeSequence
from treeirr.enumeration import extremal, free_trees, labeled_trees_oracle
from treeirr.graph_core import canonical_code
from treeirr.indices import (
    albertson,
    compute_bundle,
    forgotten_edgewise,
    general_albertson,
    sigma,
    total_albertson,
    total_albertson_sorted_formula,
)


@pytest.fixture
def report_line(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def _cli(argv: list[str], stdin: str | None = None, monkeypatch=None) -> tuple[int, str]:
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    return run(argv, stdout=out), out.getvalue()


@pytest.fixture(scope="module")
def harness_runs(tmp_path_factory):
    """Two identical single-worker runs of the full claim harness."""
    runs = []
    for i in range(2):
        target = tmp_path_factory.mktemp(f"run{i}") / "report.json"
        start = time.perf_counter()
        code, _ = _cli(["check-claims", "--n-min", "4", "--n-max", "9", "--seed", "0",
                        "--workers", "1", "--report", str(target)])
        runs.append((code, json.loads(target.read_text()), time.perf_counter() - start))
    return runs


def test_criterion_1_family_closed_forms(report_line):
    start = time.perf_counter()
    bad = []
    for n in range(3, 65):
        s, p = star(n), path(n)
        if albertson(s) != (n - 1) * (n - 2):
            bad.append(("irr(S_n)", n))
        if sigma(s) != (n - 1) * (n - 2) ** 2:
            bad.append(("sigma(S_n)", n))
        if not albertson(p) == sigma(p) == 2:
            bad.append(("irr/sigma(P_n)", n))
        if total_albertson(p) != 2 * (n - 2):
            bad.append(("irr_t(P_n)", n))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    report_line(1, ok, f"star/path closed forms for 3 <= n <= 64, {len(bad)} mismatches, {elapsed:.3f} s")
    assert ok, bad


def test_criterion_2_enumeration_matches_prufer_oracle(report_line):
    start = time.perf_counter()
    ours, oracle = [], []
    for n in range(2, 10):
        ours.append(sum(1 for _ in free_trees(n)))
        oracle.append(labeled_trees_oracle(n).classes)
    elapsed = time.perf_counter() - start
    ok = ours == oracle == [1, 1, 2, 3, 6, 11, 23, 47] and elapsed < 60
    report_line(2, ok, f"free_trees {ours} vs Prüfer oracle {oracle}, {elapsed:.1f} s")
    assert ok


def test_criterion_3_index_identities(report_line):
    violations, checked = [], 0
    for n in range(2, 10):
        for t in free_trees(n):
            checked += 1
            b = compute_bundle(t)
            d = t.degrees
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            if general_albertson(t, 1) != b.irr:
                violations.append(("irr_1", t))
            if not math.isclose(general_albertson(t, 2) ** 2, b.sigma, rel_tol=1e-9, abs_tol=1e-12):
                violations.append(("irr_2^2", t))
            pair_abs = sum(abs(d[u] - d[v]) for u, v in pairs)
            if not pair_abs == b.irr_t == total_albertson_sorted_formula(DegreeSequence(d)):
                violations.append(("irr_t", t))
            if b.sigma_t != sum((d[u] - d[v]) ** 2 for u, v in pairs):
                violations.append(("sigma_t", t))
            if b.forgotten != forgotten_edgewise(t):
                violations.append(("F", t))
    ok = not violations
    report_line(3, ok, f"identity suite over {checked} trees (2 <= n <= 9), {len(violations)} violations")
    assert ok, violations[:5]


def test_criterion_4_sandwich_invariants(report_line):
    start = time.perf_counter()
    cfg = EvalConfig(4, 10, 0)
    c31 = evaluate_claim("C31", cfg)
    c2 = evaluate_claim("C2", cfg)
    elapsed = time.perf_counter() - start
    ok = c31.fails == 0 and c2.fails == 0 and c31.holds == c31.domain_size and elapsed < 30
    report_line(4, ok, f"C31 fails={c31.fails}/{c31.domain_size}, C2 fails={c2.fails}/{c2.domain_size} "
                       f"(4 <= n <= 10), {elapsed:.1f} s")
    assert ok


def test_criterion_5_extremal_identification(report_line):
    problems = []
    for n in range(4, 11):
        hi = extremal(n, "irr", "max")
        if not (hi.exhaustive and hi.value == (n - 1) * (n - 2) and hi.n_optimal == 1
                and canonical_code(hi.witness) == canonical_code(star(n))):
            problems.append(("max", n))
        lo = extremal(n, "irr", "min")
        if not (lo.exhaustive and lo.value == 2 and albertson(path(n)) == 2):
            problems.append(("min", n))
    ok = not problems
    report_line(5, ok, f"unique star maximum and min irr = 2 for 4 <= n <= 10, problems={problems}")
    assert ok


def test_criterion_6_claim_harness(report_line, harness_runs):
    code, doc, elapsed = harness_runs[0]
    claims = {c["id"]: c for c in doc["claims"]}
    rechecked = failed_rechecks = 0
    for cid, c in claims.items():
        for record in c["counterexamples"]:
            rechecked += 1
            if recheck_counterexample(cid, record).status != "fail":
                failed_rechecks += 1
    c9 = claims["C9"]
    star6 = [r for r in c9["counterexamples"]
             if r["free_vars"].get("n") == 6 and r["values"] == {"left": 80, "right": 20}]
    ok = (code == 0 and len(claims) == 31 and failed_rechecks == 0 and c9["fails"] >= 1
          and bool(star6) and claims["C5"]["fails"] == 0 and claims["C8"]["fails"] == 0
          and elapsed < 300)
    report_line(6, ok, f"31 verdicts={len(claims) == 31}, {rechecked} counterexamples re-verified "
                       f"({failed_rechecks} did not), C9 fails={c9['fails']} incl. S_6 80 > 20: "
                       f"{bool(star6)}, C5 fails={claims['C5']['fails']}, C8 fails={claims['C8']['fails']}, "
                       f"{elapsed:.1f} s")
    assert ok


def test_criterion_7_fibonacci_record(report_line, monkeypatch, harness_runs):
    values = []
    for _ in range(2):
        code, g6 = _cli(["gen", "fib", "--n", "10", "--fib-convention", "paper"])
        assert code == 0
        code, out = _cli(["indices"], stdin=g6, monkeypatch=monkeypatch)
        assert code == 0
        values.append(json.loads(out)["irr"])
    rec = next(c for c in harness_runs[0][1]["claims"] if c["id"] == "C11")["reported"]
    ok = (values[0] == values[1] == rec["computed_value"] and rec["reported_value"] == 12319
          and rec["match"] is (rec["computed_value"] == 12319)
          and set(rec["conventions"]) == {"paper", "standard"})
    report_line(7, ok, f"computed irr={values[0]} (reproducible: {values[0] == values[1]}), "
                       f"reported_value={rec['reported_value']}, match={rec['match']}")
    assert ok


def test_criterion_8_determinism(report_line, harness_runs):
    (_, a, _), (_, b, _) = harness_runs
    same = json.dumps(a["claims"]).encode() == json.dumps(b["claims"]).encode()
    ok = same and {k: v for k, v in a.items() if k != "wall_time_s"} == {
        k: v for k, v in b.items() if k != "wall_time_s"}
    report_line(8, ok, f"two identical check-claims runs give byte-identical verdict arrays: {same}")
    assert ok
