import json
from fractions import Fraction

import pytest

from contactsym.suites import CHECKS, SUITES, SuiteConfig, plan, run_cell, run_suite
from contactsym.symbolfile import parse_symbol

SMALL = SuiteConfig(n_list=(1,), k_max=2, trials=3, base_deg=2)


def test_every_suite_has_checks():
    assert {c.suite for c in CHECKS.values()} == set(SUITES)


def test_small_panel_passes():
    report = run_suite(SMALL)
    assert report.ok, [(c.id, c.params, c.detail) for c in report.failed]
    assert report.summary()["pass"] == len(report.checks)


def test_report_is_deterministic():
    a = run_suite(SMALL).to_json(timing=False)
    b = run_suite(SMALL).to_json(timing=False)
    assert a == b
    other = run_suite(SuiteConfig(n_list=(1,), k_max=2, trials=3, base_deg=2, seed=7))
    assert json.loads(a)["summary"] == json.loads(other.to_json())["summary"]


def test_parallel_matches_serial():
    cfg = SuiteConfig(n_list=(1,), k_max=1, trials=2, suites=("sl2", "projector"))
    par = SuiteConfig(n_list=(1,), k_max=1, trials=2, suites=("sl2", "projector"), jobs=2)
    assert run_suite(cfg).to_json(timing=False) == run_suite(par).to_json(timing=False)


def test_singular_weight_is_skipped_with_error_check():
    cfg = SuiteConfig(n_list=(1,), k_max=1, deltas=(Fraction(0),), trials=2, suites=("projector",))
    rows = {(c.id, c.status) for c in run_suite(cfg).checks}
    assert ("projector.laws", "skip") in rows
    assert ("projector.raises_on_singular", "pass") in rows
    skip = next(c for c in run_suite(cfg).checks if c.status == "skip")
    assert skip.detail.startswith("singular weight")


def test_corrupted_coefficients_fail_idempotence():
    cfg = SuiteConfig(n_list=(1,), k_max=1, deltas=(Fraction(1),), trials=3,
                      suites=("projector",), corrupt_b=True)
    report = run_suite(cfg)
    bad = [c for c in report.failed if c.id == "projector.laws"]
    assert bad and "p_k(p_k(u)) != p_k(u)" in bad[0].detail
    witness = parse_symbol(bad[0].counterexample)
    assert witness.grading == "R" and witness.weight == 1


def test_plan_rejects_unknown_suite():
    with pytest.raises(ValueError):
        plan(SuiteConfig(suites=("nope",)))


def test_singular_suite_covers_I_k():
    cfg = SuiteConfig(n_list=(1, 2), k_max=4, suites=("singular",))
    report = run_suite(cfg)
    assert report.ok and len(report.checks) == 8
    r = run_cell(cfg, "singular.errors", {"n": 1, "k": 3})
    assert "-1, -3/4, -1/2" in r.detail
