"""The twelve acceptance criteria, run on the default panel at zero tolerance.

The whole default panel is executed once (n in {1, 2}, k <= 4, base degree
<= 3, 25 trials, delta in {1, 1/2, -1/3, 7/5}); each criterion then reads
the checks it owns and prints one PASS/FAIL line.
"""

from fractions import Fraction

import pytest

from contactsym.decomposition import singular_set
from contactsym.suites import SuiteConfig, run_suite

F = Fraction


@pytest.fixture(scope="module")
def report():
    cfg = SuiteConfig()
    assert cfg.n_list == (1, 2) and cfg.k_max == 4 and cfg.base_deg == 3 and cfg.trials == 25
    assert cfg.deltas == (F(1), F(1, 2), F(-1, 3), F(7, 5))
    return run_suite(cfg)


def _judge(report, capsys, number, title, ids, extra=True):
    rows = [c for c in report.checks if c.id in ids]
    missing = set(ids) - {c.id for c in rows}
    failed = [c for c in rows if c.status == "fail"]
    # skips are only legitimate at singular weights
    bad_skips = [c for c in rows if c.status == "skip" and not c.detail.startswith("singular weight")]
    ok = bool(rows) and not missing and not failed and not bad_skips and extra
    skipped = sum(c.status == "skip" for c in rows)
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} "
              f"({len(rows) - skipped} cells passed, {skipped} singular skips)")
    assert not missing, missing
    assert not failed, [(c.id, c.params, c.detail, c.counterexample) for c in failed]
    assert not bad_skips
    assert ok


def test_01_sl2_relations(report, capsys):
    _judge(report, capsys, 1, "sl(2) relations", {"sl2.relations", "sl2.proof_commutators"})


def test_02_power_commutators(report, capsys):
    _judge(report, capsys, 2, "power commutators for 1 <= l <= k+1", {"powers.commutators"})


def test_03_i_alpha_invariance(report, capsys):
    _judge(report, capsys, 3, "i(alpha) commutes with contact fields", {"invariance.i_alpha"})


def test_04_X_invariance(report, capsys):
    rows = [c for c in report.checks if c.id == "invariance.X_sp"]
    counts = all(c.detail.startswith(f"{10 if c.params['n'] == 1 else 21} generators") for c in rows)
    _judge(report, capsys, 4, "X commutes with sp(2n+2)", {"invariance.X_sp"}, counts)


def test_05_non_invariance_witness(report, capsys):
    rows = [c for c in report.checks if c.id == "invariance.X_not_contact"]
    ks = {(c.params["n"], c.params["k"]) for c in rows if c.status == "pass"}
    full = ks == {(n, k) for n in (1, 2) for k in range(5)}
    _judge(report, capsys, 5, "X(q1^3) breaks X-invariance for k >= 1 only",
           {"invariance.X_not_contact"}, full)


def test_06_projector_laws(report, capsys):
    rows = [c for c in report.checks if c.id == "projector.laws"]
    # every regular (n, k, delta) cell must actually have run
    regular = all(c.status == "pass" or F(c.params["delta"]) in singular_set(c.params["k"], c.params["n"])
                  for c in rows)
    _judge(report, capsys, 6, "projector laws and worked values",
           {"projector.laws", "projector.worked_values", "projector.raises_on_singular"}, regular)


def test_07_section_law(report, capsys):
    sets_ok = (singular_set(1, 1) == {0} and singular_set(1, 2) == {0}
               and singular_set(2, 1) == {F(-1, 4), F(-1, 2)}
               and singular_set(3, 1) == {F(-1, 2), F(-3, 4), F(-1)})
    _judge(report, capsys, 7, "section law and singular-weight errors",
           {"section.right_inverse", "section.raises_on_singular", "section.surjectivity",
            "singular.errors"}, sets_ok)


def test_08_decomposition_round_trip(report, capsys):
    _judge(report, capsys, 8, "decomposition round trip and c-scalar law",
           {"decomposition.round_trip", "decomposition.raises_on_singular"})


def test_09_filtration(report, capsys):
    _judge(report, capsys, 9, "filtration maps, graded inverse, split by rank",
           {"filtration.graded_maps", "filtration.split"})


def test_10_contact_splitting(report, capsys):
    n1 = any(c.id == "splitting.vector_fields" and c.params == {"n": 1} and c.status == "pass"
             for c in report.checks)
    _judge(report, capsys, 10, "vector fields split into contact + tangent parts",
           {"splitting.vector_fields"}, n1)


def test_11_algebra_sanity(report, capsys):
    _judge(report, capsys, 11, "sp generators, closure, sp inside sl, counts",
           {"algebra.alpha_nondegenerate", "algebra.sp_generators", "algebra.sp_closure",
            "algebra.sp_in_sl", "contact.hamiltonian_fields"})


def test_12_oracle(report, capsys):
    _judge(report, capsys, 12, "X on densities vs Hamiltonian vs Lagrange bracket",
           {"oracle.X_on_densities", "oracle.hamiltonian_from_bracket",
            "contact.lagrange_invariance"})


def test_whole_report_clean(report):
    assert report.ok
    for c in report.checks:
        assert c.status != "skip" or c.detail.startswith("singular weight")
