import io

import pytest

from fields import rationals, prime_field, make_rng
from verify_module import (SUITES, MINIMUM_TRIALS, WEIGHT_ZERO, AnchorResult,
                           anchor_names, run_suite, summary_lines,
                           random_context, random_triangular, mutate,
                           coproduct_golden, clybe_golden)
from latex_table import MakeLatexTable, escape


@pytest.mark.parametrize("suite", ["operators", "yang-baxter"])
def test_fast_suites_pass(suite):
    results = run_suite(suite, seed=0, trials=3, enforce_minimum=False)
    assert results
    assert all(res.suite == suite for res in results)
    assert [res for res in results if not res.passed] == []


@pytest.mark.slow
@pytest.mark.parametrize("suite", SUITES)
def test_full_suites_pass(suite):
    results = run_suite(suite, seed=0)
    assert [res for res in results if not res.passed] == []
    details = {res.anchor: res.detail for res in results}
    if suite == "bialgebras":
        assert details["bialgebra-equivalence"] == "200 fixtures"
        assert details["bialgebra-equivalence" + WEIGHT_ZERO] == \
            "200 fixtures"
    if suite == "yang-baxter":
        assert details["coboundary-equivalence"] == "100 fixtures"
        assert details["o-operator-lift"] == "50 fixtures"


def test_suite_is_reproducible():
    first = run_suite("operators", seed=4, trials=2, enforce_minimum=False)
    second = run_suite("operators", seed=4, trials=2, enforce_minimum=False)
    assert first == second


def test_anchor_names():
    assert anchor_names("yang-baxter") == [
        "coproduct-goldens", "clybe-defect",
        "coboundary-equivalence", "coboundary-equivalence-weight-zero",
        "intertwining-transpose", "intertwining-transpose-weight-zero",
        "o-operator-lift", "o-operator-lift-weight-zero",
        "o-operator-bialgebra", "o-operator-bialgebra-weight-zero"]
    assert "beta-admissible-dual" in anchor_names("operators")


def test_minimum_trials():
    assert MINIMUM_TRIALS["bialgebra-equivalence"] == 200
    assert MINIMUM_TRIALS["coboundary-equivalence"] == 100
    assert MINIMUM_TRIALS["o-operator-lift"] == 50
    assert MINIMUM_TRIALS["o-operator-bialgebra"] == 50
    for name in ("induced-bracket", "dual-representation",
                 "beta-admissible-dual", "adjoint-admissible-dual",
                 "double-adjoint", "quadratic-swap", "intertwining-transpose"):
        assert MINIMUM_TRIALS[name] == 100
        assert MINIMUM_TRIALS[name + WEIGHT_ZERO] == 100


def test_every_sweep_reruns_at_weight_zero():
    sweeps = ["induced-bracket", "dual-representation", "beta-admissible-dual",
              "adjoint-admissible-dual", "semidirect-reynolds",
              "bialgebra-equivalence", "double-adjoint", "quadratic-swap",
              "coboundary-equivalence", "intertwining-transpose",
              "o-operator-lift", "o-operator-bialgebra"]
    names = [name for suite in SUITES for name in anchor_names(suite)]
    assert [name for name in names if name.endswith(WEIGHT_ZERO)] == \
        [name + WEIGHT_ZERO for name in sweeps]


@pytest.mark.slow
def test_trials_are_raised_to_the_minimum():
    results = run_suite("yang-baxter", seed=2, trials=1)
    details = {res.anchor: res.detail for res in results}
    assert details["coboundary-equivalence"] == "100 fixtures"
    results = run_suite("yang-baxter", seed=2, trials=1, enforce_minimum=False)
    details = {res.anchor: res.detail for res in results}
    assert details["coboundary-equivalence"] == "1 fixtures"


def test_empty_bialgebra_sweep_fails():
    results = run_suite("yang-baxter", trials=0, enforce_minimum=False)
    assert [res.anchor for res in results if not res.passed] == [
        "o-operator-bialgebra", "o-operator-bialgebra-weight-zero"]


def test_bialgebra_sweep_checks_fixtures():
    results = run_suite("yang-baxter", seed=5, trials=8, enforce_minimum=False)
    details = {res.anchor: res for res in results}
    for name in ("o-operator-bialgebra", "o-operator-bialgebra" + WEIGHT_ZERO):
        assert details[name].passed
        assert not details[name].detail.startswith("0 ")


def test_summary_lines():
    results = [AnchorResult("operators", "bracket", True, "ok"),
               AnchorResult("classification", "pair-enumeration", False, "x")]
    assert summary_lines(results) == [
        "suite anchor result",
        "operators bracket pass",
        "classification pair-enumeration FAIL"]


def test_latex_table():
    out = io.StringIO()
    MakeLatexTable(["suite anchor result", "operators reynolds_count pass",
                    "", "yang-baxter clybe"], out)
    text = out.getvalue()
    assert "\\usepackage{booktabs}" in text
    assert "\\begin{tabular}{lll}" in text
    assert text.index("\\toprule") < text.index("\\midrule") < \
        text.index("\\bottomrule")
    assert "reynolds\\_count" in text
    assert escape("50%") == "50\\%"


def test_fixtures_are_reproducible():
    F5 = prime_field(5)
    a = random_context(F5, make_rng(8))
    b = random_context(F5, make_rng(8))
    assert (a.R == b.R).all() and a.lam == b.lam
    ctx, S, r = random_triangular(F5, make_rng(8), lam_value=0)
    assert ctx.lam == 0
    assert (r == r.T).all()


def test_mutate_changes_one_entry():
    F5 = prime_field(5)
    M = F5.zeros((2, 2))
    changed = mutate(F5, make_rng(1), M)
    assert sum(1 for v in changed.flat if v) == 1
    assert not any(M.flat)


def test_goldens():
    Q = rationals()
    d = coproduct_golden("A2-II", Q, Q.convert(2), Q.one)
    assert d[0, 0, 1] == 2 and d[1, 1, 0] == -2
    assert clybe_golden(Q)[0, 1, 1] == -2


def test_unknown_suite_is_rejected():
    with pytest.raises(KeyError):
        run_suite("everything")


def test_suite_names():
    assert SUITES == ("operators", "bialgebras", "yang-baxter",
                      "classification")
