from fractions import Fraction

import pytest

from dcsums import (
    ParamGrid,
    get_check,
    registry_ids,
    report_to_csv,
    report_to_json,
    run_check,
    sweep,
)

import oracles

EXPECTED_IDS = {
    "eq7_printed",
    "eq7_corrected",
    "eq10",
    "eq11",
    "eq12_13_printed",
    "eq12_13_corrected",
    "lemma1_printed",
    "lemma1_corrected",
    "thm2_printed",
    "thm2_slt",
    "thm3",
    "cor4",
    "prop5",
    "thm6",
    "thm7",
    "thm8_periodic",
    "thm8_poly",
    "thm9",
    "dedekind_recip",
}


def test_registry_contents():
    assert set(registry_ids()) == EXPECTED_IDS
    for check_id in registry_ids():
        check = get_check(check_id)
        assert check.id == check_id
        assert check.param_names


def test_unknown_id_rejected():
    with pytest.raises(ValueError):
        get_check("thm42")
    with pytest.raises(ValueError):
        run_check("thm42", {"p": 3})


def test_run_check_validates_param_names():
    with pytest.raises(ValueError):
        run_check("thm9", {"p": 3, "h": 1})
    with pytest.raises(ValueError):
        run_check("lemma1_printed", {"p": 1, "m": 3})


def test_reciprocity_instance_holds_exactly():
    result = run_check("thm8_periodic", {"p": 3, "h": 1, "k": 3})
    assert result.lhs == Fraction(13, 2)
    assert result.rhs == Fraction(13, 2)
    assert result.residual == 0
    assert result.holds and not result.skipped


def test_known_residuals_reproduce():
    result = run_check("lemma1_printed", {"p": 1})
    assert (result.lhs, result.rhs, result.residual) == (
        Fraction(1, 12),
        Fraction(0),
        Fraction(1, 12),
    )

    result = run_check("thm9", {"p": 3, "h": 1, "k": 1})
    assert (result.lhs, result.rhs) == (Fraction(0), Fraction(7, 4))
    assert result.residual == Fraction(-7, 4)

    result = run_check("eq7_printed", {"n": 2, "l": 1})
    assert (result.lhs, result.rhs) == (Fraction(-2), Fraction(1))
    assert result.residual == Fraction(-3)
    assert result.rhs - result.lhs == 3


def test_hypothesis_violations_are_skips_not_failures():
    result = run_check("thm9", {"p": 2, "h": 1, "k": 3})  # even p
    assert result.skipped and not result.holds
    assert result.lhs is None and result.rhs is None and result.residual is None

    result = run_check("dedekind_recip", {"h": 2, "k": 4})  # not coprime
    assert result.skipped

    result = run_check("eq11", {"p": 3, "m": 4})  # even modulus
    assert result.skipped


def test_thm2_printed_is_marginal_only_at_s_equal_p_plus_one():
    result = run_check("thm2_printed", {"p": 3, "s": 4})
    assert (result.lhs, result.rhs) == (Fraction(1), Fraction(0))
    assert not result.holds
    result = run_check("thm2_printed", {"p": 3, "s": 6})
    assert result.holds and result.lhs == 0  # both sides vanish

    for p in (3, 5, 7):
        for s in range(2, p, 2):
            assert run_check("thm2_slt", {"p": p, "s": s}).holds


def test_known_true_suite_holds_on_small_grid():
    grid = ParamGrid(
        p_values=(1, 3, 5, 7, 9, 11, 13),
        h_values=tuple(range(1, 8)),
        k_values=tuple(range(1, 8)),
        n_values=tuple(range(1, 13)),
        l_values=tuple(range(0, 9)),
        m_values=(1, 3, 5, 7),
        coprime_only=True,
    )
    report = sweep(
        ["eq10", "eq11", "eq7_corrected", "eq12_13_corrected", "lemma1_corrected",
         "dedekind_recip"],
        grid,
    )
    for check_id, counts in report.summary.items():
        assert counts["fail"] == 0, (check_id, counts)
        assert counts["pass"] > 0


def test_known_failures_pin_exact_residuals():
    # Residuals fixed by the independent oracles in tests/oracles.py.
    cases = [
        ("thm7", {"p": 3, "h": 3, "k": 5}, Fraction(-99)),
        ("thm8_poly", {"p": 3, "h": 3, "k": 5}, Fraction(1656)),
        ("thm3", {"p": 3, "m": 3}, Fraction(10, 27)),
        ("thm9", {"p": 3, "h": 1, "k": 3}, Fraction(93, 4)),
    ]
    for check_id, params, residual in cases:
        lhs, rhs = oracles.check_sides(check_id, params)
        assert lhs - rhs == residual
        result = run_check(check_id, params)
        assert result.residual == residual


def test_sweep_results_match_independent_oracles():
    grid = ParamGrid(
        p_values=(3, 5),
        h_values=(1, 2, 3, 5),
        k_values=(1, 3, 5),
        n_values=(1, 2, 5),
        l_values=(0, 1, 4),
        m_values=(1, 3, 5),
        s_values=(2, 4, 6),
    )
    report = sweep(sorted(EXPECTED_IDS), grid)
    checked = 0
    for result in report.results:
        if result.skipped:
            continue
        lhs, rhs = oracles.check_sides(result.id, result.params)
        assert result.lhs == lhs and result.rhs == rhs, result
        checked += 1
    assert checked > 100


def test_sweep_ordering_and_summary_consistency():
    grid = ParamGrid.from_maxima(pmax=3, hmax=4, kmax=4, nmax=4, lmax=2, mmax=3, smax=4)
    report = sweep(["dedekind_recip", "eq7_corrected", "thm9"], grid)
    keys = [(r.id, tuple(r.params.values())) for r in report.results]
    assert keys == sorted(keys)
    tallies = {check_id: {"pass": 0, "fail": 0, "skip": 0} for check_id in report.summary}
    for r in report.results:
        bucket = "skip" if r.skipped else ("pass" if r.holds else "fail")
        tallies[r.id][bucket] += 1
        if not r.skipped:
            assert r.holds == (r.residual == 0)
    assert tallies == report.summary


def test_empty_sweep():
    report = sweep([], ParamGrid.from_maxima(pmax=2))
    assert report.results == ()
    assert report.summary == {}


def test_grid_filters():
    grid = ParamGrid.from_maxima(hmax=6, kmax=6, mmax=8, odd_only=True, coprime_only=True)
    assert grid.values_for("h") == (1, 3, 5)
    assert grid.values_for("m") == (1, 3, 5, 7)
    pairs = [(p["h"], p["k"]) for p in grid.iter_params(("h", "k"))]
    assert (3, 3) not in pairs
    assert (3, 5) in pairs
    assert all(h % 2 == 1 and k % 2 == 1 for h, k in pairs)


def test_sweep_is_deterministic_and_parallel_safe():
    grid = ParamGrid.from_maxima(pmax=5, hmax=5, kmax=5, odd_only=True, coprime_only=True)
    ids = ["thm8_periodic", "thm9", "dedekind_recip"]
    serial_json = report_to_json(sweep(ids, grid))
    again_json = report_to_json(sweep(ids, grid))
    threaded_json = report_to_json(sweep(ids, grid, max_workers=4))
    assert serial_json == again_json == threaded_json
    serial_csv = report_to_csv(sweep(ids, grid))
    assert serial_csv == report_to_csv(sweep(ids, grid, max_workers=2))
