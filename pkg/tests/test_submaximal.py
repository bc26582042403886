import numpy as np
import pytest

from orbit_atlas import (
    CASES,
    case_bloch,
    case_predictions,
    case_state,
    gram_closed_form,
    gram_direct,
    local_orbit_dim,
    orbit_dim_oracle,
    sample_params,
    swap_sides,
    validate_density,
    verify_case,
    verify_cases,
)

EXACT_CASES = (1, 2, 3, 5, 8, 9)
REGISTRY_CORANKS = {1: 6, 2: 4, 3: 3, 4: 2, 5: 2, 6: 1, 7: 1, 8: 1, 9: 1}


def test_registry_coranks():
    assert {cid: spec.corank for cid, spec in CASES.items()} == REGISTRY_CORANKS


@pytest.mark.parametrize("cid", sorted(CASES))
def test_sampled_states_are_valid(cid):
    for params in sample_params(cid, 5, seed=50 + cid):
        validate_density(case_state(cid, params), tol=1e-10)


@pytest.mark.parametrize("cid", sorted(CASES))
def test_sampled_states_attain_registered_corank(cid):
    for params in sample_params(cid, 5, seed=60 + cid):
        rep = gram_direct(case_state(cid, params))
        assert 6 - rep.rank == CASES[cid].corank


@pytest.mark.parametrize("cid", EXACT_CASES)
def test_exact_cases_match_all_formulas(cid):
    for params in sample_params(cid, 25, seed=70 + cid):
        v = verify_case(cid, params)
        assert v.matches(1e-9), (cid, params, v.residuals())


def test_case4_flags_only_the_xi_formula():
    worst = {"gram_eig": 0.0, "w_eig": 0.0, "pt_eig": 0.0, "xi": 0.0, "concurrence": 0.0}
    for params in sample_params(4, 25, seed=74):
        v = verify_case(4, params)
        assert v.corank_match and v.separability_match
        for key, val in v.residuals().items():
            worst[key] = max(worst[key], val)
    assert worst["xi"] > 1e-4
    for key in ("gram_eig", "w_eig", "pt_eig", "concurrence"):
        assert worst[key] <= 1e-9


def test_case6_flags_only_the_xi_formula():
    worst_xi, rest = 0.0, 0.0
    for params in sample_params(6, 25, seed=76):
        v = verify_case(6, params)
        assert v.corank_match and v.separability_match
        worst_xi = max(worst_xi, v.xi_residual)
        rest = max(rest, v.gram_eig_residual, v.w_eig_residual, v.pt_eig_residual,
                   v.concurrence_residual or 0.0)
    assert worst_xi > 1e-4
    assert rest <= 1e-9


def test_case7_flags_gram_and_xi_formulas():
    worst = {"gram_eig": 0.0, "xi": 0.0, "w_eig": 0.0, "pt_eig": 0.0}
    for params in sample_params(7, 25, seed=77):
        v = verify_case(7, params)
        assert v.corank_match and v.separability_match
        assert v.concurrence_residual is None
        worst["gram_eig"] = max(worst["gram_eig"], v.gram_eig_residual)
        worst["xi"] = max(worst["xi"], v.xi_residual)
        worst["w_eig"] = max(worst["w_eig"], v.w_eig_residual)
        worst["pt_eig"] = max(worst["pt_eig"], v.pt_eig_residual)
    assert worst["gram_eig"] > 1e-4
    assert worst["xi"] > 1e-4
    assert worst["w_eig"] <= 1e-9
    assert worst["pt_eig"] <= 1e-9


@pytest.mark.parametrize("cid", sorted(CASES))
def test_direct_numerics_self_consistency(cid):
    # closed Gram form and rank oracle must agree on every family, typo or not
    for params in sample_params(cid, 5, seed=80 + cid):
        w = case_state(cid, params)
        f = case_bloch(cid, params)
        direct = gram_direct(w)
        closed = gram_closed_form(f)
        np.testing.assert_allclose(closed.matrix, direct.matrix, atol=1e-10)
        assert local_orbit_dim(direct) == orbit_dim_oracle(w)


@pytest.mark.parametrize("cid", (2, 6))
def test_swapped_variants_preserve_orbit_dimension(cid):
    for params in sample_params(cid, 5, seed=90 + cid):
        f = case_bloch(cid, params)
        swapped = gram_closed_form(swap_sides(f))
        original = gram_closed_form(f)
        assert swapped.rank == original.rank
        np.testing.assert_allclose(swapped.spectrum, original.spectrum, atol=1e-10)


def test_verify_cases_report_structure():
    rep = verify_cases(case_ids=[1, 4], samples=5, seed=3, tol=1e-9)
    assert set(rep) == {"seed", "samples", "tol", "cases", "all_match"}
    assert rep["all_match"] is False
    one, four = rep["cases"]["1"], rep["cases"]["4"]
    assert one["all_match"] is True and one["typo_candidates"] == []
    assert four["all_match"] is False and four["typo_candidates"] == ["xi"]
    assert len(one["points"]) == 5
    point = four["points"][0]
    assert set(point) == {"params", "residuals", "corank_match", "separability_match"}
    # case 1 has no parameters: every residual is exactly zero
    assert all(v == 0.0 for v in one["max_residuals"].values())


def test_verify_cases_is_seed_reproducible():
    a = verify_cases(case_ids=[5], samples=4, seed=12)
    b = verify_cases(case_ids=[5], samples=4, seed=12)
    assert a == b


def test_unknown_case_rejected():
    with pytest.raises(ValueError):
        case_bloch(10, {})
    with pytest.raises(ValueError):
        sample_params(0, 1)
    with pytest.raises(ValueError):
        verify_cases(case_ids=[1, 11], samples=1)


def test_case_predictions_shapes():
    params = sample_params(8, 1, seed=99)[0]
    pred = case_predictions(8, params)
    assert pred.gram_eigs.shape == (6,)
    assert pred.w_eigs.shape == (4,)
    assert pred.pt_eigs.shape == (4,)
    assert pred.xi.shape == (4,)
    assert pred.concurrence is None
    assert pred.separability in {"entangled", None}
