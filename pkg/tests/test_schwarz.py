import cmath

import numpy as np
import pytest

import suites
import toepinv as t
from toepinv import DomainError, SchurParams


# ----------------------------------------------------------- closed form


def test_zero_params_give_zero_coeffs():
    assert t.schur_to_coeffs(SchurParams(0, 0, 0)) == (0, 0, 0)


def test_unimodular_gamma0_kills_higher_coeffs():
    c = t.schur_to_coeffs(SchurParams(1j, 0.5 + 0.25j, -0.8))
    assert c == (1j, 0, 0)


def test_rejects_params_outside_disk():
    with pytest.raises(DomainError):
        t.schur_to_coeffs(SchurParams(1.01, 0, 0))
    with pytest.raises(DomainError):
        t.schur_to_coeffs(SchurParams(0, 0, 1.5j))


def test_projects_roundoff_overshoot():
    g = SchurParams((1.0 + 5e-13) * cmath.exp(0.3j), 0, 0)
    c = t.schur_to_coeffs(g)
    assert abs(c.c1) <= 1.0 + 1e-15


def test_half_params_match_composition_oracle():
    closed = np.array(t.schur_to_coeffs(SchurParams(0.5, 0.5, 0.5)))
    taylor = np.array(t.coeffs_via_composition(SchurParams(0.5, 0.5, 0.5)))
    np.testing.assert_allclose(closed, taylor, atol=1e-12)


def test_oracle_agreement_on_samples():
    assert suites.oracle_agreement_worst(300) <= 1e-8


def test_body_invariant_on_samples():
    # |c1| <= 1 and |c2| <= 1 - |c1|^2 hold on the parametrized body
    assert suites.schwarz_body_invariant_worst(2000) <= 1e-12


# --------------------------------------------------------------- sampler


def test_sampler_is_deterministic():
    assert t.sample_params(1, 3) == t.sample_params(1, 3)


def test_sampler_prefix_consistency():
    # sample i depends only on (seed, i), not on the batch size
    assert t.sample_params(5, 10)[:4] == t.sample_params(5, 4)


def test_sampler_respects_invariants():
    for g in t.sample_params(1, 500):
        for gamma in g:
            assert abs(gamma) <= 1.0 + 1e-12


def test_sampler_boundary_fraction():
    params = t.sample_params(7, 100000)
    frac = sum(1 for g in params if abs(g.gamma0) > 0.99) / len(params)
    assert 0.15 <= frac <= 0.35
    assert frac >= 0.20


def test_sampler_rejects_bad_count():
    with pytest.raises(ValueError):
        t.sample_params(0, 0)


# ---------------------------------------------------------------- regions


@pytest.mark.parametrize(
    "mu, nu, tag",
    [
        (-14 / 3, 13 / 3, "D6"),
        (-10 / 3, 21.0, "D7"),
        (35 / 3, -33 / 2, "D4"),
        (22 / 9, -25 / 9, "D4"),
    ],
)
def test_region_membership_of_lemma_pairs(mu, nu, tag):
    hit = t.region_member(mu, nu)
    assert hit is not None and hit.tag == tag


def test_origin_is_in_no_region():
    assert t.region_member(0.0, 0.0) is None


def test_all_lemma_pairs_are_covered():
    for mu, nu in t.LEMMA_PAIRS:
        assert t.region_member(float(mu), float(nu)) is not None


def test_region_boundaries_are_closed():
    assert t.region_member(0.5, -1.0).tag == "D4"
    assert t.region_member(4.0, 2.0).tag == "D6"
    assert t.region_member(2.0, 1.0).tag == "D7"


# ------------------------------------------------------------- inequality


def test_ps_functional_at_zero():
    c = t.schur_to_coeffs(SchurParams(0, 0, 0))
    assert t.ps_functional(c, -14 / 3, 13 / 3) == 0.0


def test_ps_functional_equality_cases():
    ci = t.schur_to_coeffs(SchurParams(1j, 0, 0))
    assert t.ps_functional(ci, -14 / 3, 13 / 3) == pytest.approx(13 / 3, abs=1e-14)
    c1 = t.schur_to_coeffs(SchurParams(1, 0, 0))
    assert t.ps_functional(c1, 22 / 9, -25 / 9) == pytest.approx(25 / 9, abs=1e-14)


def test_lemma_fuzz_small():
    for mu, nu, observed in suites.lemma_fuzz_results(2000):
        assert observed <= abs(float(nu)) + 1e-10
