"""Tests for generator families, expansions, evaluation, and the Cayley bridge."""

import math

import numpy as np
import pytest

from schwarzlab.families import (
    B2Extremal,
    CayleyOfSchwarz,
    FiniteBlaschke,
    HerglotzAtoms,
    InvalidGeneratorError,
    InverseCayley,
    MonomialRotation,
    cayley_from_schwarz,
    evaluate_caratheodory,
    evaluate_schwarz,
    expand_caratheodory,
    expand_schwarz,
    harmonic_boundary_atoms,
    inverse_cayley,
    sample_herglotz,
    sample_schwarz,
)
from schwarzlab.series import CompositionDomainError, TruncatedSeries

from oracles import cayley_oracle, division_oracle

# Hand-derived expansion of (0.5 z - z^2)/(1 - 0.5 z): multiply the
# numerator by the geometric series in 0.5 z.
EXTREMAL_HALF_PI = np.array([0.0, 0.5, -0.75, -0.375, -0.1875])


def test_cayley_of_rotation_is_all_twos():
    w = TruncatedSeries.identity(6)
    p = cayley_from_schwarz(w, 0.0)
    assert np.allclose(p.coeffs, [1, 2, 2, 2, 2, 2, 2], atol=1e-15)


def test_cayley_of_zero_is_one():
    p = cayley_from_schwarz(TruncatedSeries.zero(5), 1.3)
    assert np.array_equal(p.coeffs, TruncatedSeries.constant(1.0, 5).coeffs)


def test_cayley_worked_example_against_division_oracle():
    w = TruncatedSeries(EXTREMAL_HALF_PI)
    p = cayley_from_schwarz(w, 0.0)
    want = cayley_oracle(EXTREMAL_HALF_PI, 0.0)
    assert np.max(np.abs(p.coeffs - want)) < 1e-14
    assert np.allclose(p.coeffs, [1, 1, -1, -2, -1], atol=1e-14)


def test_cayley_rejects_nonzero_constant():
    with pytest.raises(CompositionDomainError):
        cayley_from_schwarz(TruncatedSeries.constant(0.5, 4), 0.0)


def test_inverse_cayley_of_all_twos_is_z():
    p = cayley_from_schwarz(TruncatedSeries.identity(8), 0.0)
    w = inverse_cayley(p, 0.0)
    assert np.allclose(w.coeffs, TruncatedSeries.identity(8).coeffs, atol=1e-14)


def test_inverse_cayley_of_constant_one_is_zero():
    w = inverse_cayley(TruncatedSeries.constant(1.0, 6), 0.7)
    assert np.max(np.abs(w.coeffs)) < 1e-15


def test_inverse_cayley_requires_unit_constant():
    with pytest.raises(ValueError):
        inverse_cayley(TruncatedSeries.constant(2.0, 4), 0.0)


@pytest.mark.parametrize("theta", [0.0, 1.0, 2.0, math.pi])
def test_cayley_roundtrip_random_schwarz(theta):
    for idx, g in enumerate(sample_schwarz(seed=99, count=40, max_degree=6)):
        w = expand_schwarz(g, 12)
        back = inverse_cayley(cayley_from_schwarz(w, theta), theta)
        assert np.max(np.abs(back.coeffs - w.coeffs)) < 1e-12, f"sample {idx}"


class TestExpandSchwarz:
    def test_extremal_half_hand_expansion(self):
        w = expand_schwarz(B2Extremal(b1=0.5, theta=math.pi), 4)
        assert np.max(np.abs(w.coeffs - EXTREMAL_HALF_PI)) < 1e-15

    def test_extremal_matches_division_oracle(self):
        b1 = 0.3 - 0.4j
        theta = 1.1
        rot = np.exp(1j * theta)
        num = np.array([0.0, b1, rot, 0.0, 0.0, 0.0])
        den = np.array([1.0, rot * np.conj(b1), 0.0, 0.0, 0.0, 0.0])
        want = division_oracle(num, den)
        got = expand_schwarz(B2Extremal(b1=b1, theta=theta), 5)
        assert np.max(np.abs(got.coeffs - want)) < 1e-14

    def test_extremal_unit_modulus_branch(self):
        b1 = np.exp(0.9j)
        w = expand_schwarz(B2Extremal(b1=complex(b1), theta=0.3), 4)
        want = np.zeros(5, dtype=complex)
        want[1] = b1 / abs(b1)
        assert np.max(np.abs(w.coeffs - want)) < 1e-15

    def test_extremal_zero_b1_collapses_to_z_squared(self):
        w = expand_schwarz(B2Extremal(b1=0.0, theta=0.0), 4)
        assert np.array_equal(w.coeffs, np.array([0, 0, 1, 0, 0], dtype=complex))

    def test_monomial(self):
        w = expand_schwarz(MonomialRotation(k=3, theta=0.0), 5)
        assert np.array_equal(w.coeffs, np.array([0, 0, 0, 1, 0, 0], dtype=complex))

    def test_monomial_beyond_order_is_zero(self):
        w = expand_schwarz(MonomialRotation(k=7, theta=0.4), 5)
        assert np.array_equal(w.coeffs, np.zeros(6, dtype=complex))

    def test_blaschke_equals_extremal_up_to_sign_convention(self):
        # z * (|a|/a)(a - z)/(1 - conj(a) z) at a = 0.5 is exactly the
        # b1 = 0.5, theta = pi member of the extremal family
        w = expand_schwarz(FiniteBlaschke(phi=0.0, m=1, zeros=(0.5,)), 4)
        assert np.max(np.abs(w.coeffs - EXTREMAL_HALF_PI)) < 1e-15

    def test_blaschke_zero_at_origin_is_extra_power(self):
        w1 = expand_schwarz(FiniteBlaschke(phi=0.2, m=2, zeros=()), 6)
        w2 = expand_schwarz(FiniteBlaschke(phi=0.2, m=1, zeros=(0.0,)), 6)
        assert np.array_equal(w1.coeffs, w2.coeffs)

    def test_constant_term_exactly_zero(self):
        for g in sample_schwarz(seed=5, count=50, max_degree=6):
            assert expand_schwarz(g, 12).coeffs[0] == 0

    def test_rotation_covariance(self):
        from schwarzlab.bounds import second_coefficient_bound, third_coefficient_bound

        g = FiniteBlaschke(phi=0.7, m=1, zeros=(0.3 + 0.2j, -0.5j))
        delta = 1.9
        shifted = FiniteBlaschke(phi=g.phi + delta, m=g.m, zeros=g.zeros)
        w = expand_schwarz(g, 10)
        ws = expand_schwarz(shifted, 10)
        assert np.max(np.abs(ws.coeffs - np.exp(1j * delta) * w.coeffs)) < 1e-12
        # modulus-based checks are blind to the rotation
        for check in (second_coefficient_bound, third_coefficient_bound):
            assert abs(check(w).slack - check(ws).slack) < 1e-12


class TestExpandCaratheodory:
    def test_single_atom_rotated(self):
        theta = 2 * math.pi / 5
        p = expand_caratheodory(HerglotzAtoms(((1.0, theta),)), 3)
        ks = np.arange(4)
        want = 2.0 * np.exp(1j * ks * theta)
        want[0] = 1.0
        assert np.max(np.abs(p.coeffs - want)) < 1e-14

    def test_single_atom_at_zero_is_all_twos(self):
        p = expand_caratheodory(HerglotzAtoms(((1.0, 0.0),)), 6)
        assert np.allclose(p.coeffs, [1, 2, 2, 2, 2, 2, 2], atol=1e-15)

    def test_two_symmetric_atoms(self):
        p = expand_caratheodory(HerglotzAtoms(((0.5, 0.0), (0.5, math.pi))), 4)
        # oracle: (1 + z^2)/(1 - z^2) expanded by long division
        want = division_oracle([1, 0, 1, 0, 0], [1, 0, -1, 0, 0])
        assert np.max(np.abs(p.coeffs - want)) < 1e-14
        assert np.allclose(p.coeffs, [1, 0, 2, 0, 2], atol=1e-14)

    def test_cayley_of_schwarz_generator(self):
        g = CayleyOfSchwarz(inner=MonomialRotation(k=1, theta=0.0), theta=0.0)
        p = expand_caratheodory(g, 5)
        assert np.allclose(p.coeffs, [1, 2, 2, 2, 2, 2], atol=1e-14)

    def test_constant_term_exactly_one_and_bounded(self):
        for g in sample_herglotz(seed=17, count=60):
            p = expand_caratheodory(g, 12)
            assert p.coeffs[0] == 1
            assert np.max(np.abs(p.coeffs[1:])) <= 2.0 + 1e-12


class TestValidation:
    def test_monomial_k_zero(self):
        with pytest.raises(InvalidGeneratorError):
            expand_schwarz(MonomialRotation(k=0, theta=0.0), 4)

    def test_extremal_b1_too_large(self):
        with pytest.raises(InvalidGeneratorError):
            expand_schwarz(B2Extremal(b1=1.5, theta=0.0), 4)

    def test_blaschke_m_zero(self):
        with pytest.raises(InvalidGeneratorError):
            expand_schwarz(FiniteBlaschke(phi=0.0, m=0, zeros=()), 4)

    def test_blaschke_zero_too_close_to_boundary(self):
        with pytest.raises(InvalidGeneratorError):
            expand_schwarz(FiniteBlaschke(phi=0.0, m=1, zeros=(0.99,)), 4)

    def test_herglotz_empty(self):
        with pytest.raises(InvalidGeneratorError):
            expand_caratheodory(HerglotzAtoms(()), 4)

    def test_herglotz_bad_weight_sum(self):
        with pytest.raises(InvalidGeneratorError):
            expand_caratheodory(HerglotzAtoms(((0.5, 0.0), (0.6, 1.0))), 4)

    def test_herglotz_nonpositive_weight(self):
        with pytest.raises(InvalidGeneratorError):
            expand_caratheodory(HerglotzAtoms(((1.2, 0.0), (-0.2, 1.0))), 4)


class TestEvaluation:
    def test_monomial_closed_form(self):
        g = MonomialRotation(k=2, theta=0.0)
        z = np.array([0.5, 0.25j])
        assert np.allclose(evaluate_schwarz(g, z), z**2)

    def test_blaschke_evaluation_matches_series_tail(self):
        # closed form agrees with the order-12 expansion well inside the disk
        for g in sample_schwarz(seed=31, count=20, max_degree=4):
            w = expand_schwarz(g, 12)
            z = 0.1 * np.exp(1j * np.linspace(0.0, 2 * math.pi, 7, endpoint=False))
            direct = evaluate_schwarz(g, z)
            horner = np.polyval(w.coeffs[::-1], z)
            assert np.max(np.abs(direct - horner)) < 1e-12

    def test_schwarz_modulus_contraction_on_grid(self):
        radii = np.linspace(0.1, 0.9, 8)
        angles = np.exp(1j * np.linspace(0.0, 2 * math.pi, 8, endpoint=False))
        z = np.outer(radii, angles).ravel()
        for g in sample_schwarz(seed=13, count=60, max_degree=6):
            w = evaluate_schwarz(g, z)
            assert np.all(np.abs(w) <= np.abs(z) + 1e-9)

    def test_caratheodory_positive_real_part(self):
        z = 0.8 * np.exp(1j * np.linspace(0.0, 2 * math.pi, 16, endpoint=False))
        for g in sample_herglotz(seed=29, count=40):
            p = evaluate_caratheodory(g, z)
            assert np.all(p.real > 0)

    def test_inverse_cayley_generator_evaluates_into_disk(self):
        inner = HerglotzAtoms(((0.4, 0.1), (0.6, 2.0)))
        g = InverseCayley(inner=inner, theta=0.8)
        z = 0.7 * np.exp(1j * np.linspace(0.0, 2 * math.pi, 16, endpoint=False))
        w = evaluate_schwarz(g, z)
        assert np.all(np.abs(w) <= np.abs(z) + 1e-12)
        # the expansion agrees with the closed form at small radius
        series = expand_schwarz(g, 12)
        zs = 0.05 * np.exp(1j * np.linspace(0.0, 2 * math.pi, 5, endpoint=False))
        horner = np.polyval(series.coeffs[::-1], zs)
        assert np.max(np.abs(horner - evaluate_schwarz(g, zs))) < 1e-13


class TestSampling:
    def test_schwarz_determinism(self):
        a = sample_schwarz(seed=1, count=10, max_degree=5)
        b = sample_schwarz(seed=1, count=10, max_degree=5)
        assert a == b

    def test_schwarz_policy(self):
        gens = sample_schwarz(seed=2, count=1000, max_degree=6)
        assert len(gens) == 1000
        for g in gens:
            assert g.m in (1, 2)
            assert g.m + len(g.zeros) <= 6
            assert all(abs(a) <= 0.9 for a in g.zeros)

    def test_schwarz_coefficients_bounded(self):
        from schwarzlab.bounds import schwarz_coefficient_bounds

        for g in sample_schwarz(seed=3, count=100, max_degree=6):
            w = expand_schwarz(g, 12)
            assert all(rep.satisfied for rep in schwarz_coefficient_bounds(w))

    def test_herglotz_determinism_and_validity(self):
        a = sample_herglotz(seed=4, count=50)
        b = sample_herglotz(seed=4, count=50)
        assert a == b
        for g in a:
            assert 1 <= len(g.atoms) <= 8
            total = sum(w for w, _ in g.atoms)
            assert abs(total - 1.0) <= 1e-12


class TestHarmonicBoundaryAtoms:
    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("theta", [0.0, 2 * math.pi / 5])
    def test_harmonics_hit_the_boundary(self, k, theta):
        p = expand_caratheodory(harmonic_boundary_atoms(k, theta), 12)
        for j in range(1, 13):
            if j % k == 0:
                n = j // k
                assert abs(p[j] - 2 * np.exp(1j * n * theta)) < 1e-12
            else:
                assert abs(p[j]) < 1e-12
