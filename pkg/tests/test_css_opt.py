import math

import numpy as np
import pytest

from wree.css_opt import (
    AngleParams,
    ConvergenceFailure,
    GeneralOracleConfig,
    ProductMixtureAnsatz,
    SeparableCandidate,
    css_from_angles,
    epsilon_monotonicity_probe,
    g_objective,
    minimize_g,
    ree_numeric_general,
    ree_numeric_restricted,
    verify_css,
)
from wree.qmat import DensityMatrix, DimensionMismatch, WrongDimension, relative_entropy
from wree.sampling import random_interior_xstate
from wree.xfamily import DegenerateInput, OutOfRange, XState, ree_closed_form

THIRD = 1 / 3
EQUAL_MIX = XState(THIRD, THIRD, 1.0 - 2 * THIRD)
EQUAL_MIX_VALUE = math.log(3.0) - (4.0 / 3.0) * math.log(2.0)


def vp_reference(lam: float) -> float:
    first = (1.0 - lam) * math.log(1.0 - lam) if lam < 1.0 else 0.0
    return first + (lam - 2.0) * math.log(1.0 - lam / 2.0)


class TestGObjective:
    def test_symmetric_point_value(self):
        # independent scalar evaluation at theta1 = theta2 = pi/4
        a = THIRD
        x = (math.cos(math.pi / 4) * math.cos(math.pi / 4)) ** 2  # = 1/4
        w = 2.0 * math.sqrt(THIRD) * math.sin(math.pi / 4) * math.cos(math.pi / 4)
        expected = (
            a * math.log(a)
            + 2.0 * (1.0 - a) * math.log(1.0 - a)
            - a * math.log(x)
            - (1.0 - a) * math.log(w * w)
        )
        got = g_objective(EQUAL_MIX, AngleParams(math.pi / 4, math.pi / 4))
        assert got == pytest.approx(expected, abs=1e-14)
        assert math.isfinite(got) and got > 0.0

    def test_wall_is_infinite(self):
        assert g_objective(EQUAL_MIX, AngleParams(math.pi / 2, 0.3)) == math.inf

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateInput):
            g_objective(XState(1.0, 0.0, 0.0), AngleParams(0.3, 0.3))

    def test_symmetric_minimizer_has_balanced_gradient(self):
        angles, _ = minimize_g(EQUAL_MIX)
        h = 1e-6
        d1 = (
            g_objective(EQUAL_MIX, AngleParams(angles.theta1 + h, angles.theta2))
            - g_objective(EQUAL_MIX, AngleParams(angles.theta1 - h, angles.theta2))
        ) / (2 * h)
        d2 = (
            g_objective(EQUAL_MIX, AngleParams(angles.theta1, angles.theta2 + h))
            - g_objective(EQUAL_MIX, AngleParams(angles.theta1, angles.theta2 - h))
        ) / (2 * h)
        assert abs(d1 - d2) <= 1e-6
        assert angles.theta1 == pytest.approx(angles.theta2, abs=1e-6)


class TestMinimizeG:
    def test_symmetric_family_point(self):
        _, value = minimize_g(XState(0.5, 0.25, 0.25))
        assert abs(value - vp_reference(0.5)) <= 1e-8

    def test_asymmetric_point_matches_closed_form(self):
        s = XState(0.2, 0.5, 0.3)
        _, value = minimize_g(s)
        assert abs(value - ree_closed_form(s)) <= 1e-8

    def test_equal_mix(self):
        _, value = minimize_g(EQUAL_MIX)
        assert abs(value - EQUAL_MIX_VALUE) <= 1e-8

    def test_minimizer_is_locally_optimal(self):
        rng = np.random.default_rng(97)
        for _ in range(20):
            s = random_interior_xstate(rng)
            angles, value = minimize_g(s)
            for d1, d2 in ((1e-3, 0.0), (-1e-3, 0.0), (0.0, 1e-3), (0.0, -1e-3)):
                t1 = min(max(angles.theta1 + d1, 0.0), math.pi / 2)
                t2 = min(max(angles.theta2 + d2, 0.0), math.pi / 2)
                assert g_objective(s, AngleParams(t1, t2)) >= value - 1e-12


class TestCssFromAngles:
    def test_origin(self):
        cand = css_from_angles(AngleParams(0.0, 0.0))
        assert (cand.x, cand.u, cand.v, cand.y, cand.r, cand.theta) == (
            1.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        )

    def test_symmetric_point(self):
        cand = css_from_angles(AngleParams(math.pi / 4, math.pi / 4))
        for val in (cand.x, cand.u, cand.v, cand.y, cand.r):
            assert val == pytest.approx(0.25, abs=1e-15)

    def test_boundary_exact(self):
        rng = np.random.default_rng(41)
        for _ in range(100):
            t1, t2 = rng.uniform(0.0, math.pi / 2, size=2)
            cand = css_from_angles(AngleParams(float(t1), float(t2)))
            assert abs(cand.x * cand.y - cand.r**2) <= 1e-16
            assert abs(cand.u * cand.v - cand.r**2) <= 1e-15

    def test_equal_mix_candidate_certifies_value(self):
        angles, value = minimize_g(EQUAL_MIX)
        report = verify_css(EQUAL_MIX.to_density(), css_from_angles(angles))
        assert abs(report.relative_entropy_value - ree_closed_form(EQUAL_MIX)) <= 1e-8
        assert report.boundary_gap <= 1e-9


class TestRestrictedOracle:
    def test_degenerate_branches(self):
        assert ree_numeric_restricted(XState(1.0, 0.0, 0.0)) == 0.0
        assert ree_numeric_restricted(XState(0.4, 0.6, 0.0)) == 0.0
        pure = ree_numeric_restricted(XState(0.0, 0.3, 0.7))
        assert abs(pure - (-0.3 * math.log(0.3) - 0.7 * math.log(0.7))) <= 1e-14

    def test_agrees_with_closed_form(self):
        rng = np.random.default_rng(2024)
        worst = 0.0
        for _ in range(60):
            s = random_interior_xstate(rng)
            worst = max(worst, abs(ree_numeric_restricted(s) - ree_closed_form(s)))
        assert worst <= 1e-8


class TestGeneralOracle:
    def test_separable_diagonal(self):
        rho = DensityMatrix(np.diag([0.25, 0.25, 0.25, 0.25]).astype(complex))
        assert ree_numeric_general(rho) <= 1e-6

    def test_bell_state(self):
        bell = DensityMatrix.from_state_vector(np.array([0, 1, 1, 0]) / math.sqrt(2))
        value = ree_numeric_general(bell)
        assert math.log(2.0) - 1e-6 <= value <= math.log(2.0) + 1e-4

    def test_equal_mix_upper_bound(self):
        value = ree_numeric_general(EQUAL_MIX.to_density())
        assert EQUAL_MIX_VALUE - 1e-6 <= value <= EQUAL_MIX_VALUE + 1e-4

    @pytest.mark.filterwarnings("ignore::wree.css_opt.ConvergenceFailure")
    def test_never_below_closed_form(self):
        # inner approximation of the separable set: can never undershoot
        rng = np.random.default_rng(314)
        cfg = GeneralOracleConfig(restarts=4)
        for _ in range(8):
            s = random_interior_xstate(rng)
            gap = ree_numeric_general(s.to_density(), cfg) - ree_closed_form(s)
            assert gap >= -1e-6

    def test_history_monotone_and_deterministic(self):
        s = XState(0.2, 0.5, 0.3)
        value1, history = ree_numeric_general(s.to_density(), return_history=True)
        assert all(h2 <= h1 + 1e-15 for h1, h2 in zip(history, history[1:]))
        value2 = ree_numeric_general(s.to_density())
        assert value1 == value2

    def test_convergence_warning(self):
        cfg = GeneralOracleConfig(restarts=3, max_iters=1, seed=0, tol=1e-12)
        with pytest.warns(ConvergenceFailure):
            ree_numeric_general(EQUAL_MIX.to_density(), cfg)

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            ree_numeric_general(DensityMatrix.maximally_mixed(1))

    def test_ansatz_type_is_separable_by_construction(self):
        rng = np.random.default_rng(53)
        weights = rng.dirichlet(np.ones(6))
        angles = np.stack(
            [
                rng.uniform(0, math.pi, 6),
                rng.uniform(0, 2 * math.pi, 6),
                rng.uniform(0, math.pi, 6),
                rng.uniform(0, 2 * math.pi, 6),
            ],
            axis=-1,
        )
        ansatz = ProductMixtureAnsatz(weights=weights, angles=angles)
        sigma = ansatz.to_density()
        from wree.qmat import is_ppt

        assert is_ppt(sigma, tol=1e-10)
        with pytest.raises(ValueError):
            ProductMixtureAnsatz(weights=weights * 2.0, angles=angles)


class TestVerifyCss:
    def test_maximally_mixed_candidate(self):
        cand = SeparableCandidate(x=0.25, u=0.25, v=0.25, y=0.25, r=0.0)
        report = verify_css(EQUAL_MIX.to_density(), cand)
        assert report.boundary_gap == pytest.approx(0.25, abs=1e-12)
        assert math.isfinite(report.relative_entropy_value)

    def test_disjoint_support_gives_infinity(self):
        bell_phi = DensityMatrix.from_state_vector(np.array([1, 0, 0, 1]) / math.sqrt(2))
        cand = SeparableCandidate(x=0.0, u=0.5, v=0.5, y=0.0, r=0.0)
        report = verify_css(bell_phi, cand)
        assert report.relative_entropy_value == math.inf

    def test_minimizer_candidates_sit_on_boundary(self):
        rng = np.random.default_rng(59)
        for _ in range(20):
            s = random_interior_xstate(rng)
            angles, _ = minimize_g(s)
            report = verify_css(s.to_density(), css_from_angles(angles))
            assert report.ppt_min_eigenvalue >= -1e-9
            assert report.sigma_min_eigenvalue >= -1e-9
            assert report.boundary_gap <= 1e-9

    def test_dimension_mismatch(self):
        cand = SeparableCandidate(x=0.25, u=0.25, v=0.25, y=0.25, r=0.0)
        with pytest.raises(DimensionMismatch):
            verify_css(DensityMatrix.maximally_mixed(1), cand)


class TestThetaOptimality:
    def test_coherence_phase_minimizes_at_zero(self):
        # for a fixed (x, u, v, y, r) with r strictly inside the PSD cone,
        # S(rho || sigma(theta)) over a 64-point theta grid dips at theta = 0
        rng = np.random.default_rng(61)
        for _ in range(10):
            s = random_interior_xstate(rng)
            rho = s.to_density()
            w = rng.dirichlet(np.ones(4))
            r = 0.8 * min(math.sqrt(w[1] * w[2]), math.sqrt(w[0] * w[3]))
            values = []
            for k in range(64):
                theta = 2.0 * math.pi * k / 64
                cand = SeparableCandidate(
                    x=float(w[0]), u=float(w[1]), v=float(w[2]), y=float(w[3]),
                    r=float(r), theta=theta,
                )
                values.append(relative_entropy(rho, cand.to_density()))
            assert values[0] == min(values)


class TestEpsilonProbe:
    def test_strictly_increasing_at_zero_phase(self):
        out = epsilon_monotonicity_probe(EQUAL_MIX, 0.0, (0.0, 0.01, 0.02))
        assert out[0] < out[1] < out[2]

    def test_constant_at_right_angle(self):
        out = epsilon_monotonicity_probe(EQUAL_MIX, math.pi / 2, (0.0, 0.01, 0.02))
        assert max(out) - min(out) <= 1e-15

    def test_endpoint_is_finite(self):
        out = epsilon_monotonicity_probe(EQUAL_MIX, 0.0, (0.0625,))
        assert math.isfinite(out[0])

    def test_domain_checks(self):
        with pytest.raises(OutOfRange):
            epsilon_monotonicity_probe(EQUAL_MIX, 0.0, (0.02, 0.01))
        with pytest.raises(OutOfRange):
            epsilon_monotonicity_probe(EQUAL_MIX, 0.0, (0.1,))

    def test_nondecreasing_for_positive_cosine(self):
        rng = np.random.default_rng(67)
        for _ in range(100):
            s = random_interior_xstate(rng)
            theta = float(rng.uniform(0.0, 1.5))
            eps = np.linspace(0.0, 0.0625, 9)
            out = epsilon_monotonicity_probe(s, theta, eps)
            assert all(b >= a - 1e-15 for a, b in zip(out, out[1:]))


class TestCandidateValidation:
    def test_rejects_npt(self):
        with pytest.raises(ValueError):
            SeparableCandidate(x=0.0, u=0.5, v=0.5, y=0.0, r=0.4)

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            SeparableCandidate(x=0.5, u=0.5, v=0.5, y=0.0, r=0.0)

    def test_angle_domain(self):
        with pytest.raises(OutOfRange):
            AngleParams(-0.1, 0.3)
        with pytest.raises(OutOfRange):
            AngleParams(0.1, 2.0)
