#!/usr/bin/env python3
"""
Test suite for the truncated Taylor propagator.

Test Coverage:
--------------
1. Series cutoff from the target precision
2. Spectral bound and plan construction
3. Single Taylor step against scipy.linalg.expm
4. Norm drift and convergence in the cutoff on the default chain
5. Full evolution against exact diagonalisation
6. Edge cases and error handling

"""

import math
import unittest

import numpy as np
import scipy.linalg

from trotterkit.heisenberg.frobenius import frobenius_error
from trotterkit.heisenberg.spin_chain import (
    SpinChainConfig,
    build_hamiltonian,
    build_sparse_hamiltonian,
    xxz_config,
    xz_config,
)
from trotterkit.taylor.taylor_evolver import (
    MACHINE_EPSILON,
    TaylorPlan,
    choose_cutoff,
    make_plan,
    spectral_bound,
    taylor_error,
    taylor_evolve,
    taylor_step,
    taylor_steps,
)


class TestCutoff(unittest.TestCase):
    """Test k = smallest integer with 1/(k+1)! < epsilon."""

    def test_double_precision(self):
        self.assertEqual(choose_cutoff(), 17)
        self.assertEqual(choose_cutoff(MACHINE_EPSILON), 17)

    def test_other_targets(self):
        self.assertEqual(choose_cutoff(1e-16), 18)
        self.assertEqual(choose_cutoff(0.5), 2)
        self.assertEqual(choose_cutoff(1e-4), 7)

    def test_invalid_epsilon(self):
        for epsilon in (0.0, 1.0, -1e-3):
            with self.assertRaises(ValueError):
                choose_cutoff(epsilon)


class TestPlan(unittest.TestCase):
    """Test spectral bound and plan validation."""

    def test_bound_without_fields(self):
        self.assertEqual(spectral_bound(SpinChainConfig(6, 1.0, 1.0, 1.0, (0.0,) * 6)), 18.0)
        self.assertEqual(spectral_bound(SpinChainConfig(2, 1.0, 0.0, 1.0, (0.0, 0.0))), 4.0)

    def test_bound_tight_for_two_sites(self):
        """The XZ pair without fields reaches its bound 4."""
        H = build_hamiltonian(SpinChainConfig(2, 1.0, 0.0, 1.0, (0.0, 0.0)))
        self.assertAlmostEqual(np.max(np.abs(np.linalg.eigvalsh(H))), 4.0, places=12)

    def test_bound_covers_spectrum(self):
        for config in (xz_config(), xxz_config()):
            spectrum = np.linalg.eigvalsh(build_hamiltonian(config))
            self.assertLessEqual(np.max(np.abs(spectrum)), spectral_bound(config))

    def test_make_plan(self):
        config = xxz_config()
        plan = make_plan(config)
        self.assertEqual(plan.k, 17)
        self.assertEqual(plan.h, 1.0 / plan.gamma)
        self.assertGreater(plan.gamma, 18.0)
        self.assertEqual(taylor_steps(10.0, plan), math.ceil(10.0 * plan.gamma - 1e-9))

    def test_zero_hamiltonian(self):
        with self.assertRaises(ValueError):
            make_plan(SpinChainConfig(2, 0.0, 0.0, 0.0, (0.0, 0.0)))

    def test_step_too_large(self):
        """Gamma * h above 1.5 is rejected."""
        with self.assertRaises(ValueError):
            TaylorPlan(gamma=10.0, h=0.2, k=17, epsilon=MACHINE_EPSILON)
        TaylorPlan(gamma=10.0, h=0.1, k=17, epsilon=MACHINE_EPSILON)

    def test_invalid_plan_values(self):
        with self.assertRaises(ValueError):
            TaylorPlan(gamma=-1.0, h=0.1, k=17, epsilon=MACHINE_EPSILON)
        with self.assertRaises(ValueError):
            TaylorPlan(gamma=1.0, h=0.1, k=0, epsilon=MACHINE_EPSILON)

    def test_steps_cover_time(self):
        plan = TaylorPlan(gamma=4.0, h=0.25, k=17, epsilon=MACHINE_EPSILON)
        self.assertEqual(taylor_steps(1.0, plan), 4)
        self.assertEqual(taylor_steps(1.1, plan), 5)
        self.assertEqual(taylor_steps(0.01, plan), 1)
        with self.assertRaises(ValueError):
            taylor_steps(0.0, plan)


class TestTaylorStep(unittest.TestCase):
    """Test one truncated series step."""

    def setUp(self):
        self.config = xxz_config(L=4)
        self.H = build_sparse_hamiltonian(self.config)
        rng = np.random.default_rng(11)
        self.states = rng.normal(size=(16, 3)) + 1j * rng.normal(size=(16, 3))

    def test_first_order(self):
        """k=1 is exactly (1 + iHh)."""
        result = taylor_step(self.states, self.H, 0.01, 1)
        expected = self.states + 0.01j * (self.H @ self.states)
        np.testing.assert_allclose(result, expected, atol=1e-15)

    def test_zero_step(self):
        np.testing.assert_array_equal(taylor_step(self.states, self.H, 0.0, 17), self.states)

    def test_matches_expm(self):
        h = 1.0 / spectral_bound(self.config)
        expected = scipy.linalg.expm(1j * h * build_hamiltonian(self.config)) @ self.states
        result = taylor_step(self.states, self.H, h, 17)
        np.testing.assert_allclose(result, expected, atol=1e-13)

    def test_dense_applier(self):
        dense = build_hamiltonian(self.config)
        np.testing.assert_allclose(
            taylor_step(self.states[:, 0], dense, 0.05, 10),
            taylor_step(self.states[:, 0], self.H, 0.05, 10),
            atol=1e-14,
        )

    def test_invalid_cutoff(self):
        with self.assertRaises(ValueError):
            taylor_step(self.states, self.H, 0.1, 0)


class TestSeriesConvergence(unittest.TestCase):
    """Test the planned step on the default isotropic chain."""

    def setUp(self):
        config = xxz_config()
        self.plan = make_plan(config)
        self.H = build_sparse_hamiltonian(config)
        self.exact = scipy.linalg.expm(1j * self.plan.h * build_hamiltonian(config))
        self.identity = np.eye(config.dimension, dtype=complex)

    def test_norm_drift_per_step(self):
        """Each planned step changes the norm of a state by at most 10 epsilon."""
        rng = np.random.default_rng(5)
        states = rng.normal(size=(64, 20)) + 1j * rng.normal(size=(64, 20))
        states /= np.linalg.norm(states, axis=0)
        for _ in range(50):
            advanced = taylor_step(states, self.H, self.plan.h, self.plan.k)
            drift = np.abs(np.linalg.norm(advanced, axis=0) - np.linalg.norm(states, axis=0))
            self.assertLessEqual(np.max(drift), 10 * MACHINE_EPSILON)
            states = advanced

    def test_two_more_terms_gain_factor_fifty(self):
        """Raising k by 2 shrinks the step error by at least 50x above the precision floor."""
        errors = {
            k: frobenius_error(self.exact, taylor_step(self.identity, self.H, self.plan.h, k))
            for k in range(2, 19)
        }
        for k in range(2, 17):
            if errors[k + 2] < 1e-12:
                break
            with self.subTest(k=k):
                self.assertGreaterEqual(errors[k] / errors[k + 2], 50)
        self.assertLessEqual(errors[self.plan.k], 1e-13)


class TestTaylorEvolution(unittest.TestCase):
    """Test the full propagator against exact diagonalisation."""

    def test_isotropic_chain_long_time(self):
        config = xxz_config()
        plan = make_plan(config)
        self.assertLessEqual(taylor_error(config, 10.0, plan), 1e-11)

    def test_shape(self):
        config = xz_config(L=3)
        self.assertEqual(taylor_evolve(config, 1.0, make_plan(config)).shape, (8, 8))

    def test_loose_precision_costs_accuracy(self):
        config = xz_config(L=4)
        coarse = taylor_error(config, 2.0, make_plan(config, epsilon=1e-4))
        fine = taylor_error(config, 2.0, make_plan(config))
        self.assertGreater(coarse, 1e3 * fine)


if __name__ == "__main__":
    unittest.main()
