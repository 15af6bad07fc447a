#!/usr/bin/env python3
"""
Test suite for the splitting scheme catalog.

Covers the registered schemes, the invariants every scheme must satisfy, the
conversion to multi-stage ramp coefficients and the order-raising composition.

Test Coverage:
--------------
1. Catalog lookup, listing and filtering
2. Scheme invariants (order, cycles, lengths, sums, symmetry)
3. Symmetric completion of half coefficient lists
4. Ramp coefficients (c, d) and the telescope identities
5. Suzuki composition and its recursive form
6. Conjugate alternation of complex schemes
7. Stage cost factor
8. Edge cases and error handling

"""

import unittest
from fractions import Fraction

from trotterkit.schemes.scheme_catalog import (
    SCHEME_NAMES,
    SplittingScheme,
    StageCoefficients,
    UnknownSchemeError,
    conjugate_alternate,
    get_scheme,
    list_schemes,
    reconstruct_two_stage,
    recursive_compose,
    stage_cost_factor,
    suzuki_compose,
    symmetric_complete,
    to_stage_coefficients,
)


class TestCatalogLookup(unittest.TestCase):
    """Test get_scheme and list_schemes."""

    def test_catalog_size(self):
        """Fifteen schemes are registered."""
        self.assertEqual(len(SCHEME_NAMES), 15)
        self.assertEqual(len(list_schemes()), 15)

    def test_filter_by_order(self):
        """Order filters pick out 2, 9, 2 and 2 schemes."""
        self.assertEqual(len(list_schemes(order=2)), 2)
        self.assertEqual(len(list_schemes(order=4)), 9)
        self.assertEqual(len(list_schemes(order=6)), 2)
        self.assertEqual(len(list_schemes(order=8)), 2)

    def test_filter_by_unitarity(self):
        """Three schemes carry complex coefficients."""
        self.assertEqual(len(list_schemes(unitary=True)), 12)
        complex_names = {s.name for s in list_schemes(unitary=False)}
        self.assertEqual(
            complex_names, {"non-unitary-q4", "non-unitary-q5", "uniform-non-unitary"}
        )

    def test_combined_filter(self):
        """Order and unitarity filters combine."""
        names = [s.name for s in list_schemes(order=4, unitary=True)]
        self.assertEqual(
            names,
            [
                "forest-ruth",
                "omelyan-fr-type",
                "omelyan-small-a",
                "suzuki-4",
                "optimised-4",
                "blanes-moan-4",
            ],
        )

    def test_cycle_counts(self):
        """Cycle counts match the catalog table."""
        expected = {
            "verlet": 1,
            "omelyan-2": 2,
            "forest-ruth": 3,
            "omelyan-fr-type": 4,
            "non-unitary-q4": 4,
            "suzuki-4": 5,
            "uniform-non-unitary": 5,
            "blanes-moan-4": 6,
            "blanes-moan-6": 10,
            "suzuki-6": 25,
            "bm6-suzuki-8": 50,
            "suzuki-8": 125,
        }
        for name, q in expected.items():
            scheme = get_scheme(name)
            self.assertEqual(scheme.cycles, q, name)
            self.assertEqual(len(scheme.a), q + 1)
            self.assertEqual(len(scheme.b), q)

    def test_lookup_is_cached(self):
        """Repeated lookups return the same object."""
        self.assertIs(get_scheme("suzuki-6"), get_scheme("suzuki-6"))

    def test_unknown_scheme(self):
        """Unknown identifiers raise with the available names in the message."""
        with self.assertRaises(UnknownSchemeError) as ctx:
            get_scheme("ruth-3")
        self.assertIn("ruth-3", str(ctx.exception))
        self.assertIn("blanes-moan-4", str(ctx.exception))

    def test_unknown_scheme_is_value_error(self):
        """UnknownSchemeError is caught as ValueError by the command line."""
        self.assertTrue(issubclass(UnknownSchemeError, ValueError))

    def test_all_schemes_normalised_and_symmetric(self):
        """Every registered scheme satisfies sum = 1 and palindromic coefficients."""
        for scheme in list_schemes():
            self.assertAlmostEqual(abs(sum(scheme.a) - 1), 0, delta=1e-14)
            self.assertAlmostEqual(abs(sum(scheme.b) - 1), 0, delta=1e-14)
            self.assertEqual(scheme.a, scheme.a[::-1])
            self.assertEqual(scheme.b, scheme.b[::-1])

    def test_verlet_coefficients(self):
        verlet = get_scheme("verlet")
        self.assertEqual(verlet.a, (0.5, 0.5))
        self.assertEqual(verlet.b, (1.0,))
        self.assertTrue(verlet.unitary())


class TestSchemeInvariants(unittest.TestCase):
    """Test construction-time validation of SplittingScheme."""

    def test_valid_scheme(self):
        scheme = SplittingScheme("custom", 2, 1, (0.5, 0.5), (1.0,))
        self.assertEqual(scheme.a, (0.5 + 0j, 0.5 + 0j))
        self.assertIsNone(scheme.published_eff)

    def test_odd_order_rejected(self):
        with self.assertRaises(ValueError) as ctx:
            SplittingScheme("odd", 3, 1, (0.5, 0.5), (1.0,))
        self.assertIn("even", str(ctx.exception))

    def test_zero_cycles_rejected(self):
        with self.assertRaises(ValueError):
            SplittingScheme("empty", 2, 0, (1.0,), ())

    def test_length_mismatch_rejected(self):
        with self.assertRaises(ValueError) as ctx:
            SplittingScheme("short", 2, 2, (0.5, 0.5), (1.0,))
        self.assertIn("a-coefficients", str(ctx.exception))

    def test_sum_violation_rejected(self):
        """sum(a) = 1.1 names the violated sum."""
        with self.assertRaises(ValueError) as ctx:
            SplittingScheme("heavy", 2, 1, (0.55, 0.55), (1.0,))
        self.assertIn("sum of a-coefficients", str(ctx.exception))

    def test_small_sum_violation_rejected(self):
        """A deviation of 4e-13 in sum(a) is far above rounding and is rejected."""
        with self.assertRaises(ValueError) as ctx:
            SplittingScheme("drifted", 2, 1, (0.5 + 2e-13, 0.5 + 2e-13), (1.0,))
        self.assertIn("sum of a-coefficients", str(ctx.exception))

    def test_rounding_level_sum_accepted(self):
        """Deviations at the level of a few ulps are accepted."""
        scheme = SplittingScheme("rounded", 2, 1, (0.5 + 1e-15, 0.5 + 1e-15), (1.0,))
        self.assertEqual(scheme.order, 2)

    def test_asymmetric_rejected(self):
        with self.assertRaises(ValueError) as ctx:
            SplittingScheme("lopsided", 2, 1, (0.4, 0.6), (1.0,))
        self.assertIn("not symmetric", str(ctx.exception))

    def test_complex_scheme_not_unitary(self):
        self.assertFalse(get_scheme("non-unitary-q4").unitary())


class TestSymmetricComplete(unittest.TestCase):
    """Test mirroring of half coefficient lists."""

    def test_odd_cycles(self):
        """q=3: a has a mirrored pair around the centre, b a single middle entry."""
        a, b = symmetric_complete([0.1, 0.4], [0.3, 0.4], 3)
        self.assertEqual(a, (0.1, 0.4, 0.4, 0.1))
        self.assertEqual(b, (0.3, 0.4, 0.3))

    def test_even_cycles(self):
        """q=4: the middle a-coefficient is not duplicated."""
        a, b = symmetric_complete([0.1, 0.2, 0.4], [0.2, 0.3], 4)
        self.assertEqual(a, (0.1, 0.2, 0.4, 0.2, 0.1))
        self.assertEqual(b, (0.2, 0.3, 0.3, 0.2))

    def test_wrong_half_length(self):
        with self.assertRaises(ValueError):
            symmetric_complete([0.5, 0.0], [1.0], 1)

    def test_non_positive_cycles(self):
        with self.assertRaises(ValueError):
            symmetric_complete([], [], 0)


class TestStageCoefficients(unittest.TestCase):
    """Test conversion to forward/backward ramp coefficients."""

    def test_verlet(self):
        stage = to_stage_coefficients(get_scheme("verlet"))
        self.assertEqual(stage.c, (0.5,))
        self.assertEqual(stage.d, (0.5,))
        self.assertEqual(stage.cycles, 1)

    def test_omelyan_2(self):
        """c_1 = a_1, d_1 = b_1 - a_1, c_2 = a_2 - d_1, d_2 = b_2 - c_2."""
        scheme = get_scheme("omelyan-2")
        stage = to_stage_coefficients(scheme)
        a1 = scheme.a[0]
        self.assertAlmostEqual(stage.c[0], a1, delta=1e-15)
        self.assertAlmostEqual(stage.d[0], 0.5 - a1, delta=1e-15)
        self.assertAlmostEqual(stage.c[1], 0.5 - a1, delta=1e-15)
        self.assertAlmostEqual(stage.d[1], a1, delta=1e-15)

    def test_telescope_identities_all_schemes(self):
        """Reconstructed (a, b) match the originals for every scheme."""
        for scheme in list_schemes():
            stage = to_stage_coefficients(scheme)
            self.assertEqual(stage.cycles, scheme.cycles)
            a, b = reconstruct_two_stage(stage)
            for x, y in zip(a, scheme.a):
                self.assertLess(abs(x - y), 1e-13, scheme.name)
            for x, y in zip(b, scheme.b):
                self.assertLess(abs(x - y), 1e-13, scheme.name)

    def test_complex_coefficients_survive(self):
        stage = to_stage_coefficients(get_scheme("non-unitary-q5"))
        self.assertNotEqual(stage.c[0].imag, 0)

    def test_reconstruct_manual(self):
        a, b = reconstruct_two_stage(StageCoefficients((0.25, 0.25), (0.25, 0.25)))
        self.assertEqual(a, (0.25, 0.5, 0.25))
        self.assertEqual(b, (0.5, 0.5))


class TestSuzukiCompose(unittest.TestCase):
    """Test order raising by symmetric composition."""

    def test_verlet_p1_is_forest_ruth(self):
        """Verlet composed with p=1 reproduces the Forest-Ruth coefficients."""
        composed = suzuki_compose(get_scheme("verlet"), p=1)
        forest_ruth = get_scheme("forest-ruth")
        self.assertEqual(composed.order, 4)
        self.assertEqual(composed.cycles, 3)
        for x, y in zip(composed.a + composed.b, forest_ruth.a + forest_ruth.b):
            self.assertAlmostEqual(x, y, delta=1e-12)

    def test_verlet_p2_is_suzuki_4(self):
        composed = suzuki_compose(get_scheme("verlet"), p=2)
        suzuki4 = get_scheme("suzuki-4")
        self.assertEqual(composed.cycles, 5)
        for x, y in zip(composed.a + composed.b, suzuki4.a + suzuki4.b):
            self.assertAlmostEqual(x, y, delta=1e-12)

    def test_cycle_count_and_order(self):
        """(2p+1) q cycles and order n+2."""
        base = get_scheme("blanes-moan-4")
        composed = suzuki_compose(base, p=3)
        self.assertEqual(composed.cycles, 7 * 6)
        self.assertEqual(composed.order, 6)

    def test_default_name(self):
        composed = suzuki_compose(get_scheme("omelyan-2"), p=2)
        self.assertEqual(composed.name, "omelyan-2+suzuki-p2")

    def test_complex_scheme_composes(self):
        composed = suzuki_compose(get_scheme("non-unitary-q4"), p=2)
        self.assertFalse(composed.unitary())
        self.assertEqual(composed.order, 6)

    def test_invalid_power(self):
        with self.assertRaises(ValueError):
            suzuki_compose(get_scheme("verlet"), p=0)

    def test_recursive_p1_cycles(self):
        """p=1 from Verlet gives 3^(n/2 - 1) cycles."""
        scheme = recursive_compose(get_scheme("verlet"), levels=3, p=1, name="ternary-8")
        self.assertEqual(scheme.order, 8)
        self.assertEqual(scheme.cycles, 27)
        self.assertEqual(scheme.name, "ternary-8")

    def test_recursive_matches_catalog(self):
        """Two p=2 levels from suzuki-4 reach suzuki-8."""
        scheme = recursive_compose(get_scheme("suzuki-4"), levels=2)
        self.assertEqual(scheme.cycles, get_scheme("suzuki-8").cycles)
        self.assertEqual(scheme.a, get_scheme("suzuki-8").a)

    def test_recursive_invalid_levels(self):
        with self.assertRaises(ValueError):
            recursive_compose(get_scheme("verlet"), levels=0)


class TestConjugateAlternate(unittest.TestCase):
    """Test coefficient conjugation on odd steps."""

    def test_even_step_unchanged(self):
        scheme = get_scheme("non-unitary-q4")
        self.assertIs(conjugate_alternate(scheme, 0), scheme)

    def test_odd_step_conjugated(self):
        scheme = get_scheme("non-unitary-q4")
        odd = conjugate_alternate(scheme, 1)
        self.assertEqual(odd.a, tuple(x.conjugate() for x in scheme.a))
        self.assertEqual(odd.b, tuple(x.conjugate() for x in scheme.b))

    def test_real_scheme_unchanged(self):
        scheme = get_scheme("blanes-moan-4")
        self.assertIs(conjugate_alternate(scheme, 1), scheme)


class TestStageCostFactor(unittest.TestCase):
    """Test the (s-1)/s cost factor."""

    def test_values(self):
        self.assertEqual(stage_cost_factor(2), Fraction(1, 2))
        self.assertEqual(stage_cost_factor(3), Fraction(2, 3))
        self.assertEqual(stage_cost_factor(18), Fraction(17, 18))

    def test_single_stage_rejected(self):
        with self.assertRaises(ValueError):
            stage_cost_factor(1)


if __name__ == "__main__":
    unittest.main()
