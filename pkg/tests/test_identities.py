import unittest
import sys
import os

import pytest

# Add the parent directory to the path so we can import the app modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.exactnum import QRat
from app.identities import (
    SAMPLED_Q,
    SYMBOLIC_QXY,
    UnknownIdentityError,
    get_check,
    registered_ids,
    run_all,
    run_check,
)

BIVARIATE = {"euler-identity-polys", "prop1-product", "sheffer-identity"}


class TestRegistry(unittest.TestCase):
    """Test cases for the identity registry"""

    def test_catalog_is_complete(self):
        """Test that every catalog id is registered"""
        expected = {
            "bernoulli-umbral", "bernoulli-at-1", "bernoulli-recurrence", "bernoulli-integral",
            "monomial-in-bernoulli", "euler-identity-polys", "euler-identity-numbers", "bernoulli-ode",
            "euler-umbral", "euler-at-1", "monomial-in-euler", "euler-recurrence",
            "genocchi-umbral", "genocchi-at-1", "genocchi-degree", "monomial-in-genocchi",
            "genocchi-recurrence", "genocchi-euler-bridge", "prop1-product", "sheffer-lowering",
            "sheffer-identity", "sheffer-orthogonality", "conjugate-representation", "integral-lemma",
            "c-integral-inverse", "euler-in-bernoulli-forms", "genocchi-in-bernoulli-forms",
            "bernoulli-in-euler", "route-agreement", "bernoulli-basis-expansion",
            "euler-basis-expansion", "classical-limit",
        }
        self.assertEqual(set(registered_ids()), expected)
        self.assertEqual(registered_ids(), sorted(registered_ids()))

    def test_unknown_id(self):
        """Test that an unknown id raises with the known ids listed"""
        with self.assertRaises(UnknownIdentityError) as ctx:
            run_check("no-such-id", 3)
        self.assertIn("bernoulli-umbral", str(ctx.exception))
        self.assertIsInstance(ctx.exception, KeyError)

    def test_bad_mode(self):
        """Test that only the two modes are accepted"""
        with self.assertRaises(ValueError):
            run_check("bernoulli-umbral", 3, mode="numeric")

    def test_ranges(self):
        """Test lower bounds and caps of the index ranges"""
        self.assertEqual(get_check("euler-identity-numbers").n_range(10), (2, 10))
        self.assertEqual(get_check("euler-identity-polys").n_range(10), (2, 6))
        self.assertEqual(get_check("genocchi-recurrence").n_range(4), (1, 4))
        self.assertEqual(get_check("euler-identity-polys").mode, SYMBOLIC_QXY)


class TestChecks(unittest.TestCase):
    """Test cases for individual identities"""

    def assertPasses(self, report):
        failures = [(o.n, o.witness) for o in report.failures]
        self.assertTrue(report.passed, f"{report.id} failed: {failures}")

    def test_euler_identity_numbers(self):
        """Test the Euler identity for the numbers for 2 <= n <= 10"""
        report = run_check("euler-identity-numbers", 10)
        self.assertPasses(report)
        self.assertEqual([o.n for o in report.outcomes], list(range(2, 11)))

    def test_euler_identity_numbers_at_two(self):
        """Test that at n = 2 both sides equal (q+1)/3"""
        from app.identities import CheckContext, _euler_identity_numbers
        from app.cfactorial import default_cache

        q = QRat.q()
        lhs, rhs = _euler_identity_numbers(CheckContext(default_cache(), 2), 2)
        self.assertEqual(lhs, (q + 1) / 3)
        self.assertEqual(rhs, (q + 1) / 3)

    def test_resolved_checks_record_the_printed_variant(self):
        """Test that flagged checks pass and say which printed reading matched"""
        report = run_check("bernoulli-in-euler", 6)
        self.assertPasses(report)
        self.assertEqual(report.resolution.matched, "proof")
        self.assertTrue(any("literal printed variant fails" in note for note in report.notes))

        report = run_check("euler-basis-expansion", 6)
        self.assertPasses(report)
        self.assertEqual(report.resolution.resolved, 1)

    def test_univariate_checks(self):
        """Test the univariate family identities for n <= 6"""
        for identity_id in [
            "bernoulli-umbral", "bernoulli-at-1", "bernoulli-recurrence", "bernoulli-integral",
            "monomial-in-bernoulli", "bernoulli-ode", "euler-umbral", "euler-at-1",
            "monomial-in-euler", "euler-recurrence", "genocchi-umbral", "genocchi-at-1",
            "genocchi-degree", "monomial-in-genocchi", "genocchi-recurrence", "genocchi-euler-bridge",
        ]:
            self.assertPasses(run_check(identity_id, 6))

    def test_umbral_checks(self):
        """Test the umbral machinery checks for n <= 5"""
        for identity_id in [
            "sheffer-lowering", "sheffer-orthogonality", "conjugate-representation",
            "integral-lemma", "c-integral-inverse", "euler-in-bernoulli-forms",
            "genocchi-in-bernoulli-forms", "route-agreement", "bernoulli-basis-expansion",
            "classical-limit",
        ]:
            self.assertPasses(run_check(identity_id, 5))

    def test_bivariate_checks(self):
        """Test the checks with a symbolic second variable at small n"""
        for identity_id in sorted(BIVARIATE):
            self.assertPasses(run_check(identity_id, 4))

    def test_sampled_mode(self):
        """Test that sampled runs report the sampled mode and pass"""
        report = run_check("euler-identity-numbers", 8, mode="sampled")
        self.assertEqual(report.mode, SAMPLED_Q)
        self.assertPasses(report)

    def test_reports_are_deterministic(self):
        """Test that wall time is excluded from report comparison"""
        first = run_check("euler-recurrence", 4)
        second = run_check("euler-recurrence", 4)
        self.assertEqual(first, second)
        self.assertIn("wall_time", first.metadata)


@pytest.mark.slow
class TestFullSuite(unittest.TestCase):
    """Test cases running the whole registry"""

    def test_all_checks_pass(self):
        """Test the full suite for n <= 8, with and without worker threads"""
        serial = run_all(8)
        self.assertTrue(all(r.passed for r in serial), [r.id for r in serial if not r.passed])
        threaded = run_all(8, workers=4)
        self.assertEqual(serial, threaded)

    def test_univariate_suite_to_ten(self):
        """Test every univariate check for n <= 10"""
        for identity_id in registered_ids():
            if identity_id in BIVARIATE:
                continue
            report = run_check(identity_id, 10)
            self.assertTrue(report.passed, identity_id)

    def test_euler_identity_polys_to_six(self):
        """Test the bivariate Euler identity for 2 <= n <= 6"""
        self.assertTrue(run_check("euler-identity-polys", 6).passed)

    def test_sampled_suite(self):
        """Test every check in sampled mode for n <= 6"""
        for report in run_all(6, mode="sampled"):
            self.assertTrue(report.passed, report.id)


if __name__ == '__main__':
    unittest.main()
