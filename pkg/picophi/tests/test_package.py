"""
Unit tests for the top-level picophi API and the Phi constant aggregator.
"""

import unittest

import picophi
from picophi import Phi


class TestPackage(unittest.TestCase):
    """Test the public surface."""

    def test_exports(self):
        """Test every name in __all__ is importable."""
        for name in picophi.__all__:
            with self.subTest(name=name):
                self.assertTrue(hasattr(picophi, name))

    def test_version(self):
        self.assertEqual(picophi.__version__.count("."), 2)

    def test_error_hierarchy(self):
        """Test domain errors are ValueErrors and convergence errors ArithmeticErrors."""
        self.assertTrue(issubclass(picophi.DomainError, ValueError))
        self.assertTrue(issubclass(picophi.PreconditionError, picophi.PicoPhiError))
        self.assertTrue(issubclass(picophi.ConvergenceError, ArithmeticError))

    def test_phi_constants(self):
        """Test the aggregated constants."""
        self.assertEqual(Phi.precision.DEFAULT_DIGITS, 30)
        self.assertEqual(Phi.precision.GUARD_DIGITS, 3)
        self.assertEqual(Phi.tolerance.IDENTITY, 8)
        self.assertEqual(Phi.tolerance.RADICAL, 4)
        self.assertEqual(Phi.steps.RADICAL_BASE + Phi.steps.RADICAL_PER_DIGIT * 10, 50)
        self.assertEqual(Phi.exit_code.CONVERGENCE, 4)
        self.assertEqual(Phi.output.VERSION, "1")
        self.assertTrue(Phi.ulp.is_within_ulps(picophi.phi(1, 1, 10), picophi.phi(1, 1, 10), 0))


if __name__ == "__main__":
    unittest.main()
