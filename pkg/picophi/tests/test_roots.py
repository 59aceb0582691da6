"""
Unit tests for picophi.roots.

Tests cover:
- Plus and minus roots of x^2 - a x - b at several precisions
- Exact comparison of rationals with phi(a, b)
- Reciprocal, square-root and minus-root identity checks
- The dominant root of k-term recurrences
"""

import random
import unittest
from fractions import Fraction

from picophi.core.exceptions import DomainError, PreconditionError
from picophi.core.types import FixedReal
from picophi.roots import (
    characteristic_sign,
    check_minus_root_relations,
    check_reciprocal_identity,
    check_sqrt_identity,
    compare_to_phi,
    discriminant,
    dominant_root_k,
    guard_digits,
    minus_root,
    phi,
    quadratic_roots,
)


def _random_pair(rng: random.Random, limit: int = 50):
    a = Fraction(rng.randint(1, limit), rng.randint(1, limit))
    b = Fraction(rng.randint(1, limit), rng.randint(1, limit))
    return a, b


class TestQuadraticRoots(unittest.TestCase):
    """Test closed-form roots."""

    def test_phi_examples(self):
        """Test the golden ratio and other metallic ratios."""
        self.assertEqual(str(phi(1, 1, 4)), "1.6180")
        self.assertEqual(str(phi(2, 1, 4)), "2.4142")
        self.assertEqual(str(phi(1, 0, 6)), "1.000000")
        self.assertEqual(str(phi(1, 1, 30)), "1.618033988749894848204586834365")
        self.assertEqual(str(phi(0, 4, 3)), "2.000")
        self.assertEqual(str(phi(2, 3, 2)), "3.00")

    def test_minus_root_examples(self):
        """Test the minus root."""
        self.assertEqual(str(minus_root(1, 1, 4)), "-0.6180")
        self.assertEqual(str(minus_root(1, 0, 4)), "0.0000")
        self.assertEqual(str(minus_root(2, 1, 4)), "-0.4142")

    def test_double_root(self):
        """Test a zero discriminant gives equal roots."""
        self.assertEqual(discriminant(2, -1), 0)
        self.assertEqual(phi(2, -1, 4), minus_root(2, -1, 4))
        self.assertEqual(str(phi(2, -1, 4)), "1.0000")

    def test_complex_roots_rejected(self):
        """Test a negative discriminant raises DomainError."""
        with self.assertRaisesRegex(DomainError, "complex roots out of scope"):
            phi(1, -1, 4)
        with self.assertRaises(DomainError):
            minus_root(0, -1, 4)
        with self.assertRaises(DomainError):
            quadratic_roots(1, -1, 4)

    def test_rational_coefficients(self):
        """Test phi(1/2, 1/2) = 1 and minus root -1/2."""
        roots = quadratic_roots(Fraction(1, 2), Fraction(1, 2), 5)
        self.assertEqual(str(roots.plus_root), "1.00000")
        self.assertEqual(str(roots.minus_root), "-0.50000")

    def test_roots_within_one_ulp(self):
        """Test x^2 - a x - b changes sign within one ulp of each root."""
        rng = random.Random(2718)
        for _ in range(100):
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            b = Fraction(rng.randint(0, 50), rng.randint(1, 50))
            digits = rng.randint(1, 40)
            with self.subTest(a=a, b=b, digits=digits):
                x = phi(a, b, digits)
                self.assertLessEqual(compare_to_phi(x.to_rational(), a, b), 0)
                self.assertEqual(compare_to_phi(x.to_rational() + x.ulp, a, b), 1)

    def test_precision_coherence(self):
        """Test roots at d + 10 digits truncate to the roots at d digits."""
        rng = random.Random(3141)
        for _ in range(100):
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            b = Fraction(rng.randint(0, 50), rng.randint(1, 50))
            digits = rng.randint(0, 40)
            with self.subTest(a=a, b=b, digits=digits):
                fine = phi(a, b, digits + 10).rescale(digits)
                self.assertLessEqual(fine.ulps_from(phi(a, b, digits)), 1)
                fine = minus_root(a, b, digits + 10).rescale(digits)
                self.assertLessEqual(fine.ulps_from(minus_root(a, b, digits)), 1)

    def test_product_bound(self):
        """Test |plus * minus + b| stays within the product bound."""
        rng = random.Random(1618)
        for _ in range(100):
            a, b = _random_pair(rng)
            roots = quadratic_roots(a, b, 30)
            with self.subTest(a=a, b=b):
                product = roots.plus_root.to_rational() * roots.minus_root.to_rational()
                self.assertLessEqual(abs(product + b), roots.product_error_bound())
                self.assertLessEqual(
                    abs(roots.plus_root.to_rational() + roots.minus_root.to_rational() - a),
                    2 * roots.plus_root.ulp,
                )


class TestCompareToPhi(unittest.TestCase):
    """Test exact comparison with phi(a, b)."""

    def test_classic_convergents(self):
        """Test convergents alternate around the golden ratio."""
        self.assertEqual(compare_to_phi(Fraction(8, 5), 1, 1), -1)
        self.assertEqual(compare_to_phi(Fraction(5, 3), 1, 1), 1)
        self.assertEqual(compare_to_phi(Fraction(89, 55), 1, 1), 1)

    def test_rational_root(self):
        """Test equality when phi is rational."""
        self.assertEqual(compare_to_phi(2, 1, 2), 0)
        self.assertEqual(compare_to_phi(-5, 1, 2), -1)


class TestRootIdentities(unittest.TestCase):
    """Test the reciprocal, square-root and minus-root identity checks."""

    def test_reciprocal_examples(self):
        """Test phi = a + b/phi for the golden and (3, 2) cases."""
        self.assertTrue(check_reciprocal_identity(1, 1, 30).holds)
        verification = check_reciprocal_identity(3, 2, 30)
        self.assertTrue(verification.holds)
        self.assertEqual(verification.tolerance_ulps, 8)
        self.assertEqual(verification.digits, 30)

    def test_reciprocal_zero_root(self):
        """Test phi(0, 0) = 0 raises PreconditionError."""
        with self.assertRaises(PreconditionError):
            check_reciprocal_identity(0, 0, 10)

    def test_reciprocal_random_pairs(self):
        """Test the reciprocal identity for 100 random positive pairs."""
        rng = random.Random(3)
        for _ in range(100):
            a, b = _random_pair(rng)
            with self.subTest(a=a, b=b):
                self.assertTrue(check_reciprocal_identity(a, b, 30).holds)

    def test_reciprocal_small_root(self):
        """Test guard digits keep the identity valid for a small phi."""
        verification = check_reciprocal_identity(-5, Fraction(1, 100), 30)
        self.assertTrue(verification.holds, msg=str(verification))

    def test_reciprocal_minus_root(self):
        """Test psi = a + b/psi for the minus root."""
        verification = check_reciprocal_identity(1, 1, 30, root="minus")
        self.assertTrue(verification.holds)
        self.assertEqual(verification.identity, "reciprocal-minus")
        with self.assertRaises(ValueError):
            check_reciprocal_identity(1, 1, 30, root="other")

    def test_sqrt_examples(self):
        """Test phi = sqrt(b + a phi)."""
        self.assertTrue(check_sqrt_identity(1, 1, 30).holds)
        one = check_sqrt_identity(1, 0, 10)
        self.assertTrue(one.holds)
        self.assertEqual(one.lhs, "1.0000000000")
        three = check_sqrt_identity(2, 3, 30)
        self.assertTrue(three.holds)
        self.assertEqual(three.rhs, "3." + "0" * 30)

    def test_sqrt_random_pairs(self):
        """Test the square-root identity for 25 random positive pairs."""
        rng = random.Random(5)
        for _ in range(25):
            a, b = _random_pair(rng)
            with self.subTest(a=a, b=b):
                self.assertTrue(check_sqrt_identity(a, b, 30).holds)

    def test_sqrt_zero_root(self):
        """Test phi(0, 0) = 0 = sqrt(0)."""
        self.assertTrue(check_sqrt_identity(0, 0, 10).holds)

    def test_sqrt_negative_root(self):
        """Test a negative phi raises PreconditionError."""
        with self.assertRaises(PreconditionError):
            check_sqrt_identity(-3, -2, 10)

    def test_minus_root_relations(self):
        """Test psi = a - phi and psi * phi = -b."""
        rng = random.Random(11)
        for _ in range(25):
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            b = Fraction(rng.randint(0, 50), rng.randint(1, 50))
            with self.subTest(a=a, b=b):
                self.assertTrue(check_minus_root_relations(a, b, 30).holds)

    def test_guard_digits(self):
        """Test guard digits grow with the amplification."""
        self.assertEqual(guard_digits(Fraction(1, 2)), 4)
        self.assertEqual(guard_digits(Fraction(999)), 6)
        self.assertEqual(guard_digits(Fraction(1001, 1000)), 4)


class TestDominantRoot(unittest.TestCase):
    """Test the k-term dominant root."""

    def test_examples(self):
        """Test known dominant roots."""
        self.assertEqual(str(dominant_root_k([1, 1], 4)), "1.6180")
        self.assertEqual(str(dominant_root_k([1, 1, 1], 4)), "1.8392")
        self.assertEqual(str(dominant_root_k([1, 1, 1, 1], 4)), "1.9275")
        self.assertEqual(str(dominant_root_k([5], 3)), "5.000")

    def test_agrees_with_phi(self):
        """Test k = 2 agrees with the closed form."""
        rng = random.Random(13)
        for _ in range(20):
            a, b = _random_pair(rng)
            with self.subTest(a=a, b=b):
                self.assertEqual(dominant_root_k([a, b], 25), phi(a, b, 25))

    def test_bracket(self):
        """Test the characteristic polynomial changes sign within one ulp."""
        rng = random.Random(17)
        for _ in range(20):
            k = rng.randint(3, 6)
            coefficients = [Fraction(rng.randint(1, 20), rng.randint(1, 10)) for _ in range(k)]
            root = dominant_root_k(coefficients, 20)
            with self.subTest(coefficients=coefficients):
                self.assertLessEqual(characteristic_sign(coefficients, root.to_rational()), 0)
                self.assertEqual(
                    characteristic_sign(coefficients, root.to_rational() + root.ulp), 1
                )

    def test_non_positive_coefficients(self):
        """Test non-positive coefficients raise PreconditionError."""
        with self.assertRaisesRegex(PreconditionError, "not guaranteed"):
            dominant_root_k([1, 0, 1], 4)
        with self.assertRaises(PreconditionError):
            dominant_root_k([], 4)

    def test_zero_digits(self):
        """Test digits = 0 gives the integer part."""
        self.assertEqual(dominant_root_k([1, 1, 1], 0), FixedReal(1, 0))


if __name__ == "__main__":
    unittest.main()
