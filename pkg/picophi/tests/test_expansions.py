"""
Unit tests for picophi.expansions.

Tests cover:
- Continued fraction convergents and their equality with term ratios
- The finite substitution chain of phi = a + b/phi
- Truncated nested radicals and their convergence
- Convergence tables, verdicts and oscillation around phi
"""

import random
import unittest
from fractions import Fraction

from picophi.core.exceptions import ConvergenceError, DomainError, PreconditionError
from picophi.core.types import FixedReal
from picophi.expansions import (
    ContinuedFractionSpec,
    ConvergenceReport,
    ConvergenceRow,
    RadicalIterationState,
    cf_convergence_table,
    cf_convergent,
    cf_equals_ratio,
    cf_substitution,
    check_substitution_identity,
    iter_radical,
    oscillation_signs,
    radical_convergence_table,
    radical_converged,
    radical_iterate,
    ratio_convergence_table,
)
from picophi.numerics import fixed_from_rational
from picophi.roots import dominant_root_k, phi
from picophi.sequences import RecurrenceSpec, term
from picophi.values import ToleranceUlps


def _cf(a, b, depth) -> Fraction:
    return cf_convergent(ContinuedFractionSpec(a, b, depth))


class TestContinuedFraction(unittest.TestCase):
    """Test continued fraction convergents."""

    def test_golden_convergents(self):
        """Test the first convergents of 1 + 1/(1 + ...)."""
        expected = [1, 2, Fraction(3, 2), Fraction(5, 3), Fraction(8, 5)]
        self.assertEqual([_cf(1, 1, d) for d in range(5)], expected)

    def test_silver_convergent(self):
        """Test depth 4 of 2 + 1/(2 + ...) is 70/29 = F_5(2,1) / F_4(2,1)."""
        self.assertEqual(_cf(2, 1, 4), Fraction(70, 29))
        spec = RecurrenceSpec.from_pair(2, 1)
        self.assertEqual(_cf(2, 1, 4), term(spec, 5) / term(spec, 4))

    def test_spec_validation(self):
        """Test a negative depth is rejected."""
        with self.assertRaises(ValueError):
            ContinuedFractionSpec(1, 1, -1)
        self.assertEqual(ContinuedFractionSpec(1, 1, 0).deeper(3).depth, 3)

    def test_division_by_zero_level(self):
        """Test a zero intermediate denominator reports its level."""
        # levels: 1, then 1 + (-1)/1 = 0, then division by zero
        with self.assertRaises(DomainError) as context:
            _cf(1, -1, 2)
        self.assertEqual(context.exception.level, 2)

    def test_substitution_chain(self):
        """Test cf_substitution with an arbitrary tail."""
        self.assertEqual(cf_substitution(1, 1, 0, 7), 7)
        self.assertEqual(cf_substitution(1, 1, 1, 2), Fraction(3, 2))
        self.assertEqual(cf_substitution(3, 2, 2, 1), Fraction(17, 5))


class TestContinuedFractionEqualsRatio(unittest.TestCase):
    """Test cf_convergent(d) = F_{d+1} / F_d exactly."""

    def test_examples(self):
        """Test the golden case at depths 3 and 0."""
        three = cf_equals_ratio(ContinuedFractionSpec(1, 1, 3))
        self.assertTrue(three.holds)
        self.assertEqual((three.lhs, three.rhs), ("5/3", "5/3"))
        zero = cf_equals_ratio(ContinuedFractionSpec(1, 1, 0))
        self.assertTrue(zero.holds)
        self.assertEqual(zero.lhs, "1")

    def test_random_pairs(self):
        """Test 100 random positive pairs with depths up to 40."""
        rng = random.Random(404)
        for _ in range(100):
            a = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            b = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            depth = rng.randint(0, 40)
            with self.subTest(a=a, b=b, depth=depth):
                self.assertTrue(cf_equals_ratio(ContinuedFractionSpec(a, b, depth)).holds)
                spec = RecurrenceSpec.from_pair(a, b)
                self.assertEqual(_cf(a, b, depth), term(spec, depth + 1) / term(spec, depth))

    def test_undefined_sides(self):
        """Test an undefined convergent fails without raising."""
        verification = cf_equals_ratio(ContinuedFractionSpec(1, -1, 3))
        self.assertFalse(verification.holds)
        self.assertIn("undefined", verification.lhs)

    def test_mismatched_sequence(self):
        """Test a sequence with other parameters is rejected."""
        with self.assertRaises(PreconditionError):
            cf_equals_ratio(ContinuedFractionSpec(1, 1, 3), RecurrenceSpec.from_pair(2, 1))
        lucas = RecurrenceSpec.from_pair(1, 1, seeds=(2, 1))
        with self.assertRaises(PreconditionError):
            cf_equals_ratio(ContinuedFractionSpec(1, 1, 3), lucas)

    def test_substitution_identity(self):
        """Test phi equals the substitution chain with phi as tail."""
        self.assertTrue(check_substitution_identity(1, 1, 10, 30).holds)
        self.assertTrue(check_substitution_identity(Fraction(1, 3), 7, 6, 20).holds)
        with self.assertRaises(PreconditionError):
            check_substitution_identity(1, 1, 0, 30)


class TestNestedRadical(unittest.TestCase):
    """Test truncated nested radicals."""

    def test_iterate_examples(self):
        """Test fixed numbers of steps."""
        self.assertEqual(str(radical_iterate(1, 1, 0, 4)), "1.0000")
        self.assertEqual(str(radical_iterate(1, 1, 60, 4)), "1.6180")
        # truncated iterates approach the rational fixed point 3 from below
        self.assertEqual(str(radical_iterate(2, 3, 60, 6)), "2.999999")

    def test_converged_examples(self):
        """Test iteration until stable."""
        value, steps = radical_converged(1, 1, 4)
        self.assertEqual(str(value), "1.6180")
        self.assertGreater(steps, 1)
        self.assertEqual(radical_converged(0, 9, 3), (FixedReal(3000, 3), 1))
        value, _ = radical_converged(2, 3, 6)
        self.assertLessEqual(value.ulps_from(phi(2, 3, 6)), ToleranceUlps.RADICAL)

    def test_converged_matches_phi(self):
        """Test agreement with the closed form at 50 digits."""
        value, _ = radical_converged(1, 1, 50)
        self.assertLessEqual(value.ulps_from(phi(1, 1, 50)), ToleranceUlps.RADICAL)

    def test_monotone_and_bounded(self):
        """Test iterates are non-decreasing and never exceed phi + 1 ulp."""
        rng = random.Random(77)
        for _ in range(10):
            a = Fraction(rng.randint(1, 30), rng.randint(1, 10))
            b = Fraction(rng.randint(1, 30), rng.randint(1, 10))
            bound = phi(a, b, 20)
            previous = None
            for state in iter_radical(a, b, 20):
                if state.step > 40:
                    break
                with self.subTest(a=a, b=b, step=state.step):
                    if previous is not None:
                        self.assertGreaterEqual(state.iterate, previous)
                    self.assertLessEqual(state.iterate.mantissa, bound.mantissa + 1)
                previous = state.iterate

    def test_preconditions(self):
        """Test negative parameters and a = b = 0 are rejected."""
        with self.assertRaises(PreconditionError):
            radical_iterate(-1, 1, 3, 4)
        with self.assertRaises(PreconditionError):
            radical_converged(1, -1, 4)
        with self.assertRaises(PreconditionError):
            RadicalIterationState.start(0, 0, 4)

    def test_zero_constant_collapses(self):
        """Test b = 0 raises ConvergenceError with the evidence attached."""
        with self.assertRaises(ConvergenceError) as context:
            radical_converged(1, 0, 10)
        self.assertEqual(context.exception.steps, 0)
        self.assertEqual(len(context.exception.iterates), 2)

    def test_tiny_constant_converges(self):
        """Test b below the working precision still converges to phi."""
        b = Fraction(1, 10**20)
        target = phi(1, b, 4)
        self.assertEqual(str(target), "1.0000")
        value, steps = radical_converged(1, b, 4)
        self.assertLessEqual(value.ulps_from(target), ToleranceUlps.RADICAL)
        self.assertGreater(steps, 1)
        b = Fraction(1, 10**60)
        value, _ = radical_converged(3, b, 10)
        self.assertLessEqual(value.ulps_from(phi(3, b, 10)), ToleranceUlps.RADICAL)

    def test_step_cap(self):
        """Test an exhausted step cap raises ConvergenceError."""
        with self.assertRaises(ConvergenceError) as context:
            radical_converged(1, 1, 30, max_steps=2)
        self.assertEqual(context.exception.steps, 2)


class TestTripleEquality(unittest.TestCase):
    """Test the closed form, the radical and the continued fraction agree."""

    def test_golden_ratio_at_50_digits(self):
        """Test pairwise agreement within 4 ulp at 50 digits."""
        closed = phi(1, 1, 50)
        radical, _ = radical_converged(1, 1, 50)
        fraction = fixed_from_rational(_cf(1, 1, 250), 50)
        for x, y in ((closed, radical), (closed, fraction), (radical, fraction)):
            self.assertLessEqual(x.ulps_from(y), ToleranceUlps.RADICAL)
        self.assertTrue(str(closed).startswith("1.6180"))

    def test_random_pairs(self):
        """Test pairwise agreement for random positive pairs at 20 digits."""
        rng = random.Random(8)
        digits = 20
        for _ in range(10):
            a = Fraction(rng.randint(2, 6))
            b = Fraction(rng.randint(1, 4))
            closed = phi(a, b, digits)
            radical, _ = radical_converged(a, b, digits)
            fraction = fixed_from_rational(_cf(a, b, 10 + 4 * digits), digits)
            with self.subTest(a=a, b=b):
                self.assertLessEqual(closed.ulps_from(radical), ToleranceUlps.RADICAL)
                self.assertLessEqual(closed.ulps_from(fraction), ToleranceUlps.RADICAL)
                self.assertLessEqual(radical.ulps_from(fraction), ToleranceUlps.RADICAL)


class TestConvergenceTables(unittest.TestCase):
    """Test convergence tables and their verdicts."""

    def test_classic_ratio_table(self):
        """Test the classic ratio table at 4 digits."""
        report = ratio_convergence_table(RecurrenceSpec.classic(), 10, 4)
        decimals = [row.value_decimal for row in report.rows]
        self.assertEqual(decimals[:5], ["1.0000", "2.0000", "1.5000", "1.6666", "1.6000"])
        self.assertEqual(decimals[9], "1.6181")
        self.assertEqual(
            [row.value_exact for row in report.rows],
            ["1", "2", "3/2", "5/3", "8/5", "13/8", "21/13", "34/21", "55/34", "89/55"],
        )
        self.assertEqual(report.rows[0].abs_error, "0.6180")
        self.assertEqual(str(report.target), "1.6180")
        self.assertTrue(report.convergence_guaranteed)
        self.assertTrue(report.eventually_decreasing)
        self.assertEqual(report.decreasing_from, 1)

    def test_degenerate_ratio_table(self):
        """Test a = 1, b = 0 gives ratio 1 with zero error."""
        report = ratio_convergence_table(RecurrenceSpec.from_pair(1, 0), 3, 4)
        self.assertEqual([row.value_exact for row in report.rows], ["1", "1", "1"])
        self.assertEqual([row.abs_error for row in report.rows], ["0.0000"] * 3)

    def test_undefined_rows(self):
        """Test zero terms mark rows undefined and the table continues."""
        # 1, -1, 0, -1, -1, -2, ...
        report = ratio_convergence_table(RecurrenceSpec.from_pair(1, 1, seeds=(1, -1)), 5, 4)
        self.assertFalse(report.rows[2].defined)
        self.assertEqual(report.rows[2].value_decimal, "undefined")
        self.assertEqual(report.rows[2].abs_error, "undefined")
        self.assertEqual(report.rows[3].value_exact, "1")
        self.assertEqual(len(report.rows), 5)
        self.assertEqual(len(report.defined_rows), 4)

    def test_oscillating_ratio_table_not_guaranteed(self):
        """Test a = 0 tables are produced without a convergence guarantee."""
        report = ratio_convergence_table(RecurrenceSpec.from_pair(0, 4), 6, 4)
        self.assertFalse(report.convergence_guaranteed)
        self.assertEqual(report.rows[0].value_exact, "0")

    def test_complex_roots_rejected(self):
        """Test a negative discriminant raises DomainError."""
        with self.assertRaises(DomainError):
            ratio_convergence_table(RecurrenceSpec.from_pair(1, -1, seeds=(1, 2)), 4, 4)

    def test_k_term_ratio_table(self):
        """Test k = 3 ratios converge to the dominant root."""
        report = ratio_convergence_table(RecurrenceSpec.all_ones(3), 80, 10)
        self.assertEqual(str(report.target), "1.8392867552")
        self.assertTrue(report.convergence_guaranteed)
        self.assertTrue(report.eventually_decreasing)
        self.assertLessEqual(report.final_error.mantissa, 1)

    def test_three_term_ratios_reach_dominant_root(self):
        """Test all-ones k = 3 ratios come within 1e-10 of the dominant root by n = 300."""
        report = ratio_convergence_table(RecurrenceSpec.all_ones(3), 300, 20)
        self.assertEqual(report.target, dominant_root_k([1, 1, 1], 20))
        first = report.first_index_within(Fraction(1, 10**10))
        self.assertIsNotNone(first)
        self.assertLessEqual(first, 300)

    def test_k_term_requires_positive_coefficients(self):
        """Test k >= 3 with a non-positive coefficient raises PreconditionError."""
        with self.assertRaises(PreconditionError):
            ratio_convergence_table(RecurrenceSpec((1, -1, 1), (1, 1, 1)), 5, 4)

    def test_random_ratio_tables_converge(self):
        """Test 25 random positive pairs reach 1e-10 by row 200 and decrease eventually."""
        rng = random.Random(9)
        for _ in range(25):
            a = Fraction(rng.randint(2, 20), rng.randint(1, 2))
            b = Fraction(rng.randint(1, 20), rng.randint(1, 2))
            report = ratio_convergence_table(RecurrenceSpec.from_pair(a, b), 200, 20)
            with self.subTest(a=a, b=b):
                self.assertIsNotNone(report.first_index_within(Fraction(1, 10**10)))
                self.assertTrue(report.eventually_decreasing)
                self.assertTrue(report.convergence_guaranteed)

    def test_cf_table(self):
        """Test continued fraction tables."""
        report = cf_convergence_table(1, 1, 4, 4)
        self.assertEqual(
            [row.value for row in report.rows],
            [1, 2, Fraction(3, 2), Fraction(5, 3), Fraction(8, 5)],
        )
        single = cf_convergence_table(1, 1, 0, 4)
        self.assertEqual(len(single.rows), 1)
        self.assertEqual(single.rows[0].abs_error, "0.6180")
        self.assertIsNone(single.decreasing_from)
        self.assertFalse(single.eventually_decreasing)

    def test_cf_table_strictly_decreasing(self):
        """Test errors of (3, 2) convergents decrease strictly."""
        report = cf_convergence_table(3, 2, 20, 30)
        errors = [row.error.mantissa for row in report.rows]
        for previous, current in zip(errors, errors[1:]):
            self.assertLess(current, previous)
        self.assertEqual(report.decreasing_from, 0)

    def test_cf_table_division_by_zero(self):
        """Test a zero level propagates DomainError."""
        with self.assertRaises(DomainError):
            cf_convergence_table(0, 1, 5, 4)

    def test_radical_table(self):
        """Test radical tables start at sqrt(b) and approach phi."""
        report = radical_convergence_table(1, 1, 12, 4)
        self.assertEqual(report.rows[0].value_exact, "1.0000")
        self.assertEqual(report.rows[-1].value_decimal, "1.6180")
        self.assertEqual(report.start, 0)
        self.assertEqual(len(report.rows), 13)
        self.assertTrue(report.eventually_decreasing)
        self.assertFalse(radical_convergence_table(1, 0, 3, 4).convergence_guaranteed)

    def test_report_to_dict(self):
        """Test the JSON-ready representation."""
        payload = ratio_convergence_table(RecurrenceSpec.classic(), 2, 4).to_dict()
        self.assertEqual(payload["kind"], "ratio")
        self.assertEqual(payload["target"], "1.6180")
        self.assertEqual(payload["params"]["coeffs"], "1,1")
        self.assertEqual(
            payload["rows"][1],
            {"index": 2, "value_exact": "2", "value_decimal": "2.0000", "abs_error": "0.3819"},
        )

    def test_rows_must_be_consecutive(self):
        """Test a report rejects gaps in its row indices."""
        row = ConvergenceRow(2, Fraction(1), FixedReal(1, 0), FixedReal(0, 0))
        with self.assertRaises(ValueError):
            ConvergenceReport("ratio", (row,), FixedReal(1, 0), 0, 1, True)

    def test_oscillation(self):
        """Test classic ratios alternate below and above phi."""
        signs = oscillation_signs(RecurrenceSpec.classic(), 12)
        self.assertEqual(signs, [-1 if n % 2 else 1 for n in range(1, 13)])
        with self.assertRaises(PreconditionError):
            oscillation_signs(RecurrenceSpec.all_ones(3), 4)


if __name__ == "__main__":
    unittest.main()
