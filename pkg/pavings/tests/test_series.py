# =================================================================
#
# Copyright (c) 2026 The pavings authors
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following
# conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# =================================================================

from fractions import Fraction
import unittest
from unittest import mock

from mpmath import mpf

from pavings.enumeration import EnumerationError

from pavings.series import (Series, SeriesError, asymptotic_reports,
                            asymptotic_rooted, asymptotic_unlabeled,
                            cycle_index_t, exp_series, hadamard,
                            hypergeom_2f0_coeffs, moebius, ode_2f0_residual,
                            riccati_residual, rooted_by_recurrence,
                            rooted_counts, series_from_dict,
                            series_p_rooted, series_p_star, series_p_tilde,
                            series_s2, series_to_dict, total_triples,
                            unlabeled_counts)

A005411 = [
    1, 4, 25, 208, 2146, 26368, 375733, 6092032, 110769550, 2232792064,
    49426061818, 1192151302144, 31123028996164, 874428204384256,
    26308967412122125, 843984969276915712, 28757604639850111894,
    1037239628039528906752, 39481325230750749160462
]

A002831 = [1, 4, 11, 60, 318, 2806, 29359, 396196, 6231794, 112137138]


class SeriesArithmeticTest(unittest.TestCase):
    """Test suite for the truncated power series type"""

    def test_truncation(self):
        """Test padding, truncation and out-of-range access"""

        s = Series([1, 2, 3], 5)

        self.assertEqual(len(s), 6)
        self.assertEqual(s[5], 0)
        self.assertEqual(s.truncate(1), Series([1, 2]))

        with self.assertRaises(SeriesError) as ctx:
            s[6]
        self.assertEqual(ctx.exception.code, 408)

    def test_products(self):
        """Test Cauchy and Hadamard products"""

        a = Series([1, 1], 3)
        self.assertEqual((a * a).coeffs, (1, 2, 1, 0))
        self.assertEqual((a * 3).coeffs, (3, 3, 0, 0))
        self.assertEqual((1 - a).coeffs, (0, -1, 0, 0))

        e = exp_series(6)
        s2 = series_s2(6)
        self.assertEqual(hadamard(e, s2), s2)

        with self.assertRaises(SeriesError) as ctx:
            hadamard(Series([1], 2), Series([1], 3))
        self.assertEqual(ctx.exception.code, 401)

    def test_exp_log(self):
        """Test that exp and log are inverse"""

        s = Series([0, 1, Fraction(1, 2), 3, -2], 8)

        self.assertEqual(s.exp().log(), s)
        self.assertEqual(exp_series(8), Series([0, 1], 8).exp())

        with self.assertRaises(SeriesError) as ctx:
            Series([2, 1], 4).log()
        self.assertEqual(ctx.exception.code, 402)

        with self.assertRaises(SeriesError) as ctx:
            Series([1, 1], 4).exp()
        self.assertEqual(ctx.exception.code, 407)

        self.assertEqual(Series.zero(6).exp(), Series.one(6))
        self.assertEqual(Series.one(6).log(), Series.zero(6))

    def test_calculus(self):
        """Test derivative, integral, theta and substitution"""

        s = Series([5, 1, 1, 1], 3)

        self.assertEqual(s.derivative().coeffs, (1, 2, 3))
        self.assertEqual(s.derivative().integral().coeffs, (0, 1, 1, 1))
        self.assertEqual(s.theta().coeffs, (0, 1, 2, 3))
        self.assertEqual(s.substitute(2, 5).coeffs, (5, 0, 1, 0, 1, 0))
        self.assertEqual(s.shift(1).coeffs, (0, 5, 1, 1, 1))
        self.assertEqual(s.laplace(), [5, 1, 2, 6])

    def test_integers(self):
        """Test rejection of fractional coefficients"""

        self.assertEqual(Series([1, 2]).integers(), [1, 2])

        with self.assertRaises(SeriesError) as ctx:
            Series([1, Fraction(1, 2)]).integers()
        self.assertEqual(ctx.exception.code, 403)
        self.assertEqual(ctx.exception.kwargs['index'], 1)

    def test_dict(self):
        """Test exact serialization of coefficients"""

        s = series_s2(6)
        self.assertEqual(series_from_dict(series_to_dict(s)), s)
        self.assertEqual(series_to_dict(s)['coeffs'][2], '1/2')


class CountingSeriesTest(unittest.TestCase):
    """Test suite for the paving counting series"""

    def test_involutions(self):
        """Test that S2 counts fixed-point-free involutions"""

        values = series_s2(10).laplace()
        self.assertEqual(values, [1, 0, 1, 0, 3, 0, 15, 0, 105, 0, 945])

    def test_all_triples(self):
        """Test that the triple Hadamard cube counts all triples"""

        star = series_p_star(16).laplace()
        for k in range(9):
            self.assertEqual(star[2 * k], total_triples(k))
        for k in range(8):
            self.assertEqual(star[2 * k + 1], 0)

        self.assertEqual(total_triples(2), 27)

    def test_rooted_series(self):
        """Test rooted counts from the logarithm"""

        values = series_p_rooted(24).integers()

        self.assertEqual([values[2 * k] for k in range(1, 13)],
                         A005411[:12])
        self.assertTrue(all(values[n] == 0 for n in range(1, 25, 2)))

    def test_recurrence(self):
        """Test the quadratic recurrence against known values"""

        values = rooted_by_recurrence(19)

        self.assertEqual(values[0], 0)
        self.assertEqual(values[1:], A005411)
        self.assertEqual(rooted_by_recurrence(0), [0])

    def test_recurrence_matches_series(self):
        """Test recurrence against the series to 40 darts"""

        series = series_p_rooted(40).integers()
        recurrence = rooted_by_recurrence(20)

        for k in range(1, 21):
            self.assertEqual(series[2 * k], recurrence[k])

    def test_riccati(self):
        """Test that the rooted counts satisfy the Riccati equation"""

        residual = riccati_residual(12)
        self.assertTrue(all(c == 0 for c in residual.coeffs))

        wrong = rooted_by_recurrence(12)
        wrong[5] += 1
        residual = riccati_residual(12, rooted=wrong)
        self.assertFalse(all(c == 0 for c in residual.coeffs))

    def test_hypergeometric(self):
        """Test the hypergeometric coefficients and their ODE"""

        f = hypergeom_2f0_coeffs(4)

        self.assertEqual(f[:3], [1, Fraction(1, 4), Fraction(9, 16)])
        self.assertTrue(all(c == 0 for c in ode_2f0_residual(30).coeffs))

    def test_moebius(self):
        """Test the Moebius function"""

        self.assertEqual([moebius(n) for n in range(1, 13)],
                         [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0])

        with self.assertRaises(SeriesError) as ctx:
            moebius(0)
        self.assertEqual(ctx.exception.code, 404)

    def test_cycle_index(self):
        """Test the exponential cycle-index factors"""

        self.assertEqual(cycle_index_t(1, 4), series_s2(4))
        self.assertEqual(cycle_index_t(2, 2).coeffs,
                         (1, Fraction(1, 2), Fraction(3, 8)))

    def test_unlabeled(self):
        """Test unlabeled counts from the cycle index"""

        values = series_p_tilde(20).integers()

        self.assertEqual([values[2 * k] for k in range(1, 11)], A002831)
        self.assertTrue(all(values[n] == 0 for n in range(1, 21, 2)))

    def test_stable_prefix(self):
        """Test that a higher order keeps the earlier coefficients"""

        low = series_p_tilde(12)
        high = series_p_tilde(20)

        self.assertEqual(high.truncate(12), low)
        self.assertEqual(series_p_rooted(24).truncate(16),
                         series_p_rooted(16))

    def test_count_tables(self):
        """Test the count tables behind the CLI"""

        self.assertEqual(rooted_counts(8), [(2, 1), (4, 4), (6, 25),
                                            (8, 208)])
        self.assertEqual(rooted_counts(8, 'series'), rooted_counts(8))
        self.assertEqual(rooted_counts(6, 'oracle'), rooted_counts(6))
        self.assertEqual(unlabeled_counts(6), [(2, 1), (4, 4), (6, 11)])
        self.assertEqual(unlabeled_counts(6, 'oracle'), unlabeled_counts(6))

    def test_oracle_limit_first(self):
        """Test that the dart guard fires before any oracle run"""

        target = 'pavings.series.enumerate_pavings'
        for counts in (rooted_counts, unlabeled_counts):
            with mock.patch(target) as enumerate_pavings:
                with self.assertRaises(EnumerationError) as ctx:
                    counts(8, 'oracle', limit=6)
                self.assertEqual(ctx.exception.code, 302)
                enumerate_pavings.assert_not_called()


class AsymptoticsTest(unittest.TestCase):
    """Test suite for the asymptotic comparison"""

    def test_ratios(self):
        """Test ratios at k = 10"""

        rooted = asymptotic_rooted(10)
        unlabeled = asymptotic_unlabeled(10)

        self.assertEqual(rooted.exact, A005411[9])
        self.assertEqual(unlabeled.exact, A002831[9])
        self.assertAlmostEqual(float(rooted.ratio), 0.951, places=2)
        self.assertAlmostEqual(float(unlabeled.ratio), 0.956, places=2)

    def test_convergence(self):
        """Test that the ratios approach 1 over k = 10..20"""

        for reports in asymptotic_reports(20):
            distances = [abs(float(r.ratio) - 1) for r in reports[9:]]
            for before, after in zip(distances, distances[1:]):
                self.assertLessEqual(after, before + 1e-3)
            self.assertLess(distances[-1], distances[0])

    def test_rows(self):
        """Test tabular rows"""

        k, exact, asymptote, ratio = asymptotic_rooted(3).to_row()

        self.assertEqual((k, exact), (3, 25))
        self.assertIsInstance(asymptote, mpf)
        self.assertIsInstance(ratio, float)


if __name__ == '__main__':
    unittest.main()
