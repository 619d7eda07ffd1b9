"""
Exact Arithmetic Tests

Test suite for the q-series kernel:
- rational coercion and the INFINITY sentinel
- truncated series arithmetic and truncation tracking
- q-Pochhammer symbols, Gaussian binomials and 1/(q)_inf
"""

import random
from fractions import Fraction

from django.test import SimpleTestCase

from .exactq import (
    INFINITY,
    QSeries,
    as_rational,
    euler_inverse,
    format_rational,
    gauss_binom,
    inv_poch,
    inv_poch_product,
    poch,
)
from .exceptions import InvalidParameters


class RationalCoercionTests(SimpleTestCase):
    """Parsing and printing exact rationals"""

    def test_strings_ints_and_fractions(self):
        """All accepted inputs become Fractions"""
        self.assertEqual(as_rational('7/4'), Fraction(7, 4))
        self.assertEqual(as_rational(3), Fraction(3))
        self.assertEqual(as_rational(Fraction(1, 2)), Fraction(1, 2))

    def test_bad_string_is_invalid_parameter(self):
        with self.assertRaises(InvalidParameters):
            as_rational('seven quarters')
        with self.assertRaises(InvalidParameters):
            as_rational('1/0')

    def test_booleans_rejected(self):
        with self.assertRaises(TypeError):
            as_rational(True)

    def test_format_uses_num_den(self):
        self.assertEqual(format_rational(Fraction(6, 8)), '3/4')
        self.assertEqual(format_rational(2), '2/1')


class InfinitySentinelTests(SimpleTestCase):
    """The sigma_L sentinel"""

    def test_absorbs_finite_changes(self):
        self.assertIs(INFINITY + 5, INFINITY)
        self.assertIs(INFINITY - 3, INFINITY)
        self.assertIs(2 + INFINITY, INFINITY)

    def test_finite_minus_infinity_is_undefined(self):
        with self.assertRaises(ArithmeticError):
            3 - INFINITY

    def test_ordering(self):
        self.assertTrue(INFINITY > 10 ** 9)
        self.assertFalse(INFINITY < 0)
        self.assertEqual(INFINITY, INFINITY)
        self.assertNotEqual(INFINITY, 10 ** 9)


class QSeriesArithmeticTests(SimpleTestCase):
    """Truncated series arithmetic"""

    def test_zero_coefficients_are_dropped(self):
        series = QSeries({0: 1, 1: 0, 2: 3}, 5)
        self.assertEqual(series.as_dict(), {Fraction(0): 1, Fraction(2): 3})

    def test_terms_beyond_truncation_are_dropped(self):
        series = QSeries({0: 1, 4: 1}, 3)
        self.assertEqual(series.as_dict(), {Fraction(0): 1})

    def test_coefficient_beyond_truncation_is_unknown(self):
        with self.assertRaises(ValueError):
            QSeries.one(2).coeff(3)

    def test_sum_takes_smaller_truncation(self):
        total = QSeries.one(5) + QSeries.monomial(1, trunc=3)
        self.assertEqual(total.trunc, 3)
        self.assertEqual(total.as_dict(), {Fraction(0): 1, Fraction(1): 1})

    def test_product_truncation_uses_valuations(self):
        """Known up to min(N_a + val_b, N_b + val_a)"""
        left = QSeries({0: 1, 1: 1}, 3)
        right = QSeries({2: 1}, 4)
        product = left * right
        self.assertEqual(product.trunc, 4)
        self.assertEqual(product.as_dict(), {Fraction(2): 1, Fraction(3): 1})

    def test_product_with_exact_zero_is_exact_zero(self):
        product = QSeries.zero() * euler_inverse(4)
        self.assertTrue(product.is_zero())
        self.assertTrue(product.is_exact)

    def test_shift_moves_truncation(self):
        shifted = QSeries.one(2).shift(Fraction(1, 4))
        self.assertEqual(shifted.trunc, Fraction(9, 4))
        self.assertEqual(shifted.coeff(Fraction(1, 4)), 1)

    def test_truncate_cannot_raise_bound(self):
        with self.assertRaises(ValueError):
            QSeries.one(2).truncate(3)

    def test_first_diff_reports_smallest_exponent(self):
        left = QSeries({0: 1, 2: 5, 3: 1}, 4)
        right = QSeries({0: 1, 2: 4}, 4)
        self.assertEqual(left.first_diff(right, 4), (Fraction(2), 5, 4))
        self.assertTrue(left.equal_up_to(right, 1))

    def test_first_diff_beyond_truncation_raises(self):
        with self.assertRaises(ValueError):
            QSeries.one(2).first_diff(QSeries.one(5), 3)

    def test_string_form(self):
        self.assertEqual(str(QSeries.one(0)), '1 + O(q^1)')
        self.assertEqual(str(QSeries({0: 1, 1: -2})), '1 - 2*q')
        self.assertEqual(str(QSeries.zero()), '0')


class RingLawTests(SimpleTestCase):
    """Ring axioms on small random series sharing one truncation"""

    TRUNC = 8

    def setUp(self):
        rng = random.Random(20)
        self.samples = [self.random_series(rng) for _ in range(6)]

    def random_series(self, rng):
        terms = {Fraction(k, 2): rng.randint(-3, 3) for k in range(1, 2 * self.TRUNC + 1)}
        terms[0] = rng.choice((-2, -1, 1, 2))
        return QSeries(terms, self.TRUNC)

    def triples(self):
        for a in self.samples:
            for b in self.samples[:3]:
                for c in self.samples[3:]:
                    yield a, b, c

    def test_commutativity(self):
        for a in self.samples:
            for b in self.samples:
                self.assertEqual(a + b, b + a)
                self.assertEqual(a * b, b * a)

    def test_associativity(self):
        for a, b, c in self.triples():
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))

    def test_distributivity(self):
        for a, b, c in self.triples():
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((b + c) * a, b * a + c * a)

    def test_additive_inverse(self):
        for a in self.samples:
            self.assertTrue((a - a).is_zero())
            self.assertEqual(a * QSeries.one(), a)


class PochhammerTests(SimpleTestCase):
    """q-Pochhammer symbols and Gaussian binomials"""

    def test_poch_two(self):
        self.assertEqual(poch(2).as_dict(), {Fraction(0): 1, Fraction(1): -1, Fraction(2): -1, Fraction(3): 1})

    def test_poch_times_inverse_is_one(self):
        product = poch(3) * inv_poch(3, 6)
        self.assertTrue(product.equal_up_to(QSeries.one(6), 6))

    def test_inv_poch_one_is_geometric(self):
        self.assertEqual([c for _, c in inv_poch(1, 3).items()], [1, 1, 1, 1])

    def test_inv_poch_negative_is_zero(self):
        series = inv_poch(-1, 5)
        self.assertTrue(series.is_zero())
        self.assertEqual(series.trunc, 5)

    def test_inv_poch_product_is_order_free(self):
        self.assertEqual(inv_poch_product((2, 1), 6), inv_poch_product((1, 2), 6))
        self.assertEqual(inv_poch_product((0, 2), 6), inv_poch(2, 6))

    def test_partition_numbers(self):
        """1/(q)_inf counts partitions"""
        series = euler_inverse(7)
        self.assertEqual([series.coeff(n) for n in range(8)], [1, 1, 2, 3, 5, 7, 11, 15])

    def test_partition_numbers_grow(self):
        coeffs = [c for _, c in euler_inverse(20).items()]
        self.assertEqual(len(coeffs), 21)
        self.assertTrue(all(c > 0 for c in coeffs))
        self.assertTrue(all(a <= b for a, b in zip(coeffs, coeffs[1:])))

    def test_euler_inverse_rejects_negative_bound(self):
        with self.assertRaises(InvalidParameters):
            euler_inverse(-1)

    def test_gaussian_binomial(self):
        binom = gauss_binom(4, 2)
        self.assertEqual([binom.coeff(n) for n in range(5)], [1, 1, 2, 1, 1])
        self.assertEqual(binom.at_one(), 6)
        self.assertTrue(binom.is_exact)

    def test_gaussian_binomial_symmetry(self):
        for m in range(7):
            for n in range(m + 1):
                with self.subTest(m=m, n=n):
                    self.assertEqual(gauss_binom(m, n), gauss_binom(m, m - n))

    def test_gaussian_binomial_outside_range(self):
        self.assertTrue(gauss_binom(2, 3).is_zero())
        self.assertTrue(gauss_binom(2, -1).is_zero())
        self.assertEqual(gauss_binom(0, 0).as_dict(), {Fraction(0): 1})
