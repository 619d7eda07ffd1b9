"""
Character Identity Tests

Test suite for the character formulas and q-series identities:
- bosonic and fermionic characters, K-polynomials and Q^(k)
- partial characters and the two length recurrences
- the path sum against the bosonic character
- the Gauss multi-sum and the F_k identity
"""

from fractions import Fraction

from django.test import SimpleTestCase

from .characters import (
    Verdict,
    char_bosonic,
    char_fermionic,
    char_main_sum,
    char_partial,
    compare_series,
    f_k_series,
    gauss_multisum,
    kostka_poly,
    q_form_eval,
    verify_char_recurrence,
    verify_fk_identity,
    verify_gauss_identity,
    verify_main_theorem,
    verify_path_recurrence,
)
from .exactq import QSeries, euler_inverse, inv_poch_product
from .exceptions import InvalidParameters, LCapReached
from .minimal_model import ModelParams
from .path_comb import char_paths


class BosonicTests(SimpleTestCase):
    """Alternating theta sums over 1/(q)_inf"""

    def test_ising_vacuum(self):
        series = char_bosonic(ModelParams(3, 4), 1, 1, 4)
        self.assertEqual(series, QSeries({0: 1, 2: 1, 3: 1, 4: 2}, 4))

    def test_vacuum_normalisation(self):
        self.assertEqual(char_bosonic(ModelParams(3, 4), 1, 1, 0), QSeries.one(0))

    def test_leading_term(self):
        series = char_bosonic(ModelParams(3, 5), 2, 1, Fraction(3, 4))
        self.assertEqual(series, QSeries({Fraction(3, 4): 1}, Fraction(3, 4)))

    def test_below_conformal_dimension_is_zero(self):
        series = char_bosonic(ModelParams(3, 5), 2, 1, Fraction(1, 2))
        self.assertTrue(series.is_zero())

    def test_coefficients_are_nonnegative(self):
        for p, pp in ((3, 4), (4, 5), (3, 7), (4, 9)):
            params = ModelParams(p, pp)
            for r in range(1, p):
                for s in range(1, pp):
                    series = char_bosonic(params, r, s, 12)
                    self.assertTrue(all(c > 0 for _, c in series.items()), (p, pp, r, s))


class FermionicTests(SimpleTestCase):
    """K-polynomials, Q^(k) and the fermionic sum"""

    def test_kostka_small_cases(self):
        self.assertEqual(kostka_poly(3, 1, 0, 1), QSeries.one())
        self.assertEqual(kostka_poly(3, 1, 1, 2), QSeries.one())
        self.assertTrue(kostka_poly(3, 1, 1, 1).is_zero())
        self.assertTrue(kostka_poly(4, 1, 0, 3).is_zero())

    def test_kostka_rejects_bad_arguments(self):
        with self.assertRaises(InvalidParameters):
            kostka_poly(3, 1, -1, 1)

    def test_q_form(self):
        self.assertEqual(q_form_eval(1, (5,)), 0)
        self.assertEqual(q_form_eval(2, (2, 1)), 6)
        self.assertEqual(q_form_eval(2, (0, 0)), 0)
        with self.assertRaises(InvalidParameters):
            q_form_eval(2, (1,))

    def test_fermionic_matches_bosonic(self):
        cases = ((3, 4, 1, 4), (3, 4, 2, 8), (4, 5, 1, 10), (4, 5, 3, 10), (3, 7, 1, 12), (3, 7, 2, 12), (4, 9, 2, 10))
        for p, pp, r, N in cases:
            params = ModelParams(p, pp)
            with self.subTest(params=str(params), r=r):
                self.assertTrue(char_fermionic(params, r, N).equal_up_to(char_bosonic(params, r, 1, N), N))

    def test_fermionic_leading_term(self):
        series = char_fermionic(ModelParams(3, 7), 2, Fraction(5, 4))
        self.assertEqual(series.as_dict(), {Fraction(5, 4): 1})

    def test_partial_characters(self):
        params = ModelParams(3, 7)
        self.assertTrue(char_partial(params, 1, 0, 10).equal_up_to(QSeries.one(10), 10))
        expected = QSeries({2: 1, 3: 1, 4: 2, 5: 2, 6: 3}, 6)
        self.assertTrue(char_partial(params, 1, 2, 6).equal_up_to(expected, 6))
        self.assertTrue(char_partial(params, 1, 1, 10).is_zero())

    def test_partials_sum_to_fermionic(self):
        params = ModelParams(3, 7)
        total = QSeries.zero(8)
        for L in range(17):
            total = total + char_partial(params, 1, L, 8)
        self.assertTrue(total.equal_up_to(char_fermionic(params, 1, 8), 8))

    def test_partial_matches_paths_per_length(self):
        for p, pp, r, L in ((3, 7, 1, 2), (3, 7, 2, 3), (4, 9, 2, 3), (4, 9, 3, 4)):
            params = ModelParams(p, pp)
            with self.subTest(params=str(params), r=r, L=L):
                self.assertTrue(char_partial(params, r, L, 10).equal_up_to(char_paths(params, L, r, 10), 10))


class RecurrenceTests(SimpleTestCase):
    """The length recurrences and the main path sum"""

    def test_character_recurrence(self):
        self.assertTrue(verify_char_recurrence(ModelParams(3, 7), 1, 2, 10).ok)
        self.assertTrue(verify_char_recurrence(ModelParams(3, 7), 2, 1, 10).ok)
        self.assertTrue(verify_char_recurrence(ModelParams(4, 9), 3, 4, 12).ok)

    def test_path_recurrence(self):
        self.assertTrue(verify_path_recurrence(ModelParams(3, 7), 1, 2, 10).ok)
        self.assertTrue(verify_path_recurrence(ModelParams(3, 7), 1, 0, 10).ok)
        self.assertTrue(verify_path_recurrence(ModelParams(5, 12), 2, 3, 10).ok)

    def test_recurrence_needs_level_above_two(self):
        with self.assertRaises(InvalidParameters):
            verify_char_recurrence(ModelParams(4, 5), 1, 2, 10)

    def test_main_theorem(self):
        self.assertTrue(verify_main_theorem(ModelParams(3, 4), 1, 20).ok)
        self.assertTrue(verify_main_theorem(ModelParams(3, 7), 2, 20).ok)
        self.assertTrue(verify_main_theorem(ModelParams(4, 5), 3, 16).ok)

    def test_main_sum_reports_lengths(self):
        series, largest = char_main_sum(ModelParams(3, 4), 1, 6, 64)
        self.assertTrue(series.equal_up_to(char_bosonic(ModelParams(3, 4), 1, 1, 6), 6))
        self.assertEqual(largest % 2, 0)

    def test_length_cap(self):
        with self.assertRaises(LCapReached) as ctx:
            char_main_sum(ModelParams(3, 7), 1, 10, 0)
        self.assertEqual(ctx.exception.l_cap, 0)


class MultiSumTests(SimpleTestCase):
    """The Gauss multi-sum and the F_k identity"""

    def test_f1_at_zero_counts_partitions(self):
        self.assertEqual(f_k_series(1, 0, 4), euler_inverse(4))

    def test_negative_shift_kills_leading_terms(self):
        self.assertEqual(f_k_series(2, -1, 6).coeff(0), 0)

    def test_f2_matches_direct_double_sum(self):
        N, mu = 3, 1
        expected = QSeries.zero(N)
        for n0 in range(N + 1):
            for n1 in range(N + 1):
                exp = n0 * n0 + n1 * n1 + mu * n0 + (mu + 1) * n1
                if exp > N:
                    continue
                term = inv_poch_product((n0 + mu, n0, n1 - n0), N - exp).shift(exp)
                expected = expected + term
        self.assertEqual(f_k_series(2, mu, N), expected)
        self.assertEqual([expected.coeff(n) for n in range(4)], [1, 1, 1, 2])

    def test_argument_checks(self):
        with self.assertRaises(InvalidParameters):
            f_k_series(0, 1, 4)
        with self.assertRaises(InvalidParameters):
            gauss_multisum(-1, 0, 4)

    def test_gauss_identity(self):
        for l, mu, N in ((0, 0, 10), (2, 3, 12), (1, -2, 10), (2, -1, 15)):
            with self.subTest(l=l, mu=mu):
                self.assertTrue(verify_gauss_identity(l, mu, N).ok)

    def test_fk_identity(self):
        for k, mu, N in ((1, 1, 10), (2, 0, 10), (3, 2, 8), (2, -2, 10)):
            with self.subTest(k=k, mu=mu):
                self.assertTrue(verify_fk_identity(k, mu, N).ok)


class CompareSeriesTests(SimpleTestCase):
    """Verdicts from truncated comparisons"""

    def test_agreement(self):
        verdict = compare_series('same', QSeries.one(3), QSeries.one(5), 3)
        self.assertEqual(verdict, Verdict(True, 'same'))

    def test_mismatch_reports_first_difference(self):
        verdict = compare_series('differ', QSeries({0: 1, 2: 3}, 4), QSeries({0: 1, 2: 1}, 4), 4)
        self.assertFalse(verdict.ok)
        self.assertEqual(verdict.first_diff, (Fraction(2), 3, 1))
        self.assertIn('q^2', verdict.detail)

    def test_skip_and_cap(self):
        self.assertTrue(Verdict.skip('x', 'reason').skipped)
        capped = Verdict.cap('y', 'reason')
        self.assertTrue(capped.capped)
        self.assertFalse(capped.ok)
