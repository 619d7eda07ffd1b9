"""
Rigged Path Tests

Test suite for rigged paths at level t:
- text format and structural validation
- admissibility, degree and minimal degree
- enumeration against the unpruned oracle
- riggings versus monomial exponents, including the p = 3 conditions
"""

from fractions import Fraction

from django.test import SimpleTestCase

from .exactq import QSeries
from .exceptions import InadmissiblePath, PathStructureError
from .minimal_model import ModelParams, conformal_dim
from .path_comb import (
    MonomialExponents,
    RiggedPath,
    brute_force_paths,
    char_paths,
    char_w3_monomials,
    check_p3_translation,
    enumerate_paths,
    enumerate_w3_monomials,
    exponents_from_path,
    format_path,
    min_degree,
    p3_admissible,
    parse_path,
    path_admissible,
    path_degree,
    path_from_exponents,
    w3_monomial_admissible,
)


class PathFormatTests(SimpleTestCase):
    """Parsing, printing and structural checks"""

    def test_parse_and_format(self):
        path = parse_path('1,2,1;0,0')
        self.assertEqual(path.r, (1, 2, 1))
        self.assertEqual(path.sigma, (0, 0))
        self.assertEqual(path.length, 2)
        self.assertEqual(format_path(path), '1,2,1;0,0')

    def test_empty_path(self):
        path = parse_path('1;')
        self.assertEqual(path, RiggedPath.empty())
        self.assertEqual(path.length, 0)
        self.assertEqual(str(path), '1;')

    def test_index_order_accessors(self):
        path = parse_path('2,1,2,1;2,0,1')
        self.assertEqual(path.rs, (1, 2, 1, 2))
        self.assertEqual(path.sigmas, (1, 0, 2))
        self.assertEqual(RiggedPath.from_indexed(path.rs, path.sigmas), path)

    def test_structural_errors(self):
        for text in ('2;', '1,2,1;0', '1,3,1;0,0', '0,1;0', '1,2,1', '1,x;0'):
            with self.subTest(text=text):
                with self.assertRaises(PathStructureError):
                    parse_path(text)

    def test_height_above_range(self):
        with self.assertRaises(PathStructureError):
            path_admissible(ModelParams(3, 7), parse_path('3,2,1;0,0'))


class AdmissibilityTests(SimpleTestCase):
    """sigma >= 0 and the window inequality"""

    def setUp(self):
        self.params = ModelParams(3, 7)

    def test_short_path_is_admissible(self):
        self.assertTrue(path_admissible(self.params, parse_path('1,2,1;0,0')))

    def test_window_violation(self):
        report = path_admissible(self.params, parse_path('1,2,1,2,1;0,1,0,0'))
        self.assertFalse(report)
        self.assertEqual(report.constraint, 'AD2')
        self.assertEqual(report.index, 1)
        with self.assertRaises(InadmissiblePath):
            report.raise_if_failed()

    def test_window_satisfied(self):
        self.assertTrue(path_admissible(self.params, parse_path('1,2,1,2,1;0,2,0,0')))

    def test_negative_rigging(self):
        report = path_admissible(self.params, parse_path('2,1;-1'))
        self.assertEqual(report.constraint, 'sigma>=0')


class DegreeTests(SimpleTestCase):
    """Degrees and minimal degrees"""

    def test_known_degrees(self):
        self.assertEqual(path_degree(ModelParams(3, 7), RiggedPath.empty()), 0)
        self.assertEqual(path_degree(ModelParams(3, 7), parse_path('2,1;3')), Fraction(17, 4))
        for p, pp in ((3, 4), (3, 7), (4, 9), (5, 7)):
            self.assertEqual(path_degree(ModelParams(p, pp), parse_path('1,2,1;0,0')), 2)

    def test_inadmissible_path_has_no_degree(self):
        with self.assertRaises(InadmissiblePath):
            path_degree(ModelParams(3, 7), parse_path('1,2,1,2,1;0,1,0,0'))

    def test_min_degree(self):
        params = ModelParams(3, 7)
        self.assertEqual(min_degree(params, 0, 1), 0)
        self.assertIsNone(min_degree(params, 2, 2))
        self.assertEqual(min_degree(params, 2, 1), 2)
        self.assertEqual(min_degree(params, 1, 2), Fraction(5, 4))

    def test_min_degree_unreachable_height(self):
        self.assertIsNone(min_degree(ModelParams(4, 9), 0, 3))


class EnumerationTests(SimpleTestCase):
    """Bounded enumeration and graded characters"""

    def setUp(self):
        self.params = ModelParams(3, 7)

    def test_small_enumeration(self):
        paths = enumerate_paths(self.params, 2, 1, 4)
        self.assertEqual(len(paths), 4)
        self.assertEqual(
            sorted(path.sigma for path in paths),
            [(0, 0), (0, 1), (1, 0), (2, 0)],
        )

    def test_parity_gives_empty(self):
        self.assertEqual(enumerate_paths(self.params, 1, 1, 100), [])

    def test_single_step(self):
        self.assertEqual(enumerate_paths(self.params, 1, 2, Fraction(5, 4)), [parse_path('2,1;0')])

    def test_char_paths(self):
        expected = QSeries({2: 1, 3: 1, 4: 2, 5: 2, 6: 3}, 6)
        self.assertEqual(char_paths(self.params, 2, 1, 6), expected)
        self.assertEqual(char_paths(self.params, 0, 1, 10), QSeries.one(10))
        quarter = QSeries({Fraction(5, 4): 1, Fraction(9, 4): 1, Fraction(13, 4): 1}, Fraction(13, 4))
        self.assertEqual(char_paths(self.params, 1, 2, Fraction(13, 4)), quarter)

    def test_degrees_sit_on_the_grid(self):
        """d(P) - Delta_{r,1} is a nonnegative integer"""
        for p, pp in ((3, 7), (4, 9), (5, 7)):
            params = ModelParams(p, pp)
            for r in range(1, p):
                for L in range(6):
                    for path in enumerate_paths(params, L, r, 10):
                        offset = path_degree(params, path) - conformal_dim(params, r, 1)
                        self.assertEqual(offset.denominator, 1)
                        self.assertGreaterEqual(offset, 0)

    def test_matches_brute_force(self):
        for p, pp in ((3, 4), (3, 7), (4, 5), (4, 9), (5, 7)):
            params = ModelParams(p, pp)
            for r in range(1, p):
                for L in range(6):
                    with self.subTest(params=str(params), r=r, L=L):
                        self.assertEqual(enumerate_paths(params, L, r, 9), brute_force_paths(params, L, r, 9))

    def test_window_condition_void_below_level_two(self):
        params = ModelParams(4, 7)
        for r in range(1, 4):
            for L in range(6):
                self.assertEqual(
                    enumerate_paths(params, L, r, 10),
                    brute_force_paths(params, L, r, 10, check_windows=False),
                )


class ExponentTests(SimpleTestCase):
    """Riggings versus monomial exponents"""

    def setUp(self):
        self.params = ModelParams(3, 7)

    def test_exponents_from_path(self):
        exponents = exponents_from_path(self.params, parse_path('1,2,1;0,0'))
        self.assertEqual(exponents.n, (Fraction(3, 4), Fraction(5, 4)))
        self.assertEqual(exponents_from_path(self.params, parse_path('2,1;2')).n, (Fraction(13, 4),))
        self.assertEqual(exponents_from_path(self.params, RiggedPath.empty()).n, ())

    def test_path_from_exponents(self):
        exponents = MonomialExponents((Fraction(3, 4), Fraction(5, 4)), (1, 2, 1))
        self.assertEqual(path_from_exponents(self.params, exponents), parse_path('1,2,1;0,0'))
        boundary = MonomialExponents((Fraction(5, 4),), (2, 1))
        self.assertEqual(path_from_exponents(self.params, boundary), parse_path('2,1;0'))

    def test_highest_weight_violation(self):
        with self.assertRaises(InadmissiblePath) as ctx:
            path_from_exponents(self.params, MonomialExponents((Fraction(1, 4),), (2, 1)))
        self.assertEqual(ctx.exception.constraint, 'HW')

    def test_off_grid_exponent(self):
        with self.assertRaises(InadmissiblePath) as ctx:
            path_from_exponents(self.params, MonomialExponents((Fraction(1, 3),), (2, 1)))
        self.assertEqual(ctx.exception.constraint, 'grid')

    def test_roundtrip_on_enumerated_paths(self):
        for r in (1, 2):
            for L in range(6):
                for path in enumerate_paths(self.params, L, r, 10):
                    exponents = exponents_from_path(self.params, path)
                    self.assertEqual(path_from_exponents(self.params, exponents), path)
                    self.assertEqual(sum(exponents.n), path_degree(self.params, path))


class PThreeTests(SimpleTestCase):
    """The p = 3 specialisations"""

    def test_p3_admissible_examples(self):
        heights = (1, 2, 1)
        self.assertTrue(p3_admissible(7, MonomialExponents((Fraction(3, 4), Fraction(5, 4)), heights)))
        self.assertFalse(p3_admissible(7, MonomialExponents((Fraction(-3, 4), Fraction(5, 4)), heights)))

    def test_p3_requires_alternating_heights(self):
        with self.assertRaises(PathStructureError):
            p3_admissible(7, MonomialExponents((Fraction(5, 4),), (1, 1)))

    def test_translation_agrees_with_generic_check(self):
        for pprime in (4, 5, 7, 8):
            for r in (1, 2):
                for L in range(5):
                    checked, mismatches = check_p3_translation(pprime, L, r, 8)
                    self.assertEqual(mismatches, [], (pprime, L, r))

    def test_w3_monomials(self):
        self.assertTrue(w3_monomial_admissible(7, (6, 1, 1)))
        self.assertFalse(w3_monomial_admissible(7, (5, 1, 1)))
        self.assertTrue(w3_monomial_admissible(7, (1,)))
        self.assertFalse(w3_monomial_admissible(7, (1, 2)))

    def test_w3_enumeration(self):
        found = enumerate_w3_monomials(7, 3, 9)
        self.assertIn((6, 1, 1), found)
        self.assertTrue(all(w3_monomial_admissible(7, lam) and sum(lam) <= 9 for lam in found))
        self.assertEqual(char_w3_monomials(7, 3, 9).coeff(8), sum(1 for lam in found if sum(lam) == 8))
