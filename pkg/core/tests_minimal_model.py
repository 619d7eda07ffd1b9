"""
Minimal Model Constant Tests

Test suite for model parameters and the closed-form constants:
- ModelParams validation
- conformal dimensions and central charge
- weights w and the integers v
"""

from fractions import Fraction

from django.test import SimpleTestCase

from .exceptions import InvalidParameters
from .minimal_model import (
    ModelParams,
    central_charge,
    conformal_dim,
    reduced_params,
    sigma_cap,
    v_int,
    weight_w,
)

MODELS = ((3, 4), (3, 5), (4, 5), (3, 7), (5, 7), (3, 8), (4, 7), (5, 8), (4, 9), (3, 10), (5, 12))


class ModelParamsTests(SimpleTestCase):
    """Validation of (p, p')"""

    def test_valid_pair(self):
        params = ModelParams(3, 7)
        self.assertEqual(params.t, Fraction(7, 3))
        self.assertEqual(str(params), '(3,7)')

    def test_rejects_common_factor(self):
        with self.assertRaises(InvalidParameters):
            ModelParams(4, 6)

    def test_rejects_small_p_and_wrong_order(self):
        with self.assertRaises(InvalidParameters):
            ModelParams(2, 5)
        with self.assertRaises(InvalidParameters):
            ModelParams(5, 4)

    def test_rejects_non_integers(self):
        with self.assertRaises(InvalidParameters):
            ModelParams(3, '7')
        with self.assertRaises(InvalidParameters):
            ModelParams(True, 7)

    def test_reduced_params(self):
        self.assertEqual(reduced_params(ModelParams(3, 7)), ModelParams(3, 4))
        with self.assertRaises(InvalidParameters):
            reduced_params(ModelParams(3, 5))


class ConformalDimensionTests(SimpleTestCase):
    """Delta_{r,s} and c"""

    def test_known_values(self):
        self.assertEqual(conformal_dim(ModelParams(3, 4), 1, 1), 0)
        self.assertEqual(conformal_dim(ModelParams(3, 4), 2, 1), Fraction(1, 2))
        self.assertEqual(conformal_dim(ModelParams(3, 4), 1, 2), Fraction(1, 16))
        self.assertEqual(conformal_dim(ModelParams(3, 5), 2, 1), Fraction(3, 4))
        self.assertEqual(conformal_dim(ModelParams(4, 5), 3, 1), Fraction(3, 2))
        self.assertEqual(conformal_dim(ModelParams(3, 7), 2, 1), Fraction(5, 4))

    def test_vacuum_is_lowest(self):
        for p, pp in MODELS:
            params = ModelParams(p, pp)
            self.assertEqual(conformal_dim(params, 1, 1), 0)
            for r in range(2, p):
                self.assertGreater(conformal_dim(params, r, 1), 0)

    def test_out_of_range_labels(self):
        with self.assertRaises(InvalidParameters):
            conformal_dim(ModelParams(3, 4), 3, 1)
        with self.assertRaises(InvalidParameters):
            conformal_dim(ModelParams(3, 4), 1, 4)

    def test_central_charge(self):
        self.assertEqual(central_charge(ModelParams(3, 4)), Fraction(1, 2))
        self.assertEqual(central_charge(ModelParams(4, 5)), Fraction(7, 10))


class WeightTests(SimpleTestCase):
    """Weights w(a, b, c)"""

    def test_known_weights(self):
        self.assertEqual(weight_w(ModelParams(4, 5), 1, 2, 3), Fraction(5, 8))
        self.assertEqual(weight_w(ModelParams(3, 7), 1, 2, 1), Fraction(-1, 2))
        self.assertEqual(weight_w(ModelParams(5, 7), 2, 3, 2), Fraction(1, 2))

    def test_invalid_triple(self):
        with self.assertRaises(InvalidParameters):
            weight_w(ModelParams(4, 5), 1, 3, 2)
        with self.assertRaises(InvalidParameters):
            weight_w(ModelParams(3, 4), 2, 3, 2)

    def test_symmetries(self):
        """w(a,b,c) = w(c,b,a) = w(p-a,p-b,p-c)"""
        for p, pp in MODELS:
            params = ModelParams(p, pp)
            for b in range(1, p):
                for a in (b - 1, b + 1):
                    for c in (b - 1, b + 1):
                        if not all(1 <= x <= p - 1 for x in (a, c)):
                            continue
                        value = weight_w(params, a, b, c)
                        self.assertEqual(value, weight_w(params, c, b, a))
                        self.assertEqual(value, weight_w(params, p - a, p - b, p - c))


class VIntTests(SimpleTestCase):
    """The integers v(r)"""

    def test_known_values(self):
        self.assertEqual(v_int(ModelParams(3, 7), 1), 2)
        self.assertEqual(v_int(ModelParams(5, 7), 1), -1)
        self.assertEqual(v_int(ModelParams(4, 9), 2), 1)
        self.assertEqual(v_int(ModelParams(4, 9), 1), 1)

    def test_reflection_symmetry(self):
        for p, pp in MODELS:
            params = ModelParams(p, pp)
            for r in range(1, p - 1):
                self.assertEqual(v_int(params, r), v_int(params, p - 1 - r))

    def test_sign_follows_level(self):
        for p, pp in MODELS:
            params = ModelParams(p, pp)
            values = [v_int(params, r) for r in range(1, p - 1)]
            if params.t < 2:
                self.assertTrue(all(v <= 0 for v in values), params)
            else:
                self.assertTrue(all(v >= 0 for v in values), params)
                self.assertGreaterEqual(v_int(params, 1), 1)

    def test_out_of_range(self):
        with self.assertRaises(InvalidParameters):
            v_int(ModelParams(3, 7), 2)

    def test_sigma_cap(self):
        self.assertEqual(sigma_cap(ModelParams(3, 7)), 2)
        self.assertEqual(sigma_cap(ModelParams(5, 7)), 0)
