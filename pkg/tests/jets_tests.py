# tests.jets_tests
# Tests for jets, Whitney remainders and semi-norms
#
# Created:  Sun Oct 18 17:26:51 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: jets_tests.py [] coxinv $

"""
Tests for jets, Whitney remainders and semi-norms
"""

##########################################################################
## Imports
##########################################################################

import unittest

from fractions import Fraction
from coxinv.jets import *
from coxinv.polynomials import Poly
from coxinv.distribute import geometric_ladder
from coxinv.exceptions import *

##########################################################################
## Fixtures
##########################################################################

T = Poly.variable(1, 0)

def power_field(points, exponent=1.5):
    """
    The order one field of |t|^exponent, a C^1 function whose derivative
    is only Holder continuous at the origin.
    """
    def func(x):
        t = float(x[0])
        sign = 1.0 if t > 0 else -1.0 if t < 0 else 0.0
        return {(0,): abs(t) ** exponent, (1,): exponent * sign * abs(t) ** (exponent - 1)}
    return JetField.from_callable(func, points, 1)

##########################################################################
## Jet Tests
##########################################################################

class JetTests(unittest.TestCase):

    def test_from_poly(self):
        jet = Jet.from_poly(T ** 2, (1,), 2)
        self.assertEqual(jet.coefficient((0,)), 1)
        self.assertEqual(jet.coefficient((1,)), 2)
        self.assertEqual(jet.coefficient((2,)), 2)
        self.assertEqual(jet.taylor_polynomial(), 1 + 2 * T + T ** 2)

    def test_evaluate(self):
        jet = Jet.from_poly(T ** 3, (1,), 1)
        self.assertEqual(jet.evaluate((2,)), 4)

    def test_formal_derivative(self):
        jet = Jet.from_poly(T ** 3, (1,), 3).formal_derivative((1,))
        self.assertEqual(jet.order, 2)
        self.assertEqual(jet.coefficient((0,)), 3)
        self.assertEqual(jet.coefficient((2,)), 6)

    def test_order_exceeded(self):
        jet = Jet.from_poly(T ** 2, (0,), 1)
        with self.assertRaises(OrderExceeded):
            jet.coefficient((2,))
        with self.assertRaises(OrderExceeded):
            jet.formal_derivative((2,))
        with self.assertRaises(OrderExceeded):
            jet.truncate(2)

    def test_missing_derivative(self):
        jet = Jet((0,), 1, {(0,): 0}, missing=[(1,)])
        self.assertFalse(jet.has((1,)))
        with self.assertRaises(MissingDerivative):
            jet.coefficient((1,))

    def test_sup_norm(self):
        jet = Jet.from_poly(3 * T ** 2 - T, (0,), 2)
        self.assertEqual(jet.sup_norm(), 6)
        self.assertEqual(jet.sup_norm(1), 1)

    def test_json(self):
        jet = Jet.from_poly(T ** 2 / 2, (Fraction(1, 2),), 2)
        data = jet.to_json()
        self.assertEqual(data["x"], ["1/2"])
        self.assertEqual(Jet.from_json(data, 2), jet)

##########################################################################
## Jet Field Tests
##########################################################################

class JetFieldTests(unittest.TestCase):

    def test_duplicate_samples(self):
        with self.assertRaises(InvalidJetField):
            JetField([Jet.zero((0,), 1), Jet.zero((0,), 1)])

    def test_mixed_orders(self):
        with self.assertRaises(InvalidJetField):
            JetField([Jet.zero((0,), 1), Jet.zero((1,), 2)])

    def test_empty_field(self):
        with self.assertRaises(InvalidJetField):
            JetField([])

    def test_jet_at(self):
        field = JetField.from_poly(T ** 2, [(0,), (1,)], 1)
        self.assertEqual(field.jet_at((1,)).coefficient((1,)), 2)
        with self.assertRaises(PointNotInField):
            field.jet_at((2,))

    def test_pairs(self):
        field = JetField.from_poly(T, [(1,), (0,), (2,)], 1)
        pairs = list(field.pairs())
        self.assertEqual(len(pairs), 6)
        self.assertEqual(pairs[0], ((0,), (1,)))

    def test_json_round_trip(self):
        field = JetField.from_poly(T ** 3, [(0,), (Fraction(1, 3),)], 2)
        again = JetField.from_json(field.to_json())
        self.assertEqual(list(again), list(field))

##########################################################################
## Remainder and Semi-norm Tests
##########################################################################

class WhitneyTests(unittest.TestCase):

    def setUp(self):
        self.field = JetField.from_poly(T ** 2, [(0,), (1,)], 1)

    def test_remainder(self):
        """
        Order one jets of t^2 on {0, 1} leave a remainder of 1
        """
        self.assertEqual(whitney_remainder(self.field, (0,), (0,), (1,)), 1)
        self.assertEqual(whitney_remainder(self.field, (0,), (1,), (0,)), 1)
        self.assertEqual(whitney_remainder(self.field, (1,), (0,), (1,)), 2)

    def test_polynomial_remainder_vanishes(self):
        field = JetField.from_poly(T ** 2, [(0,), (1,), (3,)], 2)
        for x, x2 in field.pairs():
            for q in ((0,), (1,), (2,)):
                self.assertEqual(whitney_remainder(field, q, x, x2), 0)

    def test_seminorms(self):
        report = seminorms(self.field, 1)
        self.assertEqual(report.sup_norm, 2)
        self.assertEqual(report.quotient, 2)
        self.assertEqual(report.whitney_norm, 4)
        self.assertEqual(report.worst, ((0,), (1,), (1,)))

    def test_seminorm_order(self):
        with self.assertRaises(OrderExceeded):
            seminorms(self.field, 2)

    def test_truncation_gap(self):
        field = JetField.from_poly(T ** 3, [(0,), (1,)], 3)
        gap, bound = truncation_gap(field, 1, (0,), (0,), (1,))
        self.assertEqual(gap, 1)
        self.assertEqual(bound, 1)

class RegularityProbeTests(unittest.TestCase):

    def test_polynomial_field_is_exact(self):
        points = [(x,) for x in geometric_ladder(0, 12)]
        field = JetField.from_poly(T ** 2 - T, points, 2)
        report = r_regularity_probe(field, 2)
        self.assertEqual(report.status, "exact")

    def test_holder_derivative(self):
        """
        The derivative of |t|^1.5 has remainders of order |t - t'|^0.5
        """
        points = [(Fraction(0),)] + [(x,) for x in geometric_ladder(0, 30)]
        report = r_regularity_probe(power_field(points), 1)
        self.assertEqual(report.status, "consistent")
        self.assertAlmostEqual(report.margin((1,)), 0.5, delta=0.1)
        self.assertAlmostEqual(report.margin((0,)), 0.5, delta=0.1)

    def test_insufficient_scales(self):
        points = [(Fraction(0),), (Fraction(1, 2),), (Fraction(1),)]
        with self.assertRaises(InsufficientScales):
            r_regularity_probe(power_field(points), 1)
