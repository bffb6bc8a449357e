# tests.chevalley_tests
# Tests for the Chevalley mapping module
#
# Created:  Sun Oct 18 16:58:03 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: chevalley_tests.py [] coxinv $

"""
Tests for the Chevalley mapping module
"""

##########################################################################
## Imports
##########################################################################

import random
import unittest

from fractions import Fraction
from coxinv.groups import build_group
from coxinv.polynomials import Poly
from coxinv.chevalley import *
from coxinv.verify import random_invariant_polynomial
from coxinv.exceptions import NotInvariant, DimensionMismatch

##########################################################################
## Helpers
##########################################################################

def chevalley(name):
    return basic_invariants(build_group(name))

##########################################################################
## Basic Invariants Tests
##########################################################################

class BasicInvariantsTests(unittest.TestCase):

    def test_b2_invariants(self):
        P = chevalley("B2")
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        self.assertEqual(P.polys, (x ** 2 + y ** 2, x ** 4 + y ** 4))
        self.assertEqual(P.degrees, [2, 4])

    def test_eval(self):
        P = chevalley("B2")
        self.assertEqual(eval_P(P, (1, 2)), (5, 17))

    def test_eval_dimension(self):
        with self.assertRaises(DimensionMismatch):
            eval_P(chevalley("B2"), (1, 2, 3))

    def test_jacobian(self):
        P = chevalley("B2")
        self.assertEqual(jacobian(P, (1, 2)), [[2, 4], [4, 32]])

    def test_degrees_match_group(self):
        for name in ("A1", "A3", "B3", "D4", "I2(5)", "R1xA1xB2"):
            P = chevalley(name)
            self.assertEqual(sorted(P.degrees), sorted(P.group.degrees), name)

    def test_d_invariant_order(self):
        """
        D_n lists the even power sums first and the product last
        """
        self.assertEqual(chevalley("D3").degrees, [2, 4, 3])

    def test_invariance(self):
        for name in ("A2", "B2", "D3", "I2(3)", "I2(5)", "I2(8)"):
            P = chevalley(name)
            for p in P.polys:
                self.assertTrue(is_invariant(P.group, p), name)

    def test_not_invariant(self):
        g = build_group("B2")
        self.assertFalse(is_invariant(g, Poly.variable(2, 0)))

    def test_dihedral_coefficients(self):
        """
        I2(3): p2 = (3/4)(x^3 - 3 x y^2)
        """
        self.assertEqual(dihedral_coefficient(3, 0), Fraction(3, 4))
        self.assertEqual(dihedral_coefficient(3, 1), 0)
        self.assertEqual(dihedral_coefficient(3, 2), Fraction(-9, 4))
        self.assertEqual(dihedral_coefficient(3, 3), 0)

    def test_pivots(self):
        P = chevalley("D3")
        pivots = P.pivots()
        self.assertEqual(pivots[0].kind, "mixed")
        self.assertEqual(pivots[0].index, 2)
        self.assertEqual(tuple(pivots[0].exponents), (1, 1, 1))
        self.assertEqual([pv.index for pv in pivots[1:]], [1, 0])

##########################################################################
## Jacobian Factorization Tests
##########################################################################

class JacobianTests(unittest.TestCase):

    def test_b2_constant(self):
        c, residual = verify_jacobian_factorization(chevalley("B2"))
        self.assertEqual(c, -8)
        self.assertTrue(residual.is_zero())

    def test_a1_constant(self):
        c, _ = verify_jacobian_factorization(chevalley("A1"))
        self.assertEqual(c, 2)

    def test_a2_constant(self):
        c, _ = verify_jacobian_factorization(chevalley("A2"))
        self.assertEqual(c, -6)

    def test_exact_types(self):
        for name in ("A3", "B3", "D3", "D4", "A1xB2"):
            P = chevalley(name)
            c, residual = verify_jacobian_factorization(P)
            self.assertNotEqual(c, 0, name)
            self.assertTrue(residual.is_zero(), name)
            self.assertEqual(P.jacobian_constant, c)

    def test_dihedral(self):
        c, residual = verify_jacobian_factorization(chevalley("I2(5)"))
        self.assertNotEqual(c, 0)
        self.assertLessEqual(residual.max_abs_coefficient(), 1e-9)

##########################################################################
## Rewrite Tests
##########################################################################

class RewriteTests(unittest.TestCase):

    def test_b2_mixed_square(self):
        """
        x^2 y^2 = (p1^2 - p2) / 2
        """
        P = chevalley("B2")
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        F = rewrite_invariant_polynomial(P, x ** 2 * y ** 2)
        self.assertEqual(F.terms, {(2, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)})

    def test_round_trip(self):
        P = chevalley("A2")
        F = Poly(3, [((1, 1, 0), 2), ((0, 0, 2), Fraction(-1, 3)), ((3, 0, 0), 1), ((0, 0, 0), 5)])
        self.assertEqual(rewrite_invariant_polynomial(P, P.compose(F)), F)

    def test_d3_round_trip(self):
        P = chevalley("D3")
        F = Poly(3, [((0, 0, 2), 1), ((1, 1, 0), -2), ((0, 0, 1), Fraction(1, 2))])
        self.assertEqual(rewrite_invariant_polynomial(P, P.compose(F)), F)

    def test_random_rewrites(self):
        """
        A hundred random F of weighted degree at most 12 per group
        """
        for name in ("B2", "A2", "D3"):
            P = chevalley(name)
            rnd = random.Random(name)
            for _ in range(100):
                F = random_invariant_polynomial(P, rnd, 12)
                self.assertEqual(rewrite_invariant_polynomial(P, P.compose(F)), F, name)

    def test_not_invariant(self):
        P = chevalley("B2")
        with self.assertRaises(NotInvariant):
            rewrite_invariant_polynomial(P, Poly.variable(2, 0) ** 3)

    def test_compose_dimension(self):
        with self.assertRaises(DimensionMismatch):
            chevalley("B2").compose(Poly.variable(3, 0))
