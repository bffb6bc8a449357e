# tests.transfer_tests
# Tests for jet composition, recovery and the continuity ledger
#
# Created:  Sun Oct 18 18:02:17 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: transfer_tests.py [] coxinv $

"""
Tests for jet composition, recovery and the continuity ledger
"""

##########################################################################
## Imports
##########################################################################

import random
import unittest

from fractions import Fraction
from coxinv.groups import build_group
from coxinv.polynomials import Poly, MultiIndex, multi_indices
from coxinv.chevalley import basic_invariants, eval_P
from coxinv.jets import Jet, JetField
from coxinv.geometry import stratify
from coxinv.distribute import sphere_directions, rational_points
from coxinv.verify import random_jet
from coxinv.transfer import *
from coxinv.exceptions import *

##########################################################################
## Helpers
##########################################################################

def chevalley(name):
    return basic_invariants(build_group(name))

def gradient(poly, x):
    return tuple(poly.partial_derivative(MultiIndex.unit(poly.nvars, i)).evaluate(x) for i in range(poly.nvars))

##########################################################################
## Composition Tests
##########################################################################

class ComposeTests(unittest.TestCase):

    def test_a1_compose(self):
        """
        F = 1 + 2u at P(1) = 1 composes to 1 + 4t + 2t^2
        """
        P = chevalley("A1")
        F_jet = Jet((1,), 1, {(0,): 1, (1,): 2})
        f_jet = compose_jet(P, F_jet, (1,))
        self.assertEqual(f_jet.order, 2)
        self.assertEqual([f_jet.coefficient((k,)) for k in range(3)], [1, 4, 4])

    def test_matches_polynomial_composition(self):
        P = chevalley("B2")
        F = Poly(2, [((0, 0), 7), ((1, 0), 3), ((0, 1), -1)])
        a = (Fraction(1, 2), Fraction(2))
        F_jet = Jet.from_poly(F, eval_P(P, a), 1)
        expected = Jet.from_poly(P.compose(F), a, 4)
        self.assertEqual(compose_jet(P, F_jet, a), expected)

    def test_base_point_mismatch(self):
        P = chevalley("A1")
        with self.assertRaises(BasePointMismatch):
            compose_jet(P, Jet((2,), 1, {(0,): 1}), (1,))

##########################################################################
## Faa di Bruno Weight Tests
##########################################################################

class EpsilonTests(unittest.TestCase):

    def test_a1_chain_rule(self):
        """
        d^2 (F o x^2) / dx^2 = 2 F'(x^2) + 4 x^2 F''(x^2)
        """
        P = chevalley("A1")
        x = (Fraction(3),)
        self.assertEqual(epsilon_beta(P, (2,), (1,), x), 2)
        self.assertEqual(epsilon_beta(P, (2,), (2,), x), 36)
        self.assertEqual(epsilon_beta(P, (2,), (3,), x), 0)
        self.assertEqual(epsilon_polynomial(P, (2,), (2,)), 4 * Poly.variable(1, 0) ** 2)

    def test_homogeneity(self):
        P = chevalley("B2")
        x = (Fraction(1, 2), Fraction(-3, 4))
        t = Fraction(5, 3)
        tx = tuple(t * c for c in x)
        for alpha in ((2, 1), (0, 4), (3, 3)):
            for beta in ((1, 0), (2, 1), (0, 2)):
                weight = EpsilonWeight(P, alpha, beta)
                self.assertEqual(weight(tx), weight(x) * t ** weight.homogeneity_degree)

    def test_homogeneity_grid(self):
        """
        Every |alpha|, |beta| <= 8 on B2
        """
        P = chevalley("B2")
        x = (Fraction(1), Fraction(-2))
        t = Fraction(3)
        tx = tuple(t * c for c in x)
        nonzero = 0
        for alpha in multi_indices(2, 8):
            for beta in multi_indices(2, 8):
                degree = EpsilonWeight(P, alpha, beta).homogeneity_degree
                value = epsilon_beta(P, alpha, beta, x)
                if value == 0:
                    self.assertEqual(epsilon_beta(P, alpha, beta, tx), 0)
                    continue
                nonzero += 1
                self.assertEqual(epsilon_beta(P, alpha, beta, tx), value * t ** degree, (alpha, beta))
        self.assertGreater(nonzero, 100)

    def test_polynomial_matches_pointwise(self):
        P = chevalley("B2")
        x = (Fraction(2), Fraction(1, 3))
        self.assertEqual(epsilon_polynomial(P, (2, 2), (1, 1)).evaluate(x), epsilon_beta(P, (2, 2), (1, 1), x))

##########################################################################
## Cramer Tests
##########################################################################

class CramerTests(unittest.TestCase):

    def setUp(self):
        self.P = chevalley("B2")
        self.x = (Fraction(1), Fraction(2))

    def test_pure_invariant(self):
        """
        f = p2 has dF = (0, 1)
        """
        grad = (4, 32)
        self.assertEqual(cramer_first_derivatives(self.P, grad, self.x), (0, 1))

    def test_combination(self):
        """
        f = 5 p1 - p2 / 2 has dF = (5, -1/2)
        """
        grad = (8, 4)
        self.assertEqual(cramer_first_derivatives(self.P, grad, self.x), (5, Fraction(-1, 2)))

    def test_cofactor_formula(self):
        system = cramer_system(self.P)
        self.assertEqual(system.solve((8, 4), self.x), (5, Fraction(-1, 2)))
        self.assertEqual(system.degrees, [3, 1])

    def test_float_path(self):
        derivatives = cramer_first_derivatives(self.P, (8.0, 4.0), (1.0, 2.0))
        self.assertAlmostEqual(derivatives[0], 5.0)
        self.assertAlmostEqual(derivatives[1], -0.5)

    def test_singular(self):
        with self.assertRaises(SingularJacobian):
            cramer_first_derivatives(self.P, (2, 0), (1, 0))

    def test_identities(self):
        for name in ("B2", "A2", "D3"):
            system = CramerSystem(chevalley(name))
            self.assertTrue(system.cofactor_identity(), name)
            self.assertTrue(system.divisible_by_forms(), name)

##########################################################################
## Recovery Tests
##########################################################################

class RecoverTests(unittest.TestCase):

    def round_trip(self, name, a, F, r):
        P = chevalley(name)
        F_jet = Jet.from_poly(F, eval_P(P, a), r)
        f_jet = compose_jet(P, F_jet, a)
        self.assertEqual(recover_jet(P, JetField([f_jet]), r), F_jet)

    def test_a1_origin(self):
        F = Poly(1, [((0,), 2), ((1,), -3)])
        self.round_trip("A1", (Fraction(0),), F, 1)

    def test_b2_generic(self):
        F = Poly(2, [((0, 0), 1), ((1, 0), 2), ((0, 1), -1), ((2, 0), Fraction(1, 3)), ((1, 1), 4)])
        self.round_trip("B2", (Fraction(1, 2), Fraction(3)), F, 2)

    def test_b2_wall(self):
        F = Poly(2, [((1, 0), 1), ((0, 1), 5), ((0, 2), -2)])
        self.round_trip("B2", (Fraction(1), Fraction(0)), F, 2)

    def test_b2_origin(self):
        F = Poly(2, [((1, 0), 1), ((0, 1), 5), ((1, 1), 3)])
        self.round_trip("B2", (Fraction(0), Fraction(0)), F, 2)

    def test_d3(self):
        F = Poly(3, [((1, 0, 0), 1), ((0, 1, 0), -1), ((0, 0, 1), 2)])
        self.round_trip("D3", (Fraction(1), Fraction(2), Fraction(-1, 2)), F, 1)

    def test_random_round_trips(self):
        """
        Fifty random jets per group at r = 1 and 2, on generic points, on
        walls and at the origin
        """
        for seed, name in enumerate(("A1", "A2", "B2", "D3")):
            P = chevalley(name)
            g = P.group
            rnd = random.Random(seed)
            points = rational_points(50, P.n, seed, low=-2, high=2, denominator=3)
            for idx, a in enumerate(points):
                r = 1 + idx % 2
                if idx < 2:
                    a = tuple(Fraction(0) for _ in range(P.n))
                elif idx % 4 in (2, 3):
                    mirror = g.reflect(idx % g.d, a)
                    a = tuple((u + v) / 2 for u, v in zip(a, mirror))
                F_jet = random_jet(P, eval_P(P, a), r, rnd)
                f_jet = compose_jet(P, F_jet, a)
                recovered = recover_jet(P, JetField([f_jet]), r)
                self.assertTrue(jets_agree(recovered, F_jet), "%s r=%i at %r" % (name, r, a))

    def test_not_in_image(self):
        """
        t is not a function of t^2 near 1
        """
        P = chevalley("A1")
        f_jet = Jet.from_poly(Poly.variable(1, 0), (1,), 2)
        with self.assertRaises(NotInImage):
            recover_jet(P, JetField([f_jet]), 1)

    def test_order_exceeded(self):
        P = chevalley("A1")
        f_jet = Jet.from_poly(Poly.variable(1, 0) ** 2, (1,), 1)
        with self.assertRaises(OrderExceeded):
            recover_jet(P, JetField([f_jet]), 1)

    def test_recover_field_merges_orbits(self):
        P = chevalley("A1")
        f = Poly.variable(1, 0) ** 4
        field = JetField.from_poly(f, [(-1,), (1,), (2,)], 4)
        recovered = recover_field(P, field, 2)
        self.assertEqual(len(recovered), 2)
        self.assertEqual(recovered.jet_at((1,)).coefficient((1,)), 2)
        self.assertEqual(recovered.jet_at((4,)).coefficient((2,)), 2)

##########################################################################
## Ledger Tests
##########################################################################

class LedgerTests(unittest.TestCase):

    def setUp(self):
        self.P = chevalley("B2")

    def test_global_ledger(self):
        entries = continuity_ledger(self.P, 1)
        self.assertEqual(len(entries), 15)
        continuous = set(tuple(e.beta) for e in entries if e.continuous)
        self.assertEqual(continuous, {(0, 0), (1, 0), (2, 0), (0, 1)})
        lost = set(tuple(e.beta) for e in entries if e.verdict == "lost")
        self.assertIn((0, 2), lost)

    def test_stratum_ledger(self):
        stratum = stratify(self.P.group, (1, 0))
        self.assertEqual(stratum.aligned_degrees(self.P), [1, 2])

        entries = dict((tuple(e.beta), e) for e in continuity_ledger(self.P, 1, stratum))
        self.assertEqual(entries[(2, 0)].verdict, "continuous-on-P(R^n)")
        self.assertEqual(entries[(0, 2)].verdict, "continuous-at-stratum-only")
        self.assertEqual(entries[(0, 3)].verdict, "lost")

        global_set = set(tuple(e.beta) for e in continuity_ledger(self.P, 1) if e.continuous)
        local_set  = set(beta for beta, e in entries.items() if e.verdict != "lost")
        self.assertTrue(global_set.issubset(local_set))

##########################################################################
## Semi-norm and Loss Probe Tests
##########################################################################

class SeminormTests(unittest.TestCase):

    def test_polynomial_field(self):
        P = chevalley("A1")
        F = Poly(1, [((1,), 1), ((2,), 1)])
        K = [(Fraction(1),), (Fraction(2),)]
        field = JetField.from_poly(F, [eval_P(P, x) for x in K], 2)
        report = weighted_seminorm_report(P, field, 1, 2, K)
        self.assertEqual(report["hr"], 2)
        self.assertEqual(report["value"], report["whitney_norm"] + report["weighted_term"])
        self.assertEqual(weighted_seminorm(P, field, 1, 2, K), report["value"])
        data = jsonify_seminorm_report(report)
        self.assertIsInstance(data["value"], str)

    def test_weighted_term_dominates(self):
        """
        F = p1^(9/4) on B2: near the origin d^2 F / dp1^2 outgrows the order
        one Whitney norm, and the heavy d^3 F term is weighted, not dropped
        """
        P = chevalley("B2")
        factors = [1.0, 9.0 / 4, 45.0 / 16, 45.0 / 64, -135.0 / 256]

        def derivatives(p):
            return dict(((j, 0), factors[j] * float(p[0]) ** (2.25 - j)) for j in range(5))

        K = [(Fraction(1, 5), Fraction(1, 10)), (Fraction(1, 10), Fraction(3, 10))]
        field = JetField.from_callable(derivatives, [eval_P(P, x) for x in K], 4)
        report = weighted_seminorm_report(P, field, 1, 4, K)

        self.assertGreater(report["weighted_term"], report["whitney_norm"])
        self.assertGreater(report["weighted_term"], 1.5)
        self.assertLess(report["whitney_norm"], 0.5)
        self.assertEqual(report["value"], report["whitney_norm"] + report["weighted_term"])
        self.assertIn(report["worst"][0], K)

    def test_differentiability_loss(self):
        """
        d^3 F / dp1^3 of F = p1^(9/4) blows up like |x|^-1.5 on B2 while the
        weighted value decays like |x|^0.5
        """
        P = chevalley("B2")

        def derivative(p):
            return (9.0 / 4) * (5.0 / 4) * (1.0 / 4) * p[0] ** -0.75

        radii = [2.0 ** -j for j in range(1, 9)]
        probe = differentiability_loss_probe(P, derivative, (3, 0), 1, radii, sphere_directions(2, 8, 3))
        self.assertAlmostEqual(probe["raw_slope"], -1.5, delta=0.2)
        self.assertAlmostEqual(probe["weighted_slope"], 0.5, delta=0.2)
        self.assertEqual(probe["hr"], 4)
