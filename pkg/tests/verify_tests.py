# tests.verify_tests
# Tests for the bundled verification suite
#
# Created:  Sun Oct 18 19:02:44 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: verify_tests.py [] coxinv $

"""
Tests for the bundled verification suite
"""

##########################################################################
## Imports
##########################################################################

import random
import unittest

from coxinv.verify import *
from coxinv.groups import build_group
from coxinv.chevalley import basic_invariants, is_invariant

##########################################################################
## Suite Tests
##########################################################################

class SuiteTests(unittest.TestCase):

    def assertSuitePasses(self, name):
        checks = run_suite(name, seed=0, count=3)
        self.assertEqual([check.name for check in checks], [name for name, _ in CHECKS])
        for check in checks:
            self.assertTrue(check.passed, "%s: %s" % (check.name, check.detail))

    def test_a1(self):
        self.assertSuitePasses("A1")

    def test_b2(self):
        self.assertSuitePasses("B2")

    def test_accepts_group_data(self):
        checks = run_suite(build_group("A2"), seed=4, count=2)
        self.assertEqual(len(checks), len(CHECKS))

    def test_check_json(self):
        check = Check("ledger", True, "15 entries")
        self.assertEqual(check.to_json(), {"name": "ledger", "passed": True, "detail": "15 entries"})
        name, passed, detail = check
        self.assertTrue(passed)

##########################################################################
## Generator Tests
##########################################################################

class GeneratorTests(unittest.TestCase):

    def test_random_invariant_polynomial(self):
        P = basic_invariants(build_group("B2"))
        F = random_invariant_polynomial(P, random.Random(2), 8)
        self.assertEqual(F.nvars, 2)
        self.assertTrue(is_invariant(P.group, P.compose(F)))
