# tests
# Testing for the coxinv package
#
# Created:  Sat Oct 17 09:02:31 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: __init__.py [] coxinv $

"""
Testing for the coxinv package
"""

##########################################################################
## Imports
##########################################################################

import unittest

##########################################################################
## Test Cases
##########################################################################

class InitializationTest(unittest.TestCase):

    def test_world_fact(self):
        """
        Assert the world is sane, 2+2=4
        """
        self.assertEqual(2+2, 4)

    def test_coxinv_import(self):
        """
        Assert we can import our module
        """
        try:
            import coxinv
        except ImportError:
            self.fail("Could not import coxinv module")

    def test_version(self):
        import coxinv
        from coxinv.cli import VERSION
        self.assertEqual(coxinv.__version__, VERSION)
