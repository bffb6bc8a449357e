# tests.params_tests
# Testing the parameters module
#
# Created:  Sat Oct 17 09:41:08 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: params_tests.py [] coxinv $

"""
Testing the YAML configuration of tolerances, caps and probe defaults.
"""

##########################################################################
## Imports
##########################################################################

import os
import yaml
import unittest
import tempfile

from copy import copy
from coxinv.params import *

##########################################################################
## Configuration Unit Tests
##########################################################################

class ConfigurationTests(unittest.TestCase):

    FIXTURE = {
        "orbit_cap": 5000,
        "threads": 4,
        "tolerances": {"float_tol": 1e-8, "orbit_round": 6},
        "probe": {"k_neighbors": 8, "refinement": [0.5, 1.0]},
    }

    def setUp(self):
        self.original_conf_paths = copy(Configuration.CONF_PATHS)
        Configuration.CONF_PATHS = []

        self.config_file = tempfile.NamedTemporaryFile(suffix=".yaml", delete=False).name
        with open(self.config_file, "w") as conf:
            yaml.dump(self.FIXTURE, conf, default_flow_style=False)

    def tearDown(self):
        Configuration.CONF_PATHS = self.original_conf_paths
        os.remove(self.config_file)

    def test_search_path(self):
        """
        Assert there are directories to search for a configuration
        """
        self.assertGreater(len(self.original_conf_paths), 0)

    def test_empty_conf_path(self):
        """
        Without files the class defaults are used
        """
        config = CoxinvParameters.load()
        self.assertEqual(len(Configuration.CONF_PATHS), 0)
        self.assertEqual(config['orbit_cap'], 1000000)
        self.assertEqual(config.tolerances.float_tol, 1e-12)
        self.assertEqual(config.probe.k_neighbors, 16)

    def test_load_override(self):
        """
        Assert YAML overrides nested defaults and keeps the rest
        """
        Configuration.CONF_PATHS.append(self.config_file)

        config = CoxinvParameters.load()
        self.assertEqual(config["orbit_cap"], 5000)
        self.assertEqual(config.get("threads"), 4)
        self.assertIsInstance(config.get('tolerances'), ToleranceParameters)
        self.assertEqual(config.tolerances.float_tol, 1e-8)
        self.assertEqual(config.tolerances.orbit_round, 6)
        self.assertEqual(config.tolerances.transfer_rel_tol, 1e-9)
        self.assertEqual(config.probe.refinement, [0.5, 1.0])
        self.assertEqual(config.probe.sources, 24)

    def test_load_file(self):
        config = CoxinvParameters.load_file(self.config_file)
        self.assertEqual(config.probe.k_neighbors, 8)

    def test_class_defaults_untouched(self):
        """
        Loading a file never mutates the class level nested defaults
        """
        Configuration.CONF_PATHS.append(self.config_file)
        CoxinvParameters.load()
        self.assertEqual(CoxinvParameters.tolerances.float_tol, 1e-12)
        self.assertEqual(CoxinvParameters().probe.k_neighbors, 16)

    def test_dump_file(self):
        config = CoxinvParameters.load_file(self.config_file)
        path = self.config_file + ".out"
        try:
            config.dump_file(path)
            again = CoxinvParameters.load_file(path)
        finally:
            os.remove(path)
        self.assertEqual(again.to_dict(), config.to_dict())

    def test_configure_by_dict(self):
        config = CoxinvParameters.load()
        config.configure({"orbit_cap": 45, "log_level": "DEBUG"})
        self.assertEqual(config["orbit_cap"], 45)
        self.assertEqual(config["log_level"], "DEBUG")

    def test_configure_by_conf(self):
        configa = CoxinvParameters.load()
        configb = CoxinvParameters.load()

        configa.orbit_cap = 80
        self.assertNotEqual(configa["orbit_cap"], configb["orbit_cap"])

        configb.configure(configa)
        self.assertEqual(configa["orbit_cap"], configb["orbit_cap"])

    def test_configure_with_none(self):
        """
        Ensure None passed to configure doesn't break
        """
        config = CoxinvParameters.load()
        try:
            config.configure(None)
        except Exception:
            self.fail("None passed to configure raised an error!")

    def test_options(self):
        options = dict(CoxinvParameters.load().options())
        self.assertIn("orbit_cap", options)
        self.assertIn("tolerances", options)
        self.assertNotIn("CONF_PATHS", options)
        self.assertNotIn("load", options)

    def test_get(self):
        config = CoxinvParameters.load()
        self.assertEqual(config.get("notanopt", 1), 1)
        self.assertEqual(config["TOLERANCES"]["Float_Tol"], 1e-12)

    def test_key_error(self):
        """
        Assert not found key raises an exception
        """
        with self.assertRaises(KeyError):
            CoxinvParameters.load()["notanopt"]

    def write_conf(self, text):
        with open(self.config_file, "w") as conf:
            conf.write(text)

    def test_malformed_yaml(self):
        self.write_conf("tolerances: {float_tol: [1e-8\n")
        with self.assertRaises(ImproperlyConfigured):
            CoxinvParameters.load_file(self.config_file)

    def test_not_a_mapping(self):
        """
        A YAML list is not a set of options
        """
        self.write_conf("- orbit_cap\n- 5000\n")
        Configuration.CONF_PATHS.append(self.config_file)
        with self.assertRaises(ImproperlyConfigured):
            CoxinvParameters.load()

    def test_empty_file(self):
        self.write_conf("")
        config = CoxinvParameters.load_file(self.config_file)
        self.assertEqual(config["orbit_cap"], 1000000)
