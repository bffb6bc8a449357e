# coxinv.params
# Loads the parameter configuration from a YAML file
#
# Created:  Sat Oct 17 09:20:11 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: params.py [] coxinv $

"""
Tolerances, caps and probe defaults, read from YAML.

Every tunable number of the toolkit lives on a Configuration subclass as a
class level default. The module level `settings` object layers the YAML
files of CONF_PATHS over those defaults, later files winning:

    from coxinv.params import settings
    cap = settings.get('orbit_cap', 1000000)

Nested sections are Configurations too and index like dictionaries:

    tol = settings['tolerances']['float_tol']

Indexing a missing key raises KeyError, get() returns a default instead.
Keys are case insensitive. Commands that override a value for one run
(such as --tolerance on the command line) call configure() on the
section rather than assigning attributes.
"""

##########################################################################
## Imports
##########################################################################

import os
import yaml

from coxinv.exceptions import ImproperlyConfigured

##########################################################################
## Configuration Base Class
##########################################################################

class Configuration(object):
    """
    A set of named options with class level defaults. Subclasses declare
    their options as plain class attributes; nested sections are
    Configuration instances:

        class ProbeParams(Configuration):

            k_neighbors = 16
            sources     = 24

    Any key found in a YAML file is accepted, declared or not. Options
    whose value is None are treated as unset, and lowercase keys without
    a leading underscore are the only ones exposed.

        params = ProbeParams.load()
        params['k_neighbors']
        params.get('sources', 24)
    """

    CONF_PATHS = [
        '/etc/coxinv/params.yaml',                    # The global configuration
        os.path.expanduser('~/.coxinv/params.yaml'),  # User specific configuration
        os.path.abspath('conf/params.yaml')           # Local directory configuration
    ]

    @classmethod
    def load(klass):
        """
        Defaults overlaid with every existing file of CONF_PATHS, in order.
        """
        config = klass()
        for path in klass.CONF_PATHS:
            if os.path.exists(path):
                config.configure(klass.read_yaml(path))
        return config

    @classmethod
    def load_file(klass, path):
        """
        Defaults overlaid with a single YAML file.
        """
        config = klass()
        config.configure(klass.read_yaml(path))
        return config

    @staticmethod
    def read_yaml(path):
        """
        Parsed mapping of a YAML file; an empty file is an empty mapping.
        """
        try:
            with open(path, 'r', encoding='utf-8') as conf:
                data = yaml.safe_load(conf)
        except yaml.YAMLError as e:
            raise ImproperlyConfigured("could not parse %s: %s" % (path, e))

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ImproperlyConfigured(
                "%s holds a %s, not a mapping of options" % (path, type(data).__name__)
            )
        return data

    def dump_file(self, path):
        with open(path, 'w', encoding='utf-8') as out:
            yaml.safe_dump(self.to_dict(), out, default_flow_style=False)

    def to_dict(self):
        """
        Plain nested dictionary of the options, for YAML and JSON output.
        """
        data = {}
        for opt, val in self.options():
            if isinstance(val, Configuration):
                val = val.to_dict()
            data[opt] = val
        return data

    def configure(self, conf=None):
        """
        Updates the options from a dictionary (typically parsed YAML) or
        from another Configuration. Nested sections are merged key by key
        into a fresh copy of the section.
        """
        if not conf: return
        if isinstance(conf, Configuration):
            conf = dict(conf.options())
        conf = dict(conf)

        for key in list(conf.keys()):
            section = self.get(key, None)
            if isinstance(section, Configuration):
                # copy so that class level defaults are never mutated
                nested = section.__class__()
                nested.configure(section)
                nested.configure(conf.pop(key))
                setattr(self, key.lower(), nested)
        self.__dict__.update(dict((key.lower(), val) for key, val in conf.items()))

    def options(self):
        """
        Yields (name, value) for every set option, sorted by name.
        """
        keys = set()
        for klass in type(self).__mro__:
            if klass is object: continue
            keys.update(klass.__dict__.keys())
        keys.update(self.__dict__.keys())

        for name in sorted(keys):
            value = self.get(name)
            if value is not None:
                yield name, value

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def __getitem__(self, key):
        """
        Case insensitive option lookup. Methods, private names and
        uppercase class constants are not options.
        """
        key = key.lower()
        if hasattr(self, key) and not key.startswith('_'):
            attr = getattr(self, key)
            if not callable(attr) or isinstance(attr, Configuration):
                return attr
        raise KeyError("%s has no configuration '%s'" % (self.__class__.__name__, key))

    def __repr__(self):
        return str(self)

    def __str__(self):
        rows = []
        for name, value in self.options():
            text  = " ".join(repr(value).split())
            width = 76 - max(len(name), 10)
            if len(text) > width:
                text = text[:width - 3] + "..."
            rows.append("%-10s = %s" % (name, text))
        return "\n".join(rows)

##########################################################################
## Tolerances
##########################################################################

class ToleranceParameters(Configuration):
    """
    Tolerances of the float path. The rational path is always exact and
    never consults these values.
    """

    float_tol         = 1e-12   # Invariance of float polynomials and points
    factorization_tol = 1e-9    # Coefficient-wise residual of det J_P
    transfer_rel_tol  = 1e-9    # Relative tolerance of jet transfer checks
    stratify_rel_tol  = 1e-9    # Active reflection test is rel * (1 + |x|)
    orbit_round       = 9       # Decimals kept when de-duplicating float orbits

##########################################################################
## Probe defaults
##########################################################################

class ProbeParameters(Configuration):
    """
    Sampling defaults of the regularity probes.
    """

    k_neighbors = 16            # Neighbors per sample in the image graph
    sources     = 24            # Dijkstra sources per probe
    targets     = 256           # Targets kept per source
    candidates  = 256           # Pairs with the largest graph stretch to straighten
    refinement  = [0.25, 0.5, 1.0]  # Sample fractions of the refinement curve
    min_decades = 3             # Distance decades needed for a slope fit
    margin_tol  = 0.05          # Slope slack of the r-regularity verdict

##########################################################################
## Toolkit Parameter Defaults
##########################################################################

class CoxinvParameters(Configuration):
    """
    This object contains the default parameters for the toolkit.
    """

    orbit_cap        = 1000000  # Largest group whose orbits are enumerated
    closure_max_rank = 4        # Factors up to this rank are closure-enumerated
    threads          = 1        # Parallelism cap, overridden by COXINV_THREADS
    log_level        = "WARNING"
    log_format       = "%(asctime)s %(name)s %(levelname)s %(message)s"

    tolerances       = ToleranceParameters()
    probe            = ProbeParameters()

##########################################################################
## Import this loaded Configuration
##########################################################################

settings = CoxinvParameters.load()

if __name__ == '__main__':
    print(settings)
