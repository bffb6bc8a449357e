# coxinv.cli
# Command line front end with JSON in and out
#
# Created:  Sun Oct 18 15:02:44 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: cli.py [] coxinv $

"""
Command line front end: every operation of the toolkit as a subcommand
reading and writing UTF-8 JSON. Exit codes are 0 on success, 1 when a
verification fails and 2 on configuration or any other toolkit error.

    coxinv group-info --group B2
    coxinv eval --group B2 --x 1,2
    coxinv verify-all --group A1
"""

##########################################################################
## Imports
##########################################################################

import sys
import json
import argparse
import logging

from fractions import Fraction

from coxinv.params import Configuration, settings
from coxinv.utils import configure_logging
from coxinv.vectors import parse_point, point, jsonify, jsonify_point
from coxinv.groups import GroupSpec, build_group, orbit
from coxinv.polynomials import Poly
from coxinv.chevalley import basic_invariants, eval_P, verify_jacobian_factorization
from coxinv.chevalley import rewrite_invariant_polynomial
from coxinv.jets import JetField, seminorms, r_regularity_probe
from coxinv.transfer import compose_jet, recover_field, cramer_first_derivatives
from coxinv.transfer import continuity_ledger, weighted_seminorm_report, jsonify_seminorm_report
from coxinv.geometry import stratify, fundamental_domain_rep, regularity_probe
from coxinv.verify import run_suite
from coxinv.exceptions import CoxinvException, ConfigError, VerificationFailed, InsufficientScales

logger = logging.getLogger(__name__)

##########################################################################
## Command Line Variables
##########################################################################

DESCRIPTION = "Chevalley mappings, jet transfer and invariant checks for finite reflection groups."
EPILOG      = "(C) Copyright coxinv developers 2026"
VERSION     = "1.0"

# I2(m) that accept --exact
EXACT_DIHEDRAL = (3, 4, 6)

##########################################################################
## Run Configuration
##########################################################################

class RunConfig(Configuration):
    """
    Everything one invocation needs. Built from the parsed arguments by
    `from_args`, or directly in code:

        config = RunConfig.from_dict({"subcommand": "eval", "group": "B2", "x": "1,2"})
    """

    subcommand = None
    group      = None
    x          = None
    grad       = None
    stratum    = None
    input      = None
    output     = None
    seed       = 0
    r          = 1
    exact      = None     # None picks exact mode whenever the group allows it
    pretty     = False
    verbose    = False
    radius     = 1.0
    samples    = 2000
    neighbors  = None
    count      = 5
    tolerances = None

    @classmethod
    def from_dict(klass, data):
        config = klass()
        config.configure(data)
        return config

    @classmethod
    def from_args(klass, args):
        data = dict((key, val) for key, val in vars(args).items() if key != 'func' and val is not None)
        data['tolerances'] = dict(parse_override(item) for item in (args.tolerance or []))
        data.pop('tolerance', None)
        return klass.from_dict(data)

    def group_spec(self, required=True):
        if not self.get('group'):
            if not required:
                return None
            raise ConfigError("a --group is required for %s" % self.subcommand)
        try:
            return GroupSpec.parse(self.group)
        except CoxinvException as e:
            raise ConfigError(str(e))

    def exact_mode(self):
        """
        Resolves the exact/float flag against the group.
        """
        spec = self.group_spec(required=False)
        dihedral = [f.rank for f in spec.factors if f.label == "I2"] if spec is not None else []
        rational = all(m in EXACT_DIHEDRAL for m in dihedral)
        if self.exact is None:
            return rational
        return bool(self.exact)

    def validate(self):
        if self.subcommand not in COMMANDS:
            raise ConfigError("unknown subcommand '%s'" % self.subcommand)
        spec = self.group_spec(required=False)
        if self.exact and spec is not None and any(
                f.label == "I2" and f.rank not in EXACT_DIHEDRAL for f in spec.factors):
            raise ConfigError("exact mode needs I2(m) with m in %s" % (EXACT_DIHEDRAL,))
        if int(self.r) < 0:
            raise ConfigError("--r must be non-negative")
        for key in (self.tolerances or {}):
            if settings.tolerances.get(key) is None:
                raise ConfigError("unknown tolerance '%s'" % key)
        return self

def parse_override(text):
    if '=' not in text:
        raise ConfigError("tolerance overrides look like name=value, got '%s'" % text)
    key, value = text.split('=', 1)
    try:
        return key.strip().lower(), float(value)
    except ValueError:
        raise ConfigError("tolerance '%s' is not a number" % key)

##########################################################################
## Input helpers
##########################################################################

def read_input(config):
    """
    The JSON document of --input ("-" is standard input). Exact runs
    parse every non integer number as a Fraction.
    """
    path = config.get('input')
    if not path:
        raise ConfigError("%s needs an --input JSON document" % config.subcommand)
    parse_float = Fraction if config.exact_mode() else float
    try:
        if path == '-':
            return json.load(sys.stdin, parse_float=parse_float)
        with open(path, 'r', encoding='utf-8') as data:
            return json.load(data, parse_float=parse_float)
    except (OSError, ValueError) as e:
        raise ConfigError("could not read %s: %s" % (path, e))

def read_point(config, key='x'):
    text = config.get(key)
    if not text:
        raise ConfigError("%s needs --%s" % (config.subcommand, key))
    try:
        return parse_point(text, config.exact_mode())
    except (ValueError, ZeroDivisionError):
        raise ConfigError("could not parse the point '%s'" % text)

def chevalley_map(config):
    return basic_invariants(build_group(config.group_spec()))

##########################################################################
## Commands
##########################################################################

def group_info(config):
    """
    Factors, degrees, h, d, order and reflections of the group
    """
    return build_group(config.group_spec()).to_json()

def invariants(config):
    """
    The basic invariants, their degrees and the pivots used for recovery
    """
    return chevalley_map(config).to_json()

def evaluate(config):
    """
    P(x)
    """
    P = chevalley_map(config)
    return jsonify_point(eval_P(P, read_point(config)))

def jacobian_check(config):
    """
    det J_P = c * prod(lambda) with the constant and the residual size
    """
    P = chevalley_map(config)
    c, residual = verify_jacobian_factorization(P)
    return {
        "group": P.group.spec.name,
        "c": jsonify(c),
        "residual": float(residual.max_abs_coefficient()),
        "determinant": P.jacobian_determinant.to_json(),
    }

def rewrite(config):
    """
    F with f = F o P, for an invariant polynomial f given as
    {"f": [[exponents, coefficient], ...]}
    """
    P = chevalley_map(config)
    data = read_input(config)
    terms = data["f"] if isinstance(data, dict) else data
    f = Poly.from_json(terms, P.n, config.exact_mode())
    F = rewrite_invariant_polynomial(P, f)
    return {"degrees": P.degrees, "F": F.to_json()}

def compose(config):
    """
    The composed field of f = F o P from a field of F on the images of
    the listed "preimages"
    """
    P = chevalley_map(config)
    data = read_input(config)
    exact = config.exact_mode()
    field = JetField.from_json(data, exact)
    preimages = [point(a, exact) for a in data.get("preimages", [])]
    if len(preimages) != len(field):
        raise ConfigError("compose needs one preimage per jet, got %i for %i" % (len(preimages), len(field)))
    return JetField([compose_jet(P, jet, a) for jet, a in zip(field, preimages)]).to_json()

def recover(config):
    """
    The field of F of order r on P(samples) from a composed field of
    order h*r
    """
    P = chevalley_map(config)
    field = JetField.from_json(read_input(config), config.exact_mode())
    return recover_field(P, field, int(config.r)).to_json()

def cramer(config):
    """
    First derivatives of F at P(x) from grad f(x)
    """
    P = chevalley_map(config)
    x = read_point(config)
    grad = read_point(config, 'grad')
    return {
        "x": jsonify_point(x),
        "det": jsonify(P.jacobian_determinant.evaluate(x)),
        "derivatives": jsonify_point(cramer_first_derivatives(P, grad, x)),
    }

def ledger(config):
    """
    Continuity verdict for every d^beta F o P with |beta| <= hr
    """
    P = chevalley_map(config)
    stratum = None
    if config.get('stratum'):
        stratum = stratify(P.group, read_point(config, 'stratum'))
    return {
        "r": int(config.r),
        "hr": P.h * int(config.r),
        "degrees": P.degrees,
        "stratum": stratum.to_json() if stratum is not None else None,
        "entries": [entry.to_json() for entry in continuity_ledger(P, int(config.r), stratum)],
    }

def seminorm(config):
    """
    Whitney semi-norms and the r-regularity probe of a field, or the
    weighted semi-norm of a field of F when the input lists samples "K"
    """
    data = read_input(config)
    exact = config.exact_mode()
    field = JetField.from_json(data, exact)
    r = int(config.r)

    if data.get("K") is not None:
        P = chevalley_map(config)
        samples = [point(x, exact) for x in data["K"]]
        report = weighted_seminorm_report(P, field, r, P.h * r, samples)
        return jsonify_seminorm_report(report)

    result = seminorms(field, r).to_json()
    if len(field) > 1:
        try:
            result["regularity"] = r_regularity_probe(field, r).to_json()
        except InsufficientScales as e:
            logger.warning("no regularity probe: %s", e)
            result["regularity"] = None
    return result

def stratum_info(config):
    """
    Active reflections, isotropy degrees and h_S at x
    """
    g = build_group(config.group_spec())
    x = read_point(config)
    data = stratify(g, x).to_json()
    data["representative"] = jsonify_point(fundamental_domain_rep(g, x))
    return data

def group_orbit(config):
    """
    The orbit of x, sorted
    """
    g = build_group(config.group_spec())
    points = orbit(g, read_point(config))
    return {"size": len(points), "points": [jsonify_point(p) for p in points]}

def probe_regularity(config):
    """
    Geodesic over Euclidean distance on the image of a ball
    """
    P = chevalley_map(config)
    return regularity_probe(
        P, float(config.radius), int(config.samples), config.get('neighbors'), int(config.seed)
    )

def verify_all(config):
    """
    The bundled verification suite; any failed check fails the run
    """
    checks = run_suite(build_group(config.group_spec()), int(config.seed), int(config.count))
    result = {
        "group": config.group_spec().name,
        "passed": all(check.passed for check in checks),
        "checks": [check.to_json() for check in checks],
    }
    if not result["passed"]:
        failed = ", ".join(check.name for check in checks if not check.passed)
        raise VerificationFailed("failed checks: %s" % failed, result)
    return result

COMMANDS = {
    "group-info": group_info,
    "invariants": invariants,
    "eval": evaluate,
    "jacobian-check": jacobian_check,
    "rewrite": rewrite,
    "compose": compose,
    "recover": recover,
    "cramer": cramer,
    "ledger": ledger,
    "seminorm": seminorm,
    "stratify": stratum_info,
    "orbit": group_orbit,
    "probe-regularity": probe_regularity,
    "verify-all": verify_all,
}

##########################################################################
## Output
##########################################################################

def render(result, pretty=False):
    """
    Canonical JSON, or a name = value table with --pretty.
    """
    if not pretty:
        return json.dumps(result, sort_keys=True)
    if not isinstance(result, dict):
        result = {"result": result}
    return "\n".join(
        "%-10s = %s" % (key, json.dumps(result[key], sort_keys=True)) for key in sorted(result)
    )

def write_output(config, text, stream):
    path = config.get('output')
    if path and path != '-':
        with open(path, 'w', encoding='utf-8') as out:
            out.write(text + "\n")
    else:
        stream.write(text + "\n")

##########################################################################
## Runner
##########################################################################

def run(config, stream=None, errors=None):
    """
    Runs one subcommand and returns its exit code.
    """
    stream = stream or sys.stdout
    errors = errors or sys.stderr
    if config.get('verbose'):
        configure_logging('DEBUG')

    defaults = settings.tolerances
    try:
        config.validate()
        if config.get('tolerances'):
            # the override lasts for this run only
            tolerances = defaults.__class__()
            tolerances.configure(defaults)
            tolerances.configure(config.tolerances)
            settings.tolerances = tolerances
        result = COMMANDS[config.subcommand](config)
    except VerificationFailed as e:
        if e.result is not None:
            write_output(config, render(e.result, config.get('pretty')), stream)
        errors.write("verification failed: %s\n" % e)
        return 1
    except CoxinvException as e:
        errors.write("%s: %s\n" % (e.__class__.__name__, e))
        return 2
    finally:
        settings.tolerances = defaults

    write_output(config, render(result, config.get('pretty')), stream)
    return 0

##########################################################################
## Main method
##########################################################################

def main(*argv):

    # Construct the argument parser
    parser = argparse.ArgumentParser(prog='coxinv', description=DESCRIPTION, epilog=EPILOG)
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    subparsers = parser.add_subparsers(title='commands', dest='subcommand',
                                       description='Operations on reflection groups and their invariants')

    # options shared by every command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-g', '--group', type=str, default=None, help='group such as B2, A1xB2, I2(5) or R1xD3.')
    common.add_argument('-i', '--input', metavar='PATH', type=str, default=None, help='JSON input document, - for stdin.')
    common.add_argument('-o', '--output', metavar='PATH', type=str, default=None, help='write JSON here instead of stdout.')
    common.add_argument('-s', '--seed', type=int, default=0, help='seed for every random choice.')
    common.add_argument('-t', '--tolerance', metavar='NAME=VALUE', action='append', default=None,
                        help='override a tolerance, e.g. float_tol=1e-10.')
    common.add_argument('--pretty', action='store_true', default=False, help='print a table instead of JSON.')
    common.add_argument('-v', '--verbose', action='store_true', default=False, help='log debug messages to stderr.')
    mode = common.add_mutually_exclusive_group()
    mode.add_argument('--exact', dest='exact', action='store_true', default=None, help='rational arithmetic.')
    mode.add_argument('--float', dest='exact', action='store_false', help='floating point arithmetic.')

    point_args  = dict(metavar='X', type=str, default=None, help='comma separated point, e.g. 1,2 or 1/2,-3.')
    order_args  = dict(type=int, default=1, help='order r of the jets of F.')

    for name, func in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=(func.__doc__ or "").strip().split("\n")[0])
        if name in ("eval", "cramer", "stratify", "orbit"):
            sub.add_argument('-x', '--x', **point_args)
        if name in ("recover", "ledger", "seminorm"):
            sub.add_argument('-r', '--r', **order_args)
        if name == "cramer":
            sub.add_argument('--grad', metavar='G', type=str, default=None, help='gradient of f at x.')
        if name == "ledger":
            sub.add_argument('--stratum', metavar='X', type=str, default=None, help='a point of the stratum.')
        if name == "probe-regularity":
            sub.add_argument('--radius', type=float, default=1.0, help='radius of the sampled ball.')
            sub.add_argument('--samples', type=int, default=2000, help='number of ball samples.')
            sub.add_argument('-k', '--neighbors', type=int, default=None, help='neighbors in the sample graph.')
        if name == "verify-all":
            sub.add_argument('-n', '--count', type=int, default=5, help='random cases per check.')
        sub.set_defaults(func=func)

    # Handle input from the command line
    args = parser.parse_args(list(argv) if argv else None)
    if not args.subcommand:
        parser.error("a command is required")
    try:
        config = RunConfig.from_args(args)
    except ConfigError as e:
        parser.exit(2, "%s\n" % e)
    return run(config)

if __name__ == '__main__':
    sys.exit(main(*sys.argv[1:]))
