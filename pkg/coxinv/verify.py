# coxinv.verify
# Bundled verification suites for a reflection group
#
# Created:  Sun Oct 18 13:40:27 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: verify.py [] coxinv $

"""
Bundled verification suites for a reflection group.

Each check builds its own seeded random data, runs one family of
identities and reports (name, passed, detail). Checks never raise: any
toolkit exception is reported as a failure with its message.
"""

##########################################################################
## Imports
##########################################################################

import random
import logging

from fractions import Fraction

from coxinv.utils import pmap
from coxinv.params import settings
from coxinv.distribute import rational_points, rational_scalar
from coxinv.groups import build_group, group_order, orbit
from coxinv.polynomials import Poly, MultiIndex, weighted_indices
from coxinv.chevalley import basic_invariants, eval_P, is_invariant
from coxinv.chevalley import verify_jacobian_factorization, rewrite_invariant_polynomial
from coxinv.jets import Jet, JetField
from coxinv.transfer import compose_jet, recover_jet, cramer_first_derivatives
from coxinv.transfer import epsilon_beta, continuity_ledger, jets_agree, transfer_tolerance
from coxinv.transfer import cramer_system
from coxinv.geometry import stratify, fundamental_domain_rep, in_canonical_chamber
from coxinv.vectors import points_close
from coxinv.exceptions import CoxinvException

logger = logging.getLogger(__name__)

##########################################################################
## Random data
##########################################################################

def random_invariant_polynomial(P, rnd, max_weight, terms=4):
    """
    A random polynomial F in the invariants with sum(beta_i k_i) <=
    max_weight and small rational coefficients.
    """
    m = len(P.polys)
    betas = []
    for weight in range(max_weight + 1):
        betas.extend(weighted_indices(P.degrees, weight))
    chosen = rnd.sample(betas, min(terms, len(betas)))
    return Poly(m, [(beta, rational_scalar(rnd, nonzero=True)) for beta in chosen])

def random_jet(P, base, order, rnd):
    m = len(P.polys)
    coeffs = {}
    for k in weighted_indices([1] * m, 0) + [
            beta for total in range(1, order + 1) for beta in weighted_indices([1] * m, total)]:
        coeffs[k] = rational_scalar(rnd, low=-3, high=3, denominator=2)
    return Jet(base, order, coeffs)

def gradient(poly, x):
    return tuple(poly.partial_derivative(MultiIndex.unit(poly.nvars, i)).evaluate(x) for i in range(poly.nvars))

##########################################################################
## Checks
##########################################################################

class Check(object):

    def __init__(self, name, passed, detail=""):
        self.name   = name
        self.passed = bool(passed)
        self.detail = detail

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    def __iter__(self):
        return iter((self.name, self.passed, self.detail))

    def __repr__(self):
        return "<Check %s %s>" % (self.name, "passed" if self.passed else "FAILED")

def check_group_identities(P, seed, count):
    g = P.group
    d_ok = g.d == sum(k - 1 for k in g.degrees)
    product = 1
    for k in g.degrees:
        product *= k
    order = group_order(g)
    return order == product and d_ok, "d=%i order=%i degree product=%i" % (g.d, order, product)

def check_reflections(P, seed, count):
    g = P.group
    tol = settings.tolerances.float_tol * 10
    for x in rational_points(count, g.n, seed):
        for idx in range(g.d):
            if not points_close(g.reflect(idx, g.reflect(idx, x)), x, tol):
                return False, "reflection %i is not an involution" % idx
            mirror = g.reflect(idx, x)
            midpoint = tuple((a + b) / 2 for a, b in zip(x, mirror))
            if not points_close(g.reflect(idx, midpoint), midpoint, tol):
                return False, "reflection %i moves its hyperplane" % idx
    return True, "%i reflections on %i points" % (g.d, count)

def check_invariance(P, seed, count):
    for i, p in enumerate(P.polys):
        if not is_invariant(P.group, p):
            return False, "p%i is not invariant" % (i + 1)
    return True, "%i basic invariants" % len(P.polys)

def check_jacobian(P, seed, count):
    c, residual = verify_jacobian_factorization(P)
    return True, "c=%s residual=%s" % (c, float(residual.max_abs_coefficient()))

def check_rewrite(P, seed, count):
    rnd = random.Random(seed)
    for _ in range(count):
        F = random_invariant_polynomial(P, rnd, 2 * P.h)
        diff = rewrite_invariant_polynomial(P, P.compose(F)) - F
        if diff.max_abs_coefficient() > transfer_tolerance(F.max_abs_coefficient()):
            return False, "rewrite of %s failed" % F
    return True, "%i random invariants" % count

def check_jet_round_trip(P, seed, count):
    rnd = random.Random(seed)
    points = rational_points(count, P.n, seed, low=-2, high=2, denominator=3)
    for idx, a in enumerate(points):
        r = 1 + idx % 2
        F_jet = random_jet(P, eval_P(P, a), r, rnd)
        f_jet = compose_jet(P, F_jet, a)
        if not jets_agree(recover_jet(P, JetField([f_jet]), r), F_jet):
            return False, "round trip failed at %r" % (a,)
    return True, "%i random jets" % count

def check_cramer(P, seed, count):
    rnd = random.Random(seed)
    det = P.jacobian_determinant
    done = 0
    for x in rational_points(4 * count, P.n, seed):
        if det.evaluate(x) == 0: continue
        F = random_invariant_polynomial(P, rnd, 2 * P.h)
        f = P.compose(F)
        expected = gradient(F, eval_P(P, x))
        solution = cramer_first_derivatives(P, gradient(f, x), x)
        if not points_close(solution, expected, transfer_tolerance(*expected)):
            return False, "Cramer solution disagrees at %r" % (x,)
        done += 1
        if done == count: break
    return True, "%i regular points" % done

def check_cramer_system(P, seed, count):
    system = cramer_system(P)
    if not system.cofactor_identity():
        return False, "cofactors do not invert the Jacobian"
    if P.group.exact and not system.divisible_by_forms():
        return False, "a minor is not divisible by the forms fixing its coordinate"
    return True, "%i minors" % (P.n * P.n)

def check_epsilon(P, seed, count):
    rnd = random.Random(seed)
    t = Fraction(3, 2)
    m = len(P.polys)
    for x in rational_points(count, P.n, seed):
        alpha = MultiIndex(rnd.randint(0, 2) for _ in range(P.n))
        beta  = MultiIndex(rnd.randint(0, 2) for _ in range(m))
        degree = sum(b * k for b, k in zip(beta, P.degrees)) - alpha.order
        lhs = epsilon_beta(P, alpha, beta, tuple(t * c for c in x))
        rhs = epsilon_beta(P, alpha, beta, x) * t ** degree
        if abs(lhs - rhs) > settings.tolerances.transfer_rel_tol * max(1, abs(rhs)):
            return False, "eps not homogeneous for alpha=%r beta=%r" % (tuple(alpha), tuple(beta))
    return True, "%i weights" % count

def check_ledger(P, seed, count):
    entries = continuity_ledger(P, 1)
    for entry in entries:
        if entry.continuous != (entry.weighted_order <= entry.threshold):
            return False, "verdict of %r" % (tuple(entry.beta),)
    if not P.group.roots:
        return True, "%i entries" % len(entries)

    # a point on the wall of the first root
    g = P.group
    x = rational_points(1, g.n, seed)[0]
    y = tuple((a + b) / 2 for a, b in zip(x, g.reflect(0, x)))
    stratum = stratify(g, y)
    local = continuity_ledger(P, 1, stratum)
    for glob, loc in zip(entries, local):
        if glob.continuous and loc.verdict == "lost":
            return False, "stratum ledger drops %r" % (tuple(glob.beta),)
        if loc.local_order > loc.weighted_order:
            return False, "stratum order exceeds the global order at %r" % (tuple(loc.beta),)
    return True, "%i entries" % len(entries)

def check_fundamental_domain(P, seed, count):
    g = P.group
    small = group_order(g) <= 400
    tol = settings.tolerances.transfer_rel_tol
    for x in rational_points(count, g.n, seed):
        rep = fundamental_domain_rep(g, x)
        if not in_canonical_chamber(g, rep, tol):
            return False, "representative of %r is outside the chamber" % (x,)
        if not points_close(eval_P(P, rep), eval_P(P, x), tol * 100):
            return False, "P changes on the orbit of %r" % (x,)
        if stratify(g, rep).isotropy_order != stratify(g, x).isotropy_order:
            return False, "isotropy order changes on the orbit of %r" % (x,)
        if small and g.exact and rep not in orbit(g, x):
            return False, "representative of %r is not in its orbit" % (x,)
    return True, "%i points" % count

CHECKS = (
    ("group-identities", check_group_identities),
    ("reflections", check_reflections),
    ("invariance", check_invariance),
    ("jacobian-factorization", check_jacobian),
    ("rewrite-round-trip", check_rewrite),
    ("jet-round-trip", check_jet_round_trip),
    ("cramer-vs-rewrite", check_cramer),
    ("cramer-system", check_cramer_system),
    ("epsilon-homogeneity", check_epsilon),
    ("ledger", check_ledger),
    ("fundamental-domain", check_fundamental_domain),
)

##########################################################################
## Suite runner
##########################################################################

def run_suite(group, seed=0, count=5):
    """
    Runs every check against a group (a GroupData, spec or name) and
    returns the list of Check results in a fixed order.
    """
    if not hasattr(group, 'roots'):
        group = build_group(group)
    P = basic_invariants(group)

    def run(item):
        name, check = item
        try:
            passed, detail = check(P, seed, count)
        except CoxinvException as e:
            passed, detail = False, "%s: %s" % (e.__class__.__name__, e)
        logger.info("%s %s: %s", name, "passed" if passed else "FAILED", detail)
        return Check(name, passed, detail)

    return pmap(run, CHECKS)
