# coxinv.transfer
# Transfer of jets between invariant functions f and functions F of P
#
# Created:  Sun Oct 18 09:14:52 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: transfer.py [] coxinv $

"""
Transfer of jets between an invariant function f on R^n and a function F
of the basic invariants, f = F o P.

Forward, the order hr jet of f at a is the composition of the order r
jet of F at P(a) with P(a + t) - P(a), truncated at degree hr. Because a
polynomial of degree r in P has degree at most hr, nothing is lost by the
truncation, and a composed jet can be inverted exactly:

    - at order one, by the triangular identification of the pivots of P
    - at higher orders, by the Cramer system: the gradient of f determines
      the first derivatives of F o P by exact polynomial division by
      det J_P(a + t), and those are composed jets of order h(r - 1)

The recovery consumes composed jets only. The order four jet of x^4 at 0
on the line, for instance, is the jet of F(p) = p^2 with P = x^2, while
the order two jet of x^4 at 0 is also the (zero) jet of p^2 truncated at
order one in p; for honest Taylor data of arbitrary functions use
cramer_first_derivatives at regular points.

The module also carries the weights eps_beta of the derivatives of F in
the derivatives of F o P, the continuity ledger of the derivatives of F,
and the weighted semi-norm of F.
"""

##########################################################################
## Imports
##########################################################################

import logging
import sympy
import numpy as np

from fractions import Fraction

from coxinv.params import settings
from coxinv.utils import pmap, fit_slope
from coxinv.chevalley import eval_P, jacobian
from coxinv.jets import Jet, JetField, seminorms
from coxinv.polynomials import Poly, MultiIndex, multi_indices, factorial, minor
from coxinv.vectors import check_dimension, is_exact, is_exact_point, points_close, jsonify_point, fraction_string
from coxinv.exceptions import BasePointMismatch, SingularSystem, NotInImage
from coxinv.exceptions import SingularJacobian, DimensionMismatch, OrderExceeded

logger = logging.getLogger(__name__)

##########################################################################
## Helpers
##########################################################################

def transfer_tolerance(*values):
    scale = max([1.0] + [abs(float(v)) for v in values])
    return settings.tolerances.transfer_rel_tol * scale

def invariant_increments(P, a):
    """
    P(a + t) - P(a) as polynomials in t.
    """
    increments = []
    for p in P.polys:
        shifted = p.shift(a)
        increments.append(shifted - shifted.constant_term())
    return increments

def jets_agree(one, two):
    """
    Coefficient-wise equality of two jets at the same base, exact on exact
    data and within the transfer tolerance otherwise.
    """
    if one.order != two.order:
        return False
    for k in one.indices():
        a, b = one.coefficient(k), two.coefficient(k)
        if is_exact(a) and is_exact(b):
            if a != b:
                return False
        elif abs(a - b) > transfer_tolerance(a, b):
            return False
    return True

##########################################################################
## Forward composition
##########################################################################

def compose_jet(P, F_jet, a):
    """
    The order h*r jet at a of (F_jet's Taylor polynomial) o P, where r is
    the order of F_jet and its base must be P(a).
    """
    check_dimension(a, P.n)
    image = eval_P(P, a)
    if len(F_jet.base) != len(image) or not points_close(F_jet.base, image, transfer_tolerance(*image)):
        raise BasePointMismatch("the jet of F is based at %r, P(a) is %r" % (F_jet.base, image))

    order = P.h * F_jet.order
    G = F_jet.taylor_polynomial()
    composed = G.compose(invariant_increments(P, a)).truncate(order)
    return Jet.from_taylor(tuple(a), order, composed)

##########################################################################
## Faa di Bruno weights
##########################################################################

def epsilon_beta(P, alpha, beta, x):
    """
    The coefficient of d^beta F o P in d^alpha (F o P) at x:

        eps = alpha! / beta! * [t^alpha] prod_i (p_i(x + t) - p_i(x))^beta_i
    """
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    if len(alpha) != P.n or len(beta) != len(P.polys):
        raise DimensionMismatch("alpha needs %i entries and beta %i" % (P.n, len(P.polys)))
    check_dimension(x, P.n)

    weighted = sum(b * k for b, k in zip(beta, P.degrees))
    if alpha.order < beta.order or alpha.order > weighted:
        return Fraction(0)

    product = Poly.constant(P.n, 1)
    for inc, b in zip(invariant_increments(P, x), beta):
        for _ in range(b):
            product = product.mul_truncated(inc, alpha.order)
    return product.coefficient(alpha) * factorial(alpha) / factorial(beta)

def epsilon_polynomial(P, alpha, beta):
    """
    eps_{alpha,beta} as a polynomial in x, homogeneous of degree
    sum(k_j beta_j) - |alpha|.
    """
    alpha, beta = MultiIndex(alpha), MultiIndex(beta)
    n = P.n
    if len(alpha) != n or len(beta) != len(P.polys):
        raise DimensionMismatch("alpha needs %i entries and beta %i" % (n, len(P.polys)))

    # x in the first n variables, t in the last n
    subs = [
        Poly.linear_form([int(j == i or j == n + i) for j in range(2 * n)])
        for i in range(n)
    ]
    product = Poly.constant(2 * n, 1)
    for p, b in zip(P.polys, beta):
        if not b: continue
        increment = p.compose(subs) - p.embed(2 * n)
        product = product * increment ** b

    terms = {}
    for exps, coeff in product.terms.items():
        if tuple(exps[n:]) == tuple(alpha):
            terms[tuple(exps[:n])] = coeff
    return Poly(n, terms) * Fraction(factorial(alpha), factorial(beta))

class EpsilonWeight(object):
    """
    The weight of d^beta F o P inside d^alpha (F o P).
    """

    def __init__(self, P, alpha, beta):
        self.P     = P
        self.alpha = MultiIndex(alpha)
        self.beta  = MultiIndex(beta)

    @property
    def homogeneity_degree(self):
        return sum(b * k for b, k in zip(self.beta, self.P.degrees)) - self.alpha.order

    @property
    def polynomial(self):
        if not hasattr(self, '_polynomial'):
            self._polynomial = epsilon_polynomial(self.P, self.alpha, self.beta)
        return self._polynomial

    def value(self, x):
        return self.polynomial.evaluate(x)

    __call__ = value

    def to_json(self):
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "homogeneity_degree": self.homogeneity_degree,
            "polynomial": self.polynomial.to_json(),
        }

##########################################################################
## Cramer system
##########################################################################

class CramerSystem(object):
    """
    The minors M_{i,j} of J_P (row of p_j and column of x_i removed) and
    det J_P, which solve J_P^T g = grad f by

        det J_P * g_j = sum_i (-1)^(i+j) M_{i,j} df/dx_i
    """

    def __init__(self, P, minors=None, det=None, base=None):
        self.P    = P
        self.base = base
        n = P.n
        if minors is None:
            matrix = [list(row) for row in P.jacobian_polys]
            minors = [[minor(matrix, j, i) for j in range(n)] for i in range(n)]
        self.minors = minors
        self.det    = det if det is not None else P.jacobian_determinant

    @property
    def n(self):
        return self.P.n

    @property
    def degrees(self):
        """
        s_j = sum_{i != j} (k_i - 1), the degree of the minors in column j.
        """
        ks = self.P.degrees
        return [sum(k - 1 for i, k in enumerate(ks) if i != j) for j in range(len(ks))]

    def cofactor(self, i, j):
        return self.minors[i][j] * (-1) ** (i + j)

    def shifted(self, a):
        """
        The system at a + t, as polynomials in t.
        """
        check_dimension(a, self.n)
        minors = [[m.shift(a) for m in row] for row in self.minors]
        return CramerSystem(self.P, minors, self.det.shift(a), tuple(a))

    def numerators(self, grad):
        """
        sum_i (-1)^(i+j) M_{i,j} g_i for polynomial gradient entries g_i.
        """
        return [
            sum((self.cofactor(i, j) * grad[i] for i in range(self.n)), Poly.zero(self.det.nvars))
            for j in range(self.n)
        ]

    def solve(self, grad, x):
        """
        The cofactor formula at a point with det J_P(x) != 0.
        """
        det = self.det.evaluate(x)
        if det == 0:
            raise SingularJacobian("det J_P vanishes at %r" % (tuple(x),))
        return tuple(
            sum((self.cofactor(i, j).evaluate(x) * grad[i] for i in range(self.n)), Fraction(0)) / det
            for j in range(self.n)
        )

    def cofactor_identity(self):
        """
        True if sum_i (-1)^(i+j) M_{i,j} dp_l/dx_i = delta_{jl} det J_P for
        all j and l.
        """
        J = self.P.jacobian_polys
        for j in range(self.n):
            for l in range(self.n):
                total = sum((self.cofactor(i, j) * J[l][i] for i in range(self.n)), Poly.zero(self.n))
                expected = self.det if j == l else Poly.zero(self.n)
                if total != expected:
                    return False
        return True

    def divisible_by_forms(self):
        """
        True if every M_{i,j} is divisible by the product of the forms
        lambda_tau with tau_i = 0, the reflections that fix x_i.
        """
        group = self.P.group
        for i in range(self.n):
            indices = [idx for idx, root in enumerate(group.roots) if root[i] == 0]
            forms = group.product_of_forms(indices)
            for j in range(self.n):
                if self.minors[i][j].is_zero(): continue
                _, remainder = self.minors[i][j].divide(forms)
                if not remainder.is_zero():
                    return False
        return True

def cramer_first_derivatives(P, grad_f, x):
    """
    dF/dp_j at P(x) from the gradient of f = F o P at a point where
    det J_P(x) != 0, by solving J_P(x)^T g = grad f.
    """
    check_dimension(x, P.n)
    if len(grad_f) != P.n:
        raise DimensionMismatch("gradient of dimension %i for R^%i" % (len(grad_f), P.n))
    J = jacobian(P, x)

    if is_exact_point(x) and all(is_exact(g) for g in grad_f) and P.exact:
        M = sympy.Matrix([[sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in row] for row in J])
        if M.det() == 0:
            raise SingularJacobian("det J_P vanishes at %r" % (tuple(x),))
        rhs = sympy.Matrix([sympy.Rational(Fraction(g).numerator, Fraction(g).denominator) for g in grad_f])
        sol = M.T.LUsolve(rhs)
        return tuple(Fraction(int(v.p), int(v.q)) for v in sol)

    A = np.array([[float(c) for c in row] for row in J], dtype=float)
    det = np.linalg.det(A)
    if abs(det) <= settings.tolerances.float_tol * max(1.0, np.abs(A).max()) ** P.n:
        raise SingularJacobian("det J_P vanishes at %r" % (tuple(x),))
    return tuple(float(v) for v in np.linalg.solve(A.T, np.array([float(g) for g in grad_f])))

##########################################################################
## Inverse recovery
##########################################################################

def lemma_recover_first_order(P, f_jet):
    """
    The first derivatives of F at P(a) from a composed jet of order h at
    a, solving the pivot rows

        f_alpha / alpha! = sum_s F_s D^alpha p_s(a) / alpha!

    in the triangular order of P.pivots(). The order one jet of F built
    from the result must compose back to f_jet.
    """
    a = f_jet.base
    check_dimension(a, P.n)
    pivots = P.pivots()
    if max(pv.exponents.order for pv in pivots) > f_jet.order:
        raise OrderExceeded("the pivots need a jet of order %i" % max(pv.exponents.order for pv in pivots))

    shifted = [p.shift(a) for p in P.polys]
    values  = {}
    for pv in pivots:
        alpha = pv.exponents
        rhs   = f_jet.coefficient(alpha) / factorial(alpha)
        for s, poly in enumerate(shifted):
            if s == pv.index: continue
            entry = poly.coefficient(alpha)
            if entry == 0: continue
            if s not in values:
                raise SingularSystem("pivot of p%i depends on the unsolved p%i" % (pv.index + 1, s + 1))
            rhs = rhs - entry * values[s]
        diagonal = shifted[pv.index].coefficient(alpha)
        if diagonal == 0:
            raise SingularSystem("vanishing pivot for p%i at %r" % (pv.index + 1, a))
        values[pv.index] = rhs / diagonal

    result = tuple(values[s] for s in range(len(P.polys)))
    F_jet  = first_order_jet(P, a, f_jet.coefficient(MultiIndex.zero(P.n)), result)
    if not jets_agree(compose_jet(P, F_jet, a), f_jet.truncate(P.h)):
        raise NotInImage("the jet at %r is not composed from a first order jet of F" % (a,))
    return result

def first_order_jet(P, a, value, derivatives):
    n = len(P.polys)
    coeffs = {MultiIndex.zero(n): value}
    for s, d in enumerate(derivatives):
        coeffs[MultiIndex.unit(n, s)] = d
    return Jet(eval_P(P, a), 1, coeffs)

def cramer_system(P):
    if not hasattr(P, '_cramer_system'):
        P._cramer_system = CramerSystem(P)
    return P._cramer_system

def _recover_taylor(P, psi, a, r):
    """
    The Taylor polynomial of F at P(a), degree <= r, from the composed
    Taylor polynomial psi(t) of f at a.
    """
    m = len(P.polys)
    if r == 0:
        return Poly.constant(m, psi.constant_term())

    if r == 1:
        jet = Jet.from_taylor(a, P.h, psi)
        derivatives = lemma_recover_first_order(P, jet)
        return first_order_jet(P, a, psi.constant_term(), derivatives).taylor_polynomial()

    system = cramer_system(P).shifted(a)
    grad   = [psi.partial_derivative(MultiIndex.unit(P.n, i)) for i in range(P.n)]
    tol    = transfer_tolerance(psi.max_abs_coefficient())

    # G with dG/du_j = (the recovered Taylor polynomial of dF/dp_j)
    terms = {MultiIndex.zero(m): psi.constant_term()}
    for j, numerator in enumerate(system.numerators(grad)):
        quotient, remainder = numerator.divide(system.det, tol=0.0 if numerator.exact else tol)
        if remainder.max_abs_coefficient() > (0 if remainder.exact else tol):
            raise NotInImage("the jet at %r is not composed from an order %i jet of F" % (tuple(a), r))
        derivative = _recover_taylor(P, quotient.truncate(P.h * (r - 1)), a, r - 1)
        unit = MultiIndex.unit(m, j)
        for exps, coeff in derivative.terms.items():
            beta  = MultiIndex(exps) + unit
            value = coeff / beta[j]
            if beta in terms:
                if not _consistent(terms[beta], value, tol):
                    raise NotInImage("mixed derivatives of F disagree at %r" % (tuple(a),))
            else:
                terms[beta] = value
    return Poly(m, terms)

def _consistent(one, two, tol):
    if is_exact(one) and is_exact(two):
        return one == two
    return abs(one - two) <= tol

def recover_jet(P, f_field, r, a=None):
    """
    The order r jet of F at P(a) from a composed field of order h*r. The
    base point defaults to the first sample of the field.
    """
    if r < 0:
        raise OrderExceeded("recovery order must be non-negative")
    f_jet = f_field.jet_at(a) if a is not None else f_field.jets[0]
    a = f_jet.base
    if f_jet.order < P.h * r:
        raise OrderExceeded("recovering order %i needs jets of order %i, got %i" % (r, P.h * r, f_jet.order))

    psi = f_jet.truncate(P.h * r).taylor_polynomial()
    G   = _recover_taylor(P, psi, a, r)
    F_jet = Jet.from_taylor(eval_P(P, a), r, G)

    if not jets_agree(compose_jet(P, F_jet, a), f_jet.truncate(P.h * r)):
        raise NotInImage("the jet at %r is not composed from an order %i jet of F" % (a, r))
    logger.debug("recovered an order %i jet of F at %r", r, F_jet.base)
    return F_jet

def recover_field(P, f_field, r):
    """
    recover_jet at every sample; samples in one orbit must give the same
    jet of F and are kept once.
    """
    jets, seen = [], {}
    for jet in pmap(lambda a: recover_jet(P, f_field, r, a), f_field.points):
        if jet.base in seen:
            if not jets_agree(seen[jet.base], jet):
                raise NotInImage("samples over %r give different jets of F" % (jet.base,))
            continue
        seen[jet.base] = jet
        jets.append(jet)
    return JetField(jets)

##########################################################################
## Continuity ledger
##########################################################################

VERDICTS = ("continuous-on-P(R^n)", "continuous-at-stratum-only", "lost")

class ContinuityLedgerEntry(object):

    def __init__(self, beta, weighted_order, threshold, local_order=None):
        self.beta = MultiIndex(beta)
        self.weighted_order = weighted_order
        self.threshold = threshold
        self.local_order = local_order

    @property
    def verdict(self):
        if self.weighted_order <= self.threshold:
            return VERDICTS[0]
        if self.local_order is not None and self.local_order <= self.threshold:
            return VERDICTS[1]
        return VERDICTS[2]

    @property
    def continuous(self):
        return self.verdict == VERDICTS[0]

    def to_json(self):
        data = {
            "beta": list(self.beta),
            "weighted_order": self.weighted_order,
            "threshold": self.threshold,
            "verdict": self.verdict,
        }
        if self.local_order is not None:
            data["local_order"] = self.local_order
        return data

def continuity_ledger(P, r, stratum=None):
    """
    Every beta with |beta| <= hr and whether d^beta F o P is continuous on
    P(R^n) (sum beta_i k_i <= hr), only near the stratum (sum beta_i k'_i
    <= hr) or lost.
    """
    hr = P.h * r
    degrees = P.degrees
    local = stratum.aligned_degrees(P) if stratum is not None else None
    entries = []
    for beta in multi_indices(len(P.polys), hr):
        weighted = sum(b * k for b, k in zip(beta, degrees))
        local_order = sum(b * k for b, k in zip(beta, local)) if local is not None else None
        entries.append(ContinuityLedgerEntry(beta, weighted, hr, local_order))
    return entries

##########################################################################
## Weighted semi-norm
##########################################################################

def heavy_weight(P, beta, x, hr):
    """
    max over |alpha| = hr of |eps_{alpha,beta}(x)|
    """
    return max(abs(epsilon_beta(P, alpha, beta, x)) for alpha in multi_indices(P.n, hr, hr))

def weighted_seminorm_report(P, F_field, r, hr, K_samples):
    """
    The parts of |||F|||^{hr}_{P(K)}: the Whitney norm of order r of the
    field, and the largest eps_beta |d^beta F o P| over the samples of K.
    Light derivatives (sum beta_i k_i <= hr) carry weight one; heavy ones
    are weighted by heavy_weight and count as zero on the walls.
    """
    if F_field.order < hr:
        raise OrderExceeded("the field of F needs order %i, got %i" % (hr, F_field.order))
    whitney = seminorms(F_field.truncate(r), r)
    degrees = P.degrees
    det = P.jacobian_determinant

    def sample(x):
        jet = F_field.jet_at(eval_P(P, x))
        interior = det.evaluate(x) != 0
        best, where = Fraction(0), None
        for beta in multi_indices(len(P.polys), hr):
            weighted = sum(b * k for b, k in zip(beta, degrees))
            if weighted <= hr:
                value = abs(jet.coefficient(beta))
            elif not interior:
                continue
            else:
                value = heavy_weight(P, beta, x, hr) * abs(jet.coefficient(beta))
            if value > best:
                best, where = value, (tuple(x), tuple(beta))
        return best, where

    weighted, worst = Fraction(0), None
    for best, where in pmap(sample, list(K_samples)):
        if best > weighted:
            weighted, worst = best, where

    return {
        "r": r,
        "hr": hr,
        "whitney_norm": whitney.whitney_norm,
        "weighted_term": weighted,
        "value": whitney.whitney_norm + weighted,
        "worst": worst,
    }

def weighted_seminorm(P, F_field, r, hr, K_samples):
    return weighted_seminorm_report(P, F_field, r, hr, K_samples)["value"]

def jsonify_seminorm_report(report):
    data = dict(report)
    for key in ("whitney_norm", "weighted_term", "value"):
        data[key] = fraction_string(data[key])
    if data["worst"] is not None:
        x, beta = data["worst"]
        data["worst"] = {"x": jsonify_point(x), "beta": list(beta)}
    return data

##########################################################################
## Differentiability loss probe
##########################################################################

def differentiability_loss_probe(P, derivative, beta, r, radii, directions):
    """
    Sampled sup of |d^beta F o P| and of its heavy weighted value on the
    spheres |x| = rho, with log-log slopes against rho. `derivative` maps a
    point of P(R^n) to d^beta F there.
    """
    beta = MultiIndex(beta)
    hr = P.h * r
    weights = [
        epsilon_polynomial(P, alpha, beta).as_float()
        for alpha in multi_indices(P.n, hr, hr)
    ]

    raw, weighted = [], []
    for rho in radii:
        top_raw, top_weighted = 0.0, 0.0
        for u in directions:
            x = tuple(float(rho) * float(c) for c in u)
            value = abs(float(derivative(tuple(float(v) for v in eval_P(P, x)))))
            eps = max(abs(w.evaluate(x)) for w in weights)
            top_raw = max(top_raw, value)
            top_weighted = max(top_weighted, eps * value)
        raw.append(top_raw)
        weighted.append(top_weighted)

    return {
        "beta": list(beta),
        "hr": hr,
        "radii": [float(rho) for rho in radii],
        "raw": raw,
        "weighted": weighted,
        "raw_slope": fit_slope(radii, raw),
        "weighted_slope": fit_slope(radii, weighted),
    }
