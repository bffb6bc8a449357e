# coxinv.jets
# Jets of finite order on finite sample sets
#
# Created:  Sat Oct 17 15:22:31 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: jets.py [] coxinv $

"""
Jets of finite order on finite sample sets.

A jet of order m at a point x is a family of numbers a_k(x), |k| <= m,
standing for the derivatives D^k f(x). It induces the Taylor polynomial

    A_x(x') = sum_{|k| <= m} a_k(x) (x' - x)^k / k!

A JetField carries one jet per sample point. Compact sets are represented
by their finite samples: every sup below is a maximum over the samples and
every pair is an ordered pair of distinct samples.

Coefficients follow the exact/float duality of the polynomial module. A
jet may declare some coefficients missing (derivatives that do not exist
at that point); reading a missing coefficient raises MissingDerivative.
"""

##########################################################################
## Imports
##########################################################################

import logging

from fractions import Fraction
from collections import defaultdict

from coxinv.params import settings
from coxinv.utils import pmap, fit_slope, decade
from coxinv.polynomials import Poly, MultiIndex, multi_indices, factorial
from coxinv.vectors import scalar, is_exact, subtract, norm2, norm, point, jsonify_point, fraction_string
from coxinv.exceptions import OrderExceeded, PointNotInField, InvalidJetField
from coxinv.exceptions import InsufficientScales, MissingDerivative, DimensionMismatch

logger = logging.getLogger(__name__)

##########################################################################
## Helpers
##########################################################################

def monomial_value(d, k):
    """
    (x' - x)^k for the difference vector d.
    """
    value = Fraction(1)
    for di, ki in zip(d, k):
        if ki:
            value = value * di ** ki
    return value

def distance_power(d, e):
    """
    |d|^e, exact when e is even and d is exact.
    """
    if e == 0:
        return Fraction(1)
    if e % 2 == 0:
        return norm2(d) ** (e // 2)
    return norm(d) ** e

##########################################################################
## Jet
##########################################################################

class Jet(object):
    """
    A jet of order m at a base point.
    """

    def __init__(self, base, order, coeffs=None, missing=None):
        self.base    = tuple(base)
        self.order   = int(order)
        self.missing = frozenset(MultiIndex(k) for k in (missing or ()))
        self.coeffs  = {}

        if self.order < 0:
            raise InvalidJetField("jet order must be non-negative")
        for k, value in (coeffs or {}).items():
            k = MultiIndex(k)
            if len(k) != self.n:
                raise DimensionMismatch("coefficient index %r for a jet in R^%i" % (tuple(k), self.n))
            if k.order > self.order:
                raise InvalidJetField("coefficient %r above the jet order %i" % (tuple(k), self.order))
            value = scalar(value)
            if value != 0:
                self.coeffs[k] = value

    ##////////////////////////////////////////////////////////////////////
    ## Constructors
    ##////////////////////////////////////////////////////////////////////

    @classmethod
    def from_poly(klass, poly, base, order):
        """
        The exact Taylor jet of a polynomial at base.
        """
        base = tuple(base)
        if len(base) != poly.nvars:
            raise DimensionMismatch("base point of dimension %i for %i variables" % (len(base), poly.nvars))
        shifted = poly.shift(base)
        return klass.from_taylor(base, order, shifted)

    @classmethod
    def from_taylor(klass, base, order, taylor):
        """
        The jet whose Taylor polynomial in u = x' - base is `taylor`;
        terms above the order are ignored.
        """
        coeffs = {}
        for exps, coeff in taylor.terms.items():
            if sum(exps) <= order:
                coeffs[MultiIndex(exps)] = coeff * factorial(exps)
        return klass(base, order, coeffs)

    @classmethod
    def zero(klass, base, order):
        return klass(base, order)

    ##////////////////////////////////////////////////////////////////////
    ## Properties and access
    ##////////////////////////////////////////////////////////////////////

    @property
    def n(self):
        return len(self.base)

    @property
    def exact(self):
        return all(is_exact(v) for v in self.coeffs.values()) and all(is_exact(c) for c in self.base)

    def indices(self):
        return multi_indices(self.n, self.order)

    def coefficient(self, k):
        k = MultiIndex(k)
        if k.order > self.order:
            raise OrderExceeded("coefficient %r above the jet order %i" % (tuple(k), self.order))
        if k in self.missing:
            raise MissingDerivative("derivative %r is not available at %r" % (tuple(k), self.base))
        return self.coeffs.get(k, Fraction(0))

    def has(self, k):
        return MultiIndex(k).order <= self.order and MultiIndex(k) not in self.missing

    def taylor_polynomial(self):
        """
        The Taylor polynomial in u = x' - base.
        """
        terms = []
        for k in self.indices():
            value = self.coefficient(k)
            if value != 0:
                terms.append((k, value / factorial(k)))
        return Poly(self.n, terms)

    def evaluate(self, x):
        """
        A_base(x), the Taylor polynomial at x.
        """
        d = subtract(x, self.base)
        total = Fraction(0)
        for k, value in self.coeffs.items():
            if k in self.missing: continue
            total = total + value * monomial_value(d, k) / factorial(k)
        return total

    def sup_norm(self, max_order=None):
        """
        max |a_k| over |k| <= max_order
        """
        max_order = self.order if max_order is None else max_order
        values = [abs(self.coefficient(k)) for k in multi_indices(self.n, max_order)]
        return max(values) if values else Fraction(0)

    ##////////////////////////////////////////////////////////////////////
    ## Jet operations
    ##////////////////////////////////////////////////////////////////////

    def formal_derivative(self, q):
        """
        The jet (a_{q+k})_{|k| <= m - |q|} of order m - |q|.
        """
        q = MultiIndex(q)
        if len(q) != self.n:
            raise DimensionMismatch("derivative index %r for a jet in R^%i" % (tuple(q), self.n))
        if q.order > self.order:
            raise OrderExceeded("cannot differentiate an order %i jet %i times" % (self.order, q.order))
        order  = self.order - q.order
        coeffs = {}
        missing = []
        for k in multi_indices(self.n, order):
            if (q + k) in self.missing:
                missing.append(k)
            else:
                coeffs[k] = self.coeffs.get(q + k, 0)
        return Jet(self.base, order, coeffs, missing)

    def truncate(self, r):
        if r < 0 or r > self.order:
            raise OrderExceeded("cannot truncate an order %i jet to order %i" % (self.order, r))
        coeffs  = dict((k, v) for k, v in self.coeffs.items() if k.order <= r)
        missing = [k for k in self.missing if k.order <= r]
        return Jet(self.base, r, coeffs, missing)

    def to_json(self):
        data = {
            "x": jsonify_point(self.base),
            "coeffs": [
                [list(k), fraction_string(self.coeffs[k])]
                for k in self.indices() if k in self.coeffs
            ],
        }
        if self.missing:
            data["missing"] = [list(k) for k in sorted(self.missing)]
        return data

    @classmethod
    def from_json(klass, data, order, exact=True):
        return klass(
            point(data["x"], exact),
            order,
            dict((MultiIndex(k), scalar(v, exact)) for k, v in data.get("coeffs", [])),
            data.get("missing", ()),
        )

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (
            self.base == other.base and self.order == other.order and
            self.coeffs == other.coeffs and self.missing == other.missing
        )

    def __hash__(self):
        return hash((self.base, self.order, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "<Jet order %i at %r>" % (self.order, self.base)

##########################################################################
## Jet Field
##########################################################################

class JetField(object):
    """
    Jets of a shared order on a finite set of distinct sample points.
    """

    def __init__(self, jets):
        self.jets = list(jets)
        if not self.jets:
            raise InvalidJetField("a jet field needs at least one sample")

        orders = set(jet.order for jet in self.jets)
        if len(orders) != 1:
            raise InvalidJetField("jets of mixed orders %r" % sorted(orders))
        dims = set(jet.n for jet in self.jets)
        if len(dims) != 1:
            raise InvalidJetField("jets in mixed dimensions %r" % sorted(dims))

        self._index = {}
        for jet in self.jets:
            if jet.base in self._index:
                raise InvalidJetField("sample %r appears twice" % (jet.base,))
            self._index[jet.base] = jet

    @classmethod
    def from_poly(klass, poly, points, order):
        return klass(Jet.from_poly(poly, x, order) for x in points)

    @classmethod
    def from_callable(klass, func, points, order, missing=None):
        """
        Builds a field from func(x) -> {k: a_k(x)}. Indices omitted by func
        are zero; `missing(x)` may return the indices that do not exist at x.
        """
        jets = []
        for x in points:
            miss = missing(x) if missing is not None else ()
            jets.append(Jet(x, order, func(x), miss))
        return klass(jets)

    @property
    def order(self):
        return self.jets[0].order

    @property
    def n(self):
        return self.jets[0].n

    @property
    def points(self):
        return [jet.base for jet in self.jets]

    def jet_at(self, x):
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise PointNotInField("%r is not a sample of the field" % (tuple(x),))

    def truncate(self, r):
        return JetField(jet.truncate(r) for jet in self.jets)

    def pairs(self):
        """
        Ordered pairs of distinct samples in canonical (sorted) order.
        """
        pts = sorted(self.points)
        for x in pts:
            for y in pts:
                if x != y:
                    yield x, y

    def to_json(self):
        return {"order": self.order, "points": [jet.to_json() for jet in self.jets]}

    @classmethod
    def from_json(klass, data, exact=True):
        order = int(data["order"])
        return klass(Jet.from_json(item, order, exact) for item in data["points"])

    def __len__(self):
        return len(self.jets)

    def __iter__(self):
        return iter(self.jets)

    def __repr__(self):
        return "<JetField order %i on %i samples>" % (self.order, len(self.jets))

##########################################################################
## Whitney remainders and semi-norms
##########################################################################

def whitney_remainder(field, q, x, x2):
    """
    (R_x A)^q(x') = a_q(x') - sum_{|k| <= m-|q|} a_{q+k}(x) (x'-x)^k / k!
    """
    q = MultiIndex(q)
    if q.order > field.order:
        raise OrderExceeded("remainder of order %i for an order %i field" % (q.order, field.order))
    near, far = field.jet_at(x), field.jet_at(x2)
    d = subtract(far.base, near.base)
    total = far.coefficient(q)
    for k in multi_indices(field.n, field.order - q.order):
        a = near.coefficient(q + k)
        if a != 0:
            total = total - a * monomial_value(d, k) / factorial(k)
    return total

class SeminormReport(object):
    """
    Sup norm and Whitney norm of a field over its samples, with the pair
    that realizes the Whitney quotient.
    """

    def __init__(self, r, order, sup_norm, quotient, worst=None):
        self.r        = r
        self.order    = order
        self.sup_norm = sup_norm
        self.quotient = quotient
        self.worst    = worst

    @property
    def whitney_norm(self):
        return self.sup_norm + self.quotient

    def to_json(self):
        worst = None
        if self.worst is not None:
            x, x2, q = self.worst
            worst = {"x": jsonify_point(x), "x_prime": jsonify_point(x2), "q": list(q)}
        return {
            "r": self.r,
            "order": self.order,
            "sup_norm": fraction_string(self.sup_norm),
            "whitney_norm": fraction_string(self.whitney_norm),
            "quotient": fraction_string(self.quotient),
            "worst": worst,
        }

def seminorms(field, r):
    """
    |A|^m_K = max |a_k(x)| and ||A||^{r,m}_K = |A|^m_K plus the largest
    |(R_x A)^k(x')| / |x - x'|^(r - |k|) over pairs of samples and |k| <= r.
    Ties keep the lexicographically first (x, x', k).
    """
    if r < 0 or r > field.order:
        raise OrderExceeded("semi-norm order %i for an order %i field" % (r, field.order))

    sup_norm = Fraction(0)
    for jet in field:
        sup_norm = max(sup_norm, jet.sup_norm())

    indices = list(multi_indices(field.n, r))
    pts = sorted(field.points)

    def row(x):
        best, worst = Fraction(0), None
        for x2 in pts:
            if x2 == x: continue
            d = subtract(x2, x)
            for k in indices:
                value = abs(whitney_remainder(field, k, x, x2))
                if value == 0: continue
                value = value / distance_power(d, r - k.order)
                if value > best:
                    best, worst = value, (x, x2, tuple(k))
        return best, worst

    quotient, worst = Fraction(0), None
    for best, candidate in pmap(row, pts):
        if best > quotient:
            quotient, worst = best, candidate

    return SeminormReport(r, field.order, sup_norm, quotient, worst)

##########################################################################
## Regularity probes
##########################################################################

class RegularityReport(object):
    """
    Log-log slope of the largest Whitney remainder per distance decade,
    for every derivative order q up to r.
    """

    def __init__(self, r, rows, decades, tolerance):
        self.r         = r
        self.rows      = rows       # list of dicts, one per q
        self.decades   = decades
        self.tolerance = tolerance

    @property
    def status(self):
        statuses = set(row["status"] for row in self.rows)
        if statuses == {"exact"}:
            return "exact"
        if "violated" in statuses:
            return "inconsistent"
        return "consistent"

    def margin(self, q):
        for row in self.rows:
            if tuple(row["q"]) == tuple(q):
                return row["margin"]
        raise KeyError(q)

    def to_json(self):
        return {
            "r": self.r,
            "status": self.status,
            "decades": self.decades,
            "tolerance": self.tolerance,
            "rows": self.rows,
        }

def r_regularity_probe(field, r, tolerance=None, min_decades=None):
    """
    Fits the slope of max |(R_x A)^q(x')| against |x - x'| on a log-log
    scale, one maximum per distance decade. The margin is the slope minus
    r - |q|; a remainder that is o(|x - x'|^(r-|q|)) shows a margin above
    -tolerance. A field whose remainders all vanish is reported exact.
    """
    if r < 0 or r > field.order:
        raise OrderExceeded("probe order %i for an order %i field" % (r, field.order))
    if tolerance is None:
        tolerance = settings.probe.margin_tol
    if min_decades is None:
        min_decades = settings.probe.min_decades

    pairs = list(field.pairs())
    distances = dict(((x, x2), norm(subtract(x2, x))) for x, x2 in pairs)
    decades = sorted(set(decade(dist) for dist in distances.values() if dist > 0))

    rows = []
    exact_everywhere = True
    for q in multi_indices(field.n, r):
        bins = defaultdict(lambda: (0.0, None))
        all_zero = True
        for x, x2 in pairs:
            value = whitney_remainder(field, q, x, x2)
            if value == 0: continue
            all_zero = False
            dist = distances[(x, x2)]
            key  = decade(dist)
            if abs(value) > bins[key][0]:
                bins[key] = (float(abs(value)), dist)

        if all_zero:
            rows.append({"q": list(q), "status": "exact", "slope": None, "margin": None})
            continue

        exact_everywhere = False
        if len(decades) < min_decades:
            raise InsufficientScales(
                "sample pairs cover %i distance decades, %i needed" % (len(decades), min_decades)
            )
        keys  = sorted(bins)
        slope = fit_slope([bins[k][1] for k in keys], [bins[k][0] for k in keys])
        if slope is None:
            raise InsufficientScales("remainders are nonzero in fewer than two decades")
        margin = slope - (r - q.order)
        rows.append({
            "q": list(q),
            "status": "consistent" if margin >= -tolerance else "violated",
            "slope": slope,
            "margin": margin,
        })

    logger.debug("regularity probe over %i pairs, exact=%s", len(pairs), exact_everywhere)
    return RegularityReport(r, rows, len(decades), tolerance)

def truncation_gap(field, r, q, x, x2):
    """
    Difference between the q-remainders of the truncation A^r and of A at
    (x, x'), and the bound sum |a_{q+k}(x)| |x' - x|^|k| / k! over
    r - |q| < |k| <= m - |q|, which dominates it.
    """
    q = MultiIndex(q)
    if q.order > r:
        raise OrderExceeded("remainder of order %i for a truncation to order %i" % (q.order, r))
    gap = whitney_remainder(field.truncate(r), q, x, x2) - whitney_remainder(field, q, x, x2)

    near = field.jet_at(x)
    d = subtract(x2, x)
    bound = Fraction(0)
    for k in multi_indices(field.n, field.order - q.order, r - q.order + 1):
        a = near.coefficient(q + k)
        if a != 0:
            bound = bound + abs(a) * distance_power(d, k.order) / factorial(k)
    return gap, bound
