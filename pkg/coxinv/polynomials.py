# coxinv.polynomials
# Sparse multivariate polynomials over exact rationals
#
# Created:  Sat Oct 17 10:40:19 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: polynomials.py [] coxinv $

"""
Sparse multivariate polynomials over exact rationals.

A Poly maps exponent tuples to coefficients. Coefficients are Fractions on
the rational path; a float coefficient anywhere turns the arithmetic that
touches it into float arithmetic, and `chop` removes float noise. Poly
values are immutable and every operation returns a new Poly, so they can be
shared freely between threads.

Monomials are ordered graded lexicographically (total degree first, then
lexicographic with x0 > x1 > ...). JSON output lists terms in ascending
graded lexicographic order, which makes serialization deterministic.
"""

##########################################################################
## Imports
##########################################################################

import math
import itertools
import numpy as np

from fractions import Fraction
from coxinv.vectors import scalar, is_exact, jsonify, fraction_string
from coxinv.exceptions import DimensionMismatch, OrderExceeded

##########################################################################
## Multi-indices
##########################################################################

class MultiIndex(tuple):
    """
    Exponent vector of non-negative integers. Hashes and compares like the
    plain tuple, so it can be used interchangeably as a dictionary key.
    Note that + and - are componentwise, not tuple concatenation.
    """

    def __new__(klass, exponents):
        exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exponents):
            raise ValueError("multi-index entries must be non-negative: %r" % (exponents,))
        return super(MultiIndex, klass).__new__(klass, exponents)

    @classmethod
    def zero(klass, n):
        return klass((0,) * n)

    @classmethod
    def unit(klass, n, i, power=1):
        exps = [0] * n
        exps[i] = power
        return klass(exps)

    @property
    def order(self):
        """
        |alpha|, the sum of the entries
        """
        return sum(self)

    @property
    def factorial(self):
        """
        alpha!, the product of the entry factorials
        """
        return factorial(self)

    def __add__(self, other):
        return MultiIndex(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return MultiIndex(a - b for a, b in zip(self, other))

    def dominates(self, other):
        """
        True if self >= other componentwise.
        """
        return all(a >= b for a, b in zip(self, other))

def order(alpha):
    return sum(alpha)

def factorial(alpha):
    result = 1
    for a in alpha:
        result *= math.factorial(a)
    return result

def grlex(alpha):
    """
    Sort key of the graded lexicographic order.
    """
    return (sum(alpha), tuple(alpha))

def multi_indices(n, max_order, min_order=0):
    """
    All multi-indices in n variables with min_order <= |alpha| <= max_order,
    in ascending graded lexicographic order.
    """
    for total in range(min_order, max_order + 1):
        for alpha in sorted(_compositions(n, total), reverse=True):
            yield MultiIndex(alpha)

def _compositions(n, total):
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest

def weighted_indices(weights, total):
    """
    All beta with sum(beta_i * weights_i) == total.
    """
    weights = tuple(weights)

    def recurse(i, remaining):
        if i == len(weights):
            if remaining == 0:
                yield ()
            return
        for b in range(remaining // weights[i], -1, -1):
            for rest in recurse(i + 1, remaining - b * weights[i]):
                yield (b,) + rest

    return [MultiIndex(beta) for beta in recurse(0, total)]

##########################################################################
## Polynomial Object
##########################################################################

class Poly(object):
    """
    Sparse polynomial in `nvars` variables. Terms are given as a mapping or
    iterable of (exponents, coefficient); zero coefficients are never
    stored and repeated exponents are summed.
    """

    def __init__(self, nvars, terms=None):
        self.nvars  = int(nvars)
        self._terms = {}

        if terms is None:
            return
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise DimensionMismatch(
                    "monomial %r has %i exponents, polynomial has %i variables" % (exps, len(exps), self.nvars)
                )
            coeff = scalar(coeff)
            total = self._terms.get(exps, 0) + coeff
            if total == 0:
                self._terms.pop(exps, None)
            else:
                self._terms[exps] = total

    ##////////////////////////////////////////////////////////////////////
    ## Class method "constructors" of various types
    ##////////////////////////////////////////////////////////////////////

    @classmethod
    def zero(klass, nvars):
        return klass(nvars)

    @classmethod
    def constant(klass, nvars, value):
        return klass(nvars, [((0,) * nvars, value)])

    @classmethod
    def variable(klass, nvars, index):
        return klass(nvars, [(MultiIndex.unit(nvars, index), 1)])

    @classmethod
    def monomial(klass, nvars, exps, coeff=1):
        return klass(nvars, [(exps, coeff)])

    @classmethod
    def linear_form(klass, coeffs, constant=0):
        """
        sum(coeffs_i * x_i) + constant
        """
        n = len(coeffs)
        terms = [(MultiIndex.unit(n, i), c) for i, c in enumerate(coeffs)]
        terms.append(((0,) * n, constant))
        return klass(n, terms)

    @classmethod
    def _raw(klass, nvars, terms):
        # terms already cleaned: no zeros, tuple keys
        poly = klass(nvars)
        poly._terms = terms
        return poly

    ##////////////////////////////////////////////////////////////////////
    ## Properties
    ##////////////////////////////////////////////////////////////////////

    @property
    def terms(self):
        """
        Copy of the term dictionary, exponents -> coefficient
        """
        return dict(self._terms)

    @property
    def degree(self):
        """
        Total degree; the zero polynomial has degree -1.
        """
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    @property
    def exact(self):
        return all(is_exact(c) for c in self._terms.values())

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(sum(exps) == 0 for exps in self._terms)

    def is_homogeneous(self, degree=None):
        degrees = set(sum(exps) for exps in self._terms)
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees.pop() == degree

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def constant_term(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def monomials(self):
        """
        Exponents in ascending graded lexicographic order
        """
        return sorted(self._terms, key=grlex)

    def items(self):
        for exps in self.monomials():
            yield exps, self._terms[exps]

    def leading_term(self):
        exps = max(self._terms, key=grlex)
        return exps, self._terms[exps]

    def max_abs_coefficient(self):
        if not self._terms:
            return 0
        return max(abs(c) for c in self._terms.values())

    def __len__(self):
        return len(self._terms)

    ##////////////////////////////////////////////////////////////////////
    ## Ring arithmetic
    ##////////////////////////////////////////////////////////////////////

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatch("cannot combine polynomials in %i and %i variables" % (self.nvars, other.nvars))
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = terms.get(exps, 0) + coeff
            if total == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = total
        return Poly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, dict((e, -c) for e, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = scalar(other)
            if other == 0:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, dict((e, c * other) for e, c in self._terms.items()))

        other = self._lift(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Poly._raw(self.nvars, dict((e, c) for e, c in terms.items() if c != 0))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            raise TypeError("use divide() for polynomial division")
        other = scalar(other)
        return self * (1 / other if not is_exact(other) else Fraction(1) / other)

    def __pow__(self, exponent):
        if exponent < 0 or int(exponent) != exponent:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.constant(self.nvars, 1)
        base = self
        exponent = int(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == Poly.constant(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def mul_truncated(self, other, max_degree):
        """
        Product with all terms of total degree above max_degree discarded,
        without ever forming them.
        """
        other = self._lift(other)
        terms = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            if d1 > max_degree: continue
            for e2, c2 in other._terms.items():
                if d1 + sum(e2) > max_degree: continue
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Poly._raw(self.nvars, dict((e, c) for e, c in terms.items() if c != 0))

    ##////////////////////////////////////////////////////////////////////
    ## Calculus and evaluation
    ##////////////////////////////////////////////////////////////////////

    def partial_derivative(self, q):
        """
        D^q of the polynomial, exact.
        """
        q = tuple(q)
        if len(q) != self.nvars:
            raise DimensionMismatch("derivative order %r does not match %i variables" % (q, self.nvars))
        terms = {}
        for exps, coeff in self._terms.items():
            if any(e < k for e, k in zip(exps, q)):
                continue
            factor = 1
            for e, k in zip(exps, q):
                for j in range(k):
                    factor *= (e - j)
            terms[tuple(e - k for e, k in zip(exps, q))] = coeff * factor
        return Poly._raw(self.nvars, terms)

    def evaluate(self, x):
        """
        Value at the point x; exact when x and the coefficients are exact.
        """
        if len(x) != self.nvars:
            raise DimensionMismatch("point of dimension %i for a polynomial in %i variables" % (len(x), self.nvars))
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for xi, e in zip(x, exps):
                if e:
                    term = term * xi ** e
            total = total + term
        return total

    __call__ = evaluate

    def evaluate_array(self, points):
        """
        Float values at every row of a (num, nvars) array.
        """
        points = np.asarray(points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self.nvars:
            raise DimensionMismatch("expected an array with %i columns" % self.nvars)
        values = np.zeros(points.shape[0])
        for exps, coeff in self._terms.items():
            term = np.full(points.shape[0], float(coeff))
            for i, e in enumerate(exps):
                if e:
                    term = term * points[:, i] ** e
            values += term
        return values

    def compose(self, subs):
        """
        Substitutes subs[i] for the i-th variable. All substitutions must be
        polynomials in a common number of variables, which becomes the number
        of variables of the result.
        """
        subs = list(subs)
        if len(subs) != self.nvars:
            raise DimensionMismatch("%i substitutions for %i variables" % (len(subs), self.nvars))
        if not subs:
            return Poly(0, self._terms)
        nvars = subs[0].nvars
        if any(s.nvars != nvars for s in subs):
            raise DimensionMismatch("substitutions live in different numbers of variables")

        powers = [dict() for _ in subs]

        def power(i, e):
            if e not in powers[i]:
                powers[i][e] = subs[i] ** e
            return powers[i][e]

        result = Poly.zero(nvars)
        for exps, coeff in self._terms.items():
            term = Poly.constant(nvars, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def shift(self, a):
        """
        The polynomial t -> p(a + t).
        """
        if len(a) != self.nvars:
            raise DimensionMismatch("shift of dimension %i for %i variables" % (len(a), self.nvars))
        n = self.nvars
        subs = [Poly.linear_form(MultiIndex.unit(n, i), a[i]) for i in range(n)]
        return self.compose(subs)

    def embed(self, nvars, offset=0):
        """
        The same polynomial in nvars variables, its own variables mapped to
        offset, offset + 1, ...
        """
        if offset + self.nvars > nvars:
            raise DimensionMismatch("cannot embed %i variables at offset %i into %i" % (self.nvars, offset, nvars))
        terms = {}
        for exps, coeff in self._terms.items():
            full = [0] * nvars
            full[offset:offset + self.nvars] = exps
            terms[tuple(full)] = coeff
        return Poly._raw(nvars, terms)

    ##////////////////////////////////////////////////////////////////////
    ## Truncation, division, cleanup
    ##////////////////////////////////////////////////////////////////////

    def truncate(self, m):
        """
        Drops every term of total degree above m.
        """
        if m < 0:
            raise OrderExceeded("truncation order must be non-negative")
        return Poly._raw(self.nvars, dict((e, c) for e, c in self._terms.items() if sum(e) <= m))

    def homogeneous_part(self, degree):
        return Poly._raw(self.nvars, dict((e, c) for e, c in self._terms.items() if sum(e) == degree))

    def homogeneous_degrees(self):
        return sorted(set(sum(e) for e in self._terms))

    def divide(self, divisor, tol=0.0):
        """
        Multivariate division by a single polynomial with respect to the
        graded lexicographic order. Returns (quotient, remainder) with no
        remainder term divisible by the leading monomial of the divisor.
        When the divisor divides self exactly the remainder is zero.
        """
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead, lead_coeff = divisor.leading_term()
        rest = [(e, c) for e, c in divisor._terms.items() if e != lead]

        work = dict(self._terms)
        quotient, remainder = {}, {}
        while work:
            exps = max(work, key=grlex)
            coeff = work.pop(exps)
            if abs(coeff) <= tol and not is_exact(coeff):
                continue
            if all(e >= l for e, l in zip(exps, lead)):
                q_exps  = tuple(e - l for e, l in zip(exps, lead))
                q_coeff = coeff / lead_coeff
                quotient[q_exps] = quotient.get(q_exps, 0) + q_coeff
                for e, c in rest:
                    key = tuple(a + b for a, b in zip(e, q_exps))
                    value = work.get(key, 0) - q_coeff * c
                    if value == 0:
                        work.pop(key, None)
                    else:
                        work[key] = value
            else:
                remainder[exps] = coeff
        return Poly(self.nvars, quotient), Poly(self.nvars, remainder)

    def chop(self, tol):
        """
        Removes float coefficients with |c| <= tol. Exact coefficients are
        never touched.
        """
        return Poly._raw(self.nvars, dict(
            (e, c) for e, c in self._terms.items() if is_exact(c) or abs(c) > tol
        ))

    def as_float(self):
        return Poly._raw(self.nvars, dict((e, float(c)) for e, c in self._terms.items()))

    ##////////////////////////////////////////////////////////////////////
    ## Serialization
    ##////////////////////////////////////////////////////////////////////

    def to_json(self):
        """
        [[exponent-vector, "num/den"], ...] in graded lexicographic order.
        Exact coefficients are always written as "num/den".
        """
        return [[list(exps), fraction_string(coeff)] for exps, coeff in self.items()]

    @classmethod
    def from_json(klass, data, nvars=None, exact=True):
        if nvars is None:
            if not data:
                raise DimensionMismatch("cannot infer the number of variables of an empty polynomial")
            nvars = len(data[0][0])
        return klass(nvars, [(exps, scalar(coeff, exact)) for exps, coeff in data])

    def __repr__(self):
        return "<Poly in %i variables: %s>" % (self.nvars, self)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self._terms.items(), key=lambda item: grlex(item[0]), reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append("x%i" % i)
                elif e > 1:
                    factors.append("x%i^%i" % (i, e))
            value = jsonify(coeff)
            if not factors:
                parts.append(str(value))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("%s*%s" % (value, "*".join(factors)))
        return " + ".join(parts).replace("+ -", "- ")

##########################################################################
## Polynomial matrices
##########################################################################

def determinant(matrix):
    """
    Determinant of a square matrix of Polys by the Leibniz expansion, which
    is fine at the small sizes of the supported groups.
    """
    size = len(matrix)
    if size == 0:
        raise DimensionMismatch("empty matrix")
    nvars = matrix[0][0].nvars
    total = Poly.zero(nvars)
    for perm in itertools.permutations(range(size)):
        term = None
        for row, col in enumerate(perm):
            entry = matrix[row][col]
            if entry.is_zero():
                term = None
                break
            term = entry if term is None else term * entry
        if term is None:
            continue
        total = total + term if _parity(perm) == 0 else total - term
    return total

def minor(matrix, row, col):
    """
    Determinant of the matrix with one row and one column removed.
    """
    sub = [
        [entry for j, entry in enumerate(line) if j != col]
        for i, line in enumerate(matrix) if i != row
    ]
    if not sub:
        return Poly.constant(matrix[0][0].nvars, 1)
    return determinant(sub)

def _parity(perm):
    parity = 0
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]: continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity
