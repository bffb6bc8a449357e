# coxinv.chevalley
# Basic invariants and the Chevalley mapping of a reflection group
#
# Created:  Sat Oct 17 13:05:47 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: chevalley.py [] coxinv $

"""
Basic invariants and the Chevalley mapping of a reflection group.

The map P = (p_1, ..., p_n) is assembled block by block: one coordinate
projection per fixed coordinate, then the basic invariants of every factor
in order. The invariants used are

    A1:    x^2
    An:    power sums sum x_i^k, k = 1 .. n+1
    Bn:    even power sums sum x_i^(2j), j = 1 .. n
    Dn:    sum x_i^(2j), j = 1 .. n-1, then the product x_1 ... x_n
    I2(m): x^2 + y^2 and sum_j (x cos(2j pi/m) + y sin(2j pi/m))^m

All invariants have rational coefficients, including the dihedral ones,
so the map itself is always exact; only the reflections of I2(m) are
floats.
"""

##########################################################################
## Imports
##########################################################################

import math
import logging
import sympy
import numpy as np

from fractions import Fraction
from coxinv.params import settings
from coxinv.polynomials import Poly, MultiIndex, determinant, weighted_indices
from coxinv.vectors import check_dimension
from coxinv.exceptions import UnsupportedType, DimensionMismatch, SingularSystem
from coxinv.exceptions import FactorizationFailed, NotInvariant, SolveFailed

logger = logging.getLogger(__name__)

##########################################################################
## Invariant builders per factor type
##########################################################################

def power_sum(nvars, offset, dim, k):
    poly = Poly.zero(nvars)
    for i in range(offset, offset + dim):
        poly = poly + Poly.monomial(nvars, MultiIndex.unit(nvars, i, k))
    return poly

def a_invariants(block, nvars):
    if block.factor.rank == 1:
        return [power_sum(nvars, block.offset, 1, 2)]
    return [power_sum(nvars, block.offset, block.dim, k) for k in range(1, block.dim + 1)]

def b_invariants(block, nvars):
    return [power_sum(nvars, block.offset, block.dim, 2 * j) for j in range(1, block.dim + 1)]

def d_invariants(block, nvars):
    polys = [power_sum(nvars, block.offset, block.dim, 2 * j) for j in range(1, block.dim)]
    exps  = [0] * nvars
    for i in block.indices:
        exps[i] = 1
    polys.append(Poly.monomial(nvars, exps))
    return polys

def dihedral_coefficient(m, k):
    """
    Exact coefficient of x^(m-k) y^k in sum_j (x cos 2j pi/m + y sin 2j pi/m)^m,
    by expanding cos and sin in roots of unity: the sum over j of
    zeta^(jt) is m when m divides t and vanishes otherwise.
    """
    a, b  = m - k, k
    total = 0
    for u in range(a + 1):
        for v in range(b + 1):
            if (2 * u + 2 * v - m) % m == 0:
                total += math.comb(a, u) * math.comb(b, v) * (-1) ** (b - v)
    if b % 2 == 1 or total == 0:
        return Fraction(0)
    # 1 / i^b with b even
    sign = (-1) ** (b // 2)
    return Fraction(math.comb(m, k) * m * total * sign, 2 ** m)

def i2_invariants(block, nvars):
    m  = block.factor.m
    ox = block.offset
    p1 = power_sum(nvars, ox, 2, 2)
    terms = []
    for k in range(m + 1):
        exps = [0] * nvars
        exps[ox], exps[ox + 1] = m - k, k
        terms.append((exps, dihedral_coefficient(m, k)))
    return [p1, Poly(nvars, terms)]

INVARIANT_BUILDERS = {
    "A": a_invariants,
    "B": b_invariants,
    "D": d_invariants,
    "I2": i2_invariants,
}

##########################################################################
## Pivots of the triangular identification
##########################################################################

class Pivot(object):
    """
    The derivative at which invariant `index` is identified: either a pure
    power k * e_o of the first coordinate of its block, or the mixed index
    (1, ..., 1) on the block.
    """

    def __init__(self, index, kind, exponents, coefficient):
        self.index       = index
        self.kind        = kind
        self.exponents   = MultiIndex(exponents)
        self.coefficient = coefficient

    def to_json(self):
        return {
            "index": self.index,
            "kind": self.kind,
            "alpha": list(self.exponents),
            "coefficient": str(self.coefficient),
        }

    def __repr__(self):
        return "<Pivot p%i %s %r>" % (self.index, self.kind, tuple(self.exponents))

##########################################################################
## Chevalley Mapping
##########################################################################

class ChevalleyMap(object):
    """
    The ordered basic invariants of a group together with their block
    structure. Construct with basic_invariants().
    """

    def __init__(self, group, polys, blocks):
        self.group  = group
        self.polys  = tuple(polys)
        self.blocks = blocks   # list of (Block, [poly indices])

    @property
    def n(self):
        return self.group.n

    @property
    def degrees(self):
        return [p.degree for p in self.polys]

    @property
    def h(self):
        return self.group.h

    @property
    def exact(self):
        return all(p.exact for p in self.polys)

    @property
    def jacobian_constant(self):
        """
        The constant c of det J_P = c * prod(lambda), computed on demand.
        """
        if not hasattr(self, '_jacobian_constant'):
            verify_jacobian_factorization(self)
        return self._jacobian_constant

    @property
    def jacobian_polys(self):
        if not hasattr(self, '_jacobian_polys'):
            n = self.n
            self._jacobian_polys = tuple(
                tuple(p.partial_derivative(MultiIndex.unit(n, j)) for j in range(n))
                for p in self.polys
            )
        return self._jacobian_polys

    @property
    def jacobian_determinant(self):
        """
        det J_P as a polynomial, the product of the block determinants.
        """
        if not hasattr(self, '_jacobian_determinant'):
            result = Poly.constant(self.n, 1)
            for block, rows in self.blocks:
                if block.factor is None: continue
                matrix = [
                    [self.jacobian_polys[i][j] for j in block.indices]
                    for i in rows
                ]
                result = result * determinant(matrix)
            self._jacobian_determinant = result
        return self._jacobian_determinant

    def compose(self, F):
        """
        F o P as a polynomial in x.
        """
        if F.nvars != len(self.polys):
            raise DimensionMismatch("F has %i variables, P has %i invariants" % (F.nvars, len(self.polys)))
        return F.compose(self.polys)

    def pivots(self):
        """
        The identification pivots in solve order: mixed pivots first, then
        power pivots by decreasing degree.
        """
        if hasattr(self, '_pivots'):
            return self._pivots

        pivots = []
        for block, rows in self.blocks:
            if block.factor is None:
                for i in rows:
                    pivots.append(Pivot(i, "power", MultiIndex.unit(self.n, i), 1))
                continue

            origin = block.offset
            for i in rows:
                poly = self.polys[i]
                k    = poly.degree
                power = MultiIndex.unit(self.n, origin, k)
                if poly.coefficient(power) != 0:
                    pivots.append(Pivot(i, "power", power, poly.coefficient(power)))
                    continue
                mixed = [0] * self.n
                for j in block.indices:
                    mixed[j] = 1
                mixed = MultiIndex(mixed)
                if k == block.dim and poly.coefficient(mixed) != 0:
                    pivots.append(Pivot(i, "mixed", mixed, poly.coefficient(mixed)))
                    continue
                raise SingularSystem("invariant p%i has neither a power nor a mixed pivot" % (i + 1))

        pivots.sort(key=lambda pv: (pv.kind != "mixed", -pv.exponents.order, pv.index))
        self._pivots = pivots
        return pivots

    def to_json(self):
        return {
            "group": self.group.spec.to_json(),
            "degrees": self.degrees,
            "invariants": [p.to_json() for p in self.polys],
            "pivots": [pv.to_json() for pv in self.pivots()],
        }

    def __repr__(self):
        return "<ChevalleyMap of %s>" % self.group.spec.name

##########################################################################
## Operations
##########################################################################

def basic_invariants(g):
    """
    Builds the Chevalley mapping of a group.
    """
    polys, blocks = [], []
    for block in g.blocks:
        if block.factor is None:
            start = len(polys)
            polys.extend(Poly.variable(g.n, i) for i in block.indices)
        else:
            builder = INVARIANT_BUILDERS.get(block.factor.label)
            if builder is None:
                raise UnsupportedType("no basic invariants known for type %s" % block.factor.label)
            start = len(polys)
            polys.extend(builder(block, g.n))
        blocks.append((block, list(range(start, len(polys)))))
    return ChevalleyMap(g, polys, blocks)

def eval_P(P, x):
    check_dimension(x, P.n)
    return tuple(p.evaluate(x) for p in P.polys)

def jacobian(P, x):
    """
    The matrix of dp_i/dx_j at x, as a list of rows.
    """
    check_dimension(x, P.n)
    return [[entry.evaluate(x) for entry in row] for row in P.jacobian_polys]

def verify_jacobian_factorization(P):
    """
    Finds c with det J_P = c * prod(lambda_tau) and returns (c, residual).
    On exact groups det J_P is divided by the product of the forms and the
    remainder must vanish; on dihedral groups c is the least squares ratio
    of the coefficient vectors and the residual must be within the
    factorization tolerance.
    """
    det   = P.jacobian_determinant
    forms = P.group.product_of_forms()

    if P.group.exact and det.exact:
        quotient, remainder = det.divide(forms)
        if not remainder.is_zero() or not quotient.is_constant() or quotient.is_zero():
            raise FactorizationFailed(
                "det J_P is not a constant multiple of the product of the reflection forms"
            )
        c = quotient.constant_term()
        residual = det - forms * c
    else:
        monomials = set(det.terms) | set(forms.terms)
        num = sum(float(det.coefficient(e)) * float(forms.coefficient(e)) for e in monomials)
        den = sum(float(forms.coefficient(e)) ** 2 for e in monomials)
        if den == 0 or num == 0:
            raise FactorizationFailed("det J_P is not a multiple of the product of the reflection forms")
        c = num / den
        residual = det.as_float() - forms * c
        tol = settings.tolerances.factorization_tol
        if residual.max_abs_coefficient() > tol:
            raise FactorizationFailed(
                "factorization residual %.3e exceeds %.1e" % (residual.max_abs_coefficient(), tol)
            )

    logger.debug("jacobian constant of %r is %s", P, c)
    P._jacobian_constant = c
    return c, residual

def is_invariant(g, f, tol=None):
    """
    True if f o s_tau = f for every reflection of the group; exact when
    both the group and f are exact.
    """
    if f.nvars != g.n:
        raise DimensionMismatch("polynomial in %i variables for a group acting on R^%i" % (f.nvars, g.n))
    exact = g.exact and f.exact
    if tol is None:
        tol = settings.tolerances.float_tol * max(1.0, float(f.max_abs_coefficient()))
    for idx in range(g.d):
        image = f.compose(g.reflection_substitution(idx))
        diff  = image - f
        if exact:
            if not diff.is_zero():
                return False
        elif diff.max_abs_coefficient() > tol:
            return False
    return True

##////////////////////////////////////////////////////////////////////////
## Rewriting in the basic invariants
##////////////////////////////////////////////////////////////////////////

class DegreeSystem(object):
    """
    Linear system expressing the weighted monomials prod p^beta of one
    total degree in the monomial basis of x. The exact inverse of a
    maximal nonsingular row selection is cached on first use.
    """

    def __init__(self, P, degree):
        self.degree = degree
        self.betas  = weighted_indices(P.degrees, degree)
        columns = []
        for beta in self.betas:
            col = Poly.constant(P.n, 1)
            for p, b in zip(P.polys, beta):
                if b:
                    col = col * powers(P, p, b)
            columns.append(col)
        self.monomials = sorted(set(e for col in columns for e in col.terms))
        self.matrix = [[col.coefficient(e) for col in columns] for e in self.monomials]

    @property
    def inverse(self):
        if not hasattr(self, '_inverse'):
            M = sympy.Matrix([
                [sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, row)]
                for row in self.matrix
            ])
            _, pivots = M.T.rref()
            if len(pivots) != len(self.betas):
                raise SolveFailed("weighted monomials of degree %i are dependent" % self.degree)
            self.rows = list(pivots)
            self._inverse = M.extract(self.rows, list(range(M.cols))).inv()
        return self._inverse

    def solve_exact(self, f_part):
        inverse = self.inverse
        rhs = sympy.Matrix([
            sympy.Rational(c.numerator, c.denominator)
            for c in (Fraction(f_part.coefficient(self.monomials[r])) for r in self.rows)
        ])
        sol = inverse * rhs
        return [Fraction(int(v.p), int(v.q)) for v in sol]

    def solve_float(self, f_part):
        A = np.array([[float(c) for c in row] for row in self.matrix], dtype=float)
        b = np.array([float(f_part.coefficient(e)) for e in self.monomials], dtype=float)
        sol, _, _, _ = np.linalg.lstsq(A, b, rcond=None)
        return [float(v) for v in sol]

def powers(P, p, b):
    cache = P.__dict__.setdefault('_powers', {})
    key = (id(p), b)
    if key not in cache:
        cache[key] = p ** b
    return cache[key]

def degree_system(P, degree):
    cache = P.__dict__.setdefault('_degree_systems', {})
    if degree not in cache:
        cache[degree] = DegreeSystem(P, degree)
    return cache[degree]

def rewrite_invariant_polynomial(P, f):
    """
    Finds F with F o P = f for an invariant polynomial f. F is a
    polynomial in n variables, one per basic invariant.
    """
    if f.nvars != P.n:
        raise DimensionMismatch("polynomial in %i variables for P on R^%i" % (f.nvars, P.n))
    if not is_invariant(P.group, f):
        raise NotInvariant("the polynomial is not invariant under the reflections of %s" % P.group.spec.name)

    exact = f.exact
    terms = {}
    for degree in f.homogeneous_degrees():
        part   = f.homogeneous_part(degree)
        system = degree_system(P, degree)
        if not system.betas:
            raise SolveFailed("no weighted monomial of degree %i" % degree)
        coeffs = system.solve_exact(part) if exact else system.solve_float(part)
        for beta, coeff in zip(system.betas, coeffs):
            if coeff != 0:
                terms[tuple(beta)] = coeff

    F = Poly(len(P.polys), terms)
    check = P.compose(F) - f
    if exact:
        if not check.is_zero():
            raise SolveFailed("rewritten polynomial does not reproduce the input")
    else:
        tol = settings.tolerances.factorization_tol * max(1.0, float(f.max_abs_coefficient()))
        if check.max_abs_coefficient() > tol:
            raise SolveFailed("rewrite residual %.3e exceeds tolerance" % check.max_abs_coefficient())
        F = F.chop(settings.tolerances.float_tol)
    return F
