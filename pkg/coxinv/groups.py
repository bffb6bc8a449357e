# coxinv.groups
# Finite reflection groups of types A, B, D, I2 and their products
#
# Created:  Sat Oct 17 11:32:05 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: groups.py [] coxinv $

"""
Finite reflection groups of types A, B, D, I2 and their products.

A group is described by a GroupSpec (its irreducible factors and the
dimension of the pointwise fixed subspace) and built into an immutable
GroupData that carries the reflecting roots, the degrees of the basic
invariants, the Coxeter number and the reflection count.

Coordinates are laid out block by block: the fixed block comes first,
then every factor in the order it was given. Roots are stored as
unnormalized vectors, so that lambda(x) = <root, x> has integer
coefficients on the classical types. Dihedral roots are floats.

Factor types are looked up in a registry; new types (exceptional groups)
are added by subclassing Factor and decorating the class with
register_factor.
"""

##########################################################################
## Imports
##########################################################################

import math
import numbers
import logging

from fractions import Fraction
from collections import deque

from coxinv.params import settings
from coxinv.polynomials import Poly
from coxinv.vectors import dot, is_exact, jsonify_point, check_dimension
from coxinv.exceptions import UnsupportedType, RankOutOfRange
from coxinv.exceptions import IndexOutOfRange, OrbitCapExceeded

logger = logging.getLogger(__name__)

##########################################################################
## Factor registry
##########################################################################

FACTOR_TYPES = {}

def register_factor(klass):
    """
    Class decorator that makes a factor type available by its label.
    """
    FACTOR_TYPES[klass.label] = klass
    return klass

def make_factor(label, rank):
    label = str(label).upper()
    if label not in FACTOR_TYPES:
        raise UnsupportedType("unsupported reflection group type '%s'" % label)
    return FACTOR_TYPES[label](int(rank))

##########################################################################
## Irreducible factors
##########################################################################

class Factor(object):
    """
    An irreducible reflection group acting on its own block of coordinates.
    Subclasses provide the label, the rank bound, the roots in local
    coordinates, the degrees and the order formula.
    """

    label    = None
    min_rank = 1
    exact    = True

    def __init__(self, rank):
        if rank < self.min_rank:
            raise RankOutOfRange(
                "type %s needs rank at least %i, got %i" % (self.label, self.min_rank, rank)
            )
        self.rank = rank

    @property
    def name(self):
        return "%s%i" % (self.label, self.rank)

    @property
    def dim(self):
        """
        Number of ambient coordinates of the block.
        """
        return self.rank

    @property
    def roots(self):
        raise NotImplementedError("factors must enumerate their roots")

    @property
    def degrees(self):
        raise NotImplementedError("factors must report their degrees")

    @property
    def coxeter_number(self):
        return max(self.degrees)

    @property
    def order_formula(self):
        raise NotImplementedError("factors must report their order")

    def to_json(self):
        return [self.label, self.rank]

    def __repr__(self):
        return "<%s factor>" % self.name

    def __eq__(self, other):
        return isinstance(other, Factor) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(tuple(self.to_json()))

def unit(n, i, value=1):
    vec = [0] * n
    vec[i] = value
    return vec

@register_factor
class AFactor(Factor):
    """
    Symmetric group permuting coordinates. A1 acts on a line by x -> -x;
    A_n with n >= 2 permutes n + 1 coordinates and keeps the diagonal
    line fixed, which contributes a degree one invariant.
    """

    label = "A"

    @property
    def dim(self):
        return 1 if self.rank == 1 else self.rank + 1

    @property
    def roots(self):
        if self.rank == 1:
            return [(1,)]
        n = self.dim
        return [
            tuple(a - b for a, b in zip(unit(n, i), unit(n, j)))
            for i in range(n) for j in range(i + 1, n)
        ]

    @property
    def degrees(self):
        if self.rank == 1:
            return [2]
        return list(range(1, self.rank + 2))

    @property
    def coxeter_number(self):
        return self.rank + 1

    @property
    def order_formula(self):
        return math.factorial(self.rank + 1)

@register_factor
class BFactor(Factor):
    """
    Signed permutations of n coordinates.
    """

    label    = "B"
    min_rank = 2

    @property
    def roots(self):
        n = self.rank
        roots = [tuple(unit(n, i)) for i in range(n)]
        for sign in (-1, 1):
            roots.extend(
                tuple(a + sign * b for a, b in zip(unit(n, i), unit(n, j)))
                for i in range(n) for j in range(i + 1, n)
            )
        return roots

    @property
    def degrees(self):
        return [2 * j for j in range(1, self.rank + 1)]

    @property
    def order_formula(self):
        return 2 ** self.rank * math.factorial(self.rank)

@register_factor
class DFactor(Factor):
    """
    Signed permutations with an even number of sign changes. D2 is
    reducible and rejected.
    """

    label    = "D"
    min_rank = 3

    @property
    def roots(self):
        n = self.rank
        roots = []
        for sign in (-1, 1):
            roots.extend(
                tuple(a + sign * b for a, b in zip(unit(n, i), unit(n, j)))
                for i in range(n) for j in range(i + 1, n)
            )
        return roots

    @property
    def degrees(self):
        return sorted([2 * j for j in range(1, self.rank)] + [self.rank])

    @property
    def coxeter_number(self):
        return 2 * self.rank - 2

    @property
    def order_formula(self):
        return 2 ** (self.rank - 1) * math.factorial(self.rank)

@register_factor
class I2Factor(Factor):
    """
    Dihedral group of order 2m in the plane. The mirrors are the lines at
    angles j*pi/m; the roots are their float unit normals.
    """

    label    = "I2"
    min_rank = 3
    exact    = False

    @property
    def m(self):
        return self.rank

    @property
    def name(self):
        return "I2(%i)" % self.m

    @property
    def dim(self):
        return 2

    @property
    def roots(self):
        angles = [j * math.pi / self.m for j in range(self.m)]
        return [(-math.sin(theta), math.cos(theta)) for theta in angles]

    @property
    def degrees(self):
        return [2, self.m]

    @property
    def coxeter_number(self):
        return self.m

    @property
    def order_formula(self):
        return 2 * self.m

##########################################################################
## Group specification
##########################################################################

class GroupSpec(object):
    """
    The factors of a reflection group and the dimension of the subspace
    it fixes pointwise. Parses names such as "B2", "I2(5)" and products
    such as "A1xB2" or "R1xD3" (R<n> adds n fixed coordinates).
    """

    def __init__(self, factors, fixed_dim=0):
        self.factors   = [
            factor if isinstance(factor, Factor) else make_factor(*factor)
            for factor in factors
        ]
        self.fixed_dim = int(fixed_dim)
        if self.fixed_dim < 0:
            raise RankOutOfRange("the fixed dimension must be non-negative")

    @classmethod
    def parse(klass, text):
        factors, fixed = [], 0
        for token in text.replace('*', 'x').replace('X', 'x').split('x'):
            token = token.strip().replace(' ', '')
            if not token:
                continue
            if token.upper().startswith("I2") and len(token) > 2:
                label = "I2"
                rank  = token[2:].strip('()_')
            else:
                label = token[0].upper()
                rank  = token[1:].strip('()_')
            try:
                rank = int(rank)
            except ValueError:
                raise UnsupportedType("cannot parse the group factor '%s'" % token)
            if label == "R":
                fixed += rank
            else:
                factors.append(make_factor(label, rank))
        return klass(factors, fixed)

    @classmethod
    def from_json(klass, data):
        return klass(
            [make_factor(label, rank) for label, rank in data.get('factors', [])],
            data.get('fixed_dim', 0)
        )

    def to_json(self):
        return {
            "factors": [factor.to_json() for factor in self.factors],
            "fixed_dim": self.fixed_dim,
        }

    @property
    def name(self):
        parts = [factor.name for factor in self.factors]
        if self.fixed_dim:
            parts.insert(0, "R%i" % self.fixed_dim)
        return "x".join(parts) or "R0"

    def __str__(self):
        return self.name

##########################################################################
## Group data
##########################################################################

class Block(object):
    """
    A contiguous block of coordinates with the factor acting on it, or no
    factor for the fixed block.
    """

    def __init__(self, offset, dim, factor=None):
        self.offset = offset
        self.dim    = dim
        self.factor = factor

    @property
    def indices(self):
        return list(range(self.offset, self.offset + self.dim))

    @property
    def degrees(self):
        if self.factor is None:
            return [1] * self.dim
        return sorted(self.factor.degrees)

    def __repr__(self):
        return "<Block %s at %i>" % (self.factor.name if self.factor else "fixed", self.offset)

class GroupData(object):
    """
    An immutable reflection group ready for computation.
    """

    def __init__(self, spec):
        self.spec   = spec
        self.blocks = []

        offset = 0
        if spec.fixed_dim:
            self.blocks.append(Block(0, spec.fixed_dim))
            offset = spec.fixed_dim
        for factor in spec.factors:
            self.blocks.append(Block(offset, factor.dim, factor))
            offset += factor.dim
        self.n = offset

        # Ambient roots and the block each belongs to
        self.roots = []
        self.root_blocks = []
        for idx, block in enumerate(self.blocks):
            if block.factor is None: continue
            for root in block.factor.roots:
                vec = [0] * self.n
                vec[block.offset:block.offset + block.dim] = root
                self.roots.append(tuple(vec))
                self.root_blocks.append(idx)
        self.roots = tuple(self.roots)

    @property
    def factors(self):
        return self.spec.factors

    @property
    def fixed_dim(self):
        return self.spec.fixed_dim

    @property
    def exact(self):
        return all(factor.exact for factor in self.factors)

    @property
    def reflections(self):
        return self.roots

    @property
    def normals(self):
        """
        Float unit normals of the reflecting hyperplanes.
        """
        if not hasattr(self, '_normals'):
            self._normals = tuple(
                tuple(float(c) / math.sqrt(float(dot(root, root))) for c in root)
                for root in self.roots
            )
        return self._normals

    @property
    def degrees(self):
        degrees = []
        for block in self.blocks:
            degrees.extend(block.degrees)
        return degrees

    @property
    def h(self):
        if not self.factors:
            return 1
        return max(factor.coxeter_number for factor in self.factors)

    @property
    def d(self):
        return len(self.roots)

    def linear_form(self, index):
        """
        lambda_tau as a polynomial in the ambient coordinates.
        """
        return Poly.linear_form(self._root(index))

    def product_of_forms(self, indices=None):
        indices = range(self.d) if indices is None else indices
        result = Poly.constant(self.n, 1)
        for idx in indices:
            result = result * self.linear_form(idx)
        return result

    def _root(self, index):
        if isinstance(index, bool) or not isinstance(index, numbers.Integral):
            raise IndexOutOfRange("reflection index %r is not an integer" % (index,))
        if index < 0 or index >= self.d:
            raise IndexOutOfRange("reflection index %r out of range 0..%i" % (index, self.d - 1))
        return self.roots[index]

    def reflect(self, index, x):
        """
        s_tau(x) = x - 2 <v, x> / <v, v> v
        """
        root = self._root(index)
        check_dimension(x, self.n)
        coeff = 2 * dot(root, x) / dot(root, root)
        if coeff == 0:
            return tuple(x)
        return tuple(xi - coeff * vi for xi, vi in zip(x, root))

    def reflection_matrix(self, index):
        root = self._root(index)
        norm = dot(root, root)
        return tuple(
            tuple((1 if i == j else 0) - 2 * root[i] * root[j] / norm for j in range(self.n))
            for i in range(self.n)
        )

    def reflection_substitution(self, index):
        """
        The coordinates of s_tau(x) as linear polynomials, for computing
        f o s_tau symbolically.
        """
        matrix = self.reflection_matrix(index)
        return [Poly.linear_form(row) for row in matrix]

    def to_json(self):
        data = self.spec.to_json()
        data.update({
            "name": self.spec.name,
            "dimension": self.n,
            "degrees": self.degrees,
            "h": self.h,
            "d": self.d,
            "order": group_order(self),
            "exact": self.exact,
            "reflections": [jsonify_point(root) for root in self.roots],
        })
        return data

    def __repr__(self):
        return "<GroupData %s in R^%i>" % (self.spec.name, self.n)

##########################################################################
## Operations
##########################################################################

def build_group(spec):
    """
    Builds the group data of a specification, a parsable name or its JSON
    dictionary.
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    elif isinstance(spec, dict):
        spec = GroupSpec.from_json(spec)
    group = GroupData(spec)
    logger.debug("built %r with %i reflections", group, group.d)
    return group

def factor_elements(factor):
    """
    Closure enumeration of the matrices of an irreducible factor,
    breadth first from the identity. Float matrices are de-duplicated after
    rounding.
    """
    group = GroupData(GroupSpec([factor]))
    gens  = [group.reflection_matrix(i) for i in range(group.d)]
    n     = group.n
    digits = settings.tolerances.orbit_round

    def key(matrix):
        if factor.exact:
            return matrix
        return tuple(tuple(round(c, digits) + 0.0 for c in row) for row in matrix)

    identity = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    seen  = {key(identity): identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in gens:
            product = tuple(
                tuple(sum((gen[i][k] * current[k][j] for k in range(n)), Fraction(0)) for j in range(n))
                for i in range(n)
            )
            k = key(product)
            if k not in seen:
                seen[k] = product
                queue.append(product)
    return list(seen.values())

def group_order(g):
    """
    |W|, by closure enumeration for factors of small rank and by the order
    formula otherwise.
    """
    if not hasattr(g, '_order'):
        order = 1
        max_rank = settings.get('closure_max_rank', 4)
        for factor in g.factors:
            if factor.rank <= max_rank and factor.dim <= max_rank + 1:
                order *= len(factor_elements(factor))
            else:
                order *= factor.order_formula
        g._order = order
    return g._order

def orbit(g, x):
    """
    The orbit of x as a sorted list of points, closed under every
    reflection. Float orbits are de-duplicated after rounding.
    """
    check_dimension(x, g.n)
    cap = settings.get('orbit_cap', 1000000)
    size = 1
    for factor in g.factors:
        size *= factor.order_formula
    if size > cap:
        raise OrbitCapExceeded("|W| = %i exceeds the orbit cap %i" % (size, cap))

    exact  = g.exact and all(is_exact(c) for c in x)
    digits = settings.tolerances.orbit_round

    def key(point):
        if exact:
            return point
        return tuple(round(float(c), digits) + 0.0 for c in point)

    start = tuple(x)
    seen  = {key(start): start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for idx in range(g.d):
            image = g.reflect(idx, current)
            k = key(image)
            if k not in seen:
                seen[k] = image
                queue.append(image)

    return [seen[k] for k in sorted(seen)]

def apply_element(g, word, x):
    """
    Applies the group element s_{w0} o s_{w1} o ... to x, so the last
    reflection of the word acts first.
    """
    check_dimension(x, g.n)
    point = tuple(x)
    for index in reversed(list(word)):
        point = g.reflect(index, point)
    return point
