# coxinv.vectors
# Point helpers for exact and float coordinates
#
# Created:  Sat Oct 17 10:02:37 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: vectors.py [] coxinv $

"""
Point helpers for exact and float coordinates.

Points are plain tuples. Coordinates are Fractions on the rational path and
floats on the float path; Python's numeric tower mixes the two into floats,
which is exactly the exactness boundary we want.
"""

##########################################################################
## Imports
##########################################################################

import math
import numbers
import numpy as np

from fractions import Fraction
from coxinv.exceptions import DimensionMismatch

##########################################################################
## Scalar helpers
##########################################################################

def scalar(value, exact=True):
    """
    Coerces a scalar: ints, Fractions and strings such as "3/4" or "0.5"
    become Fractions when exact, everything else becomes a float.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value if exact else float(value)
    if isinstance(value, numbers.Integral):
        return Fraction(int(value)) if exact else float(value)
    if isinstance(value, str):
        try:
            parsed = Fraction(value.strip())
        except ValueError:
            return float(value)
        return parsed if exact else float(parsed)
    if isinstance(value, numbers.Real):
        return float(value)
    raise TypeError("cannot interpret %r as a real scalar" % (value,))

def is_exact(value):
    return isinstance(value, (Fraction, numbers.Integral)) and not isinstance(value, bool)

def is_zero(value, tol=0.0):
    """
    Exact zero test for Fractions, |value| <= tol for floats.
    """
    if is_exact(value):
        return value == 0
    return abs(value) <= tol

def close(a, b, tol=0.0):
    """
    Exact equality when both are exact, else |a - b| <= tol.
    """
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= tol

def jsonify(value):
    """
    JSON form of a scalar: integral Fractions become ints, other Fractions
    become "num/den" strings, floats stay floats.
    """
    if is_exact(value):
        value = Fraction(value)
        if value.denominator == 1:
            return int(value.numerator)
        return "%i/%i" % (value.numerator, value.denominator)
    return float(value)

def fraction_string(value):
    """
    Serialized coefficient: exact values are always "num/den", floats stay
    floats.
    """
    if is_exact(value):
        value = Fraction(value)
        return "%i/%i" % (value.numerator, value.denominator)
    return float(value)

##########################################################################
## Point helpers
##########################################################################

def point(coords, exact=True):
    """
    Constructs a point tuple from any sequence of scalars.
    """
    return tuple(scalar(c, exact) for c in coords)

def parse_point(text, exact=True):
    """
    Parses a comma separated command line point such as "1,2" or "1/2,-3".
    """
    parts = [part for part in text.replace(' ', '').split(',') if part]
    return tuple(scalar(part, exact) for part in parts)

def check_dimension(x, n):
    if len(x) != n:
        raise DimensionMismatch("expected a point of dimension %i, got %i" % (n, len(x)))

def is_exact_point(x):
    return all(is_exact(c) for c in x)

def add(x, y):
    return tuple(a + b for a, b in zip(x, y))

def subtract(x, y):
    return tuple(a - b for a, b in zip(x, y))

def scale(t, x):
    return tuple(t * a for a in x)

def dot(x, y):
    return sum((a * b for a, b in zip(x, y)), Fraction(0))

def norm2(x):
    """
    Squared Euclidean length, exact on rational points.
    """
    return dot(x, x)

def norm(x):
    return math.sqrt(float(norm2(x)))

def distance(x, y):
    return norm(subtract(x, y))

def points_close(x, y, tol=0.0):
    return len(x) == len(y) and all(close(a, b, tol) for a, b in zip(x, y))

def as_array(points):
    """
    Float numpy view of a list of points, one row per point.
    """
    return np.array([[float(c) for c in x] for x in points], dtype=float)

def jsonify_point(x):
    return [jsonify(c) for c in x]
