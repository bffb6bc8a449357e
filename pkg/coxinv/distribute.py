# coxinv.distribute
# distribute random points in a geometric space
#
# Created:  Sat Oct 17 10:18:55 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: distribute.py [] coxinv $

"""
This module helps distribute points in a geometric space. There are three
supported distributions currently:

1. Generate seeded uniform random points in a closed ball of any dimension
   with a given radius and center point.
2. Generate points along a geometric ladder of distances from a base point,
   used to sample remainders at many distance scales.
3. Generate seeded random rational points for exact property checks.

Every generator takes an explicit seed or random state so that reruns are
byte-identical.
"""

##########################################################################
## Imports
##########################################################################

import random
import numpy as np

from fractions import Fraction

##########################################################################
## Ball helper functions
##########################################################################

def ball_distribute(num=1000, r=1.0, dim=2, seed=0, center=None):
    """
    Distribute num points uniformly in the closed ball of radius r. Gaussian
    directions are scaled by r * U^(1/dim), which is uniform in volume.
    Returns a (num, dim) float array.
    """
    rng   = np.random.default_rng(seed)
    dirs  = rng.standard_normal((num, dim))
    norms = np.linalg.norm(dirs, axis=1)
    norms[norms == 0] = 1.0
    radii = r * rng.random(num) ** (1.0 / dim)
    pts   = dirs / norms[:, None] * radii[:, None]
    if center is not None:
        pts = pts + np.asarray(center, dtype=float)
    return pts

def sphere_directions(dim=2, num=8, seed=0):
    """
    Seeded unit directions, used to probe sups on spheres |x| = rho.
    """
    rng  = np.random.default_rng(seed)
    dirs = rng.standard_normal((num, dim))
    return dirs / np.linalg.norm(dirs, axis=1)[:, None]

##########################################################################
## Scale ladder helper functions
##########################################################################

def geometric_ladder(base=0, num=20, ratio=Fraction(1, 2), start=Fraction(1)):
    """
    Distribute num points base + start * ratio^j, j = 0 .. num-1, along a
    line. With the default ratio the ladder covers num * log10(2) distance
    decades. Exact when base, start and ratio are exact.
    """
    return [base + start * ratio ** j for j in range(num)]

def ladder_points(direction, num=20, ratio=Fraction(1, 2), base=None):
    """
    The geometric ladder along a direction vector of any dimension, plus
    the base point itself.
    """
    dim  = len(direction)
    base = tuple(base) if base is not None else tuple(Fraction(0) for _ in range(dim))
    pts  = [base]
    for t in geometric_ladder(0, num, ratio):
        pts.append(tuple(b + t * d for b, d in zip(base, direction)))
    return pts

##########################################################################
## Random rational helper functions
##########################################################################

def rational_points(num=10, dim=2, seed=0, low=-5, high=5, denominator=4):
    """
    Distribute num random rational points with coordinates k/denominator,
    low <= k/denominator <= high.
    """
    rnd = random.Random(seed)
    lo, hi = low * denominator, high * denominator
    return [
        tuple(Fraction(rnd.randint(lo, hi), denominator) for _ in range(dim))
        for _ in range(num)
    ]

def rational_scalar(rnd, low=-5, high=5, denominator=4, nonzero=False):
    """
    One random rational from an existing random.Random state.
    """
    while True:
        value = Fraction(rnd.randint(low * denominator, high * denominator), denominator)
        if value != 0 or not nonzero:
            return value
