# coxinv.geometry
# Strata, chambers and the regularity probe of the orbit space
#
# Created:  Sun Oct 18 11:02:16 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: geometry.py [] coxinv $

"""
Strata, chambers and the regularity probe of the orbit space.

The reflecting hyperplanes stratify R^n: the stratum of x is determined by
the reflections whose hyperplanes contain x, and the isotropy group W_S
they generate is again a reflection group. Its degrees are read off the
pattern of active roots per block: coordinates joined by active roots
form classes, and a class is of type A, B or D according to which roots
join it.

The regularity probe samples a ball, maps the samples through P and
compares shortest paths in a nearest neighbor graph of the image with
Euclidean distances.
"""

##########################################################################
## Imports
##########################################################################

import math
import logging
import numpy as np
import networkx as nx

from fractions import Fraction
from scipy.spatial import cKDTree

from coxinv.params import settings
from coxinv.utils import pmap
from coxinv.distribute import ball_distribute
from coxinv.vectors import dot, norm, check_dimension, is_exact_point, jsonify, jsonify_point
from coxinv.exceptions import AmbiguousStratum, DisconnectedGraph, UnsupportedType, GeometryError

logger = logging.getLogger(__name__)

##########################################################################
## Union-find helper
##########################################################################

class Classes(object):
    """
    Union-find over the coordinates of one block.
    """

    def __init__(self, indices):
        self.parent = dict((i, i) for i in indices)

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def groups(self):
        groups = {}
        for i in sorted(self.parent):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[key] for key in sorted(groups)]

##########################################################################
## Strata
##########################################################################

class StratumInfo(object):
    """
    The active reflections at a point and the degrees of its isotropy
    group, block by block in the layout of GroupData.degrees.
    """

    def __init__(self, group, point, active, block_degrees):
        self.group  = group
        self.point  = tuple(point)
        self.active = list(active)
        self.block_degrees = block_degrees

    @property
    def isotropy_degrees(self):
        degrees = []
        for block in self.block_degrees:
            degrees.extend(block)
        return degrees

    @property
    def h_S(self):
        return max(self.isotropy_degrees + [1])

    @property
    def h(self):
        return self.group.h

    @property
    def isotropy_order(self):
        order = 1
        for k in self.isotropy_degrees:
            order *= k
        return order

    @property
    def regular(self):
        return not self.active

    def class_exponent(self, r):
        """
        The differentiability class hr / h_S of F o P near the stratum.
        """
        return Fraction(self.h * r, self.h_S)

    def aligned_degrees(self, P):
        """
        Isotropy degrees paired with the invariants of P: within each
        block, the i-th smallest isotropy degree goes with the invariant of
        i-th smallest degree.
        """
        aligned = [None] * len(P.polys)
        for (block, rows), local in zip(P.blocks, self.block_degrees):
            rows = sorted(rows, key=lambda i: (P.polys[i].degree, i))
            for i, k in zip(rows, sorted(local)):
                aligned[i] = k
        return aligned

    def to_json(self):
        return {
            "point": jsonify_point(self.point),
            "active": self.active,
            "isotropy_degrees": self.isotropy_degrees,
            "h_S": self.h_S,
            "h": self.h,
            "isotropy_order": self.isotropy_order,
            "class_exponent": jsonify(self.class_exponent(1)),
        }

def _active_roots(g, x, tol):
    exact = g.exact and is_exact_point(x) and tol == 0
    active = []
    for idx, root in enumerate(g.roots):
        if exact:
            if dot(root, x) == 0:
                active.append(idx)
        else:
            value = sum(float(n) * float(c) for n, c in zip(g.normals[idx], x))
            if abs(value) <= tol:
                active.append(idx)
    return active, exact

def _check_closure(g, active):
    """
    Every active reflection must map every active root to plus or minus an
    active root, otherwise the tolerance has merged distinct strata.
    """
    normals = [np.array(g.normals[idx]) for idx in active]
    for a in normals:
        for b in normals:
            image = b - 2 * np.dot(a, b) * a
            if not any(min(np.abs(image - c).max(), np.abs(image + c).max()) < 1e-6 for c in normals):
                raise AmbiguousStratum("active reflections do not close up; shrink the tolerance")

def _classify_block(block, roots):
    """
    Isotropy degrees of one block from its active roots (in ambient
    coordinates).
    """
    factor = block.factor
    if factor is None:
        return [1] * block.dim

    if factor.label == "I2":
        count = len(roots)
        if count == 0:
            return [1, 1]
        if count == 1:
            return [1, 2]
        return [2, factor.m]

    if factor.label == "A" and factor.rank == 1:
        return [2] if roots else [1]

    classes = Classes(block.indices)
    zeros, signs = set(), {}
    for root in roots:
        support = [i for i in block.indices if root[i] != 0]
        if len(support) == 1:
            zeros.add(support[0])
        else:
            i, j = support
            classes.union(i, j)
            signs.setdefault((i, j), set()).add(root[i] * root[j] > 0)

    degrees = []
    for members in classes.groups():
        s = len(members)
        if factor.label == "B" and any(i in zeros for i in members):
            degrees.extend(2 * j for j in range(1, s + 1))
        elif factor.label == "D" and s >= 2 and any(
                len(signs.get((i, j), ())) == 2 for i in members for j in members if i < j):
            degrees.extend(sorted([2 * j for j in range(1, s)] + [s]))
        else:
            degrees.extend(range(1, s + 1))
    return sorted(degrees)

def stratify(g, x, tol=None):
    """
    The stratum of x: reflections with |lambda_tau(x)| <= tol, and the
    degrees of the isotropy group they generate. On exact data the default
    tolerance is zero; on float data it is stratify_rel_tol * (1 + |x|),
    measured with unit normals.
    """
    check_dimension(x, g.n)
    if tol is None:
        if g.exact and is_exact_point(x):
            tol = 0
        else:
            tol = settings.tolerances.stratify_rel_tol * (1 + norm(x))
    if tol < 0:
        raise GeometryError("the stratification tolerance must be non-negative")

    active, exact = _active_roots(g, x, tol)
    if not exact:
        _check_closure(g, active)

    block_degrees = []
    for idx, block in enumerate(g.blocks):
        roots = [g.roots[a] for a in active if g.root_blocks[a] == idx]
        block_degrees.append(_classify_block(block, roots))
    return StratumInfo(g, x, active, block_degrees)

##########################################################################
## Chambers and fundamental domain
##########################################################################

def _block_rep(block, coords):
    factor = block.factor
    if factor is None:
        return list(coords)

    label = factor.label
    if label == "A":
        if factor.rank == 1:
            return [abs(coords[0])]
        return sorted(coords, reverse=True)

    if label == "B":
        return sorted((abs(c) for c in coords), reverse=True)

    if label == "D":
        negatives = sum(1 for c in coords if c < 0)
        rep = sorted((abs(c) for c in coords), reverse=True)
        if negatives % 2 == 1 and all(c != 0 for c in coords):
            rep[-1] = -rep[-1]
        return rep

    if label == "I2":
        x, y = float(coords[0]), float(coords[1])
        radius = math.hypot(x, y)
        wedge  = math.pi / factor.m
        angle  = math.atan2(y, x) % (2 * wedge)
        if angle > wedge:
            angle = 2 * wedge - angle
        return [radius * math.cos(angle), radius * math.sin(angle)]

    raise UnsupportedType("no fundamental domain known for type %s" % label)

def fundamental_domain_rep(g, x):
    """
    The representative of the orbit of x in the closed canonical chamber.
    """
    check_dimension(x, g.n)
    rep = []
    for block in g.blocks:
        rep.extend(_block_rep(block, [x[i] for i in block.indices]))
    return tuple(rep)

def chamber_walls(g):
    """
    Simple roots oriented so that the canonical chamber is {lambda >= 0}.
    """
    walls = []
    for block in g.blocks:
        factor = block.factor
        if factor is None: continue
        local = []
        dim = block.dim

        def e(i, value=1):
            vec = [0] * dim
            vec[i] = value
            return vec

        if factor.label == "A" and factor.rank == 1:
            local.append(e(0))
        elif factor.label in ("A", "B", "D"):
            for i in range(dim - 1):
                local.append([a - b for a, b in zip(e(i), e(i + 1))])
            if factor.label == "B":
                local.append(e(dim - 1))
            if factor.label == "D":
                local.append([a + b for a, b in zip(e(dim - 2), e(dim - 1))])
        elif factor.label == "I2":
            wedge = math.pi / factor.m
            local.append([0.0, 1.0])
            local.append([math.sin(wedge), -math.cos(wedge)])
        else:
            raise UnsupportedType("no chamber known for type %s" % factor.label)

        for root in local:
            vec = [0] * g.n
            vec[block.offset:block.offset + dim] = root
            walls.append(tuple(vec))
    return walls

def in_canonical_chamber(g, x, tol=0):
    return all(dot(wall, x) >= -tol for wall in chamber_walls(g))

##########################################################################
## Regularity probe
##########################################################################

def _covered(tree, start, end, radius):
    """
    True if every point of the segment is within radius of a sample.
    """
    length = np.linalg.norm(end - start)
    steps  = max(2, int(math.ceil(length / (0.5 * radius))) + 1)
    ts     = np.linspace(0.0, 1.0, steps)[:, None]
    dists, _ = tree.query(start + ts * (end - start), k=1)
    return bool(np.all(dists <= radius))

def _probe_ratio(image, k_neighbors, rng, sources, targets, candidates):
    """
    Largest geodesic / Euclidean ratio of sampled pairs of the image.
    """
    num  = image.shape[0]
    k    = min(k_neighbors, num - 1)
    tree = cKDTree(image)
    dists, nbrs = tree.query(image, k=k + 1)

    graph = nx.Graph()
    graph.add_nodes_from(range(num))
    for i in range(num):
        for d, j in zip(dists[i, 1:], nbrs[i, 1:]):
            if i != j:
                graph.add_edge(i, int(j), weight=float(d))
    if not nx.is_connected(graph):
        raise DisconnectedGraph("the %i-nearest neighbor graph of %i samples is disconnected" % (k, num))

    radius  = float(np.median(dists[:, -1]))
    sources = rng.choice(num, size=min(sources, num), replace=False)
    picks   = [rng.choice(num, size=min(targets, num), replace=False) for _ in sources]

    def sweep(item):
        source, chosen = item
        lengths = nx.single_source_dijkstra_path_length(graph, int(source), weight='weight')
        rows = []
        for target in chosen:
            target = int(target)
            euclid = float(np.linalg.norm(image[target] - image[source]))
            if target == source or euclid < 2 * radius: continue
            rows.append((lengths[target] / euclid, int(source), target, euclid))
        return rows

    pairs = []
    for rows in pmap(sweep, list(zip(sources, picks))):
        pairs.extend(rows)
    pairs.sort(key=lambda row: (-row[0], row[1], row[2]))

    # straighten pairs in decreasing raw order until no raw ratio can
    # exceed the best straightened one
    best, worst = 1.0, None
    for start in range(0, len(pairs), max(1, candidates)):
        batch = pairs[start:start + max(1, candidates)]
        if batch[0][0] <= best:
            break
        for ratio, s, t, euclid in batch:
            if ratio <= best: continue
            if _covered(tree, image[s], image[t], radius):
                ratio = 1.0
            if ratio > best:
                best, worst = ratio, (s, t, euclid)
    return best, worst, len(pairs), radius

def regularity_probe(P, radius=1.0, n_samples=2000, k_neighbors=None, seed=0):
    """
    Empirical Whitney 1-regularity of P(ball): the largest ratio of graph
    geodesic to Euclidean distance over sampled pairs of image points, and
    its trend over nested subsets of the samples.
    """
    if P.n > 3:
        raise GeometryError("regularity probes support dimension at most 3")
    params = settings.probe
    k_neighbors = k_neighbors or params.k_neighbors

    samples = ball_distribute(n_samples, float(radius), P.n, seed)
    image = np.column_stack([p.evaluate_array(samples) for p in P.polys])

    curve = []
    report = None
    for fraction in params.refinement:
        count = max(k_neighbors + 2, int(round(fraction * n_samples)))
        count = min(count, n_samples)
        rng = np.random.default_rng(seed)
        ratio, worst, pairs, cover = _probe_ratio(
            image[:count], k_neighbors, rng, params.sources, params.targets, params.candidates
        )
        curve.append({"samples": count, "max_ratio": ratio})
        report = (ratio, worst, pairs, cover, count)

    ratio, worst, pairs, cover, count = report
    logger.info("regularity probe of %r: max ratio %.4f over %i pairs", P, ratio, pairs)
    data = {
        "max_ratio": ratio,
        "pairs": pairs,
        "samples": count,
        "seed": seed,
        "radius": float(radius),
        "k_neighbors": k_neighbors,
        "coverage_radius": cover,
        "refinement_curve": curve,
        "ratio_vs_refinement": [entry["max_ratio"] for entry in curve],
        "worst": None,
    }
    if worst is not None:
        s, t, euclid = worst
        data["worst"] = {
            "source": [float(v) for v in image[s]],
            "target": [float(v) for v in image[t]],
            "euclidean": euclid,
        }
    return data
