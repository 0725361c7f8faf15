"""
Random long cofibrations and pushout data for property checks. Generic
random graphs and maps live in ``reachhom.graphs.generators``.
"""

__author__ = 'reachhom'

import logging

from reachhom.graphs.digraph import DiGraph
from reachhom.graphs.generators import MAXIMUM_ATTEMPTS, random_digraph, random_map
from reachhom.homology.cofib import is_long_cofibration

LOGGER = logging.getLogger(__name__)


def _attach(rng, A, extra, density, prefix):
    """New vertices hanging off A: edges out of A and among the new vertices only."""
    new = ["%s%d" % (prefix, i) for i in range(extra)]
    edges = set(A.edges)
    for x in new:
        for a in A.vertices:
            if rng.random() < density: edges.add((a, x))
        for y in new:
            if x != y and rng.random() < density: edges.add((x, y))
    return DiGraph(list(A.vertices) + new, edges)

def pendant_fibers(rng, A, extra, prefix="x"):
    """
    Each new vertex joins the fiber of one anchor in A; fibers only see
    their anchor, so the anchor is a projection for the whole fiber.
    """
    anchors = {}
    edges = set(A.edges)
    new = ["%s%d" % (prefix, i) for i in range(extra)]
    for x in new:
        anchor = rng.choice(A.vertices)
        fiber = anchors.setdefault(anchor, [])
        edges.add((anchor, x))
        for y in fiber:
            if rng.random() < 0.5: edges.add((y, x))
            if rng.random() < 0.3: edges.add((x, y))
        fiber.append(x)
    return DiGraph(list(A.vertices) + new, edges)

def random_long_cofibration(rng, size_A, extra, density=0.35, attempts=MAXIMUM_ATTEMPTS):
    """
    :return: (X, A vertex list); A is never empty
    """
    A = random_digraph(rng, max(size_A, 1), density, prefix="a")
    for _ in range(attempts):
        X = _attach(rng, A, extra, density, prefix="x")
        if is_long_cofibration(X, A.vertices) is not None: return X, list(A.vertices)

    LOGGER.debug("rejection sampling failed, using pendant fibers")
    return pendant_fibers(rng, A, extra), list(A.vertices)

def random_pushout_data(rng, size_A=2, extra=2, size_Y=3, density=0.35):
    """(X, A, Y, f) with A -> X a long cofibration and f: A -> Y a digraph map."""
    X, A = random_long_cofibration(rng, size_A, extra, density)
    Y = random_digraph(rng, size_Y, density, prefix="y")
    f = random_map(rng, X.induced_subgraph(A), Y)
    return X, A, Y, f
