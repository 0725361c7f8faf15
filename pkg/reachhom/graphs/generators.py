"""
Random instances for property checks. Every function takes a
``random.Random`` so that runs are reproducible from a seed.
"""

__author__ = 'reachhom'

import logging

from reachhom.graphs.digraph import DiGraph, DiGraphMap, constant_map, validate_map
from reachhom.graphs.preorder import reachability_preorder

LOGGER = logging.getLogger(__name__)

MAXIMUM_ATTEMPTS = 200


def random_digraph(rng, n, density=0.35, prefix="v", loops=False):
    vertices = ["%s%d" % (prefix, i) for i in range(n)]
    edges = [(u, v) for u in vertices for v in vertices if (u != v or loops) and rng.random() < density]
    return DiGraph(vertices, edges)

def random_thickened_dag(rng, n, max_class=3, density=0.35, prefix="v"):
    """
    A random DAG whose nodes are blown up into strongly connected blocks of at
    most max_class vertices; small blocks keep the number of reachability
    chains in each degree small.
    """
    vertices = ["%s%d" % (prefix, i) for i in range(n)]
    blocks, start = [], 0
    while start < n:
        size = rng.randint(1, max_class)
        blocks.append(vertices[start:start + size])
        start += size

    edges = set()
    for block in blocks:
        if len(block) > 1: edges.update(zip(block, block[1:] + block[:1]))
        for u in block:
            for v in block:
                if u != v and rng.random() < density: edges.add((u, v))
    for i, lower in enumerate(blocks):
        for upper in blocks[i + 1:]:
            if rng.random() < density: edges.add((rng.choice(lower), rng.choice(upper)))
    return DiGraph(vertices, edges)

def random_preorder(rng, n, density=0.35, prefix="x"):
    return reachability_preorder(random_digraph(rng, n, density, prefix))

def random_map(rng, source, target, attempts=MAXIMUM_ATTEMPTS):
    """A random digraph map, falling back to a constant map."""
    for _ in range(attempts):
        candidate = DiGraphMap(source, target, {v: rng.choice(target.vertices) for v in source.vertices})
        if validate_map(candidate): return candidate
    return constant_map(source, target, rng.choice(target.vertices))

def random_long_homotopic_pair(rng, source, target, attempts=MAXIMUM_ATTEMPTS):
    """
    (f, g) with f(v) reaching g(v) for every vertex v; g falls back to f.
    """
    f = random_map(rng, source, target, attempts)
    preorder = reachability_preorder(target)
    above = {v: [w for w in target.vertices if preorder.le(f(v), w)] for v in source.vertices}

    for _ in range(attempts):
        g = DiGraphMap(source, target, {v: rng.choice(above[v]) for v in source.vertices})
        if validate_map(g): return f, g
    return f, f

def random_subgraph_instance(rng, n, density=0.35):
    """A random graph and a random vertex subset."""
    X = random_digraph(rng, n, density)
    A = [v for v in X.vertices if rng.random() < 0.5] or [X.vertices[0]]
    return X, A
