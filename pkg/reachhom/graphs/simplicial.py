"""
Finite abstract simplicial complexes, their face graphs and Hasse diagrams.
"""

__author__ = 'reachhom'

import logging
import itertools

from reachhom.util import congruence
from reachhom.graphs.digraph import DiGraph

LOGGER = logging.getLogger(__name__)

SIMPLEX_SEPARATOR = ","


class SimplicialComplex:
    """
    Simplices are tuples of vertices sorted by vertex order; ``simplices``
    lists them by dimension, then lexicographically.
    """
    def __init__(self, facets, vertices=None):
        facets = [list(dict.fromkeys(facet)) for facet in facets]
        if vertices is None:
            vertices = [v for facet in facets for v in facet]
        self.vertices = tuple(dict.fromkeys(vertices))
        self._index = {v: i for i, v in enumerate(self.vertices)}

        congruence.checkSubset([v for facet in facets for v in facet], self._index, "facet vertices")

        ordered = {tuple(sorted(facet, key=self._index.get)) for facet in facets if facet}
        closure = set()
        for facet in ordered:
            for size in range(1, len(facet) + 1):
                closure.update(itertools.combinations(facet, size))
        closure.update((v,) for v in self.vertices)

        self.simplices = sorted(closure, key=self._sort_key)
        self.facets = [s for s in self.simplices if not any(len(t) > len(s) and set(s) < set(t) for t in ordered)]
        self._simplex_set = set(self.simplices)

    def _sort_key(self, simplex):
        return (len(simplex), [self._index[v] for v in simplex])

    def __len__(self):
        return len(self.simplices)

    def __contains__(self, simplex):
        if not all(v in self._index for v in simplex): return False
        return tuple(sorted(simplex, key=self._index.get)) in self._simplex_set

    def __repr__(self):
        return "SimplicialComplex(%d vertices, %d facets, dimension %d)" % (len(self.vertices), len(self.facets), self.dimension)

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def simplices_of_dimension(self, k):
        return [s for s in self.simplices if len(s) == k + 1]

    def label(self, simplex):
        return SIMPLEX_SEPARATOR.join(str(v) for v in simplex)


def parse_facet_list(text):
    facets = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"): facets.append(stripped.split())
    if not facets: raise congruence.InputError("facet list is empty")
    return SimplicialComplex(facets)

def face_graph(S):
    """Edge s -> t whenever s is a proper face of t."""
    labels = [S.label(s) for s in S.simplices]
    edges = [(S.label(s), S.label(t)) for s in S.simplices for t in S.simplices if len(s) < len(t) and set(s) < set(t)]
    return DiGraph(labels, edges)

def hasse_diagram(S):
    """Edge s -> t whenever s is a codimension one face of t."""
    labels = [S.label(s) for s in S.simplices]
    edges = [(S.label(s), S.label(t)) for s in S.simplices for t in S.simplices if len(t) == len(s) + 1 and set(s) < set(t)]
    return DiGraph(labels, edges)

def subcomplex(S, vertices):
    """Full subcomplex spanned by a vertex subset."""
    vertices = set(congruence.checkSubset(list(vertices), S._index, "vertex subset"))
    return SimplicialComplex([s for s in S.simplices if set(s) <= vertices], [v for v in S.vertices if v in vertices])

def is_full_subcomplex(P, Q):
    if not all(s in Q for s in P.simplices): return False
    vertices = set(P.vertices)
    return all(s in P for s in Q.simplices if set(s) <= vertices)
