"""
Named example graphs and simplicial complexes.
"""

__author__ = 'reachhom'

from reachhom.graphs.digraph import DiGraph
from reachhom.graphs.simplicial import SimplicialComplex

HEXAGON_VERTICES = ["a", "b", "c", "d", "e", "f"]

RP2_FACETS = [("1", "2", "3"), ("1", "3", "4"), ("1", "4", "5"), ("1", "5", "6"), ("1", "6", "2"),
              ("2", "3", "5"), ("3", "4", "6"), ("4", "5", "2"), ("5", "6", "3"), ("6", "2", "4")]


def point(label="v"):
    return DiGraph([label])

def directed_path(n, prefix="p"):
    vertices = ["%s%d" % (prefix, i) for i in range(n)]
    return DiGraph(vertices, zip(vertices, vertices[1:]))

def directed_cycle(n, prefix="c"):
    vertices = ["%s%d" % (prefix, i) for i in range(n)]
    return DiGraph(vertices, [(vertices[i], vertices[(i + 1) % n]) for i in range(n)] if n > 1 else [])

def hexagon_a():
    """Alternating orientations: the face graph of the boundary of a triangle."""
    return DiGraph(HEXAGON_VERTICES, [("a", "b"), ("c", "b"), ("c", "d"), ("e", "d"), ("e", "f"), ("a", "f")])

def hexagon_b():
    """Every vertex reaches a."""
    return DiGraph(HEXAGON_VERTICES, [("b", "a"), ("c", "b"), ("d", "c"), ("d", "e"), ("e", "f"), ("f", "a")])

def hexagon_c():
    """A directed 6-cycle."""
    vertices = HEXAGON_VERTICES
    return DiGraph(vertices, [(vertices[i], vertices[(i + 1) % 6]) for i in range(6)])

HEXAGON_B_SINK = "a"

def hexagons():
    return {"A": hexagon_a(), "B": hexagon_b(), "C": hexagon_c()}

def triangles():
    vertices = ["a", "c", "e"]
    return {"cycle":       DiGraph(vertices, [("a", "e"), ("e", "c"), ("c", "a")]),
            "half_double": DiGraph(vertices, [("e", "a"), ("a", "e"), ("c", "e"), ("e", "c")]),
            "complete":    DiGraph(vertices, [(u, v) for u in vertices for v in vertices if u != v])}

def simplex(n):
    """The full n-simplex on vertices 0..n."""
    return SimplicialComplex([[str(i) for i in range(n + 1)]])

def simplex_boundary(n):
    """Boundary of the n-simplex, an (n-1)-sphere."""
    vertices = [str(i) for i in range(n + 1)]
    return SimplicialComplex([[v for v in vertices if v != omitted] for omitted in vertices], vertices)

def rp2():
    """Six-vertex triangulation of the real projective plane."""
    return SimplicialComplex(RP2_FACETS)

def sphere_hemispheres():
    """
    The boundary of the 3-simplex cut into two disks along a circle: the
    closed star of vertex 3 and the triangle 012, meeting in the boundary of
    012, which is a full subcomplex of the star.

    :return: (star, circle, triangle)
    """
    star = SimplicialComplex([("0", "1", "3"), ("0", "2", "3"), ("1", "2", "3")])
    circle = SimplicialComplex([("0", "1"), ("0", "2"), ("1", "2")])
    triangle = SimplicialComplex([("0", "1", "2")])
    return star, circle, triangle
