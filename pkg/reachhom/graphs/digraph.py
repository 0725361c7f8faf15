"""
Directed graphs, maps of directed graphs, products and pushouts.

A map of digraphs sends every edge either to an edge or to a single vertex.
Vertex order is insertion order everywhere, which makes every basis built
downstream reproducible.
"""

__author__ = 'reachhom'

import logging
import itertools
from functools import total_ordering

import numpy
import networkx
from networkx.utils import UnionFind

from reachhom.util import congruence

LOGGER = logging.getLogger(__name__)

PRODUCT_SEPARATOR = "|"
X_TAG = "X:"
Y_TAG = "Y:"


@total_ordering
class _Infinity:
    """Distance between vertices with no directed path between them."""
    def __add__(self, other):
        return self

    __radd__ = __add__

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "inf"

INFINITY = _Infinity()


class DiGraph:
    def __init__(self, vertices=(), edges=()):
        self.vertices = tuple(dict.fromkeys(vertices))
        self._index = {v: i for i, v in enumerate(self.vertices)}

        edges = set(edges)
        for u, v in edges:
            if u not in self._index or v not in self._index:
                raise congruence.DomainError("edge (%s, %s) has an undeclared endpoint" % (u, v))

        self.edges = frozenset(edges)
        self._successors = {v: [] for v in self.vertices}
        for u, v in self.edge_list(): self._successors[u].append(v)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vertex):
        return vertex in self._index

    def __eq__(self, other):
        return isinstance(other, DiGraph) and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return "DiGraph(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))

    def index(self, vertex):
        return self._index[vertex]

    def has_edge(self, u, v):
        return (u, v) in self.edges

    def successors(self, vertex):
        return self._successors[vertex]

    def edge_list(self):
        return sorted(self.edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def loops(self):
        return [(u, v) for u, v in self.edge_list() if u == v]

    def without_loops(self):
        loops = self.loops()
        if not loops: return self

        LOGGER.info("ignoring %d loop(s): reachability does not see them", len(loops))
        return DiGraph(self.vertices, [e for e in self.edges if e[0] != e[1]])

    def induced_subgraph(self, subset):
        subset = set(congruence.checkSubset(list(subset), self._index, "vertex subset"))
        vertices = [v for v in self.vertices if v in subset]
        return DiGraph(vertices, [(u, v) for u, v in self.edges if u in subset and v in subset])

    def to_networkx(self, loops=False):
        graph = networkx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((u, v) for u, v in self.edge_list() if loops or u != v)
        return graph

    def to_edge_list_text(self):
        lines = list(self.vertices)
        lines.extend("%s %s" % (u, v) for u, v in self.edge_list())
        return "\n".join(lines) + ("\n" if lines else "")


class DiGraphMap:
    def __init__(self, source, target, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)

    def __call__(self, vertex):
        return self.vertex_map[vertex]

    def __repr__(self):
        return "DiGraphMap(%s)" % ", ".join("%s->%s" % (v, self.vertex_map.get(v)) for v in self.source.vertices)

    def is_total(self):
        return all(v in self.vertex_map and self.vertex_map[v] in self.target for v in self.source.vertices)

    def validate(self):
        return validate_map(self)

    def compose(self, first):
        """self after first."""
        if first.target != self.source:
            raise congruence.ShapeError("maps are not composable")
        return DiGraphMap(first.source, self.target, {v: self(first(v)) for v in first.source.vertices})

    def is_injective(self):
        images = [self(v) for v in self.source.vertices]
        return len(set(images)) == len(images)

    def is_induced_inclusion(self):
        if not (self.is_total() and self.is_injective()): return False

        image = {self(v): v for v in self.source.vertices}
        for u, v in self.target.edges:
            if u in image and v in image and not self.source.has_edge(image[u], image[v]):
                return False
        return all(self.target.has_edge(self(u), self(v)) for u, v in self.source.edges)

    def is_isomorphism(self):
        return self.is_induced_inclusion() and len(self.source) == len(self.target)


def identity_map(graph):
    return DiGraphMap(graph, graph, {v: v for v in graph.vertices})

def constant_map(source, target, vertex):
    return DiGraphMap(source, target, {v: vertex for v in source.vertices})

def inclusion_map(subgraph, graph):
    return DiGraphMap(subgraph, graph, {v: v for v in subgraph.vertices})

def all_vertex_maps(source, target):
    for images in itertools.product(target.vertices, repeat=len(source.vertices)):
        yield DiGraphMap(source, target, zip(source.vertices, images))


#########################################################################################
#
# PARSING
#
#########################################################################################

def _content_lines(text):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"): yield number, stripped.split()

def parse_edge_list(text):
    vertices, edges = [], []
    for number, tokens in _content_lines(text):
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            vertices.extend(tokens)
            edges.append(tuple(tokens))
        else:
            raise congruence.InputError("expected 'u v' or 'v', got %d tokens" % len(tokens), line=number)

    return DiGraph(vertices, edges)

def parse_vertex_list(text, graph=None):
    vertices = [token for _, tokens in _content_lines(text) for token in tokens]
    if graph is not None: congruence.checkSubset(vertices, graph, "vertex list")
    return list(dict.fromkeys(vertices))

def parse_map(text, source, target):
    """
    One assignment per line, written "a y", "a -> y" or "a ↦ y".
    """
    vertex_map = {}
    for number, tokens in _content_lines(text):
        tokens = [t for t in tokens if t not in ("->", "↦", "|->")]
        if len(tokens) != 2:
            raise congruence.InputError("expected 'a y', got %s" % " ".join(tokens), line=number)
        if tokens[0] not in source or tokens[1] not in target:
            raise congruence.InputError("unknown vertex in '%s %s'" % tuple(tokens), line=number)
        vertex_map[tokens[0]] = tokens[1]

    graph_map = DiGraphMap(source, target, vertex_map)
    if not graph_map.is_total(): raise congruence.DomainError("map is not defined on every source vertex")
    return graph_map


#########################################################################################
#
# MAPS, PRODUCTS, METRIC
#
#########################################################################################

def validate_map(graph_map):
    if not graph_map.is_total():
        raise congruence.DomainError("vertex map is not total")

    target = graph_map.target
    for u, v in graph_map.source.edges:
        fu, fv = graph_map(u), graph_map(v)
        if fu != fv and not target.has_edge(fu, fv): return False
    return True

def product_vertex(g, h):
    return "%s%s%s" % (g, PRODUCT_SEPARATOR, h)

def product_vertices(left, right):
    """Labels of all pairs, left factor outermost; two pairs may not share a label."""
    vertices = {}
    for g in left:
        for h in right:
            label = product_vertex(g, h)
            if label in vertices:
                raise congruence.DomainError("product vertex %r stands for both %r and %r" %
                                             (label, vertices[label], (g, h)))
            vertices[label] = (g, h)
    return list(vertices)

def _product(G, H, diagonal):
    vertices = product_vertices(G.vertices, H.vertices)
    edges = set()
    for g in G.vertices:
        for h1, h2 in H.edges: edges.add((product_vertex(g, h1), product_vertex(g, h2)))
    for h in H.vertices:
        for g1, g2 in G.edges: edges.add((product_vertex(g1, h), product_vertex(g2, h)))
    if diagonal:
        for g1, g2 in G.edges:
            for h1, h2 in H.edges: edges.add((product_vertex(g1, h1), product_vertex(g2, h2)))

    return DiGraph(vertices, edges)

def box_product(G, H):
    return _product(G, H, diagonal=False)

def strong_product(G, H):
    return _product(G, H, diagonal=True)

def product_map(f, g, product=box_product):
    """f x g between products of the sources and of the targets."""
    source = product(f.source, g.source)
    target = product(f.target, g.target)
    vertex_map = {product_vertex(u, v): product_vertex(f(u), g(v))
                  for u in f.source.vertices for v in g.source.vertices}
    return DiGraphMap(source, target, vertex_map)

def shortest_path_metric(G):
    n = len(G)
    metric = numpy.full((n, n), INFINITY, dtype=object)
    for source, lengths in networkx.all_pairs_shortest_path_length(G.to_networkx()):
        row = G.index(source)
        for target, length in lengths.items(): metric[row, G.index(target)] = int(length)
    return metric


#########################################################################################
#
# PUSHOUTS
#
#########################################################################################

def pushout(i, f):
    """
    Glue X and Y along A, where i: A -> X is an induced-subgraph inclusion.

    :return: (P, g, j) with g: X -> P and j: Y -> P
    """
    if i.source != f.source:
        raise congruence.ShapeError("i and f must share their source")
    if not validate_map(f):
        raise congruence.DomainError("f is not a map of digraphs")
    if not i.is_induced_inclusion():
        raise congruence.ShapeError("pushouts are only built along induced-subgraph inclusions")

    X, Y = i.target, f.target
    tags = [Y_TAG + str(y) for y in Y.vertices] + [X_TAG + str(x) for x in X.vertices]

    classes = UnionFind(tags)
    for a in i.source.vertices: classes.union(X_TAG + str(i(a)), Y_TAG + str(f(a)))

    label = {}
    for tag in tags: label.setdefault(classes[tag], tag)

    g = {x: label[classes[X_TAG + str(x)]] for x in X.vertices}
    j = {y: label[classes[Y_TAG + str(y)]] for y in Y.vertices}

    edges = set()
    for graph, vertex_map in ((X, g), (Y, j)):
        for u, v in graph.edges:
            if u == v or vertex_map[u] != vertex_map[v]: edges.add((vertex_map[u], vertex_map[v]))

    vertices = [label[classes[tag]] for tag in tags]
    P = DiGraph(vertices, edges)

    LOGGER.debug("pushout has %d vertices and %d edges", len(P), len(P.edges))
    return P, DiGraphMap(X, P, g), DiGraphMap(Y, P, j)

def check_pushout_universality(i, f, g, j, targets):
    """
    Brute force: every compatible pair (p, q) into each target factors
    through the pushout by exactly one map.
    """
    X, Y, P = i.target, f.target, g.target
    for T in targets:
        maps_from_x = [p for p in all_vertex_maps(X, T) if validate_map(p)]
        maps_from_y = [q for q in all_vertex_maps(Y, T) if validate_map(q)]
        maps_from_p = [u for u in all_vertex_maps(P, T) if validate_map(u)]
        for p in maps_from_x:
            for q in maps_from_y:
                if any(p(i(a)) != q(f(a)) for a in i.source.vertices): continue

                mediating = [u for u in maps_from_p
                             if all(u(g(x)) == p(x) for x in X.vertices) and all(u(j(y)) == q(y) for y in Y.vertices)]
                if len(mediating) != 1: return False
    return True
