"""
Reachability preorders, condensation posets, the Pre / iota adjunction,
products of preorders and Dwyer morphisms.
"""

__author__ = 'reachhom'

import logging
import itertools

import numpy
import networkx

from reachhom.util import congruence
from reachhom.util.rh_util import ADJUNCTION_BOUND, DWYER_EXHAUSTIVE_BOUND
from reachhom.graphs.digraph import DiGraph, DiGraphMap, validate_map, product_vertices

LOGGER = logging.getLogger(__name__)


class Preorder:
    def __init__(self, elements, leq, check=True):
        self.elements = tuple(elements)
        self.leq = numpy.array(leq, dtype=bool).reshape((len(self.elements), len(self.elements)))
        self._index = {x: i for i, x in enumerate(self.elements)}

        if len(self._index) != len(self.elements):
            raise congruence.DomainError("preorder elements must be distinct")
        if check:
            if not self.leq.diagonal().all():
                raise congruence.DomainError("relation is not reflexive")
            if not self.is_transitive():
                raise congruence.DomainError("relation is not transitive")

    @classmethod
    def discrete(cls, elements):
        elements = list(elements)
        return cls(elements, numpy.eye(len(elements), dtype=bool))

    @classmethod
    def chain(cls, elements):
        elements = list(elements)
        return cls(elements, numpy.triu(numpy.ones((len(elements), len(elements)), dtype=bool)))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, element):
        return element in self._index

    def __eq__(self, other):
        return isinstance(other, Preorder) and self.elements == other.elements and numpy.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self):
        return "Preorder(%d elements, %d relations)" % (len(self), int(self.leq.sum()))

    def index(self, element):
        return self._index[element]

    def le(self, x, y):
        return bool(self.leq[self._index[x], self._index[y]])

    def is_transitive(self):
        as_int = self.leq.astype(int)
        return not numpy.logical_and(as_int @ as_int > 0, ~self.leq).any()

    def is_antisymmetric(self):
        both = numpy.logical_and(self.leq, self.leq.T)
        return not numpy.logical_and(both, ~numpy.eye(len(self), dtype=bool)).any()

    def up_closure(self, subset):
        rows = [self._index[x] for x in subset]
        if not rows: return []
        reached = self.leq[rows].any(axis=0)
        return [x for x, flag in zip(self.elements, reached) if flag]

    def down_closure(self, subset):
        columns = [self._index[x] for x in subset]
        if not columns: return []
        reached = self.leq[:, columns].any(axis=1)
        return [x for x, flag in zip(self.elements, reached) if flag]

    def restrict(self, subset):
        subset = set(subset)
        rows = [i for i, x in enumerate(self.elements) if x in subset]
        return Preorder([self.elements[i] for i in rows], self.leq[numpy.ix_(rows, rows)], check=False)


class MonotoneMap:
    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)

        missing = [x for x in source.elements if x not in self.mapping or self.mapping[x] not in target]
        if missing:
            raise congruence.DomainError("map is not defined on %r" % (missing[0],))
        for x, y in itertools.product(source.elements, repeat=2):
            if source.le(x, y) and not target.le(self.mapping[x], self.mapping[y]):
                raise congruence.DomainError("map is not monotone on %r <= %r" % (x, y))

    def __call__(self, element):
        return self.mapping[element]

    def is_injective(self):
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_full(self):
        """Order reflecting: f(x) <= f(y) implies x <= y."""
        return all(self.source.le(x, y) or not self.target.le(self(x), self(y))
                   for x, y in itertools.product(self.source.elements, repeat=2))


class CondensationPoset:
    """
    Strongly connected components of a graph ordered by reachability.
    Class i is listed before class j whenever its smallest vertex comes first.
    """
    def __init__(self, graph, classes, poset, preorder):
        self.graph = graph
        self.classes = classes
        self.poset = poset
        self.class_of = {v: c for c, members in enumerate(classes) for v in members}
        self.quotient = MonotoneMap(preorder, poset, self.class_of)

    @property
    def representatives(self):
        return [members[0] for members in self.classes]

    def order_pairs(self):
        n = len(self.classes)
        return [[i, j] for i in range(n) for j in range(n) if i != j and self.poset.leq[i, j]]

    def to_dict(self):
        return {"classes": [list(members) for members in self.classes], "order": self.order_pairs()}


#########################################################################################
#
# REACHABILITY
#
#########################################################################################

def strongly_connected_classes(G):
    """SCCs as vertex lists in vertex order, sorted by their first vertex."""
    classes = [sorted(component, key=G.index) for component in networkx.strongly_connected_components(G.to_networkx())]
    return sorted(classes, key=lambda members: G.index(members[0]))

def _class_reach(G, classes):
    class_of = {v: c for c, members in enumerate(classes) for v in members}
    dag = networkx.DiGraph()
    dag.add_nodes_from(range(len(classes)))
    dag.add_edges_from((class_of[u], class_of[v]) for u, v in G.edges if class_of[u] != class_of[v])

    reach = [0] * len(classes)
    for c in reversed(list(networkx.topological_sort(dag))):
        bits = 1 << c
        for d in dag.successors(c): bits |= reach[d]
        reach[c] = bits
    return class_of, reach

def reachability_preorder(G):
    G = G.without_loops()
    classes = strongly_connected_classes(G)
    class_of, reach = _class_reach(G, classes)

    leq = numpy.zeros((len(G), len(G)), dtype=bool)
    class_rows = numpy.array([[(reach[c] >> d) & 1 for d in range(len(classes))] for c in range(len(classes))], dtype=bool) \
        if classes else numpy.zeros((0, 0), dtype=bool)
    if len(G):
        vertex_class = numpy.array([class_of[v] for v in G.vertices])
        leq = class_rows[numpy.ix_(vertex_class, vertex_class)]

    LOGGER.debug("reachability preorder: %d vertices in %d classes", len(G), len(classes))
    return Preorder(G.vertices, leq, check=False)

def condensation(G):
    G = G.without_loops()
    classes = strongly_connected_classes(G)
    _, reach = _class_reach(G, classes)
    n = len(classes)
    leq = numpy.array([[(reach[c] >> d) & 1 for d in range(n)] for c in range(n)], dtype=bool).reshape((n, n))
    return CondensationPoset(G, classes, Preorder(range(n), leq, check=False), reachability_preorder(G))

def iota(P):
    return DiGraph(P.elements, [(x, y) for x in P.elements for y in P.elements if P.le(x, y)])

def preorder_product(P, Q):
    elements = product_vertices(P.elements, Q.elements)
    return Preorder(elements, numpy.kron(P.leq.astype(int), Q.leq.astype(int)).astype(bool), check=False)

def nat_trans_exists(f, g):
    if f.source != g.source or f.target != g.target:
        raise congruence.ShapeError("natural transformations need maps with the same source and target")
    return all(f.target.le(f(x), g(x)) for x in f.source.elements)

def adjunction_check(G, P):
    """
    Compare digraph maps G -> iota(P) with monotone maps Pre(G) -> P by
    enumerating every vertex function.
    """
    congruence.checkSizeBound(len(G), ADJUNCTION_BOUND, "graph")
    congruence.checkSizeBound(len(P), ADJUNCTION_BOUND, "preorder")

    target = iota(P)
    preorder = reachability_preorder(G)
    pairs = [(u, v) for u in G.vertices for v in G.vertices if preorder.le(u, v)]

    graph_maps, monotone_maps = set(), set()
    for images in itertools.product(P.elements, repeat=len(G)):
        assignment = dict(zip(G.vertices, images))
        if validate_map(DiGraphMap(G, target, assignment)): graph_maps.add(images)
        if all(P.le(assignment[u], assignment[v]) for u, v in pairs): monotone_maps.add(images)

    LOGGER.debug("adjunction: %d digraph maps, %d monotone maps", len(graph_maps), len(monotone_maps))
    return graph_maps == monotone_maps


#########################################################################################
#
# DWYER MORPHISMS
#
#########################################################################################

class DwyerWitness:
    """
    U: up-closed subset of Q containing P; p: retraction U -> P with
    p(u) <= u. Both in terms of elements of Q.
    """
    def __init__(self, Q, P_image, U, p):
        self.Q = Q
        self.P_image = list(P_image)
        self.U = list(U)
        self.p = dict(p)

    def verify(self):
        Q, inside, U = self.Q, set(self.P_image), set(self.U)

        for x in Q.elements:
            for y in inside:
                if Q.le(x, y) and x not in inside: return False
        for u in U:
            for x in Q.elements:
                if Q.le(u, x) and x not in U: return False
        if not inside <= U or set(self.p) != U: return False

        for u in U:
            if self.p[u] not in inside or not Q.le(self.p[u], u): return False
        for y in inside:
            if self.p[y] != y: return False
        for u in U:
            for v in U:
                if Q.le(u, v) and not Q.le(self.p[u], self.p[v]): return False
        return True

def _admissible(Q, inside, u):
    return [y for y in Q.elements if y in inside and Q.le(y, u)]

def _greatest_admissible(Q, inside, u):
    candidates = _admissible(Q, inside, u)
    for y in candidates:
        if all(Q.le(z, y) for z in candidates): return y
    return None

def _exhaustive_retraction(Q, inside, U):
    order = [u for u in U if u not in inside]
    p = {y: y for y in inside}

    def extend(position):
        if position == len(order): return True
        u = order[position]
        for y in _admissible(Q, inside, u):
            p[u] = y
            if all(not Q.le(v, w) or Q.le(p[v], p[w]) for v in p for w in p):
                if extend(position + 1): return True
            del p[u]
        return False

    return dict(p) if extend(0) else None

def is_dwyer(inclusion):
    """
    :param inclusion: MonotoneMap P -> Q, injective and full
    :return: DwyerWitness or None
    """
    if not inclusion.is_injective() or not inclusion.is_full():
        raise congruence.ShapeError("a Dwyer morphism must be an injective full inclusion")

    Q = inclusion.target
    image = [inclusion(x) for x in inclusion.source.elements]
    inside = set(image)

    if set(Q.down_closure(image)) != inside:
        LOGGER.debug("image is not down-closed")
        return None

    U = Q.up_closure(image)
    p = {}
    for u in U:
        p[u] = u if u in inside else _greatest_admissible(Q, inside, u)
        if p[u] is None: break

    if all(value is not None for value in p.values()) and len(p) == len(U):
        witness = DwyerWitness(Q, image, U, p)
        if witness.verify(): return witness

    if len(Q) <= DWYER_EXHAUSTIVE_BOUND:
        p = _exhaustive_retraction(Q, inside, U)
        if p is not None:
            LOGGER.warning("greedy retraction failed but an exhaustive search found one")
            return DwyerWitness(Q, image, U, p)
    return None
