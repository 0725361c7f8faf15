"""
Reach subgraphs, long cofibrations, pushouts along them and the excision
and Mayer-Vietoris statements for reachability homology.

A ↪ X is a long cofibration when no edge enters A from outside and every
vertex x reached from A has a projection pi(x) in A that is reached from
exactly the same vertices of A.
"""

__author__ = 'reachhom'

import logging

import numpy
import networkx

from reachhom.util import congruence
from reachhom.util.rh_util import DWYER_EXHAUSTIVE_BOUND, Ring
from reachhom.util.rh_objects import CheckReport
from reachhom.graphs.digraph import DiGraphMap, inclusion_map, pushout, validate_map
from reachhom.graphs.preorder import MonotoneMap, reachability_preorder, is_dwyer
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex, ChainMap, GroupPresentation, subcomplex, homology, \
    homology_presentation, map_on_homology, inclusion_chain_map, is_homology_isomorphism, check_exact_sequence
from reachhom.homology.rcomplex import METHOD_CONDENSATION, condensation_order_complex, relative_complex, \
    induced_chain_map, subgraph_selection, _subgraph_vertices

LOGGER = logging.getLogger(__name__)


class LongCofibrationWitness:
    def __init__(self, X, A, reach, pi):
        self.X = X
        self.A = list(A)
        self.reach = reach
        self.pi = dict(pi)

    def verify(self):
        preorder = reachability_preorder(self.X)
        inside = set(self.A)

        if any(u not in inside and v in inside for u, v in self.X.edges): return False
        for x in self.reach.vertices:
            if self.pi.get(x) not in inside: return False
            if any(preorder.le(a, x) != preorder.le(a, self.pi[x]) for a in self.A): return False
        return all(self.pi[a] == a for a in self.A)

    def to_dict(self):
        return {"A": list(self.A), "reach": list(self.reach.vertices),
                "pi": [[x, self.pi[x]] for x in self.reach.vertices]}


def reach_subgraph(X, A):
    """Induced subgraph on every vertex reached by a path from A."""
    A = congruence.checkSubset(list(A), X, "subgraph")
    return X.induced_subgraph(reachability_preorder(X).up_closure(A))

def is_long_cofibration(X, A):
    """
    :return: LongCofibrationWitness, or None when A -> X is not a long cofibration
    """
    A = _subgraph_vertices(X, A)
    inside = set(A)

    witness = None
    if not any(u not in inside and v in inside for u, v in X.edges):
        preorder = reachability_preorder(X)
        reach = reach_subgraph(X, A)

        def reached_from(x):
            return frozenset(a for a in A if preorder.le(a, x))

        pi = {}
        for x in reach.vertices:
            if x in inside:
                pi[x] = x
                continue
            target = reached_from(x)
            candidate = next((a for a in A if a in target and reached_from(a) == target), None)
            if candidate is None:
                LOGGER.debug("no projection for %s", x)
                break
            pi[x] = candidate

        if len(pi) == len(reach):
            witness = LongCofibrationWitness(X, A, reach, pi)
    else:
        LOGGER.debug("an edge enters the subgraph from outside")

    if len(X) <= DWYER_EXHAUSTIVE_BOUND:
        dwyer = dwyer_counterpart(X, A)
        if (witness is None) != (dwyer is None):
            raise congruence.ConsistencyError("long cofibration and Dwyer tests disagree on %r" % (A,))

    return witness

def dwyer_counterpart(X, A):
    """is_dwyer on Pre(A) -> Pre(X); a non-full inclusion counts as a negative answer."""
    inclusion = MonotoneMap(reachability_preorder(X.induced_subgraph(A)), reachability_preorder(X), {a: a for a in A})
    try:
        return is_dwyer(inclusion)
    except congruence.ShapeError:
        return None


#########################################################################################
#
# PUSHOUTS
#
#########################################################################################

def _pushout_data(X, A, Y, f):
    A = _subgraph_vertices(X, A)
    witness = is_long_cofibration(X, A)
    if witness is None:
        raise congruence.PreconditionError("the subgraph is not a long cofibration")

    A_graph = X.induced_subgraph(A)
    f = DiGraphMap(A_graph, Y, f.vertex_map)
    if not f.is_total(): raise congruence.DomainError("f is not defined on every vertex of the subgraph")
    if not validate_map(f): raise congruence.DomainError("f is not a map of digraphs")

    P, g, j = pushout(inclusion_map(A_graph, X), f)
    return A, A_graph, f, P, g, j

def preorder_pushout_check(X, A, Y, f):
    """Pre(X glued to Y along A) equals the pushout of the reachability preorders."""
    _, _, f, P, g, j = _pushout_data(X, A, Y, f)

    relation = networkx.DiGraph()
    relation.add_nodes_from(P.vertices)
    for graph, vertex_map in ((X, g), (Y, j)):
        preorder = reachability_preorder(graph)
        relation.add_edges_from((vertex_map(u), vertex_map(v)) for u in graph.vertices for v in graph.vertices
                                if preorder.le(u, v) and vertex_map(u) != vertex_map(v))

    closure = networkx.transitive_closure(relation, reflexive=False)
    leq = numpy.eye(len(P), dtype=bool)
    for u, v in closure.edges: leq[P.index(u), P.index(v)] = True

    return bool(numpy.array_equal(leq, reachability_preorder(P).leq))

def excision_check(X, A, Y, f, ring=None, max_degree=3, cap=None):
    """
    g_*: RH(X, A) -> RH(P, Y) for the pushout P of X and Y along A, degree by
    degree, together with j: Y -> P being a long cofibration.
    """
    ring = ring or Ring()
    A, _, f, P, g, j = _pushout_data(X, A, Y, f)
    Y_image = [j(y) for y in Y.vertices]

    pair = relative_complex(X, A, ring=ring, method=METHOD_CONDENSATION, cap=cap)
    glued = relative_complex(P, Y_image, ring=ring, method=METHOD_CONDENSATION, cap=cap)
    phi = induced_chain_map(g, pair, glued)

    report = CheckReport("excision", ring)
    report.expect(is_long_cofibration(P, Y_image) is not None, "j: Y -> P is not a long cofibration")
    for k in range(max_degree + 1):
        source, target = homology(pair, k), homology(glued, k)
        isomorphism = is_homology_isomorphism(phi, k)
        report.add_row(degree=k, pair=source.to_dict(), glued=target.to_dict(), isomorphism=isomorphism)
        report.expect(isomorphism, "g_* is not an isomorphism on H_%d" % k)

    report.details["pushout"] = {"vertices": list(P.vertices), "edges": [list(e) for e in P.edge_list()]}
    return report


#########################################################################################
#
# MAYER-VIETORIS
#
#########################################################################################

X_PART = "X"
Y_PART = "Y"

def _labels(C, k):
    return C.basis[k] if k <= C.top_degree else []

def _glued_complex(CX, CY, CA, f_map):
    """
    (RC(X) + RC(Y)) / RC(A) on the generators of X outside A and those of Y:
    the part of a boundary in A is carried over to Y by f.
    """
    ring = CX.ring
    K = ring.domain
    top = max(CX.top_degree, CY.top_degree)
    x_basis = [[label for label in _labels(CX, k) if not CA.has_generator(k, label)]
               for k in range(top + 1)]
    y_basis = [_labels(CY, k) for k in range(top + 1)]
    basis = [[(X_PART, x) for x in x_basis[k]] + [(Y_PART, y) for y in y_basis[k]] for k in range(top + 1)]

    differentials = [linalg.zeros((0, len(basis[0])), ring)]
    for k in range(1, top + 1):
        index = {label: row for row, label in enumerate(basis[k - 1])}
        f_columns = linalg.columns_of(f_map.matrix(k - 1))
        x_columns = linalg.columns_of(CX.boundary(k)) if k <= CX.top_degree else []
        y_columns = linalg.columns_of(CY.boundary(k)) if k <= CY.top_degree else []

        entries = {}
        def add(row, column, value):
            entries[(row, column)] = entries.get((row, column), K.zero) + value

        for column, (part, label) in enumerate(basis[k]):
            if part == Y_PART:
                for row, value in y_columns[CY.index(k, label)]:
                    add(index[(Y_PART, CY.basis[k - 1][row])], column, value)
                continue
            for row, value in x_columns[CX.index(k, label)]:
                face = CX.basis[k - 1][row]
                if CA.has_generator(k - 1, face):
                    for y_row, f_value in f_columns[CA.index(k - 1, face)]:
                        add(index[(Y_PART, CY.basis[k - 1][y_row])], column, value * f_value)
                else:
                    add(index[(X_PART, face)], column, value)
        differentials.append(linalg.from_entries(entries, (len(basis[k - 1]), len(basis[k])), ring))

    return FreeChainComplex(ring, basis, differentials, complete=True, name="glued", check=None)

def _comparison_map(Q, CP, g_map, j_map):
    """Q -> RC(P): X generators through g, Y generators through j."""
    matrices = []
    for k in range(Q.top_degree + 1):
        g_columns = linalg.columns_of(g_map.matrix(k)) if Q.basis[k] else []
        j_columns = linalg.columns_of(j_map.matrix(k)) if Q.basis[k] else []
        entries = {}
        for column, (part, label) in enumerate(Q.basis[k]):
            if part == X_PART: source_column = g_columns[g_map.source.index(k, label)]
            else:              source_column = j_columns[j_map.source.index(k, label)]
            for row, value in source_column: entries[(row, column)] = value
        matrices.append(linalg.from_entries(entries, (CP.rank(k), Q.rank(k)), Q.ring))
    return ChainMap(Q, CP, matrices)

def _connecting_map(k, Q, CX, CA, CP, kappa, P_presentation, A_presentation):
    """
    delta[z]: write z = kappa(t) + boundary(w) with t a cycle of Q; the
    A part of the boundary of the X part of t is a cycle of A.
    """
    ring = Q.ring
    cycles = linalg.kernel_basis(Q.boundary(k), ring)
    system = linalg.hstack([linalg.multiply(kappa.matrix(k), cycles), CP.boundary(k + 1)], ring, rows=CP.rank(k))
    solution = linalg.solve(system, P_presentation.generators, ring)
    if solution is None:
        raise congruence.ConsistencyError("a cycle of the pushout does not come from the glued complex in degree %d" % k)

    t = linalg.multiply(cycles, linalg.select(solution, rows=range(cycles.shape[1])))
    lift = linalg.from_entries({(CX.index(k, label), row): 1 for row, (part, label) in enumerate(_labels(Q, k)) if part == X_PART},
                               (CX.rank(k), Q.rank(k)), ring)
    restrict = linalg.from_entries({(row, CX.index(k - 1, label)): 1 for row, label in enumerate(_labels(CA, k - 1))},
                                   (CA.rank(k - 1), CX.rank(k - 1)), ring)
    a = linalg.multiply(restrict, linalg.multiply(CX.boundary(k), linalg.multiply(lift, t)))
    return A_presentation.coordinates(a)

def mayer_vietoris_check(X, A, Y, f, ring=None, max_degree=3, cap=None):
    """
    Exactness of
    H_{K+1}(P) -> H_K(A) -> H_K(X) + H_K(Y) -> H_K(P) -> ... -> H_0(P) -> 0
    with maps (i_*, -f_*), g_* + j_* and the connecting map.
    """
    ring = ring or Ring()
    A, A_graph, f, P, g, j = _pushout_data(X, A, Y, f)

    CX = condensation_order_complex(X, ring, cap)
    CY = condensation_order_complex(Y, ring, cap)
    CP = condensation_order_complex(P, ring, cap)
    CA = subcomplex(CX, subgraph_selection(X, CX, A, METHOD_CONDENSATION))

    i_map = inclusion_chain_map(CA, CX)
    f_map = induced_chain_map(f, CA, CY)
    g_map = induced_chain_map(g, CX, CP)
    j_map = induced_chain_map(j, CY, CP)

    Q = _glued_complex(CX, CY, CA, f_map)
    kappa = _comparison_map(Q, CP, g_map, j_map)

    report = CheckReport("mayer-vietoris", ring)
    for k in range(max_degree + 2):
        report.expect(is_homology_isomorphism(kappa, k), "glued complex and pushout differ on H_%d" % k)

    presentations = {name: [homology_presentation(C, k) for k in range(max_degree + 2)]
                     for name, C in (("A", CA), ("X", CX), ("Y", CY), ("P", CP))}

    groups = [presentations["P"][max_degree + 1]]
    maps = [_connecting_map(max_degree + 1, Q, CX, CA, CP, kappa, presentations["P"][max_degree + 1],
                            presentations["A"][max_degree])]
    for k in range(max_degree, -1, -1):
        HA, HX, HY, HP = (presentations[name][k] for name in ("A", "X", "Y", "P"))
        middle = GroupPresentation(HX.orders + HY.orders)

        alpha = linalg.vstack([map_on_homology(i_map.matrix(k), HA, HX),
                               -map_on_homology(f_map.matrix(k), HA, HY)], ring, cols=HA.size)
        beta = linalg.hstack([map_on_homology(g_map.matrix(k), HX, HP),
                              map_on_homology(j_map.matrix(k), HY, HP)], ring, rows=HP.size)

        groups.extend([HA, middle, HP])
        maps.extend([alpha, beta])
        if k > 0:
            maps.append(_connecting_map(k, Q, CX, CA, CP, kappa, HP, presentations["A"][k - 1]))

        report.add_row(degree=k, A=HA.group(k).to_dict(), X=HX.group(k).to_dict(), Y=HY.group(k).to_dict(),
                       P=HP.group(k).to_dict())

    groups.append(GroupPresentation([]))
    maps.append(linalg.zeros((0, groups[-2].size), ring))

    report.expect(check_exact_sequence(groups, maps, ring), "Mayer-Vietoris sequence is not exact")
    if ring.is_field:
        report.details["derived_betti"] = _derived_betti(presentations, groups, maps, max_degree, ring)
        report.expect(report.details["derived_betti"] == [presentations["P"][k].size for k in range(max_degree + 1)],
                      "Betti numbers of the pushout do not follow from the sequence")
    return report

def _derived_betti(presentations, groups, maps, max_degree, ring):
    """dim H_k(P) = dim coker(alpha_k) + dim ker(alpha_{k-1})."""
    alphas = {}
    for position, matrix in enumerate(maps):
        if position % 3 == 1: alphas[max_degree - position // 3] = matrix

    betti = []
    for k in range(max_degree + 1):
        middle = presentations["X"][k].size + presentations["Y"][k].size
        cokernel = middle - linalg.rank(alphas[k], ring)
        kernel = presentations["A"][k - 1].size - linalg.rank(alphas[k - 1], ring) if k > 0 else 0
        betti.append(cokernel + kernel)
    return betti
