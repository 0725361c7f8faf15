"""
Reachability complexes of directed graphs.

RC_k(G) is free on tuples (v_0, ..., v_k) with v_{j-1} != v_j and a directed
path from v_{j-1} to v_j. It is nonzero in every degree as soon as G has a
cycle, so it is stored truncated. The order complex of the condensation
poset is finite and has the same homology; it is the default route.
"""

__author__ = 'reachhom'

import logging

from reachhom.util import congruence
from reachhom.util.rh_util import DEFAULT_MAX_DEGREE, Ring, generator_cap
from reachhom.util.rh_objects import CheckReport
from reachhom.graphs.digraph import DiGraph, validate_map
from reachhom.graphs.preorder import reachability_preorder, condensation
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex, labeled_chain_map, homology_summary, \
    homology_presentation, map_on_homology, subcomplex, quotient_complex, inclusion_chain_map, \
    projection_chain_map, GroupPresentation, check_exact_sequence

LOGGER = logging.getLogger(__name__)

METHOD_CONDENSATION = "condensation"
METHOD_TRUNCATED = "truncated"
METHOD_BOTH = "both"


#########################################################################################
#
# GENERATORS
#
#########################################################################################

def _enumerate_chains(elements, related, top, cap):
    """
    Tuples of elements, adjacent entries distinct and related, in degrees
    0..top, each degree in lexicographic order of element positions.
    """
    basis = [[(x,) for x in elements]]
    successors = {x: [y for y in elements if y != x and related(x, y)] for x in elements}

    for degree in range(1, top + 1):
        extended = []
        for chain in basis[-1]:
            for y in successors[chain[-1]]:
                extended.append(chain + (y,))
                if len(extended) > cap:
                    raise congruence.ResourceCapError(degree, len(extended), cap)
        basis.append(extended)
        if not extended:
            basis.extend([] for _ in range(degree + 1, top + 1))
            break

    LOGGER.debug("generators per degree: %s", [len(b) for b in basis])
    return basis

def _face_terms(chain):
    k = len(chain) - 1
    terms = []
    for j in range(k + 1):
        if 0 < j < k and chain[j - 1] == chain[j + 1]: continue
        terms.append(((-1) ** j, chain[:j] + chain[j + 1:]))
    return terms

def reachability_complex(G, max_degree=DEFAULT_MAX_DEGREE, ring=None, cap=None):
    """
    Degrees 0..max_degree + 1, so homology is trusted up to max_degree. The
    complex is marked complete when the top degree came out empty.
    """
    ring = ring or Ring()
    congruence.checkPositiveNumber(max_degree, "max degree")

    G = G.without_loops()
    preorder = reachability_preorder(G)
    basis = _enumerate_chains(list(G.vertices), preorder.le, max_degree + 1, generator_cap(cap))

    complex_ = FreeChainComplex.from_boundary(ring, basis, _face_terms, complete=not basis[-1], name="RC")
    complex_.graph = G
    return complex_

def condensation_order_complex(G, ring=None, cap=None):
    ring = ring or Ring()

    poset = condensation(G)
    classes = list(range(len(poset.classes)))
    below = lambda x, y: bool(poset.poset.leq[x, y])
    basis = _enumerate_chains(classes, below, len(classes), generator_cap(cap))
    while len(basis) > 1 and not basis[-1]: basis.pop()

    complex_ = FreeChainComplex.from_boundary(ring, basis, _face_terms, complete=True, name="condensation")
    complex_.vertex_key = poset.class_of
    complex_.representatives = poset.representatives
    complex_.graph = poset.graph
    return complex_

def simplicial_chain_complex(S, ring):
    """Oriented simplicial chains of a SimplicialComplex, the independent oracle for face graphs."""
    basis = [S.simplices_of_dimension(k) for k in range(S.dimension + 1)] or [[]]

    def boundary(simplex):
        return [((-1) ** i, simplex[:i] + simplex[i + 1:]) for i in range(len(simplex))]

    complex_ = FreeChainComplex.from_boundary(ring, basis, boundary, complete=True, name="simplicial")
    LOGGER.debug("simplicial chain complex ranks %s", complex_.ranks())
    return complex_

def reachability_homology(G, ring=None, max_degree=DEFAULT_MAX_DEGREE, method=METHOD_CONDENSATION, cap=None):
    if method not in (METHOD_CONDENSATION, METHOD_TRUNCATED, METHOD_BOTH):
        raise congruence.DomainError("unknown method %s" % method)

    summaries = {}
    if method in (METHOD_CONDENSATION, METHOD_BOTH):
        summaries[METHOD_CONDENSATION] = homology_summary(condensation_order_complex(G, ring, cap), max_degree)
    if method in (METHOD_TRUNCATED, METHOD_BOTH):
        summaries[METHOD_TRUNCATED] = homology_summary(reachability_complex(G, max_degree, ring, cap), max_degree)

    if method == METHOD_BOTH and summaries[METHOD_CONDENSATION] != summaries[METHOD_TRUNCATED]:
        raise congruence.ConsistencyError("truncated and condensation homology disagree: %r vs %r" %
                                          (summaries[METHOD_TRUNCATED], summaries[METHOD_CONDENSATION]))

    return summaries[METHOD_TRUNCATED if method == METHOD_TRUNCATED else METHOD_CONDENSATION]


#########################################################################################
#
# MAPS AND HOMOTOPIES
#
#########################################################################################

def vertices_of(complex_, label):
    representatives = complex_.representatives
    return tuple(representatives[x] for x in label) if representatives is not None else label

def key_of(complex_, vertices):
    key = complex_.vertex_key
    return tuple(key[v] for v in vertices) if key is not None else tuple(vertices)

def _collapsed(label):
    return any(a == b for a, b in zip(label, label[1:]))

def induced_chain_map(m, source, target):
    """
    (v_0, ..., v_k) goes to (m v_0, ..., m v_k), or to zero when two adjacent
    images coincide.
    """
    if not validate_map(m):
        raise congruence.DomainError("vertex map is not a map of digraphs")

    def image(k, label):
        mapped = key_of(target, [m(v) for v in vertices_of(source, label)])
        return [] if _collapsed(mapped) else [(1, mapped)]

    return labeled_chain_map(source, target, image)

def long_homotopy_exists(f, g):
    if f.source != g.source or f.target != g.target:
        raise congruence.ShapeError("maps must share source and target")
    preorder = reachability_preorder(f.target)
    return all(preorder.le(f(v), g(v)) for v in f.source.vertices)

def prism_homotopy(f, g, source, target, sign=1):
    """
    s(x_0..x_i) = sum_j sign * (-1)^j (f x_0..f x_j, g x_j..g x_i), terms with
    coinciding adjacent entries omitted. With sign=1 this certifies
    verify_chain_homotopy(s, f_*, g_*); with sign=-1 the reverse.
    """
    if not long_homotopy_exists(f, g):
        raise congruence.PreconditionError("there is no long homotopy from f to g")

    ring = source.ring
    top = min(source.top_degree, target.top_degree - 1)
    matrices = []
    for k in range(top + 1):
        entries = {}
        for column, label in enumerate(source.basis[k]):
            vertices = vertices_of(source, label)
            for j in range(k + 1):
                prism = key_of(target, [f(v) for v in vertices[:j + 1]] + [g(v) for v in vertices[j:]])
                if _collapsed(prism): continue
                if not target.has_generator(k + 1, prism):
                    if prism in target.dropped[k + 1]: continue
                    raise congruence.ShapeError("prism %r is not a generator of the target" % (prism,))
                key = (target.index(k + 1, prism), column)
                entries[key] = entries.get(key, 0) + sign * (-1) ** j
        matrices.append(linalg.from_entries(entries, (target.rank(k + 1), source.rank(k)), ring))
    return matrices


#########################################################################################
#
# RELATIVE COMPLEXES
#
#########################################################################################

def _subgraph_vertices(G, A):
    if isinstance(A, DiGraph):
        congruence.checkSubset(A.vertices, G, "subgraph")
        if A.without_loops().edges != G.induced_subgraph(A.vertices).without_loops().edges:
            raise congruence.ShapeError("relative homology is only supported for induced subgraphs")
        return list(A.vertices)
    return list(congruence.checkSubset(list(A), G, "subgraph"))

def _check_condensation_pair(G, A_vertices, poset):
    inside = set(A_vertices)
    for members in poset.classes:
        if 0 < len(inside.intersection(members)) < len(members):
            raise congruence.PreconditionError("the subgraph must be a union of strongly connected components")
    restricted = reachability_preorder(G).restrict(inside)
    if restricted != reachability_preorder(G.induced_subgraph(inside)):
        raise congruence.PreconditionError("reachability inside the subgraph differs from the ambient one")

def subgraph_selection(G, C, A, method=METHOD_TRUNCATED):
    """Generators of C that are generators of RC(A), per degree."""
    A_vertices = _subgraph_vertices(G, A)
    inside = set(A_vertices)

    if method == METHOD_CONDENSATION:
        poset = condensation(G)
        _check_condensation_pair(G.without_loops(), A_vertices, poset)
        classes = {poset.class_of[v] for v in inside}
        return [[label for label in labels if all(x in classes for x in label)] for labels in C.basis]

    preorder = reachability_preorder(G.induced_subgraph(inside))
    def in_subgraph(label):
        return all(v in inside for v in label) and all(preorder.le(u, v) for u, v in zip(label, label[1:]))
    return [[label for label in labels if in_subgraph(label)] for labels in C.basis]

def relative_complex(G, A, max_degree=DEFAULT_MAX_DEGREE, ring=None, method=METHOD_TRUNCATED, cap=None):
    """
    RC(G) / RC(A). The condensation route needs A to be a union of strongly
    connected components of G that stay strongly connected in A, with the
    reachability of A the restriction of that of G.
    """
    if method == METHOD_CONDENSATION: C = condensation_order_complex(G, ring, cap)
    else:                             C = reachability_complex(G, max_degree, ring, cap)
    return quotient_complex(C, subgraph_selection(G, C, A, method))

def pair_sequence_check(G, A, ring=None, max_degree=DEFAULT_MAX_DEGREE, method=METHOD_TRUNCATED, cap=None):
    """
    Exactness of H_k(A) -> H_k(G) -> H_k(G, A) -> H_{k-1}(A) -> ... -> H_0(G, A) -> 0.
    """
    if method == METHOD_CONDENSATION: C = condensation_order_complex(G, ring, cap)
    else:                             C = reachability_complex(G, max_degree, ring, cap)
    selection = subgraph_selection(G, C, A, method)
    sub = subcomplex(C, selection)
    quotient = quotient_complex(C, selection)
    ring = C.ring

    include = inclusion_chain_map(sub, C)
    project = projection_chain_map(C, quotient)

    report = CheckReport("pair-sequence", ring)
    groups, maps = [], []
    for k in range(max_degree, -1, -1):
        sub_k, full_k, rel_k = homology_presentation(sub, k), homology_presentation(C, k), homology_presentation(quotient, k)
        if maps:
            maps.append(connecting)
        groups.extend([sub_k, full_k, rel_k])
        maps.append(map_on_homology(include.matrix(k), sub_k, full_k))
        maps.append(map_on_homology(project.matrix(k), full_k, rel_k))

        if k > 0:
            connecting = _pair_connecting_map(C, sub, quotient, k, rel_k, homology_presentation(sub, k - 1))

        report.add_row(degree=k, subgraph=sub_k.group(k).to_dict(), graph=full_k.group(k).to_dict(),
                       relative=rel_k.group(k).to_dict())

    groups.append(GroupPresentation([]))
    maps.append(linalg.zeros((0, groups[-2].size), ring))

    report.expect(check_exact_sequence(groups, maps, ring), "long exact sequence of the pair is not exact")
    return report

def _pair_connecting_map(C, sub, quotient, k, source, target):
    """delta[z] = [boundary of the lift of z], read in the subcomplex."""
    lift = linalg.from_entries({(C.index(k, label), column): 1 for column, label in enumerate(quotient.basis[k])},
                               (C.rank(k), quotient.rank(k)), C.ring)
    restrict = linalg.from_entries({(row, C.index(k - 1, label)): 1 for row, label in enumerate(sub.basis[k - 1])},
                                   (sub.rank(k - 1), C.rank(k - 1)), C.ring)
    chain_level = linalg.multiply(restrict, linalg.multiply(C.boundary(k), lift))
    return map_on_homology(chain_level, source, target)
