"""
Finitely generated free chain complexes with labeled bases, chain maps,
homotopies, homology (Betti numbers and torsion), induced maps on homology,
mapping cones, tensor products, quotients and exactness checks.

A complex stores degrees 0..top. A *complete* complex is zero above its top
degree, so its homology is known in every degree; otherwise homology is only
trusted up to top - 1.
"""

__author__ = 'reachhom'

import logging

from reachhom.util import congruence
from reachhom.util.rh_util import check_same_ring
from reachhom.util.rh_objects import HomologyGroup, HomologySummary
from reachhom.homology import linalg
from reachhom.homology.linalg import smith_normal_form, invariant_factors  # re-exported

LOGGER = logging.getLogger(__name__)


class FreeChainComplex:
    def __init__(self, ring, basis, differentials, complete=False, name="", check=True):
        """
        :param check: verify that the boundary squares to zero; None verifies only when
                      debug logging is enabled
        """
        self.ring = ring
        self.basis = [list(labels) for labels in basis] or [[]]
        self.differentials = list(differentials)
        self.complete = complete
        self.name = name
        self.dropped = [set() for _ in self.basis]
        self.graph = None
        self.vertex_key = None
        self.representatives = None
        self._index = [{label: i for i, label in enumerate(labels)} for labels in self.basis]

        if len(self.differentials) != len(self.basis):
            raise congruence.ShapeError("%d bases but %d differentials" % (len(self.basis), len(self.differentials)))
        for k, differential in enumerate(self.differentials):
            expected = (len(self.basis[k - 1]) if k > 0 else 0, len(self.basis[k]))
            if differential.shape != expected:
                raise congruence.ShapeError("differential %d has shape %s, expected %s" % (k, differential.shape, expected))
            if differential.domain != ring.domain:
                raise congruence.RingMismatchError("differential %d is not over %r" % (k, ring))

        if check is None: check = LOGGER.isEnabledFor(logging.DEBUG)
        if check: self.verify()

    @classmethod
    def from_boundary(cls, ring, basis, boundary, check=None, **kwargs):
        """
        :param boundary: label -> iterable of (coefficient, face label)
        :param check: verify that the boundary squares to zero; by default
                      only when debug logging is enabled
        """
        basis = [list(labels) for labels in basis] or [[]]
        differentials = [linalg.zeros((0, len(basis[0])), ring)]
        for k in range(1, len(basis)):
            index = {label: i for i, label in enumerate(basis[k - 1])}
            entries = {}
            for j, label in enumerate(basis[k]):
                for coefficient, face in boundary(label):
                    try:
                        key = (index[face], j)
                    except KeyError:
                        raise congruence.ConsistencyError("face %r of %r is not a generator" % (face, label))
                    entries[key] = entries.get(key, 0) + coefficient
            differentials.append(linalg.from_entries(entries, (len(basis[k - 1]), len(basis[k])), ring))

        return cls(ring, basis, differentials, check=check, **kwargs)

    def __repr__(self):
        return "FreeChainComplex(%s%r, ranks %s%s)" % (self.name + " " if self.name else "", self.ring,
                                                      self.ranks(), "" if self.complete else ", truncated")

    @property
    def top_degree(self):
        return len(self.basis) - 1

    @property
    def trusted_degree(self):
        return self.top_degree if self.complete else self.top_degree - 1

    def ranks(self):
        return [len(labels) for labels in self.basis]

    def rank(self, k):
        if k < 0: return 0
        if k <= self.top_degree: return len(self.basis[k])
        if self.complete: return 0
        raise congruence.RangeError("degree %d is beyond the stored range 0..%d" % (k, self.top_degree))

    def boundary(self, k):
        if k < 0: raise congruence.RangeError("negative degree %d" % k)
        if k <= self.top_degree: return self.differentials[k]
        if self.complete: return linalg.zeros((self.rank(k - 1), 0), self.ring)
        raise congruence.RangeError("degree %d is beyond the stored range 0..%d" % (k, self.top_degree))

    def index(self, k, label):
        return self._index[k][label]

    def has_generator(self, k, label):
        return k <= self.top_degree and label in self._index[k]

    def verify(self):
        for k in range(2, self.top_degree + 1):
            if not linalg.is_zero(linalg.multiply(self.differentials[k - 1], self.differentials[k])):
                raise congruence.ConsistencyError("boundary of boundary is not zero in degree %d" % k)
        return True


class ChainMap:
    def __init__(self, source, target, matrices):
        check_same_ring(source.ring, target.ring)
        self.source = source
        self.target = target
        self.matrices = list(matrices)

        for k, matrix in enumerate(self.matrices):
            expected = (target.rank(k), source.rank(k))
            if matrix.shape != expected:
                raise congruence.ShapeError("chain map matrix %d has shape %s, expected %s" % (k, matrix.shape, expected))

    @property
    def ring(self):
        return self.source.ring

    @property
    def top_degree(self):
        return len(self.matrices) - 1

    def matrix(self, k):
        if k <= self.top_degree: return self.matrices[k]
        if (self.source.complete and k > self.source.top_degree) or (self.target.complete and k > self.target.top_degree):
            return linalg.zeros((self.target.rank(k), self.source.rank(k)), self.ring)
        raise congruence.RangeError("chain map is only stored up to degree %d" % self.top_degree)

    def compose(self, first):
        """self after first."""
        top = min(self.top_degree, first.top_degree)
        return ChainMap(first.source, self.target, [linalg.multiply(self.matrices[k], first.matrices[k]) for k in range(top + 1)])

def identity_chain_map(C):
    return ChainMap(C, C, [linalg.identity(C.rank(k), C.ring) for k in range(C.top_degree + 1)])

def zero_chain_map(C, D):
    top = min(C.top_degree, D.top_degree)
    return ChainMap(C, D, [linalg.zeros((D.rank(k), C.rank(k)), C.ring) for k in range(top + 1)])

def labeled_chain_map(source, target, image, top=None):
    """
    Chain map given on generators: image(k, label) -> iterable of
    (coefficient, target label). Targets quotiented out of the target
    complex contribute nothing.
    """
    if top is None: top = min(source.top_degree, target.top_degree)
    matrices = []
    for k in range(top + 1):
        entries = {}
        for j, label in enumerate(source.basis[k]):
            for coefficient, target_label in image(k, label):
                if target.has_generator(k, target_label):
                    key = (target.index(k, target_label), j)
                    entries[key] = entries.get(key, 0) + coefficient
                elif target_label not in target.dropped[k]:
                    raise congruence.ShapeError("image %r of %r is not a generator of the target" % (target_label, label))
        matrices.append(linalg.from_entries(entries, (target.rank(k), source.rank(k)), source.ring))
    return ChainMap(source, target, matrices)

def verify_chain_map(phi):
    check_same_ring(phi.source.ring, phi.target.ring)
    for k in range(1, phi.top_degree + 1):
        left = linalg.multiply(phi.target.boundary(k), phi.matrices[k])
        right = linalg.multiply(phi.matrices[k - 1], phi.source.boundary(k))
        if not linalg.equal(left, right): return False
    return True

def verify_chain_homotopy(s, phi, psi):
    """
    True iff boundary * s + s * boundary = psi - phi in every degree where
    s is given.

    :param s: list of matrices, s[k]: C_k -> D_{k+1}
    """
    check_same_ring(phi.ring, psi.ring)
    C, D = phi.source, phi.target
    if C.ranks() != psi.source.ranks() or D.ranks() != psi.target.ranks():
        raise congruence.ShapeError("the two chain maps do not share source and target")

    for k in range(min(len(s) - 1, phi.top_degree, psi.top_degree) + 1):
        if s[k].shape != (D.rank(k + 1), C.rank(k)):
            raise congruence.ShapeError("homotopy matrix %d has shape %s, expected %s" % (k, s[k].shape, (D.rank(k + 1), C.rank(k))))

        left = linalg.multiply(D.boundary(k + 1), s[k])
        if k > 0: left = linalg.add(left, linalg.multiply(s[k - 1], C.boundary(k)))
        if not linalg.equal(left, linalg.subtract(psi.matrices[k], phi.matrices[k])): return False
    return True


#########################################################################################
#
# HOMOLOGY
#
#########################################################################################

def _check_homology_degree(C, k):
    if k < 0 or (not C.complete and k > C.trusted_degree):
        raise congruence.RangeError("H_%d needs degrees %d..%d, complex stores 0..%d" % (k, k - 1, k + 1, C.top_degree))

def homology(C, k):
    _check_homology_degree(C, k)
    n = C.rank(k)
    if C.ring.is_field:
        betti = n - linalg.rank(C.boundary(k), C.ring) - linalg.rank(C.boundary(k + 1), C.ring)
        return HomologyGroup(k, betti, [])

    incoming = invariant_factors(C.boundary(k + 1))
    betti = n - len(invariant_factors(C.boundary(k))) - len(incoming)
    return HomologyGroup(k, betti, [d for d in incoming if d > 1])

def homology_summary(C, max_degree=None):
    if max_degree is None: max_degree = C.trusted_degree
    summary = HomologySummary(C.ring)
    for k in range(max_degree + 1): summary.add_group(homology(C, k))
    return summary


class GroupPresentation:
    """
    Finitely generated abelian group as coordinates modulo orders: a
    coordinate of order 0 is free, of order d > 1 lives in Z/d.
    """
    def __init__(self, orders):
        self.orders = list(orders)

    @property
    def size(self):
        return len(self.orders)

    def group(self, degree=0):
        return HomologyGroup(degree, self.orders.count(0), sorted(d for d in self.orders if d))


class HomologyPresentation(GroupPresentation):
    """
    H_k(C) with explicit cycle representatives (the columns of
    ``generators``) and a map from cycles to coordinates.
    """
    def __init__(self, ring, degree, generators, orders, coordinates):
        super().__init__(orders)
        self.ring = ring
        self.degree = degree
        self.generators = generators
        self._coordinates = coordinates

    def coordinates(self, cycles):
        return self._coordinates(cycles)

def _int_product(A, B):
    columns = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, column)) for column in columns] for row in A]

def homology_presentation(C, k):
    _check_homology_degree(C, k)
    ring = C.ring
    n = C.rank(k)

    if ring.is_field:
        cycles = linalg.kernel_basis(C.boundary(k), ring)
        boundaries = linalg.column_space_basis(C.boundary(k + 1), ring)
        b = boundaries.shape[1]
        _, pivots = linalg.rref(linalg.hstack([boundaries, cycles], ring, rows=n), ring)
        chosen = [p - b for p in pivots if p >= b]
        generators = linalg.select(cycles, cols=chosen)
        frame = linalg.hstack([boundaries, generators], ring, rows=n)

        def coordinates(vectors):
            solution = linalg.solve(frame, vectors, ring)
            if solution is None: raise congruence.ConsistencyError("vectors are not cycles in degree %d" % k)
            return linalg.select(solution, rows=range(b, b + len(chosen)))

        return HomologyPresentation(ring, k, generators, [0] * len(chosen), coordinates)

    outgoing = C.boundary(k)
    cycle_form = linalg.smith_reduce(linalg.int_rows(outgoing), outgoing.shape[0], n)
    r = cycle_form.rank
    cycle_basis = [row[r:] for row in cycle_form.V]
    to_cycle_coordinates = cycle_form.V_inverse[r:]
    z = n - r

    incoming = C.boundary(k + 1)
    relations = _int_product(to_cycle_coordinates, linalg.int_rows(incoming)) if z else []
    relation_form = linalg.smith_reduce(relations, z, incoming.shape[1])

    kept = [i for i in range(z) if not (i < relation_form.rank and relation_form.D[i][i] == 1)]
    orders = [relation_form.D[i][i] if i < relation_form.rank else 0 for i in kept]
    chooser = [[row[i] for i in kept] for row in relation_form.U_inverse]
    generators = linalg.build(_int_product(cycle_basis, chooser) if z else [[] for _ in range(n)], ring, cols=len(kept))

    def coordinates(vectors):
        values = linalg.int_rows(vectors)
        if not linalg.is_zero(linalg.multiply(outgoing, vectors)):
            raise congruence.ConsistencyError("vectors are not cycles in degree %d" % k)

        reduced = _int_product(relation_form.U, _int_product(to_cycle_coordinates, values)) if z else []
        out = []
        for i, order in zip(kept, orders):
            row = reduced[i]
            out.append([x % order for x in row] if order else row)
        return linalg.build(out, ring, cols=vectors.shape[1])

    return HomologyPresentation(ring, k, generators, orders, coordinates)

def map_on_homology(matrix, source_presentation, target_presentation):
    """Matrix of a chain-level map between two homology presentations."""
    return target_presentation.coordinates(linalg.multiply(matrix, source_presentation.generators))

def induced_homology_map(phi, k, source_presentation=None, target_presentation=None):
    if not verify_chain_map(phi):
        raise congruence.NotAChainMapError("matrices do not commute with the differentials")

    if source_presentation is None: source_presentation = homology_presentation(phi.source, k)
    if target_presentation is None: target_presentation = homology_presentation(phi.target, k)
    return map_on_homology(phi.matrix(k), source_presentation, target_presentation)

def is_invertible(matrix, ring):
    m, n = matrix.shape
    if m != n: return False
    if ring.is_field: return linalg.rank(matrix, ring) == n
    factors = invariant_factors(matrix)
    return len(factors) == n and all(d == 1 for d in factors)


#########################################################################################
#
# CONSTRUCTIONS
#
#########################################################################################

def mapping_cone(phi, top):
    """
    Cone_n = C_{n-1} + D_n with boundary (c, d) -> (-dc, phi(c) + dd).
    """
    C, D, ring = phi.source, phi.target, phi.ring
    basis = [[("source", c) for c in (C.basis[n - 1] if 1 <= n <= C.top_degree + 1 else [])] +
             [("target", d) for d in (D.basis[n] if n <= D.top_degree else [])] for n in range(top + 1)]

    differentials = [linalg.zeros((0, len(basis[0])), ring)]
    for n in range(1, top + 1):
        c_rows, c_cols = C.rank(n - 2), C.rank(n - 1)
        d_rows, d_cols = D.rank(n - 1), D.rank(n)
        upper = linalg.hstack([-C.boundary(n - 1) if n >= 2 else linalg.zeros((0, c_cols), ring),
                               linalg.zeros((c_rows, d_cols), ring)], ring, rows=c_rows)
        lower = linalg.hstack([phi.matrix(n - 1), D.boundary(n)], ring, rows=d_rows)
        differentials.append(linalg.vstack([upper, lower], ring, cols=c_cols + d_cols))

    complete = C.complete and D.complete and top >= max(C.top_degree + 1, D.top_degree)
    return FreeChainComplex(ring, basis, differentials, complete=complete, name="cone", check=None)

def is_homology_isomorphism(phi, k):
    """
    Cone acyclic in degrees k and k + 1, which makes phi_* an isomorphism in
    degree k (and is what a quasi-isomorphism gives in every degree).
    """
    cone = mapping_cone(phi, k + 2)
    return homology(cone, k).is_zero() and homology(cone, k + 1).is_zero()

def isomorphism_degrees(phi, top):
    """Degrees k <= top passing is_homology_isomorphism, read off one mapping cone."""
    cone = mapping_cone(phi, top + 2)
    acyclic = [homology(cone, n).is_zero() for n in range(top + 2)]
    return [k for k in range(top + 1) if acyclic[k] and acyclic[k + 1]]

def tensor_complex(C, D):
    """
    Basis in degree k: pairs (c, d) with deg c + deg d = k, ordered by deg c
    then by the two factor bases; boundary dc (x) d + (-1)^{deg c} c (x) dd.
    """
    ring = check_same_ring(C.ring, D.ring)
    bound = lambda X: X.top_degree if not X.complete else float("inf")
    top = int(min(bound(C), bound(D), C.top_degree + D.top_degree))

    triples = []
    for k in range(top + 1):
        triples.append([(i, a, b) for i in range(k + 1) if i <= C.top_degree and k - i <= D.top_degree
                        for a in range(C.rank(i)) for b in range(D.rank(k - i))])

    differentials = [linalg.zeros((0, len(triples[0])), ring)]
    for k in range(1, top + 1):
        index = {triple: row for row, triple in enumerate(triples[k - 1])}
        c_columns = {i: linalg.columns_of(C.boundary(i)) for i in range(1, k + 1) if i <= C.top_degree}
        d_columns = {j: linalg.columns_of(D.boundary(j)) for j in range(1, k + 1) if j <= D.top_degree}

        entries = {}
        for column, (i, a, b) in enumerate(triples[k]):
            if i > 0:
                for row, value in c_columns[i][a]:
                    key = (index[(i - 1, row, b)], column)
                    entries[key] = entries.get(key, ring.domain.zero) + value
            if k - i > 0:
                sign = ring.domain.one if i % 2 == 0 else -ring.domain.one
                for row, value in d_columns[k - i][b]:
                    key = (index[(i, a, row)], column)
                    entries[key] = entries.get(key, ring.domain.zero) + sign * value
        differentials.append(linalg.from_entries(entries, (len(triples[k - 1]), len(triples[k])), ring))

    basis = [[(C.basis[i][a], D.basis[k - i][b]) for i, a, b in triples[k]] for k in range(top + 1)]
    tensor = FreeChainComplex(ring, basis, differentials, complete=C.complete and D.complete, name="tensor",
                              check=None)
    tensor.factors = triples
    return tensor

def _inherit_graph_data(C, derived):
    derived.graph = C.graph
    derived.vertex_key = C.vertex_key
    derived.representatives = C.representatives

def _selected_sets(C, selection):
    selection = list(selection)
    chosen = []
    for k in range(C.top_degree + 1):
        labels = set(selection[k]) if k < len(selection) else set()
        unknown = [label for label in labels if not C.has_generator(k, label)]
        if unknown: raise congruence.ShapeError("%r is not a generator in degree %d" % (unknown[0], k))
        chosen.append(labels)
    return chosen

def _check_subcomplex(C, chosen):
    for k in range(1, C.top_degree + 1):
        for j, column in enumerate(linalg.columns_of(C.boundary(k))):
            if C.basis[k][j] in chosen[k] and any(C.basis[k - 1][row] not in chosen[k - 1] for row, _ in column):
                raise congruence.SubcomplexError("boundary of %r leaves the selected generators" % (C.basis[k][j],))

def quotient_complex(C, selection):
    """
    Complex on the generators outside ``selection`` (per-degree label sets)
    with the projected differential.
    """
    chosen = _selected_sets(C, selection)
    _check_subcomplex(C, chosen)

    keep = [[i for i, label in enumerate(C.basis[k]) if label not in chosen[k]] for k in range(C.top_degree + 1)]
    differentials = [linalg.zeros((0, len(keep[0])), C.ring)]
    for k in range(1, C.top_degree + 1):
        differentials.append(linalg.select(C.boundary(k), rows=keep[k - 1], cols=keep[k]))

    quotient = FreeChainComplex(C.ring, [[C.basis[k][i] for i in keep[k]] for k in range(C.top_degree + 1)],
                                differentials, complete=C.complete, name=C.name + "/sub", check=None)
    quotient.dropped = [chosen[k] | C.dropped[k] for k in range(C.top_degree + 1)]
    _inherit_graph_data(C, quotient)
    return quotient

def subcomplex(C, selection):
    chosen = _selected_sets(C, selection)
    _check_subcomplex(C, chosen)

    keep = [[i for i, label in enumerate(C.basis[k]) if label in chosen[k]] for k in range(C.top_degree + 1)]
    differentials = [linalg.zeros((0, len(keep[0])), C.ring)]
    for k in range(1, C.top_degree + 1):
        differentials.append(linalg.select(C.boundary(k), rows=keep[k - 1], cols=keep[k]))

    sub = FreeChainComplex(C.ring, [[C.basis[k][i] for i in keep[k]] for k in range(C.top_degree + 1)],
                           differentials, complete=C.complete, name=C.name + "|sub", check=None)
    _inherit_graph_data(C, sub)
    return sub

def inclusion_chain_map(sub, C):
    return labeled_chain_map(sub, C, lambda k, label: [(1, label)])

def projection_chain_map(C, quotient):
    return labeled_chain_map(C, quotient, lambda k, label: [(1, label)])


#########################################################################################
#
# EXACTNESS
#
#########################################################################################

def check_exact_sequence(groups, maps, ring):
    """
    True iff image = kernel at every interior node of
    groups[0] -> groups[1] -> ... with maps[i]: groups[i] -> groups[i + 1].
    """
    if len(maps) != len(groups) - 1:
        raise congruence.ShapeError("%d groups need %d maps, got %d" % (len(groups), len(groups) - 1, len(maps)))
    for i, matrix in enumerate(maps):
        if matrix.shape != (groups[i + 1].size, groups[i].size):
            raise congruence.ShapeError("map %d has shape %s, expected %s" % (i, matrix.shape, (groups[i + 1].size, groups[i].size)))

    for node in range(1, len(groups) - 1):
        incoming, outgoing = maps[node - 1], maps[node]
        if ring.is_field:
            exact = linalg.is_zero(linalg.multiply(outgoing, incoming)) and \
                    linalg.rank(incoming, ring) == groups[node].size - linalg.rank(outgoing, ring)
        else:
            exact = _integer_exact(groups[node], groups[node + 1], incoming, outgoing)

        if not exact:
            LOGGER.info("sequence is not exact at node %d", node)
            return False
    return True

def _relation_columns(group):
    """Columns d * e_i spanning the relations of the group."""
    return [[order if row == i else 0 for row in range(group.size)] for i, order in enumerate(group.orders) if order]

def _integer_exact(middle, after, incoming, outgoing):
    g, f = linalg.int_rows(incoming), linalg.int_rows(outgoing)
    n = middle.size
    after_relations = _relation_columns(after)
    middle_relations = _relation_columns(middle)

    def in_span(generator_columns, vector, size):
        rows = [[column[i] for column in generator_columns] for i in range(size)]
        return linalg.lattice_contains(rows, size, len(generator_columns), vector)

    image_columns = middle_relations + [list(c) for c in zip(*g)]

    # well defined on the middle relations, and the composite vanishes
    for column in image_columns:
        image = [sum(f[i][j] * column[j] for j in range(n)) for i in range(after.size)]
        if not in_span(after_relations, image, after.size): return False

    # kernel of the middle -> after map, as a lattice in Z^n
    joined = [list(f[i]) + [column[i] for column in after_relations] for i in range(after.size)]
    form = linalg.smith_reduce(joined, after.size, n + len(after_relations))
    kernel = [[row[j] for row in form.V[:n]] for j in range(form.rank, n + len(after_relations))]

    return all(in_span(image_columns, vector, n) for vector in kernel)
