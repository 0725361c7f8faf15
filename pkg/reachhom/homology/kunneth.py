"""
The shuffle (Eilenberg-Zilber) map RC(G) (x) RC(H) -> RC(G x H) and checks of
the Kunneth formula for box and strong products.
"""

__author__ = 'reachhom'

import logging
import itertools
from math import gcd

from sympy import factorint

from reachhom.util import congruence
from reachhom.util.rh_util import DEFAULT_MAX_DEGREE, Ring, check_field, generator_cap
from reachhom.util.rh_objects import CheckReport, HomologyGroup
from reachhom.graphs.digraph import box_product, strong_product, product_vertex, product_map, DiGraphMap
from reachhom.graphs.preorder import reachability_preorder
from reachhom.homology import linalg
from reachhom.homology.homalg import tensor_complex, labeled_chain_map, verify_chain_map, \
    isomorphism_degrees, homology
from reachhom.homology.rcomplex import reachability_complex, condensation_order_complex, induced_chain_map, \
    reachability_homology, _enumerate_chains, _face_terms

LOGGER = logging.getLogger(__name__)

BOX = "box"
STRONG = "strong"
BOTH = "both"

PRODUCTS = {BOX: box_product, STRONG: strong_product}


class StaircaseShuffle:
    """
    Lattice path from (0, 0) to (p, q), one coordinate increasing by one at
    every step; the sign is the parity of (vertical step, later horizontal
    step) pairs.
    """
    def __init__(self, path, sign):
        self.path = tuple(path)
        self.sign = sign

    @property
    def p(self):
        return self.path[-1][0]

    @property
    def q(self):
        return self.path[-1][1]

    def __repr__(self):
        return "%s%s" % ("+" if self.sign > 0 else "-", list(self.path))

def enumerate_shuffles(p, q):
    congruence.checkPositiveNumber(p, "p")
    congruence.checkPositiveNumber(q, "q")

    shuffles = []
    for horizontal in itertools.combinations(range(p + q), p):
        horizontal = set(horizontal)
        path, i, j, vertical_seen, inversions = [(0, 0)], 0, 0, 0, 0
        for step in range(p + q):
            if step in horizontal:
                i += 1
                inversions += vertical_seen
            else:
                j += 1
                vertical_seen += 1
            path.append((i, j))
        shuffles.append(StaircaseShuffle(path, -1 if inversions % 2 else 1))
    return shuffles

def _check_generator(chain, preorder):
    if not chain or any(u == v or not preorder.le(u, v) for u, v in zip(chain, chain[1:])):
        raise congruence.DomainError("%r is not a reachability generator" % (chain,))

def eilenberg_zilber(x, y, G=None, H=None):
    """
    Sum over shuffles of sign * ((g_{i_0}, h_{j_0}), ..., (g_{i_r}, h_{j_r})),
    as {tuple of product vertices: coefficient}. The same chain lives in the
    box and in the strong product.
    """
    if G is not None: _check_generator(x, reachability_preorder(G))
    if H is not None: _check_generator(y, reachability_preorder(H))

    chain = {}
    for shuffle in enumerate_shuffles(len(x) - 1, len(y) - 1):
        label = tuple(product_vertex(x[i], y[j]) for i, j in shuffle.path)
        chain[label] = chain.get(label, 0) + shuffle.sign
    return {label: c for label, c in chain.items() if c}

def _chain_boundary(chain):
    out = {}
    for label, coefficient in chain.items():
        if len(label) == 1: continue
        for sign, face in _face_terms(label):
            out[face] = out.get(face, 0) + sign * coefficient
    return {label: c for label, c in out.items() if c}

def _add_into(total, chain, factor=1):
    for label, coefficient in chain.items():
        total[label] = total.get(label, 0) + factor * coefficient

def ez_pair_commutes(x, y):
    """boundary(EZ(x (x) y)) == EZ(dx (x) y) + (-1)^p EZ(x (x) dy) on one generator pair."""
    p = len(x) - 1
    left = _chain_boundary(eilenberg_zilber(x, y))

    right = {}
    if p > 0:
        for sign, face in _face_terms(x): _add_into(right, eilenberg_zilber(face, y), sign)
    if len(y) > 1:
        for sign, face in _face_terms(y): _add_into(right, eilenberg_zilber(x, face), sign * (-1) ** p)
    return left == {label: c for label, c in right.items() if c}

def ez_chain_check(G, H, max_total, cap=None):
    """Every generator pair of total degree <= max_total."""
    cap = generator_cap(cap)
    G, H = G.without_loops(), H.without_loops()
    generators_G = _enumerate_chains(list(G.vertices), reachability_preorder(G).le, max_total, cap)
    generators_H = _enumerate_chains(list(H.vertices), reachability_preorder(H).le, max_total, cap)

    report = CheckReport("eilenberg-zilber")
    for total in range(max_total + 1):
        checked = failures = 0
        for p in range(total + 1):
            for x in generators_G[p]:
                for y in generators_H[total - p]:
                    checked += 1
                    if not ez_pair_commutes(x, y): failures += 1
        report.add_row(degree=total, pairs=checked, failures=failures)
        report.expect(failures == 0, "shuffle map is not a chain map in degree %d" % total)
    return report

def ez_chain_map(C_G, C_H, C_product):
    """The shuffle map from the tensor product of two truncated reachability complexes."""
    tensor = tensor_complex(C_G, C_H)

    def image(k, label):
        return [(c, chain) for chain, c in eilenberg_zilber(label[0], label[1]).items()]

    return labeled_chain_map(tensor, C_product, image)


#########################################################################################
#
# KUNNETH
#
#########################################################################################

def _convolution(left, right, k):
    return sum(left[i] * right[k - i] for i in range(k + 1))

def kunneth_check(G, H, ring, max_degree=DEFAULT_MAX_DEGREE, product=BOTH, iso_degree=None, cap=None):
    """
    Betti numbers of the product against the convolution of those of the
    factors, and the shuffle map being a homology isomorphism in degrees up
    to iso_degree (max_degree when not given).
    """
    check_field(ring, "the Kunneth convolution check")
    products = [BOX, STRONG] if product == BOTH else [product]
    if any(name not in PRODUCTS for name in products):
        raise congruence.DomainError("unknown product %s" % product)

    betti_G = reachability_homology(G, ring, max_degree, cap=cap).betti_numbers()
    betti_H = reachability_homology(H, ring, max_degree, cap=cap).betti_numbers()

    report = CheckReport("kunneth", ring)
    report.details["betti"] = {"G": betti_G, "H": betti_H}

    top = max_degree if iso_degree is None else min(iso_degree, max_degree)
    for name in products:
        P = PRODUCTS[name](G, H)
        betti_P = reachability_homology(P, ring, max_degree, cap=cap).betti_numbers()
        report.details["betti"][name] = betti_P

        for k in range(max_degree + 1):
            expected = _convolution(betti_G, betti_H, k)
            report.add_row(product=name, degree=k, expected=expected, computed=betti_P[k])
            report.expect(expected == betti_P[k], "%s product: betti_%d is %d, convolution gives %d" % (name, k, betti_P[k], expected))

        _check_shuffle_isomorphism(report, G, H, P, name, ring, top, cap)

    if product == BOTH:
        transport = transport_check(G, H, ring, max_degree, cap)
        report.details["transport"] = transport.passed
        report.expect(transport.passed, "box and strong products have different reachability homology")

    return report

def _check_shuffle_isomorphism(report, G, H, P, name, ring, degree, cap):
    try:
        C_G = reachability_complex(G, degree + 1, ring, cap)
        C_H = reachability_complex(H, degree + 1, ring, cap)
        C_P = reachability_complex(P, degree + 1, ring, cap)
        phi = ez_chain_map(C_G, C_H, C_P)
    except congruence.ResourceCapError as error:
        report.inconclusive("%s product: shuffle map skipped, %s" % (name, error.detail))
        return

    report.expect(verify_chain_map(phi), "%s product: shuffle map is not a chain map" % name)
    isomorphic = isomorphism_degrees(phi, degree)
    report.details.setdefault("shuffle_isomorphism", {})[name] = isomorphic
    for k in range(degree + 1):
        report.expect(k in isomorphic, "%s product: shuffle map is not an isomorphism on H_%d" % (name, k))

def transport_check(G, H, ring, max_degree=DEFAULT_MAX_DEGREE, cap=None):
    """The identity on vertices G box H -> G strong H is a homology isomorphism."""
    box, strong = box_product(G, H), strong_product(G, H)
    report = CheckReport("box-strong-transport", ring)
    report.expect(reachability_preorder(box) == reachability_preorder(strong), "reachability preorders differ")

    identity = DiGraphMap(box, strong, {v: v for v in box.vertices})
    phi = induced_chain_map(identity, condensation_order_complex(box, ring, cap), condensation_order_complex(strong, ring, cap))
    isomorphic = isomorphism_degrees(phi, max_degree)
    for k in range(max_degree + 1):
        report.expect(k in isomorphic, "identity is not an isomorphism on H_%d" % k)
    return report

def naturality_check(f, g, ring=None, max_degree=2, product=BOX, cap=None):
    """EZ' o (f_* (x) g_*) == (f x g)_* o EZ degreewise."""
    ring = ring or Ring()
    build = PRODUCTS[product]
    complexes = {graph: reachability_complex(graph, max_degree, ring, cap)
                 for graph in (f.source, f.target, g.source, g.target)}
    source_product = reachability_complex(build(f.source, g.source), max_degree, ring, cap)
    target_product = reachability_complex(build(f.target, g.target), max_degree, ring, cap)

    shuffle_source = ez_chain_map(complexes[f.source], complexes[g.source], source_product)
    shuffle_target = ez_chain_map(complexes[f.target], complexes[g.target], target_product)

    def tensor_image(k, label):
        left = tuple(f(v) for v in label[0])
        right = tuple(g(v) for v in label[1])
        if any(a == b for a, b in zip(left, left[1:])) or any(a == b for a, b in zip(right, right[1:])): return []
        return [(1, (left, right))]

    on_tensor = labeled_chain_map(shuffle_source.source, shuffle_target.source, tensor_image)
    on_product = induced_chain_map(product_map(f, g, build), source_product, target_product)

    report = CheckReport("ez-naturality", ring)
    left, right = shuffle_target.compose(on_tensor), on_product.compose(shuffle_source)
    for k in range(min(left.top_degree, right.top_degree) + 1):
        report.expect(linalg.equal(left.matrices[k], right.matrices[k]), "naturality square fails in degree %d" % k)
    return report


#########################################################################################
#
# INTEGRAL KUNNETH
#
#########################################################################################

def invariant_factors_of(orders):
    """Invariant factors d_1 | d_2 | ... of a direct sum of cyclic groups."""
    powers = {}
    for order in orders:
        for prime, exponent in factorint(order).items():
            powers.setdefault(prime, []).append(prime ** exponent)

    length = max((len(values) for values in powers.values()), default=0)
    factors = [1] * length
    for values in powers.values():
        for position, value in enumerate(sorted(values, reverse=True)):
            factors[position] *= value
    return sorted(factors)

def kunneth_prediction(groups_G, groups_H, max_degree):
    """
    H_n of a tensor product of free complexes over Z:
    sum_{i+j=n} H_i (x) H_j  +  sum_{i+j=n-1} Tor(H_i, H_j).
    """
    predicted = []
    for n in range(max_degree + 1):
        betti, cyclic = 0, []
        for i in range(n + 1):
            a, b = groups_G[i], groups_H[n - i]
            betti += a.betti * b.betti
            cyclic += a.torsion * b.betti + b.torsion * a.betti
            cyclic += [gcd(s, t) for s in a.torsion for t in b.torsion]
        for i in range(n):
            a, b = groups_G[i], groups_H[n - 1 - i]
            cyclic += [gcd(s, t) for s in a.torsion for t in b.torsion]
        predicted.append(HomologyGroup(n, betti, invariant_factors_of([d for d in cyclic if d > 1])))
    return predicted

def integer_kunneth_check(G, H, max_degree=3, product=BOX, cap=None):
    ring = Ring()
    groups_G = reachability_homology(G, ring, max_degree, cap=cap).groups
    groups_H = reachability_homology(H, ring, max_degree, cap=cap).groups
    computed = reachability_homology(PRODUCTS[product](G, H), ring, max_degree, cap=cap).groups

    report = CheckReport("kunneth-integral", ring)
    for expected, group in zip(kunneth_prediction(groups_G, groups_H, max_degree), computed):
        report.add_row(product=product, degree=group.degree, expected=expected.describe(), computed=group.describe())
        report.expect(expected == group, "H_%d is %s, Kunneth predicts %s" % (group.degree, group.describe(), expected.describe()))
    return report

def algebraic_kunneth_check(C, D, max_degree):
    """Kunneth with Tor for two complete complexes over Z."""
    tensor = tensor_complex(C, D)
    predicted = kunneth_prediction([homology(C, k) for k in range(max_degree + 1)],
                                   [homology(D, k) for k in range(max_degree + 1)], max_degree)
    return [homology(tensor, k) for k in range(max_degree + 1)] == predicted
