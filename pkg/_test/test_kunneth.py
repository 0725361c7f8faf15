__author__ = 'reachhom'

import math
import random
import unittest

from reachhom.util import congruence
from reachhom.util.rh_util import Ring
from reachhom.util.rh_objects import HomologyGroup, CheckReport
from reachhom.graphs.digraph import DiGraph, constant_map, identity_map, product_vertex
from reachhom.graphs.catalog import directed_path, directed_cycle, hexagon_a, rp2
from reachhom.graphs.simplicial import hasse_diagram
from reachhom.graphs.generators import random_digraph, random_thickened_dag
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex, homology, tensor_complex
from reachhom.homology.rcomplex import simplicial_chain_complex, condensation_order_complex
from reachhom.homology.kunneth import BOX, STRONG, BOTH, enumerate_shuffles, eilenberg_zilber, ez_pair_commutes, \
    ez_chain_check, kunneth_check, transport_check, naturality_check, invariant_factors_of, kunneth_prediction, \
    integer_kunneth_check, algebraic_kunneth_check


class KunnethTest(unittest.TestCase):

    def rationals(self):
        return Ring(Ring.RATIONALS)

    def times_two(self):
        ring = Ring()
        return FreeChainComplex(ring, [["y"], ["x"]], [linalg.zeros((0, 1), ring), linalg.build([[2]], ring)],
                                complete=True)

    def test_shuffle_counts(self):
        for p in range(4):
            for q in range(4):
                shuffles = enumerate_shuffles(p, q)
                self.assertEqual(len(shuffles), math.comb(p + q, p))
                self.assertTrue(all(s.p == p and s.q == q for s in shuffles))

    def test_square_shuffles(self):
        x, y = ("a", "b"), ("c", "d")
        self.assertEqual(eilenberg_zilber(x, y),
                         {(product_vertex("a", "c"), product_vertex("b", "c"), product_vertex("b", "d")): 1,
                          (product_vertex("a", "c"), product_vertex("a", "d"), product_vertex("b", "d")): -1})
        self.assertTrue(ez_pair_commutes(x, y))
        self.assertTrue(ez_pair_commutes(("a", "b", "c"), ("d", "e")))

    def test_shuffle_needs_generators(self):
        G = directed_path(2)
        self.assertRaises(congruence.DomainError, eilenberg_zilber, ("p1", "p0"), ("p0",), G, G)

    def test_shuffle_is_a_chain_map(self):
        report = ez_chain_check(directed_path(3), hexagon_a(), 3)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.rows), 4)

    def test_shuffle_is_a_chain_map_on_random_pairs(self):
        rng = random.Random(5)
        for _ in range(50):
            G = random_thickened_dag(rng, rng.randint(1, 4), prefix="g")
            H = random_digraph(rng, rng.randint(1, 3), prefix="h")
            report = ez_chain_check(G, H, 5)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual([row["degree"] for row in report.rows], list(range(6)))

    def test_torus(self):
        report = kunneth_check(hexagon_a(), hexagon_a(), self.rationals(), max_degree=2, product=BOX)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.details["betti"][BOX], [1, 2, 1])
        self.assertEqual(report.details["shuffle_isomorphism"][BOX], [0, 1, 2])

        report = kunneth_check(hexagon_a(), hexagon_a(), self.rationals(), max_degree=2, product=BOX, iso_degree=1)
        self.assertEqual(report.details["shuffle_isomorphism"][BOX], [0, 1])

    def test_cycle_times_zigzag_over_f2(self):
        zigzag = DiGraph(["h0", "h1", "h2"], [("h0", "h1"), ("h2", "h1")])
        report = kunneth_check(directed_cycle(4), zigzag, Ring(Ring.PRIME_FIELD, 2), max_degree=2, product=BOTH)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.details["shuffle_isomorphism"], {BOX: [0, 1, 2], STRONG: [0, 1, 2]})

    def test_both_products(self):
        report = kunneth_check(hexagon_a(), directed_path(2), Ring(Ring.PRIME_FIELD, 3), max_degree=2, product=BOTH)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(report.details["betti"][STRONG], [1, 1, 0])
        self.assertTrue(report.details["transport"])

    def test_kunneth_on_random_pairs(self):
        rng = random.Random(6)
        for ring in (self.rationals(), Ring(Ring.PRIME_FIELD, 2)):
            for _ in range(50):
                G = random_thickened_dag(rng, rng.randint(1, 4), max_class=2, prefix="g")
                H = random_thickened_dag(rng, rng.randint(1, 4), max_class=2, prefix="h")
                report = kunneth_check(G, H, ring, max_degree=3, product=BOTH, iso_degree=1)
                self.assertEqual(report.verdict, CheckReport.PASSED, report.failures)
                self.assertEqual(report.details["shuffle_isomorphism"], {BOX: [0, 1], STRONG: [0, 1]})

    def test_kunneth_needs_a_field(self):
        self.assertRaises(congruence.DomainError, kunneth_check, hexagon_a(), hexagon_a(), Ring())

    def test_transport(self):
        self.assertTrue(transport_check(directed_path(2), directed_cycle(3), self.rationals(), 2).passed)

    def test_naturality(self):
        f = identity_map(directed_path(2))
        g = constant_map(hexagon_a(), directed_path(2, prefix="q"), "q0")
        self.assertTrue(naturality_check(f, g, self.rationals(), max_degree=2).passed)

    def test_invariant_factors_of(self):
        self.assertEqual(invariant_factors_of([2, 3]), [6])
        self.assertEqual(invariant_factors_of([2, 2]), [2, 2])
        self.assertEqual(invariant_factors_of([4, 2, 3]), [2, 12])
        self.assertEqual(invariant_factors_of([]), [])

    def test_prediction_with_tor(self):
        projective = [HomologyGroup(0, 1), HomologyGroup(1, 0, [2]), HomologyGroup(2, 0), HomologyGroup(3, 0)]
        predicted = kunneth_prediction(projective, projective, 3)
        self.assertEqual(predicted, [HomologyGroup(0, 1), HomologyGroup(1, 0, [2, 2]),
                                     HomologyGroup(2, 0, [2]), HomologyGroup(3, 0, [2])])

    def test_integral_kunneth(self):
        report = integer_kunneth_check(hexagon_a(), directed_path(2), max_degree=2)
        self.assertEqual(report.verdict, CheckReport.PASSED)

        self.assertTrue(algebraic_kunneth_check(simplicial_chain_complex(rp2(), Ring()), self.times_two(), 3))

    def test_integral_kunneth_on_the_projective_plane(self):
        projective = hasse_diagram(rp2())
        report = integer_kunneth_check(projective, directed_path(2), max_degree=3)
        self.assertEqual(report.verdict, CheckReport.PASSED, report.failures)
        self.assertEqual([row["computed"] for row in report.rows], ["R", "Z/2", "0", "0"])

        C = condensation_order_complex(projective, Ring())
        self.assertEqual(homology(C, 1), HomologyGroup(1, 0, [2]))
        self.assertTrue(algebraic_kunneth_check(C, self.times_two(), 3))
        self.assertEqual(homology(tensor_complex(C, self.times_two()), 2), HomologyGroup(2, 0, [2]))

    def test_unknown_product(self):
        self.assertRaises(congruence.DomainError, kunneth_check, DiGraph(["v"]), DiGraph(["w"]), self.rationals(),
                          1, "tensor")


if __name__ == "__main__":
    unittest.main()
