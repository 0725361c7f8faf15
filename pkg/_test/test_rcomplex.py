__author__ = 'reachhom'

"""

reachability complexes: the hexagon table, homotopy invariance, relative
homology and generator caps

"""

import os
import random
import unittest
from unittest import mock

from reachhom.util import congruence
from reachhom.util.rh_util import Ring, generator_cap, CAP_ENVIRONMENT_VARIABLE, DEFAULT_GENERATOR_CAP
from reachhom.util.rh_objects import HomologyGroup
from reachhom.graphs.digraph import DiGraph, DiGraphMap
from reachhom.graphs import catalog
from reachhom.graphs.generators import random_digraph, random_thickened_dag, random_long_homotopic_pair
from reachhom.homology import linalg
from reachhom.homology.homalg import homology, homology_summary, verify_chain_map, verify_chain_homotopy, \
    induced_homology_map
from reachhom.homology.rcomplex import METHOD_BOTH, METHOD_TRUNCATED, METHOD_CONDENSATION, reachability_complex, \
    condensation_order_complex, reachability_homology, induced_chain_map, long_homotopy_exists, prism_homotopy, \
    relative_complex, pair_sequence_check


class ReachabilityComplexTest(unittest.TestCase):

    def assertBetti(self, G, betti, ring=None, max_degree=4, method=METHOD_CONDENSATION):
        summary = reachability_homology(G, ring or Ring(), max_degree, method)
        self.assertEqual(summary.groups, [HomologyGroup(k, b) for k, b in enumerate(betti)])

    def test_hexagon_table(self):
        self.assertBetti(catalog.hexagon_a(), [1, 1, 0, 0, 0])
        self.assertBetti(catalog.hexagon_b(), [1, 0, 0, 0, 0])
        self.assertBetti(catalog.hexagon_c(), [1, 0, 0, 0, 0])

    def test_hexagon_table_both_methods(self):
        for G, betti in ((catalog.hexagon_a(), [1, 1]), (catalog.hexagon_b(), [1, 0]), (catalog.hexagon_c(), [1, 0])):
            self.assertBetti(G, betti, Ring(Ring.RATIONALS), max_degree=1, method=METHOD_BOTH)

    def test_triangles_look_like_a_point(self):
        for name, G in catalog.triangles().items():
            self.assertBetti(G, [1, 0], max_degree=1, method=METHOD_BOTH)
            self.assertBetti(G, [1, 0, 0, 0, 0])

    def test_empty_graph(self):
        summary = reachability_homology(DiGraph(), Ring(), 2)
        self.assertEqual(summary.betti_numbers(), [0, 0, 0])

    def test_loops_do_not_matter(self):
        G = DiGraph(["a", "b"], [("a", "a"), ("a", "b"), ("b", "b")])
        self.assertBetti(G, [1, 0], max_degree=1, method=METHOD_BOTH)

    def test_acyclic_complexes_agree(self):
        G = catalog.hexagon_a()
        raw = reachability_complex(G, max_degree=1)
        self.assertTrue(raw.complete)
        self.assertEqual(raw.ranks()[:2], condensation_order_complex(G).ranks())

    def test_truncated_agrees_with_condensation(self):
        rng = random.Random(7)
        for trial in range(200):
            if trial % 2: G = random_thickened_dag(rng, rng.randint(1, 7))
            else:         G = random_digraph(rng, rng.randint(1, 4))
            truncated = reachability_homology(G, Ring(), 4, METHOD_TRUNCATED)
            self.assertEqual(truncated, reachability_homology(G, Ring(), 4, METHOD_CONDENSATION), G.edge_list())

    def test_generator_cap(self):
        self.assertRaises(congruence.ResourceCapError, reachability_complex, catalog.directed_cycle(4), 5, None, 10)

        with mock.patch.dict(os.environ, {CAP_ENVIRONMENT_VARIABLE: "7"}):
            self.assertEqual(generator_cap(), 7)
            self.assertEqual(generator_cap(3), 3)
            with self.assertRaises(congruence.ResourceCapError) as context:
                reachability_complex(catalog.directed_cycle(4), 2)
            self.assertEqual(context.exception.cap, 7)

        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(generator_cap(), DEFAULT_GENERATOR_CAP)

    def test_homotopy_invariance(self):
        rng = random.Random(2024)
        ring = Ring()
        for _ in range(5):
            source = random_digraph(rng, 4, prefix="s")
            target = random_digraph(rng, 4, prefix="t")
            f, g = random_long_homotopic_pair(rng, source, target)
            self.assertTrue(long_homotopy_exists(f, g))

            C = reachability_complex(source, 2, ring)
            D = reachability_complex(target, 2, ring)
            f_star, g_star = induced_chain_map(f, C, D), induced_chain_map(g, C, D)
            self.assertTrue(verify_chain_map(f_star))
            self.assertTrue(verify_chain_homotopy(prism_homotopy(f, g, C, D), f_star, g_star))

    def test_homotopy_invariance_on_many_pairs(self):
        rng = random.Random(4)
        ring = Ring(Ring.PRIME_FIELD, 2)
        for _ in range(200):
            source = random_thickened_dag(rng, rng.randint(1, 6), prefix="s")
            target = random_thickened_dag(rng, rng.randint(1, 6), prefix="t")
            f, g = random_long_homotopic_pair(rng, source, target)

            C, D = reachability_complex(source, 4, ring), reachability_complex(target, 4, ring)
            f_star, g_star = induced_chain_map(f, C, D), induced_chain_map(g, C, D)
            s = prism_homotopy(f, g, C, D)
            self.assertEqual(len(s), 5)
            self.assertTrue(verify_chain_homotopy(s, f_star, g_star))
            for k in range(5):
                self.assertTrue(linalg.equal(induced_homology_map(f_star, k), induced_homology_map(g_star, k)))

    def test_hexagon_b_retracts_to_its_sink(self):
        G = catalog.hexagon_b()
        sink = DiGraphMap(G, G, {v: catalog.HEXAGON_B_SINK for v in G.vertices})
        identity = DiGraphMap(G, G, {v: v for v in G.vertices})
        self.assertTrue(long_homotopy_exists(identity, sink))

        C = reachability_complex(G, 2)
        s = prism_homotopy(identity, sink, C, C)
        self.assertEqual(len(s), 3)
        self.assertTrue(verify_chain_homotopy(s, induced_chain_map(identity, C, C), induced_chain_map(sink, C, C)))
        self.assertFalse(verify_chain_homotopy(s, induced_chain_map(sink, C, C), induced_chain_map(identity, C, C)))

        self.assertRaises(congruence.PreconditionError, prism_homotopy, sink, identity,
                          reachability_complex(G, 1), reachability_complex(G, 1))

    def test_relative_homology(self):
        G = catalog.hexagon_a()
        for method in (METHOD_TRUNCATED, METHOD_CONDENSATION):
            C = relative_complex(G, ["a", "b"], max_degree=2, method=method)
            self.assertEqual(homology_summary(C, 2).betti_numbers(), [0, 1, 0])
        self.assertTrue(pair_sequence_check(G, ["a", "b"], max_degree=2).passed)

    def test_relative_homology_needs_an_induced_subgraph(self):
        G = catalog.hexagon_a()
        self.assertRaises(congruence.ShapeError, relative_complex, G, DiGraph(["a", "b"]))
        self.assertRaises(congruence.ShapeError, relative_complex, G, ["a", "z"])

    def test_condensation_pairs_need_whole_classes(self):
        G = catalog.directed_cycle(3)
        self.assertRaises(congruence.PreconditionError, relative_complex, G, ["c0"], 1, None, METHOD_CONDENSATION)
        self.assertEqual(homology(relative_complex(G, ["c0"], 1), 1).betti, 0)


if __name__ == "__main__":
    unittest.main()
