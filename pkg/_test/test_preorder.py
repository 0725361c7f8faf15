__author__ = 'reachhom'

import random
import unittest

from reachhom.util import congruence
from reachhom.graphs.digraph import DiGraph, box_product
from reachhom.graphs.preorder import Preorder, MonotoneMap, reachability_preorder, condensation, iota, \
    preorder_product, nat_trans_exists, adjunction_check, is_dwyer
from reachhom.graphs.catalog import directed_cycle, directed_path, hexagon_b
from reachhom.graphs.generators import random_digraph, random_preorder


class PreorderTest(unittest.TestCase):

    def chain(self):
        return Preorder.chain(["x", "y", "z"])

    def dwyer(self, elements):
        Q = self.chain()
        return is_dwyer(MonotoneMap(Q.restrict(elements), Q, {x: x for x in elements}))

    def test_cycle_is_one_class(self):
        preorder = reachability_preorder(directed_cycle(3))
        self.assertTrue(preorder.leq.all())
        self.assertFalse(preorder.is_antisymmetric())

    def test_reachability_is_transitive(self):
        rng = random.Random(11)
        for _ in range(10):
            self.assertTrue(reachability_preorder(random_digraph(rng, 6)).is_transitive())

    def test_condensation(self):
        G = DiGraph(["a", "b", "c"], [("a", "b"), ("b", "a"), ("b", "c")])
        self.assertEqual(condensation(G).to_dict(), {"classes": [["a", "b"], ["c"]], "order": [[0, 1]]})

        acyclic = condensation(hexagon_b())
        self.assertEqual(len(acyclic.classes), 6)
        self.assertTrue(acyclic.poset.is_antisymmetric())

    def test_relation_must_be_a_preorder(self):
        self.assertRaises(congruence.DomainError, Preorder, ["x", "y"], [[True, False], [False, False]])
        self.assertRaises(congruence.DomainError, Preorder, ["x", "y", "z"],
                          [[True, True, False], [False, True, True], [False, False, True]])

    def test_iota_round_trip(self):
        P = self.chain()
        self.assertEqual(reachability_preorder(iota(P)), P)

    def test_product(self):
        Q = preorder_product(Preorder.chain(["a", "b"]), Preorder.chain(["c", "d"]))
        self.assertEqual(len(Q), 4)
        self.assertEqual(int(Q.leq.sum()), 9)

    def test_natural_transformation(self):
        P = self.chain()
        low = MonotoneMap(P, P, {x: "x" for x in P.elements})
        identity = MonotoneMap(P, P, {x: x for x in P.elements})
        self.assertTrue(nat_trans_exists(low, identity))
        self.assertFalse(nat_trans_exists(identity, low))

    def test_monotone_map(self):
        P = self.chain()
        self.assertRaises(congruence.DomainError, MonotoneMap, P, P, {"x": "z", "y": "x", "z": "z"})

    def test_adjunction(self):
        self.assertTrue(adjunction_check(directed_path(3), Preorder.chain(["x", "y"])))
        self.assertTrue(adjunction_check(directed_cycle(3), Preorder.discrete(["x", "y"])))
        self.assertRaises(congruence.RefusalError, adjunction_check, directed_path(6), self.chain())

    def test_adjunction_on_random_instances(self):
        rng = random.Random(4)
        for _ in range(50):
            G = random_digraph(rng, rng.randint(1, 4), density=rng.choice([0.2, 0.4, 0.6]))
            P = random_preorder(rng, rng.randint(1, 4), density=rng.choice([0.2, 0.4]))
            self.assertTrue(adjunction_check(G, P))

    def test_iota_round_trip_on_random_preorders(self):
        rng = random.Random(5)
        for _ in range(100):
            P = random_preorder(rng, rng.randint(1, 6))
            self.assertEqual(reachability_preorder(iota(P)), P)

    def test_reachability_of_box_products(self):
        rng = random.Random(6)
        for _ in range(50):
            G = random_digraph(rng, rng.randint(1, 4), prefix="g")
            H = random_digraph(rng, rng.randint(1, 4), prefix="h")
            self.assertEqual(reachability_preorder(box_product(G, H)),
                             preorder_product(reachability_preorder(G), reachability_preorder(H)))

    def test_dwyer(self):
        witness = self.dwyer(["x"])
        self.assertIsNotNone(witness)
        self.assertTrue(witness.verify())
        self.assertEqual(witness.p["z"], "x")

        self.assertIsNone(self.dwyer(["y"]))

    def test_dwyer_needs_a_full_inclusion(self):
        Q = self.chain()
        self.assertRaises(congruence.ShapeError, is_dwyer, MonotoneMap(Preorder.discrete(["x", "y"]), Q, {"x": "x", "y": "y"}))


if __name__ == "__main__":
    unittest.main()
