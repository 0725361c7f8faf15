__author__ = 'reachhom'

import random
import unittest

from reachhom.util import congruence
from reachhom.util.rh_util import Ring
from reachhom.graphs.digraph import DiGraph
from reachhom.graphs import catalog
from reachhom.graphs.generators import random_digraph
from reachhom.homology.mpss import length_filtration, magnitude_complex, spectral_page, associated_graded, \
    magnitude_oracle_check, convergence_check


class SpectralSequenceTest(unittest.TestCase):

    def edge(self):
        return DiGraph(["a", "b"], [("a", "b")])

    def test_magnitude_of_an_edge(self):
        magnitude = magnitude_complex(self.edge(), max_degree=2)
        self.assertEqual(magnitude.rank(0, 0), 2)
        self.assertEqual(magnitude.rank(1, 1), 1)
        self.assertEqual(magnitude.ranks(), {(0, 0): 2, (1, 1): 1})

    def test_first_page_of_an_edge(self):
        F = length_filtration(self.edge(), max_degree=2)
        self.assertTrue(F.is_compatible())
        first = spectral_page(F, 1)
        self.assertEqual(first.ranks, {(0, 0): 2, (1, 1): 1})
        self.assertEqual(spectral_page(F, 2).ranks, {(0, 0): 1})

    def test_filtration_lengths(self):
        F = length_filtration(catalog.directed_path(3), max_degree=2)
        self.assertTrue(F.bounded)
        self.assertEqual(F.max_length(), 2)
        self.assertEqual(F.count(1, 1), 2)
        self.assertEqual(F.count(1, 2), 3)

    def test_magnitude_oracle(self):
        for G in (catalog.hexagon_a(), catalog.hexagon_b(), catalog.directed_cycle(3)):
            report = magnitude_oracle_check(G, max_degree=2)
            self.assertTrue(report.passed, report.failures)

    def test_convergence(self):
        for G in (catalog.hexagon_a(), catalog.hexagon_c(), catalog.directed_path(4)):
            report = convergence_check(G, max_degree=2)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual([row["limit"] for row in report.rows], [row["betti"] for row in report.rows])

    def test_convergence_on_random_graphs(self):
        rng = random.Random(5)
        for _ in range(5):
            report = convergence_check(random_digraph(rng, 4), Ring(Ring.PRIME_FIELD, 2), max_degree=2)
            self.assertTrue(report.passed, report.failures)

    def test_pages_on_many_graphs_over_f2(self):
        rng = random.Random(11)
        field = Ring(Ring.PRIME_FIELD, 2)
        for _ in range(100):
            G = random_digraph(rng, rng.randint(1, 5), density=0.3)
            report = magnitude_oracle_check(G, field, max_degree=3)
            self.assertTrue(report.passed, report.failures)

            report = convergence_check(G, field, max_degree=3)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual([row["limit"] for row in report.rows], [row["betti"] for row in report.rows])

    def test_diagonal_of_the_second_page(self):
        report = convergence_check(catalog.hexagon_a(), max_degree=2)
        self.assertEqual(report.details["e2_diagonal"], {0: 1, 1: 1})

    def test_pages_shrink(self):
        F = length_filtration(catalog.directed_cycle(3), max_degree=2)
        totals = [sum(spectral_page(F, r).ranks.values()) for r in range(1, F.max_length() + 2)]
        self.assertEqual(totals, sorted(totals, reverse=True))
        self.assertEqual(spectral_page(F, F.max_length() + 1), associated_graded(F))

    def test_page_limit_makes_the_check_inconclusive(self):
        report = convergence_check(catalog.directed_cycle(3), max_degree=2, max_page=1)
        stable = report.details["stable_page"]
        self.assertEqual(report.verdict, "inconclusive" if stable > 1 else "pass")

    def test_fields_only(self):
        self.assertRaises(congruence.DomainError, magnitude_complex, self.edge(), 2, Ring())
        self.assertRaises(congruence.DomainError, convergence_check, self.edge(), Ring())

        F = length_filtration(self.edge(), max_degree=1)
        self.assertRaises(congruence.RangeError, spectral_page, F, 0)
        self.assertRaises(congruence.RingMismatchError, spectral_page, F, 1, Ring(Ring.PRIME_FIELD, 5))


if __name__ == "__main__":
    unittest.main()
