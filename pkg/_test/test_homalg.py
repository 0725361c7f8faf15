__author__ = 'reachhom'

"""

exact linear algebra and homological algebra over Z, Q and GF(p)

"""

import unittest
from unittest import mock

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from reachhom.util import congruence
from reachhom.util.rh_util import Ring
from reachhom.util.rh_objects import HomologyGroup
from reachhom.graphs.catalog import directed_cycle, rp2
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex, GroupPresentation, homology, homology_summary, \
    identity_chain_map, zero_chain_map, is_homology_isomorphism, mapping_cone, tensor_complex, quotient_complex, \
    subcomplex, check_exact_sequence, verify_chain_map, homology_presentation, induced_homology_map, \
    isomorphism_degrees
from reachhom.homology.rcomplex import reachability_complex, simplicial_chain_complex


class HomAlgTest(unittest.TestCase):

    def times_two(self, ring=None):
        """Z --2--> Z in degrees 1 -> 0."""
        ring = ring or Ring()
        return FreeChainComplex(ring, [["y"], ["x"]], [linalg.zeros((0, 1), ring), linalg.build([[2]], ring)],
                                complete=True, name="times two")

    def assertGroups(self, C, expected):
        self.assertEqual([homology(C, k) for k in range(len(expected))], expected)

    def test_smith_form(self):
        M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        ours = linalg.invariant_factors(M)
        theirs = [abs(int(d)) for d in sympy_invariant_factors(Matrix(M), domain=ZZ) if d != 0]
        self.assertEqual(ours, theirs)
        self.assertEqual(linalg.invariant_factors([[2, 0], [0, 3]]), [1, 6])

        U, D, V = linalg.smith_normal_form(M)
        self.assertTrue(linalg.equal(linalg.multiply(linalg.multiply(U, linalg.build(M, Ring())), V), D))

    def test_smith_form_of_the_projective_plane(self):
        d2 = simplicial_chain_complex(rp2(), Ring()).boundary(2)
        self.assertEqual(d2.shape, (15, 10))
        self.assertEqual(linalg.invariant_factors(d2), [1] * 9 + [2])
        theirs = [abs(int(d)) for d in sympy_invariant_factors(Matrix(linalg.int_rows(d2)), domain=ZZ) if d != 0]
        self.assertEqual(linalg.invariant_factors(linalg.int_rows(d2)), theirs)

    def test_cokernel_of_two(self):
        self.assertGroups(self.times_two(), [HomologyGroup(0, 0, [2]), HomologyGroup(1, 0)])
        self.assertGroups(self.times_two(Ring(Ring.RATIONALS)), [HomologyGroup(0, 0), HomologyGroup(1, 0)])
        self.assertGroups(self.times_two(Ring(Ring.PRIME_FIELD, 2)), [HomologyGroup(0, 1), HomologyGroup(1, 1)])

    def test_rings(self):
        self.assertEqual(Ring.parse("Fp:7"), Ring(Ring.PRIME_FIELD, 7))
        self.assertRaises(congruence.DomainError, Ring.parse, "Fp:4")
        self.assertRaises(congruence.DomainError, Ring.parse, "R")
        self.assertTrue(Ring.parse("Q").is_field)
        self.assertFalse(Ring.parse("Z").is_field)

    def test_boundary_of_boundary(self):
        ring = Ring()
        d1 = linalg.build([[1], [-1]], ring)
        d2 = linalg.build([[1, 0]], ring)
        self.assertRaises(congruence.ShapeError, FreeChainComplex, ring, [["a", "b"], ["e"], ["f"]],
                          [linalg.zeros((0, 2), ring), d1, d2])
        self.assertRaises(congruence.ConsistencyError, FreeChainComplex, ring, [["a", "b"], ["e"], ["f"]],
                          [linalg.zeros((0, 2), ring), linalg.build([[-1], [1]], ring), linalg.build([[1]], ring)])

    def test_truncated_degrees_are_refused(self):
        C = reachability_complex(directed_cycle(3), max_degree=1)
        self.assertFalse(C.complete)
        self.assertEqual(homology_summary(C).betti_numbers(), [1, 0])
        self.assertRaises(congruence.RangeError, homology, C, 2)

    def test_identity_is_an_isomorphism(self):
        C = self.times_two()
        phi = identity_chain_map(C)
        self.assertTrue(verify_chain_map(phi))
        self.assertTrue(is_homology_isomorphism(phi, 0))
        self.assertFalse(is_homology_isomorphism(zero_chain_map(C, C), 0))

        cone = mapping_cone(phi, 3)
        self.assertTrue(all(homology(cone, k).is_zero() for k in range(3)))

    def test_induced_map_on_torsion(self):
        C = self.times_two()
        presentation = homology_presentation(C, 0)
        self.assertEqual(presentation.orders, [2])
        self.assertEqual(linalg.int_rows(induced_homology_map(identity_chain_map(C), 0)), [[1]])

    def test_tensor_with_torsion(self):
        tensor = tensor_complex(self.times_two(), self.times_two())
        self.assertEqual(tensor.ranks(), [1, 2, 1])
        self.assertGroups(tensor, [HomologyGroup(0, 0, [2]), HomologyGroup(1, 0, [2]), HomologyGroup(2, 0)])

    def test_subcomplex_must_be_closed(self):
        C = self.times_two()
        self.assertRaises(congruence.SubcomplexError, quotient_complex, C, [[], ["x"]])
        self.assertRaises(congruence.ShapeError, subcomplex, C, [["nope"]])

        quotient = quotient_complex(C, [["y"], []])
        self.assertEqual(quotient.ranks(), [0, 1])
        self.assertEqual(homology(quotient, 1), HomologyGroup(1, 1))

    def test_exact_sequences(self):
        ring = Ring()
        groups = [GroupPresentation([]), GroupPresentation([0]), GroupPresentation([0]),
                  GroupPresentation([2]), GroupPresentation([])]
        exact = [linalg.zeros((1, 0), ring), linalg.build([[2]], ring), linalg.build([[1]], ring),
                 linalg.zeros((0, 1), ring)]
        self.assertTrue(check_exact_sequence(groups, exact, ring))

        broken = list(exact)
        broken[1] = linalg.build([[3]], ring)
        self.assertFalse(check_exact_sequence(groups, broken, ring))

        self.assertRaises(congruence.ShapeError, check_exact_sequence, groups, exact[:3], ring)

    def test_matrices_stay_sparse(self):
        C = reachability_complex(directed_cycle(4), max_degree=3, ring=Ring(Ring.PRIME_FIELD, 2))
        for k in range(C.top_degree + 1):
            self.assertEqual(C.boundary(k).rep.fmt, "sparse")
        self.assertEqual(linalg.multiply(C.boundary(2), C.boundary(3)).rep.fmt, "sparse")
        self.assertEqual(linalg.add(C.boundary(3), C.boundary(3)).rep.fmt, "sparse")
        self.assertTrue(linalg.is_zero(linalg.multiply(C.boundary(3), C.boundary(4))))

        cone = mapping_cone(identity_chain_map(C), C.top_degree)
        self.assertTrue(all(cone.boundary(k).rep.fmt == "sparse" for k in range(cone.top_degree + 1)))

    def test_boundary_check_follows_debug_logging(self):
        with mock.patch.object(FreeChainComplex, "verify", return_value=True) as verify:
            reachability_complex(directed_cycle(3), max_degree=2)
            verify.assert_not_called()

            with self.assertLogs("reachhom", level="DEBUG"):
                reachability_complex(directed_cycle(3), max_degree=2)
            verify.assert_called_once_with()

            self.times_two()
            self.assertEqual(verify.call_count, 2)

    def test_isomorphism_degrees(self):
        C = self.times_two()
        self.assertEqual(isomorphism_degrees(identity_chain_map(C), 1), [0, 1])
        self.assertEqual(isomorphism_degrees(zero_chain_map(C, C), 1), [])

        D = reachability_complex(directed_cycle(3), max_degree=2)
        self.assertEqual(isomorphism_degrees(identity_chain_map(D), 2), [0, 1, 2])


if __name__ == "__main__":
    unittest.main()
