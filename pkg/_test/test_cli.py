__author__ = 'reachhom'

"""

the reachhom command line: documents on stdout, error documents and exit
status

"""

import io
import os
import json
import tempfile
import unittest
import contextlib
from unittest import mock

from reachhom.graphs import catalog
from reachhom.util.rh_util import CAP_ENVIRONMENT_VARIABLE, DEFAULT_GENERATOR_CAP
from reachhom.commands.rh_cli import main, build_parser, RunConfig, EXIT_SUCCESS, EXIT_INPUT_ERROR, EXIT_RESOURCE


class CommandLineTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def write(self, name, text):
        path = os.path.join(self.directory.name, name)
        with open(path, "w") as handle: handle.write(text)
        return path

    def call(self, *argv, stdin=None):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            if stdin is None:
                status = main(list(argv))
            else:
                with mock.patch("sys.stdin", io.StringIO(stdin)):
                    status = main(list(argv))
        return status, out.getvalue()

    def call_json(self, *argv, stdin=None):
        status, text = self.call(*argv, stdin=stdin)
        return status, json.loads(text)

    def test_demo_hexagons(self):
        status, document = self.call_json("demo", "hexagons")
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertTrue(document["passed"])
        self.assertEqual([g["betti"] for g in document["graphs"]["A"]["groups"]], [1, 1])
        self.assertEqual([g["betti"] for g in document["graphs"]["B"]["groups"]], [1])

    def test_single_vertex(self):
        status, document = self.call_json("homology", self.write("v.edges", "v\n"))
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(document, {"ring": "Z", "groups": [{"degree": 0, "betti": 1, "torsion": []}]})

    def test_projective_plane_through_stdin(self):
        facets = self.write("rp2.facets", "".join(" ".join(facet) + "\n" for facet in catalog.RP2_FACETS))
        edges = os.path.join(self.directory.name, "rp2.edges")
        self.assertEqual(self.call("simplicial", "--hasse", facets, "--output", edges)[0], EXIT_SUCCESS)

        with open(edges) as handle: text = handle.read()
        status, document = self.call_json("homology", "--ring", "Z", stdin=text)
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertEqual(document["groups"][1], {"degree": 1, "betti": 0, "torsion": [2]})

    def test_missing_file(self):
        status, document = self.call_json("homology", os.path.join(self.directory.name, "none.edges"))
        self.assertEqual(status, EXIT_INPUT_ERROR)
        self.assertEqual(document["error"]["kind"], "parse")

    def test_ring_must_be_prime(self):
        status, document = self.call_json("homology", "--ring", "Fp:4", self.write("v.edges", "v\n"))
        self.assertEqual(status, EXIT_INPUT_ERROR)
        self.assertEqual(document["error"]["kind"], "domain")

    def test_generator_cap(self):
        cycle = self.write("cycle.edges", catalog.directed_cycle(3).to_edge_list_text())
        status, document = self.call_json("homology", "--cap-generators", "2", "--method", "truncated", cycle)
        self.assertEqual(status, EXIT_RESOURCE)
        self.assertEqual(document["error"]["kind"], "resource")

    def test_kunneth_check(self):
        hexagon = self.write("hexagon.edges", catalog.hexagon_a().to_edge_list_text())
        path = self.write("path.edges", catalog.directed_path(2).to_edge_list_text())
        status, document = self.call_json("kunneth-check", hexagon, path, "--max-degree", "2")
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertTrue(document["passed"])
        self.assertEqual(document["ring"], "Q")

    def test_not_a_cofibration(self):
        X = self.write("x.edges", "x a\n")
        A = self.write("a.vertices", "a\n")
        status, document = self.call_json("cofib-check", X, A)
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertFalse(document["details"]["long_cofibration"])
        self.assertFalse(document["details"]["dwyer"])

    def test_spectral_sequence_of_an_edge(self):
        status, document = self.call_json("mpss", self.write("edge.edges", "a b\n"), "--max-degree", "2")
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertTrue(document["pages"])
        self.assertEqual(document["magnitude_oracle"], "pass")

    def test_output_is_deterministic(self):
        hexagon = self.write("hexagon.edges", catalog.hexagon_c().to_edge_list_text())
        first = self.call("condensation", hexagon)
        self.assertEqual(first, self.call("condensation", hexagon))
        self.assertNotIn(" ", first[1].strip())

    def test_pretty(self):
        status, text = self.call("demo", "triangles", "--pretty")
        self.assertEqual(status, EXIT_SUCCESS)
        self.assertIn("agrees", text)
        self.assertRaises(ValueError, json.loads, text)

    def test_cap_precedence(self):
        namespace = build_parser().parse_args(["homology", "g.edges"])
        with mock.patch.dict(os.environ, {CAP_ENVIRONMENT_VARIABLE: "50"}):
            self.assertEqual(RunConfig.from_namespace(namespace).cap, 50)
            namespace.cap_generators = 5
            self.assertEqual(RunConfig.from_namespace(namespace).cap, 5)
        with mock.patch.dict(os.environ, {}, clear=True):
            namespace.cap_generators = None
            config = RunConfig.from_namespace(namespace)
            self.assertEqual(config.cap, DEFAULT_GENERATOR_CAP)
            self.assertEqual(config.inputs, {"graph": "g.edges"})


if __name__ == "__main__":
    unittest.main()
