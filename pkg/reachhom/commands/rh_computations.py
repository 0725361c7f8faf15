"""
Subcommands that compute: homology, relative homology, products, the
condensation poset and graphs built from simplicial complexes.
"""

__author__ = 'reachhom'

import logging

from reachhom.util import congruence, rh_hdf5
from reachhom.graphs.digraph import box_product, strong_product
from reachhom.graphs.preorder import condensation
from reachhom.graphs.simplicial import parse_facet_list, face_graph, hasse_diagram
from reachhom.homology.homalg import homology_summary
from reachhom.homology.rcomplex import METHOD_CONDENSATION, METHOD_TRUNCATED, METHOD_BOTH, \
    condensation_order_complex, reachability_complex, reachability_homology, relative_complex, pair_sequence_check
from reachhom.homology.kunneth import BOX, STRONG
from reachhom.commands.rh_command import RHCommand, CommandResult, STANDARD_INPUT, trimmed_summary_document

LOGGER = logging.getLogger(__name__)

METHODS = (METHOD_CONDENSATION, METHOD_TRUNCATED, METHOD_BOTH)


class HomologyCommand(RHCommand):
    name = "homology"
    help = "reachability homology of an edge list (stdin when no file is given)"

    inputs = (("graph", "edge list file, - for stdin"),)

    def add_arguments(self, parser):
        parser.add_argument("graph", nargs="?", default=STANDARD_INPUT, help=self.inputs[0][1])

    def execute(self, config):
        G = self.read_graph(config.inputs["graph"])
        summary = reachability_homology(G, config.ring, config.max_degree, config.method, config.cap)

        writers = [lambda filename: rh_hdf5.save_summary_2_hdf5(summary, filename)]
        if config.method != METHOD_TRUNCATED:
            complex_ = condensation_order_complex(G, config.ring, config.cap)
            writers.append(lambda filename: rh_hdf5.save_complex_2_hdf5(complex_, filename, overwrite=False))

        return CommandResult(trimmed_summary_document(summary), rows=self.groups_rows(summary), hdf5_writers=writers)


class RelativeCommand(RHCommand):
    name = "relative"
    help = "homology of a graph relative to an induced subgraph"
    max_degree = 3
    method = METHOD_TRUNCATED

    inputs = (("graph", "edge list of X"),
              ("subgraph", "vertex list of the induced subgraph A"))

    def execute(self, config):
        G = self.read_graph(config.inputs["graph"])
        A = self.read_vertices(config.inputs["subgraph"], G)

        summaries = {}
        for method in ((METHOD_CONDENSATION, METHOD_TRUNCATED) if config.method == METHOD_BOTH else (config.method,)):
            C = relative_complex(G, A, config.max_degree, config.ring, method, config.cap)
            summaries[method] = homology_summary(C, config.max_degree)
        summary = summaries[METHOD_TRUNCATED if METHOD_TRUNCATED in summaries else METHOD_CONDENSATION]

        if len(summaries) == 2 and summaries[METHOD_CONDENSATION] != summary:
            raise congruence.ConsistencyError("truncated and condensation relative homology disagree")

        report = pair_sequence_check(G, A, config.ring, config.max_degree, METHOD_TRUNCATED, config.cap)

        document = trimmed_summary_document(summary)
        document["pair_sequence"] = report.verdict
        return CommandResult(document, passed=report.passed, rows=self.groups_rows(summary),
                             hdf5_writers=[lambda filename: rh_hdf5.save_summary_2_hdf5(summary, filename)])


class ProductCommand(RHCommand):
    name = "product"
    help = "box or strong product of two graphs and its homology"

    inputs = (("left", "edge list of G"),
              ("right", "edge list of H"))

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--edges", action="store_true", help="print the product as an edge list instead")

    def execute(self, config):
        G = self.read_graph(config.inputs["left"])
        H = self.read_graph(config.inputs["right"])
        product = config.product if config.product in (BOX, STRONG) else BOX
        P = (box_product if product == BOX else strong_product)(G, H)

        if config.options.get("edges"): return CommandResult(text=P.to_edge_list_text())

        summary = reachability_homology(P, config.ring, config.max_degree, config.method, config.cap)
        document = {"product": product,
                    "vertices": list(P.vertices),
                    "edges": [list(e) for e in P.edge_list()],
                    "homology": trimmed_summary_document(summary)}
        return CommandResult(document, rows=self.groups_rows(summary),
                             hdf5_writers=[lambda filename: rh_hdf5.save_summary_2_hdf5(summary, filename)])


class CondensationCommand(RHCommand):
    name = "condensation"
    help = "strongly connected classes ordered by reachability"

    inputs = (("graph", "edge list file"),)

    def execute(self, config):
        poset = condensation(self.read_graph(config.inputs["graph"]))
        document = poset.to_dict()
        rows = [{"class": c, "members": members, "above": [j for i, j in document["order"] if i == c]}
                for c, members in enumerate(document["classes"])]
        return CommandResult(document, rows=rows)


class SimplicialCommand(RHCommand):
    """
    Writes the face graph or the Hasse diagram of a simplicial complex as an
    edge list, ready to be piped into ``homology``.
    """
    name = "simplicial"
    help = "face graph or Hasse diagram of a facet list"

    inputs = (("facets", "facet list, one simplex per line"),)

    def add_arguments(self, parser):
        super().add_arguments(parser)
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--hasse", action="store_true", help="codimension one faces only (default)")
        group.add_argument("--face", action="store_true", help="every proper face")

    def execute(self, config):
        S = parse_facet_list(self.read_text(config.inputs["facets"]))
        graph = face_graph(S) if config.options.get("face") else hasse_diagram(S)
        LOGGER.info("%r gives %r", S, graph)
        return CommandResult(text=graph.to_edge_list_text())


class ComplexCommand(RHCommand):
    name = "complex"
    help = "export the reachability complex of a graph to hdf5"

    inputs = (("graph", "edge list file"),)

    def execute(self, config):
        G = self.read_graph(config.inputs["graph"])
        if config.method == METHOD_TRUNCATED: C = reachability_complex(G, config.max_degree, config.ring, config.cap)
        else:                                 C = condensation_order_complex(G, config.ring, config.cap)

        document = config.ring.to_dict()
        document.update({"name": C.name, "complete": bool(C.complete), "ranks": C.ranks()})
        rows = [{"degree": k, "rank": rank} for k, rank in enumerate(C.ranks())]
        return CommandResult(document, rows=rows,
                             hdf5_writers=[lambda filename: rh_hdf5.save_complex_2_hdf5(C, filename)])
