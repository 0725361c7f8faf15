"""
Subcommands that verify: Kunneth, long cofibrations, excision,
Mayer-Vietoris and the convergence of the length spectral sequence.
"""

__author__ = 'reachhom'

import logging

from reachhom.util import rh_hdf5
from reachhom.util.rh_util import Ring, DWYER_EXHAUSTIVE_BOUND
from reachhom.util.rh_objects import CheckReport
from reachhom.homology.kunneth import BOX, STRONG, BOTH, kunneth_check, integer_kunneth_check
from reachhom.homology.cofib import is_long_cofibration, dwyer_counterpart, preorder_pushout_check, \
    excision_check, mayer_vietoris_check
from reachhom.homology.mpss import convergence_check, magnitude_oracle_check
from reachhom.commands.rh_command import RHCommand, CommandResult

LOGGER = logging.getLogger(__name__)

CHECK_MAX_DEGREE = 3


def report_result(report, **extra):
    document = report.to_dict()
    document.update(extra)
    return CommandResult(document, passed=report.verdict != CheckReport.FAILED, rows=report.rows,
                         hdf5_writers=[lambda filename: rh_hdf5.save_document_2_hdf5(document, filename, report.check)])


class KunnethCheckCommand(RHCommand):
    name = "kunneth-check"
    help = "betti numbers of products against the Kunneth formula"
    ring = Ring.RATIONALS
    max_degree = CHECK_MAX_DEGREE

    inputs = (("left", "edge list of G"),
              ("right", "edge list of H"))

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--iso-degree", type=int, default=None,
                            help="highest degree where the shuffle map is checked on homology (default: --max-degree)")

    def execute(self, config):
        G = self.read_graph(config.inputs["left"])
        H = self.read_graph(config.inputs["right"])

        if config.ring.is_field:
            return report_result(kunneth_check(G, H, config.ring, config.max_degree, config.product,
                                               config.options.get("iso_degree"), config.cap))

        # over Z the Tor terms are compared instead of betti numbers
        report = CheckReport("kunneth-integral", config.ring)
        for product in ((BOX, STRONG) if config.product == BOTH else (config.product,)):
            single = integer_kunneth_check(G, H, config.max_degree, product, config.cap)
            report.rows.extend(single.rows)
            for reason in single.failures: report.fail(reason)
        return report_result(report)


class CofibCheckCommand(RHCommand):
    name = "cofib-check"
    help = "decide whether A -> X is a long cofibration"

    inputs = (("graph", "edge list of X"),
              ("subgraph", "vertex list of A"))

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("target", nargs="?", help="edge list of Y, to check the pushout of preorders")
        parser.add_argument("map", nargs="?", help="map file 'a y' from A to Y")

    def execute(self, config):
        X = self.read_graph(config.inputs["graph"])
        A = self.read_vertices(config.inputs["subgraph"], X)
        witness = is_long_cofibration(X, A)

        report = CheckReport("long-cofibration")
        report.details["long_cofibration"] = witness is not None
        if witness is not None:
            report.details["witness"] = witness.to_dict()
            report.expect(witness.verify(), "projection does not satisfy the long cofibration conditions")
        if len(X) <= DWYER_EXHAUSTIVE_BOUND:
            report.details["dwyer"] = dwyer_counterpart(X, A) is not None

        target, map_path = config.options.get("target"), config.options.get("map")
        if witness is not None and target and map_path:
            Y = self.read_graph(target)
            f = self.read_map(map_path, X.induced_subgraph(A), Y)
            report.details["preorder_pushout"] = preorder_pushout_check(X, A, Y, f)
            report.expect(report.details["preorder_pushout"], "reachability of the pushout is not the pushout of preorders")

        report.add_row(subgraph=list(A), long_cofibration=witness is not None)
        return report_result(report)


class PushoutCheckCommand(RHCommand):
    max_degree = CHECK_MAX_DEGREE

    inputs = (("graph", "edge list of X"),
              ("subgraph", "vertex list of A"),
              ("target", "edge list of Y"),
              ("map", "map file 'a y' from A to Y"))

    def check(self, X, A, Y, f, config):
        raise NotImplementedError()

    def execute(self, config):
        X = self.read_graph(config.inputs["graph"])
        A = self.read_vertices(config.inputs["subgraph"], X)
        Y = self.read_graph(config.inputs["target"])
        f = self.read_map(config.inputs["map"], X.induced_subgraph(A), Y)
        return report_result(self.check(X, A, Y, f, config))


class ExcisionCheckCommand(PushoutCheckCommand):
    name = "excision-check"
    help = "H(X, A) -> H(X + Y along A, Y) is an isomorphism"

    def check(self, X, A, Y, f, config):
        return excision_check(X, A, Y, f, config.ring, config.max_degree, config.cap)


class MayerVietorisCheckCommand(PushoutCheckCommand):
    name = "mv-check"
    help = "exactness of the Mayer-Vietoris sequence of a pushout"

    def check(self, X, A, Y, f, config):
        return mayer_vietoris_check(X, A, Y, f, config.ring, config.max_degree, config.cap)


class SpectralSequenceCommand(RHCommand):
    """
    Pages of the spectral sequence of the length filtration, with the first
    page checked against magnitude homology and the limit against
    reachability homology.
    """
    name = "mpss"
    help = "pages of the length spectral sequence and their convergence"
    ring = Ring.RATIONALS
    max_degree = CHECK_MAX_DEGREE

    inputs = (("graph", "edge list file"),)

    def execute(self, config):
        G = self.read_graph(config.inputs["graph"])
        report = convergence_check(G, config.ring, config.max_degree, config.max_page, config.cap)
        oracle = magnitude_oracle_check(G, config.ring, config.max_degree, config.cap)
        for reason in oracle.failures: report.fail(reason)

        pages = report.details.pop("pages")
        if config.max_page is not None: pages = pages[:config.max_page]
        return report_result(report, pages=pages, magnitude_oracle=oracle.verdict)
