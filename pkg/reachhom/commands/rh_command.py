__author__ = 'reachhom'

import sys
import logging

from reachhom.util import congruence
from reachhom.util.rh_util import DEFAULT_MAX_DEGREE, Ring, format_table
from reachhom.graphs.digraph import parse_edge_list, parse_vertex_list, parse_map
from reachhom.homology.rcomplex import METHOD_CONDENSATION

LOGGER = logging.getLogger(__name__)

STANDARD_INPUT = "-"


class CommandResult:
    """
    What a command hands back to the front end: a JSON document, or plain
    text for commands that produce files in an input format.
    """
    def __init__(self, document=None, text=None, passed=True, rows=None, headers=None, hdf5_writers=()):
        self.document = document
        self.text = text
        self.passed = passed
        self.rows = rows or []
        self.headers = headers
        self.hdf5_writers = list(hdf5_writers)

    def pretty(self):
        if self.text is not None: return self.text
        if not self.rows: return ""
        headers = self.headers or list(self.rows[0].keys())
        table = format_table(headers, [[row.get(h) for h in headers] for row in self.rows])
        if self.document is not None and "verdict" in self.document:
            table += "\n\nverdict: %s" % self.document["verdict"]
        return table


class RHCommand:
    """
    Base of every subcommand. Class attributes are the default settings the
    argument parser starts from.
    """
    name = None
    help = ""

    ring = Ring.INTEGERS
    max_degree = DEFAULT_MAX_DEGREE
    method = METHOD_CONDENSATION

    inputs = ()

    def add_arguments(self, parser):
        for name, description in self.inputs:
            parser.add_argument(name, help=description)

    def execute(self, config):
        raise NotImplementedError()

    #########################################################################################
    #
    # INPUT
    #
    #########################################################################################

    @staticmethod
    def read_text(path):
        if path == STANDARD_INPUT: return sys.stdin.read()
        congruence.checkFile(path)
        try:
            with open(path, encoding="utf-8") as handle:
                return handle.read()
        except (OSError, UnicodeDecodeError) as error:
            raise congruence.InputError("cannot read %s: %s" % (path, error))

    def read_graph(self, path):
        graph = parse_edge_list(self.read_text(path))
        loops = graph.loops()
        if loops: LOGGER.info("%s: %d loop(s) will be ignored", path, len(loops))
        return graph

    def read_vertices(self, path, graph):
        return parse_vertex_list(self.read_text(path), graph)

    def read_map(self, path, source, target):
        return parse_map(self.read_text(path), source, target)

    @staticmethod
    def groups_rows(summary):
        return [{"degree": g.degree, "betti": g.betti, "torsion": g.torsion} for g in summary.groups]


def trimmed_summary_document(summary):
    """Summary document without the trailing zero groups above degree 0."""
    document = summary.to_dict()
    groups = document["groups"]
    while len(groups) > 1 and groups[-1]["betti"] == 0 and not groups[-1]["torsion"]: groups.pop()
    return document
