__author__ = 'reachhom'

import logging

from reachhom.util.rh_objects import HomologyGroup
from reachhom.graphs import catalog
from reachhom.homology.rcomplex import reachability_homology
from reachhom.commands.rh_command import RHCommand, CommandResult, trimmed_summary_document

LOGGER = logging.getLogger(__name__)

HEXAGONS = "hexagons"
TRIANGLES = "triangles"

# betti numbers in degrees 0, 1, ...; zero above
HEXAGON_TABLE = {"A": [1, 1], "B": [1], "C": [1]}


def _expected_groups(betti, max_degree):
    betti = list(betti) + [0] * (max_degree + 1 - len(betti))
    return [HomologyGroup(k, betti[k]) for k in range(max_degree + 1)]


class DemoCommand(RHCommand):
    """
    Recomputes the named catalog graphs and compares them with their known
    homology: the three hexagons, and three triangles that all look like a
    point.
    """
    name = "demo"
    help = "known examples: hexagons, triangles"

    def add_arguments(self, parser):
        parser.add_argument("example", choices=[HEXAGONS, TRIANGLES])

    def execute(self, config):
        example = config.options["example"]
        if example == HEXAGONS: graphs, table = catalog.hexagons(), HEXAGON_TABLE
        else:                   graphs, table = catalog.triangles(), {name: [1] for name in catalog.triangles()}

        document, rows, passed = {"example": example, "graphs": {}}, [], True
        for name, graph in graphs.items():
            summary = reachability_homology(graph, config.ring, config.max_degree, config.method, config.cap)
            expected = _expected_groups(table[name], config.max_degree)
            agrees = summary.groups == expected
            if not agrees: LOGGER.warning("%s %s: got %r", example, name, summary)
            passed = passed and agrees

            document["graphs"][name] = trimmed_summary_document(summary)
            rows.append({"graph": name, "betti": summary.betti_numbers(), "expected": [g.betti for g in expected],
                         "agrees": agrees})

        document["passed"] = passed
        return CommandResult(document, passed=passed, rows=rows)
