"""
Command line entry point::

    reachhom homology graph.edges --ring Z --max-degree 4
    reachhom simplicial --hasse rp2.facets | reachhom homology --ring Z
    reachhom demo hexagons --pretty

stdout carries one JSON document (or a ``--pretty`` table, or edge list
text); logging goes to stderr. Exit status: 0 success, 1 failed check,
2 bad input, 3 generator cap exceeded.
"""

__author__ = 'reachhom'

import sys
import logging
import argparse

from reachhom import __version__
from reachhom.util import congruence
from reachhom.util.rh_util import Ring, DEFAULT_MAX_DEGREE, canonical_json, configure_logging, generator_cap
from reachhom.homology.rcomplex import METHOD_CONDENSATION
from reachhom.homology.kunneth import BOX, STRONG, BOTH
from reachhom.commands.rh_computations import METHODS, HomologyCommand, RelativeCommand, ProductCommand, \
    CondensationCommand, SimplicialCommand, ComplexCommand
from reachhom.commands.rh_checks import KunnethCheckCommand, CofibCheckCommand, ExcisionCheckCommand, \
    MayerVietorisCheckCommand, SpectralSequenceCommand
from reachhom.commands.rh_demos import DemoCommand

LOGGER = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILED_CHECK = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE = 3

COMMANDS = {command.name: command for command in (HomologyCommand(),
                                                  RelativeCommand(),
                                                  ProductCommand(),
                                                  CondensationCommand(),
                                                  SimplicialCommand(),
                                                  ComplexCommand(),
                                                  KunnethCheckCommand(),
                                                  CofibCheckCommand(),
                                                  ExcisionCheckCommand(),
                                                  MayerVietorisCheckCommand(),
                                                  SpectralSequenceCommand(),
                                                  DemoCommand())}

_GLOBAL_OPTIONS = ("subcommand", "ring", "max_degree", "max_page", "method", "product",
                   "cap_generators", "output", "hdf5", "verbose", "pretty")


class RunConfig:
    def __init__(self, subcommand, inputs=None, ring=Ring.INTEGERS, max_degree=DEFAULT_MAX_DEGREE, max_page=None,
                 method=METHOD_CONDENSATION, product=BOTH, cap=None, output=None, hdf5=None, verbosity=0,
                 pretty=False, options=None):
        if subcommand not in COMMANDS: raise congruence.DomainError("unknown subcommand %s" % subcommand)
        if method not in METHODS: raise congruence.DomainError("unknown method %s" % method)
        if product not in (BOX, STRONG, BOTH): raise congruence.DomainError("unknown product %s" % product)

        self.subcommand = subcommand
        self.inputs = dict(inputs or {})
        self.ring = ring if isinstance(ring, Ring) else Ring.parse(ring)
        self.max_degree = congruence.checkPositiveNumber(max_degree, "max degree")
        self.max_page = None if max_page is None else congruence.checkStrictlyPositiveNumber(max_page, "max page")
        self.method = method
        self.product = product
        self.cap = generator_cap(cap)
        self.output = output
        self.hdf5 = hdf5
        self.verbosity = verbosity
        self.pretty = pretty
        self.options = dict(options or {})

    @classmethod
    def from_namespace(cls, namespace):
        command = COMMANDS[namespace.subcommand]
        input_names = [name for name, _ in command.inputs]
        values = vars(namespace)

        inputs = {name: values[name] for name in input_names if name in values}
        options = {key: value for key, value in values.items() if key not in _GLOBAL_OPTIONS and key not in inputs}

        return cls(namespace.subcommand, inputs, namespace.ring, namespace.max_degree, namespace.max_page,
                   namespace.method, namespace.product, namespace.cap_generators, namespace.output, namespace.hdf5,
                   namespace.verbose, namespace.pretty, options)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="Z, Q or Fp:<p>")
    common.add_argument("--max-degree", type=int, help="highest homological degree")
    common.add_argument("--method", choices=METHODS, help="condensation order complex, truncated complex, or both")
    common.add_argument("--max-page", type=int, default=None, help="last spectral sequence page to report")
    common.add_argument("--product", choices=(BOX, STRONG, BOTH), default=BOTH, help="graph product")
    common.add_argument("--cap-generators", type=int, default=None,
                        help="generator cap per degree (default: $REACHHOM_CAP_GENERATORS or 10^6)")
    common.add_argument("--output", "-o", default=None, help="write the result to a file instead of stdout")
    common.add_argument("--hdf5", default=None, help="also export the result to an hdf5 file")
    common.add_argument("--pretty", action="store_true", help="human readable table instead of JSON")
    common.add_argument("--verbose", "-v", action="count", default=0, help="-v for info, -vv for debug logging")

    parser = argparse.ArgumentParser(prog="reachhom", description="Reachability homology of directed graphs")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    subparsers.required = True

    for command in COMMANDS.values():
        subparser = subparsers.add_parser(command.name, parents=[common], help=command.help, description=command.help)
        command.add_arguments(subparser)
        subparser.set_defaults(ring=command.ring, max_degree=command.max_degree, method=command.method)

    return parser


def _emit(text, output):
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    except OSError as error:
        raise congruence.InputError("cannot write %s: %s" % (output, error))

def _exit_status(error):
    if isinstance(error, congruence.ResourceCapError): return EXIT_RESOURCE
    if isinstance(error, congruence.ConsistencyError): return EXIT_FAILED_CHECK
    return EXIT_INPUT_ERROR

def report_error(error, output=None):
    LOGGER.error("%s: %s", error.kind, error.detail)
    document = canonical_json({"error": {"kind": error.kind, "detail": error.detail}})
    try:
        _emit(document, output)
    except congruence.InputError:
        _emit(document, None)
    return _exit_status(error)


def run(config):
    """
    :param config: RunConfig
    :return: exit status
    """
    command = COMMANDS[config.subcommand]
    LOGGER.info("%s on %s, ring %r, max degree %d", command.name, config.inputs, config.ring, config.max_degree)

    try:
        result = command.execute(config)

        if config.hdf5:
            if not result.hdf5_writers: LOGGER.warning("%s has nothing to export to hdf5", command.name)
            for writer in result.hdf5_writers:
                try:
                    writer(config.hdf5)
                except OSError as error:
                    raise congruence.InputError("cannot write %s: %s" % (config.hdf5, error))

        if config.pretty:            text = result.pretty()
        elif result.text is not None: text = result.text
        else:                         text = canonical_json(result.document)
        _emit(text, config.output)
    except congruence.ReachHomError as error:
        return report_error(error, config.output)

    return EXIT_SUCCESS if result.passed else EXIT_FAILED_CHECK


def main(argv=None):
    namespace = build_parser().parse_args(argv)
    configure_logging(namespace.verbose)

    try:
        config = RunConfig.from_namespace(namespace)
    except congruence.ReachHomError as error:
        return report_error(error, namespace.output)

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
