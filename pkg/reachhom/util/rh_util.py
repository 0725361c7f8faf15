"""
Ground rings, run-wide defaults, canonical JSON and plain text tables.
"""

__author__ = 'reachhom'

import os
import sys
import json
import logging
from fractions import Fraction

from sympy.polys.domains import ZZ, QQ, GF

from reachhom.util import congruence

LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 6
DEFAULT_GENERATOR_CAP = 10**6
DWYER_EXHAUSTIVE_BOUND = 12
ADJUNCTION_BOUND = 5
CAP_ENVIRONMENT_VARIABLE = "REACHHOM_CAP_GENERATORS"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


#########################################################################################
#
# RINGS
#
#########################################################################################

class Ring:
    """
    One of Z, Q or GF(p), wrapping the matching sympy domain.
    """
    INTEGERS = "Z"
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"

    def __init__(self, name=INTEGERS, p=None):
        if name not in (Ring.INTEGERS, Ring.RATIONALS, Ring.PRIME_FIELD):
            raise congruence.DomainError("unknown ring %s" % name)
        if name == Ring.PRIME_FIELD:
            if p is None: raise congruence.DomainError("Fp needs a prime")
            congruence.checkPrime(p)
        else:
            p = None

        self.name = name
        self.p = p

        if name == Ring.INTEGERS:   self.domain = ZZ
        elif name == Ring.RATIONALS: self.domain = QQ
        else:                        self.domain = GF(p)

    @classmethod
    def parse(cls, text):
        text = congruence.checkEmptyString(text, "ring").strip()

        if text in (Ring.INTEGERS, Ring.RATIONALS): return Ring(text)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise congruence.DomainError("malformed ring selector %s" % text)
            return Ring(Ring.PRIME_FIELD, p)

        raise congruence.DomainError("malformed ring selector %s, expected Z, Q or Fp:<p>" % text)

    @property
    def is_field(self):
        return self.name != Ring.INTEGERS

    @property
    def field_domain(self):
        return QQ if self.name == Ring.INTEGERS else self.domain

    def element(self, value):
        if self.name == Ring.RATIONALS and isinstance(value, Fraction):
            return QQ(value.numerator, value.denominator)
        return self.domain(value)

    def coerce(self, value):
        if self.domain.of_type(value): return value
        return self.element(value)

    def field(self):
        return Ring(Ring.RATIONALS) if self.name == Ring.INTEGERS else self

    def to_python(self, element):
        if self.name == Ring.INTEGERS:
            return int(element)
        elif self.name == Ring.RATIONALS:
            return Fraction(int(element.numerator), int(element.denominator))
        else:
            return int(self.domain.to_int(element)) % self.p

    def to_dict(self):
        out = {"ring": self.name}
        if self.p is not None: out["p"] = self.p
        return out

    def __eq__(self, other):
        return isinstance(other, Ring) and self.name == other.name and self.p == other.p

    def __hash__(self):
        return hash((self.name, self.p))

    def __repr__(self):
        return "Fp:%d" % self.p if self.p is not None else self.name

def check_same_ring(*rings):
    first = rings[0]
    for ring in rings[1:]:
        if ring != first:
            raise congruence.RingMismatchError("rings %r and %r differ" % (first, ring))
    return first

def check_field(ring, what):
    if not ring.is_field:
        raise congruence.DomainError("%s needs a field, got %r" % (what, ring))
    return ring


#########################################################################################
#
# CONFIGURATION
#
#########################################################################################

def generator_cap(explicit=None):
    if explicit is not None:
        return congruence.checkStrictlyPositiveNumber(int(explicit), "generator cap")

    from_environment = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
    if from_environment:
        try:
            return congruence.checkStrictlyPositiveNumber(int(from_environment), CAP_ENVIRONMENT_VARIABLE)
        except ValueError:
            raise congruence.DomainError("%s must be an integer, got %s" % (CAP_ENVIRONMENT_VARIABLE, from_environment))

    return DEFAULT_GENERATOR_CAP

def configure_logging(verbosity=0, stream=None):
    if verbosity >= 2:   level = logging.DEBUG
    elif verbosity == 1: level = logging.INFO
    else:                level = logging.WARNING

    root = logging.getLogger()
    for handler in list(root.handlers): root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)


#########################################################################################
#
# OUTPUT
#
#########################################################################################

def canonical_json(document):
    return json.dumps(document, sort_keys=True, separators=(",", ":"), default=_json_default)

def _json_default(value):
    if isinstance(value, Fraction): return str(value)
    if hasattr(value, "to_dict"): return value.to_dict()
    raise TypeError("object of type %s is not serializable" % type(value).__name__)

def format_table(headers, rows):
    cells = [[str(h) for h in headers]] + [[_cell(c) for c in row] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(headers))]

    lines = []
    for index, line in enumerate(cells):
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(line, widths)))
        if index == 0: lines.append("  ".join("-" * width for width in widths))
    return "\n".join(lines)

def _cell(value):
    if isinstance(value, bool): return "yes" if value else "no"
    if isinstance(value, (list, tuple)): return ",".join(str(v) for v in value) if value else "-"
    return str(value)
