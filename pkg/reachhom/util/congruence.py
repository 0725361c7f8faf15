"""
Input validation helpers and the exception hierarchy shared by every module.

Each exception carries a short machine readable ``kind`` that the command
line front end copies into its ``{"error": {"kind", "detail"}}`` document.
"""

__author__ = 'reachhom'

import os

from sympy import isprime


class ReachHomError(Exception):
    kind = "error"

    def __init__(self, detail):
        super().__init__(detail)
        self.detail = detail


class InputError(ReachHomError):
    kind = "parse"

    def __init__(self, detail, line=None):
        if line is not None: detail = "line %d: %s" % (line, detail)
        super().__init__(detail)
        self.line = line


class DomainError(ReachHomError):
    kind = "domain"


class ShapeError(ReachHomError):
    kind = "shape"


class RangeError(ReachHomError):
    kind = "range"


class RingMismatchError(ReachHomError):
    kind = "ring"


class SubcomplexError(ReachHomError):
    kind = "subcomplex"


class PreconditionError(ReachHomError):
    kind = "precondition"


class RefusalError(ReachHomError):
    kind = "refusal"


class NotAChainMapError(ReachHomError):
    kind = "chain-map"


class ConsistencyError(ReachHomError):
    kind = "consistency"


class ResourceCapError(ReachHomError):
    kind = "resource"

    def __init__(self, degree, count, cap):
        super().__init__("degree %d needs %d generators, cap is %d" % (degree, count, cap))
        self.degree = degree
        self.count = count
        self.cap = cap


#########################################################################################
#
# CHECKS
#
#########################################################################################

def checkFile(file_name):
    if not os.path.isfile(file_name):
        raise InputError("file %s does not exist" % file_name)

    return file_name

def checkEmptyString(string, field_name):
    if string is None or not string.strip():
        raise InputError("%s should not be an empty string" % field_name)

    return string

def checkPositiveNumber(value, field_name):
    if value is None or value < 0:
        raise DomainError("%s should be >= 0" % field_name)

    return value

def checkStrictlyPositiveNumber(value, field_name):
    if value is None or value <= 0:
        raise DomainError("%s should be > 0" % field_name)

    return value

def checkPrime(p):
    if not isprime(p) or p > 2**31:
        raise DomainError("%d is not a prime <= 2^31" % p)

    return p

def checkSubset(subset, superset, field_name):
    missing = [x for x in subset if x not in superset]
    if missing:
        raise ShapeError("%s contains unknown elements: %s" % (field_name, ", ".join(str(x) for x in missing)))

    return subset

def checkSizeBound(size, bound, what):
    if size > bound:
        raise RefusalError("%s has size %d, exhaustive search is limited to %d" % (what, size, bound))

    return size
