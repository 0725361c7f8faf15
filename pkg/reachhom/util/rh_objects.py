__author__ = 'reachhom'

class HomologyGroup:
    def __init__(self, degree=0, betti=0, torsion=()):
        self.degree = degree
        self.betti = betti
        self.torsion = list(torsion)

    def is_zero(self):
        return self.betti == 0 and not self.torsion

    def to_dict(self):
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}

    def __eq__(self, other):
        return isinstance(other, HomologyGroup) and \
               (self.degree, self.betti, self.torsion) == (other.degree, other.betti, other.torsion)

    def __repr__(self):
        return "H_%d = %s" % (self.degree, self.describe())

    def describe(self):
        parts = []
        if self.betti == 1: parts.append("R")
        elif self.betti > 1: parts.append("R^%d" % self.betti)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class HomologySummary:
    """
    Homology groups of one complex in consecutive degrees 0..K.
    """
    def __init__(self, ring, groups=None):
        self.ring = ring
        self.groups = list(groups or [])

    def add_group(self, group):
        self.groups.append(group)

    def group(self, degree):
        for group in self.groups:
            if group.degree == degree: return group
        raise KeyError(degree)

    def betti_numbers(self):
        return [group.betti for group in self.groups]

    def torsion(self, degree):
        return self.group(degree).torsion

    def to_dict(self):
        out = self.ring.to_dict()
        out["groups"] = [group.to_dict() for group in self.groups]
        return out

    def __eq__(self, other):
        return isinstance(other, HomologySummary) and self.ring == other.ring and self.groups == other.groups

    def __repr__(self):
        return "HomologySummary(%r, %s)" % (self.ring, ", ".join(repr(g) for g in self.groups))


class CheckReport:
    """
    Outcome of one verification: a pass flag, a list of failure reasons,
    per-degree rows and free-form details.
    """
    PASSED = "pass"
    FAILED = "fail"
    INCONCLUSIVE = "inconclusive"

    def __init__(self, check, ring=None):
        self.check = check
        self.ring = ring
        self.verdict = CheckReport.PASSED
        self.failures = []
        self.rows = []
        self.details = {}

    @property
    def passed(self):
        return self.verdict == CheckReport.PASSED

    def fail(self, reason):
        self.verdict = CheckReport.FAILED
        self.failures.append(reason)

    def inconclusive(self, reason):
        if self.verdict == CheckReport.PASSED: self.verdict = CheckReport.INCONCLUSIVE
        self.failures.append(reason)

    def expect(self, condition, reason):
        if not condition: self.fail(reason)
        return condition

    def add_row(self, **row):
        self.rows.append(row)

    def to_dict(self):
        out = {"check": self.check,
               "passed": self.passed,
               "verdict": self.verdict,
               "failures": list(self.failures),
               "rows": list(self.rows),
               "details": dict(self.details)}
        if self.ring is not None: out.update(self.ring.to_dict())
        return out
