"""
The length filtration on the reachability complex and its spectral
sequence over a field.

E^r_{s,k} is indexed by the length s and the total degree k, so that E^1
is magnitude homology MH_{k,s}. Every page comes from ranks of lower-left
blocks of the differentials, read off one column reduction per degree
with rows and columns sorted by length.
"""

__author__ = 'reachhom'

import logging
from bisect import bisect_right

import numpy

from reachhom.util import congruence
from reachhom.util.rh_util import DEFAULT_MAX_DEGREE, Ring, check_field, check_same_ring, generator_cap
from reachhom.util.rh_objects import CheckReport
from reachhom.graphs.digraph import INFINITY, shortest_path_metric
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex, homology
from reachhom.homology.rcomplex import reachability_complex, reachability_homology, _enumerate_chains

LOGGER = logging.getLogger(__name__)


def _length(metric, index, chain):
    return sum(metric[index(u), index(v)] for u, v in zip(chain, chain[1:]))


class FilteredComplex:
    """
    A chain complex with an integer length on every generator; the
    differential never raises length.
    """
    def __init__(self, complex_, lengths, bounded=True):
        self.complex = complex_
        self.lengths = [list(values) for values in lengths]
        self.bounded = bounded
        self._lows = {}
        self._sorted = [sorted(values) for values in self.lengths]
        self._blocks = {}

    @property
    def ring(self):
        return self.complex.ring

    @property
    def max_degree(self):
        return self.complex.top_degree - 1

    def max_length(self):
        return max((l for values in self.lengths for l in values), default=0)

    def count(self, k, s):
        """Generators of degree k and length <= s."""
        if k < 0 or k > self.complex.top_degree: return 0
        return bisect_right(self._sorted[k], s)

    def is_compatible(self):
        for k in range(1, self.complex.top_degree + 1):
            for column, entries in enumerate(linalg.columns_of(self.complex.boundary(k))):
                if any(self.lengths[k - 1][row] > self.lengths[k][column] for row, _ in entries): return False
        return True

    def _reduction(self, k):
        """
        Column reduction of the degree k differential, columns by increasing
        length, rows by increasing length, pivoting on the lowest row.

        :return: list of (column length, pivot row length) for the nonzero reduced columns
        """
        if k in self._lows: return self._lows[k]
        if k <= 0 or k > self.complex.top_degree:
            self._lows[k] = []
            return []

        K = self.ring.domain
        rows = sorted(range(self.complex.rank(k - 1)), key=lambda i: (self.lengths[k - 1][i], i))
        position = {row: p for p, row in enumerate(rows)}
        columns = linalg.columns_of(self.complex.boundary(k))
        order = sorted(range(len(columns)), key=lambda j: (self.lengths[k][j], j))

        pivots, lows = {}, []
        for j in order:
            column = {position[row]: value for row, value in columns[j]}
            while column:
                low = max(column)
                if low not in pivots: break
                other = pivots[low]
                factor = K.quo(column[low], other[low])
                for row, value in other.items():
                    updated = column.get(row, K.zero) - factor * value
                    if updated == K.zero: column.pop(row, None)
                    else:                 column[row] = updated
            if column:
                low = max(column)
                pivots[low] = column
                lows.append((self.lengths[k][j], self.lengths[k - 1][rows[low]]))

        self._lows[k] = lows
        return lows

    def _block_table(self, k):
        """table[s, t]: reduced columns of length <= s whose pivot row has length t."""
        if k not in self._blocks:
            top = self.max_length()
            table = numpy.zeros((top + 1, top + 1), dtype=int)
            for column_length, row_length in self._reduction(k): table[column_length, row_length] += 1
            self._blocks[k] = table.cumsum(axis=0)
        return self._blocks[k]

    def block_rank(self, k, s, t):
        """Rank of the part of the degree k differential from length <= s to length > t."""
        if s < 0: return 0
        table = self._block_table(k)
        s = min(s, table.shape[0] - 1)
        return int(table[s, max(t + 1, 0):].sum())

    def almost_cycles(self, r, s, k):
        """dim {x of degree k and length <= s : boundary of x has length <= s - r}."""
        return self.count(k, s) - self.block_rank(k, s, s - r)


def length_filtration(G, max_degree=DEFAULT_MAX_DEGREE, ring=None, cap=None):
    ring = ring or Ring(Ring.RATIONALS)
    C = reachability_complex(G, max_degree, ring, cap)
    metric = shortest_path_metric(C.graph)
    lengths = [[_length(metric, C.graph.index, label) for label in labels] for labels in C.basis]

    bounded = all(l is not INFINITY for values in lengths for l in values)
    if not bounded: LOGGER.warning("some generators have unbounded length")
    return FilteredComplex(C, lengths, bounded)


#########################################################################################
#
# MAGNITUDE COMPLEX
#
#########################################################################################

class MagnitudeComplex:
    """One chain complex per length; degree k, length l gives MH_{k,l}."""
    def __init__(self, pieces, max_degree):
        self.pieces = pieces
        self.max_degree = max_degree

    def lengths(self):
        return sorted(self.pieces)

    def rank(self, k, length):
        if length not in self.pieces or k > self.max_degree: return 0
        piece = self.pieces[length]
        if k > piece.top_degree: return 0
        return homology(piece, k).betti

    def ranks(self):
        return {(k, l): self.rank(k, l) for l in self.lengths() for k in range(self.max_degree + 1) if self.rank(k, l)}

def magnitude_complex(G, max_degree=DEFAULT_MAX_DEGREE, ring=None, cap=None):
    """
    Tuples with finite distances between neighbours, graded by length; the
    differential keeps only the inner faces that do not shorten the tuple.
    """
    ring = check_field(ring or Ring(Ring.RATIONALS), "magnitude homology ranks")
    congruence.checkPositiveNumber(max_degree, "max degree")

    G = G.without_loops()
    metric = shortest_path_metric(G)
    distance = lambda u, v: metric[G.index(u), G.index(v)]
    finite = lambda u, v: distance(u, v) is not INFINITY

    generators = _enumerate_chains(list(G.vertices), finite, max_degree + 1, generator_cap(cap))
    exhausted = not generators[-1]

    by_length = {}
    for k, chains in enumerate(generators):
        for chain in chains:
            by_length.setdefault(_length(metric, G.index, chain), [[] for _ in generators])[k].append(chain)

    def boundary(chain):
        terms = []
        for j in range(1, len(chain) - 1):
            u, v, w = chain[j - 1], chain[j], chain[j + 1]
            if u != w and distance(u, w) == distance(u, v) + distance(v, w):
                terms.append(((-1) ** j, chain[:j] + chain[j + 1:]))
        return terms

    pieces = {}
    for length, basis in sorted(by_length.items()):
        complete = exhausted or length <= max_degree + 1
        pieces[length] = FreeChainComplex.from_boundary(ring, basis, boundary, complete=complete, name="MC_%d" % length)

    LOGGER.debug("magnitude complex lengths %s", sorted(pieces))
    return MagnitudeComplex(pieces, max_degree)


#########################################################################################
#
# PAGES
#
#########################################################################################

class SpectralPage:
    def __init__(self, r, ranks, ring):
        self.r = r
        self.ranks = {key: value for key, value in ranks.items() if value}
        self.ring = ring

    def rank(self, s, k):
        return self.ranks.get((s, k), 0)

    def total(self, k):
        return sum(value for (s, degree), value in self.ranks.items() if degree == k)

    def diagonal(self):
        """Ranks E_{k,k}: generators whose every step is an edge."""
        return {k: value for (s, k), value in self.ranks.items() if s == k}

    def __eq__(self, other):
        return isinstance(other, SpectralPage) and self.ranks == other.ranks

    def __repr__(self):
        return "SpectralPage(r=%d, %s)" % (self.r, sorted(self.ranks.items()))

    def to_dict(self):
        return {"page": self.r, "ranks": [[s, k, value] for (s, k), value in sorted(self.ranks.items())]}

def spectral_page(F, r, ring=None):
    if r < 1: raise congruence.RangeError("pages start at 1, got %d" % r)
    ring = check_same_ring(ring or F.ring, F.ring)
    check_field(ring, "spectral sequence pages")

    z = F.almost_cycles
    ranks = {}
    for k in range(F.max_degree + 1):
        for s in range(F.max_length() + 1):
            ranks[(s, k)] = z(r, s, k) - z(r - 1, s - 1, k) - z(r - 1, s + r - 1, k + 1) + z(r, s + r - 1, k + 1)
    return SpectralPage(r, ranks, ring)

def associated_graded(F, ring=None):
    """
    dim F_s H_k / F_{s-1} H_k, computed from the filtration of homology
    without going through the pages.
    """
    ring = check_field(check_same_ring(ring or F.ring, F.ring), "associated graded ranks")
    top = F.max_length()

    def filtered(s, k):
        if s < 0: return 0
        cycles = F.count(k, s) - F.block_rank(k, s, -1)
        boundaries = F.block_rank(k + 1, top, -1) - F.block_rank(k + 1, top, s)
        return cycles - boundaries

    ranks = {(s, k): filtered(s, k) - filtered(s - 1, k) for k in range(F.max_degree + 1) for s in range(top + 1)}
    return SpectralPage(top + 1, ranks, ring)


#########################################################################################
#
# CHECKS
#
#########################################################################################

def magnitude_oracle_check(G, ring=None, max_degree=3, cap=None):
    """E^1 against the homology of the independently built magnitude complex."""
    ring = check_field(ring or Ring(Ring.RATIONALS), "the magnitude oracle")
    F = length_filtration(G, max_degree, ring, cap)
    first = spectral_page(F, 1, ring)
    magnitude = magnitude_complex(G, max_degree, ring, cap)

    report = CheckReport("magnitude-oracle", ring)
    report.expect(F.is_compatible(), "the differential raises length")
    lengths = sorted(set(range(F.max_length() + 1)) | set(magnitude.lengths()))
    for k in range(max_degree + 1):
        for s in lengths:
            expected, computed = magnitude.rank(k, s), first.rank(s, k)
            if expected or computed: report.add_row(degree=k, length=s, magnitude=expected, page=computed)
            report.expect(expected == computed, "E^1_{%d,%d} is %d, magnitude homology gives %d" % (s, k, computed, expected))
    return report

def convergence_check(G, ring=None, max_degree=3, max_page=None, cap=None):
    """
    Pages up to the stable one, the stabilization page, and the graded
    dimensions of the limit against reachability homology.
    """
    ring = check_field(ring or Ring(Ring.RATIONALS), "spectral sequence convergence")
    F = length_filtration(G, max_degree, ring, cap)
    last = F.max_length() + 1
    betti = reachability_homology(G, ring, max_degree, cap=cap).betti_numbers()

    pages = [spectral_page(F, r, ring) for r in range(1, last + 1)]
    limit = pages[-1]
    stable = next(page.r for page in pages if page == limit)
    LOGGER.info("spectral sequence stabilizes at page %d", stable)

    report = CheckReport("mpss-convergence", ring)
    report.details["stable_page"] = stable
    report.details["pages"] = [page.to_dict() for page in pages[:max(stable, 2)]]
    report.details["e2_diagonal"] = pages[1].diagonal() if len(pages) > 1 else pages[0].diagonal()

    for earlier, later in zip(pages, pages[1:]):
        report.expect(all(later.rank(s, k) <= earlier.rank(s, k) for s, k in later.ranks),
                      "page %d is larger than page %d" % (later.r, earlier.r))

    report.expect(associated_graded(F, ring) == limit, "limit page differs from the associated graded of homology")
    for k in range(max_degree + 1):
        report.add_row(degree=k, betti=betti[k], limit=limit.total(k))
        report.expect(limit.total(k) == betti[k], "limit page has total rank %d in degree %d, betti is %d" % (limit.total(k), k, betti[k]))

    if max_page is not None and max_page < stable:
        report.inconclusive("pages up to %d do not reach the stable page %d" % (max_page, stable))
    return report
