"""
Exact matrices over Z, Q and GF(p).

Matrices are sparse sympy ``DomainMatrix`` objects (dict-of-dicts ``SDM``
storage) over ``ring.domain``; a boundary column has at most k + 2 nonzero
entries, so products and eliminations only touch those. Ranks, kernels and
solutions over fields come from the sparse reduced row echelon form; over Z
everything goes through ``smith_reduce``, a Smith normal form with
smallest-absolute-value pivoting that also tracks the inverses of both
unimodular factors.
"""

__author__ = 'reachhom'

import logging

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

LOGGER = logging.getLogger(__name__)


#########################################################################################
#
# CONSTRUCTION AND ACCESS
#
#########################################################################################

def _sparse(entries, shape, domain):
    """entries: {row: {column: value}}; zero values and empty rows are dropped."""
    zero = domain.zero
    cleaned = {}
    for i, row in entries.items():
        kept = {j: value for j, value in row.items() if value != zero}
        if kept: cleaned[i] = kept
    return DomainMatrix(cleaned, shape, domain)

def entries_of(M):
    """Nonzero entries as {row: {column: value}}."""
    zero = M.domain.zero
    out = {}
    for i, row in M.to_sparse().rep.items():
        kept = {j: value for j, value in row.items() if value != zero}
        if kept: out[i] = kept
    return out

def build(rows, ring, cols=None):
    rows = list(rows)
    if cols is None: cols = len(rows[0]) if rows else 0
    entries = {i: {j: ring.coerce(x) for j, x in enumerate(row) if x} for i, row in enumerate(rows)}
    return _sparse(entries, (len(rows), cols), ring.domain)

def zeros(shape, ring):
    return DomainMatrix({}, tuple(shape), ring.domain)

def identity(n, ring):
    return DomainMatrix({i: {i: ring.domain.one} for i in range(n)}, (n, n), ring.domain)

def from_entries(entries, shape, ring):
    """entries: {(row, column): value}, later values accumulate."""
    K = ring.domain
    rows = {}
    for (i, j), value in entries.items():
        row = rows.setdefault(i, {})
        row[j] = row.get(j, K.zero) + ring.coerce(value)
    return _sparse(rows, tuple(shape), K)

def rows_of(M):
    m, n = M.shape
    zero = M.domain.zero
    out = [[zero] * n for _ in range(m)]
    for i, row in entries_of(M).items():
        for j, value in row.items(): out[i][j] = value
    return out

def int_rows(M):
    return [[int(x) for x in row] for row in rows_of(M)]

def columns_of(M):
    """Sparse columns: list of [(row, value), ...] with nonzero values, rows increasing."""
    columns = [[] for _ in range(M.shape[1])]
    for i, row in sorted(entries_of(M).items()):
        for j, value in row.items(): columns[j].append((i, value))
    return columns

def is_zero(M):
    return not entries_of(M)

def equal(A, B):
    return A.shape == B.shape and entries_of(A) == entries_of(B)

def multiply(A, B):
    if A.shape[1] != B.shape[0]:
        raise ValueError("cannot multiply %s by %s" % (A.shape, B.shape))
    if 0 in A.shape or 0 in B.shape:
        return DomainMatrix({}, (A.shape[0], B.shape[1]), A.domain)
    return A.to_sparse().matmul(B.to_sparse())

def add(A, B):
    return A.to_sparse().add(B.to_sparse())

def subtract(A, B):
    return A.to_sparse().sub(B.to_sparse())

def hstack(blocks, ring, rows=None):
    if rows is None: rows = blocks[0].shape[0]
    out, offset = {}, 0
    for block in blocks:
        for i, row in entries_of(block).items():
            target = out.setdefault(i, {})
            for j, value in row.items(): target[offset + j] = value
        offset += block.shape[1]
    return DomainMatrix(out, (rows, offset), ring.domain)

def vstack(blocks, ring, cols=None):
    if cols is None: cols = blocks[0].shape[1]
    out, offset = {}, 0
    for block in blocks:
        for i, row in entries_of(block).items(): out[offset + i] = dict(row)
        offset += block.shape[0]
    return DomainMatrix(out, (offset, cols), ring.domain)

def select(M, rows=None, cols=None):
    if rows is None: rows = range(M.shape[0])
    if cols is None: cols = range(M.shape[1])
    rows, cols = list(rows), list(cols)
    column_position = {j: position for position, j in enumerate(cols)}
    entries = entries_of(M)

    out = {}
    for position, i in enumerate(rows):
        row = entries.get(i)
        if not row: continue
        kept = {column_position[j]: value for j, value in row.items() if j in column_position}
        if kept: out[position] = kept
    return DomainMatrix(out, (len(rows), len(cols)), M.domain)


#########################################################################################
#
# FIELD ALGEBRA
#
#########################################################################################

def rref(M, ring):
    """
    Reduced row echelon form over the field of fractions of the ring.

    :return: ({row: {column: value}}, pivot columns)
    """
    field = ring.field()
    M = M.to_sparse().convert_to(field.domain)
    if 0 in M.shape or is_zero(M): return {}, ()
    reduced, pivots = M.rref()
    return entries_of(reduced), tuple(pivots)

def rank(M, ring):
    return len(rref(M, ring)[1])

def kernel_basis(M, ring):
    """Columns spanning the kernel; over Z a saturated lattice basis."""
    n = M.shape[1]
    if not ring.is_field:
        form = smith_reduce(int_rows(M), M.shape[0], n)
        return build([row[form.rank:] for row in form.V], ring, cols=n - form.rank)

    K = ring.domain
    reduced, pivots = rref(M, ring)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    free_position = {f: column for column, f in enumerate(free)}

    basis = {}
    for column, f in enumerate(free): basis.setdefault(f, {})[column] = K.one
    for row, p in enumerate(pivots):
        for j, value in reduced.get(row, {}).items():
            if j in free_position: basis.setdefault(p, {})[free_position[j]] = -value
    return _sparse(basis, (n, len(free)), K)

def solve(M, B, ring):
    """
    One solution X of M X = B, or None when some column is inconsistent.
    """
    m, n = M.shape
    if not ring.is_field:
        form = smith_reduce(int_rows(M), m, n)
        right_hand = int_rows(B)
        solution = []
        for j in range(B.shape[1]):
            x = form.solve([row[j] for row in right_hand])
            if x is None: return None
            solution.append(x)
        return build([[x[i] for x in solution] for i in range(n)], ring, cols=B.shape[1])

    K = ring.domain
    reduced, pivots = rref(hstack([M, B], ring, rows=m), ring)
    if any(p >= n for p in pivots): return None

    solution = {}
    for row, p in enumerate(pivots):
        values = {j - n: value for j, value in reduced.get(row, {}).items() if j >= n}
        if values: solution[p] = values
    return _sparse(solution, (n, B.shape[1]), K)

def column_space_basis(M, ring):
    """Pivot columns of M: a basis of its column space (over a field)."""
    _, pivots = rref(M, ring)
    return select(M, cols=pivots)


#########################################################################################
#
# SMITH NORMAL FORM
#
#########################################################################################

class SmithForm:
    """
    U * M * V = D with U, V unimodular, their inverses, and the nonzero
    invariant factors d_1 | d_2 | ... on the diagonal of D.
    """
    def __init__(self, U, U_inverse, D, V, V_inverse, rank):
        self.U = U
        self.U_inverse = U_inverse
        self.D = D
        self.V = V
        self.V_inverse = V_inverse
        self.rank = rank

    @property
    def diagonal(self):
        return [self.D[k][k] for k in range(self.rank)]

    def solve(self, b):
        """Integer x with M x = b, or None."""
        y = _apply(self.U, b)
        z = [0] * len(self.V)
        for k, value in enumerate(y):
            if k < self.rank:
                if value % self.D[k][k]: return None
                z[k] = value // self.D[k][k]
            elif value:
                return None
        return _apply(self.V, z)

def _identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

def _apply(rows, vector):
    return [sum(a * b for a, b in zip(row, vector)) for row in rows]

def _smallest_entry(A, t, m, n):
    best = None
    for i in range(t, m):
        row = A[i]
        for j in range(t, n):
            value = row[j]
            if value:
                size = abs(value)
                if size == 1: return i, j
                if best is None or size < best[0]: best = (size, i, j)
    return None if best is None else best[1:]

def smith_reduce(rows, m, n):
    A = [[int(x) for x in row] for row in rows]
    U, U_inverse = _identity_rows(m), _identity_rows(m)
    V, V_inverse = _identity_rows(n), _identity_rows(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in U_inverse: row[i], row[j] = row[j], row[i]

    def swap_columns(i, j):
        for row in A: row[i], row[j] = row[j], row[i]
        for row in V: row[i], row[j] = row[j], row[i]
        V_inverse[i], V_inverse[j] = V_inverse[j], V_inverse[i]

    def add_row(target, source, q):
        A[target] = [a + q * b for a, b in zip(A[target], A[source])]
        U[target] = [a + q * b for a, b in zip(U[target], U[source])]
        for row in U_inverse: row[source] -= q * row[target]

    def add_column(target, source, q):
        for row in A: row[target] += q * row[source]
        for row in V: row[target] += q * row[source]
        V_inverse[source] = [a - q * b for a, b in zip(V_inverse[source], V_inverse[target])]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for row in U_inverse: row[i] = -row[i]

    t = 0
    while t < min(m, n):
        pivot = _smallest_entry(A, t, m, n)
        if pivot is None: break
        if pivot[0] != t: swap_rows(t, pivot[0])
        if pivot[1] != t: swap_columns(t, pivot[1])

        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]: add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]: add_column(j, t, -(A[t][j] // p))

            leftovers = [(abs(A[i][t]), 0, i) for i in range(t + 1, m) if A[i][t]] + \
                        [(abs(A[t][j]), 1, j) for j in range(t + 1, n) if A[t][j]]
            if leftovers:
                _, is_column, k = min(leftovers)
                if is_column: swap_columns(t, k)
                else:         swap_rows(t, k)
                continue

            if abs(p) != 1:
                offending = next((i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))), None)
                if offending is not None:
                    add_row(t, offending, 1)
                    continue
            break

        if A[t][t] < 0: negate_row(t)
        t += 1

    LOGGER.debug("smith form of a %dx%d matrix has rank %d", m, n, t)
    return SmithForm(U, U_inverse, A, V, V_inverse, t)

def smith_normal_form(M):
    """
    :param M: integer DomainMatrix (or list of rows)
    :return: (U, D, V) over ZZ with U * M * V = D
    """
    if isinstance(M, DomainMatrix): rows, (m, n) = int_rows(M), M.shape
    else:                           rows, m, n = M, len(M), len(M[0]) if M else 0

    form = smith_reduce(rows, m, n)
    as_matrix = lambda data, r, c: DomainMatrix([[ZZ(x) for x in row] for row in data], (r, c), ZZ)
    return as_matrix(form.U, m, m), as_matrix(form.D, m, n), as_matrix(form.V, n, n)

def _unit_pivots(rows):
    """
    Gaussian elimination on +-1 pivots, in place on sparse integer rows
    {row: {column: value}}. A unit pivot splits off an invariant factor 1
    and leaves the rest equivalent to the remaining rows and columns.

    :return: number of pivots taken
    """
    columns = {}
    for i, row in rows.items():
        for j in row: columns.setdefault(j, set()).add(i)

    units, progress = 0, True
    while progress:
        progress = False
        for r in sorted(rows, key=lambda i: len(rows[i])):
            row = rows.get(r)
            if not row: continue
            candidates = [j for j, value in row.items() if value in (1, -1)]
            if not candidates: continue

            c = min(candidates, key=lambda j: len(columns[j]))
            p = row[c]
            for i in list(columns[c]):
                if i == r: continue
                target = rows[i]
                q = target[c] * p
                for j, value in row.items():
                    updated = target.get(j, 0) - q * value
                    if updated:
                        target[j] = updated
                        columns.setdefault(j, set()).add(i)
                    elif j in target:
                        del target[j]
                        columns[j].discard(i)
                if not target: del rows[i]

            for j in row: columns[j].discard(r)
            del rows[r]
            units += 1
            progress = True
    return units

def invariant_factors(M):
    """Nonzero invariant factors; unit pivots are eliminated sparsely before the dense Smith form."""
    if isinstance(M, DomainMatrix):
        rows = {i: {j: int(x) for j, x in row.items()} for i, row in entries_of(M).items()}
    else:
        rows = {i: {j: int(x) for j, x in enumerate(row) if x} for i, row in enumerate(M)}

    units = _unit_pivots(rows)
    kept_rows = sorted(rows)
    kept_columns = sorted({j for row in rows.values() for j in row})
    residual = [[rows[i].get(j, 0) for j in kept_columns] for i in kept_rows]
    return [1] * units + smith_reduce(residual, len(kept_rows), len(kept_columns)).diagonal

def lattice_contains(rows, m, n, vector):
    return smith_reduce(rows, m, n).solve(vector) is not None
