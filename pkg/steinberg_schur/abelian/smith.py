"""
Module to compute Smith normal forms of integer matrices and abelianizations of presentations.

All arithmetic is on Python integers, so entries may grow without overflow.
"""
from collections import namedtuple
from sympy.polys.domains import ZZ

from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.presentations.words import exponent_sums


SmithForm = namedtuple('SmithForm', ['invariants', 'left', 'right', 'diagonal'])


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(a, b):
    columns = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, column)) for column in columns] for row in a]


class _Reduction:
    """
    Row and column operations applied to a matrix and, if requested, to its transforms.
    """
    def __init__(self, matrix, transforms):
        self.a = [[int(x) for x in row] for row in matrix]
        self.m = len(self.a)
        self.n = len(self.a[0]) if self.a else 0
        self.left = _identity(self.m) if transforms else None
        self.right = _identity(self.n) if transforms else None

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            if self.left is not None:
                self.left[i], self.left[j] = self.left[j], self.left[i]

    def swap_columns(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            if self.right is not None:
                for row in self.right:
                    row[i], row[j] = row[j], row[i]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.left is not None:
            self.left[i] = [-x for x in self.left[i]]

    def combine_rows(self, i, j, s, t, u, v):
        # (row_i, row_j) <- (s row_i + t row_j, u row_i + v row_j)
        for rows in [self.a] + ([self.left] if self.left is not None else []):
            ri, rj = rows[i], rows[j]
            rows[i] = [s * x + t * y for x, y in zip(ri, rj)]
            rows[j] = [u * x + v * y for x, y in zip(ri, rj)]

    def combine_columns(self, i, j, s, t, u, v):
        # (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
        for rows in [self.a] + ([self.right] if self.right is not None else []):
            for row in rows:
                x, y = row[i], row[j]
                row[i], row[j] = s * x + t * y, u * x + v * y


def smith_normal_form(matrix, transforms=True, check=False):
    """
    Compute the Smith normal form L M R = D of an integer matrix.

    Parameters
    ----------
    matrix : list of lists or 2D array of int (required)

    transforms : bool (default=True)
        Whether to compute the unimodular transforms L and R.

    check : bool (default=False)
        If True, verify L M R = D and the divisibility chain, raising RuntimeError otherwise.

    Returns
    -------
    form : SmithForm
        invariants of the cokernel Z^n / (row space), left, right and the diagonal entries.
    """
    reduction = _Reduction(matrix, transforms)
    a, m, n = reduction.a, reduction.m, reduction.n
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        reduction.swap_rows(t, i)
        reduction.swap_columns(t, j)
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    x, y = a[t][t], a[i][t]
                    if y % x == 0:
                        reduction.combine_rows(t, i, 1, 0, -(y // x), 1)
                    else:
                        # The pivot becomes gcd(x, y), a proper divisor of x
                        s, u, g = (int(value) for value in ZZ.gcdex(ZZ(x), ZZ(y)))
                        reduction.combine_rows(t, i, s, u, -y // g, x // g)
            for j in range(t + 1, n):
                if a[t][j]:
                    x, y = a[t][t], a[t][j]
                    if y % x == 0:
                        reduction.combine_columns(t, j, 1, 0, -(y // x), 1)
                    else:
                        s, u, g = (int(value) for value in ZZ.gcdex(ZZ(x), ZZ(y)))
                        reduction.combine_columns(t, j, s, u, -y // g, x // g)
            if any(a[i][t] for i in range(t + 1, m)):
                continue
            pivot = a[t][t]
            offender = next((i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot), None)
            if offender is None:
                break
            reduction.combine_rows(t, offender, 1, 1, 0, 1)
        if a[t][t] < 0:
            reduction.negate_row(t)
        t += 1

    diagonal = [a[k][k] for k in range(min(m, n))]
    nonzero = [d for d in diagonal if d]
    invariants = AbelianInvariants(nonzero, n - len(nonzero))
    if check:
        if transforms:
            product = _matmul(_matmul(reduction.left, [[int(x) for x in row] for row in matrix]), reduction.right)
            if product != a:
                raise RuntimeError('Smith normal form transforms do not reproduce the diagonal')
        if any(a[i][j] for i in range(m) for j in range(n) if i != j):
            raise RuntimeError('Smith normal form is not diagonal')
        for x, y in zip(nonzero, nonzero[1:]):
            if y % x:
                raise RuntimeError(f'Smith normal form breaks the divisibility chain at {x}, {y}')
    return SmithForm(invariants, reduction.left, reduction.right, diagonal)


def relation_matrix(presentation):
    """
    Get the exponent-sum matrix: one row per relator, one column per generator.
    """
    generators = presentation.generators
    return [list(exponent_sums(word, generators)) for word in presentation.relators]


def _sparse_row(word):
    """
    Get the nonzero exponent sums of a word as a dict, with a positive leading entry.
    """
    sums = {}
    for letter in word:
        column = abs(letter) - 1
        sums[column] = sums.get(column, 0) + (1 if letter > 0 else -1)
    row = {column: value for column, value in sums.items() if value}
    if row and row[min(row)] < 0:
        row = {column: -value for column, value in row.items()}
    return row


def _combine(a, b, s, t):
    # s a + t b on sparse rows
    result = {}
    for column in a.keys() | b.keys():
        value = s * a.get(column, 0) + t * b.get(column, 0)
        if value:
            result[column] = value
    return result


def echelon_rows(rows):
    """
    Reduce sparse integer rows to an echelon basis of the lattice they span, one row at a time.

    Parameters
    ----------
    rows : iterable of dicts (required)
        Column -> nonzero entry.

    Returns
    -------
    pivots : dict
        Leading column -> row with that leading column and a positive leading entry.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            column = min(row)
            pivot = pivots.get(column)
            if pivot is None:
                if row[column] < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[column] = row
                break
            x, y = pivot[column], row[column]
            if y % x == 0:
                row = _combine(row, pivot, 1, -(y // x))
            else:
                s, u, g = (int(value) for value in ZZ.gcdex(ZZ(x), ZZ(y)))
                leading = _combine(pivot, row, s, u)
                pivots[column] = leading if g > 0 else {k: -v for k, v in leading.items()}
                row = _combine(pivot, row, -y // g, x // g)
    return pivots


def abelianization(presentation, check=False):
    """
    Get the abelianization of a finitely presented group. The result is trivial iff the group is perfect.

    Repeated relator rows are dropped and the rest are reduced to an echelon basis before the
    Smith normal form, which then works on at most one row per generator.
    """
    generators = presentation.generators
    rows = {}
    for word in presentation.relators:
        row = _sparse_row(word)
        if row:
            rows.setdefault(tuple(sorted(row.items())), row)
    pivots = echelon_rows(rows.values())
    matrix = [[pivots[column].get(k, 0) for k in range(generators)] for column in sorted(pivots)]
    if not matrix:
        return AbelianInvariants((), generators)
    return smith_normal_form(matrix, transforms=False, check=check).invariants
