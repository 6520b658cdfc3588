"""
Module to build multiplication tables of small finite groups.

A GroupTable stores the products of elements 0..n-1 as an n x n array: table[a, b] is ab, where
for permutations ab means a then b.
"""
from itertools import permutations
import galois
import numpy as np


class GroupTable:
    """
    A finite group given by its multiplication table.

    Parameters
    ----------
    table : array-like n x n (required)

    labels : list of strings (default=None)

    name : string (default='group')

    validate : bool (default=True)
        Whether to check closure, associativity, the identity and inverses.
    """
    def __init__(self, table, labels=None, name='group', validate=True):
        self.table = np.asarray(table, dtype=np.int64)
        n = self.table.shape[0]
        if self.table.shape != (n, n) or n == 0:
            raise ValueError(f'A group table must be a nonempty square array, got shape {self.table.shape}')
        self.labels = labels or [str(k) for k in range(n)]
        self.name = name
        if validate:
            self.validate()
        identities = [e for e in range(n) if np.array_equal(self.table[e], np.arange(n))]
        if not identities:
            raise ValueError(f'{name} has no identity element')
        self.identity = identities[0]
        self.inverses = np.argmax(self.table == self.identity, axis=1)

    def __repr__(self):
        return f'GroupTable({self.name!r}, order={self.order})'

    @property
    def order(self):
        return self.table.shape[0]

    def validate(self):
        n = self.table.shape[0]
        if self.table.min() < 0 or self.table.max() >= n:
            raise ValueError(f'{self.name}: products must be elements 0..{n - 1}')
        for row in self.table:
            if len(set(row.tolist())) != n:
                raise ValueError(f'{self.name}: a row of the table is not a permutation')
        for column in self.table.T:
            if len(set(column.tolist())) != n:
                raise ValueError(f'{self.name}: a column of the table is not a permutation')
        elements = np.arange(n)
        left = self.table[self.table[:, :, None], elements[None, None, :]]
        right = self.table[elements[:, None, None], self.table[None, :, :]]
        if not np.array_equal(left, right):
            a, b, c = np.argwhere(left != right)[0]
            raise ValueError(f'{self.name} is not associative: ({a} {b}) {c} != {a} ({b} {c})')

    def mul(self, a, b):
        return int(self.table[a, b])

    def inverse(self, a):
        return int(self.inverses[a])

    def commutator(self, a, b):
        return self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))

    def closure(self, generators):
        """
        Get the subgroup generated by some elements as a sorted list.
        """
        found = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for a in frontier:
                for g in generators:
                    b = self.mul(a, g)
                    if b not in found:
                        found.add(b)
                        new.append(b)
            frontier = new
        return sorted(found)

    def derived_subgroup(self):
        commutators = {self.commutator(a, b) for a in range(self.order) for b in range(self.order)}
        return self.closure(sorted(commutators))

    def is_perfect(self):
        return len(self.derived_subgroup()) == self.order

    def center(self):
        return [z for z in range(self.order) if np.array_equal(self.table[z], self.table[:, z])]

    def generating_set(self):
        """
        Get a small generating set by greedily adding the element that enlarges the subgroup most.
        """
        generators, subgroup = [], {self.identity}
        while len(subgroup) < self.order:
            candidates = [a for a in range(self.order) if a not in subgroup]
            best = max(candidates, key=lambda a: (len(self.closure(generators + [a])), -a))
            generators.append(best)
            subgroup = set(self.closure(generators))
        return generators


def _closure_table(identity, generators, key, multiply, name, labels=None):
    """
    Close a list of generators under multiplication and tabulate the products.
    """
    found = {key(identity): 0}
    members = [identity]
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g)
                k = key(y)
                if k not in found:
                    found[k] = len(members)
                    members.append(y)
                    new.append(y)
        frontier = new
    n = len(members)
    table = np.zeros((n, n), dtype=np.int64)
    for a, x in enumerate(members):
        for b, y in enumerate(members):
            table[a, b] = found[key(multiply(x, y))]
    return GroupTable(table, labels=labels(members) if labels else None, name=name, validate=False), members


def cyclic_table(n):
    elements = np.arange(n)
    return GroupTable((elements[:, None] + elements[None, :]) % n, name=f'C{n}')


def table_from_permutations(generators, name='permutation group'):
    """
    Get the table of the group generated by permutations of range(degree), given as sequences.
    """
    generators = [tuple(int(x) for x in g) for g in generators]
    degree = len(generators[0]) if generators else 1
    for g in generators:
        if sorted(g) != list(range(degree)):
            raise ValueError(f'{g} is not a permutation of range({degree})')
    identity = tuple(range(degree))
    table, _ = _closure_table(identity, generators, lambda x: x, lambda x, g: tuple(g[i] for i in x), name,
                              labels=lambda members: [str(list(p)) for p in members])
    return table


def alternating_table(n=5):
    """
    Get the table of the alternating group on n points, elements in lexicographic order.
    """
    even = [p for p in permutations(range(n))
            if sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) % 2 == 0]
    position = {p: k for k, p in enumerate(even)}
    table = [[position[tuple(b[i] for i in a)] for b in even] for a in even]
    return GroupTable(table, labels=[str(list(p)) for p in even], name=f'A{n}', validate=False)


def table_from_matrices(generators, name='matrix group'):
    """
    Get the table of the group generated by invertible galois matrices.

    Returns
    -------
    table : GroupTable

    members : list of galois FieldArray
        The matrix of every element.
    """
    field = type(generators[0])
    identity = field.Identity(generators[0].shape[0])
    return _closure_table(identity, list(generators), lambda x: x.tobytes(), lambda x, g: x @ g, name)


def special_linear_table(q, dimension=2):
    """
    Get the table of SL(dimension, q) generated by elementary matrices, with the matrices.
    """
    field = galois.GF(q)
    generators = []
    for i in range(dimension):
        for j in range(dimension):
            if i != j:
                matrix = field.Identity(dimension)
                matrix[i, j] = field.primitive_element if q > 2 else 1
                generators.append(matrix)
                unit = field.Identity(dimension)
                unit[i, j] = 1
                generators.append(unit)
    return table_from_matrices(generators, name=f'SL({dimension},{q})')


def parse_group_table(text, name='group'):
    """
    Read a group table: a line `order n` followed by n lines of n products.

    Blank lines and lines starting with # are ignored. Raises ValueError with the line number for malformed input.
    """
    order, rows = None, []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if order is None:
            keyword, _, rest = line.partition(' ')
            if keyword != 'order' or not rest.strip().isdigit() or int(rest) < 1:
                raise ValueError(f'line {number}: expected order n')
            order = int(rest)
            continue
        try:
            row = [int(token) for token in line.split()]
        except ValueError:
            raise ValueError(f'line {number}: products must be integers')
        if len(row) != order:
            raise ValueError(f'line {number}: expected {order} products, got {len(row)}')
        if any(not 0 <= x < order for x in row):
            raise ValueError(f'line {number}: products must lie in 0..{order - 1}')
        if len(rows) == order:
            raise ValueError(f'line {number}: more than {order} rows')
        rows.append(row)
    if order is None:
        raise ValueError('line 1: expected order n')
    if len(rows) != order:
        raise ValueError(f'line {len(text.splitlines())}: expected {order} rows, got {len(rows)}')
    return GroupTable(rows, name=name)


def serialize_group_table(group):
    lines = [f'order {group.order}']
    lines += [' '.join(str(int(x)) for x in row) for row in group.table]
    return '\n'.join(lines) + '\n'


def read_group_table(filepath):
    with open(filepath, encoding='utf-8') as file:
        return parse_group_table(file.read(), name=filepath)
