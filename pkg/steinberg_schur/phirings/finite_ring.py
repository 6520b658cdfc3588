"""
Module to define finite rings given by operation tables.

Elements are integer ids 0..n-1 and the id 0 is the additive zero. Rings need not be associative or unital.
"""
import itertools
import numpy as np


class Operation:
    """
    One operation of a finite algebra: a table indexed by argument ids.

    Parameters
    ----------
    name : string (required)

    args : tuple of strings (required)
        Sort names of the arguments.

    result : string (required)
        Sort name of the result.

    table : numpy array (required)
        Array with one axis per argument.
    """
    def __init__(self, name, args, result, table):
        self.name = name
        self.args = tuple(args)
        self.result = result
        self.table = np.asarray(table, dtype=np.int64)

    def __repr__(self):
        return f'Operation({self.name}: {" x ".join(self.args) or "1"} -> {self.result})'


class Signature:
    """
    Multi-sorted description of a finite algebra, used by the congruence closure.

    Parameters
    ----------
    sorts : dict (required)
        Sort name to carrier size.

    operations : list of Operation (required)
        Operations including constants (operations without arguments, given by a 0-d table).
    """
    def __init__(self, sorts, operations):
        self.sorts = dict(sorts)
        self.operations = list(operations)

    def operation(self, name):
        for op in self.operations:
            if op.name == name:
                return op
        raise KeyError(name)

    def has(self, name):
        return any(op.name == name for op in self.operations)


def _table(array, shape, name):
    array = np.asarray(array, dtype=np.int64)
    if array.shape != shape:
        raise ValueError(f'Table {name} has shape {array.shape}, expected {shape}')
    if array.size and (array.min() < 0 or array.max() >= shape[0] if shape else False):
        raise ValueError(f'Table {name} has entries outside 0..{shape[0] - 1}')
    return array


class FiniteRing:
    """
    Finite ring (abelian group with biadditive multiplication) given by operation tables.

    Parameters
    ----------
    add : array-like n x n (required)
        Addition table. The element 0 must be the additive zero.

    mul : array-like n x n (required)
        Multiplication table.

    neg : array-like of length n (default=None)
        Negation table. Computed from add if None.

    one : int (default=None)
        Id of the unit, if the ring is unital.

    star : array-like of length n (default=None)
        Involution (anti-endomorphism) table.

    lam : int (default=None)
        Id of the distinguished invertible nuclear element lambda.

    labels : list of strings (default=None)
        Printable names of the elements.

    name : string (default='ring')
    """
    kind = 'ring'

    def __init__(self, add, mul, neg=None, one=None, star=None, lam=None, labels=None, name='ring'):
        self.add_table = np.asarray(add, dtype=np.int64)
        n = self.add_table.shape[0]
        if self.add_table.shape != (n, n):
            raise ValueError(f'Addition table must be square, got shape {self.add_table.shape}')
        self.size = n
        self.mul_table = _table(mul, (n, n), 'mul')
        if n and not np.array_equal(self.add_table[0], np.arange(n)):
            raise ValueError('Element 0 must be the additive zero')
        if neg is None:
            neg = np.argmin(self.add_table != 0, axis=1) if n else np.zeros(0, dtype=np.int64)
        self.neg_table = _table(neg, (n,), 'neg')
        self.one = one
        self.star_table = None if star is None else _table(star, (n,), 'star')
        self.lam = lam
        self.labels = [str(k) for k in range(n)] if labels is None else [str(label) for label in labels]
        if len(self.labels) != n:
            raise ValueError(f'Expected {n} labels, got {len(self.labels)}')
        self.name = name

    def __repr__(self):
        return f'FiniteRing({self.name!r}, size={self.size})'

    def __len__(self):
        return self.size

    @property
    def elements(self):
        return range(self.size)

    @property
    def nonzero(self):
        return range(1, self.size)

    @property
    def is_unital(self):
        return self.one is not None

    @property
    def has_involution(self):
        return self.star_table is not None

    @property
    def lam_inv(self):
        if self.lam is None or self.one is None:
            return None
        candidates = np.nonzero(self.mul_table[self.lam] == self.one)[0]
        if not len(candidates):
            raise ValueError(f'lambda={self.labels[self.lam]} is not invertible')
        return int(candidates[0])

    # Element operations
    def add(self, a, b):
        return int(self.add_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def star(self, a):
        if self.star_table is None:
            return a
        return int(self.star_table[a])

    def label(self, a):
        return self.labels[a]

    def element(self, label):
        """
        Get the id of an element from its label.
        """
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValueError(f'{label} is not an element of {self.name}. Elements are {self.labels}')

    def total(self, elements):
        result = 0
        for a in elements:
            result = int(self.add_table[result, a])
        return result

    def multiple(self, k, a):
        """
        Get k * a for an integer k.
        """
        if k < 0:
            return self.multiple(-k, self.neg(a))
        result = 0
        for _ in range(k):
            result = int(self.add_table[result, a])
        return result

    def integer(self, k):
        """
        Get the image of the integer k (requires a unit).
        """
        if self.one is None:
            raise ValueError(f'Ring {self.name} has no unit')
        return self.multiple(k, self.one)

    def power(self, a, k):
        """
        Get a^k for k >= 1, multiplying from the left.
        """
        if k < 1:
            if k == 0 and self.one is not None:
                return self.one
            raise ValueError(f'Power {k} is not defined in {self.name}')
        result = a
        for _ in range(k - 1):
            result = int(self.mul_table[result, a])
        return result

    def associator(self, a, b, c):
        return self.sub(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)))

    # Whole-ring properties
    def associator_tensor(self):
        """
        Get the boolean n x n x n array of triples which do not associate.
        """
        n = self.size
        left = self.mul_table[self.mul_table]
        right = self.mul_table[np.arange(n)[:, None, None], self.mul_table[None, :, :]]
        return left != right

    def is_associative(self):
        return not self.associator_tensor().any()

    def is_commutative(self):
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    def is_alternative(self):
        bad = self.associator_tensor()
        n = self.size
        diagonal = np.arange(n)
        return not (bad[diagonal, diagonal, :].any() or bad[:, diagonal, diagonal].any())

    def idempotents(self):
        return [a for a in self.elements if self.mul_table[a, a] == a]

    def subring_closure(self, generators, use_star=True):
        """
        Get the smallest subset containing the generators and closed under +, -, * and the involution.
        """
        closed = {0} | {int(g) for g in generators}
        frontier = list(closed)
        while frontier:
            new = set()
            current = list(closed)
            for a in frontier:
                candidates = [self.neg(a)]
                if use_star and self.star_table is not None:
                    candidates.append(self.star(a))
                for b in current:
                    candidates += [self.add(a, b), self.mul(a, b), self.mul(b, a)]
                for c in candidates:
                    if c not in closed:
                        new.add(c)
            closed |= new
            frontier = sorted(new)
        return sorted(closed)

    def restrict(self, subset, name=None):
        """
        Build the ring induced on a subset closed under the operations.

        Returns
        -------
        ring : FiniteRing

        embedding : list
            Maps ids of the new ring to ids of this ring.
        """
        embedding = sorted(set(int(a) for a in subset) | {0})
        position = {a: k for k, a in enumerate(embedding)}
        try:
            add = [[position[self.add(a, b)] for b in embedding] for a in embedding]
            mul = [[position[self.mul(a, b)] for b in embedding] for a in embedding]
            star = None
            if self.star_table is not None:
                star = [position[self.star(a)] for a in embedding]
        except KeyError as err:
            raise ValueError(f'Subset is not closed under the ring operations: {err} escapes')
        one = position.get(self.one) if self.one is not None else None
        lam = position.get(self.lam) if self.lam is not None else None
        ring = FiniteRing(add, mul, one=one, star=star, lam=lam, labels=[self.labels[a] for a in embedding],
                          name=name or f'{self.name}|sub')
        return ring, embedding

    def signature(self):
        """
        Get the multi-sorted signature used by the congruence closure.
        """
        ops = [
            Operation('add', ('R', 'R'), 'R', self.add_table),
            Operation('neg', ('R',), 'R', self.neg_table),
            Operation('mul', ('R', 'R'), 'R', self.mul_table),
        ]
        if self.star_table is not None:
            ops.append(Operation('star', ('R',), 'R', self.star_table))
        if self.one is not None:
            ops.append(Operation('one', (), 'R', self.one))
        if self.lam is not None:
            ops.append(Operation('lam', (), 'R', self.lam))
        return Signature({'R': self.size}, ops)

    @classmethod
    def from_signature(cls, signature, labels=None, name='ring'):
        sig = signature
        star = sig.operation('star').table if sig.has('star') else None
        one = int(sig.operation('one').table) if sig.has('one') else None
        lam = int(sig.operation('lam').table) if sig.has('lam') else None
        return FiniteRing(
            sig.operation('add').table, sig.operation('mul').table, neg=sig.operation('neg').table,
            one=one, star=star, lam=lam, labels=(labels or {}).get('R'), name=name
        )

    def sort_labels(self):
        return {'R': self.labels}

    def same_tables(self, other):
        """
        Check whether two rings have identical tables (the same ids, not an isomorphism search).
        """
        if self.size != other.size or self.one != other.one or self.lam != other.lam:
            return False
        if (self.star_table is None) != (other.star_table is None):
            return False
        if self.star_table is not None and not np.array_equal(self.star_table, other.star_table):
            return False
        return bool(np.array_equal(self.add_table, other.add_table) and np.array_equal(self.mul_table, other.mul_table))


def nucleus(ring):
    """
    Get the elements that associate with everything, by brute force over triples.
    """
    bad = ring.associator_tensor()
    nuclear = ~(bad.any(axis=(1, 2)) | bad.any(axis=(0, 2)) | bad.any(axis=(0, 1)))
    return [int(a) for a in np.nonzero(nuclear)[0]]


def center(ring):
    """
    Get the nuclear elements commuting with everything.
    """
    commuting = (ring.mul_table == ring.mul_table.T).all(axis=1)
    return [a for a in nucleus(ring) if commuting[a]]


def product_ring(rings, name=None):
    """
    Build the direct product of rings. Element ids are mixed-radix with the first factor varying slowest.
    """
    rings = list(rings)
    if not rings:
        raise ValueError('The product of an empty list of rings is not supported')
    sizes = [r.size for r in rings]
    tuples = list(itertools.product(*[range(s) for s in sizes]))
    position = {t: k for k, t in enumerate(tuples)}
    n = len(tuples)
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            add[a, b] = position[tuple(r.add(x, y) for r, x, y in zip(rings, ta, tb))]
            mul[a, b] = position[tuple(r.mul(x, y) for r, x, y in zip(rings, ta, tb))]
    one = None
    if all(r.one is not None for r in rings):
        one = position[tuple(r.one for r in rings)]
    star = None
    if any(r.has_involution for r in rings):
        star = [position[tuple(r.star(x) for r, x in zip(rings, t))] for t in tuples]
    lam = None
    if all(r.lam is not None for r in rings):
        lam = position[tuple(r.lam for r in rings)]
    labels = ['(' + ','.join(r.labels[x] for r, x in zip(rings, t)) + ')' for t in tuples]
    ring = FiniteRing(add, mul, one=one, star=star, lam=lam, labels=labels,
                      name=name or 'x'.join(r.name for r in rings))
    ring.factors = rings
    ring.coordinates = tuples
    return ring
