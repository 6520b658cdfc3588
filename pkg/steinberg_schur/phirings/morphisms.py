"""
Module to search homomorphisms and isomorphisms between small finite algebras.
"""
import itertools
import numpy as np

from steinberg_schur.phirings.finite_ring import FiniteRing
from steinberg_schur.phirings.recipes import dual_numbers, gf
from steinberg_schur.phirings.tits_rings import b33_ring


def zero_ring(size=2, name=None):
    """
    Build the cyclic group of the given order with zero multiplication.
    """
    values = np.arange(size)
    add = (values[:, None] + values[None, :]) % size
    return FiniteRing(add, np.zeros((size, size), dtype=np.int64), name=name or f'C{size}')


def is_homomorphism(source, target, maps):
    """
    Check that per-sort maps commute with every operation present in both signatures (constants excluded).

    Parameters
    ----------
    source, target : algebras of the same kind (required)

    maps : dict (required)
        Sort name -> numpy array from source ids to target ids.
    """
    target_ops = {op.name: op for op in target.signature().operations}
    for op in source.signature().operations:
        if not op.args or op.name not in target_ops:
            continue
        grids = np.ix_(*[np.arange(len(maps[sort])) for sort in op.args])
        images = tuple(maps[sort][grid] for sort, grid in zip(op.args, grids))
        if not np.array_equal(maps[op.result][op.table[grids]], target_ops[op.name].table[images]):
            return False
    return True


def ring_homomorphisms(source, target):
    """
    Enumerate all ring homomorphisms (additive and multiplicative, zero to zero) by brute force.
    """
    for images in itertools.product(range(target.size), repeat=source.size - 1):
        f = np.array((0,) + images, dtype=np.int64)
        if not np.array_equal(f[source.add_table], target.add_table[np.ix_(f, f)]):
            continue
        if not np.array_equal(f[source.mul_table], target.mul_table[np.ix_(f, f)]):
            continue
        if source.star_table is not None and target.star_table is not None:
            if not np.array_equal(f[source.star_table], target.star_table[f]):
                continue
        yield f


def b_ring_r3_homomorphisms(source, target):
    """
    Enumerate homomorphisms between B-rings of the r3 variety, where Delta is identified with R
    through u -> <iota, u> and p -> iota.p.
    """
    for f in ring_homomorphisms(source.ring, target.ring):
        g = target.extras['iota_dot'][f[source.extras['iota_pair']]]
        maps = {'R': f, 'D': g}
        if is_homomorphism(source, target, maps):
            yield maps


def find_isomorphism(a, b):
    """
    Find a bijection of carriers preserving addition, multiplication and the involution, by backtracking.

    Returns
    -------
    isomorphism : numpy array or None
    """
    if a.size != b.size:
        return None
    n = a.size
    f = -np.ones(n, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    f[0], used[0] = 0, True

    def consistent(x):
        # Every product of assigned elements whose value is assigned must be preserved
        assigned = np.nonzero(f >= 0)[0]
        images = f[assigned]
        for table_a, table_b in ((a.add_table, b.add_table), (a.mul_table, b.mul_table)):
            mapped = f[table_a[np.ix_(assigned, assigned)]]
            known = mapped >= 0
            if not np.array_equal(mapped[known], table_b[np.ix_(images, images)][known]):
                return False
        if a.star_table is not None and b.star_table is not None:
            z = a.star_table[x]
            if f[z] >= 0 and f[z] != b.star_table[f[x]]:
                return False
        return True

    def extend(x):
        if x == n:
            return True
        for y in range(n):
            if used[y]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and extend(x + 1):
                return True
            f[x], used[y] = -1, False
        return False

    return f.copy() if extend(1) else None


# Subdirectly irreducible algebras of the varieties
def _r2eps_targets():
    return [gf(2, name='F2'), zero_ring(2, name='C2'), dual_numbers(gf(2), name='F2[e]')]


def _r3_targets():
    return [b33_ring(gf(3, name='F3'))]


SUBDIRECT_TARGETS = {
    'r2eps': _r2eps_targets,
    'r3': _r3_targets,
}


class SubdirectReport:
    """
    Homomorphisms found to the irreducible algebras and whether they separate points.
    """
    def __init__(self, variety, homomorphisms, separating):
        self.variety = variety
        self.homomorphisms = homomorphisms
        self.separating = separating

    def factors(self):
        return [name for name, _ in self.homomorphisms]

    def __repr__(self):
        return (f'SubdirectReport({self.variety}, separating={self.separating}, '
                f'homomorphisms={len(self.homomorphisms)})')


def subdirect_classification(variety, algebra):
    """
    Check that an algebra is a subdirect product of the listed irreducible algebras of its variety.

    Parameters
    ----------
    variety : string (required)
        r2eps (targets F2, C2, F2[eps]) or r3 (target the B3-ring F3).

    algebra : FiniteRing or BRing (required)
    """
    if variety not in SUBDIRECT_TARGETS:
        raise ValueError(f'No subdirect classification for {variety}. Choose from {list(SUBDIRECT_TARGETS)}')
    found = []
    for target in SUBDIRECT_TARGETS[variety]():
        if variety == 'r3':
            if algebra.kind != 'b_ring':
                raise ValueError('The r3 classification applies to B3-rings')
            for maps in b_ring_r3_homomorphisms(algebra, target):
                found.append((target.name, maps))
        else:
            for f in ring_homomorphisms(algebra, target):
                found.append((target.name, {'R': f}))

    # Every pair of distinct elements of every sort must be separated by some homomorphism
    separating = True
    for sort, size in algebra.signature().sorts.items():
        for x, y in itertools.combinations(range(size), 2):
            if not any(maps[sort][x] != maps[sort][y] for _, maps in found):
                separating = False
                break
    return SubdirectReport(variety, found, separating)
