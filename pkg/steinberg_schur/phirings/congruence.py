"""
Module to compute universal factor-algebras of finite Phi-rings in a variety by congruence closure.

The congruence is a union-find forest per sort, seeded with every instance of the variety identities and then
closed under all operations until no class changes. Quotient ids are assigned by increasing least element.
"""
import numpy as np

from steinberg_schur.phirings.axioms import TableOps, check_axioms, variety_axioms
from steinberg_schur.phirings.finite_ring import Operation, Signature


class QuotientResult:
    """
    Quotient algebra with its projection.

    Parameters
    ----------
    algebra : FiniteRing, BRing or F4Ring (required)

    projection : dict (required)
        Sort name -> numpy array mapping source ids to quotient ids.

    variety : string (required)
    """
    def __init__(self, algebra, projection, variety):
        self.algebra = algebra
        self.projection = projection
        self.variety = variety

    def __repr__(self):
        sizes = {sort: int(p.max()) + 1 if len(p) else 0 for sort, p in self.projection.items()}
        return f'QuotientResult({self.variety}, sizes={sizes})'

    def is_identity(self):
        return all(np.array_equal(p, np.arange(len(p))) for p in self.projection.values())

    def image(self, element, sort='R'):
        return int(self.projection[sort][element])


class UnionFind:
    """
    Vectorized union-find on 0..n-1 where every root is the least element of its class.
    """
    def __init__(self, size):
        self.parent = np.arange(size, dtype=np.int64)

    def find(self, elements):
        roots = self.parent[elements]
        while True:
            following = self.parent[roots]
            if np.array_equal(following, roots):
                return roots
            roots = following

    def compress(self):
        while True:
            following = self.parent[self.parent]
            if np.array_equal(following, self.parent):
                return
            self.parent = following

    def union(self, a, b):
        """
        Merge the classes of a[k] and b[k] for every k. Returns True when some class changed.
        """
        a = np.asarray(a, dtype=np.int64).ravel()
        b = np.asarray(b, dtype=np.int64).ravel()
        changed = False
        while True:
            ra, rb = self.find(a), self.find(b)
            differ = ra != rb
            if not differ.any():
                return changed
            changed = True
            ra, rb = ra[differ], rb[differ]
            low = np.minimum(ra, rb)
            np.minimum.at(self.parent, ra, low)
            np.minimum.at(self.parent, rb, low)
            self.compress()
            a, b = a[differ], b[differ]

    def classes(self):
        """
        Get the class index of every element, classes numbered by their least element.
        """
        self.compress()
        roots = np.unique(self.parent)
        return np.searchsorted(roots, self.parent), roots


def congruence_closure(signature, seeds, verbose=False):
    """
    Close a set of identified pairs under all operations of a signature.

    Parameters
    ----------
    signature : Signature (required)

    seeds : dict (required)
        Sort name -> list of (a, b) pairs of id arrays to identify.

    Returns
    -------
    forests : dict
        Sort name -> UnionFind describing the congruence.
    """
    forests = {sort: UnionFind(size) for sort, size in signature.sorts.items()}
    for sort, pairs in seeds.items():
        for a, b in pairs:
            forests[sort].union(a, b)
    rounds = 0
    while True:
        rounds += 1
        changed = False
        for op in signature.operations:
            if not op.args:
                continue
            # Compare op(x) with op(root(x)) for every argument tuple x
            roots = [forests[sort].find(np.arange(signature.sorts[sort])) for sort in op.args]
            grids = np.ix_(*[np.arange(signature.sorts[sort]) for sort in op.args])
            root_grids = np.ix_(*roots)
            changed |= forests[op.result].union(op.table[grids], op.table[root_grids])
        if verbose:
            print(f'Congruence closure round {rounds}: ' + ', '.join(
                f'{sort}={len(np.unique(f.find(np.arange(signature.sorts[sort]))))}' for sort, f in forests.items()))
        if not changed:
            return forests


def quotient_signature(signature, forests):
    """
    Build the quotient signature and the projections from a congruence.
    """
    projection, representatives = {}, {}
    for sort, forest in forests.items():
        projection[sort], representatives[sort] = forest.classes()
    operations = []
    for op in signature.operations:
        if not op.args:
            table = projection[op.result][int(op.table)]
        else:
            table = projection[op.result][op.table[np.ix_(*[representatives[sort] for sort in op.args])]]
        operations.append(Operation(op.name, op.args, op.result, table))
    sorts = {sort: len(representatives[sort]) for sort in signature.sorts}
    return Signature(sorts, operations), projection, representatives


def quotient(variety, algebra, verbose=False):
    """
    Compute the universal factor-algebra of an algebra in a variety.

    Parameters
    ----------
    variety : string (required)
        One of r2, r2eps, r3, r2star, r4, r2b, r2epsdelta, r44.

    algebra : FiniteRing, BRing or F4Ring (required)

    verbose : bool (default=False)

    Returns
    -------
    result : QuotientResult
    """
    axioms = variety_axioms(variety, algebra)
    signature = algebra.signature()
    ops = TableOps(signature)
    if verbose:
        print(f'Getting the {variety} quotient of {algebra.name}')

    # Seed with all instances of the identities
    seeds = {}
    for axiom in axioms:
        if not axiom.applies(ops):
            continue
        for lhs, rhs, _ in axiom.instances(ops):
            seeds.setdefault(axiom.result, []).append((lhs, rhs))
    forests = congruence_closure(signature, seeds, verbose=verbose)
    target, projection, representatives = quotient_signature(signature, forests)
    labels = {sort: [names[k] for k in representatives[sort]] for sort, names in algebra.sort_labels().items()}
    result = type(algebra).from_signature(target, labels=labels, name=f'{algebra.name}/{variety}')
    return QuotientResult(result, projection, variety)


def in_variety(variety, algebra):
    """
    Check whether an algebra satisfies all identities of a variety.
    """
    return check_axioms(variety, algebra).ok
