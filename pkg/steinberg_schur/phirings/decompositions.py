"""
Module to split algebras of a variety into an ideal part and a Boolean part, and to split the Boolean
ring K2 of K according to a quadratic etale algebra.
"""
import numpy as np

from steinberg_schur.phirings.axioms import check_axioms
from steinberg_schur.phirings.congruence import congruence_closure, quotient, quotient_signature
from steinberg_schur.phirings.finite_ring import FiniteRing


class IdealDecomposition:
    """
    An algebra written as an ideal part and a Boolean part.

    Parameters
    ----------
    ideal_part : FiniteRing (required)
        Ring induced on the ideal.

    boolean_part : FiniteRing (required)
        Ring induced on the Boolean complement.

    embeddings : dict (required)
        'ideal' and 'boolean' -> lists mapping part ids to algebra ids.

    projection : numpy array (default=None)
        Algebra id -> ideal id of p^2 - p (r2eps only).

    section : numpy array (default=None)
        Algebra id -> boolean id of p^2 (r2eps only).
    """
    def __init__(self, ideal_part, boolean_part, embeddings, projection=None, section=None):
        self.ideal_part = ideal_part
        self.boolean_part = boolean_part
        self.embeddings = embeddings
        self.projection = projection
        self.section = section

    def __repr__(self):
        return f'IdealDecomposition(|ideal|={self.ideal_part.size}, |boolean|={self.boolean_part.size})'


def _ring_of(algebra):
    if algebra.kind == 'b_ring':
        return algebra.ring
    if algebra.kind == 'f4_ring':
        return algebra.r
    return algebra


def _additive_closure(ring, elements):
    closed = {0} | set(int(x) for x in elements)
    frontier = list(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(closed):
                c = ring.add(a, b)
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = list(new)
    return sorted(closed)


def ideal_decompose(variety, algebra):
    """
    Decompose an algebra of a variety.

    Parameters
    ----------
    variety : string (required)
        r2eps: I_eps = image of p^2 - p and the Boolean part is the image of p^2.
        r4 or r44: I4 = image of p (q - q^*) and the Boolean part is the set of hermitian elements.

    algebra : FiniteRing, BRing or F4Ring (required)
        Must satisfy the variety's identities.

    Returns
    -------
    decomposition : IdealDecomposition
    """
    if variety not in ('r2eps', 'r4', 'r44'):
        raise ValueError(f'No ideal decomposition for {variety}. Choose from r2eps, r4, r44')
    report = check_axioms(variety, algebra)
    if not report.ok:
        raise ValueError(f'{algebra.name} is not in the variety {variety}: {report.violations[0]}')
    ring = _ring_of(algebra)
    elements = np.arange(ring.size)

    if variety == 'r2eps':
        squares = ring.mul_table[elements, elements]
        defects = ring.add_table[squares, ring.neg_table]
        ideal, ideal_embedding = ring.restrict(set(defects.tolist()), name=f'I_eps({ring.name})')
        boolean, boolean_embedding = ring.restrict(set(squares.tolist()), name=f'{ring.name}_2')
        position_i = {x: k for k, x in enumerate(ideal_embedding)}
        position_b = {x: k for k, x in enumerate(boolean_embedding)}
        projection = np.array([position_i[int(x)] for x in defects], dtype=np.int64)
        section = np.array([position_b[int(x)] for x in squares], dtype=np.int64)

        # The parts split the algebra: p = (p^2 - p) + p^2 in characteristic 2
        for p in ring.elements:
            if ring.add(int(defects[p]), int(squares[p])) != p:
                raise RuntimeError(f'p^2 - p and p^2 do not split p = {ring.labels[p]}')
        return IdealDecomposition(ideal, boolean, {'ideal': ideal_embedding, 'boolean': boolean_embedding},
                                  projection, section)

    star = ring.star_table if ring.star_table is not None else elements
    differences = ring.add_table[elements, ring.neg_table[star]]
    image = ring.mul_table[np.ix_(elements, differences)].ravel()
    ideal, ideal_embedding = ring.restrict(_additive_closure(ring, image), name=f'I4({ring.name})')
    hermitian = elements[star == elements]
    boolean, boolean_embedding = ring.restrict(hermitian, name=f'E({ring.name})')
    return IdealDecomposition(ideal, boolean, {'ideal': ideal_embedding, 'boolean': boolean_embedding})


class EtaleSplitting:
    """
    The decomposition K2 = K2s x K2a of the Boolean quotient of K.

    Parameters
    ----------
    k2 : FiniteRing (required)
        The r2 quotient of K.

    split_idempotent, anisotropic_idempotent : int (required)
        Ids in K2 of the unit of each factor.

    split_factors, anisotropic_factors : int (required)
        Number of F2 factors of each part.
    """
    def __init__(self, k2, split_idempotent, anisotropic_idempotent, split_factors, anisotropic_factors):
        self.k2 = k2
        self.split_idempotent = split_idempotent
        self.anisotropic_idempotent = anisotropic_idempotent
        self.split_factors = split_factors
        self.anisotropic_factors = anisotropic_factors

    @property
    def split_size(self):
        return 2 ** self.split_factors if self.split_factors else 1

    @property
    def anisotropic_size(self):
        return 2 ** self.anisotropic_factors if self.anisotropic_factors else 1

    def __repr__(self):
        return f'EtaleSplitting(K2s=F2^{self.split_factors}, K2a=F2^{self.anisotropic_factors})'


def quotient_by_ideal(ring, ideal):
    """
    Get the quotient ring by the ideal generated by some elements, with its projection.
    """
    ideal = np.asarray(sorted(set(int(x) for x in ideal)), dtype=np.int64)
    signature = ring.signature()
    forests = congruence_closure(signature, {'R': [(ideal, np.zeros_like(ideal))]})
    target, projection, representatives = quotient_signature(signature, forests)
    labels = {'R': [ring.labels[k] for k in representatives['R']]}
    return FiniteRing.from_signature(target, labels=labels, name=f'{ring.name}/I'), projection['R']


def split_etale(k, l):
    """
    Split K2 into the factors over which the etale algebra L splits and those over which it is a field.

    Parameters
    ----------
    k : FiniteRing (required)
        Commutative unital ring.

    l : EtaleAlgebra (required)
        Quadratic etale algebra over K.
    """
    result = quotient('r2', k)
    k2, projection = result.algebra, result.projection['R']
    minimal = [e for e in k2.idempotents() if e != 0 and
               all(k2.mul(e, f) in (0, e) for f in k2.idempotents())]
    split_e, anisotropic_e = 0, 0
    split_count = anisotropic_count = 0
    for e in minimal:
        # Kernel of the character K -> F2 picking the factor e
        kernel = [p for p in k.elements if k2.mul(int(projection[p]), e) == 0]
        residue, _ = quotient_by_ideal(l, [l.embed[p] for p in kernel])
        nontrivial = [x for x in residue.idempotents() if x not in (0, residue.one)]
        if nontrivial:
            split_e = k2.add(split_e, e)
            split_count += 1
        else:
            anisotropic_e = k2.add(anisotropic_e, e)
            anisotropic_count += 1
    return EtaleSplitting(k2, split_e, anisotropic_e, split_count, anisotropic_count)
