"""
Module to read the Tits-index catalog and to predict Schur multipliers of isotropic Steinberg groups.
"""
import yaml
from sympy import factorint

from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.definitions import CATALOG_PATH
from steinberg_schur.phirings.congruence import quotient
from steinberg_schur.phirings.decompositions import split_etale
from steinberg_schur.phirings.finite_ring import FiniteRing
from steinberg_schur.phirings.recipes import EtaleAlgebra, etale_quadratic
from steinberg_schur.phirings.tits_rings import tits_ring


FORMULAS = ['trivial', 'K2eps', 'K2a^2', 'K3xK2eps', 'K2', 'K2sxK2seps', 'K2xK2eps']


class TitsIndexEntry:
    """
    One Tits index of the catalog.

    Parameters
    ----------
    label : string (required)
        Catalog label, e.g. B33 or 2E264.
    """
    catalog = None

    def __init__(self, label):
        if TitsIndexEntry.catalog is None:
            TitsIndexEntry.catalog = yaml.safe_load(open(CATALOG_PATH, encoding='utf-8'))
        if label not in TitsIndexEntry.catalog:
            raise ValueError(f'Unknown Tits index {label}. Choose from {list(TitsIndexEntry.catalog)}')
        self.label = label
        self.builder = None
        self.etale = False

        # Set information about the index as attributes
        entry_info = TitsIndexEntry.catalog[label]
        for info in entry_info:
            setattr(self, info.lower(), entry_info[info])
        if self.formula not in FORMULAS:
            raise ValueError(f'Tits index {label} has unknown formula {self.formula}. Choose from {FORMULAS}')

    def __repr__(self):
        return f'TitsIndexEntry({self.label!r}, {self.ambient}/{self.relative}, formula={self.formula})'

    @property
    def is_verifiable(self):
        return self.verification == 'group'

    def algebra(self, k, etale=None):
        """
        Get the Phi-ring of the index over K, or None if the catalog has no builder for it.
        """
        if self.builder == 'ring':
            return k
        if self.builder == 'tits':
            return tits_ring(self.label, k, etale)
        return None


def catalog_labels():
    """
    Get all labels of the catalog in catalog order.
    """
    if TitsIndexEntry.catalog is None:
        TitsIndexEntry.catalog = yaml.safe_load(open(CATALOG_PATH, encoding='utf-8'))
    return list(TitsIndexEntry.catalog)


def additive_invariants(ring, elements=None):
    """
    Get the invariant factors of the additive group of a finite ring or of an additive subgroup.

    The p-part is read off the counts of elements killed by p^j: their logarithms grow by the
    number of cyclic factors of order at least p^j.
    """
    elements = list(range(ring.size)) if elements is None else sorted(set(int(x) for x in elements))
    orders = {}
    for x in elements:
        order, y = 1, x
        while y != 0:
            y = ring.add(y, x)
            order += 1
        orders[x] = order

    cyclic = []
    for p in factorint(len(elements)):
        previous, j, counts = 0, 1, []
        while True:
            killed = sum(1 for order in orders.values() if p ** j % order == 0)
            exponent = factorint(killed).get(p, 0)
            if exponent == previous:
                break
            counts.append(exponent - previous)
            previous, j = exponent, j + 1
        # counts[j - 1] factors have order at least p^j
        for j, count in enumerate(counts, start=1):
            following = counts[j] if j < len(counts) else 0
            cyclic += [p ** j] * (count - following)
    return AbelianInvariants.from_cyclic_orders(cyclic)


def _check_base(k):
    if not isinstance(k, FiniteRing):
        raise TypeError(f'{k} is not a FiniteRing')
    if not (k.is_unital and k.is_commutative() and k.is_associative()):
        raise ValueError(f'{k.name} must be a commutative associative unital ring')


def _etale_algebra(k, etale, label):
    if etale is None:
        raise ValueError(f'{label} needs quadratic etale data: split, field or an EtaleAlgebra over {k.name}')
    if isinstance(etale, EtaleAlgebra):
        return etale
    return etale_quadratic(k, etale)


def _k2(k):
    return additive_invariants(quotient('r2', k).algebra)


def _k2eps(k):
    return additive_invariants(quotient('r2eps', k).algebra)


def _k3(k):
    return additive_invariants(quotient('r3', k).algebra)


def _split_parts(k, l):
    """
    Get the split part of K2 and the split part of K2eps, the ideal K2eps g for the idempotent g over
    the split factors.
    """
    splitting = split_etale(k, l)
    if splitting.split_factors == 0:
        return AbelianInvariants(), AbelianInvariants()
    k2 = quotient('r2', k)
    eps = quotient('r2eps', k)
    k2eps = eps.algebra

    # Match K2 with the Boolean quotient of K2eps through the elements of K
    boolean = quotient('r2', k2eps)
    image = {}
    for p in k.elements:
        image[int(k2.projection['R'][p])] = boolean.image(int(eps.projection['R'][p]))
    target = image[splitting.split_idempotent]
    lift = next(g for g in k2eps.idempotents() if boolean.image(g) == target)

    split_k2 = AbelianInvariants.from_cyclic_orders([2] * splitting.split_factors)
    return split_k2, additive_invariants(k2eps, k2eps.mul_table[:, lift])


def predict(label, k, etale=None, verbose=False):
    """
    Predict the Schur multiplier of the Steinberg group of a Tits index over K.

    Parameters
    ----------
    label : string (required)
        A catalog label, see catalog_labels().

    k : FiniteRing (required)
        Commutative associative unital ring.

    etale : EtaleAlgebra or string (default=None)
        Quadratic etale algebra over K, or split / field, for the labels that need one.

    verbose : bool (default=False)

    Returns
    -------
    invariants : AbelianInvariants
        Invariant factors of the additive group given by the formula of the index.
    """
    entry = TitsIndexEntry(label)
    _check_base(k)
    l = _etale_algebra(k, etale, label) if entry.etale else None
    formula = entry.formula

    if formula == 'trivial':
        result = AbelianInvariants()
    elif formula == 'K2eps':
        result = _k2eps(k)
    elif formula == 'K2':
        result = _k2(k)
    elif formula == 'K3xK2eps':
        result = _k3(k) + _k2eps(k)
    elif formula == 'K2xK2eps':
        result = _k2(k) + _k2eps(k)
    elif formula == 'K2a^2':
        anisotropic = split_etale(k, l).anisotropic_factors
        result = AbelianInvariants.from_cyclic_orders([2] * (2 * anisotropic))
    else:
        split_k2, split_k2eps = _split_parts(k, l)
        result = split_k2 + split_k2eps
    if verbose:
        print(f'# predict {label} over {k.name}: {formula} = {result.describe()}')
    return result
