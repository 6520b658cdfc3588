"""
Module to check weak units of non-unital Phi-rings by finite enumeration.
"""
import numpy as np

from steinberg_schur.phirings.finite_ring import nucleus


class WeakUnitReport:
    """
    Result of check_weak_unit.

    Parameters
    ----------
    ok : bool (required)

    condition : string (default=None)
        Name of the first failed condition.

    witness : tuple (default=None)
        Element ids witnessing the failure.
    """
    def __init__(self, ok, condition=None, witness=None):
        self.ok = ok
        self.condition = condition
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return 'WeakUnitReport(ok=True)'
        return f'WeakUnitReport(ok=False, condition={self.condition!r}, witness={self.witness})'


def _multiplications(algebra, units):
    """
    Get the multiplication maps mu.eps as (name, table of shape domain x |E|, domain size).
    """
    kind = getattr(algebra, 'kind', 'ring')
    ring = algebra.r if kind == 'f4_ring' else (algebra.ring if kind == 'b_ring' else algebra)
    maps = [('R x E -> R', ring.mul_table[:, units], ring.size)]
    if kind == 'b_ring':
        maps.append(('Delta x E -> Delta', algebra.act_table[:, units], algebra.delta_size))
    if kind == 'f4_ring':
        maps.append(('S x E -> S', algebra.s.mul_table[:, algebra.rho_r[units]], algebra.s.size))
    return ring, maps


def check_weak_unit(algebra, units):
    """
    Check the five weak-unit conditions for a subset E of the first ring.

    Parameters
    ----------
    algebra : FiniteRing, BRing or F4Ring (required)

    units : iterable of int (required)
        The subset E of R.

    Returns
    -------
    report : WeakUnitReport
    """
    units = np.array(sorted({int(e) for e in units}), dtype=np.int64)
    ring, maps = _multiplications(algebra, units)
    members = np.zeros(ring.size, dtype=bool)
    members[units] = True
    if not len(units):
        return WeakUnitReport(False, 'E is empty')

    # E is a multiplicative sub-semigroup
    products = ring.mul_table[np.ix_(units, units)]
    bad = ~members[products]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        return WeakUnitReport(False, 'semigroup', (int(units[a]), int(units[b])))

    # E is central and hermitian
    commuting = ring.mul_table[units, :] == ring.mul_table[:, units].T
    if not commuting.all():
        a, p = np.argwhere(~commuting)[0]
        return WeakUnitReport(False, 'central', (int(units[a]), int(p)))
    nuclear = set(nucleus(ring))
    for e in units:
        if int(e) not in nuclear:
            return WeakUnitReport(False, 'central', (int(e),))
    if ring.star_table is not None:
        for e in units:
            if ring.star(int(e)) != e:
                return WeakUnitReport(False, 'hermitian', (int(e),))

    # Common divisors: eps = eps' zeta and eta = eta' zeta
    multiples = {int(z): set(int(x) for x in products[:, k]) for k, z in enumerate(units)}
    for e in units:
        for h in units:
            if not any(int(e) in found and int(h) in found for found in multiples.values()):
                return WeakUnitReport(False, 'common divisor', (int(e), int(h)))

    # Multiplication maps are onto
    if set(int(x) for x in products.ravel()) != set(int(e) for e in units):
        missing = sorted(set(int(e) for e in units) - set(int(x) for x in products.ravel()))
        return WeakUnitReport(False, 'E x E -> E onto', (missing[0],))
    for name, table, size in maps:
        image = np.zeros(size, dtype=bool)
        image[table.ravel()] = True
        if not image.all():
            return WeakUnitReport(False, f'{name} onto', (int(np.argmin(image)),))

    # mu.eps = 0 implies eps = eps' eps'' with mu.eps' = 0
    for name, table, size in maps:
        for mu, k in np.argwhere(table == 0):
            e = units[k]
            factors = np.argwhere(products == e)
            if not any(table[mu, a] == 0 for a, _ in factors):
                return WeakUnitReport(False, f'{name} annihilators', (int(mu), int(e)))
    return WeakUnitReport(True)
