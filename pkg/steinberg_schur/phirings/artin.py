"""
Module to check that subrings generated by two elements, their conjugates and nuclear elements are associative.
"""
import numpy as np

from steinberg_schur.phirings.finite_ring import nucleus


def _associator_witness(ring, g):
    bad = ring.associator_tensor()
    for axis in range(3):
        hits = np.argwhere(np.take(bad, g, axis=axis))
        if len(hits):
            triple = list(int(x) for x in hits[0])
            triple.insert(axis, g)
            return tuple(triple)
    return None


def check_artin(ring, x, y, nuclear_generators=(), z=None):
    """
    Check associativity of the subring generated by x, y, x^*, y^* and nuclear elements.

    Parameters
    ----------
    ring : FiniteRing (required)
        Alternative ring.

    x, y : int (required)

    nuclear_generators : iterable of int (default=())
        Must lie in the nucleus.

    z : int (default=None)
        Optional third element with [x, y, z] = 0; then z and z^* are added to the generators.

    Returns
    -------
    associative : bool
    """
    nuclear = set(nucleus(ring))
    nuclear_generators = [int(g) for g in nuclear_generators]
    for g in nuclear_generators:
        if g not in nuclear:
            a, b, c = _associator_witness(ring, g)
            raise ValueError(f'{ring.labels[g]} is not nuclear: '
                             f'[{ring.labels[a]}, {ring.labels[b]}, {ring.labels[c]}] != 0')
    generators = [x, y, ring.star(x), ring.star(y)] + nuclear_generators
    if z is not None:
        if ring.associator(x, y, z) != 0:
            raise ValueError(f'[x, y, z] != 0 for z = {ring.labels[z]}')
        generators += [z, ring.star(z)]
    subring = np.array(ring.subring_closure(generators, use_star=False), dtype=np.int64)
    mul = ring.mul_table
    products = mul[np.ix_(subring, subring)]
    left = mul[products[:, :, None], subring[None, None, :]]
    right = mul[subring[:, None, None], products[None, :, :]]
    return bool(np.array_equal(left, right))
