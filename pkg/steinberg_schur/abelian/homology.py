"""
Module to compute H^2(G, Z/m) with trivial action for small finite groups given by tables.

The group is presented by Schreier relators of a breadth-first spanning tree of its Cayley graph. A function
f on the relators is a cocycle iff f, spread over the 2-cells of the Cayley complex, is the coboundary of a
function on its edges; coboundaries are the exponent-sum images of functions on the generators. Both counts
are taken over Z/p^j for every prime power dividing m, which determines the group.
"""
from collections import deque
import numpy as np
from sympy import factorint

from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.abelian.smith import abelianization, relation_matrix
from steinberg_schur.common.settings import Settings
from steinberg_schur.presentations.presentation import Presentation
from steinberg_schur.presentations.words import invert, reduce


def schreier_presentation(group, generators=None):
    """
    Present a finite group by the Schreier relators of a breadth-first spanning tree.

    Parameters
    ----------
    group : GroupTable (required)

    generators : list of int (default=None)
        Generating elements. If None, group.generating_set() is used.

    Returns
    -------
    presentation : Presentation

    words : list of tuples
        A word for every element, along the spanning tree.
    """
    generators = group.generating_set() if generators is None else list(generators)
    if len(group.closure(generators)) != group.order:
        raise ValueError(f'The elements {generators} do not generate {group.name}')
    presentation = Presentation(name=f'{group.name}|schreier')
    for g in generators:
        presentation.add_generator(f'g{group.labels[g]}')
    words = [None] * group.order
    words[group.identity] = ()
    parent = {}
    queue = deque([group.identity])
    while queue:
        a = queue.popleft()
        for x, g in enumerate(generators, start=1):
            b = group.mul(a, g)
            if words[b] is None:
                words[b] = words[a] + (x,)
                parent[b] = (a, x)
                queue.append(b)
    for a in range(group.order):
        for x, g in enumerate(generators, start=1):
            b = group.mul(a, g)
            if parent.get(b) == (a, x):
                continue
            word = reduce(words[a] + (x,) + invert(words[b]))
            if word:
                presentation.add_relator(word)
    return presentation, words


def _cayley_boundary(group, presentation, generators):
    """
    Get the boundary matrix of the Cayley complex: rows are edges (a, x), columns are cells (a, relator).
    """
    n, count = group.order, len(generators)
    relators = presentation.relators
    boundary = np.zeros((n * count, n * len(relators)), dtype=np.int64)
    for a in range(n):
        for s, word in enumerate(relators):
            column, vertex = a * len(relators) + s, a
            for letter in word:
                x = abs(letter) - 1
                if letter > 0:
                    boundary[vertex * count + x, column] += 1
                    vertex = group.mul(vertex, generators[x])
                else:
                    vertex = group.mul(vertex, group.inverse(generators[x]))
                    boundary[vertex * count + x, column] -= 1
    return boundary


def image_size_log(matrix, p, j):
    """
    Get log_p of the size of the image of an integer matrix acting on (Z/p^j)^columns.

    The matrix is diagonalized over Z/p^j by pivoting on entries of least p-valuation.
    """
    q = p ** j
    a = np.array(matrix, dtype=np.int64) % q
    total = 0
    for v in range(j):
        pv = p ** v
        while a.size:
            rows, columns = np.nonzero(a % (pv * p))
            if not len(rows):
                break
            r, c = rows[0], columns[0]
            unit = int(a[r, c] // pv) % q
            row = a[r] * pow(unit, -1, q) % q
            column = a[:, c] // pv
            a = (a - np.outer(column, row)) % q
            a = np.delete(np.delete(a, r, axis=0), c, axis=1)
            total += j - v
    return total


def h2_bruteforce(group, m, settings=None, verbose=False):
    """
    Compute H^2(G, Z/m) for trivial action.

    For perfect G and m a multiple of the exponent of the Schur multiplier this is isomorphic to M(G).
    In general it is Hom(M(G), Z/m) + Ext(G^ab, Z/m).

    Parameters
    ----------
    group : GroupTable (required)
        At most h2_group_cap elements.

    m : int (required)
        Modulus, at least 1.

    settings : Settings (default=None)

    verbose : bool (default=False)
    """
    settings = settings or Settings()
    if group.order > settings.h2_group_cap:
        raise ValueError(f'{group.name} has order {group.order}, above h2_group_cap={settings.h2_group_cap}')
    if m < 1:
        raise ValueError(f'The modulus must be at least 1, got {m}')
    if group.order == 1 or m == 1:
        return AbelianInvariants()

    generators = group.generating_set()
    presentation, _ = schreier_presentation(group, generators)
    boundary = _cayley_boundary(group, presentation, generators)
    relators = len(presentation.relators)
    cells = boundary.shape[1]
    spread = np.zeros((cells, relators), dtype=np.int64)
    spread[np.arange(cells), np.arange(cells) % relators] = 1
    system = np.hstack([spread, -boundary.T])
    exponents = np.array(relation_matrix(presentation), dtype=np.int64)
    if verbose:
        print(f'# {group.name}: generators={len(generators)} relators={relators} cells={cells}')

    orders = []
    for p, power in factorint(m).items():
        sizes = [0]
        for j in range(1, power + 1):
            cocycles = relators * j + image_size_log(-boundary.T, p, j) - image_size_log(system, p, j)
            coboundaries = image_size_log(exponents, p, j)
            sizes.append(cocycles - coboundaries)
        at_least = [sizes[j] - sizes[j - 1] for j in range(1, power + 1)] + [0]
        for j in range(1, power + 1):
            orders += [p ** j] * (at_least[j - 1] - at_least[j])
    return AbelianInvariants.from_cyclic_orders(orders)


def schur_multiplier(group, settings=None):
    """
    Get M(G) = H_2(G, Z) of a small finite group, splitting H^2(G, Z/|G|) into M(G) and G^ab.
    """
    total = h2_bruteforce(group, group.order, settings=settings)
    presentation, _ = schreier_presentation(group)
    abelian = abelianization(presentation)
    remaining = []
    for p in set(factorint(group.order)):
        powers = sorted((_p_part(d, p) for d in total.factors if d % p == 0), reverse=True)
        for d in abelian.factors:
            if d % p == 0:
                powers.remove(_p_part(d, p))
        remaining += powers
    return AbelianInvariants.from_cyclic_orders(remaining)


def _p_part(d, p):
    part = 1
    while d % p == 0:
        d //= p
        part *= p
    return part
