"""
Module to compute the abelian groups generated by the central families of Steinberg groups.

Every family is a homomorphism from an elementary abelian carrier (a quotient algebra of the Phi-ring or an
ideal in one) into the Schur multiplier. The family group is the direct sum of the carriers modulo the
stated identifications, computed by linear algebra over F_p for every prime p.
"""
import galois
import numpy as np

from steinberg_schur.abelian.invariants import AbelianInvariants
from steinberg_schur.phirings.congruence import quotient
from steinberg_schur.phirings.decompositions import ideal_decompose


class FamilyCarrier:
    """
    An elementary abelian p-group carrying one central family.

    Parameters
    ----------
    name : string (required)
        Family label: c, c0, c+, c-, c2, c3, b4, beps, d, e or e'.

    add_table : array-like k x k (required)
        Addition of the carrier, 0 being the neutral element.

    labels : list of strings (required)

    source_map : array-like (required)
        Maps elements of the source sort of the Phi-ring to carrier ids, -1 where undefined.

    source : string (required)
        R, D or S.
    """
    def __init__(self, name, add_table, labels, source_map, source):
        self.name = name
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.labels = list(labels)
        self.source_map = np.asarray(source_map, dtype=np.int64)
        self.source = source
        self.size = self.add_table.shape[0]
        self.prime, self.coordinates = self._basis()

    def __repr__(self):
        return f'FamilyCarrier({self.name!r}, size={self.size})'

    @property
    def dimension(self):
        return self.coordinates.shape[1]

    def _basis(self):
        """
        Get the prime and the coordinates of every element in a greedy basis.
        """
        if self.size == 1:
            return None, np.zeros((1, 0), dtype=np.int64)
        factors = [p for p in range(2, self.size + 1) if self.size % p == 0]
        p = factors[0]
        if p ** round(np.log(self.size) / np.log(p)) != self.size:
            raise ValueError(f'Carrier of {self.name} has order {self.size}, not a prime power')
        coordinates = {0: ()}
        basis = []
        for element in range(1, self.size):
            if element in coordinates:
                continue
            multiple = 0
            for _ in range(p):
                multiple = int(self.add_table[multiple, element])
            if multiple != 0:
                raise ValueError(f'Carrier of {self.name} is not elementary abelian: '
                                 f'{p} * {self.labels[element]} != 0')
            basis.append(element)
            extended = {}
            for x, vector in coordinates.items():
                y = x
                for k in range(1, p):
                    y = int(self.add_table[y, element])
                    extended[y] = vector + (k,)
                coordinates[x] = vector + (0,)
            coordinates.update(extended)
        self.basis = basis
        array = np.zeros((self.size, len(basis)), dtype=np.int64)
        for x, vector in coordinates.items():
            array[x] = vector
        return p, array

    def element_of(self, source_element):
        element = int(self.source_map[source_element])
        if element < 0:
            raise ValueError(f'Element {source_element} of {self.source} is outside the carrier of {self.name}')
        return element


class FamilyGroup:
    """
    The abelian group generated by central families modulo linear identifications.

    Parameters
    ----------
    carriers : list of FamilyCarrier (required)

    relations : list of lists of (family, carrier element) (default=())
        Each relation states that the sum of the listed family values is zero.

    name : string (default='family group')
    """
    def __init__(self, carriers, relations=(), name='family group'):
        self.name = name
        self.families = {carrier.name: carrier for carrier in carriers}
        self.primes = sorted({c.prime for c in carriers if c.prime is not None and c.dimension})

        # Offsets of every family in the F_p space of its prime
        self.offsets, dimensions = {}, {p: 0 for p in self.primes}
        for carrier in carriers:
            if carrier.prime is not None and carrier.dimension:
                self.offsets[carrier.name] = dimensions[carrier.prime]
                dimensions[carrier.prime] += carrier.dimension

        # Reduced relation matrices and the free coordinates per prime
        self.reduced, self.pivots, self.free = {}, {}, {}
        for p in self.primes:
            field = galois.GF(p)
            rows = []
            for relation in relations:
                vector = np.zeros(dimensions[p], dtype=np.int64)
                for family, element in relation:
                    carrier = self.families[family]
                    if carrier.prime == p and carrier.dimension:
                        start = self.offsets[family]
                        vector[start:start + carrier.dimension] += carrier.coordinates[element]
                if (vector % p).any():
                    rows.append(vector % p)
            if rows:
                reduced = field(np.array(rows)).row_reduce()
                reduced = np.asarray(reduced.view(np.ndarray), dtype=np.int64)
                reduced = reduced[reduced.any(axis=1)]
            else:
                reduced = np.zeros((0, dimensions[p]), dtype=np.int64)
            self.reduced[p] = reduced
            self.pivots[p] = [int(np.nonzero(row)[0][0]) for row in reduced]
            self.free[p] = [k for k in range(dimensions[p]) if k not in self.pivots[p]]

        self.coordinate_primes = [p for p in self.primes for _ in self.free[p]]
        self.invariants = AbelianInvariants.from_cyclic_orders(self.coordinate_primes)

    def __repr__(self):
        return f'FamilyGroup({self.name!r}, {self.invariants.describe()})'

    @property
    def order(self):
        return self.invariants.order

    @property
    def zero(self):
        return (0,) * len(self.coordinate_primes)

    def value(self, family, element):
        """
        Get the coordinates of the value of a family at a carrier element.
        """
        carrier = self.families[family]
        result = []
        for p in self.primes:
            vector = np.zeros(len(self.free[p]) + len(self.pivots[p]), dtype=np.int64)
            if carrier.prime == p and carrier.dimension:
                start = self.offsets[family]
                vector[start:start + carrier.dimension] = carrier.coordinates[element]
            for row, pivot in zip(self.reduced[p], self.pivots[p]):
                vector = (vector - vector[pivot] * row) % p
            result += [int(vector[k]) for k in self.free[p]]
        return tuple(result)

    def value_of(self, family, source_element):
        """
        Get the coordinates of a family at an element of the Phi-ring, mapped into the carrier.
        """
        return self.value(family, self.families[family].element_of(source_element))

    def add(self, a, b):
        return tuple((x + y) % p for x, y, p in zip(a, b, self.coordinate_primes))

    def neg(self, a):
        return tuple(-x % p for x, p in zip(a, self.coordinate_primes))

    def elements(self):
        """
        Get all elements, the zero first and then in lexicographic order.
        """
        result = [()]
        for p in self.coordinate_primes:
            result = [vector + (x,) for vector in result for x in range(p)]
        return result

    def generators(self):
        """
        Get the labelled generators (family, carrier label) whose values form the coordinate basis.
        """
        result = []
        for p in self.primes:
            for k in self.free[p]:
                for carrier in self.families.values():
                    start = self.offsets.get(carrier.name)
                    if carrier.prime == p and start is not None and start <= k < start + carrier.dimension:
                        result.append((carrier.name, carrier.labels[carrier.basis[k - start]]))
        return result


def _carrier(name, ring, source_map, source):
    return FamilyCarrier(name, ring.add_table, ring.labels, source_map, source)


def _delta_carrier(name, b_ring, source_map):
    return FamilyCarrier(name, b_ring.dadd_table, b_ring.delta_labels, source_map, 'D')


def _ideal_carrier(name, decomposition, projection, part='ideal'):
    """
    Carrier on a part of an ideal decomposition; source elements outside the part map to -1.
    """
    ring = decomposition.ideal_part if part == 'ideal' else decomposition.boolean_part
    position = {int(x): k for k, x in enumerate(decomposition.embeddings[part])}
    source_map = [position.get(int(x), -1) for x in projection]
    return _carrier(name, ring, source_map, 'R')


def _a3_families(ring):
    result = quotient('r2eps', ring)
    return [_carrier('c', result.algebra, result.projection['R'], 'R')], []


def _d4_families(ring):
    result = quotient('r2eps', ring)
    k2eps, projection = result.algebra, result.projection['R']
    carriers = [_carrier(name, k2eps, projection, 'R') for name in ('c0', 'c+', 'c-')]
    if k2eps.size == 1:
        return carriers, []
    decomposition = ideal_decompose('r2eps', k2eps)
    relations = []
    for p in decomposition.embeddings['ideal']:
        relations += [[('c0', p), ('c+', k2eps.neg(p))], [('c+', p), ('c-', k2eps.neg(p))]]
    for q in decomposition.embeddings['boolean']:
        relations.append([('c0', q), ('c+', q), ('c-', q)])
    return carriers, relations


def _b3_families(b_ring):
    # c2 comes first so that the d identification pivots on it and leaves d free
    r2b = quotient('r2b', b_ring)
    c2 = _delta_carrier('c2', r2b.algebra, r2b.projection['D'])
    d = _delta_carrier('d', r2b.algebra, r2b.projection['D'])
    result = quotient('r3', b_ring)
    carriers = [c2, _delta_carrier('c3', result.algebra, result.projection['D'])]

    result = quotient('r4', b_ring)
    r4 = result.algebra
    if r4.ring.size > 1:
        carriers.append(_ideal_carrier('b4', ideal_decompose('r4', r4), result.projection['R']))

    result = quotient('r2epsdelta', b_ring)
    ring = result.algebra.ring
    beps = None
    if ring.size > 1:
        beps = _ideal_carrier('beps', ideal_decompose('r2eps', ring), result.projection['R'])
        carriers.append(beps)
    carriers.append(d)

    # d(u) = c2(u) + beps(<iota, u>^2 - <iota, u>), all three carriers being 2-torsion
    relations = []
    if b_ring.iota is not None:
        r = b_ring.ring
        for u in range(b_ring.delta_size):
            relation = [('c2', c2.element_of(u)), ('d', d.element_of(u))]
            if beps is not None:
                pairing = b_ring.pair(b_ring.iota, u)
                relation.append(('beps', beps.element_of(r.sub(r.mul(pairing, pairing), pairing))))
            relations.append(relation)
    return carriers, relations


def _f4_families(f4_ring):
    result = quotient('r44', f4_ring)
    algebra = result.algebra
    carriers = [_carrier('e', algebra.s, result.projection['S'], 'S'),
                _carrier("e'", algebra.r, result.projection['R'], 'R')]
    r = algebra.r
    relations = []
    for p in r.nonzero:
        cube = r.mul(p, r.mul(p, p))
        relations.append([('e', int(algebra.rho_r[p])), ("e'", r.neg(cube))])
    return carriers, relations


def family_group(rs, algebra):
    """
    Get the group generated by the central families of St(Phi, A) modulo their identifications.

    Parameters
    ----------
    rs : RootSystem (required)
        A3: family c on R_2eps. D4: c0, c+, c- on K_2eps with c0 = c+ = c- on the ideal part and
        c0 c+ c- = 1 on the Boolean part. B3: c3 on Delta_3, b4 on I_4, beps on the ideal part of R_2epsdelta
        and d on Delta_2b, with the 2-part c2 of c(u) tied by d(u) = c2(u) beps(<iota, u>^2 - <iota, u>).
        F4: e on S_44 and e' on R_44 with e(rho(p)) = e'(p^3). A_l (l >= 4), D_l (l >= 5), E_l
        and B_l (l >= 4) have no families.

    algebra : FiniteRing, BRing or F4Ring (required)

    Returns
    -------
    group : FamilyGroup
    """
    family, rank = rs.family, rs.rank
    kind = getattr(algebra, 'kind', None)
    expected = {'A': 'ring', 'D': 'ring', 'E': 'ring', 'B': 'b_ring', 'F': 'f4_ring'}
    if family not in expected or rank < 3:
        raise ValueError(f'No central families for {family}{rank}. Choose from A, B, D, E, F of rank >= 3')
    if kind != expected[family]:
        raise ValueError(f'{family}{rank} needs a {expected[family]}, got {algebra!r}')
    name = f'{family}{rank}({algebra.name})'
    if family == 'A' and rank == 3:
        carriers, relations = _a3_families(algebra)
    elif family == 'D' and rank == 4:
        carriers, relations = _d4_families(algebra)
    elif family == 'B' and rank == 3:
        carriers, relations = _b3_families(algebra)
    elif family == 'F':
        carriers, relations = _f4_families(algebra)
    else:
        carriers, relations = [], []
    return FamilyGroup(carriers, relations, name=name)
