"""
Module to build crystallographic root systems with exact integer coordinates.

Roots are tuples of integers. E and F systems use doubled coordinates so that half-integer roots
become integer vectors. A root is positive when its first nonzero coordinate is positive.
"""
import itertools
from fractions import Fraction
from math import gcd


VALID_RANKS = {
    'A': range(1, 9),
    'B': range(2, 9),
    'C': range(2, 9),
    'BC': range(1, 9),
    'D': range(3, 9),
    'E': range(6, 9),
    'F': range(4, 5),
}


def _unit(dimension, index, scale=1):
    vector = [0] * dimension
    vector[index] = scale
    return tuple(vector)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _scale(k, a):
    return tuple(k * x for x in a)


def _pm_pairs(dimension, scale=1):
    """
    All vectors scale*(+-e_i +- e_j) with i < j.
    """
    roots = []
    for i, j in itertools.combinations(range(dimension), 2):
        for si, sj in itertools.product([1, -1], repeat=2):
            vector = [0] * dimension
            vector[i] = si * scale
            vector[j] = sj * scale
            roots.append(tuple(vector))
    return roots


def _e8_roots():
    roots = _pm_pairs(8, scale=2)
    for signs in itertools.product([1, -1], repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(signs))
    return roots


def _standard_roots(family, rank):
    if family == 'A':
        dimension = rank + 1
        return dimension, [
            _add(_unit(dimension, i), _unit(dimension, j, -1))
            for i in range(dimension) for j in range(dimension) if i != j
        ]
    if family == 'B':
        short = [_unit(rank, i, s) for i in range(rank) for s in (1, -1)]
        return rank, short + _pm_pairs(rank)
    if family == 'C':
        long = [_unit(rank, i, 2 * s) for i in range(rank) for s in (1, -1)]
        return rank, long + _pm_pairs(rank)
    if family == 'BC':
        short = [_unit(rank, i, s) for i in range(rank) for s in (1, -1)]
        ultra = [_unit(rank, i, 2 * s) for i in range(rank) for s in (1, -1)]
        return rank, short + ultra + _pm_pairs(rank)
    if family == 'D':
        return rank, _pm_pairs(rank)
    if family == 'F':
        short = [_unit(4, i, 2 * s) for i in range(4) for s in (1, -1)]
        half = list(itertools.product([1, -1], repeat=4))
        return 4, _pm_pairs(4, scale=2) + short + half
    if family == 'E':
        roots = _e8_roots()
        if rank == 8:
            return 8, roots
        # E7 and E6 are the roots orthogonal to one root, respectively to an A2 subsystem
        fixed = [(0, 0, 0, 0, 0, 0, 2, 2)]
        if rank == 6:
            fixed.append((0, 0, 0, 0, 0, 2, 2, 0))
        roots = [root for root in roots if all(sum(x * y for x, y in zip(root, f)) == 0 for f in fixed)]
        return 8, roots
    raise ValueError(f'Unknown root system family {family}')


def _normalize(coefficients, bound):
    divisor = 0
    for c in coefficients:
        divisor = gcd(divisor, abs(c))
    divisor = gcd(divisor, abs(bound))
    if divisor > 1:
        return tuple(c // divisor for c in coefficients), bound // divisor
    return tuple(coefficients), bound


def _fourier_motzkin_feasible(constraints, dimension):
    """
    Decide whether the system {a . f >= b} has a rational solution f.

    Parameters
    ----------
    constraints : list of (tuple of int, int) (required)
        Pairs (a, b) standing for the inequality a . f >= b.

    dimension : int (required)
        Number of variables.
    """
    system = {_normalize(a, b) for a, b in constraints}
    for k in range(dimension):
        positive, negative, rest = [], [], set()
        for a, b in system:
            if a[k] > 0:
                positive.append((a, b))
            elif a[k] < 0:
                negative.append((a, b))
            else:
                rest.add((a, b))
        for (ap, bp), (an, bn) in itertools.product(positive, negative):
            # Eliminate variable k: (-an_k) * P + ap_k * N
            mp, mn = -an[k], ap[k]
            combined = tuple(mp * x + mn * y for x, y in zip(ap, an))
            rest.add(_normalize(combined, mp * bp + mn * bn))
        system = rest
    return all(b <= 0 for _, b in system)


class RootSubsetReport:
    """
    Result of classify_subset.

    Parameters
    ----------
    subset : tuple of root indices (required)

    is_unipotent : bool (required)

    extreme_roots : tuple of root indices (required)
    """
    def __init__(self, subset, is_unipotent, extreme_roots):
        self.subset = tuple(subset)
        self.is_unipotent = is_unipotent
        self.extreme_roots = tuple(extreme_roots) if is_unipotent else ()

    def __repr__(self):
        return (f'RootSubsetReport(subset={self.subset}, is_unipotent={self.is_unipotent}, '
                f'extreme_roots={self.extreme_roots})')


class RootSystem:
    """
    A crystallographic root system in its standard integer realization.

    Parameters
    ----------
    family : string (required)
        One of A, B, C, BC, D, E, F (case insensitive).

    rank : int (required)
        Rank of the root system, at most 8.
    """
    def __init__(self, family, rank):
        if not isinstance(family, str):
            raise TypeError(f'{family} is not a string')
        family = family.strip().upper()
        if family not in VALID_RANKS:
            raise ValueError(f'Unknown family {family}. Choose from {list(VALID_RANKS)}')
        if not isinstance(rank, int) or rank not in VALID_RANKS[family]:
            valid = VALID_RANKS[family]
            raise ValueError(f'Unsupported rank {rank} for family {family}. '
                             f'Valid ranks are {valid.start}..{valid.stop - 1}')
        self.family = family
        self.rank = rank

        # Build the roots in lexicographic order
        self.dimension, roots = _standard_roots(family, rank)
        self.roots = tuple(sorted(set(roots)))
        self._index = {root: k for k, root in enumerate(self.roots)}

        # Length classes from the distinct norms
        norms = sorted({self.norm(root) for root in self.roots})
        names = {1: ['long'], 2: ['short', 'long'], 3: ['short', 'long', 'ultralong']}[len(norms)]
        self._length_names = dict(zip(norms, names))

        # Positive system and base
        self.positive_roots = tuple(root for root in self.roots if self.is_positive(root))
        positive_set = set(self.positive_roots)
        decomposable = set()
        for a, b in itertools.combinations_with_replacement(self.positive_roots, 2):
            total = _add(a, b)
            if total in positive_set:
                decomposable.add(total)
        self.base = tuple(root for root in self.positive_roots if root not in decomposable)
        self._heights = {}
        self._coordinates = {}

    def __repr__(self):
        return f'RootSystem({self.family!r}, {self.rank})'

    def __len__(self):
        return len(self.roots)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    @property
    def is_simply_laced(self):
        return self.family in ('A', 'D', 'E')

    def dot(self, a, b):
        return sum(x * y for x, y in zip(a, b))

    def norm(self, a):
        return self.dot(a, a)

    def is_root(self, vector):
        return tuple(vector) in self._index

    def index_of(self, root):
        """
        Get the position of a root in the lexicographic root list.
        """
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise ValueError(f'{tuple(root)} is not a root of {self.family}{self.rank}')

    def length_class(self, root):
        return self._length_names[self.norm(root)]

    def is_positive(self, vector):
        for x in vector:
            if x != 0:
                return x > 0
        return False

    def reflect(self, alpha, vector):
        """
        Reflect vector in the hyperplane orthogonal to the root alpha.
        """
        numerator = 2 * self.dot(vector, alpha)
        denominator = self.norm(alpha)
        if numerator % denominator:
            raise ValueError(f'Reflection of {vector} in {alpha} is not integral')
        return tuple(v - (numerator // denominator) * a for v, a in zip(vector, alpha))

    def cartan_integer(self, alpha, beta):
        """
        Get 2(alpha, beta) / (beta, beta).
        """
        return Fraction(2 * self.dot(alpha, beta), self.norm(beta))

    def simple_root_coordinates(self, root):
        """
        Get the coefficients of a root in the base.
        """
        root = tuple(root)
        if root in self._coordinates:
            return self._coordinates[root]
        if not self.is_root(root):
            raise ValueError(f'{root} is not a root')
        if not self.is_positive(root):
            coordinates = tuple(-c for c in self.simple_root_coordinates(_neg(root)))
        elif root in self.base:
            coordinates = tuple(int(b == root) for b in self.base)
        else:
            for k, simple in enumerate(self.base):
                rest = tuple(x - y for x, y in zip(root, simple))
                if rest in self._index and self.is_positive(rest):
                    coordinates = list(self.simple_root_coordinates(rest))
                    coordinates[k] += 1
                    coordinates = tuple(coordinates)
                    break
            else:
                raise RuntimeError(f'Could not decompose the positive root {root}')
        self._coordinates[root] = coordinates
        return coordinates

    def height(self, root):
        return sum(self.simple_root_coordinates(root))

    def interval(self, alpha, beta):
        """
        Get the roots strictly inside the open cone spanned by two linearly independent roots.

        Parameters
        ----------
        alpha : tuple of int (required)

        beta : tuple of int (required)

        Returns
        -------
        interval : tuple of roots
            Roots gamma = a alpha + b beta with rational a, b > 0, in root order.
        """
        alpha, beta = tuple(alpha), tuple(beta)
        for root in (alpha, beta):
            if not self.is_root(root):
                raise ValueError(f'{root} is not a root')

        # Find a nonzero 2x2 minor
        minor = None
        for r, s in itertools.combinations(range(self.dimension), 2):
            det = alpha[r] * beta[s] - alpha[s] * beta[r]
            if det != 0:
                minor = (r, s, det)
                break
        if minor is None:
            raise ValueError(f'Roots {alpha} and {beta} are linearly dependent')
        r, s, det = minor

        # Solve a alpha + b beta = gamma for each root
        result = []
        for gamma in self.roots:
            a = Fraction(gamma[r] * beta[s] - gamma[s] * beta[r], det)
            b = Fraction(alpha[r] * gamma[s] - alpha[s] * gamma[r], det)
            if a <= 0 or b <= 0:
                continue
            if all(a * x + b * y == g for x, y, g in zip(alpha, beta, gamma)):
                result.append(gamma)
        return tuple(result)

    def _in_open_angle(self, gamma, beta, delta):
        try:
            return gamma in self.interval(beta, delta)
        except ValueError:
            return False

    def _in_cone(self, vector, generators):
        # vector lies in cone(generators) unless a functional separates them
        constraints = [(tuple(g), 0) for g in generators]
        constraints.append((_neg(vector), 1))
        return not _fourier_motzkin_feasible(constraints, self.dimension)

    def classify_subset(self, subset):
        """
        Decide whether a subset of roots is unipotent and find its extreme roots.

        Parameters
        ----------
        subset : iterable of roots or root indices (required)

        Returns
        -------
        report : RootSubsetReport
        """
        indices = sorted({k if isinstance(k, int) else self.index_of(k) for k in subset})
        vectors = [self.roots[k] for k in indices]
        if not vectors:
            return RootSubsetReport(indices, True, [])

        # The cone is pointed when some functional is positive on every generator
        pointed = _fourier_motzkin_feasible([(v, 1) for v in vectors], self.dimension)
        if not pointed:
            return RootSubsetReport(indices, False, [])

        # Every root of the cone must already be in the subset
        members = set(vectors)
        for gamma in self.roots:
            if gamma not in members and self._in_cone(gamma, vectors):
                return RootSubsetReport(indices, False, [])

        # Extreme roots lie in no open angle of two independent members
        extreme = []
        for k, gamma in zip(indices, vectors):
            if not any(self._in_open_angle(gamma, beta, delta)
                       for beta, delta in itertools.combinations(vectors, 2)):
                extreme.append(k)
        return RootSubsetReport(indices, True, extreme)

    def weyl_orbits(self, generators, targets):
        """
        Partition roots into orbits of the group generated by reflections in the given roots.

        Parameters
        ----------
        generators : iterable of roots (required)

        targets : iterable of roots (required)

        Returns
        -------
        orbits : list of tuples of roots
            Each orbit restricted to the targets and sorted, the orbits ordered by least element.
        """
        generators = [tuple(g) for g in generators]
        targets = sorted({tuple(t) for t in targets})
        target_set = set(targets)
        assigned = set()
        orbits = []
        for start in targets:
            if start in assigned:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                new = []
                for vector in frontier:
                    for g in generators:
                        image = self.reflect(g, vector)
                        if image not in orbit:
                            orbit.add(image)
                            new.append(image)
                frontier = new
            assigned |= orbit
            orbits.append(tuple(sorted(orbit & target_set)))
        return sorted(orbits)

    def serialize(self):
        """
        Write the root system as text: a header line `family rank`, then one root per line.
        """
        lines = [f'{self.family} {self.rank}']
        lines += [' '.join(str(x) for x in root) for root in self.roots]
        return '\n'.join(lines) + '\n'


def build(family, rank):
    """
    Build the standard realization of a root system.
    """
    return RootSystem(family, rank)


def interval(rs, alpha, beta):
    return rs.interval(alpha, beta)


def classify_subset(rs, subset):
    return rs.classify_subset(subset)


def weyl_orbits(rs, generators, targets):
    return rs.weyl_orbits(generators, targets)


def parse_root_system(text):
    """
    Read a root system from its text form and check the roots match the standard realization.

    Parameters
    ----------
    text : string (required)
        Header `family rank` followed by one root per line. Lines starting with # are ignored.
    """
    lines = [(k + 1, line.strip()) for k, line in enumerate(text.splitlines())]
    lines = [(k, line) for k, line in lines if line and not line.startswith('#')]
    if not lines:
        raise ValueError('line 1: missing header `family rank`')
    k, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise ValueError(f'line {k}: expected `family rank`, got {header!r}')
    rs = RootSystem(parts[0], int(parts[1]))
    roots = []
    for k, line in lines[1:]:
        try:
            root = tuple(int(x) for x in line.split())
        except ValueError:
            raise ValueError(f'line {k}: roots must be integers, got {line!r}')
        if not rs.is_root(root):
            raise ValueError(f'line {k}: {root} is not a root of {rs.family}{rs.rank}')
        roots.append(root)
    if roots and sorted(roots) != list(rs.roots):
        raise ValueError(f'Root list does not match the standard realization of {rs.family}{rs.rank}')
    return rs
