"""
Module to emit Steinberg presentations St(Phi, A) from a root system and a finite Phi-ring.

Generators are x_alpha(p) for every root alpha (in root order) and every nonzero element p (in
element order). x_alpha(0) is the empty word. Relators are additivity and the commutator formula,
one commutator relation per unordered pair of generators.
"""
from steinberg_schur.rootsys import structure_constants
from steinberg_schur.presentations.presentation import GenKey, Presentation, RelatorTag
from steinberg_schur.presentations.words import commutator, invert, multiply


def _vector_name(root):
    return '[' + ','.join(str(x) for x in root) + ']'


class SteinbergBuilder:
    """
    Shared emission logic: generators per root, additivity relators and commutator relators.

    Parameters
    ----------
    rs : RootSystem (required)

    algebra : FiniteRing, BRing or F4Ring (required)
    """
    def __init__(self, rs, algebra):
        self.rs = rs
        self.algebra = algebra
        self.presentation = Presentation(name=f'St({rs.family}{rs.rank}, {algebra.name})')
        self._pairs = set()

    def x(self, kind, label, element):
        return self.presentation.generator_for(GenKey(kind, label, element))

    def add_generators(self, kind, label, display, labels):
        for element in range(1, len(labels)):
            self.presentation.add_generator(f'x{display}({labels[element]})', GenKey(kind, label, element))

    def add_additivity(self, kind, label, size, add):
        """
        Add x(p) x(q) x(p + q)^-1 for all nonzero p, q.
        """
        for p in range(1, size):
            for q in range(1, size):
                word = multiply(self.x(kind, label, p), self.x(kind, label, q), invert(self.x(kind, label, add(p, q))))
                tag = RelatorTag('additivity', (label,), (p, q), 'x(p) x(q) = x(p + q)')
                self.presentation.add_relator(word, tag)

    def add_commutator(self, family, a, b, rhs, roots, params, structure):
        """
        Add [a, b] rhs^-1 unless the pair of generators already has a relation.
        """
        if not a or not b:
            return False
        pair = frozenset((abs(a[0]), abs(b[0])))
        if len(pair) == 1 or pair in self._pairs:
            return False
        self._pairs.add(pair)
        word = multiply(commutator(a, b), invert(rhs))
        self.presentation.add_relator(word, RelatorTag(family, roots, params, structure))
        return True


class SimplyLacedBuilder(SteinbergBuilder):
    """
    Builder for A_l over associative rings and D_l, E_l over commutative rings.

    For A_l the relations are [x_ij(p), x_jk(q)] = x_ik(pq). For D and E every non-commuting pair
    is oriented so that its structure constant is +1, which makes the relators sign free.
    """
    def __init__(self, rs, ring, constants=None):
        super().__init__(rs, ring)
        self.ring = ring
        self.constants = constants

    def _display(self, root):
        if self.rs.family == 'A':
            return f'{root.index(1) + 1},{root.index(-1) + 1}'
        return _vector_name(root)

    def _orient(self, alpha, beta):
        """
        Get (first, second) with [x_first, x_second] = x_{first + second}, or None if the roots commute.
        """
        total = tuple(x + y for x, y in zip(alpha, beta))
        if not self.rs.is_root(total):
            return None
        if self.rs.family == 'A':
            # e_i - e_j followed by e_j - e_k
            return (alpha, beta) if alpha.index(-1) == beta.index(1) else (beta, alpha)
        return (alpha, beta) if self.constants(alpha, beta) == 1 else (beta, alpha)

    def build(self):
        ring, roots = self.ring, self.rs.roots
        for root in roots:
            self.add_generators('long', root, self._display(root), ring.labels)
        for root in roots:
            self.add_additivity('long', root, ring.size, ring.add)

        for a, alpha in enumerate(roots):
            for beta in roots[a + 1:]:
                if all(x == -y for x, y in zip(alpha, beta)):
                    continue
                oriented = self._orient(alpha, beta)
                for p in ring.nonzero:
                    for q in ring.nonzero:
                        if oriented is None:
                            self.add_commutator('commuting', self.x('long', alpha, p), self.x('long', beta, q), (),
                                                (alpha, beta), (p, q), '[x_a(p), x_b(q)] = 1')
                            continue
                        first, second = oriented
                        s, t = (p, q) if first == alpha else (q, p)
                        total = tuple(x + y for x, y in zip(first, second))
                        self.add_commutator('commutator', self.x('long', first, s), self.x('long', second, t),
                                            self.x('long', total, ring.mul(s, t)), (first, second), (s, t),
                                            '[x_a(p), x_b(q)] = x_{a+b}(pq)')
        return self.presentation


class BBuilder(SteinbergBuilder):
    """
    Builder for B_l over a unital B-ring (R, Delta), l in {3, 4}.

    Long roots are named by index pairs (i, j), 1 <= |i|, |j| <= l, i != +-j, with root e_j - e_i where
    e_{-i} = -e_i. The names (i, j) and (-j, -i) denote one root subgroup through
    x_ij(p) = x_{-j,-i}(-lambda_j^* p^* lambda_i); generators use the name with the larger first index.
    Short roots e_i are named (i,).
    """
    def __init__(self, rs, b_ring):
        super().__init__(rs, b_ring)
        self.b = b_ring
        self.r = b_ring.ring
        self.indices = list(range(1, rs.rank + 1)) + [-i for i in range(1, rs.rank + 1)]
        self.presentation.resolver = self.resolve

    # Index conventions
    def _lam(self, i):
        return self.r.lam if i < 0 else self.r.one

    def _lam_star(self, i):
        return self.r.star(self._lam(i))

    def _unit_vector(self, i):
        vector = [0] * self.rs.rank
        vector[abs(i) - 1] = 1 if i > 0 else -1
        return tuple(vector)

    def long_root(self, i, j):
        return tuple(x - y for x, y in zip(self._unit_vector(j), self._unit_vector(i)))

    def short_root(self, i):
        return self._unit_vector(i)

    def long_names(self):
        return [(i, j) for i in self.indices for j in self.indices if abs(i) != abs(j)]

    @staticmethod
    def is_canonical(i, j):
        return i > -j

    def rewrite(self, i, j, p):
        """
        Get the parameter of x_{-j,-i} equal to x_ij(p).
        """
        r = self.r
        return r.neg(r.mul(r.mul(self._lam_star(j), r.star(p)), self._lam(i)))

    def resolve(self, key):
        if key.kind != 'long':
            return key
        i, j = key.label
        if self.is_canonical(i, j):
            return key
        return GenKey('long', (-j, -i), self.rewrite(i, j, key.element))

    def xl(self, i, j, p):
        return self.x('long', (i, j), p)

    def xs(self, i, u):
        return self.x('short', (i,), u)

    def build(self):
        r, b = self.r, self.b
        delta_labels = b.delta_labels

        # Generators and additivity in root order
        labels = {}
        for root in self.rs.roots:
            if self.rs.length_class(root) == 'short':
                k = next(k for k, x in enumerate(root) if x)
                labels[root] = ('short', ((k + 1) * root[k],))
            else:
                (a, sa), (c, sc) = [(k, x) for k, x in enumerate(root) if x]
                # root = e_j + e_{-i}
                names = [(-sc * (c + 1), sa * (a + 1)), (-sa * (a + 1), sc * (c + 1))]
                labels[root] = ('long', next(name for name in names if self.is_canonical(*name)))
        for root in self.rs.roots:
            kind, label = labels[root]
            display = ','.join(str(i) for i in label)
            self.add_generators(kind, label, display, r.labels if kind == 'long' else delta_labels)
        for root in self.rs.roots:
            kind, label = labels[root]
            if kind == 'long':
                self.add_additivity(kind, label, r.size, r.add)
            else:
                self.add_additivity(kind, label, b.delta_size, b.dadd)

        names = self.long_names()
        # [x_ij(p), x_jk(q)] = x_ik(pq)
        for i, j in names:
            for k in self.indices:
                if abs(k) in (abs(i), abs(j)):
                    continue
                for p in r.nonzero:
                    for q in r.nonzero:
                        product = self.xl(i, k, r.mul(p, q))
                        self.add_commutator('commutator', self.xl(i, j, p), self.xl(j, k, q), product,
                                            ((i, j), (j, k)), (p, q), '[x_ij(p), x_jk(q)] = x_ik(pq)')

        # [x_{-i,j}(p), x_ji(q)] = x_i(phi(lambda_i p q))
        for i, j in names:
            for p in r.nonzero:
                for q in r.nonzero:
                    value = b.phi(r.mul(r.mul(self._lam(i), p), q))
                    self.add_commutator('phi', self.xl(-i, j, p), self.xl(j, i, q), self.xs(i, value),
                                        ((-i, j), (j, i)), (p, q), '[x_{-i,j}(p), x_ji(q)] = x_i(phi(lambda_i pq))')

        # [x_i(u), x_ij(p)] = x_{-i,j}(lambda_i^* rho(u) p) x_j(-(u.(-p)))
        for i, j in names:
            for u in range(1, b.delta_size):
                for p in r.nonzero:
                    long_value = r.mul(r.mul(self._lam_star(i), b.rho(u)), p)
                    short_value = b.dneg(b.act(u, r.neg(p)))
                    rhs = multiply(self.xl(-i, j, long_value), self.xs(j, short_value))
                    self.add_commutator('mixed', self.xs(i, u), self.xl(i, j, p), rhs, ((i,), (i, j)), (u, p),
                                        '[x_i(u), x_ij(p)] = x_{-i,j}(lambda_i^* rho(u) p) x_j(-u.(-p))')

        # [x_i(u), x_j(v)] = x_{-i,j}(-lambda_i^* <u, v>)
        for i, j in names:
            for u in range(1, b.delta_size):
                for v in range(1, b.delta_size):
                    value = r.neg(r.mul(self._lam_star(i), b.pair(u, v)))
                    self.add_commutator('pairing', self.xs(i, u), self.xs(j, v), self.xl(-i, j, value),
                                        ((i,), (j,)), (u, v), '[x_i(u), x_j(v)] = x_{-i,j}(-lambda_i^* <u, v>)')

        # Commuting long roots: {-i, j} and {k, -l} disjoint
        for i, j in names:
            for k, l in names:
                if {-i, j} & {k, -l} or self.long_root(i, j) == self.long_root(k, l):
                    continue
                for p in r.nonzero:
                    for q in r.nonzero:
                        self.add_commutator('commuting', self.xl(i, j, p), self.xl(k, l, q), (),
                                            ((i, j), (k, l)), (p, q), '[x_ij(p), x_kl(q)] = 1')

        # Commuting short and long roots: i not in {j, -k}
        for i in self.indices:
            for j, k in names:
                if i in (j, -k):
                    continue
                for u in range(1, b.delta_size):
                    for p in r.nonzero:
                        self.add_commutator('commuting', self.xs(i, u), self.xl(j, k, p), (),
                                            ((i,), (j, k)), (u, p), '[x_i(u), x_jk(p)] = 1')
        return self.presentation


class F4Builder(SteinbergBuilder):
    """
    Builder for F4 over an F4-ring (R, S) with 2 = 0 in both sorts.

    Long roots carry R and short roots carry S. For independent roots a, b the commutator
    [x_a(p), x_b(q)] is the product over the interval ]a, b[ in root order of x_g(C) with
    C = phi(pq) for perpendicular roots of equal length, C = pq for equal lengths at angle 2pi/3, and
    C = rho(other) same at angle 3pi/4, where same is the parameter of the root with the length of g.
    """
    def __init__(self, rs, f4_ring):
        super().__init__(rs, f4_ring)
        self.f4 = f4_ring

    def _sort(self, root):
        return self.f4.r if self.rs.length_class(root) == 'long' else self.f4.s

    def _phi(self, root):
        return self.f4.phi_r if self.rs.length_class(root) == 'long' else self.f4.phi_s

    def _rho(self, root):
        return self.f4.rho_r if self.rs.length_class(root) == 'long' else self.f4.rho_s

    def structure_term(self, alpha, beta, gamma, p, q):
        rs = self.rs
        same_length = rs.length_class(alpha) == rs.length_class(beta)
        if same_length and rs.dot(alpha, beta) == 0:
            return int(self._phi(alpha)[self._sort(alpha).mul(p, q)])
        if same_length:
            return self._sort(alpha).mul(p, q)
        if rs.length_class(gamma) == rs.length_class(alpha):
            same, other, other_root = p, q, beta
        else:
            same, other, other_root = q, p, alpha
        return self._sort(gamma).mul(int(self._rho(other_root)[other]), same)

    def build(self):
        rs = self.rs
        for root in rs.roots:
            sort = self._sort(root)
            self.add_generators(rs.length_class(root), root, _vector_name(root), sort.labels)
        for root in rs.roots:
            sort = self._sort(root)
            self.add_additivity(rs.length_class(root), root, sort.size, sort.add)

        roots = rs.roots
        for a, alpha in enumerate(roots):
            for beta in roots[a + 1:]:
                if all(x == -y for x, y in zip(alpha, beta)):
                    continue
                interval = rs.interval(alpha, beta)
                ka, kb = rs.length_class(alpha), rs.length_class(beta)
                for p in self._sort(alpha).nonzero:
                    for q in self._sort(beta).nonzero:
                        rhs = multiply(*[self.x(rs.length_class(g), g, self.structure_term(alpha, beta, g, p, q))
                                         for g in interval])
                        family = 'commutator' if interval else 'commuting'
                        self.add_commutator(family, self.x(ka, alpha, p), self.x(kb, beta, q), rhs, (alpha, beta),
                                            (p, q), '[x_a(p), x_b(q)] = prod x_g(C_g(p, q))')
        return self.presentation


def steinberg(rs, algebra):
    """
    Emit the Steinberg presentation St(Phi, A).

    Parameters
    ----------
    rs : RootSystem (required)
        Family A (associative ring), D or E (commutative ring), B of rank 3 or 4 (unital B-ring) or
        F4 (F4-ring with 2 = 0 in both sorts).

    algebra : FiniteRing, BRing or F4Ring (required)

    Returns
    -------
    presentation : Presentation
        With GenKey keys, RelatorTag tags and, for B, a resolver for the second names of long roots.
    """
    family = rs.family
    kind = getattr(algebra, 'kind', None)
    if family == 'A':
        if kind != 'ring' or not algebra.is_associative():
            raise ValueError(f'A{rs.rank} needs an associative ring, got {algebra!r}')
        return SimplyLacedBuilder(rs, algebra).build()
    if family in ('D', 'E'):
        if kind != 'ring' or not (algebra.is_associative() and algebra.is_commutative()):
            raise ValueError(f'{family}{rs.rank} needs a commutative ring, got {algebra!r}')
        return SimplyLacedBuilder(rs, algebra, structure_constants(rs)).build()
    if family == 'B':
        if kind != 'b_ring':
            raise ValueError(f'B{rs.rank} needs a B-ring, got {algebra!r}')
        if rs.rank not in (3, 4):
            raise ValueError(f'B_l presentations are emitted for l in (3, 4), got {rs.rank}')
        if not algebra.is_unital:
            raise ValueError(f'B{rs.rank} presentations need a unital B-ring, {algebra.name} has no unit')
        if rs.rank >= 4 and not algebra.ring.is_associative():
            raise ValueError(f'B{rs.rank} needs an associative ring R')
        return BBuilder(rs, algebra).build()
    if family == 'F':
        if kind != 'f4_ring':
            raise ValueError(f'F4 needs an F4-ring, got {algebra!r}')
        for ring in (algebra.r, algebra.s):
            if ring.integer(2) != 0:
                raise ValueError(f'F4 presentations need 2 = 0 in both sorts, 2 = {ring.label(ring.integer(2))} '
                                 f'in {ring.name}')
        return F4Builder(rs, algebra).build()
    raise ValueError(f'No Steinberg presentation for family {family}. Choose from A, B, D, E, F')


def generator_root(rs, key):
    """
    Get the root of a Steinberg generator key.

    Keys of A, D, E and F generators carry the root itself; B keys carry index names, where the
    long name (i, j) stands for e_j - e_i and the short name (i,) for e_i.
    """
    if rs.family != 'B':
        return tuple(key.label)
    vector = [0] * rs.rank
    signs = [1] if key.kind == 'short' else [-1, 1]
    for sign, i in zip(signs, key.label):
        vector[abs(i) - 1] += sign * (1 if i > 0 else -1)
    return tuple(vector)


def positive_generators(presentation, rs):
    """
    Get the generators of the positive root subgroups, in generator order.
    """
    return [g for g in range(1, presentation.generators + 1)
            if rs.is_positive(generator_root(rs, presentation.key_of(g)))]
