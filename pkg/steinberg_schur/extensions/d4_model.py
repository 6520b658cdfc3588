"""
Module to realize the 2-group M acted on by St(D4, F_2) and to verify the action.

M is generated by a central involution C, involutions n_a for the 24 roots a of D4 and elements d_a which
only depend on the class of a under the relation "a = b or a is orthogonal to b". Its elements are stored
in the normal form C^c (prod n_a^v_a in root order) d_A^a d_B^b as integers: bit 0 is c, bits 1..24 are
the n-vector and bits 25, 26 are the exponents of d_A = d_{e1+e2} and d_B = d_{e1+e3}. The third class is
d_X = d_{e1+e4} = d_A d_B.
"""
from steinberg_schur.extensions.report import CheckReport
from steinberg_schur.phirings import gf
from steinberg_schur.presentations.steinberg import steinberg
from steinberg_schur.rootsys import build


ROOTS = 24
C = 1
D_A = 1 << 25
D_B = 1 << 26
N_MASK = ((1 << ROOTS) - 1) << 1

# Index pairs of the three d-classes
CLASSES = {frozenset((0, 1)): 'A', frozenset((2, 3)): 'A', frozenset((0, 2)): 'B', frozenset((1, 3)): 'B',
           frozenset((0, 3)): 'X', frozenset((1, 2)): 'X'}
REPRESENTATIVES = {'A': (1, 1, 0, 0), 'B': (1, 0, 1, 0), 'X': (1, 0, 0, 1)}
D_ELEMENTS = {'A': D_A, 'B': D_B, 'X': D_A | D_B}


def _support(root):
    return [k for k, x in enumerate(root) if x != 0]


def _parity(x):
    return bin(x).count('1') & 1


class D4Model:
    """
    The group M with the action of the generators x_a(1) of St(D4, F_2).

    Attributes
    ----------
    rs : RootSystem
        D4, whose root order fixes the n-bits.

    generators : list of int
        C, then n_a in root order, then d_A and d_B.

    action : dict
        Root -> images of the generators under conjugation by x_a(1).
    """
    order = 2 ** 27

    def __init__(self):
        self.rs = build('D', 4)
        self.roots = list(self.rs.roots)
        self.position = {root: k for k, root in enumerate(self.roots)}
        self.opposite = [self.position[tuple(-x for x in root)] for root in self.roots]
        self.pairs = [(k, m) for k, m in enumerate(self.opposite) if k < m]
        self.upper = sum(1 << (k + 1) for k, m in self.pairs)
        self.generators = [C] + [self.n(root) for root in self.roots] + [D_A, D_B]
        self.names = ['C'] + [f'n{list(root)}' for root in self.roots] + ['dA', 'dB']
        self.action = {alpha: self.action_images(alpha) for alpha in self.roots}

    def __repr__(self):
        return f'D4Model(order=2^27, generators={len(self.generators)})'

    # Elements
    def n(self, root):
        return 1 << (self.position[tuple(root)] + 1)

    @staticmethod
    def d(root):
        return D_ELEMENTS[CLASSES[frozenset(_support(root))]]

    def _swap(self, v):
        """
        Get the n-vector with every root replaced by its opposite.
        """
        result = 0
        for k, m in self.pairs:
            result |= ((v >> (m + 1)) & 1) << (k + 1)
            result |= ((v >> (k + 1)) & 1) << (m + 1)
        return result

    def mul(self, x, y):
        # Moving n_b of y past n_{-b} of x, b before -b in root order, gives a C
        c = _parity(y & self._swap(x & N_MASK) & self.upper)
        a1, b1 = (x >> 25) & 1, (x >> 26) & 1
        a2, b2 = (y >> 25) & 1, (y >> 26) & 1
        c ^= (b1 & a2) ^ (a1 & a2) ^ (b1 & b2)
        return ((x ^ y) & ~1) | (((x ^ y) & 1) ^ c)

    def inverse(self, x):
        # x^2 is 1 or C
        return x ^ self.mul(x, x)

    def commutator(self, x, y):
        return self.mul(self.mul(x, y), self.mul(self.inverse(x), self.inverse(y)))

    def product(self, *elements):
        result = 0
        for x in elements:
            result = self.mul(result, x)
        return result

    def describe(self, x):
        factors = [name for bit, name in enumerate(self.names[:-2]) if (x >> bit) & 1]
        factors += [name for bit, name in ((25, 'dA'), (26, 'dB')) if (x >> bit) & 1]
        return ' '.join(factors) or '1'

    # Action of x_alpha(1)
    def n_image(self, alpha, beta):
        """
        Get the image of n_beta under conjugation by x_alpha(1).
        """
        dot = self.rs.dot(alpha, beta)
        if dot == -2:
            return self.product(self.n(beta), self.d(alpha), self.n(alpha))
        if dot > 0:
            return self.n(beta)
        if dot == 0:
            return self.mul(self.n(beta), C)
        # alpha = s e_i + t e_j and beta = -t e_j + r e_k
        j = next(k for k in range(4) if alpha[k] != 0 and beta[k] != 0)
        i = next(k for k in _support(alpha) if k != j)
        k = next(m for m in _support(beta) if m != j)
        l = next(m for m in range(4) if m not in (i, j, k))
        total = tuple(x + y for x, y in zip(alpha, beta))
        result = self.mul(self.n(beta), self.n(total))
        if (k < i) ^ (j < l):
            result ^= C
        return result

    def d_image(self, alpha, gamma):
        """
        Get the image of d_gamma under conjugation by x_alpha(1).
        """
        i, j = _support(alpha)
        k = min(m for m in range(4) if m not in (i, j))
        beta = tuple(1 if m in (j, k) else 0 for m in range(4))
        result = self.d(gamma)
        if self.rs.dot(alpha, gamma) % 2:
            result = self.mul(result, self.n(alpha))
        if self.rs.dot(beta, gamma) % 2:
            result = self.mul(result, C)
        return result

    def action_images(self, alpha):
        return ([C] + [self.n_image(alpha, beta) for beta in self.roots]
                + [self.d_image(alpha, REPRESENTATIVES['A']), self.d_image(alpha, REPRESENTATIVES['B'])])

    def apply(self, alpha, x, images=None):
        """
        Apply conjugation by x_alpha(1) to an element through the images of the normal form factors.
        """
        images = images or self.action[alpha]
        result = 0
        for bit in range(27):
            if (x >> bit) & 1:
                result = self.mul(result, images[bit])
        return result

    # Relations
    def relation_failures(self, images=None):
        """
        Check the defining relations of M on the given generator images (default: the generators).

        Returns
        -------
        failures : list of strings
            One witness per failing relation, empty if all hold.
        """
        images = images or self.generators
        c, ns, da, db = images[0], images[1:ROOTS + 1], images[ROOTS + 1], images[ROOTS + 2]
        dx = self.mul(da, db)
        d_of = {'A': da, 'B': db, 'X': dx}
        failures = []

        def expect(value, wanted, relation):
            if value != wanted:
                failures.append(f'{relation}: got {self.describe(value)}, expected {self.describe(wanted)}')

        expect(self.mul(c, c), 0, 'C^2 = 1')
        for k, x in enumerate(images):
            expect(self.commutator(c, x), 0, f'[C, {self.names[k]}] = 1')
        for a, alpha in enumerate(self.roots):
            expect(self.mul(ns[a], ns[a]), 0, f'n{list(alpha)}^2 = 1')
            for b, beta in enumerate(self.roots):
                wanted = c if self.opposite[a] == b else 0
                expect(self.commutator(ns[a], ns[b]), wanted, f'[n{list(alpha)}, n{list(beta)}]')
            for name, d in d_of.items():
                expect(self.commutator(ns[a], d), 0, f'[n{list(alpha)}, d{name}] = 1')
            d_alpha = d_of[CLASSES[frozenset(_support(alpha))]]
            expect(self.mul(d_alpha, d_alpha), c, f'd{list(alpha)}^2 = C')
            for beta in self.roots:
                d_beta = d_of[CLASSES[frozenset(_support(beta))]]
                wanted = c if self.rs.dot(alpha, beta) % 2 else 0
                expect(self.commutator(d_alpha, d_beta), wanted, f'[d{list(alpha)}, d{list(beta)}]')
        expect(self.mul(d_of['A'], d_of['X']), self.mul(d_of['B'], c), 'd[1,1,0,0] d[0,1,1,0] = d[1,0,1,0] C')
        return failures

    def class_failures(self):
        """
        Check that d_a = d_b whenever a and b are equal, orthogonal or opposite.
        """
        failures = []
        for alpha in self.roots:
            for beta in self.roots:
                if self.rs.dot(alpha, beta) in (-2, 0, 2) and self.d(alpha) != self.d(beta):
                    failures.append(f'd{list(alpha)} != d{list(beta)}')
        return failures


def build_d4_model():
    """
    Build M with the action of St(D4, F_2) and re-verify every defining relation.

    Raises
    ------
    RuntimeError
        If a relation fails, with the failing relation as witness.
    """
    model = D4Model()
    failures = model.class_failures() + model.relation_failures()
    if failures:
        raise RuntimeError(f'The normal form of M violates {len(failures)} relations, first: {failures[0]}')
    return model


def _automorphism_failures(model):
    failures = []
    for alpha in model.roots:
        images = model.action[alpha]
        for witness in model.relation_failures(images):
            failures.append(f'x{list(alpha)}(1): {witness}')
        expected = model.mul(images[ROOTS + 1], images[ROOTS + 2])
        if model.d_image(alpha, REPRESENTATIVES['X']) != expected:
            failures.append(f'x{list(alpha)}(1): the image of dX is not the product of the images of dA and dB')
    return failures


def _relator_failures(model):
    presentation = steinberg(model.rs, gf(2))
    roots = [key.label for key in presentation.keys]
    failures = []
    for word, tag in zip(presentation.relators, presentation.tags):
        for bit, x in enumerate(model.generators):
            image = x
            # Conjugation by a word applies its last letter first; every x_a(1) is an involution
            for letter in reversed(word):
                image = model.apply(roots[abs(letter) - 1], image)
            if image != x:
                name = ' '.join(presentation.names[abs(letter) - 1] + ('' if letter > 0 else '^-1')
                                for letter in word)
                failures.append(f'{tag.family} relator {name} moves {model.names[bit]} '
                                f'to {model.describe(image)}')
                break
    return failures


def verify_d4_action(model, verbose=False):
    """
    Verify the action of St(D4, F_2) on M and the subgroup generated by n_{e_i + e_4} n_{e_i - e_4}.

    Parameters
    ----------
    model : D4Model (required)

    verbose : bool (default=False)

    Returns
    -------
    report : CheckReport
        Items relations, automorphisms, relators, subgroup order and C excluded.
    """
    report = CheckReport('d4model')
    failures = model.class_failures() + model.relation_failures()
    report.add('relations', not failures, failures[0] if failures else '|M| = 2^27')

    failures = _automorphism_failures(model)
    report.add('automorphisms', not failures, failures[0] if failures else f'{len(model.roots)} generators')

    failures = _relator_failures(model)
    report.add('relators', not failures, failures[0] if failures else 'every relator of St(D4, F2) acts trivially')

    # y_i = n_{e_i + e_4} n_{e_i - e_4} for i = +-1, +-2, +-3
    ys = []
    for i in range(3):
        for sign in (1, -1):
            plus = tuple(sign if k == i else (1 if k == 3 else 0) for k in range(4))
            minus = tuple(sign if k == i else (-1 if k == 3 else 0) for k in range(4))
            ys.append(model.mul(model.n(plus), model.n(minus)))
    subgroup = {0}
    frontier = {0}
    while frontier:
        frontier = {model.mul(x, y) for x in frontier for y in ys} - subgroup
        subgroup |= frontier
    elementary = all(model.mul(x, x) == 0 for x in subgroup)
    abelian = all(model.commutator(x, y) == 0 for x in ys for y in ys)
    report.add('subgroup order', len(subgroup) == 64 and elementary and abelian,
               f'order {len(subgroup)}, elementary={elementary}, abelian={abelian}')
    report.add('C excluded', C not in subgroup, 'C is ' + ('not ' if C not in subgroup else '') + 'in the subgroup')
    if verbose:
        print(f'# {report.describe()}')
    return report
