"""
Module to build presentations of the predicted universal central extensions of Steinberg groups.

The Steinberg generators are kept and one central generator z_v is added for every nonzero element v of
the family group. Commutator relators that pick up a central factor in the extension are rewritten as
[a, b] = rhs z_v; all other relators are kept as they are.
"""
import warnings

from steinberg_schur.abelian.family import family_group
from steinberg_schur.presentations.presentation import GenKey, Presentation, RelatorTag
from steinberg_schur.presentations.steinberg import steinberg
from steinberg_schur.presentations.words import commutator, invert, multiply
from steinberg_schur.rootsys import build


class PredictedUCE:
    """
    A Steinberg presentation extended by a central block.

    Parameters
    ----------
    presentation : Presentation (required)
        Steinberg generators first, then the central generators.

    base : Presentation (required)
        The Steinberg presentation.

    family : FamilyGroup (required)

    central : dict (required)
        Family group element -> 1-based generator index of z_v.

    exact : bool (required)
        Whether the central corrections are complete. Inexact encodings are only checked for perfectness.
    """
    def __init__(self, presentation, base, family, central, exact):
        self.presentation = presentation
        self.base = base
        self.family = family
        self.central = central
        self.exact = exact

    def __repr__(self):
        return (f'PredictedUCE({self.base.name!r}, central={len(self.central)}, '
                f'family={self.family.invariants.describe()}, exact={self.exact})')

    @property
    def central_generators(self):
        return sorted(self.central.values())

    @property
    def multiplier_order(self):
        return self.family.order

    def z(self, value):
        """
        Get the word of the central element z_v.
        """
        value = tuple(value)
        if value == self.family.zero:
            return ()
        return (self.central[value],)

    def quotient(self):
        """
        Kill the central block. The relators of the result match the Steinberg presentation.
        """
        return self.presentation.kill_generators(self.central_generators, name=f'{self.presentation.name}|St')

    def project(self, word):
        central = set(self.central.values())
        return tuple(letter for letter in word if abs(letter) not in central)


class _Corrections:
    """
    Central values of the rewritten commutator relators, keyed on relator tags.
    """
    exact = False

    def __init__(self, rs, algebra, family):
        self.rs = rs
        self.algebra = algebra
        self.family = family

    def value(self, name, element):
        if name not in self.family.families:
            return self.family.zero
        return self.family.value_of(name, element)

    def __call__(self, tag):
        return self.family.zero


class _A3Corrections(_Corrections):
    exact = True

    def __call__(self, tag):
        if tag.family not in ('commuting', 'commutator'):
            return self.family.zero
        ring = self.algebra
        first, second = tag.roots
        p, q = tag.params
        i, j = first.index(1), first.index(-1)
        k, l = second.index(1), second.index(-1)
        if tag.family == 'commuting':
            if {i, j} & {k, l}:
                return self.family.zero
            return self.value('c', ring.mul(p, q))
        if tag.family == 'commutator':
            # [x_ij(p), x_jk(q)] with first = e_i - e_j and second = e_j - e_k
            least = min(set(range(4)) - {i, l})
            square = ring.mul(ring.mul(p, p), q)
            if j != least:
                return self.value('c', square)
            return self.value('c', ring.add(ring.mul(p, q), square))
        return self.family.zero


class _D4Corrections(_Corrections):
    def __init__(self, rs, algebra, family):
        super().__init__(rs, algebra, family)
        # Orbits of W(D4) on the short roots of F4 (doubled coordinates) name the three families
        f4 = build('F', 4)
        doubled = [tuple(2 * x for x in root) for root in rs.roots]
        short = [root for root in f4.roots if f4.length_class(root) == 'short']
        self.orbit = {}
        for orbit in f4.weyl_orbits(doubled, short):
            if (2, 0, 0, 0) in orbit:
                name = 'c0'
            elif (1, 1, 1, 1) in orbit:
                name = 'c+'
            else:
                name = 'c-'
            for vector in orbit:
                self.orbit[vector] = name

    def __call__(self, tag):
        if tag.family != 'commuting':
            return self.family.zero
        alpha, beta = tag.roots
        if self.rs.dot(alpha, beta) != 0:
            return self.family.zero
        p, q = tag.params
        half_sum = tuple(x + y for x, y in zip(alpha, beta))
        return self.value(self.orbit[half_sum], self.algebra.mul(p, q))


def _orientation(i, j, k):
    """
    Get det of the signed permutation taking (1, 2, 3) to (i, j, k).
    """
    a, b, c = abs(i), abs(j), abs(k)
    inversions = (a > b) + (a > c) + (b > c)
    sign = -1 if inversions % 2 else 1
    for x in (i, j, k):
        if x < 0:
            sign = -sign
    return sign


class _B3Corrections(_Corrections):
    def __call__(self, tag):
        b = self.algebra
        r = b.ring
        if tag.family == 'commuting' and len(tag.roots[0]) == 1:
            (i,), (j, k) = tag.roots
            if abs(i) in (abs(j), abs(k)):
                return self.family.zero
            u, p = tag.params
            moved = b.act(u, p)
            # c_{i|jk} is c_{1|23} raised to the orientation; the 2-part does not see the sign
            c3 = self.value('c3', moved)
            if _orientation(i, j, k) < 0:
                c3 = self.family.neg(c3)
            return self.family.add(c3, self.value('c2', moved))
        if tag.family == 'commutator':
            p, q = tag.params
            left = r.mul(r.add(q, r.star(q)), r.star(p))
            right = r.mul(r.sub(r.mul(q, q), q), r.star(p))
            return self.family.add(self.value('b4', left), self.value('beps', right))
        return self.family.zero


class _F4Corrections(_Corrections):
    def __call__(self, tag):
        if tag.family != 'commuting':
            return self.family.zero
        rs, f4 = self.rs, self.algebra
        alpha, beta = tag.roots
        if rs.length_class(alpha) == rs.length_class(beta) or rs.dot(alpha, beta) <= 0:
            return self.family.zero
        p, u = tag.params
        if rs.length_class(alpha) == 'short':
            u, p = p, u
        r, s = f4.r, f4.s
        e = self.value('e', s.mul(u, int(f4.rho_r[p])))
        cube = r.add(r.mul(p, r.mul(p, p)), p)
        e_prime = self.value("e'", r.mul(int(f4.rho_s[u]), cube))
        return self.family.add(e, e_prime)


def _corrections(rs, algebra, family):
    if family.order == 1:
        corrections = _Corrections(rs, algebra, family)
        corrections.exact = True
        return corrections
    if rs.family == 'A':
        return _A3Corrections(rs, algebra, family)
    if rs.family == 'D':
        return _D4Corrections(rs, algebra, family)
    if rs.family == 'B':
        return _B3Corrections(rs, algebra, family)
    return _F4Corrections(rs, algebra, family)


def predicted_uce(rs, algebra, verbose=False):
    """
    Build the predicted universal central extension of St(Phi, A).

    Parameters
    ----------
    rs : RootSystem (required)

    algebra : FiniteRing, BRing or F4Ring (required)
        Must be supported by both steinberg and family_group.

    verbose : bool (default=False)

    Returns
    -------
    uce : PredictedUCE
    """
    base = steinberg(rs, algebra)
    family = family_group(rs, algebra)
    corrections = _corrections(rs, algebra, family)
    if not corrections.exact:
        warnings.warn(f'The central corrections for {rs.family}{rs.rank} are incomplete; '
                      f'use the extension of {algebra.name} for perfectness checks only')

    presentation = Presentation(name=f'UCE {base.name}')
    for name, key in zip(base.names, base.keys):
        presentation.add_generator(name, key)
    presentation.resolver = base.resolver
    central = {}
    for value in family.elements()[1:]:
        label = ','.join(str(x) for x in value)
        central[value] = presentation.add_generator(f'z({label})', GenKey('central', value, 1))
    result = PredictedUCE(presentation, base, family, central, corrections.exact)

    rewritten = 0
    for word, tag in zip(base.relators, base.tags):
        value = corrections(tag) if tag is not None else family.zero
        if value != family.zero:
            rewritten += 1
            word = multiply(word, invert(result.z(value)))
        presentation.add_relator(word, tag)

    # The central block is abelian, additive and central
    for v in central:
        for w in central:
            word = multiply(result.z(v), result.z(w), invert(result.z(family.add(v, w))))
            presentation.add_relator(word, RelatorTag('central', (v, w), (), 'z_v z_w = z_{v+w}'))
    for v, z in central.items():
        for g in range(1, base.generators + 1):
            presentation.add_relator(commutator((z,), (g,)), RelatorTag('central', (v,), (g,), '[z_v, g] = 1'))
    if verbose:
        print(f'# {presentation.name}: central={len(central)} rewritten={rewritten} '
              f'relators={len(presentation.relators)}')
    return result
