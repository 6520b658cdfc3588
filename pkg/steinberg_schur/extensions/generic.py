"""
Module to present the universal central extension of a small perfect group given by its table.

The generators are the pairings <x, y> of nonidentity elements and the relators are the crossed pairing
identities <xy, z> = <xy x^-1, xz x^-1> <x, z> and <x, yz> = <x, y> <yx y^-1, yz y^-1>, pairings with the
identity being trivial. The conjugation identities
<x, y> <z, w> <x, y>^-1 = <cz c^-1, cw c^-1> for c = [x, y] and [<x, y>, <z, w>] = <[x, y], [z, w]>
follow from these; they are added unless their count exceeds generic_conjugation_cap.
"""
import warnings

from steinberg_schur.abelian.homology import h2_bruteforce
from steinberg_schur.common.settings import Settings
from steinberg_schur.extensions.report import CheckReport
from steinberg_schur.presentations.presentation import GenKey, Presentation, RelatorTag
from steinberg_schur.presentations.words import commutator, invert, multiply


class _Pairings:
    """
    Generator words of the pairings <x, y> of a group table.
    """
    def __init__(self, group):
        self.group = group
        self.presentation = Presentation(name=f'UCE {group.name}')
        self.index = {}
        for x in range(group.order):
            for y in range(group.order):
                if group.identity not in (x, y):
                    self.index[x, y] = self.presentation.add_generator(
                        f'<{group.labels[x]},{group.labels[y]}>', GenKey('pairing', (x, y), 1))

    def __call__(self, x, y):
        if (x, y) in self.index:
            return (self.index[x, y],)
        return ()

    def conjugate(self, x, y):
        group = self.group
        return group.mul(group.mul(x, y), group.inverse(x))

    def add(self, word, structure, elements):
        self.presentation.add_relator(word, RelatorTag('pairing', elements, (), structure))


def generic_uce(group, settings=None, conjugation=True, verbose=False):
    """
    Present the universal central extension of a finite perfect group.

    Parameters
    ----------
    group : GroupTable (required)
        Perfect, of order at most generic_uce_cap.

    settings : Settings (default=None)

    conjugation : bool (default=True)
        Whether to add the conjugation identities. They have 2 (order - 1)^4 instances and are skipped
        with a warning above generic_conjugation_cap.

    verbose : bool (default=False)

    Returns
    -------
    presentation : Presentation
        Generator keys GenKey('pairing', (x, y), 1). The trivial group gives the empty presentation.
    """
    settings = settings or Settings()
    n = group.order
    if n > settings.generic_uce_cap:
        raise ValueError(f'{group.name} has order {n}, above generic_uce_cap={settings.generic_uce_cap}')
    if not group.is_perfect():
        raise ValueError(f'{group.name} is not perfect and has no universal central extension')
    pairing = _Pairings(group)
    if n == 1:
        return pairing.presentation

    act, mul = pairing.conjugate, group.mul
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = multiply(pairing(act(x, y), act(x, z)), pairing(x, z))
                pairing.add(multiply(pairing(mul(x, y), z), invert(left)), '<xy, z> = <x.y, x.z> <x, z>', (x, y, z))
                right = multiply(pairing(x, y), pairing(act(y, x), act(y, z)))
                pairing.add(multiply(pairing(x, mul(y, z)), invert(right)), '<x, yz> = <x, y> <y.x, y.z>', (x, y, z))
    pairs = list(pairing.index)
    if conjugation and 2 * len(pairs) ** 2 > settings.generic_conjugation_cap:
        warnings.warn(f'Skipping the {2 * len(pairs) ** 2} conjugation identities of {group.name}, above '
                      f'generic_conjugation_cap={settings.generic_conjugation_cap}; they follow from the '
                      f'crossed pairing identities')
        conjugation = False
    if conjugation:
        for x, y in pairs:
            c = group.commutator(x, y)
            for z, w in pairs:
                word = multiply(commutator(pairing(x, y), pairing(z, w)), invert(pairing(c, group.commutator(z, w))))
                pairing.add(word, '[<x, y>, <z, w>] = <[x, y], [z, w]>', (x, y, z, w))
                conjugated = multiply(pairing(x, y), pairing(z, w), invert(pairing(x, y)))
                pairing.add(multiply(conjugated, invert(pairing(act(c, z), act(c, w)))),
                            '<x, y> <z, w> <x, y>^-1 = <c.z, c.w>', (x, y, z, w))
    if verbose:
        print(f'# {pairing.presentation.name}: generators={pairing.presentation.generators} '
              f'relators={len(pairing.presentation.relators)}')
    return pairing.presentation


def certify_generic_uce(group, cover, settings=None, presentation=None):
    """
    Check that a perfect central extension realizes the universal central extension of a group.

    The pairings [s(x), s(y)] of the cover must satisfy every relator of generic_uce, so the cover is a
    quotient of the presented group; it is all of it when its kernel has the order of H^2(G, Z/|G|),
    which is the Schur multiplier of a perfect group.

    Parameters
    ----------
    group : GroupTable (required)

    cover : ExtensionModel (required)
        With cover.base the group and cover.group the table of the cover.

    settings : Settings (default=None)

    presentation : Presentation (default=None)
        The output of generic_uce, computed if None.

    Returns
    -------
    report : CheckReport
    """
    settings = settings or Settings()
    presentation = presentation or generic_uce(group, settings=settings)
    report = CheckReport(f'generic UCE {group.name}')

    images = [cover.pairing(*key.label) for key in presentation.keys]
    failing = next((k for k, word in enumerate(presentation.relators)
                    if cover.evaluate(word, images) != cover.identity), None)
    report.add('relators', failing is None,
               f'{presentation.tags[failing].structure} fails at {presentation.tags[failing].roots}'
               if failing is not None else f'{len(presentation.relators)} relators hold')

    perfect = cover.group is not None and cover.group.is_perfect()
    report.add('perfect', perfect, f'{cover.name} is {"" if perfect else "not "}perfect')

    kernel = cover.kernel()
    central = all(cover.commutator(k, a) == cover.identity for k in kernel for a in range(cover.order))
    report.add('central kernel', central, f'|kernel| = {len(kernel)}')

    multiplier = h2_bruteforce(group, group.order, settings=settings)
    report.add('multiplier order', len(kernel) == multiplier.order,
               f'|kernel| = {len(kernel)}, |H^2(G, Z/{group.order})| = {multiplier.order}')
    return report
