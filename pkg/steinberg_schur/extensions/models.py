"""
Module to model finite central extensions E -> G and to check the crossed pairing identities on them.

The pairing of x, y in G is <x, y> = [s(x), s(y)] for a section s of the projection. It does not depend
on the section when the kernel is central.
"""
import numpy as np

from steinberg_schur.abelian.groups import GroupTable
from steinberg_schur.common.settings import Settings
from steinberg_schur.enumerator.todd_coxeter import coset_words
from steinberg_schur.extensions.report import CheckReport
from steinberg_schur.presentations.words import invert


class ExtensionModel:
    """
    A finite group E with a surjection onto a finite group G and a section.

    Elements of E are the integers 0..order-1.

    Parameters
    ----------
    order : int (required)

    mul : callable (required)
        (a, b) -> ab in E.

    inverse : callable (required)

    identity : int (required)

    base : GroupTable (required)
        The group G.

    project : callable (required)
        E -> G.

    section : callable (required)
        G -> E with project(section(g)) = g.

    generator_elements : dict (default=None)
        GenKey -> element of G for the Steinberg generators of G, if G is a Steinberg group.

    rs : RootSystem (default=None)
        Root system of the Steinberg group G.

    group : GroupTable (default=None)
        E itself, when it is given by a table.

    name : string (default='extension')
    """
    def __init__(self, order, mul, inverse, identity, base, project, section, generator_elements=None,
                 rs=None, group=None, name='extension'):
        self.order = order
        self.mul = mul
        self.inverse = inverse
        self.identity = identity
        self.base = base
        self.project = project
        self.section = section
        self.generator_elements = generator_elements or {}
        self.rs = rs
        self.group = group
        self.name = name
        self._kernel = None

    def __repr__(self):
        return f'ExtensionModel({self.name!r}, order={self.order}, base={self.base.name!r})'

    def kernel(self):
        if self._kernel is None:
            self._kernel = [e for e in range(self.order) if self.project(e) == self.base.identity]
        return self._kernel

    def commutator(self, a, b):
        return self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))

    def conjugate(self, a, by):
        return self.mul(self.mul(by, a), self.inverse(by))

    def pairing(self, x, y):
        return self.commutator(self.section(x), self.section(y))

    def evaluate(self, word, images):
        """
        Evaluate a word given the images of the generators (a list, 1-based letters).
        """
        result = self.identity
        for letter in word:
            image = images[abs(letter) - 1]
            result = self.mul(result, image if letter > 0 else self.inverse(image))
        return result


def from_group_tables(extension, base, projection, section=None, name=None):
    """
    Model E -> G given both multiplication tables and the projection as an array.
    """
    projection = np.asarray(projection, dtype=np.int64)
    if len(projection) != extension.order:
        raise ValueError(f'The projection has {len(projection)} entries for {extension.order} elements')
    if section is None:
        section = np.full(base.order, -1, dtype=np.int64)
        for e in range(extension.order - 1, -1, -1):
            section[projection[e]] = e
        if (section < 0).any():
            raise ValueError(f'The projection onto {base.name} is not surjective')
    section = np.asarray(section, dtype=np.int64)
    return ExtensionModel(extension.order, extension.mul, extension.inverse, extension.identity, base,
                          lambda e: int(projection[e]), lambda g: int(section[g]), group=extension,
                          name=name or f'{extension.name} -> {base.name}')


def from_central_quotient(extension, kernel=None, name=None):
    """
    Model E -> E/K for a central subgroup K, the center by default.
    """
    kernel = sorted(extension.center() if kernel is None else kernel)
    center = set(extension.center())
    if not set(kernel) <= center:
        raise ValueError(f'The kernel {kernel} is not central in {extension.name}')
    if sorted(extension.closure(kernel)) != kernel:
        raise ValueError(f'The kernel {kernel} is not a subgroup of {extension.name}')

    # Cosets eK, numbered by their least element
    representatives = sorted({min(extension.mul(e, k) for k in kernel) for e in range(extension.order)})
    position = {r: g for g, r in enumerate(representatives)}
    projection = [position[min(extension.mul(e, k) for k in kernel)] for e in range(extension.order)]
    table = [[projection[extension.mul(a, b)] for b in representatives] for a in representatives]
    base = GroupTable(table, name=f'{extension.name}/Z', validate=False)
    return from_group_tables(extension, base, projection, section=representatives, name=name)


class CosetGroup:
    """
    A group given by a complete coset table on the trivial subgroup.

    Element c is the coset reached from 0 by coset_words(table)[c]; products follow the right action.
    """
    def __init__(self, table, name='group'):
        if not table.is_complete:
            raise ValueError(f'{name} needs a complete coset table')
        self.table = table
        self.words = coset_words(table)
        self.name = name
        self.identity = 0

    def __repr__(self):
        return f'CosetGroup({self.name!r}, order={self.order})'

    @property
    def order(self):
        return self.table.coset_count

    def element(self, word):
        return self.table.act(0, word)

    def mul(self, a, b):
        return self.table.act(a, self.words[b])

    def inverse(self, a):
        return self.table.act(0, invert(self.words[a]))

    def commutator(self, a, b):
        return self.mul(self.mul(a, b), self.mul(self.inverse(a), self.inverse(b)))


def from_tables(extension, base, keys=None, rs=None, name='extension'):
    """
    Model E -> G from complete coset tables of both groups on the trivial subgroup.

    The presentation of E must start with the generators of the presentation of G; its other
    generators map to the identity.

    Parameters
    ----------
    extension : CosetTable (required)

    base : CosetTable (required)

    keys : list of GenKey (default=None)
        Keys of the generators of G, giving generator_elements.

    rs : RootSystem (default=None)
    """
    group = CosetGroup(extension, name=name)
    base_group = CosetGroup(base, name=f'{name}|base')
    generators = base.generators

    def project(e):
        return base_group.element(tuple(letter for letter in group.words[e] if abs(letter) <= generators))

    section = [group.element(word) for word in base_group.words]
    elements = {}
    for g, key in enumerate(keys or [], start=1):
        if key is not None:
            elements[key] = base_group.element((g,))
    return ExtensionModel(group.order, group.mul, group.inverse, 0, base_group, project, lambda g: section[g],
                          generator_elements=elements, rs=rs, group=group, name=name)


def direct_product_model(base, kernel, name=None):
    """
    Model the trivial extension G x Z -> G, with element g |Z| + z for (g, z).
    """
    size = kernel.order
    if not all(kernel.commutator(a, b) == kernel.identity for a in range(size) for b in range(size)):
        raise ValueError(f'{kernel.name} is not abelian')

    def mul(a, b):
        return base.mul(a // size, b // size) * size + kernel.mul(a % size, b % size)

    def inverse(a):
        return base.inverse(a // size) * size + kernel.inverse(a % size)

    return ExtensionModel(base.order * size, mul, inverse, base.identity * size + kernel.identity, base,
                          lambda e: e // size, lambda g: g * size + kernel.identity,
                          name=name or f'{base.name} x {kernel.name}')


def _samples(count, arity, settings, limit=None):
    """
    Get all arity-tuples of range(count) if there are at most limit of them, else a seeded sample of limit.
    """
    limit = settings.sample_cap if limit is None else limit
    if count ** arity <= limit:
        grids = np.meshgrid(*[np.arange(count)] * arity, indexing='ij')
        return np.stack([grid.ravel() for grid in grids], axis=1).tolist(), True
    rng = np.random.default_rng(settings.seed)
    return rng.integers(0, count, size=(limit, arity)).tolist(), False


def _first_failure(tuples, check):
    for values in tuples:
        if not check(*values):
            return tuple(values)
    return None


def _detail(witness, passed_detail):
    return f'fails at {witness}' if witness is not None else passed_detail


def check_pairing_identities(model, settings=None, verbose=False):
    """
    Check the crossed pairing and Hall-Witt identities of a central extension model.

    Pairs and triples are exhaustive when there are at most sample_cap of them, otherwise sample_cap of
    them are drawn with the configured seed.

    Parameters
    ----------
    model : ExtensionModel (required)

    settings : Settings (default=None)

    verbose : bool (default=False)

    Returns
    -------
    report : CheckReport
        Items section, homomorphism, central kernel, basic, crossed pairing and Hall-Witt. Models of
        extensions of A-type Steinberg groups with generator_elements also get root vanishing and
        biadditivity.
    """
    settings = settings or Settings()
    base, pair, e = model.base, model.pairing, model.identity
    n = base.order
    report = CheckReport(f'pairings {model.name}')

    def act(x, y):
        return base.mul(base.mul(x, y), base.inverse(x))

    witness = next((g for g in range(n) if model.project(model.section(g)) != g), None)
    report.add('section', witness is None, _detail(witness, f'{n} elements'))

    pairs, exhaustive = _samples(model.order, 2, settings)
    witness = _first_failure(pairs, lambda a, b: model.project(model.mul(a, b))
                             == base.mul(model.project(a), model.project(b)))
    report.add('homomorphism', witness is None, _detail(witness, f'{len(pairs)} pairs, exhaustive={exhaustive}'))

    kernel = model.kernel()
    elements, exhaustive = _samples(model.order, 1, settings, limit=max(1, settings.sample_cap // len(kernel)))
    witness = _first_failure([(k, a) for k in kernel for a, in elements],
                             lambda k, a: model.commutator(k, a) == e)
    surjective = len(kernel) * n == model.order
    report.add('central kernel', witness is None and surjective,
               _detail(witness, f'|kernel| = {len(kernel)}, |E| = |kernel| |G|: {surjective}'))

    pairs, exhaustive = _samples(n, 2, settings)
    witness = _first_failure(pairs, lambda x, y: pair(x, x) == e and pair(x, base.identity) == e
                             and model.mul(pair(x, y), pair(y, x)) == e
                             and model.project(pair(x, y)) == base.commutator(x, y))
    report.add('basic', witness is None, _detail(witness, f'{len(pairs)} pairs, exhaustive={exhaustive}'))

    triples, exhaustive = _samples(n, 3, settings)

    def crossed(x, y, z):
        left = pair(base.mul(x, y), z) == model.mul(pair(act(x, y), act(x, z)), pair(x, z))
        right = pair(x, base.mul(y, z)) == model.mul(pair(x, y), pair(act(y, x), act(y, z)))
        return left and right

    witness = _first_failure(triples, crossed)
    report.add('crossed pairing', witness is None,
               _detail(witness, f'{len(triples)} triples, exhaustive={exhaustive}'))

    def hall_witt(x, y, z):
        s = model.section
        first = model.conjugate(pair(x, base.commutator(base.inverse(y), z)), s(y))
        second = model.conjugate(pair(y, base.commutator(base.inverse(z), x)), s(z))
        third = model.conjugate(pair(z, base.commutator(base.inverse(x), y)), s(x))
        return model.mul(model.mul(first, second), third) == e

    witness = _first_failure(triples, hall_witt)
    report.add('Hall-Witt', witness is None, _detail(witness, f'{len(triples)} triples, exhaustive={exhaustive}'))

    if model.rs is not None and model.rs.family == 'A' and model.generator_elements:
        _check_a_type(model, report)
    if verbose:
        print(f'# {report.describe()}')
    return report


def _check_a_type(model, report):
    """
    Pairings within one root subgroup vanish; pairings of commuting root subgroups are central and biadditive.
    """
    rs, base, pair, e = model.rs, model.base, model.pairing, model.identity
    by_root = {}
    for key, element in model.generator_elements.items():
        if key.kind == 'long':
            by_root.setdefault(tuple(key.label), []).append(element)

    witness = None
    for root, values in by_root.items():
        witness = witness or _first_failure([(x, y) for x in values for y in values], lambda x, y: pair(x, y) == e)
    report.add('root vanishing', witness is None, _detail(witness, f'{len(by_root)} roots'))

    kernel = set(model.kernel())
    witness = None
    for alpha, xs in by_root.items():
        for beta, ys in by_root.items():
            total = tuple(a + b for a, b in zip(alpha, beta))
            if not any(total) or rs.is_root(total):
                continue
            for x in xs:
                for x2 in xs:
                    for y in ys:
                        value = pair(x, y)
                        if value not in kernel or pair(base.mul(x, x2), y) != model.mul(value, pair(x2, y)):
                            witness = witness or (alpha, beta, x, x2, y)
    report.add('biadditivity', witness is None, _detail(witness, 'commuting root subgroups'))
