"""
Module to build finite rings from recipe strings such as gf(4), zmod(6), dual_numbers(gf(2)),
product(gf(2), gf(3)) or etale_quadratic(gf(2), field).
"""
import re
import galois
import numpy as np

from steinberg_schur.common.settings import Settings
from steinberg_schur.phirings.finite_ring import FiniteRing, product_ring


RECIPES = ['gf', 'zmod', 'dual_numbers', 'product', 'etale_quadratic']


class EtaleAlgebra(FiniteRing):
    """
    Quadratic etale algebra L over a commutative ring K with its conjugation.

    Parameters
    ----------
    base : FiniteRing (required)
        The ring K.

    embed : list of int (required)
        Ids in L of the elements of K.

    split : bool (required)
        True for K x K, False for a field extension.

    **kwargs
        Tables of L, passed to FiniteRing.
    """
    def __init__(self, base, embed, split, **kwargs):
        super().__init__(**kwargs)
        self.base = base
        self.embed = np.asarray(embed, dtype=np.int64)
        self.split = split
        self._restrict = {int(x): k for k, x in enumerate(self.embed)}

    def to_base(self, element):
        """
        Get the element of K embedded as the given element of L.
        """
        try:
            return self._restrict[int(element)]
        except KeyError:
            raise ValueError(f'{self.labels[element]} does not lie in the base ring {self.base.name}')

    def trace(self, u):
        return self.to_base(self.add(u, self.star(u)))

    def norm(self, u):
        return self.to_base(self.mul(u, self.star(u)))


def _field_tables(q):
    """
    Get the tables of GF(q) with ids equal to the integer representation of galois.
    """
    try:
        field = galois.GF(q)
    except (ValueError, TypeError) as err:
        raise ValueError(f'gf({q}) is not supported: {q} is not a prime power ({err})')
    x = field.elements
    add = (x[:, None] + x[None, :]).view(np.ndarray).astype(np.int64)
    mul = (x[:, None] * x[None, :]).view(np.ndarray).astype(np.int64)
    return field, add, mul


def gf(q, name=None):
    """
    Build the finite field with q elements.
    """
    _, add, mul = _field_tables(q)
    return FiniteRing(add, mul, one=1, lam=1, name=name or f'gf({q})')


def zmod(n, name=None):
    """
    Build the ring Z/n.
    """
    if n < 1:
        raise ValueError(f'zmod({n}) needs a positive modulus')
    values = np.arange(n)
    add = (values[:, None] + values[None, :]) % n
    mul = (values[:, None] * values[None, :]) % n
    one = 1 % n if n > 1 else None
    return FiniteRing(add, mul, one=one, lam=one, name=name or f'zmod({n})')


def dual_numbers(base, name=None):
    """
    Build base[eps]/(eps^2). The element a + b eps has id a + n b.
    """
    n = base.size
    a = np.arange(n * n) % n
    b = np.arange(n * n) // n
    add = base.add_table[a[:, None], a[None, :]] + n * base.add_table[b[:, None], b[None, :]]
    real = base.mul_table[a[:, None], a[None, :]]
    dual = base.add_table[base.mul_table[a[:, None], b[None, :]], base.mul_table[b[:, None], a[None, :]]]
    mul = real + n * dual
    labels = [base.labels[x] if y == 0 else f'{base.labels[x]}+{base.labels[y]}e' for x, y in zip(a, b)]
    one = base.one
    return FiniteRing(add, mul, one=one, lam=one, labels=labels, name=name or f'dual_numbers({base.name})')


def _multiplicative_generator(ring):
    units = [x for x in ring.nonzero if ring.one is not None and (ring.mul_table[x] == ring.one).any()]
    if len(units) != ring.size - 1:
        raise ValueError(f'{ring.name} is not a field')
    for g in units:
        seen, x = {g}, g
        while x != ring.one:
            x = ring.mul(x, g)
            seen.add(x)
        if len(seen) == len(units):
            return g
    raise ValueError(f'{ring.name} has no multiplicative generator')


def _field_embedding(small, large):
    """
    Find a ring embedding of the field small into large by trying images of a multiplicative generator.
    """
    g = _multiplicative_generator(small)
    order = small.size - 1
    for image in large.nonzero:
        embed = np.zeros(small.size, dtype=np.int64)
        x, y = small.one, large.one
        for _ in range(order):
            embed[x] = y
            x, y = small.mul(x, g), large.mul(y, image)
        if x != small.one or y != large.one or len(set(embed[1:])) != order:
            continue
        if np.array_equal(embed[small.add_table], large.add_table[np.ix_(embed, embed)]):
            return embed
    raise ValueError(f'{small.name} does not embed into {large.name}')


def etale_quadratic(base, split, name=None):
    """
    Build a quadratic etale algebra over a commutative ring.

    Parameters
    ----------
    base : FiniteRing (required)

    split : bool or string (required)
        'split' for base x base with the swap, 'field' for the quadratic field extension of a finite field.
    """
    if isinstance(split, str):
        if split not in ('split', 'field'):
            raise ValueError(f'Unknown etale kind {split}. Choose from split, field')
        split = split == 'split'
    if not (base.is_commutative() and base.is_associative() and base.is_unital):
        raise ValueError(f'The base ring {base.name} must be commutative, associative and unital')
    kind = 'split' if split else 'field'
    name = name or f'etale_quadratic({base.name}, {kind})'
    if split:
        ring = product_ring([base, base])
        n = base.size
        swap = [b * n + a for a, b in ring.coordinates]
        embed = [a * n + a for a in range(n)]
        return EtaleAlgebra(base, embed, True, add=ring.add_table, mul=ring.mul_table, one=ring.one,
                            star=swap, lam=ring.one, labels=ring.labels, name=name)
    q = base.size
    field, add, mul = _field_tables(q * q)
    conjugate = (field.elements ** q).view(np.ndarray).astype(np.int64)
    large = FiniteRing(add, mul, one=1, star=conjugate, lam=1, name=name)
    embed = _field_embedding(base, large)
    return EtaleAlgebra(base, embed, False, add=add, mul=mul, one=1, star=conjugate, lam=1, name=name)


# Recipe strings
_TOKEN = re.compile(r'\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<number>\d+)|(?P<punct>[(),]))')


def _tokenize(text):
    tokens, position = [], 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            raise ValueError(f'Cannot parse recipe {text!r} at position {position}')
        for kind in ('name', 'number', 'punct'):
            if match.group(kind) is not None:
                tokens.append((kind, match.group(kind)))
        position = match.end()
    return tokens


def parse_recipe(text):
    """
    Parse a recipe string into a nested tuple (name, arguments...).
    """
    tokens = _tokenize(text)

    def parse(k):
        kind, value = tokens[k]
        if kind == 'number':
            return int(value), k + 1
        if kind != 'name':
            raise ValueError(f'Unexpected {value!r} in recipe {text!r}')
        if k + 1 >= len(tokens) or tokens[k + 1][1] != '(':
            return value, k + 1
        args, k = [], k + 2
        while tokens[k][1] != ')':
            arg, k = parse(k)
            args.append(arg)
            if tokens[k][1] == ',':
                k += 1
            elif tokens[k][1] != ')':
                raise ValueError(f'Expected , or ) in recipe {text!r}')
        return (value, *args), k + 1

    try:
        tree, end = parse(0)
    except IndexError:
        raise ValueError(f'Unbalanced recipe {text!r}')
    if end != len(tokens):
        raise ValueError(f'Trailing input in recipe {text!r}')
    return tree


def _build(tree):
    if not isinstance(tree, tuple):
        raise ValueError(f'{tree!r} is not a ring recipe')
    name, args = tree[0], tree[1:]
    if name.startswith('octonion') or name in ('split_octonions', 'cayley'):
        raise ValueError('Octonion algebras have no builder; load an explicit table with parse_ring instead')
    if name == 'gf' and len(args) == 1 and isinstance(args[0], int):
        return gf(args[0])
    if name == 'zmod' and len(args) == 1 and isinstance(args[0], int):
        return zmod(args[0])
    if name == 'dual_numbers' and len(args) == 1:
        return dual_numbers(_build(args[0]))
    if name == 'product' and args:
        return product_ring([_build(arg) for arg in args], name=recipe_name(tree))
    if name == 'etale_quadratic' and len(args) == 2 and args[1] in ('split', 'field'):
        return etale_quadratic(_build(args[0]), args[1])
    raise ValueError(f'Unsupported recipe {recipe_name(tree)}. Choose from {RECIPES}')


def recipe_name(tree):
    if not isinstance(tree, tuple):
        return str(tree)
    return f'{tree[0]}({", ".join(recipe_name(arg) for arg in tree[1:])})'


def recipe_size(tree):
    """
    Get the carrier size of a recipe without building it.
    """
    name, args = tree[0], tree[1:]
    if name in ('gf', 'zmod'):
        return args[0]
    if name == 'dual_numbers':
        return recipe_size(args[0]) ** 2
    if name == 'product':
        size = 1
        for arg in args:
            size *= recipe_size(arg)
        return size
    if name == 'etale_quadratic':
        return recipe_size(args[0]) ** 2
    return 0


def make_ring(recipe, settings=None):
    """
    Build a finite ring from a recipe string.

    Parameters
    ----------
    recipe : string (required)
        For example gf(4), zmod(6), dual_numbers(gf(2)), product(gf(2), gf(3)), etale_quadratic(gf(2), field).

    settings : Settings (default=None)
        Source of ring_size_cap.
    """
    if not isinstance(recipe, str):
        raise TypeError(f'{recipe} is not a recipe string')
    settings = settings or Settings()
    tree = parse_recipe(recipe)
    if not isinstance(tree, tuple):
        raise ValueError(f'{recipe!r} is not a ring recipe. Choose from {RECIPES}')
    size = recipe_size(tree)
    if size > settings.ring_size_cap:
        raise ValueError(f'Recipe {recipe} has {size} elements, above the cap of {settings.ring_size_cap}')
    ring = _build(tree)
    ring.name = recipe_name(tree)
    ring.recipe = ring.name
    return ring
