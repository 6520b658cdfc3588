"""
Module to define finite presentations with structured generator names and relator provenance.
"""
from collections import Counter, namedtuple

from steinberg_schur.presentations.words import cyclic_normal_form, reduce


# kind is 'long', 'short' or 'central'. label is a root (or an index pair for B_l), or a family name
# for central generators. element is the ring, Delta or family-group element.
GenKey = namedtuple('GenKey', ['kind', 'label', 'element'])

# family names the relation family (additivity, commutator, commuting, ...), roots the generator
# labels involved, params their elements and structure the relation template.
RelatorTag = namedtuple('RelatorTag', ['family', 'roots', 'params', 'structure'])


class Presentation:
    """
    A finite presentation: generators numbered from 1 and relators as freely reduced words.

    Parameters
    ----------
    generators : int (default=0)
        Number of unnamed generators to start with.

    names : list of strings (default=None)
        Generator names. Defaults to g1, g2, ...

    name : string (default='presentation')
    """
    def __init__(self, generators=0, names=None, name='presentation'):
        if names is not None and len(names) != generators:
            raise ValueError(f'Expected {generators} names, got {len(names)}')
        self.name = name
        self.names = list(names) if names is not None else [f'g{k}' for k in range(1, generators + 1)]
        self.keys = [None] * generators
        self.relators = []
        self.tags = []
        self.resolver = None
        self._name_index = {}
        for k, generator_name in enumerate(self.names):
            if generator_name in self._name_index:
                raise ValueError(f'Generator name {generator_name} is used twice')
            self._name_index[generator_name] = k + 1
        self._key_index = {}
        self._relator_set = set()

    def __repr__(self):
        return f'Presentation({self.name!r}, generators={self.generators}, relators={len(self.relators)})'

    @property
    def generators(self):
        return len(self.names)

    def add_generator(self, name=None, key=None):
        """
        Add a generator and get its 1-based index.

        Parameters
        ----------
        name : string (default=None)
            Must be unique. Defaults to g<index>.

        key : GenKey (default=None)
            Structured name used by generator_for.
        """
        index = self.generators + 1
        name = f'g{index}' if name is None else str(name)
        if name in self._name_index:
            raise ValueError(f'Generator name {name} is used twice')
        if key is not None and key in self._key_index:
            raise ValueError(f'Generator key {key} is used twice')
        self.names.append(name)
        self.keys.append(key)
        self._name_index[name] = index
        if key is not None:
            self._key_index[key] = index
        return index

    def add_relator(self, word, tag=None):
        """
        Add a relator after free reduction. Empty and repeated relators are skipped.

        Returns
        -------
        added : bool
        """
        word = reduce(word)
        for letter in word:
            if abs(letter) > self.generators:
                raise ValueError(f'Letter {letter} is out of range for {self.generators} generators')
        if not word or word in self._relator_set:
            return False
        self.relators.append(word)
        self.tags.append(tag)
        self._relator_set.add(word)
        return True

    def index_of(self, name):
        try:
            return self._name_index[name]
        except KeyError:
            raise ValueError(f'{name} is not a generator of {self.name}')

    def generator_for(self, key):
        """
        Get the word of a structured generator. Element 0 gives the empty word.

        Keys that are not generators themselves are passed through the resolver, which Steinberg
        presentations of type B use to rewrite the second name of a long root.
        """
        if key.element == 0:
            return ()
        if key in self._key_index:
            return (self._key_index[key],)
        if self.resolver is not None:
            resolved = self.resolver(key)
            if resolved.element == 0:
                return ()
            if resolved in self._key_index:
                return (self._key_index[resolved],)
        raise ValueError(f'{key} is not a generator of {self.name}')

    def key_of(self, index):
        return self.keys[index - 1]

    def generators_of_kind(self, kind):
        return [k + 1 for k, key in enumerate(self.keys) if key is not None and key.kind == kind]

    def copy(self, name=None):
        result = Presentation(name=name or self.name)
        for generator_name, key in zip(self.names, self.keys):
            result.add_generator(generator_name, key)
        for word, tag in zip(self.relators, self.tags):
            result.add_relator(word, tag)
        result.resolver = self.resolver
        return result

    def rename(self, names):
        """
        Get a copy with new generator names.
        """
        if len(names) != self.generators:
            raise ValueError(f'Expected {self.generators} names, got {len(names)}')
        result = Presentation(name=self.name)
        for generator_name, key in zip(names, self.keys):
            result.add_generator(generator_name, key)
        for word, tag in zip(self.relators, self.tags):
            result.add_relator(word, tag)
        return result

    def map_generators(self, mapping, names, keys=None, name=None):
        """
        Rewrite the relators through a generator mapping into a presentation on new generators.

        Parameters
        ----------
        mapping : dict (required)
            Old 1-based index -> new 1-based index. Every letter of every relator must be mapped.

        names : list of strings (required)
            Names of the new generators.

        keys : list of GenKey (default=None)
        """
        result = Presentation(name=name or self.name)
        keys = keys or [None] * len(names)
        for generator_name, key in zip(names, keys):
            result.add_generator(generator_name, key)
        for word, tag in zip(self.relators, self.tags):
            try:
                mapped = tuple(mapping[abs(letter)] * (1 if letter > 0 else -1) for letter in word)
            except KeyError as error:
                raise ValueError(f'Generator {error.args[0]} is not mapped')
            result.add_relator(mapped, tag)
        return result

    def restricted(self, generators, name=None):
        """
        Get the sub-presentation on a subset of generators with exactly the relators over that subset.

        Parameters
        ----------
        generators : iterable of 1-based indices (required)
            Kept in the given order and renumbered from 1.
        """
        generators = list(generators)
        mapping = {g: k + 1 for k, g in enumerate(generators)}
        result = Presentation(name=name or f'{self.name}|restricted')
        for g in generators:
            result.add_generator(self.names[g - 1], self.keys[g - 1])
        for word, tag in zip(self.relators, self.tags):
            if all(abs(letter) in mapping for letter in word):
                result.add_relator(tuple(mapping[abs(letter)] * (1 if letter > 0 else -1) for letter in word), tag)
        return result

    def kill_generators(self, generators, name=None):
        """
        Set some generators to the identity and renumber the rest.

        Relators are freely reduced and empty ones dropped. Repeated relators are kept, so that the
        result can be compared with relator_multiset.
        """
        killed = set(generators)
        kept = [g for g in range(1, self.generators + 1) if g not in killed]
        mapping = {g: k + 1 for k, g in enumerate(kept)}
        result = Presentation(name=name or f'{self.name}|killed')
        for g in kept:
            result.add_generator(self.names[g - 1], self.keys[g - 1])
        for word, tag in zip(self.relators, self.tags):
            mapped = reduce(tuple(mapping[abs(letter)] * (1 if letter > 0 else -1)
                                  for letter in word if abs(letter) not in killed))
            if mapped:
                result.relators.append(mapped)
                result.tags.append(tag)
                result._relator_set.add(mapped)
        return result


    def simplified(self, name=None):
        """
        Eliminate generators through relators of length one and two, then drop repeated relators.

        A relator g^±1 kills g and a relator a^e b^f with a != b replaces one of them by a power of
        the other. Passes repeat until no relator eliminates a generator. The surviving relators are
        cyclically reduced and compared up to rotation and inversion.

        Returns
        -------
        presentation : Presentation
            On the surviving generators in their original order, keeping names and keys.

        images : list of tuples
            For every original generator, its word in the new generators.
        """
        n = self.generators
        parent = list(range(n + 1))
        sign = [1] * (n + 1)
        trivial = [False] * (n + 1)

        def find(g):
            # g = root^s
            s = 1
            path = []
            while parent[g] != g:
                path.append(g)
                s *= sign[g]
                g = parent[g]
            # Path compression
            t = s
            for h in path:
                step = sign[h]
                parent[h], sign[h] = g, t
                t *= step
            return g, s

        def rewrite(word):
            letters = []
            for letter in word:
                root, s = find(abs(letter))
                if not trivial[root]:
                    letters.append(root * s * (1 if letter > 0 else -1))
            return cyclic_normal_form(letters)

        changed = True
        while changed:
            changed = False
            for word in self.relators:
                word = rewrite(word)
                if len(word) == 1:
                    trivial[abs(word[0])] = True
                    changed = True
                elif len(word) == 2 and abs(word[0]) != abs(word[1]):
                    # a^e b^f = 1 gives a = b^(-ef) on roots
                    a, b = sorted((abs(word[0]), abs(word[1])))
                    parent[b] = a
                    sign[b] = -(1 if word[0] > 0 else -1) * (1 if word[1] > 0 else -1)
                    trivial[a] = trivial[a] or trivial[b]
                    changed = True

        kept = [g for g in range(1, n + 1) if parent[g] == g and not trivial[g]]
        position = {g: k + 1 for k, g in enumerate(kept)}
        result = Presentation(name=name or f'{self.name}|simplified')
        for g in kept:
            result.add_generator(self.names[g - 1], self.keys[g - 1])
        seen = set()
        for word, tag in zip(self.relators, self.tags):
            word = rewrite(word)
            if word and word not in seen:
                seen.add(word)
                result.add_relator(tuple(position[abs(letter)] * (1 if letter > 0 else -1) for letter in word), tag)
        images = []
        for g in range(1, n + 1):
            root, s = find(g)
            images.append(() if trivial[root] else (position[root] * s,))
        return result, images
    def relator_multiset(self):
        return Counter(self.relators)

    def total_length(self):
        return sum(len(word) for word in self.relators)
