"""
Module to read and write presentations as text.

Format: a line `gens N`, optional `name i <string>` lines, then one `rel i1 i2 ...` line per relator
with signed 1-based generator indices. Blank lines and lines starting with # are ignored.
"""
import warnings

from steinberg_schur.presentations.presentation import Presentation


def serialize_presentation(presentation, names=None):
    """
    Write a presentation as text.

    Parameters
    ----------
    presentation : Presentation (required)

    names : bool (default=None)
        Whether to write the generator names. If None, names are written unless all are the defaults g1, g2, ...
    """
    lines = [f'gens {presentation.generators}']
    if names is None:
        names = any(name != f'g{k + 1}' for k, name in enumerate(presentation.names))
    if names:
        for k, name in enumerate(presentation.names):
            lines.append(f'name {k + 1} {name}')
    for word in presentation.relators:
        lines.append('rel ' + ' '.join(str(letter) for letter in word))
    return '\n'.join(lines) + '\n'


def parse_presentation(text, name='presentation'):
    """
    Read a presentation from text.

    Raises ValueError with the offending line number for malformed input. Relators are not reduced
    on reading beyond free reduction; repeated relators are dropped with a warning.
    """
    generators, names, relators = None, {}, []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        keyword, _, rest = line.partition(' ')
        if keyword == 'gens':
            if generators is not None:
                raise ValueError(f'line {number}: gens is given twice')
            try:
                generators = int(rest)
            except ValueError:
                raise ValueError(f'line {number}: gens needs an integer, got {rest!r}')
            if generators < 0:
                raise ValueError(f'line {number}: gens must not be negative')
            continue
        if generators is None:
            raise ValueError(f'line {number}: expected gens N before {keyword}')
        if keyword == 'name':
            index, _, value = rest.strip().partition(' ')
            if not index.isdigit() or not 1 <= int(index) <= generators or not value.strip():
                raise ValueError(f'line {number}: expected name i <string> with 1 <= i <= {generators}')
            names[int(index)] = value.strip()
        elif keyword == 'rel':
            try:
                word = tuple(int(token) for token in rest.split())
            except ValueError:
                raise ValueError(f'line {number}: relator letters must be integers')
            for letter in word:
                if letter == 0 or abs(letter) > generators:
                    raise ValueError(f'line {number}: letter {letter} is out of range 1..{generators}')
            relators.append((number, word))
        else:
            raise ValueError(f'line {number}: unknown keyword {keyword!r}')
    if generators is None:
        raise ValueError('line 1: expected gens N')

    presentation = Presentation(name=name)
    for k in range(1, generators + 1):
        presentation.add_generator(names.get(k, f'g{k}'))
    for number, word in relators:
        if word and not presentation.add_relator(word):
            warnings.warn(f'line {number}: relator is empty after reduction or repeated, dropped')
    return presentation


def read_presentation(filepath):
    with open(filepath, encoding='utf-8') as file:
        return parse_presentation(file.read(), name=filepath)


def write_presentation(presentation, filepath, names=None):
    with open(filepath, 'w', encoding='utf-8') as file:
        file.write(serialize_presentation(presentation, names=names))
