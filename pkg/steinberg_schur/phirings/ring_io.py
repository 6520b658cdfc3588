"""
Module to read and write finite Phi-rings in a line-based text format.

The header line is `<kind> <n>` with kind ring, b_ring or f4_ring. Sections `R`, `Delta` and `S` each start
with a line `[<section>] <size>`. Inside a section a line `<name>` starts a table whose rows follow, a line
`<name> <value>` sets a constant and `labels a b ...` names the elements. Maps are stored in the section of
their domain. Lines starting with # are ignored.
"""
import numpy as np

from steinberg_schur.common.settings import Settings
from steinberg_schur.phirings.b_ring import EXTRA_OPERATIONS, BRing
from steinberg_schur.phirings.f4_ring import F4Ring
from steinberg_schur.phirings.finite_ring import FiniteRing


KINDS = ['ring', 'b_ring', 'f4_ring']
CONSTANTS = ['one', 'lam', 'iota']


def _parse_sections(text):
    lines = [(k + 1, line.split('#', 1)[0].strip()) for k, line in enumerate(text.splitlines())]
    lines = [(k, line) for k, line in lines if line]
    if not lines:
        raise ValueError('line 1: missing header `<kind> <n>`')
    k, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in KINDS or not parts[1].isdigit():
        raise ValueError(f'line {k}: expected `<kind> <n>` with kind in {KINDS}, got {header!r}')
    kind, size = parts[0], int(parts[1])

    sections = {'R': {'size': size}}
    current, block = sections['R'], None
    for k, line in lines[1:]:
        words = line.split()
        if words[0].startswith('['):
            name = words[0].strip('[]')
            if name not in ('R', 'Delta', 'S') or len(words) != 2 or not words[1].isdigit():
                raise ValueError(f'line {k}: expected `[R|Delta|S] <size>`, got {line!r}')
            current = sections.setdefault(name, {})
            current['size'] = int(words[1])
            block = None
        elif words[0] == 'labels':
            current['labels'] = words[1:]
            block = None
        elif all(_is_int(w) for w in words):
            if block is None:
                raise ValueError(f'line {k}: table row outside of a named table')
            current[block].append([int(w) for w in words])
        elif len(words) == 2 and words[0] in CONSTANTS and _is_int(words[1]):
            current[words[0]] = int(words[1])
            block = None
        elif len(words) == 1:
            block = words[0]
            if block in current:
                raise ValueError(f'line {k}: table {block} is defined twice')
            current[block] = []
        else:
            raise ValueError(f'line {k}: cannot parse {line!r}')
    return kind, sections


def _is_int(word):
    return word.lstrip('-').isdigit()


def _table(section, name, shape, where):
    if name not in section:
        raise ValueError(f'Section {where} misses the table {name}')
    rows = section[name]
    array = np.array(rows[0] if len(shape) == 1 and len(rows) == 1 else rows, dtype=np.int64)
    if array.shape != shape:
        raise ValueError(f'Table {name} in section {where} has shape {array.shape}, expected {shape}')
    return array


def _ring(section, where, cap):
    n = section['size']
    if n > cap:
        raise ValueError(f'Section {where} has {n} elements, above the cap of {cap}')
    star = _table(section, 'star', (n,), where) if 'star' in section else None
    neg = _table(section, 'neg', (n,), where) if 'neg' in section else None
    return FiniteRing(_table(section, 'add', (n, n), where), _table(section, 'mul', (n, n), where), neg=neg,
                      one=section.get('one'), star=star, lam=section.get('lam'), labels=section.get('labels'),
                      name=where)


def parse_ring(text, name='ring', settings=None):
    """
    Read a FiniteRing, BRing or F4Ring from its text form.
    """
    settings = settings or Settings()
    kind, sections = _parse_sections(text)
    ring = _ring(sections['R'], 'R', settings.ring_size_cap)
    ring.name = name if kind == 'ring' else f'{name}.R'
    if kind == 'ring':
        return ring
    n = ring.size
    if kind == 'b_ring':
        if 'Delta' not in sections:
            raise ValueError('A b_ring needs a [Delta] section')
        delta = sections['Delta']
        m = delta['size']
        if m > settings.ring_size_cap:
            raise ValueError(f'Section Delta has {m} elements, above the cap of {settings.ring_size_cap}')
        extras = {}
        for key, (args, result) in EXTRA_OPERATIONS.items():
            where = sections['R'] if args == ('R',) else delta
            if key in where:
                extras[key] = _table(where, key, (n if args == ('R',) else m,), args[0])
        dneg = _table(delta, 'neg', (m,), 'Delta') if 'neg' in delta else None
        return BRing(ring, _table(delta, 'add', (m, m), 'Delta'), _table(sections['R'], 'phi', (n,), 'R'),
                     _table(delta, 'rho', (m,), 'Delta'), _table(delta, 'pair', (m, m), 'Delta'),
                     _table(delta, 'act', (m, n), 'Delta'), dneg=dneg, iota=delta.get('iota'),
                     extras=extras, delta_labels=delta.get('labels'), name=name)
    if 'S' not in sections:
        raise ValueError('An f4_ring needs an [S] section')
    s = _ring(sections['S'], 'S', settings.ring_size_cap)
    s.name = f'{name}.S'
    m = s.size
    return F4Ring(ring, s, _table(sections['R'], 'phi', (n,), 'R'), _table(sections['S'], 'phi', (m,), 'S'),
                  _table(sections['R'], 'rho', (n,), 'R'), _table(sections['S'], 'rho', (m,), 'S'), name=name)


def _rows(name, array):
    array = np.asarray(array)
    if array.ndim == 1:
        return [name, ' '.join(str(x) for x in array)]
    return [name] + [' '.join(str(x) for x in row) for row in array]


def _ring_lines(ring, constants=True):
    lines = ['labels ' + ' '.join(label.replace(' ', '') for label in ring.labels)]
    lines += _rows('add', ring.add_table) + _rows('mul', ring.mul_table)
    if ring.star_table is not None:
        lines += _rows('star', ring.star_table)
    if constants and ring.one is not None:
        lines.append(f'one {ring.one}')
    if constants and ring.lam is not None:
        lines.append(f'lam {ring.lam}')
    return lines


def serialize_ring(algebra):
    """
    Write an algebra in the text form read by parse_ring.
    """
    kind = getattr(algebra, 'kind', 'ring')
    if kind == 'ring':
        return '\n'.join([f'ring {algebra.size}'] + _ring_lines(algebra)) + '\n'
    if kind == 'b_ring':
        ring = algebra.ring
        lines = [f'b_ring {ring.size}'] + _ring_lines(ring) + _rows('phi', algebra.phi_table)
        if not algebra.is_unital:
            for key, (args, _) in EXTRA_OPERATIONS.items():
                if args == ('R',):
                    lines += _rows(key, algebra.extras[key])
        lines += [f'[Delta] {algebra.delta_size}', 'labels ' + ' '.join(algebra.delta_labels)]
        lines += _rows('add', algebra.dadd_table) + _rows('rho', algebra.rho_table)
        lines += _rows('pair', algebra.pair_table) + _rows('act', algebra.act_table)
        if algebra.iota is not None:
            lines.append(f'iota {algebra.iota}')
        if not algebra.is_unital:
            for key, (args, _) in EXTRA_OPERATIONS.items():
                if args == ('D',):
                    lines += _rows(key, algebra.extras[key])
        return '\n'.join(lines) + '\n'
    lines = [f'f4_ring {algebra.r.size}'] + _ring_lines(algebra.r, constants=False)
    lines += [f'one {algebra.r.one}'] + _rows('phi', algebra.phi_r) + _rows('rho', algebra.rho_r)
    lines += [f'[S] {algebra.s.size}'] + _ring_lines(algebra.s, constants=False)
    lines += [f'one {algebra.s.one}'] + _rows('phi', algebra.phi_s) + _rows('rho', algebra.rho_s)
    return '\n'.join(lines) + '\n'
