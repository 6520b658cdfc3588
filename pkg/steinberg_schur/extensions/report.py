"""
Module to collect pass/fail items of verification harnesses.
"""
from collections import namedtuple


CheckItem = namedtuple('CheckItem', ['name', 'passed', 'detail'])


class CheckReport:
    """
    Ordered list of named checks with a detail string each (the witness for failures).
    """
    def __init__(self, name):
        self.name = name
        self.items = []

    def __repr__(self):
        return f'CheckReport({self.name!r}, passed={self.passed}, items={len(self.items)})'

    def add(self, name, passed, detail=''):
        self.items.append(CheckItem(name, bool(passed), str(detail)))

    def item(self, name):
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(f'{self.name} has no item {name}')

    @property
    def passed(self):
        return all(item.passed for item in self.items)

    @property
    def failures(self):
        return [item for item in self.items if not item.passed]

    def describe(self):
        lines = [f'{self.name}: {"pass" if self.passed else "fail"}']
        lines += [f'  {item.name}: {"pass" if item.passed else "fail"} ({item.detail})' for item in self.items]
        return '\n'.join(lines)
