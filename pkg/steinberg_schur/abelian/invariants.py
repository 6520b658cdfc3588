"""
Module to describe finitely generated abelian groups by invariant factors.
"""
from math import gcd, prod
from sympy import factorint


class AbelianInvariants:
    """
    The group Z/d1 x Z/d2 x ... x Z^rank with d1 | d2 | ... and every di >= 2.

    Parameters
    ----------
    factors : list of int (default=())
        Invariant factors. Factors equal to 1 are dropped; the rest must form a divisibility chain.

    rank : int (default=0)
        Free rank.
    """
    def __init__(self, factors=(), rank=0):
        factors = [abs(int(d)) for d in factors if abs(int(d)) != 1]
        if any(d == 0 for d in factors):
            raise ValueError('Invariant factors must be nonzero, use the free rank for Z summands')
        factors.sort()
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f'Invariant factors {factors} do not form a divisibility chain')
        if rank < 0:
            raise ValueError(f'The free rank must not be negative, got {rank}')
        self.factors = tuple(factors)
        self.rank = int(rank)

    @classmethod
    def from_cyclic_orders(cls, orders, rank=0):
        """
        Get the invariants of a direct sum of cyclic groups of arbitrary orders (order 0 means Z).
        """
        powers = {}
        for order in orders:
            order = abs(int(order))
            if order == 0:
                rank += 1
                continue
            for p, e in factorint(order).items():
                powers.setdefault(p, []).append(p ** e)
        length = max((len(values) for values in powers.values()), default=0)
        factors = [1] * length
        for values in powers.values():
            values.sort(reverse=True)
            for k, value in enumerate(values):
                factors[k] *= value
        return cls(factors, rank)

    @classmethod
    def parse(cls, text):
        """
        Read the d1,d2,...;rank=r format. The torsion part may be empty or 1 for the trivial group.
        """
        torsion, _, rank = text.strip().partition(';')
        try:
            rank = int(rank.split('=', 1)[1]) if rank else 0
            factors = [int(d) for d in torsion.split(',') if d.strip()]
        except (ValueError, IndexError):
            raise ValueError(f'Expected d1,d2,...;rank=r, got {text!r}')
        return cls(factors, rank)

    def __repr__(self):
        return f'AbelianInvariants({list(self.factors)}, rank={self.rank})'

    def __str__(self):
        torsion = ','.join(str(d) for d in self.factors) or '1'
        return f'{torsion};rank={self.rank}'

    def __eq__(self, other):
        if not isinstance(other, AbelianInvariants):
            return NotImplemented
        return self.factors == other.factors and self.rank == other.rank

    def __hash__(self):
        return hash((self.factors, self.rank))

    def __add__(self, other):
        return AbelianInvariants.from_cyclic_orders(self.factors + other.factors, self.rank + other.rank)

    @property
    def is_trivial(self):
        return not self.factors and self.rank == 0

    @property
    def order(self):
        """
        Get the order, or None for infinite groups.
        """
        if self.rank:
            return None
        return prod(self.factors)

    @property
    def exponent(self):
        if self.rank:
            return 0
        return self.factors[-1] if self.factors else 1

    def describe(self):
        """
        Get a name such as C2 x C2 x Z.
        """
        parts = [f'C{d}' for d in self.factors] + ['Z'] * self.rank
        return ' x '.join(parts) if parts else '1'

    def hom_to(self, m):
        """
        Get Hom(A, Z/m).
        """
        return AbelianInvariants.from_cyclic_orders([gcd(d, m) for d in self.factors] + [m] * self.rank)
