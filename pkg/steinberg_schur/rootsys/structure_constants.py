"""
Module to compute Chevalley structure constants of simply laced root systems by the extraspecial pair method.
"""
import itertools


class StructureConstants:
    """
    Sign table N: (alpha, beta) -> {-1, 0, 1} of a simply laced root system.

    Positive roots are ordered by height and then by descending lexicographic order. For every positive
    root xi that is not simple, the extraspecial pair (alpha, beta) with the least alpha gets N = +1 and
    all other values follow from the Jacobi identities.

    Parameters
    ----------
    rs : RootSystem (required)
        Root system of family A, D or E.

    validate : bool (default=True)
        Check the cyclic and four-root identities after construction.
    """
    def __init__(self, rs, validate=True):
        if not rs.is_simply_laced:
            raise ValueError(f'Structure constants are only built for simply laced systems, got {rs.family}{rs.rank}')
        self.rs = rs
        self._roots = set(rs.roots)
        self._positive = set(rs.positive_roots)
        self.order = sorted(rs.positive_roots, key=lambda r: (rs.height(r), tuple(-x for x in r)))
        self._rank = {root: k for k, root in enumerate(self.order)}
        self._positive_table = {}
        self.extraspecial = {}

        # Build the positive table by increasing height
        for xi in self.order:
            special = []
            for alpha in self.order:
                beta = tuple(x - y for x, y in zip(xi, alpha))
                if beta in self._positive and self._rank[alpha] < self._rank[beta]:
                    special.append((alpha, beta))
            if not special:
                continue
            gamma, delta = special[0]
            self.extraspecial[xi] = (gamma, delta)
            self._set(gamma, delta, 1)
            for alpha, beta in special[1:]:
                value = (self(beta, self._neg(gamma)) * self(alpha, self._neg(delta))
                         + self(self._neg(gamma), alpha) * self(beta, self._neg(delta)))
                if value not in (1, -1):
                    raise RuntimeError(f'Structure constant for ({alpha}, {beta}) evaluated to {value}')
                self._set(alpha, beta, value)

        if validate:
            self.validate()

    @staticmethod
    def _neg(root):
        return tuple(-x for x in root)

    def _set(self, alpha, beta, value):
        self._positive_table[(alpha, beta)] = value
        self._positive_table[(beta, alpha)] = -value

    def __call__(self, alpha, beta):
        """
        Get N_{alpha beta}, zero when alpha + beta is not a root.
        """
        alpha, beta = tuple(alpha), tuple(beta)
        total = tuple(x + y for x, y in zip(alpha, beta))
        if total not in self._roots:
            return 0
        a_pos, b_pos = alpha in self._positive, beta in self._positive
        if a_pos and b_pos:
            return self._positive_table[(alpha, beta)]
        if not a_pos and not b_pos:
            return -self._positive_table[(self._neg(alpha), self._neg(beta))]
        if not a_pos:
            return -self(beta, alpha)
        # alpha positive, beta negative: cyclic identity with the third root -total
        if total in self._positive:
            return -self._positive_table[(self._neg(beta), total)]
        return self._positive_table[(self._neg(total), alpha)]

    def table(self):
        """
        Get the full table as a dict over all pairs of roots whose sum is a root.
        """
        return {
            (alpha, beta): self(alpha, beta)
            for alpha, beta in itertools.product(self.rs.roots, repeat=2)
            if tuple(x + y for x, y in zip(alpha, beta)) in self._roots
        }

    def validate(self):
        """
        Check antisymmetry, the sign rule for opposite pairs, the cyclic identity and (for at most 72 roots)
        the four-root identity. Raises RuntimeError with a witness on failure.
        """
        roots = self.rs.roots
        for alpha, beta in itertools.product(roots, repeat=2):
            value = self(alpha, beta)
            if value != -self(beta, alpha):
                raise RuntimeError(f'Antisymmetry fails for ({alpha}, {beta})')
            if value and value * self(self._neg(alpha), self._neg(beta)) != -1:
                raise RuntimeError(f'N(a, b) N(-a, -b) != -1 for ({alpha}, {beta})')
            gamma = tuple(-x - y for x, y in zip(alpha, beta))
            if value and not (value == self(beta, gamma) == self(gamma, alpha)):
                raise RuntimeError(f'Cyclic identity fails for ({alpha}, {beta}, {gamma})')
        if len(roots) > 72:
            return
        for alpha, beta, gamma in itertools.product(roots, repeat=3):
            delta = tuple(-a - b - c for a, b, c in zip(alpha, beta, gamma))
            if delta not in self._roots:
                continue
            quadruple = (alpha, beta, gamma, delta)
            if any(tuple(-x for x in u) == v for u, v in itertools.combinations(quadruple, 2)):
                continue
            total = (self(alpha, beta) * self(gamma, delta) + self(beta, gamma) * self(alpha, delta)
                     + self(gamma, alpha) * self(beta, delta))
            if total != 0:
                raise RuntimeError(f'Four-root identity fails for {quadruple}')


def structure_constants(rs):
    """
    Build the structure-constant table of a simply laced root system.
    """
    return StructureConstants(rs)
