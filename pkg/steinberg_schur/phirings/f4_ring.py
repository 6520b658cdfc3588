"""
Module to define F4-rings (R, S) over finite carriers.
"""
import numpy as np

from steinberg_schur.phirings.b_ring import BRing
from steinberg_schur.phirings.finite_ring import FiniteRing, Operation, Signature


def _prefixed(ring, prefix):
    """
    Get the operations of a unital involution ring with names prefixed for the second sort.
    """
    sort = 'S' if prefix else 'R'
    star = ring.star_table if ring.star_table is not None else np.arange(ring.size)
    return [
        Operation(prefix + 'add', (sort, sort), sort, ring.add_table),
        Operation(prefix + 'neg', (sort,), sort, ring.neg_table),
        Operation(prefix + 'mul', (sort, sort), sort, ring.mul_table),
        Operation(prefix + 'star', (sort,), sort, star),
        Operation(prefix + 'one', (), sort, ring.one),
    ]


class F4Ring:
    """
    An F4-ring (R, S): two unital alternative involution rings with maps phi and rho in both directions.

    Parameters
    ----------
    r : FiniteRing (required)
        The ring on long roots.

    s : FiniteRing (required)
        The ring on short roots.

    phi_r, rho_r : array-like of length |R| (required)
        The maps R -> C(S).

    phi_s, rho_s : array-like of length |S| (required)
        The maps S -> C(R).

    name : string (default='f4_ring')
    """
    kind = 'f4_ring'

    def __init__(self, r, s, phi_r, phi_s, rho_r, rho_s, name='f4_ring'):
        for ring in (r, s):
            if not isinstance(ring, FiniteRing):
                raise TypeError(f'{ring} is not a FiniteRing')
            if ring.one is None:
                raise ValueError(f'F4-rings need unital rings, {ring.name} has no unit')
        self.r = r
        self.s = s
        self.phi_r = np.asarray(phi_r, dtype=np.int64)
        self.rho_r = np.asarray(rho_r, dtype=np.int64)
        self.phi_s = np.asarray(phi_s, dtype=np.int64)
        self.rho_s = np.asarray(rho_s, dtype=np.int64)
        for key, table, size in (('phi_r', self.phi_r, r.size), ('rho_r', self.rho_r, r.size),
                                 ('phi_s', self.phi_s, s.size), ('rho_s', self.rho_s, s.size)):
            if table.shape != (size,):
                raise ValueError(f'Table {key} has shape {table.shape}, expected ({size},)')
        self.name = name

    def __repr__(self):
        return f'F4Ring({self.name!r}, |R|={self.r.size}, |S|={self.s.size})'

    @property
    def lam_r(self):
        # lambda_R = rho(-1_S)
        return int(self.rho_s[self.s.neg(self.s.one)])

    @property
    def lam_s(self):
        return int(self.rho_r[self.r.neg(self.r.one)])

    def sort_labels(self):
        return {'R': self.r.labels, 'S': self.s.labels}

    def signature(self):
        ops = _prefixed(self.r, '') + _prefixed(self.s, 's') + [
            Operation('phi_r', ('R',), 'S', self.phi_r),
            Operation('rho_r', ('R',), 'S', self.rho_r),
            Operation('phi_s', ('S',), 'R', self.phi_s),
            Operation('rho_s', ('S',), 'R', self.rho_s),
            Operation('lam_r', (), 'R', self.lam_r),
            Operation('lam_s', (), 'S', self.lam_s),
        ]
        return Signature({'R': self.r.size, 'S': self.s.size}, ops)

    @classmethod
    def from_signature(cls, signature, labels=None, name='f4_ring'):
        sig = signature
        labels = labels or {}
        rings = []
        for prefix, sort in (('', 'R'), ('s', 'S')):
            rings.append(FiniteRing(
                sig.operation(prefix + 'add').table, sig.operation(prefix + 'mul').table,
                neg=sig.operation(prefix + 'neg').table, one=int(sig.operation(prefix + 'one').table),
                star=sig.operation(prefix + 'star').table, labels=labels.get(sort), name=f'{name}.{sort}'
            ))
        return cls(rings[0], rings[1], sig.operation('phi_r').table, sig.operation('phi_s').table,
                   sig.operation('rho_r').table, sig.operation('rho_s').table, name=name)

    def as_b_ring(self):
        """
        View the F4-ring as a B3-ring: Delta = S, iota = 1_S, u.p = rho(p) u and <u, v> = -phi(u v^*).
        """
        r, s = self.r, self.s
        ring = FiniteRing(r.add_table, r.mul_table, neg=r.neg_table, one=r.one,
                          star=r.star_table if r.star_table is not None else np.arange(r.size),
                          lam=self.lam_r, labels=r.labels, name=f'{self.name}.R')
        s_star = s.star_table if s.star_table is not None else np.arange(s.size)
        pair = r.neg_table[self.phi_s[s.mul_table[:, s_star]]]
        act = s.mul_table[self.rho_r[None, :], np.arange(s.size)[:, None]]
        return BRing(ring, s.add_table, self.phi_r, self.rho_s, pair, act, dneg=s.neg_table, iota=s.one,
                     delta_labels=s.labels, name=f'{self.name}.B3')
