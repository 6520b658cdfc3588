"""
Module to build the Phi-rings parametrizing isotropic reductive groups of small Tits index over a commutative
ring K.
"""
import numpy as np

from steinberg_schur.phirings.b_ring import BRing
from steinberg_schur.phirings.f4_ring import F4Ring
from steinberg_schur.phirings.finite_ring import FiniteRing
from steinberg_schur.phirings.recipes import EtaleAlgebra, etale_quadratic


TITS_RINGS = ['A33', '2A53', 'B33', 'C33', '2D43', '1D44', 'F044', '2E264']

# Labels whose ring needs a quadratic etale algebra
ETALE_LABELS = ['2A53', '2D43', '2E264']


def _with(ring, lam=None, star=None, name=None):
    """
    Copy a ring with another lambda or involution.
    """
    return FiniteRing(ring.add_table, ring.mul_table, neg=ring.neg_table, one=ring.one,
                      star=ring.star_table if star is None else star, lam=ring.lam if lam is None else lam,
                      labels=ring.labels, name=name or ring.name)


def _check_base(k):
    if not isinstance(k, FiniteRing):
        raise TypeError(f'{k} is not a FiniteRing')
    if not (k.is_unital and k.is_commutative() and k.is_associative()):
        raise ValueError(f'{k.name} must be a commutative associative unital ring')


def _etale(k, etale):
    if etale is None:
        raise ValueError('This Tits index needs a quadratic etale algebra (split or field)')
    if isinstance(etale, EtaleAlgebra):
        if etale.base.size != k.size:
            raise ValueError(f'The etale algebra {etale.name} is not defined over {k.name}')
        return etale
    return etale_quadratic(k, etale)


def b33_ring(k):
    """
    R = Delta = K with lambda = iota = 1, phi = 0, u.p = up, rho(u) = u^2 and <u, v> = -2uv.
    """
    n = k.size
    ring = _with(k, lam=k.one, name=f'{k.name}')
    square = k.mul_table[np.arange(n), np.arange(n)]
    twice = k.add_table[k.mul_table, k.mul_table]
    return BRing(ring, k.add_table, np.zeros(n, dtype=np.int64), square, k.neg_table[twice], k.mul_table,
                 dneg=k.neg_table, iota=k.one, delta_labels=k.labels, name=f'B33({k.name})')


def c33_ring(k):
    """
    R = Delta = K with lambda = -1, iota = 1, phi(p) = 2p, u.p = up^2, rho(u) = u and <u, v> = 0.
    """
    n = k.size
    ring = _with(k, lam=k.neg(k.one), name=f'{k.name}')
    square = k.mul_table[np.arange(n), np.arange(n)]
    twice = k.add_table[np.arange(n), np.arange(n)]
    act = k.mul_table[:, square]
    return BRing(ring, k.add_table, twice, np.arange(n), np.zeros((n, n), dtype=np.int64), act,
                 dneg=k.neg_table, iota=k.one, delta_labels=k.labels, name=f'C33({k.name})')


def d4_ring(k, etale):
    """
    R = K and Delta = L with iota = 1, phi = 0, u.p = up, rho(u) = uu^* and <u, v> = -(uv^* + vu^*).
    """
    l = _etale(k, etale)
    ring = _with(k, lam=k.one, name=f'{k.name}')
    m = l.size
    norm = np.array([l.norm(u) for u in range(m)], dtype=np.int64)
    conj = l.star_table
    trace = np.array([[l.trace(l.mul(u, conj[v])) for v in range(m)] for u in range(m)], dtype=np.int64)
    act = l.mul_table[:, l.embed]
    kind = 'split' if l.split else 'field'
    label = '1D44' if l.split else '2D43'
    return BRing(ring, l.add_table, np.zeros(k.size, dtype=np.int64), norm, k.neg_table[trace], act,
                 dneg=l.neg_table, iota=l.one, delta_labels=l.labels, name=f'{label}({k.name}, {kind})')


def a5_ring(k, etale):
    """
    R = L with conjugation and lambda = 1, Delta = {p : p^* = -p}, phi(p) = p - p^*, u.p = upp^*,
    rho(u) = u and <u, v> = 0. Needs 1 in Delta, which holds in characteristic 2.
    """
    l = _etale(k, etale)
    ring = _with(l, lam=l.one, star=l.star_table, name=l.name)
    skew = [p for p in l.elements if l.star(p) == l.neg(p)]
    position = {p: a for a, p in enumerate(skew)}
    if l.one not in position:
        raise ValueError(f'2A53 over {k.name}: iota = 1 needs 1^* = -1, i.e. characteristic 2')
    dadd = [[position[l.add(u, v)] for v in skew] for u in skew]
    phi = [position[l.sub(p, l.star(p))] for p in l.elements]
    act = [[position[l.mul(l.mul(u, p), l.star(p))] for p in l.elements] for u in skew]
    m = len(skew)
    return BRing(ring, dadd, phi, skew, np.zeros((m, m), dtype=np.int64), act, iota=position[l.one],
                 delta_labels=[l.labels[p] for p in skew], name=f'2A53({k.name})')


def f4_split_ring(k):
    """
    R = S = K with phi_R = 0, rho_R(p) = p, phi_S(u) = 2u and rho_S(u) = u^2.
    """
    n = k.size
    diagonal = np.arange(n)
    return F4Ring(k, k, np.zeros(n, dtype=np.int64), k.add_table[diagonal, diagonal], diagonal,
                  k.mul_table[diagonal, diagonal], name=f'F044({k.name})')


def e6_ring(k, etale):
    """
    R = K and S = L with phi_R = 0, rho_R(p) = p, phi_S(u) = u + u^* and rho_S(u) = uu^*.
    """
    l = _etale(k, etale)
    trace = np.array([l.trace(u) for u in l.elements], dtype=np.int64)
    norm = np.array([l.norm(u) for u in l.elements], dtype=np.int64)
    return F4Ring(k, l, np.zeros(k.size, dtype=np.int64), trace, l.embed, norm, name=f'2E264({k.name})')


def tits_ring(label, k, etale=None):
    """
    Build the Phi-ring of a Tits index over K.

    Parameters
    ----------
    label : string (required)
        One of A33, 2A53, B33, C33, 2D43, 1D44, F044, 2E264.

    k : FiniteRing (required)
        Commutative associative unital ring.

    etale : EtaleAlgebra or string (default=None)
        Quadratic etale algebra over K ('split' or 'field' builds it) for 2A53, 2D43 and 2E264.
    """
    if label not in TITS_RINGS:
        raise ValueError(f'Unknown Tits index {label}. Choose from {TITS_RINGS}')
    _check_base(k)
    if label == 'A33':
        return _with(k, name=k.name)
    if label == 'B33':
        return b33_ring(k)
    if label == 'C33':
        return c33_ring(k)
    if label == '2D43':
        return d4_ring(k, etale)
    if label == '1D44':
        return d4_ring(k, 'split')
    if label == '2A53':
        return a5_ring(k, etale)
    if label == 'F044':
        return f4_split_ring(k)
    return e6_ring(k, etale)
