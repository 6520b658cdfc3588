"""
Module to define B_l-rings (R, Delta) over finite carriers.
"""
import numpy as np

from steinberg_schur.phirings.finite_ring import FiniteRing, Operation, Signature


# Extra operations of non-unital B-rings: name -> (argument sorts, result sort)
EXTRA_OPERATIONS = {
    'lam_left': (('R',), 'R'),
    'lam_inv_left': (('R',), 'R'),
    'lam_right': (('R',), 'R'),
    'lam_inv_right': (('R',), 'R'),
    'act_lam': (('D',), 'D'),
    'act_lam_inv': (('D',), 'D'),
    'iota_dot': (('R',), 'D'),
    'iota_pair': (('D',), 'R'),
}


class BRing:
    """
    A B_l-ring (R, Delta): an involution ring R with lambda, a group Delta and the maps between them.

    Parameters
    ----------
    ring : FiniteRing (required)
        The ring R. Unital B-rings need its unit and lambda.

    dadd : array-like m x m (required)
        Group operation of Delta; 0 is the neutral element. Delta may be nonabelian.

    phi : array-like of length n (required)
        The map R -> Delta.

    rho : array-like of length m (required)
        The map Delta -> R.

    pair : array-like m x m (required)
        The pairing Delta x Delta -> R.

    act : array-like m x n (required)
        The action Delta x R -> Delta.

    dneg : array-like of length m (default=None)
        Inverses in Delta. Computed from dadd if None.

    iota : int (default=None)
        The distinguished element of Delta (unital B-rings).

    extras : dict (default=None)
        Tables of the extra operations of a non-unital B-ring, keyed as in EXTRA_OPERATIONS.
        Derived from lambda and iota for unital B-rings.

    delta_labels : list of strings (default=None)

    name : string (default='b_ring')
    """
    kind = 'b_ring'

    def __init__(self, ring, dadd, phi, rho, pair, act, dneg=None, iota=None, extras=None, delta_labels=None,
                 name='b_ring'):
        if not isinstance(ring, FiniteRing):
            raise TypeError(f'{ring} is not a FiniteRing')
        self.ring = ring
        n = ring.size
        self.dadd_table = np.asarray(dadd, dtype=np.int64)
        m = self.dadd_table.shape[0]
        self.delta_size = m

        # Process the tables
        expected = {'dadd': (m, m), 'phi': (n,), 'rho': (m,), 'pair': (m, m), 'act': (m, n)}
        tables = {'phi': phi, 'rho': rho, 'pair': pair, 'act': act}
        for key, table in tables.items():
            table = np.asarray(table, dtype=np.int64)
            if table.shape != expected[key]:
                raise ValueError(f'Table {key} has shape {table.shape}, expected {expected[key]}')
            tables[key] = table
        if self.dadd_table.shape != expected['dadd']:
            raise ValueError(f'Table dadd has shape {self.dadd_table.shape}, expected {expected["dadd"]}')
        if m and not np.array_equal(self.dadd_table[0], np.arange(m)):
            raise ValueError('Element 0 of Delta must be the neutral element')
        self.phi_table = tables['phi']
        self.rho_table = tables['rho']
        self.pair_table = tables['pair']
        self.act_table = tables['act']
        if dneg is None:
            dneg = np.argmin(self.dadd_table != 0, axis=1)
        self.dneg_table = np.asarray(dneg, dtype=np.int64)
        self.iota = iota
        self.delta_labels = [str(k) for k in range(m)] if delta_labels is None else [str(x) for x in delta_labels]
        self.name = name

        # Extra operations
        if self.is_unital:
            self.extras = self._derived_extras()
        else:
            extras = extras or {}
            missing = [key for key in EXTRA_OPERATIONS if key not in extras]
            if missing:
                raise ValueError(f'Non-unital B-ring {name} needs the extra operations {missing}')
            self.extras = {key: np.asarray(extras[key], dtype=np.int64) for key in EXTRA_OPERATIONS}

    def __repr__(self):
        return f'BRing({self.name!r}, |R|={self.ring.size}, |Delta|={self.delta_size})'

    @property
    def is_unital(self):
        return self.ring.one is not None and self.ring.lam is not None and self.iota is not None

    @property
    def lam(self):
        return self.ring.lam

    def _derived_extras(self):
        ring = self.ring
        lam, lam_inv = ring.lam, ring.lam_inv
        return {
            'lam_left': ring.mul_table[lam, :],
            'lam_inv_left': ring.mul_table[lam_inv, :],
            'lam_right': ring.mul_table[:, lam],
            'lam_inv_right': ring.mul_table[:, lam_inv],
            'act_lam': self.act_table[:, lam],
            'act_lam_inv': self.act_table[:, lam_inv],
            'iota_dot': self.act_table[self.iota, :],
            'iota_pair': self.pair_table[self.iota, :],
        }

    # Element operations
    def dadd(self, u, v):
        return int(self.dadd_table[u, v])

    def dneg(self, u):
        return int(self.dneg_table[u])

    def dsub(self, u, v):
        return int(self.dadd_table[u, self.dneg_table[v]])

    def dtotal(self, elements):
        result = 0
        for u in elements:
            result = int(self.dadd_table[result, u])
        return result

    def phi(self, p):
        return int(self.phi_table[p])

    def rho(self, u):
        return int(self.rho_table[u])

    def pair(self, u, v):
        return int(self.pair_table[u, v])

    def act(self, u, p):
        return int(self.act_table[u, p])

    def delta_label(self, u):
        return self.delta_labels[u]

    def delta_element(self, label):
        try:
            return self.delta_labels.index(str(label))
        except ValueError:
            raise ValueError(f'{label} is not an element of Delta. Elements are {self.delta_labels}')

    def is_delta_abelian(self):
        return bool(np.array_equal(self.dadd_table, self.dadd_table.T))

    def sort_labels(self):
        return {'R': self.ring.labels, 'D': self.delta_labels}

    def signature(self):
        """
        Get the two-sorted signature (R, D) used by axiom checks and congruence closure.
        """
        sig = self.ring.signature()
        sig.sorts['D'] = self.delta_size
        sig.operations += [
            Operation('dadd', ('D', 'D'), 'D', self.dadd_table),
            Operation('dneg', ('D',), 'D', self.dneg_table),
            Operation('phi', ('R',), 'D', self.phi_table),
            Operation('rho', ('D',), 'R', self.rho_table),
            Operation('pair', ('D', 'D'), 'R', self.pair_table),
            Operation('act', ('D', 'R'), 'D', self.act_table),
        ]
        if self.is_unital:
            sig.operations += [
                Operation('iota', (), 'D', self.iota),
                Operation('lam_inv', (), 'R', self.ring.lam_inv),
            ]
        for key, (args, result) in EXTRA_OPERATIONS.items():
            sig.operations.append(Operation(key, args, result, self.extras[key]))
        return sig

    @classmethod
    def from_signature(cls, signature, labels=None, name='b_ring'):
        sig = signature
        labels = labels or {}
        ring = FiniteRing.from_signature(sig, labels=labels, name=f'{name}.R')
        iota = int(sig.operation('iota').table) if sig.has('iota') else None
        extras = {key: sig.operation(key).table for key in EXTRA_OPERATIONS if sig.has(key)}
        return cls(
            ring, sig.operation('dadd').table, sig.operation('phi').table, sig.operation('rho').table,
            sig.operation('pair').table, sig.operation('act').table, dneg=sig.operation('dneg').table,
            iota=iota, extras=extras, delta_labels=labels.get('D'), name=name
        )

    def replace(self, **tables):
        """
        Get a copy with some Delta tables replaced (used to plant defects in tests and to build variants).
        """
        values = {
            'dadd': self.dadd_table, 'phi': self.phi_table, 'rho': self.rho_table, 'pair': self.pair_table,
            'act': self.act_table, 'dneg': self.dneg_table, 'iota': self.iota,
            'extras': None if self.is_unital else self.extras,
        }
        values.update(tables)
        return BRing(self.ring, values['dadd'], values['phi'], values['rho'], values['pair'], values['act'],
                     dneg=values['dneg'], iota=values['iota'], extras=values['extras'],
                     delta_labels=self.delta_labels, name=self.name)
