"""
Module to enumerate cosets of finitely presented groups by the Todd-Coxeter method.

Two strategies are available: HLT (relator based, with lookahead when the table gets full) and
Felsch (coset-table based, processing deductions over the cyclic conjugates of the relators).
Coincidences are processed with union-find and a queue of dead cosets.
"""
from collections import deque
import numpy as np

from steinberg_schur.common.settings import Settings
from steinberg_schur.presentations.words import reduce


STRATEGIES = ['hlt', 'felsch']

UNDEFINED = -1


def letter_column(letter):
    """
    Get the column of a letter: generator g uses column 2(g - 1), its inverse column 2(g - 1) + 1.
    """
    return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)


class CosetTableFull(Exception):
    """
    Raised inside an enumeration when no coset can be defined under the cap.
    """


class CosetTable:
    """
    Result of a coset enumeration.

    Parameters
    ----------
    table : numpy array of int32 (required)
        Rows are cosets (coset 0 is the subgroup), columns are generators and inverses.
        Undefined entries are -1.

    status : string (required)
        complete or capped.

    stats : dict (default=None)
        Enumeration statistics: defined (total cosets defined), maximum (largest live count),
        compactions, coincidences and strategy.
    """
    def __init__(self, table, status, stats=None):
        self.table = table
        self.status = status
        self.stats = stats or {}

    def __repr__(self):
        return f'CosetTable(status={self.status!r}, cosets={self.coset_count})'

    @property
    def coset_count(self):
        return int(self.table.shape[0])

    @property
    def generators(self):
        return self.table.shape[1] // 2

    @property
    def is_complete(self):
        return self.status == 'complete'

    @property
    def index(self):
        """
        Get the index of the subgroup, or None if the enumeration did not complete.
        """
        return self.coset_count if self.is_complete else None

    def permutations(self):
        """
        Get the action of every generator on the cosets as an array of shape (generators, cosets).
        """
        if not self.is_complete:
            raise ValueError('Permutations need a complete coset table')
        return self.table[:, 0::2].T.astype(np.int64)

    def act(self, coset, word):
        for letter in word:
            coset = int(self.table[coset, letter_column(letter)])
            if coset < 0:
                return None
        return coset

    def rescan(self, presentation, subgroup=()):
        """
        Re-verify every relator from every coset and every subgroup generator from coset 0.

        Returns
        -------
        failure : tuple or None
            (coset, relator index) of the first relator that does not close, None if all close.
        """
        if not self.is_complete:
            raise ValueError('Only complete coset tables can be rescanned')
        cosets = np.arange(self.coset_count)
        for k, word in enumerate(presentation.relators):
            image = cosets
            for letter in word:
                image = self.table[image, letter_column(letter)]
            wrong = np.nonzero(image != cosets)[0]
            if len(wrong):
                return int(wrong[0]), k
        for k, word in enumerate(subgroup):
            if self.act(0, word) != 0:
                return 0, -(k + 1)
        return None


class CosetEnumeration:
    """
    State of one coset enumeration.

    Parameters
    ----------
    presentation : Presentation (required)

    subgroup : list of words (default=())

    cap : int (default=None)
        Maximal number of cosets stored at once.

    settings : Settings (default=None)

    verbose : bool (default=False)
    """
    def __init__(self, presentation, subgroup=(), cap=None, settings=None, verbose=False):
        self.settings = settings or Settings()
        self.columns = 2 * presentation.generators
        self.cap = self.settings.coset_cap(max(self.columns, 1), cap)
        self.verbose = verbose
        self.relators = [[letter_column(letter) for letter in word] for word in presentation.relators]
        self.subgroup = [[letter_column(letter) for letter in reduce(word)] for word in subgroup]
        for word in subgroup:
            for letter in word:
                if letter == 0 or abs(letter) > presentation.generators:
                    raise ValueError(f'Subgroup generator letter {letter} is out of range')

        capacity = max(1, min(self.cap, 1024))
        self.table = np.full((capacity, max(self.columns, 1)), UNDEFINED, dtype=np.int32)
        self.parent = np.arange(capacity, dtype=np.int32)
        self.count = 1
        self.live = 1
        self.stats = {'defined': 1, 'maximum': 1, 'compactions': 0, 'coincidences': 0}
        self.deductions = None
        self.looked_ahead = None

    # Storage
    def _grow(self):
        capacity = self.table.shape[0]
        new_capacity = min(self.cap, 2 * capacity)
        extra = np.full((new_capacity - capacity, self.table.shape[1]), UNDEFINED, dtype=np.int32)
        self.table = np.concatenate([self.table, extra])
        self.parent = np.concatenate([self.parent, np.arange(capacity, new_capacity, dtype=np.int32)])

    def define(self, alpha, column):
        if self.count >= self.cap:
            raise CosetTableFull()
        if self.count >= self.table.shape[0]:
            self._grow()
        beta = self.count
        self.count += 1
        self.live += 1
        self.parent[beta] = beta
        self.table[alpha, column] = beta
        self.table[beta, column ^ 1] = alpha
        self.stats['defined'] += 1
        self.stats['maximum'] = max(self.stats['maximum'], self.live)
        if self.deductions is not None:
            self.deductions.append((alpha, column))

    def is_live(self, coset):
        return self.parent[coset] == coset

    # Coincidences
    def rep(self, coset):
        root = coset
        while self.parent[root] != root:
            root = int(self.parent[root])
        while coset != root:
            following = int(self.parent[coset])
            self.parent[coset] = root
            coset = following
        return root

    def merge(self, k, l, queue):
        phi, psi = self.rep(k), self.rep(l)
        if phi == psi:
            return
        mu, nu = min(phi, psi), max(phi, psi)
        self.parent[nu] = mu
        self.live -= 1
        queue.append(nu)

    def coincidence(self, alpha, beta):
        self.stats['coincidences'] += 1
        table = self.table
        queue = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            for column in range(self.columns):
                delta = int(table[gamma, column])
                if delta < 0:
                    continue
                table[delta, column ^ 1] = UNDEFINED
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu, column] >= 0:
                    self.merge(nu, int(table[mu, column]), queue)
                elif table[nu, column ^ 1] >= 0:
                    self.merge(mu, int(table[nu, column ^ 1]), queue)
                else:
                    table[mu, column] = nu
                    table[nu, column ^ 1] = mu
                    if self.deductions is not None:
                        self.deductions.append((mu, column))

    # Scanning
    def scan(self, alpha, word, fill=False):
        """
        Scan a word from a coset, deducing the last entry or processing a coincidence.

        With fill, missing entries are defined until the scan completes.
        """
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f, word[i]] >= 0:
                f = int(table[f, word[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b, word[j] ^ 1] >= 0:
                b = int(table[b, word[j] ^ 1])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f, word[i]] = b
                table[b, word[i] ^ 1] = f
                if self.deductions is not None:
                    self.deductions.append((f, word[i]))
                return
            if not fill:
                return
            self.define(f, word[i])
            # define may have grown the table
            table = self.table

    def lookahead(self):
        """
        Scan every relator from every live coset without defining new cosets.
        """
        for beta in range(self.count):
            if not self.is_live(beta):
                continue
            for word in self.relators:
                self.scan(beta, word)
                if not self.is_live(beta):
                    break

    def compact(self, position=0):
        """
        Renumber the live cosets consecutively and drop the dead ones.

        Returns
        -------
        position : int
            The new number of the first live coset at or after the given position.
        """
        live = np.nonzero(self.parent[:self.count] == np.arange(self.count))[0]
        renumber = np.full(self.count, UNDEFINED, dtype=np.int32)
        renumber[live] = np.arange(len(live), dtype=np.int32)
        rows = self.table[live]
        rows = np.where(rows >= 0, renumber[np.maximum(rows, 0)], UNDEFINED).astype(np.int32)
        capacity = self.table.shape[0]
        self.table = np.full((capacity, self.table.shape[1]), UNDEFINED, dtype=np.int32)
        self.table[:len(live)] = rows
        self.parent = np.arange(capacity, dtype=np.int32)
        self.count = self.live = len(live)
        self.stats['compactions'] += 1
        return int(np.searchsorted(live, position))

    def _maybe_compact(self, alpha, headroom):
        """
        Compact between cosets when the dead fraction is large or the cap is near.
        """
        settings = self.settings
        if self.cap - self.count < headroom and self.count != self.looked_ahead:
            if self.deductions is None:
                self.lookahead()
            self.looked_ahead = self.count
            if self.live < self.count:
                alpha = self.compact(alpha)
                self.looked_ahead = self.count
            return alpha
        if self.count > settings.compaction_minimum and self.live < settings.compaction_threshold * self.count:
            return self.compact(alpha)
        return alpha

    def _progress(self, alpha):
        if self.verbose and alpha and alpha % 100000 == 0:
            print(f'# coset {alpha}: defined={self.count} live={self.live}')

    # Strategies
    def hlt(self):
        for word in self.subgroup:
            self.scan(0, word, fill=True)
        headroom = sum(len(word) for word in self.relators) + self.columns
        alpha = 0
        while alpha < self.count:
            alpha = self._maybe_compact(alpha, headroom)
            if alpha >= self.count:
                break
            self._progress(alpha)
            if self.is_live(alpha):
                for word in self.relators:
                    self.scan(alpha, word, fill=True)
                    if not self.is_live(alpha):
                        break
                if self.is_live(alpha):
                    for column in range(self.columns):
                        if self.table[alpha, column] < 0:
                            self.define(alpha, column)
            alpha += 1

    def felsch(self):
        self.deductions = []
        conjugates = [[] for _ in range(self.columns)]
        seen = set()
        for word in self.relators:
            for w in (word, [c ^ 1 for c in reversed(word)]):
                for k in range(len(w)):
                    rotated = tuple(w[k:] + w[:k])
                    if rotated not in seen:
                        seen.add(rotated)
                        conjugates[rotated[0]].append(list(rotated))
        for word in self.subgroup:
            self.scan(0, word, fill=True)
        self._process_deductions(conjugates)

        alpha = 0
        while alpha < self.count:
            alpha = self._maybe_compact(alpha, self.columns)
            if alpha >= self.count:
                break
            self._progress(alpha)
            for column in range(self.columns):
                if not self.is_live(alpha):
                    break
                if self.table[alpha, column] < 0:
                    self.define(alpha, column)
                    self._process_deductions(conjugates)
            alpha += 1

    def _process_deductions(self, conjugates):
        while self.deductions:
            alpha, column = self.deductions.pop()
            if self.is_live(alpha):
                for word in conjugates[column]:
                    self.scan(alpha, word)
                    if not self.is_live(alpha):
                        break
            beta = int(self.table[alpha, column])
            if beta >= 0 and self.is_live(beta):
                for word in conjugates[column ^ 1]:
                    self.scan(beta, word)
                    if not self.is_live(beta):
                        break

    def run(self, strategy):
        try:
            if strategy == 'hlt':
                self.hlt()
            else:
                self.felsch()
            status = 'complete'
        except CosetTableFull:
            status = 'capped'
        if status == 'complete':
            self.compact()
            table = self.table[:self.count, :self.columns].copy()
        else:
            table = np.zeros((self.live, self.columns), dtype=np.int32)
        stats = dict(self.stats, strategy=strategy, live=self.live)
        return CosetTable(table, status, stats)


def todd_coxeter(presentation, subgroup=(), max_cosets=None, strategy='hlt', settings=None, verbose=False):
    """
    Enumerate the cosets of a subgroup of a finitely presented group.

    Parameters
    ----------
    presentation : Presentation (required)

    subgroup : list of words (default=())
        Generators of the subgroup. With no generators the cosets are the group elements.

    max_cosets : int (default=None)
        Maximal number of cosets stored at once. If None, the configured max_cosets is used.
        The cap is also clamped to the memory budget.

    strategy : string (default='hlt')
        hlt (HLT with lookahead) or felsch.

    settings : Settings (default=None)

    verbose : bool (default=False)
        If True, print progress every 100000 cosets.

    Returns
    -------
    table : CosetTable
        With status complete (coset_count is the index) or capped.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f'Unknown strategy {strategy}. Choose from {STRATEGIES}')
    if max_cosets is not None and max_cosets < 1:
        raise ValueError(f'max_cosets must be at least 1, got {max_cosets}')
    if presentation.generators == 0:
        if presentation.relators:
            raise ValueError('A presentation without generators cannot have relators')
        return CosetTable(np.zeros((1, 0), dtype=np.int32), 'complete',
                          {'defined': 1, 'maximum': 1, 'compactions': 0, 'coincidences': 0, 'strategy': strategy})
    enumeration = CosetEnumeration(presentation, subgroup, cap=max_cosets, settings=settings, verbose=verbose)
    result = enumeration.run(strategy)
    if verbose:
        print(f'# {presentation.name}: status={result.status} cosets={result.coset_count} '
              f'defined={result.stats["defined"]}')
    return result


def group_order(presentation, max_cosets=None, strategy='hlt', settings=None, verbose=False):
    """
    Get the order of a finitely presented group, or None if the enumeration was capped.
    """
    return todd_coxeter(presentation, max_cosets=max_cosets, strategy=strategy, settings=settings,
                        verbose=verbose).index


def coset_words(table):
    """
    Get a word for every coset along a breadth-first spanning tree from coset 0.

    Returns
    -------
    words : list of tuples
        words[c] maps coset 0 to coset c.
    """
    if not table.is_complete:
        raise ValueError('Coset words need a complete coset table')
    words = [None] * table.coset_count
    words[0] = ()
    queue = deque([0])
    while queue:
        coset = queue.popleft()
        for column in range(table.table.shape[1]):
            target = int(table.table[coset, column])
            if words[target] is None:
                letter = column // 2 + 1
                words[target] = words[coset] + ((letter if column % 2 == 0 else -letter),)
                queue.append(target)
    return words


def relator_closes(table, word):
    """
    Check whether a word acts trivially on every coset of a complete table.
    """
    cosets = np.arange(table.coset_count)
    image = cosets
    for letter in reduce(word):
        image = table.table[image, letter_column(letter)]
    return bool(np.array_equal(image, cosets))
